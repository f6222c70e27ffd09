#include "cci/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "cci/metrics.hpp"
#include "cci/objectives.hpp"

namespace cci {

InferenceInstance cull_to_four(const InferenceInstance& instance, Rng& rng) {
  const std::size_t n = instance.options.size();
  const std::size_t n_correct = instance.correct_indices.size();
  if (n < 4 || n_correct < 2) {
    throw ValidationError(instance.id, "cannot cull: needs >=4 options and >=2 correct (has " +
                                           std::to_string(n) + " options, " +
                                           std::to_string(n_correct) + " correct)");
  }

  // Stage one: two correct answers without replacement; stage two: two more
  // from everything left, correct or incorrect.
  std::unordered_set<std::size_t> kept;
  for (std::size_t pick : rng.sample_indices(n_correct, 2)) {
    kept.insert(instance.correct_indices[pick]);
  }
  std::vector<std::size_t> rest;
  rest.reserve(n - 2);
  for (std::size_t i = 0; i < n; ++i) {
    if (!kept.count(i)) rest.push_back(i);
  }
  for (std::size_t pick : rng.sample_indices(rest.size(), 2)) {
    kept.insert(rest[pick]);
  }

  InferenceInstance culled;
  culled.id = instance.id;
  culled.dialogue_id = instance.dialogue_id;
  culled.target_index = instance.target_index;
  culled.question_type = instance.question_type;
  for (std::size_t i = 0; i < n; ++i) {  // original relative order
    if (!kept.count(i)) continue;
    if (instance.is_correct(i)) culled.correct_indices.push_back(culled.options.size());
    culled.options.push_back(instance.options[i]);
  }
  return culled;
}

std::string_view to_string(QuartileMethod method) {
  return method == QuartileMethod::linear ? "linear" : "nearest";
}

namespace {

double quantile(std::vector<double> values, double q, QuartileMethod method) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  if (method == QuartileMethod::nearest) {
    return values[static_cast<std::size_t>(std::llround(pos))];
  }
  const std::size_t lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return values[lo] * (1.0 - frac) + values[hi] * frac;
}

// Mean ROUGE-1 precision of every option against the rendered context.
double instance_overlap_score(const InferenceInstance& inst, const Corpus& corpus) {
  const std::string context = render_context(corpus.dialogue_of(inst));
  double sum = 0.0;
  for (const std::string& option : inst.options) {
    sum += rouge1_precision(option, context);
  }
  return sum / static_cast<double>(inst.options.size());
}

struct GroupMeans {
  double rc_sum = 0.0, ri_sum = 0.0;
  std::size_t count = 0;

  void add(const InferenceInstance& inst, const Corpus& corpus) {
    const std::string context = render_context(corpus.dialogue_of(inst));
    double rc = 0.0, ri = 0.0;
    std::size_t n_correct = 0, n_incorrect = 0;
    for (std::size_t i = 0; i < inst.options.size(); ++i) {
      const double score = rouge1_precision(inst.options[i], context);
      if (inst.is_correct(i)) {
        rc += score;
        ++n_correct;
      } else {
        ri += score;
        ++n_incorrect;
      }
    }
    if (n_correct > 0) rc_sum += rc / static_cast<double>(n_correct);
    if (n_incorrect > 0) ri_sum += ri / static_cast<double>(n_incorrect);
    ++count;
  }
};

}  // namespace

StratificationReport stratify_by_rouge(const Corpus& train, const Corpus& test,
                                       const StratifyConfig& config) {
  std::vector<double> train_scores(train.instances.size());
  parallel_for(train.instances.size(), config.workers, [&](std::size_t i) {
    train_scores[i] = instance_overlap_score(train.instances[i], train);
  });

  StratificationReport report;
  report.method = config.method;
  report.low_threshold = quantile(train_scores, 0.25, config.method);
  report.high_threshold = quantile(train_scores, 0.75, config.method);

  std::vector<double> test_scores(test.instances.size());
  parallel_for(test.instances.size(), config.workers, [&](std::size_t i) {
    test_scores[i] = instance_overlap_score(test.instances[i], test);
  });

  GroupMeans low, high;
  for (std::size_t i = 0; i < test.instances.size(); ++i) {
    const InferenceInstance& inst = test.instances[i];
    if (test_scores[i] < report.low_threshold) {
      report.low_group.push_back(inst.id);
      low.add(inst, test);
    } else if (test_scores[i] > report.high_threshold) {
      report.high_group.push_back(inst.id);
      high.add(inst, test);
    }
  }
  if (low.count > 0) {
    report.low_rc = low.rc_sum / static_cast<double>(low.count);
    report.low_ri = low.ri_sum / static_cast<double>(low.count);
  }
  if (high.count > 0) {
    report.high_rc = high.rc_sum / static_cast<double>(high.count);
    report.high_ri = high.ri_sum / static_cast<double>(high.count);
  }
  return report;
}

Corpus subsample_fraction(const Corpus& train, double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0) || fraction > 1.0) {
    throw Error("fraction must be in (0, 1], got " + std::to_string(fraction));
  }
  const std::size_t n = train.instances.size();
  const std::size_t k =
      std::min<std::size_t>(n, static_cast<std::size_t>(
                                   std::ceil(fraction * static_cast<double>(n))));

  // Seeded priority per instance; keeping the k smallest priorities makes
  // samples nest across fractions under the same seed.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::vector<std::uint64_t> priority(n);
  for (std::size_t i = 0; i < n; ++i) {
    priority[i] = derive_seed(seed, train.instances[i].id, "subsample");
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return priority[a] != priority[b] ? priority[a] < priority[b] : a < b;
  });
  order.resize(k);
  std::sort(order.begin(), order.end());  // corpus order for the survivors

  Corpus sample;
  sample.profile = train.profile;
  sample.split = train.split;
  std::unordered_set<std::string> referenced;
  for (std::size_t idx : order) {
    sample.instances.push_back(train.instances[idx]);
    referenced.insert(train.instances[idx].dialogue_id);
  }
  for (const Dialogue& d : train.dialogues) {
    if (referenced.count(d.id)) sample.dialogues.push_back(d);
  }
  sample.reindex();
  return sample;
}

std::vector<TargetRef> sample_annotation_targets(const Corpus& corpus,
                                                 const TaggerBackend& backend) {
  std::vector<TargetRef> targets;
  for (const Dialogue& d : corpus.dialogues) {
    for (std::size_t i = 0; i < d.utterances.size(); ++i) {
      std::optional<std::string> act;
      if (d.dialogue_acts) act = (*d.dialogue_acts)[i];
      if (target_eligible(d.utterances[i].text, act, d.source, backend)) {
        targets.push_back({d.id, i});
      }
    }
  }
  return targets;
}

}  // namespace cci
