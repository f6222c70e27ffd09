#include "cci/evalkit.hpp"

#include <algorithm>
#include <istream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

namespace cci {

using nlohmann::json;

std::vector<PredictionRecord> parse_predictions(std::istream& in) {
  std::vector<PredictionRecord> records;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (normalize_whitespace(line).empty()) continue;
    try {
      json rec = json::parse(line);
      PredictionRecord p;
      p.instance_id = rec.at("instance_id").get<std::string>();
      if (rec.contains("selected_indices")) {
        std::vector<std::size_t> indices;
        for (const auto& v : rec.at("selected_indices")) {
          const auto idx = v.get<long long>();
          if (idx < 0) throw Error("selected index must be >= 0");
          indices.push_back(static_cast<std::size_t>(idx));
        }
        p.selected_indices = std::move(indices);
      }
      if (rec.contains("generated")) {
        p.generated_texts = rec.at("generated").get<std::vector<std::string>>();
      }
      if (!p.selected_indices && !p.generated_texts) {
        throw Error("prediction needs 'selected_indices' or 'generated'");
      }
      records.push_back(std::move(p));
    } catch (const json::exception& e) {
      throw ParseError(line_number, std::string("bad prediction record: ") + e.what());
    } catch (const Error& e) {
      throw ParseError(line_number, e.what());
    }
  }
  return records;
}

MatchResult match_generated_to_options(std::span<const std::string> generated,
                                       std::span<const std::string> options) {
  std::unordered_map<std::string, std::size_t> normalized;
  for (std::size_t i = 0; i < options.size(); ++i) {
    normalized.emplace(ascii_lower(normalize_whitespace(options[i])), i);
  }
  MatchResult result;
  for (const std::string& text : generated) {
    auto it = normalized.find(ascii_lower(normalize_whitespace(text)));
    if (it == normalized.end()) {
      ++result.dropped;
    } else {
      result.indices.insert(it->second);
    }
  }
  return result;
}

int exact_match(const std::set<std::size_t>& selected, const InferenceInstance& gold) {
  for (std::size_t idx : selected) {
    if (idx >= gold.options.size()) {
      throw ValidationError(gold.id, "selected index " + std::to_string(idx) + " out of range");
    }
  }
  if (selected.size() != gold.correct_indices.size()) return 0;
  return std::equal(selected.begin(), selected.end(), gold.correct_indices.begin()) ? 1 : 0;
}

namespace {

double f1_from(std::size_t tp, std::size_t fp, std::size_t fn) {
  const double denom = static_cast<double>(2 * tp + fp + fn);
  return denom > 0.0 ? 2.0 * static_cast<double>(tp) / denom : 0.0;
}

}  // namespace

EvalReport evaluate(std::span<const PredictionRecord> predictions, const Corpus& corpus,
                    const EvalConfig& config) {
  std::unordered_map<std::string, const InferenceInstance*> by_id;
  for (const InferenceInstance& inst : corpus.instances) by_id.emplace(inst.id, &inst);

  std::unordered_map<std::string, std::set<std::size_t>> resolved;
  EvalReport report;
  for (const PredictionRecord& pred : predictions) {
    auto it = by_id.find(pred.instance_id);
    if (it == by_id.end()) {
      throw ValidationError(pred.instance_id, "prediction references unknown instance");
    }
    if (resolved.count(pred.instance_id)) {
      throw ValidationError(pred.instance_id, "instance predicted more than once");
    }
    std::set<std::size_t> selected;
    if (pred.selected_indices) {
      selected.insert(pred.selected_indices->begin(), pred.selected_indices->end());
    } else {
      MatchResult match = match_generated_to_options(*pred.generated_texts, it->second->options);
      report.dropped_generated += match.dropped;
      selected = std::move(match.indices);
    }
    resolved.emplace(pred.instance_id, std::move(selected));
  }

  double per_instance_f1_sum = 0.0;
  std::size_t total_instances = 0;
  std::size_t total_hits = 0;
  for (const InferenceInstance& inst : corpus.instances) {
    auto it = resolved.find(inst.id);
    if (it == resolved.end()) {
      if (config.missing == MissingPolicy::abort) {
        throw ValidationError(inst.id, "no prediction for instance");
      }
      ++report.missing_predictions;
      it = resolved.emplace(inst.id, std::set<std::size_t>{}).first;
    }
    const std::set<std::size_t>& selected = it->second;
    const int hit = exact_match(selected, inst);

    auto& stats = report.per_type[inst.question_type];
    ++stats.count;
    stats.hits += static_cast<std::size_t>(hit);
    ++total_instances;
    total_hits += static_cast<std::size_t>(hit);

    std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
    for (std::size_t i = 0; i < inst.options.size(); ++i) {
      const bool predicted = selected.count(i) > 0;
      const bool gold = inst.is_correct(i);
      if (predicted && gold) ++tp;
      else if (predicted && !gold) ++fp;
      else if (!predicted && gold) ++fn;
      else ++tn;
    }
    report.tp += tp;
    report.fp += fp;
    report.fn += fn;
    report.tn += tn;
    // per-instance alternate macro-F1 (positive class = correct option)
    per_instance_f1_sum += 0.5 * (f1_from(tp, fp, fn) + f1_from(tn, fn, fp));
  }

  for (auto& [type, stats] : report.per_type) {
    stats.exact_match =
        stats.count > 0 ? static_cast<double>(stats.hits) / static_cast<double>(stats.count)
                        : 0.0;
  }
  report.average_exact_match =
      total_instances > 0
          ? static_cast<double>(total_hits) / static_cast<double>(total_instances)
          : 0.0;
  report.f1_correct = f1_from(report.tp, report.fp, report.fn);
  report.f1_incorrect = f1_from(report.tn, report.fn, report.fp);
  report.macro_f1 = 0.5 * (report.f1_correct + report.f1_incorrect);
  report.precision_correct =
      (report.tp + report.fp) > 0
          ? static_cast<double>(report.tp) / static_cast<double>(report.tp + report.fp)
          : 0.0;
  report.recall_correct =
      (report.tp + report.fn) > 0
          ? static_cast<double>(report.tp) / static_cast<double>(report.tp + report.fn)
          : 0.0;
  report.per_instance_macro_f1 =
      total_instances > 0 ? per_instance_f1_sum / static_cast<double>(total_instances) : 0.0;
  return report;
}

}  // namespace cci
