#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cci/corpus.hpp"
#include "cci/rng.hpp"
#include "cci/textproc.hpp"

namespace cci {

/// Reduces an instance to exactly four options: two correct answers are
/// picked without replacement, then two more from all remaining options.
/// Kept options preserve their original relative order; correct_indices are
/// remapped. Requires >= 4 options and >= 2 correct.
InferenceInstance cull_to_four(const InferenceInstance& instance, Rng& rng);

enum class QuartileMethod { linear, nearest };
std::string_view to_string(QuartileMethod method);

struct StratificationReport {
  double low_threshold = 0.0;   // lower quartile of train scores
  double high_threshold = 0.0;  // upper quartile of train scores
  QuartileMethod method = QuartileMethod::linear;
  std::vector<std::string> low_group;   // test instance ids, score < low
  std::vector<std::string> high_group;  // test instance ids, score > high
  double low_rc = 0.0, low_ri = 0.0;    // mean ROUGE-1 precision of correct /
  double high_rc = 0.0, high_ri = 0.0;  // incorrect answers per group
};

struct StratifyConfig {
  QuartileMethod method = QuartileMethod::linear;
  int workers = 1;
};

/// Lexical-overlap stratification: per-instance score is the mean ROUGE-1
/// precision of all its options against the rendered dialogue context;
/// thresholds are the train-score quartiles; test instances fall in the low
/// (< low threshold) or high (> high threshold) group.
StratificationReport stratify_by_rouge(const Corpus& train, const Corpus& test,
                                       const StratifyConfig& config = {});

/// Uniform sample without replacement of ceil(fraction * N) instances, plus
/// the dialogues they reference. Implemented by seeded per-instance
/// priorities, so samples nest: fraction f1 <= f2 under one seed gives
/// sample(f1) as a subset of sample(f2).
Corpus subsample_fraction(const Corpus& train, double fraction, std::uint64_t seed);

struct TargetRef {
  std::string dialogue_id;
  std::size_t target_index = 0;
};

/// All (dialogue, utterance) pairs passing target_eligible, in corpus order.
std::vector<TargetRef> sample_annotation_targets(const Corpus& corpus,
                                                 const TaggerBackend& backend);

}  // namespace cci
