#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cci/corpus.hpp"

namespace cci {

/// One model prediction: either explicit option indices or generated texts
/// to be matched against the options. An empty selected set is an explicit
/// abstain.
struct PredictionRecord {
  std::string instance_id;
  std::optional<std::vector<std::size_t>> selected_indices;
  std::optional<std::vector<std::string>> generated_texts;
};

std::vector<PredictionRecord> parse_predictions(std::istream& in);

struct MatchResult {
  std::set<std::size_t> indices;
  std::size_t dropped = 0;  // generated texts matching no option
};

/// Maps each generated text to the option with the identical
/// whitespace/case-normalized form; unmatched texts are dropped and counted.
MatchResult match_generated_to_options(std::span<const std::string> generated,
                                       std::span<const std::string> options);

/// 1 iff the selected set equals the gold correct set exactly.
/// Throws on an out-of-range index.
int exact_match(const std::set<std::size_t>& selected, const InferenceInstance& gold);

enum class MissingPolicy { abort, count_as_empty };

struct EvalConfig {
  MissingPolicy missing = MissingPolicy::abort;
  bool verbose = false;
};

struct EvalReport {
  struct TypeStats {
    std::size_t count = 0;
    std::size_t hits = 0;
    double exact_match = 0.0;
  };
  std::map<QuestionType, TypeStats> per_type;
  double average_exact_match = 0.0;  // instance-weighted across types
  double macro_f1 = 0.0;             // pooled option-level two-class macro-F1

  // option-level confusion over (selected <=> predicted positive)
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
  double f1_correct = 0.0;
  double f1_incorrect = 0.0;
  double precision_correct = 0.0;
  double recall_correct = 0.0;
  double per_instance_macro_f1 = 0.0;  // alternate definition, reported verbose

  std::size_t missing_predictions = 0;
  std::size_t dropped_generated = 0;
};

/// Scores predictions against the corpus. Every prediction must resolve to
/// an instance and no instance may be predicted twice; instances without a
/// prediction follow config.missing.
EvalReport evaluate(std::span<const PredictionRecord> predictions, const Corpus& corpus,
                    const EvalConfig& config = {});

}  // namespace cci
