#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cci/util.hpp"

namespace cci {

enum class Source { dailydialog, mutual, dream };
enum class Speaker { A, B };
// v1: >=1 correct and >=1 incorrect; v2: >=2 of each and no prerequisite
// questions; none: only structural checks, so culled corpora (which may end
// up all-correct) can be read back.
enum class Profile { v1, v2, none };
enum class Split { train, validation, test };

/// Inference dimensions, in canonical report order.
enum class QuestionType { cause, subsequent_event, prerequisite, motivation, reaction };

inline constexpr QuestionType kQuestionTypes[] = {
    QuestionType::cause, QuestionType::subsequent_event, QuestionType::prerequisite,
    QuestionType::motivation, QuestionType::reaction};

/// Sort rank for the relation precedence c -> p -> m -> e -> r.
int precedence_rank(QuestionType type);

std::string_view to_string(QuestionType type);
std::string_view to_string(Source source);
std::string_view to_string(Split split);
std::string_view to_string(Profile profile);
QuestionType question_type_from_string(std::string_view s);
Source source_from_string(std::string_view s);
Split split_from_string(std::string_view s);
Profile profile_from_string(std::string_view s);

struct Utterance {
  Speaker speaker;
  std::string text;
};

/// A dyadic dialogue. Invariants (enforced by parse_corpus/validate):
/// at least two utterances, speakers only A/B, dialogue_acts (when present)
/// aligned one-to-one with utterances.
struct Dialogue {
  std::string id;
  Source source = Source::dailydialog;
  std::vector<Utterance> utterances;
  std::optional<std::vector<std::string>> dialogue_acts;

  bool operator==(const Dialogue&) const = default;
};

inline bool operator==(const Utterance& a, const Utterance& b) {
  return a.speaker == b.speaker && a.text == b.text;
}

/// One annotated question on a target utterance, with its labeled options.
/// correct_indices is kept sorted; the primary correct answer is
/// options[correct_indices.front()].
struct InferenceInstance {
  std::string id;
  std::string dialogue_id;
  std::size_t target_index = 0;
  QuestionType question_type = QuestionType::cause;
  std::vector<std::string> options;
  std::vector<std::size_t> correct_indices;

  const std::string& primary_correct() const { return options[correct_indices.front()]; }
  bool is_correct(std::size_t option_index) const;

  bool operator==(const InferenceInstance&) const = default;
};

struct Corpus {
  std::vector<Dialogue> dialogues;              // input order
  std::vector<InferenceInstance> instances;     // input order
  Profile profile = Profile::v2;
  Split split = Split::train;

  const Dialogue& dialogue_of(const InferenceInstance& instance) const;
  const Dialogue* find_dialogue(std::string_view id) const;

  /// Rebuilds the id -> position index; call after mutating dialogues.
  void reindex();

  bool operator==(const Corpus& other) const {
    return dialogues == other.dialogues && instances == other.instances &&
           profile == other.profile && split == other.split;
  }

 private:
  std::unordered_map<std::string, std::size_t> dialogue_index_;
};

/// Reads mixed dialogue/instance JSONL (one record per line, UTF-8) and
/// validates every invariant for the given profile. Dialogue records may
/// appear after the instances that reference them; references are resolved
/// once the whole stream is read.
///
/// Throws ParseError for malformed lines (with the line number) and
/// ValidationError for dangling references or profile violations (with the
/// offending id and rule).
Corpus parse_corpus(std::istream& in, Profile profile, Split split = Split::train);

/// Writes the corpus back as JSONL, dialogues first, both in input order.
/// parse_corpus(serialize_corpus(c)) == c.
void serialize_corpus(const Corpus& corpus, std::ostream& out);

/// Re-checks every invariant on an in-memory corpus (used after
/// transformations that construct instances directly).
void validate_corpus(const Corpus& corpus);

struct StatsReport {
  struct SourceCount {
    std::size_t dialogues = 0;
    std::size_t instances = 0;
  };
  std::map<Source, SourceCount> per_source;
  std::size_t total_dialogues = 0;
  std::size_t total_instances = 0;
  // instance-count histogram over dialogues: #instances -> #dialogues
  std::map<std::size_t, std::size_t> dialogues_by_instance_count;
  double avg_correct_answers = 0.0;
  // correct-answer-count histogram over instances: #correct -> #instances
  std::map<std::size_t, std::size_t> instances_by_correct_count;
  std::map<Split, std::map<QuestionType, std::size_t>> per_split_type_counts;

  std::size_t dialogues_with_instance_count(std::size_t lo, std::size_t hi) const;
  std::size_t instances_with_correct_count(std::size_t lo, std::size_t hi) const;
};

/// Aggregates one split-tagged corpus per entry. Dialogues sharing an id
/// across entries are counted once; their content must match exactly.
StatsReport compute_stats(std::span<const Corpus> corpora);
StatsReport compute_stats(const Corpus& corpus);

struct LintWarning {
  std::string instance_id;
  std::size_t option_index = 0;
  std::string message;
};

/// Flags correct reaction answers that mention no emotion-lexicon term (or
/// inflectional variant). Advisory only: returns warnings, never throws.
std::vector<LintWarning> lint_reaction_answers(const Corpus& corpus,
                                               const std::set<std::string>& emotion_lexicon);

/// The emotion vocabulary shipped with the toolkit, usable as the lint lexicon.
const std::set<std::string>& bundled_emotion_lexicon();

}  // namespace cci
