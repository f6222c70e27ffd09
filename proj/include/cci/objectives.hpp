#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cci/corpus.hpp"
#include "cci/rng.hpp"
#include "cci/textproc.hpp"

namespace cci {

enum class ObjectiveTag {
  po_i, po_ii, po_iii,
  scao_i, scao_ii, scao_iii,
  co_i, co_ii, co_iii, co_iv,
  do_i, do_ii,
  so_i, so_ii,
};

inline constexpr ObjectiveTag kObjectiveTags[] = {
    ObjectiveTag::po_i,   ObjectiveTag::po_ii,  ObjectiveTag::po_iii,
    ObjectiveTag::scao_i, ObjectiveTag::scao_ii, ObjectiveTag::scao_iii,
    ObjectiveTag::co_i,   ObjectiveTag::co_ii,  ObjectiveTag::co_iii, ObjectiveTag::co_iv,
    ObjectiveTag::do_i,   ObjectiveTag::do_ii,
    ObjectiveTag::so_i,   ObjectiveTag::so_ii,
};

std::string_view to_string(ObjectiveTag tag);  // "PO.i", "SCAO.iii", ...
ObjectiveTag objective_tag_from_string(std::string_view s);

enum class ObjectiveGroup { po, scao, co, do_, so };
std::string_view to_string(ObjectiveGroup group);
ObjectiveGroup objective_group_from_string(std::string_view s);
ObjectiveGroup group_of(ObjectiveTag tag);

/// One text-to-text pretraining record. input never contains a newline;
/// instance_id is empty for dialogue-level (SO) examples.
struct PretrainExample {
  ObjectiveTag objective = ObjectiveTag::po_i;
  std::string input;
  std::string output;
  std::string dialogue_id;
  std::string instance_id;
};

struct BuildReport {
  std::map<ObjectiveTag, std::size_t> counts;
  std::map<std::string, std::size_t> skips;  // reason -> count

  std::size_t total() const;
  void merge(const BuildReport& other);
};

enum class Scao2LabelStyle { effect, subsequent_event };
enum class Scao1Order { shuffled, dataset };

inline constexpr std::uint64_t kDefaultSeed = 1729;

struct BuildConfig {
  std::uint64_t master_seed = kDefaultSeed;
  std::set<ObjectiveGroup> groups = {ObjectiveGroup::po, ObjectiveGroup::scao,
                                     ObjectiveGroup::co, ObjectiveGroup::do_,
                                     ObjectiveGroup::so};
  Scao2LabelStyle scao2_label_style = Scao2LabelStyle::effect;
  Scao1Order scao1_order = Scao1Order::shuffled;
  std::size_t so1_subset_cap = 0;  // 0 = use every annotated answer
  int workers = 1;
};

// --- frozen serialization pieces -------------------------------------------
// Separators and segment labels are frozen; print-templates/--version expose
// a hash of the whole table so generated corpora are traceable.

inline constexpr std::string_view kSep = " <sep> ";
inline constexpr std::string_view kUtt = " <utt> ";

/// "A: ..." / "B: ..." utterances joined by " <utt> ".
std::string render_context(const Dialogue& dialogue);

/// "What is or could be the <relation> of target?" (reaction: "... emotional
/// reaction to target?").
std::string question_template(QuestionType type);

/// Follow-up question used inside PO.iii: "What is the <relation> of the target?"
std::string sibling_question(QuestionType type);

/// Human-readable relation name: "cause", "subsequent event", ...
std::string_view relation_phrase(QuestionType type);

/// SCAO.ii output label; subsequent_event renders as "effect" or
/// "subsequent event" depending on style.
std::string_view scao2_label(QuestionType type, Scao2LabelStyle style);

/// Comma-space concept serialization ("drive, accident"; empty list -> "").
std::string join_concepts(const ConceptList& concepts);

/// Canonical dump of every frozen template/label, and its SHA-256.
std::string template_table();
std::string template_table_hash();

// --- builders ---------------------------------------------------------------
// All builders are pure given their inputs and the rng seed. The emitted
// orders within one instance are fixed: PO.i, PO.ii, PO.iii(siblings in
// corpus order); SCAO.i..iii; CO.i..iv; DO.i, DO.ii; SO.i, SO.ii.

std::vector<PretrainExample> build_po(const InferenceInstance& instance,
                                      std::span<const InferenceInstance* const> siblings,
                                      const Dialogue& dialogue);

std::vector<PretrainExample> build_scao(const InferenceInstance& instance,
                                        const Dialogue& dialogue, Rng& rng,
                                        const BuildConfig& config);

std::vector<PretrainExample> build_co(const InferenceInstance& instance,
                                      const Dialogue& dialogue, const TaggerBackend& backend);

/// DO.i / DO.ii; an example whose concept list has fewer than two entries is
/// skipped and counted in `report`, never raised.
std::vector<PretrainExample> build_do(const InferenceInstance& instance,
                                      const Dialogue& dialogue, const TaggerBackend& backend,
                                      Rng& rng, BuildReport& report);

struct DialogueAnswer {
  std::size_t utterance_index = 0;
  QuestionType type = QuestionType::cause;
  std::string answer;
};

/// Positions of the sort-ordered elements within the shuffled list, as the
/// output string ("3 2 1 4 0"). Keys are compared lexicographically; ties
/// keep shuffled order.
std::string sort_positions(std::span<const std::pair<std::size_t, int>> shuffled_keys);

/// SO.i over the dialogue's annotated answers (sort key: utterance index,
/// then relation precedence) and SO.ii over its utterances. Skips SO.i when
/// fewer than two answers are available.
std::vector<PretrainExample> build_so(const Dialogue& dialogue,
                                      std::vector<DialogueAnswer> answers, Rng& rng,
                                      BuildReport& report, std::size_t subset_cap = 0);

/// One pass over the corpus invoking every enabled builder; per-instance
/// seeds derive from (master_seed, instance id), so the stream is identical
/// for any worker count. SO is built once per dialogue, after all
/// instance-level examples, in dialogue input order.
std::pair<std::vector<PretrainExample>, BuildReport> build_all(const Corpus& corpus,
                                                               const BuildConfig& config,
                                                               const TaggerBackend& backend);

void serialize_examples(std::span<const PretrainExample> examples, std::ostream& out);

}  // namespace cci
