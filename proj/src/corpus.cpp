#include "cci/corpus.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "cci/textproc.hpp"
#include "json.hpp"

namespace cci {

using nlohmann::json;

int precedence_rank(QuestionType type) {
  switch (type) {
    case QuestionType::cause: return 0;
    case QuestionType::prerequisite: return 1;
    case QuestionType::motivation: return 2;
    case QuestionType::subsequent_event: return 3;
    case QuestionType::reaction: return 4;
  }
  return 4;
}

std::string_view to_string(QuestionType type) {
  switch (type) {
    case QuestionType::cause: return "cause";
    case QuestionType::subsequent_event: return "subsequent_event";
    case QuestionType::prerequisite: return "prerequisite";
    case QuestionType::motivation: return "motivation";
    case QuestionType::reaction: return "reaction";
  }
  return "cause";
}

std::string_view to_string(Source source) {
  switch (source) {
    case Source::dailydialog: return "dailydialog";
    case Source::mutual: return "mutual";
    case Source::dream: return "dream";
  }
  return "dailydialog";
}

std::string_view to_string(Split split) {
  switch (split) {
    case Split::train: return "train";
    case Split::validation: return "validation";
    case Split::test: return "test";
  }
  return "train";
}

std::string_view to_string(Profile profile) {
  switch (profile) {
    case Profile::v1: return "v1";
    case Profile::v2: return "v2";
    case Profile::none: return "none";
  }
  return "v1";
}

QuestionType question_type_from_string(std::string_view s) {
  for (QuestionType t : kQuestionTypes) {
    if (s == to_string(t)) return t;
  }
  throw Error("unknown question type '" + std::string(s) + "'");
}

Source source_from_string(std::string_view s) {
  for (Source src : {Source::dailydialog, Source::mutual, Source::dream}) {
    if (s == to_string(src)) return src;
  }
  throw Error("unknown source '" + std::string(s) + "'");
}

Split split_from_string(std::string_view s) {
  for (Split sp : {Split::train, Split::validation, Split::test}) {
    if (s == to_string(sp)) return sp;
  }
  throw Error("unknown split '" + std::string(s) + "'");
}

Profile profile_from_string(std::string_view s) {
  if (s == "v1") return Profile::v1;
  if (s == "v2") return Profile::v2;
  if (s == "none") return Profile::none;
  throw Error("unknown profile '" + std::string(s) + "'");
}

bool InferenceInstance::is_correct(std::size_t option_index) const {
  return std::binary_search(correct_indices.begin(), correct_indices.end(), option_index);
}

const Dialogue& Corpus::dialogue_of(const InferenceInstance& instance) const {
  const Dialogue* d = find_dialogue(instance.dialogue_id);
  if (!d) throw ValidationError(instance.id, "references unknown dialogue '" + instance.dialogue_id + "'");
  return *d;
}

const Dialogue* Corpus::find_dialogue(std::string_view id) const {
  auto it = dialogue_index_.find(std::string(id));
  return it == dialogue_index_.end() ? nullptr : &dialogues[it->second];
}

void Corpus::reindex() {
  dialogue_index_.clear();
  dialogue_index_.reserve(dialogues.size());
  for (std::size_t i = 0; i < dialogues.size(); ++i) {
    dialogue_index_.emplace(dialogues[i].id, i);
  }
}

namespace {

// Texts that end up inside single-line pretraining records must stay
// single-line here; rejecting raw newlines keeps round-trips exact.
void check_text(const std::string& id, std::string_view what, const std::string& text) {
  if (text.find('\n') != std::string::npos || text.find('\r') != std::string::npos) {
    throw ValidationError(id, std::string(what) + " contains a raw newline");
  }
  if (normalize_whitespace(text).empty()) {
    throw ValidationError(id, std::string(what) + " is empty");
  }
}

void validate_dialogue(const Dialogue& d) {
  if (d.id.empty()) throw ValidationError("<dialogue>", "dialogue id is empty");
  if (d.utterances.size() < 2) {
    throw ValidationError(d.id, "dialogue needs at least 2 utterances");
  }
  for (const Utterance& u : d.utterances) check_text(d.id, "utterance", u.text);
  if (d.dialogue_acts && d.dialogue_acts->size() != d.utterances.size()) {
    throw ValidationError(d.id, "dialogue_acts length (" +
                                    std::to_string(d.dialogue_acts->size()) +
                                    ") does not match utterance count (" +
                                    std::to_string(d.utterances.size()) + ")");
  }
}

void validate_instance(const InferenceInstance& inst, const Dialogue& dialogue,
                       Profile profile) {
  if (inst.id.empty()) throw ValidationError("<instance>", "instance id is empty");
  if (inst.target_index >= dialogue.utterances.size()) {
    throw ValidationError(inst.id, "target_index " + std::to_string(inst.target_index) +
                                       " out of range for dialogue '" + dialogue.id +
                                       "' with " + std::to_string(dialogue.utterances.size()) +
                                       " utterances");
  }
  if (inst.options.empty()) throw ValidationError(inst.id, "no options");
  for (const std::string& opt : inst.options) check_text(inst.id, "option", opt);

  std::unordered_set<std::string> normalized;
  for (const std::string& opt : inst.options) {
    if (!normalized.insert(normalize_whitespace(opt)).second) {
      throw ValidationError(inst.id, "duplicate option after whitespace normalization: '" +
                                         normalize_whitespace(opt) + "'");
    }
  }

  if (inst.correct_indices.empty()) throw ValidationError(inst.id, "needs >=1 correct option");
  if (!std::is_sorted(inst.correct_indices.begin(), inst.correct_indices.end()) ||
      std::adjacent_find(inst.correct_indices.begin(), inst.correct_indices.end()) !=
          inst.correct_indices.end()) {
    throw ValidationError(inst.id, "correct_indices must be a sorted set");
  }
  if (inst.correct_indices.back() >= inst.options.size()) {
    throw ValidationError(inst.id, "correct index " + std::to_string(inst.correct_indices.back()) +
                                       " out of range");
  }
  const std::size_t correct = inst.correct_indices.size();
  const std::size_t incorrect = inst.options.size() - correct;
  if (profile != Profile::none && incorrect == 0) {
    throw ValidationError(inst.id, "needs >=1 incorrect option");
  }
  if (profile == Profile::v2) {
    if (correct < 2) throw ValidationError(inst.id, "needs >=2 correct options under profile v2");
    if (incorrect < 2) {
      throw ValidationError(inst.id, "needs >=2 incorrect options under profile v2");
    }
    if (inst.question_type == QuestionType::prerequisite) {
      throw ValidationError(inst.id, "prerequisite questions are absent under profile v2");
    }
  }
}

Dialogue dialogue_from_json(const json& rec) {
  Dialogue d;
  d.id = rec.at("id").get<std::string>();
  d.source = source_from_string(rec.at("source").get<std::string>());
  for (const json& u : rec.at("utterances")) {
    const std::string speaker = u.at("speaker").get<std::string>();
    if (speaker != "A" && speaker != "B") {
      throw ValidationError(d.id, "speaker must be 'A' or 'B', got '" + speaker + "'");
    }
    d.utterances.push_back({speaker == "A" ? Speaker::A : Speaker::B,
                            u.at("text").get<std::string>()});
  }
  if (rec.contains("dialogue_acts") && !rec.at("dialogue_acts").is_null()) {
    d.dialogue_acts = rec.at("dialogue_acts").get<std::vector<std::string>>();
  }
  return d;
}

InferenceInstance instance_from_json(const json& rec) {
  InferenceInstance inst;
  inst.id = rec.at("id").get<std::string>();
  inst.dialogue_id = rec.at("dialogue_id").get<std::string>();
  if (!rec.at("target_index").is_number_integer()) {
    throw ValidationError(inst.id, "target_index must be an integer");
  }
  const auto raw_index = rec.at("target_index").get<long long>();
  if (raw_index < 0) throw ValidationError(inst.id, "target_index must be >= 0");
  inst.target_index = static_cast<std::size_t>(raw_index);
  inst.question_type = question_type_from_string(rec.at("question_type").get<std::string>());
  inst.options = rec.at("options").get<std::vector<std::string>>();
  for (const auto& v : rec.at("correct_indices")) {
    if (!v.is_number_integer()) {
      throw ValidationError(inst.id, "correct indices must be integers");
    }
    const auto idx = v.get<long long>();
    if (idx < 0) throw ValidationError(inst.id, "correct index must be >= 0");
    inst.correct_indices.push_back(static_cast<std::size_t>(idx));
  }
  std::sort(inst.correct_indices.begin(), inst.correct_indices.end());
  return inst;
}

}  // namespace

Corpus parse_corpus(std::istream& in, Profile profile, Split split) {
  Corpus corpus;
  corpus.profile = profile;
  corpus.split = split;

  std::unordered_set<std::string> dialogue_ids;
  std::unordered_set<std::string> instance_ids;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || normalize_whitespace(line).empty()) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(line_number, std::string("invalid JSON: ") + e.what());
    }
    try {
      const std::string kind = rec.at("kind").get<std::string>();
      if (kind == "dialogue") {
        Dialogue d = dialogue_from_json(rec);
        if (!dialogue_ids.insert(d.id).second) {
          throw ValidationError(d.id, "duplicate dialogue id");
        }
        validate_dialogue(d);
        corpus.dialogues.push_back(std::move(d));
      } else if (kind == "instance") {
        InferenceInstance inst = instance_from_json(rec);
        if (!instance_ids.insert(inst.id).second) {
          throw ValidationError(inst.id, "duplicate instance id");
        }
        corpus.instances.push_back(std::move(inst));
      } else {
        throw Error("unknown record kind '" + kind + "'");
      }
    } catch (const ValidationError&) {
      throw;
    } catch (const json::exception& e) {
      throw ParseError(line_number, std::string("bad record: ") + e.what());
    } catch (const Error& e) {
      throw ParseError(line_number, e.what());
    }
  }

  corpus.reindex();
  for (const InferenceInstance& inst : corpus.instances) {
    const Dialogue* d = corpus.find_dialogue(inst.dialogue_id);
    if (!d) {
      throw ValidationError(inst.id, "references unknown dialogue '" + inst.dialogue_id + "'");
    }
    validate_instance(inst, *d, profile);
  }
  return corpus;
}

void validate_corpus(const Corpus& corpus) {
  std::unordered_set<std::string> dialogue_ids;
  for (const Dialogue& d : corpus.dialogues) {
    if (!dialogue_ids.insert(d.id).second) throw ValidationError(d.id, "duplicate dialogue id");
    validate_dialogue(d);
  }
  std::unordered_set<std::string> instance_ids;
  for (const InferenceInstance& inst : corpus.instances) {
    if (!instance_ids.insert(inst.id).second) {
      throw ValidationError(inst.id, "duplicate instance id");
    }
    const Dialogue* d = corpus.find_dialogue(inst.dialogue_id);
    if (!d) {
      throw ValidationError(inst.id, "references unknown dialogue '" + inst.dialogue_id + "'");
    }
    validate_instance(inst, *d, corpus.profile);
  }
}

void serialize_corpus(const Corpus& corpus, std::ostream& out) {
  for (const Dialogue& d : corpus.dialogues) {
    json utterances = json::array();
    for (const Utterance& u : d.utterances) {
      utterances.push_back({{"speaker", u.speaker == Speaker::A ? "A" : "B"},
                            {"text", u.text}});
    }
    json rec{{"kind", "dialogue"},
             {"id", d.id},
             {"source", to_string(d.source)},
             {"utterances", std::move(utterances)}};
    if (d.dialogue_acts) rec["dialogue_acts"] = *d.dialogue_acts;
    out << rec.dump() << '\n';
  }
  for (const InferenceInstance& inst : corpus.instances) {
    json rec{{"kind", "instance"},
             {"id", inst.id},
             {"dialogue_id", inst.dialogue_id},
             {"target_index", inst.target_index},
             {"question_type", to_string(inst.question_type)},
             {"options", inst.options},
             {"correct_indices", inst.correct_indices}};
    out << rec.dump() << '\n';
  }
}

std::size_t StatsReport::dialogues_with_instance_count(std::size_t lo, std::size_t hi) const {
  std::size_t total = 0;
  for (const auto& [count, dialogues] : dialogues_by_instance_count) {
    if (count >= lo && count <= hi) total += dialogues;
  }
  return total;
}

std::size_t StatsReport::instances_with_correct_count(std::size_t lo, std::size_t hi) const {
  std::size_t total = 0;
  for (const auto& [count, instances] : instances_by_correct_count) {
    if (count >= lo && count <= hi) total += instances;
  }
  return total;
}

StatsReport compute_stats(std::span<const Corpus> corpora) {
  StatsReport report;
  // Dialogues appearing in more than one split file are counted once.
  std::unordered_map<std::string, const Dialogue*> seen_dialogues;
  std::unordered_map<std::string, std::size_t> instances_per_dialogue;
  std::size_t correct_sum = 0;

  for (const Corpus& corpus : corpora) {
    for (const Dialogue& d : corpus.dialogues) {
      auto [it, inserted] = seen_dialogues.emplace(d.id, &d);
      if (inserted) {
        ++report.total_dialogues;
        ++report.per_source[d.source].dialogues;
      } else if (!(*it->second == d)) {
        throw ValidationError(d.id, "dialogue appears in multiple inputs with different content");
      }
    }
    for (const InferenceInstance& inst : corpus.instances) {
      const Dialogue& d = corpus.dialogue_of(inst);
      ++report.total_instances;
      ++report.per_source[d.source].instances;
      ++instances_per_dialogue[inst.dialogue_id];
      correct_sum += inst.correct_indices.size();
      ++report.instances_by_correct_count[inst.correct_indices.size()];
      ++report.per_split_type_counts[corpus.split][inst.question_type];
    }
  }

  for (const auto& [id, count] : instances_per_dialogue) {
    ++report.dialogues_by_instance_count[count];
  }
  // Dialogues with no instances land in the 0 bucket.
  if (report.total_dialogues > instances_per_dialogue.size()) {
    report.dialogues_by_instance_count[0] +=
        report.total_dialogues - instances_per_dialogue.size();
  }
  report.avg_correct_answers =
      report.total_instances == 0
          ? 0.0
          : static_cast<double>(correct_sum) / static_cast<double>(report.total_instances);
  return report;
}

StatsReport compute_stats(const Corpus& corpus) {
  return compute_stats(std::span<const Corpus>(&corpus, 1));
}

namespace {

// Light inflectional stemming shared by both sides of the lint comparison,
// so "excited" matches lexicon "Excited" and "annoyed"/"annoying" meet at
// "annoy".
std::string lint_stem(std::string word) {
  auto ends_with = [&](std::string_view suffix) {
    return word.size() > suffix.size() + 1 &&
           word.compare(word.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with("ing")) {
    word.resize(word.size() - 3);
  } else if (ends_with("ed")) {
    word.resize(word.size() - 2);
  } else if (ends_with("s") && !ends_with("ss")) {
    word.resize(word.size() - 1);
  }
  if (word.size() > 2 && word.back() == word[word.size() - 2]) word.pop_back();
  if (!word.empty() && word.back() == 'e') word.pop_back();
  return word;
}

std::vector<std::string> lint_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (unsigned char c : text) {
    if (std::isalpha(c) || c == '\'') {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

}  // namespace

std::vector<LintWarning> lint_reaction_answers(const Corpus& corpus,
                                               const std::set<std::string>& emotion_lexicon) {
  std::unordered_set<std::string> stems;
  std::unordered_set<std::string> exact;
  for (const std::string& term : emotion_lexicon) {
    const std::string folded = ascii_lower(term);
    exact.insert(folded);
    stems.insert(lint_stem(folded));
  }

  std::vector<LintWarning> warnings;
  for (const InferenceInstance& inst : corpus.instances) {
    if (inst.question_type != QuestionType::reaction) continue;
    for (std::size_t idx : inst.correct_indices) {
      bool found = false;
      for (const std::string& token : lint_tokens(inst.options[idx])) {
        if (exact.count(token) || stems.count(lint_stem(token))) {
          found = true;
          break;
        }
      }
      if (!found) {
        warnings.push_back({inst.id, idx,
                            "correct reaction answer mentions no emotion-lexicon term: '" +
                                inst.options[idx] + "'"});
      }
    }
  }
  return warnings;
}

const std::set<std::string>& bundled_emotion_lexicon() {
  static const std::set<std::string> lexicon{
      "Admiration", "Affection", "Afraid", "Angry", "Annoyed", "Anticipating", "Anxious",
      "Apprehensive", "Ashamed", "Awe", "Awkwardness", "Boredom", "Calmness", "Caring",
      "Confident", "Confusion", "Content", "Craving", "Devastated", "Disappointed",
      "Disgusted", "Eagerness", "Embarrassed", "Encouragement", "Enthusiasm", "Excited",
      "Faithful", "Fear", "Furious", "Grateful", "Gratitude", "Guilty", "Happy", "Hopeful",
      "Impressed", "Interest", "Jealous", "Joyful", "Lonely", "Nostalgic", "Prepared",
      "Proud", "Relief", "Romance", "Sad", "Satisfaction", "Sentimental", "Surprised",
      "Terrified", "Trusting"};
  return lexicon;
}

}  // namespace cci
