#include "cci/objectives.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

#include "cci/util.hpp"
#include "json.hpp"

namespace cci {

using nlohmann::json;

std::string_view to_string(ObjectiveTag tag) {
  switch (tag) {
    case ObjectiveTag::po_i: return "PO.i";
    case ObjectiveTag::po_ii: return "PO.ii";
    case ObjectiveTag::po_iii: return "PO.iii";
    case ObjectiveTag::scao_i: return "SCAO.i";
    case ObjectiveTag::scao_ii: return "SCAO.ii";
    case ObjectiveTag::scao_iii: return "SCAO.iii";
    case ObjectiveTag::co_i: return "CO.i";
    case ObjectiveTag::co_ii: return "CO.ii";
    case ObjectiveTag::co_iii: return "CO.iii";
    case ObjectiveTag::co_iv: return "CO.iv";
    case ObjectiveTag::do_i: return "DO.i";
    case ObjectiveTag::do_ii: return "DO.ii";
    case ObjectiveTag::so_i: return "SO.i";
    case ObjectiveTag::so_ii: return "SO.ii";
  }
  return "PO.i";
}

ObjectiveTag objective_tag_from_string(std::string_view s) {
  for (ObjectiveTag tag : kObjectiveTags) {
    if (s == to_string(tag)) return tag;
  }
  throw Error("unknown objective tag '" + std::string(s) + "'");
}

std::string_view to_string(ObjectiveGroup group) {
  switch (group) {
    case ObjectiveGroup::po: return "po";
    case ObjectiveGroup::scao: return "scao";
    case ObjectiveGroup::co: return "co";
    case ObjectiveGroup::do_: return "do";
    case ObjectiveGroup::so: return "so";
  }
  return "po";
}

ObjectiveGroup objective_group_from_string(std::string_view s) {
  for (ObjectiveGroup g : {ObjectiveGroup::po, ObjectiveGroup::scao, ObjectiveGroup::co,
                           ObjectiveGroup::do_, ObjectiveGroup::so}) {
    if (s == to_string(g)) return g;
  }
  throw Error("unknown objective group '" + std::string(s) + "'");
}

ObjectiveGroup group_of(ObjectiveTag tag) {
  switch (tag) {
    case ObjectiveTag::po_i:
    case ObjectiveTag::po_ii:
    case ObjectiveTag::po_iii: return ObjectiveGroup::po;
    case ObjectiveTag::scao_i:
    case ObjectiveTag::scao_ii:
    case ObjectiveTag::scao_iii: return ObjectiveGroup::scao;
    case ObjectiveTag::co_i:
    case ObjectiveTag::co_ii:
    case ObjectiveTag::co_iii:
    case ObjectiveTag::co_iv: return ObjectiveGroup::co;
    case ObjectiveTag::do_i:
    case ObjectiveTag::do_ii: return ObjectiveGroup::do_;
    case ObjectiveTag::so_i:
    case ObjectiveTag::so_ii: return ObjectiveGroup::so;
  }
  return ObjectiveGroup::po;
}

std::size_t BuildReport::total() const {
  std::size_t sum = 0;
  for (const auto& [tag, count] : counts) sum += count;
  return sum;
}

void BuildReport::merge(const BuildReport& other) {
  for (const auto& [tag, count] : other.counts) counts[tag] += count;
  for (const auto& [reason, count] : other.skips) skips[reason] += count;
}

std::string render_context(const Dialogue& dialogue) {
  std::string out;
  for (std::size_t i = 0; i < dialogue.utterances.size(); ++i) {
    if (i > 0) out += kUtt;
    const Utterance& u = dialogue.utterances[i];
    out += (u.speaker == Speaker::A) ? "A: " : "B: ";
    out += u.text;
  }
  return out;
}

std::string_view relation_phrase(QuestionType type) {
  switch (type) {
    case QuestionType::cause: return "cause";
    case QuestionType::subsequent_event: return "subsequent event";
    case QuestionType::prerequisite: return "prerequisite";
    case QuestionType::motivation: return "motivation";
    case QuestionType::reaction: return "reaction";
  }
  return "cause";
}

std::string question_template(QuestionType type) {
  if (type == QuestionType::reaction) {
    return "What is or could be the emotional reaction to target?";
  }
  return "What is or could be the " + std::string(relation_phrase(type)) + " of target?";
}

std::string sibling_question(QuestionType type) {
  return "What is the " + std::string(relation_phrase(type)) + " of the target?";
}

std::string_view scao2_label(QuestionType type, Scao2LabelStyle style) {
  if (type == QuestionType::subsequent_event && style == Scao2LabelStyle::effect) {
    return "effect";
  }
  return relation_phrase(type);
}

std::string join_concepts(const ConceptList& concepts) {
  std::string out;
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    if (i > 0) out += ", ";
    out += concepts[i];
  }
  return out;
}

namespace {

// "label:" with the value attached after a space when nonempty; a missing
// value leaves nothing after the colon.
std::string segment(std::string_view label, std::string_view value) {
  std::string out(label);
  out += ':';
  if (!value.empty()) {
    out += ' ';
    out += value;
  }
  return out;
}

std::string join_sep(std::initializer_list<std::string_view> pieces) {
  std::string out;
  bool first = true;
  for (std::string_view piece : pieces) {
    if (!first) out += kSep;
    out += piece;
    first = false;
  }
  return out;
}

PretrainExample make_example(ObjectiveTag tag, std::string input, std::string output,
                             const InferenceInstance& instance) {
  return {tag, std::move(input), std::move(output), instance.dialogue_id, instance.id};
}

}  // namespace

std::string template_table() {
  std::ostringstream out;
  out << "separators\n";
  out << "sep=\"" << kSep << "\"\n";
  out << "utt=\"" << kUtt << "\"\n";
  out << "speaker_prefix A=\"A: \" B=\"B: \"\n";
  out << "labels\n";
  for (std::string_view label : {"target", "context", "answer", "concept",
                                 "concepts in the target", "concepts in the answer",
                                 "corrupted concepts", "target options"}) {
    out << "label=\"" << label << ":\"\n";
  }
  out << "question templates\n";
  for (QuestionType t : kQuestionTypes) {
    out << to_string(t) << "=\"" << question_template(t) << "\"\n";
  }
  out << "sibling questions\n";
  for (QuestionType t : kQuestionTypes) {
    out << to_string(t) << "=\"" << sibling_question(t) << "\"\n";
  }
  out << "relation phrases\n";
  for (QuestionType t : kQuestionTypes) {
    out << to_string(t) << "=\"" << relation_phrase(t) << "\"\n";
  }
  out << "po_ii prefix=\"For which utterance in the context the <relation> is the following:\"\n";
  out << "po_iii segment=\"The <relation> of the target:\"\n";
  out << "co_i prefix=\"For which utterance in the context the <relation> is related to the "
         "following concepts:\"\n";
  out << "scao_i option format=\"(<k>) <option>\" joined by \" \"\n";
  out << "scao_ii labels effect-style\n";
  for (QuestionType t : kQuestionTypes) {
    out << to_string(t) << "=\"" << scao2_label(t, Scao2LabelStyle::effect) << "\"\n";
  }
  out << "scao_ii labels subsequent_event-style\n";
  for (QuestionType t : kQuestionTypes) {
    out << to_string(t) << "=\"" << scao2_label(t, Scao2LabelStyle::subsequent_event) << "\"\n";
  }
  out << "concept list join=\", \"\n";
  out << "so output=space-joined positions of sort-ordered elements in the shuffled list\n";
  return out.str();
}

std::string template_table_hash() { return sha256_hex(template_table()); }

std::vector<PretrainExample> build_po(const InferenceInstance& instance,
                                      std::span<const InferenceInstance* const> siblings,
                                      const Dialogue& dialogue) {
  const std::string context = render_context(dialogue);
  const std::string& target = dialogue.utterances[instance.target_index].text;
  const std::string& answer = instance.primary_correct();
  const QuestionType qt = instance.question_type;

  std::vector<PretrainExample> out;
  out.push_back(make_example(
      ObjectiveTag::po_i,
      join_sep({question_template(qt), segment("target", target), segment("context", context)}),
      answer, instance));

  out.push_back(make_example(
      ObjectiveTag::po_ii,
      join_sep({"For which utterance in the context the " + std::string(relation_phrase(qt)) +
                    " is the following: " + answer,
                segment("context", context)}),
      target, instance));

  const std::string relation_segment =
      segment("The " + std::string(relation_phrase(qt)) + " of the target", answer);
  for (const InferenceInstance* sibling : siblings) {
    if (sibling->question_type == qt) continue;
    out.push_back(make_example(
        ObjectiveTag::po_iii,
        join_sep({segment("target", target), relation_segment,
                  sibling_question(sibling->question_type), segment("context", context)}),
        sibling->primary_correct(), instance));
  }
  return out;
}

std::vector<PretrainExample> build_scao(const InferenceInstance& instance,
                                        const Dialogue& dialogue, Rng& rng,
                                        const BuildConfig& config) {
  const std::string context = render_context(dialogue);
  const std::string& target = dialogue.utterances[instance.target_index].text;
  const std::string& answer = instance.primary_correct();
  const QuestionType qt = instance.question_type;

  std::vector<PretrainExample> out;

  // SCAO.i: enumerate the options, seed-shuffled unless dataset order is kept.
  std::vector<std::size_t> order(instance.options.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (config.scao1_order == Scao1Order::shuffled) rng.shuffle(order);
  std::string enumerated;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) enumerated += ' ';
    enumerated += '(' + std::to_string(i) + ") " + instance.options[order[i]];
  }
  out.push_back(make_example(
      ObjectiveTag::scao_i,
      join_sep({question_template(qt), segment("target", target), enumerated,
                segment("context", context)}),
      answer, instance));

  out.push_back(make_example(
      ObjectiveTag::scao_ii,
      join_sep({segment("answer", answer), segment("target", target),
                segment("context", context)}),
      std::string(scao2_label(qt, config.scao2_label_style)), instance));

  // SCAO.iii: target plus up to three other utterances from the dialogue.
  const std::size_t n = dialogue.utterances.size();
  std::vector<std::size_t> others;
  others.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i != instance.target_index) others.push_back(i);
  }
  const std::size_t want = std::min<std::size_t>(3, others.size());
  std::vector<std::size_t> pool{instance.target_index};
  for (std::size_t pick : rng.sample_indices(others.size(), want)) {
    pool.push_back(others[pick]);
  }
  rng.shuffle(pool);
  std::string pool_text;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (i > 0) pool_text += kUtt;
    pool_text += dialogue.utterances[pool[i]].text;
  }
  out.push_back(make_example(
      ObjectiveTag::scao_iii,
      join_sep({segment("The " + std::string(relation_phrase(qt)) + " of the target", answer),
                segment("target options", pool_text), segment("context", context)}),
      target, instance));
  return out;
}

std::vector<PretrainExample> build_co(const InferenceInstance& instance,
                                      const Dialogue& dialogue, const TaggerBackend& backend) {
  const std::string context = render_context(dialogue);
  const std::string& target = dialogue.utterances[instance.target_index].text;
  const std::string& answer = instance.primary_correct();
  const QuestionType qt = instance.question_type;
  const std::string answer_concepts = join_concepts(extract_concepts(answer, backend));
  const std::string target_concepts = join_concepts(extract_concepts(target, backend));
  const std::string phrase(relation_phrase(qt));

  std::vector<PretrainExample> out;
  out.push_back(make_example(
      ObjectiveTag::co_i,
      join_sep({segment("For which utterance in the context the " + phrase +
                            " is related to the following concepts",
                        answer_concepts),
                segment("context", context)}),
      target, instance));
  out.push_back(make_example(
      ObjectiveTag::co_ii,
      join_sep({"For which utterance in the context the " + phrase +
                    " is the following: " + answer,
                segment("concept", target_concepts), segment("context", context)}),
      target, instance));
  out.push_back(make_example(
      ObjectiveTag::co_iii,
      join_sep({question_template(qt), segment("concepts in the target", target_concepts),
                segment("context", context)}),
      answer, instance));
  out.push_back(make_example(
      ObjectiveTag::co_iv,
      join_sep({question_template(qt), segment("target", target),
                segment("concepts in the answer", answer_concepts),
                segment("context", context)}),
      answer, instance));
  return out;
}

std::vector<PretrainExample> build_do(const InferenceInstance& instance,
                                      const Dialogue& dialogue, const TaggerBackend& backend,
                                      Rng& rng, BuildReport& report) {
  const std::string context = render_context(dialogue);
  const std::string& target = dialogue.utterances[instance.target_index].text;
  const std::string& answer = instance.primary_correct();
  const ConceptList answer_concepts = extract_concepts(answer, backend);
  const ConceptList target_concepts = extract_concepts(target, backend);

  std::vector<PretrainExample> out;
  if (answer_concepts.size() >= 2) {
    const ConceptList corrupted = corrupt_concepts(answer_concepts, rng);
    out.push_back(make_example(
        ObjectiveTag::do_i,
        join_sep({segment("target", target),
                  segment("corrupted concepts", join_concepts(corrupted)),
                  segment("context", context), "concepts in the answer:"}),
        join_concepts(answer_concepts), instance));
  } else {
    ++report.skips["DO.i: too few concepts"];
  }
  if (target_concepts.size() >= 2) {
    const ConceptList corrupted = corrupt_concepts(target_concepts, rng);
    out.push_back(make_example(
        ObjectiveTag::do_ii,
        join_sep({segment("answer", answer),
                  segment("corrupted concepts", join_concepts(corrupted)),
                  segment("context", context), "concepts in the target:"}),
        join_concepts(target_concepts), instance));
  } else {
    ++report.skips["DO.ii: too few concepts"];
  }
  return out;
}

std::string sort_positions(std::span<const std::pair<std::size_t, int>> shuffled_keys) {
  std::vector<std::size_t> positions(shuffled_keys.size());
  for (std::size_t i = 0; i < positions.size(); ++i) positions[i] = i;
  std::stable_sort(positions.begin(), positions.end(), [&](std::size_t a, std::size_t b) {
    return shuffled_keys[a] < shuffled_keys[b];
  });
  std::string out;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(positions[i]);
  }
  return out;
}

std::vector<PretrainExample> build_so(const Dialogue& dialogue,
                                      std::vector<DialogueAnswer> answers, Rng& rng,
                                      BuildReport& report, std::size_t subset_cap) {
  std::vector<PretrainExample> out;
  const std::string context = render_context(dialogue);

  if (subset_cap > 0 && answers.size() > subset_cap) {
    std::vector<std::size_t> kept = rng.sample_indices(answers.size(), subset_cap);
    std::sort(kept.begin(), kept.end());  // keep corpus order before the shuffle
    std::vector<DialogueAnswer> subset;
    subset.reserve(kept.size());
    for (std::size_t idx : kept) subset.push_back(std::move(answers[idx]));
    answers = std::move(subset);
  }

  if (answers.size() >= 2) {
    rng.shuffle(answers);
    std::vector<std::pair<std::size_t, int>> keys;
    keys.reserve(answers.size());
    std::string input = segment("context", context);
    for (const DialogueAnswer& a : answers) {
      input += kSep;
      input += a.answer;
      keys.emplace_back(a.utterance_index, precedence_rank(a.type));
    }
    out.push_back({ObjectiveTag::so_i, std::move(input), sort_positions(keys),
                   dialogue.id, ""});
  } else {
    ++report.skips["SO.i: too few answers"];
  }

  // SO.ii: all utterances, speaker-prefixed, in shuffled order.
  std::vector<std::size_t> order(dialogue.utterances.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  rng.shuffle(order);
  std::string input;
  std::vector<std::pair<std::size_t, int>> keys;
  keys.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) input += kUtt;
    const Utterance& u = dialogue.utterances[order[i]];
    input += (u.speaker == Speaker::A) ? "A: " : "B: ";
    input += u.text;
    keys.emplace_back(order[i], 0);
  }
  out.push_back({ObjectiveTag::so_ii, std::move(input), sort_positions(keys),
                 dialogue.id, ""});
  return out;
}

std::pair<std::vector<PretrainExample>, BuildReport> build_all(const Corpus& corpus,
                                                               const BuildConfig& config,
                                                               const TaggerBackend& backend) {
  const bool want_po = config.groups.count(ObjectiveGroup::po) > 0;
  const bool want_scao = config.groups.count(ObjectiveGroup::scao) > 0;
  const bool want_co = config.groups.count(ObjectiveGroup::co) > 0;
  const bool want_do = config.groups.count(ObjectiveGroup::do_) > 0;
  const bool want_so = config.groups.count(ObjectiveGroup::so) > 0;

  // Sibling lists: instances sharing (dialogue, target), in corpus order.
  std::map<std::pair<std::string, std::size_t>, std::vector<const InferenceInstance*>> by_target;
  for (const InferenceInstance& inst : corpus.instances) {
    by_target[{inst.dialogue_id, inst.target_index}].push_back(&inst);
  }

  std::vector<std::vector<PretrainExample>> slots(corpus.instances.size());
  std::vector<BuildReport> reports(corpus.instances.size());
  parallel_for(corpus.instances.size(), config.workers, [&](std::size_t i) {
    const InferenceInstance& inst = corpus.instances[i];
    const Dialogue& dialogue = corpus.dialogue_of(inst);
    try {
      std::vector<PretrainExample>& examples = slots[i];
      if (want_po) {
        std::vector<const InferenceInstance*> siblings;
        for (const InferenceInstance* other :
             by_target.at({inst.dialogue_id, inst.target_index})) {
          if (other != &inst) siblings.push_back(other);
        }
        auto po = build_po(inst, siblings, dialogue);
        examples.insert(examples.end(), std::make_move_iterator(po.begin()),
                        std::make_move_iterator(po.end()));
      }
      if (want_scao) {
        Rng rng(derive_seed(config.master_seed, inst.id, "scao"));
        auto scao = build_scao(inst, dialogue, rng, config);
        examples.insert(examples.end(), std::make_move_iterator(scao.begin()),
                        std::make_move_iterator(scao.end()));
      }
      if (want_co) {
        auto co = build_co(inst, dialogue, backend);
        examples.insert(examples.end(), std::make_move_iterator(co.begin()),
                        std::make_move_iterator(co.end()));
      }
      if (want_do) {
        Rng rng(derive_seed(config.master_seed, inst.id, "do"));
        auto dos = build_do(inst, dialogue, backend, rng, reports[i]);
        examples.insert(examples.end(), std::make_move_iterator(dos.begin()),
                        std::make_move_iterator(dos.end()));
      }
    } catch (const ValidationError&) {
      throw;
    } catch (const Error& e) {
      throw ValidationError(inst.id, e.what());
    }
  });

  std::vector<std::vector<PretrainExample>> so_slots;
  std::vector<BuildReport> so_reports;
  if (want_so) {
    std::unordered_map<std::string, std::vector<DialogueAnswer>> answers_by_dialogue;
    for (const InferenceInstance& inst : corpus.instances) {
      answers_by_dialogue[inst.dialogue_id].push_back(
          {inst.target_index, inst.question_type, inst.primary_correct()});
    }
    so_slots.resize(corpus.dialogues.size());
    so_reports.resize(corpus.dialogues.size());
    parallel_for(corpus.dialogues.size(), config.workers, [&](std::size_t i) {
      const Dialogue& dialogue = corpus.dialogues[i];
      std::vector<DialogueAnswer> answers;
      if (auto it = answers_by_dialogue.find(dialogue.id); it != answers_by_dialogue.end()) {
        answers = it->second;
      }
      Rng rng(derive_seed(config.master_seed, dialogue.id, "so"));
      try {
        so_slots[i] = build_so(dialogue, std::move(answers), rng, so_reports[i],
                               config.so1_subset_cap);
      } catch (const ValidationError&) {
        throw;
      } catch (const Error& e) {
        throw ValidationError(dialogue.id, e.what());
      }
    });
  }

  std::vector<PretrainExample> examples;
  BuildReport report;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    report.merge(reports[i]);
    for (PretrainExample& ex : slots[i]) {
      ++report.counts[ex.objective];
      examples.push_back(std::move(ex));
    }
  }
  for (std::size_t i = 0; i < so_slots.size(); ++i) {
    report.merge(so_reports[i]);
    for (PretrainExample& ex : so_slots[i]) {
      ++report.counts[ex.objective];
      examples.push_back(std::move(ex));
    }
  }
  return {std::move(examples), std::move(report)};
}

void serialize_examples(std::span<const PretrainExample> examples, std::ostream& out) {
  for (const PretrainExample& ex : examples) {
    json rec{{"objective", to_string(ex.objective)},
             {"input", ex.input},
             {"output", ex.output},
             {"dialogue_id", ex.dialogue_id}};
    if (!ex.instance_id.empty()) rec["instance_id"] = ex.instance_id;
    out << rec.dump() << '\n';
  }
}

}  // namespace cci
