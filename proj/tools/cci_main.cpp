// cci: corpus toolkit for multiview contextual commonsense inference datasets.
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cci/corpus.hpp"
#include "cci/evalkit.hpp"
#include "cci/experiments.hpp"
#include "cci/metrics.hpp"
#include "cci/objectives.hpp"
#include "cci/textproc.hpp"
#include "cci/util.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

cci::Corpus load_corpus(const std::string& path, cci::Profile profile,
                        cci::Split split = cci::Split::train) {
  std::ifstream in(path);
  if (!in) throw cci::Error("cannot open input file '" + path + "'");
  return cci::parse_corpus(in, profile, split);
}

// Corpora from several files (e.g. per-split) merged into one; duplicate
// dialogue ids must carry identical content.
cci::Corpus merge_corpora(std::vector<cci::Corpus> parts) {
  if (parts.size() == 1) return std::move(parts.front());
  cci::Corpus merged;
  merged.profile = parts.front().profile;
  merged.split = parts.front().split;
  std::unordered_map<std::string, std::size_t> seen;  // id -> index in merged
  for (cci::Corpus& part : parts) {
    for (cci::Dialogue& d : part.dialogues) {
      auto it = seen.find(d.id);
      if (it == seen.end()) {
        seen.emplace(d.id, merged.dialogues.size());
        merged.dialogues.push_back(std::move(d));
      } else if (!(merged.dialogues[it->second] == d)) {
        throw cci::ValidationError(d.id, "dialogue differs between inputs");
      }
    }
    for (cci::InferenceInstance& inst : part.instances) {
      merged.instances.push_back(std::move(inst));
    }
  }
  merged.reindex();
  cci::validate_corpus(merged);
  return merged;
}

void emit_report(const json& report, const std::string& out_path, bool pretty) {
  const std::string text = pretty ? report.dump(2) + "\n" : report.dump() + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    cci::write_file_atomic(out_path, text);
  }
}

void emit_text_atomic_or_stdout(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    cci::write_file_atomic(out_path, text);
  }
}

std::unique_ptr<cci::TaggerBackend> make_tagger(const std::string& kind,
                                                const std::string& sidecar_path) {
  if (kind == "bundled") return std::make_unique<cci::LexiconTagger>();
  if (kind == "sidecar") {
    if (sidecar_path.empty()) {
      throw cci::Error("--tagger sidecar requires --sidecar-file");
    }
    std::ifstream in(sidecar_path);
    if (!in) throw cci::Error("cannot open sidecar file '" + sidecar_path + "'");
    return std::make_unique<cci::SidecarTagger>(cci::SidecarTagger::load(in));
  }
  throw cci::Error("unknown tagger '" + kind + "'");
}

json stats_to_json(const cci::StatsReport& report, cci::Profile profile) {
  json per_source = json::object();
  for (const auto& [source, counts] : report.per_source) {
    per_source[std::string(cci::to_string(source))] = {{"dialogues", counts.dialogues},
                                                       {"instances", counts.instances}};
  }
  json dialogue_hist = json::object();
  for (const auto& [k, v] : report.dialogues_by_instance_count) {
    dialogue_hist[std::to_string(k)] = v;
  }
  json correct_hist = json::object();
  for (const auto& [k, v] : report.instances_by_correct_count) {
    correct_hist[std::to_string(k)] = v;
  }
  json splits = json::object();
  for (const auto& [split, type_counts] : report.per_split_type_counts) {
    json row = json::object();
    for (const auto& [type, count] : type_counts) {
      row[std::string(cci::to_string(type))] = count;
    }
    splits[std::string(cci::to_string(split))] = std::move(row);
  }
  const std::size_t max_count = report.dialogues_by_instance_count.empty()
                                    ? 0
                                    : report.dialogues_by_instance_count.rbegin()->first;
  const std::size_t max_correct = report.instances_by_correct_count.empty()
                                      ? 0
                                      : report.instances_by_correct_count.rbegin()->first;
  return json{
      {"profile", cci::to_string(profile)},
      {"total_dialogues", report.total_dialogues},
      {"total_instances", report.total_instances},
      {"per_source", std::move(per_source)},
      {"avg_correct_answers", report.avg_correct_answers},
      {"dialogues_by_instance_count", std::move(dialogue_hist)},
      {"dialogue_instance_buckets",
       {{"<4", report.dialogues_with_instance_count(0, 3)},
        {"4-8", report.dialogues_with_instance_count(4, 8)},
        {">8", report.dialogues_with_instance_count(9, std::max<std::size_t>(max_count, 9))},
        {"<10", report.dialogues_with_instance_count(0, 9)},
        {"10-20", report.dialogues_with_instance_count(10, 20)},
        {"21-30", report.dialogues_with_instance_count(21, 30)}}},
      {"instances_by_correct_count", std::move(correct_hist)},
      {"correct_count_buckets",
       {{"=1", report.instances_with_correct_count(1, 1)},
        {"=2", report.instances_with_correct_count(2, 2)},
        {"=3", report.instances_with_correct_count(3, 3)},
        {">2", report.instances_with_correct_count(3, std::max<std::size_t>(max_correct, 3))},
        {">3", report.instances_with_correct_count(4, std::max<std::size_t>(max_correct, 4))}}},
      {"per_split_question_types", std::move(splits)},
  };
}

json diversity_to_json(const std::array<cci::DiversityRow, 3>& rows) {
  auto opt = [](const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
  };
  json out = json::array();
  for (const cci::DiversityRow& row : rows) {
    out.push_back({{"pair_kind", cci::to_string(row.pair_kind)},
                   {"bleu1", opt(row.bleu1)},
                   {"bleu2", opt(row.bleu2)},
                   {"bleu4", opt(row.bleu4)},
                   {"rouge_l", opt(row.rouge_l)},
                   {"cider", opt(row.cider)},
                   {"sem_sim", opt(row.sem_sim)},
                   {"instances_with_pairs", row.instances_with_pairs}});
  }
  return json{{"rows", std::move(out)}};
}

json eval_to_json(const cci::EvalReport& report, bool verbose) {
  json per_type = json::object();
  for (const auto& [type, stats] : report.per_type) {
    per_type[std::string(cci::to_string(type))] = {{"count", stats.count},
                                                   {"hits", stats.hits},
                                                   {"exact_match", stats.exact_match}};
  }
  json out{{"per_type", std::move(per_type)},
           {"average_exact_match", report.average_exact_match},
           {"macro_f1", report.macro_f1},
           {"missing_predictions", report.missing_predictions},
           {"dropped_generated", report.dropped_generated}};
  if (verbose) {
    out["option_confusion"] = {
        {"tp", report.tp}, {"fp", report.fp}, {"fn", report.fn}, {"tn", report.tn}};
    out["f1_correct"] = report.f1_correct;
    out["f1_incorrect"] = report.f1_incorrect;
    out["precision_correct"] = report.precision_correct;
    out["recall_correct"] = report.recall_correct;
    out["per_instance_macro_f1"] = report.per_instance_macro_f1;
  }
  return out;
}

json build_report_to_json(const cci::BuildReport& report) {
  json counts = json::object();
  for (const auto& [tag, count] : report.counts) {
    counts[std::string(cci::to_string(tag))] = count;
  }
  json group_totals = json::object();
  for (cci::ObjectiveGroup g : {cci::ObjectiveGroup::po, cci::ObjectiveGroup::scao,
                                cci::ObjectiveGroup::co, cci::ObjectiveGroup::do_,
                                cci::ObjectiveGroup::so}) {
    std::size_t sum = 0;
    for (const auto& [tag, count] : report.counts) {
      if (cci::group_of(tag) == g) sum += count;
    }
    if (sum > 0) group_totals[std::string(cci::to_string(g))] = sum;
  }
  json skips = json::object();
  for (const auto& [reason, count] : report.skips) skips[reason] = count;
  return json{{"counts", std::move(counts)},
              {"group_totals", std::move(group_totals)},
              {"total", report.total()},
              {"skips", std::move(skips)}};
}

struct CommonOpts {
  std::string profile = "v2";
  std::string out;
  bool pretty = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Corpus toolkit for multiview contextual commonsense inference datasets"};
  app.require_subcommand(0, 1);
  bool show_version = false;
  app.add_flag("--version", show_version, "Print version and frozen template hash");

  // ---- validate -----------------------------------------------------------
  auto* validate_cmd = app.add_subcommand("validate", "Parse and validate a corpus file");
  std::string v_in;
  bool v_lint = false;
  CommonOpts v_opts;
  validate_cmd->add_option("--in", v_in, "Corpus JSONL")->required();
  validate_cmd->add_option("--profile", v_opts.profile, "v1, v2, or none")
      ->check(CLI::IsMember({"v1", "v2", "none"}));
  validate_cmd->add_flag("--lint-reactions", v_lint,
                         "Warn about correct reaction answers without an emotion term");
  validate_cmd->add_option("--out", v_opts.out, "Report path (default stdout)");
  validate_cmd->add_flag("--pretty", v_opts.pretty, "Pretty-print JSON");

  // ---- stats --------------------------------------------------------------
  auto* stats_cmd = app.add_subcommand("stats", "Dataset statistics report");
  std::vector<std::string> s_in;
  std::string s_splits;
  CommonOpts s_opts;
  stats_cmd->add_option("--in", s_in, "Corpus JSONL (repeat per split)")->required();
  stats_cmd->add_option("--splits", s_splits,
                        "Comma list of split labels aligned with --in (default: train)");
  stats_cmd->add_option("--profile", s_opts.profile)->check(CLI::IsMember({"v1", "v2", "none"}));
  stats_cmd->add_option("--out", s_opts.out, "Report path (default stdout)");
  stats_cmd->add_flag("--pretty", s_opts.pretty);

  // ---- build-objectives ----------------------------------------------------
  auto* build_cmd = app.add_subcommand("build-objectives",
                                       "Generate the pretraining corpus (JSONL)");
  std::string b_in, b_out, b_report, b_objectives = "po,scao,co,do,so";
  std::string b_scao2_style = "effect", b_scao1_order = "shuffled";
  std::string b_tagger = "bundled", b_sidecar;
  CommonOpts b_opts;
  b_opts.profile = "v1";
  std::uint64_t b_seed = cci::kDefaultSeed;
  std::size_t b_so1_cap = 0;
  int b_workers = 1;
  build_cmd->add_option("--in", b_in, "Training-split corpus JSONL")->required();
  build_cmd->add_option("--out", b_out, "Output JSONL path")->required();
  build_cmd->add_option("--report", b_report, "BuildReport path (default stdout)");
  build_cmd->add_option("--profile", b_opts.profile)->check(CLI::IsMember({"v1", "v2", "none"}));
  build_cmd->add_option("--seed", b_seed, "Master seed (default 1729)");
  build_cmd->add_option("--objectives", b_objectives, "Comma list of groups: po,scao,co,do,so");
  build_cmd->add_option("--scao2-label-style", b_scao2_style)
      ->check(CLI::IsMember({"effect", "subsequent_event"}));
  build_cmd->add_option("--scao1-order", b_scao1_order)
      ->check(CLI::IsMember({"shuffled", "dataset"}));
  build_cmd->add_option("--so1-cap", b_so1_cap, "Cap on the SO.i answer subset (0 = all)");
  build_cmd->add_option("--workers", b_workers, "Worker threads (output is order-stable)");
  build_cmd->add_option("--tagger", b_tagger)->check(CLI::IsMember({"bundled", "sidecar"}));
  build_cmd->add_option("--sidecar-file", b_sidecar, "Sidecar annotation JSONL");
  build_cmd->add_flag("--pretty", b_opts.pretty);

  // ---- diversity ------------------------------------------------------------
  auto* div_cmd = app.add_subcommand("diversity", "Pairwise answer-diversity table");
  std::vector<std::string> d_in;
  std::string d_embeddings;
  CommonOpts d_opts;
  int d_workers = 1;
  div_cmd->add_option("--in", d_in, "Corpus JSONL (repeatable; merged)")->required();
  div_cmd->add_option("--profile", d_opts.profile)->check(CLI::IsMember({"v1", "v2", "none"}));
  div_cmd->add_option("--embeddings", d_embeddings, "Embedding store for the Sem-Sim column");
  div_cmd->add_option("--workers", d_workers);
  div_cmd->add_option("--out", d_opts.out, "Report path (default stdout)");
  div_cmd->add_flag("--pretty", d_opts.pretty);

  // ---- evaluate --------------------------------------------------------------
  auto* eval_cmd = app.add_subcommand("evaluate", "Score multi-answer MCQ predictions");
  std::string e_gold, e_pred, e_missing = "abort";
  bool e_verbose = false;
  CommonOpts e_opts;
  eval_cmd->add_option("--gold", e_gold, "Gold corpus JSONL")->required();
  eval_cmd->add_option("--pred", e_pred, "Predictions JSONL")->required();
  eval_cmd->add_option("--profile", e_opts.profile)->check(CLI::IsMember({"v1", "v2", "none"}));
  eval_cmd->add_option("--missing", e_missing, "Missing-prediction policy")
      ->check(CLI::IsMember({"abort", "zero"}));
  eval_cmd->add_flag("--verbose", e_verbose, "Include confusion counts and extra F1 views");
  eval_cmd->add_option("--out", e_opts.out, "Report path (default stdout)");
  eval_cmd->add_flag("--pretty", e_opts.pretty);

  // ---- cull -------------------------------------------------------------------
  auto* cull_cmd = app.add_subcommand("cull", "Cull instances to exactly four options");
  std::string c_in, c_out;
  std::uint64_t c_seed = cci::kDefaultSeed;
  bool c_skip = false;
  CommonOpts c_opts;
  cull_cmd->add_option("--in", c_in)->required();
  cull_cmd->add_option("--out", c_out, "Culled corpus JSONL path")->required();
  cull_cmd->add_option("--profile", c_opts.profile)->check(CLI::IsMember({"v1", "v2", "none"}));
  cull_cmd->add_option("--seed", c_seed);
  cull_cmd->add_flag("--skip-ineligible", c_skip,
                     "Drop instances that cannot be culled instead of failing");
  cull_cmd->add_flag("--pretty", c_opts.pretty);

  // ---- stratify ------------------------------------------------------------------
  auto* strat_cmd = app.add_subcommand("stratify",
                                       "Lexical-overlap stratification of a test set");
  std::string st_train, st_test, st_method = "linear";
  int st_workers = 1;
  CommonOpts st_opts;
  strat_cmd->add_option("--train", st_train)->required();
  strat_cmd->add_option("--test", st_test)->required();
  strat_cmd->add_option("--profile", st_opts.profile)->check(CLI::IsMember({"v1", "v2", "none"}));
  strat_cmd->add_option("--quartile-method", st_method)
      ->check(CLI::IsMember({"linear", "nearest"}));
  strat_cmd->add_option("--workers", st_workers);
  strat_cmd->add_option("--out", st_opts.out, "Report path (default stdout)");
  strat_cmd->add_flag("--pretty", st_opts.pretty);

  // ---- sample-targets ----------------------------------------------------------
  auto* targets_cmd = app.add_subcommand("sample-targets",
                                         "List annotation-eligible target utterances");
  std::string t_in, t_tagger = "bundled", t_sidecar;
  CommonOpts t_opts;
  targets_cmd->add_option("--in", t_in)->required();
  targets_cmd->add_option("--profile", t_opts.profile)->check(CLI::IsMember({"v1", "v2", "none"}));
  targets_cmd->add_option("--tagger", t_tagger)->check(CLI::IsMember({"bundled", "sidecar"}));
  targets_cmd->add_option("--sidecar-file", t_sidecar);
  targets_cmd->add_option("--out", t_opts.out, "Targets JSONL path (default stdout)");

  // ---- subsample -----------------------------------------------------------------
  auto* sub_cmd = app.add_subcommand("subsample", "Nested low-resource subsample");
  std::string sub_in, sub_out;
  double sub_fraction = 1.0;
  std::uint64_t sub_seed = cci::kDefaultSeed;
  CommonOpts sub_opts;
  sub_cmd->add_option("--in", sub_in)->required();
  sub_cmd->add_option("--out", sub_out, "Subsampled corpus JSONL path")->required();
  sub_cmd->add_option("--fraction", sub_fraction, "Fraction in (0,1]")->required();
  sub_cmd->add_option("--profile", sub_opts.profile)->check(CLI::IsMember({"v1", "v2", "none"}));
  sub_cmd->add_option("--seed", sub_seed);
  sub_cmd->add_flag("--pretty", sub_opts.pretty);

  // ---- introspection ---------------------------------------------------------------
  auto* stop_cmd = app.add_subcommand("print-stopwords", "Print the bundled stopword list");
  auto* tmpl_cmd = app.add_subcommand("print-templates",
                                      "Print the frozen serialization templates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (show_version && app.get_subcommands().empty()) {
      std::cout << "cci " << kVersion << "\ntemplates sha256 " << cci::template_table_hash()
                << "\n";
      return 0;
    }
    if (app.get_subcommands().empty()) {
      std::cerr << app.help();
      return 2;
    }

    if (validate_cmd->parsed()) {
      cci::Corpus corpus = load_corpus(v_in, cci::profile_from_string(v_opts.profile));
      json report{{"status", "ok"},
                  {"profile", v_opts.profile},
                  {"dialogues", corpus.dialogues.size()},
                  {"instances", corpus.instances.size()}};
      if (v_lint) {
        json warnings = json::array();
        for (const cci::LintWarning& w :
             cci::lint_reaction_answers(corpus, cci::bundled_emotion_lexicon())) {
          warnings.push_back({{"instance_id", w.instance_id},
                              {"option_index", w.option_index},
                              {"message", w.message}});
        }
        report["reaction_lint_warnings"] = std::move(warnings);
      }
      emit_report(report, v_opts.out, v_opts.pretty);
    } else if (stats_cmd->parsed()) {
      std::vector<cci::Split> splits;
      if (!s_splits.empty()) {
        std::stringstream ss(s_splits);
        std::string label;
        while (std::getline(ss, label, ',')) splits.push_back(cci::split_from_string(label));
        if (splits.size() != s_in.size()) {
          throw cci::Error("--splits must list one label per --in file");
        }
      } else {
        splits.assign(s_in.size(), cci::Split::train);
      }
      const cci::Profile profile = cci::profile_from_string(s_opts.profile);
      std::vector<cci::Corpus> corpora;
      for (std::size_t i = 0; i < s_in.size(); ++i) {
        corpora.push_back(load_corpus(s_in[i], profile, splits[i]));
      }
      emit_report(stats_to_json(cci::compute_stats(corpora), profile), s_opts.out,
                  s_opts.pretty);
    } else if (build_cmd->parsed()) {
      cci::BuildConfig config;
      config.master_seed = b_seed;
      config.groups.clear();
      std::stringstream ss(b_objectives);
      std::string group;
      while (std::getline(ss, group, ',')) {
        config.groups.insert(cci::objective_group_from_string(group));
      }
      config.scao2_label_style = b_scao2_style == "effect"
                                     ? cci::Scao2LabelStyle::effect
                                     : cci::Scao2LabelStyle::subsequent_event;
      config.scao1_order = b_scao1_order == "shuffled" ? cci::Scao1Order::shuffled
                                                       : cci::Scao1Order::dataset;
      config.so1_subset_cap = b_so1_cap;
      config.workers = b_workers;
      auto tagger = make_tagger(b_tagger, b_sidecar);
      cci::Corpus corpus = load_corpus(b_in, cci::profile_from_string(b_opts.profile));
      auto [examples, report] = cci::build_all(corpus, config, *tagger);
      std::ostringstream lines;
      cci::serialize_examples(examples, lines);
      cci::write_file_atomic(b_out, lines.str());
      emit_report(build_report_to_json(report), b_report, b_opts.pretty);
    } else if (div_cmd->parsed()) {
      const cci::Profile profile = cci::profile_from_string(d_opts.profile);
      std::vector<cci::Corpus> parts;
      for (const std::string& path : d_in) parts.push_back(load_corpus(path, profile));
      cci::Corpus corpus = merge_corpora(std::move(parts));
      cci::EmbeddingStore store;
      cci::DiversityOptions options;
      options.workers = d_workers;
      if (!d_embeddings.empty()) {
        std::ifstream in(d_embeddings);
        if (!in) throw cci::Error("cannot open embedding store '" + d_embeddings + "'");
        store = cci::EmbeddingStore::load(in);
        options.store = &store;
      }
      emit_report(diversity_to_json(cci::diversity_table(corpus, options)), d_opts.out,
                  d_opts.pretty);
    } else if (eval_cmd->parsed()) {
      cci::Corpus gold = load_corpus(e_gold, cci::profile_from_string(e_opts.profile));
      std::ifstream pred_in(e_pred);
      if (!pred_in) throw cci::Error("cannot open predictions file '" + e_pred + "'");
      std::vector<cci::PredictionRecord> predictions = cci::parse_predictions(pred_in);
      cci::EvalConfig config;
      config.missing = e_missing == "abort" ? cci::MissingPolicy::abort
                                            : cci::MissingPolicy::count_as_empty;
      config.verbose = e_verbose;
      emit_report(eval_to_json(cci::evaluate(predictions, gold, config), e_verbose),
                  e_opts.out, e_opts.pretty);
    } else if (cull_cmd->parsed()) {
      cci::Corpus corpus = load_corpus(c_in, cci::profile_from_string(c_opts.profile));
      cci::Corpus culled;
      culled.profile = corpus.profile;
      culled.split = corpus.split;
      culled.dialogues = corpus.dialogues;
      std::size_t skipped = 0;
      for (const cci::InferenceInstance& inst : corpus.instances) {
        cci::Rng rng(cci::derive_seed(c_seed, inst.id, "cull"));
        if (c_skip && (inst.options.size() < 4 || inst.correct_indices.size() < 2)) {
          ++skipped;
          continue;
        }
        culled.instances.push_back(cci::cull_to_four(inst, rng));
      }
      culled.reindex();
      std::ostringstream lines;
      cci::serialize_corpus(culled, lines);
      cci::write_file_atomic(c_out, lines.str());
      emit_report(json{{"culled", culled.instances.size()}, {"skipped", skipped}}, "",
                  c_opts.pretty);
    } else if (strat_cmd->parsed()) {
      const cci::Profile profile = cci::profile_from_string(st_opts.profile);
      cci::Corpus train = load_corpus(st_train, profile, cci::Split::train);
      cci::Corpus test = load_corpus(st_test, profile, cci::Split::test);
      cci::StratifyConfig config;
      config.method = st_method == "linear" ? cci::QuartileMethod::linear
                                            : cci::QuartileMethod::nearest;
      config.workers = st_workers;
      cci::StratificationReport report = cci::stratify_by_rouge(train, test, config);
      emit_report(json{{"quartile_method", cci::to_string(report.method)},
                       {"low_threshold", report.low_threshold},
                       {"high_threshold", report.high_threshold},
                       {"low_group_size", report.low_group.size()},
                       {"high_group_size", report.high_group.size()},
                       {"low_rc", report.low_rc},
                       {"low_ri", report.low_ri},
                       {"high_rc", report.high_rc},
                       {"high_ri", report.high_ri},
                       {"low_group", report.low_group},
                       {"high_group", report.high_group}},
                  st_opts.out, st_opts.pretty);
    } else if (targets_cmd->parsed()) {
      auto tagger = make_tagger(t_tagger, t_sidecar);
      cci::Corpus corpus = load_corpus(t_in, cci::profile_from_string(t_opts.profile));
      std::ostringstream lines;
      for (const cci::TargetRef& ref : cci::sample_annotation_targets(corpus, *tagger)) {
        lines << json{{"dialogue_id", ref.dialogue_id}, {"target_index", ref.target_index}}
                     .dump()
              << '\n';
      }
      emit_text_atomic_or_stdout(lines.str(), t_opts.out);
    } else if (sub_cmd->parsed()) {
      cci::Corpus corpus = load_corpus(sub_in, cci::profile_from_string(sub_opts.profile));
      cci::Corpus sample = cci::subsample_fraction(corpus, sub_fraction, sub_seed);
      std::ostringstream lines;
      cci::serialize_corpus(sample, lines);
      cci::write_file_atomic(sub_out, lines.str());
      emit_report(json{{"instances", sample.instances.size()},
                       {"dialogues", sample.dialogues.size()},
                       {"fraction", sub_fraction},
                       {"seed", sub_seed}},
                  "", sub_opts.pretty);
    } else if (stop_cmd->parsed()) {
      for (const std::string& word : cci::bundled_stopwords()) std::cout << word << '\n';
    } else if (tmpl_cmd->parsed()) {
      std::cout << cci::template_table();
      std::cout << "sha256 " << cci::template_table_hash() << "\n";
    }
  } catch (const cci::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
