#include <sstream>

#include "cci/evalkit.hpp"
#include "cci/rng.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace cci;

namespace {

PredictionRecord select(const std::string& id, std::vector<std::size_t> indices) {
  PredictionRecord p;
  p.instance_id = id;
  p.selected_indices = std::move(indices);
  return p;
}

}  // namespace

TEST_CASE("match_generated_to_options: exact normalized matching") {
  const std::vector<std::string> options = testutil::gen1_cause_instance().options;

  SUBCASE("the reference answer maps to option 3") {
    const std::vector<std::string> generated{
        "David is driving very fast to flaunt his driving skills to the speaker."};
    MatchResult result = match_generated_to_options(generated, options);
    CHECK(result.indices == std::set<std::size_t>{3});
    CHECK(result.dropped == 0);
  }
  SUBCASE("whitespace and case are normalized") {
    const std::vector<std::string> generated{
        "  david is DRIVING very fast to flaunt his driving skills to the speaker. "};
    MatchResult result = match_generated_to_options(generated, options);
    CHECK(result.indices == std::set<std::size_t>{3});
  }
  SUBCASE("empty input maps to the empty set") {
    MatchResult result = match_generated_to_options({}, options);
    CHECK(result.indices.empty());
    CHECK(result.dropped == 0);
  }
  SUBCASE("unmatched texts are dropped and counted") {
    const std::vector<std::string> generated{"Nothing like any option."};
    MatchResult result = match_generated_to_options(generated, options);
    CHECK(result.indices.empty());
    CHECK(result.dropped == 1);
  }
}

TEST_CASE("exact_match: set equality, not subset or superset") {
  InferenceInstance gold = testutil::make_instance("g", "d", 0, QuestionType::cause, 4, {0, 1});
  CHECK(exact_match({0, 1}, gold) == 1);
  CHECK(exact_match({0}, gold) == 0);
  CHECK(exact_match({0, 1, 2}, gold) == 0);
  CHECK(exact_match({}, gold) == 0);
  CHECK_THROWS_AS(exact_match({9}, gold), ValidationError);
}

TEST_CASE("evaluate: all predictions exactly correct") {
  Corpus corpus = testutil::make_corpus(
      {testutil::make_dialogue("d1", 4)},
      {testutil::make_instance("i1", "d1", 0, QuestionType::cause, 4, {0, 1}),
       testutil::make_instance("i2", "d1", 1, QuestionType::reaction, 4, {1, 2})});
  std::vector<PredictionRecord> preds{select("i1", {0, 1}), select("i2", {1, 2})};
  EvalReport report = evaluate(preds, corpus);
  CHECK(report.average_exact_match == doctest::Approx(1.0));
  CHECK(report.macro_f1 == doctest::Approx(1.0));
  CHECK(report.per_type.at(QuestionType::cause).exact_match == doctest::Approx(1.0));
  CHECK(report.per_type.at(QuestionType::reaction).exact_match == doctest::Approx(1.0));
}

TEST_CASE("evaluate: all-empty predictions on a three-instance corpus") {
  // Each instance: 4 options, 2 correct. Empty predictions give, per
  // instance, FN = 2 and TN = 2; pooled TP = FP = 0, FN = TN = 6.
  // F1(correct) = 0; F1(incorrect) = 2*6 / (2*6 + 6 + 0) = 2/3;
  // macro-F1 = 1/3.
  std::vector<InferenceInstance> instances;
  for (int i = 0; i < 3; ++i) {
    instances.push_back(testutil::make_instance("i" + std::to_string(i), "d1",
                                                static_cast<std::size_t>(i),
                                                QuestionType::cause, 4, {0, 1}));
  }
  Corpus corpus = testutil::make_corpus({testutil::make_dialogue("d1", 3)}, instances);
  std::vector<PredictionRecord> preds;
  for (int i = 0; i < 3; ++i) preds.push_back(select("i" + std::to_string(i), {}));
  EvalReport report = evaluate(preds, corpus);
  CHECK(report.average_exact_match == doctest::Approx(0.0));
  CHECK(report.tp == 0);
  CHECK(report.fp == 0);
  CHECK(report.fn == 6);
  CHECK(report.tn == 6);
  CHECK(report.f1_correct == doctest::Approx(0.0));
  CHECK(report.f1_incorrect == doctest::Approx(2.0 / 3.0));
  CHECK(report.macro_f1 == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("evaluate: one hit and one miss across two types") {
  Corpus corpus = testutil::make_corpus(
      {testutil::make_dialogue("d1", 4)},
      {testutil::make_instance("i1", "d1", 0, QuestionType::cause, 4, {0, 1}),
       testutil::make_instance("i2", "d1", 1, QuestionType::reaction, 4, {1, 2})});
  std::vector<PredictionRecord> preds{select("i1", {0, 1}), select("i2", {0, 3})};
  EvalReport report = evaluate(preds, corpus);
  CHECK(report.per_type.at(QuestionType::cause).exact_match == doctest::Approx(1.0));
  CHECK(report.per_type.at(QuestionType::reaction).exact_match == doctest::Approx(0.0));
  CHECK(report.average_exact_match == doctest::Approx(0.5));
}

TEST_CASE("evaluate: generated-text predictions resolve through the options") {
  Corpus corpus = testutil::make_corpus({testutil::gen1_dialogue()},
                                        {testutil::gen1_cause_instance()}, Profile::v1);
  PredictionRecord p;
  p.instance_id = "i-gen1-cause";
  p.generated_texts = std::vector<std::string>{
      "David is driving very fast to flaunt his driving skills to the speaker.",
      "some unmatched generation"};
  EvalReport report = evaluate(std::vector<PredictionRecord>{p}, corpus);
  CHECK(report.average_exact_match == doctest::Approx(1.0));
  CHECK(report.dropped_generated == 1);
}

TEST_CASE("evaluate: resolution errors") {
  Corpus corpus = testutil::make_corpus(
      {testutil::make_dialogue("d1", 3)},
      {testutil::make_instance("i1", "d1", 0, QuestionType::cause, 4, {0, 1})});

  SUBCASE("unknown instance id") {
    CHECK_THROWS_WITH_AS(
        evaluate(std::vector<PredictionRecord>{select("ghost", {0})}, corpus),
        doctest::Contains("ghost"), ValidationError);
  }
  SUBCASE("duplicate prediction") {
    std::vector<PredictionRecord> preds{select("i1", {0, 1}), select("i1", {0, 1})};
    CHECK_THROWS_WITH_AS(evaluate(preds, corpus), doctest::Contains("more than once"),
                         ValidationError);
  }
  SUBCASE("missing prediction aborts by default") {
    CHECK_THROWS_WITH_AS(evaluate({}, corpus), doctest::Contains("no prediction"),
                         ValidationError);
  }
  SUBCASE("missing prediction counted as empty when configured") {
    EvalConfig config;
    config.missing = MissingPolicy::count_as_empty;
    EvalReport report = evaluate({}, corpus, config);
    CHECK(report.missing_predictions == 1);
    CHECK(report.average_exact_match == doctest::Approx(0.0));
  }
}

TEST_CASE("evaluate: permutation invariant over prediction order") {
  std::vector<InferenceInstance> instances;
  std::vector<PredictionRecord> preds;
  Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    const std::string id = "i" + std::to_string(i);
    instances.push_back(testutil::make_instance(id, "d1", static_cast<std::size_t>(i % 3),
                                                kQuestionTypes[i % 5], 5, {0, 1}));
    preds.push_back(select(id, i % 3 == 0 ? std::vector<std::size_t>{0, 1}
                                          : std::vector<std::size_t>{0, 4}));
  }
  Corpus corpus = testutil::make_corpus({testutil::make_dialogue("d1", 3)}, instances,
                                        Profile::v1);
  EvalReport base = evaluate(preds, corpus);
  rng.shuffle(preds);
  EvalReport shuffled = evaluate(preds, corpus);
  CHECK(base.average_exact_match == doctest::Approx(shuffled.average_exact_match));
  CHECK(base.macro_f1 == doctest::Approx(shuffled.macro_f1));
  CHECK(base.tp == shuffled.tp);
  CHECK(base.tn == shuffled.tn);
}

TEST_CASE("evaluate: per-type rates bound the overall rate") {
  std::vector<InferenceInstance> instances;
  std::vector<PredictionRecord> preds;
  for (int i = 0; i < 15; ++i) {
    const std::string id = "i" + std::to_string(i);
    instances.push_back(testutil::make_instance(id, "d1", static_cast<std::size_t>(i % 3),
                                                kQuestionTypes[i % 5], 5, {0, 1}));
    preds.push_back(select(id, i % 2 == 0 ? std::vector<std::size_t>{0, 1}
                                          : std::vector<std::size_t>{2}));
  }
  Corpus corpus = testutil::make_corpus({testutil::make_dialogue("d1", 3)}, instances,
                                        Profile::v1);
  EvalReport report = evaluate(preds, corpus);
  double min_rate = 1.0, max_rate = 0.0;
  for (const auto& [type, stats] : report.per_type) {
    min_rate = std::min(min_rate, stats.exact_match);
    max_rate = std::max(max_rate, stats.exact_match);
  }
  CHECK(report.average_exact_match >= min_rate - 1e-12);
  CHECK(report.average_exact_match <= max_rate + 1e-12);
}

TEST_CASE("evaluate: complemented predictions keep macro-F1 below 1") {
  Corpus corpus = testutil::make_corpus(
      {testutil::make_dialogue("d1", 3)},
      {testutil::make_instance("i1", "d1", 0, QuestionType::cause, 4, {0, 1})});
  // complement of the gold set: select exactly the incorrect options
  std::vector<PredictionRecord> preds{select("i1", {2, 3})};
  EvalReport report = evaluate(preds, corpus);
  CHECK(report.macro_f1 < 1.0);
  CHECK(report.average_exact_match == doctest::Approx(0.0));
}

TEST_CASE("parse_predictions: both wire forms and malformed input") {
  std::istringstream in(
      R"({"instance_id":"a","selected_indices":[0,2]}
{"instance_id":"b","generated":["some text"]}
)");
  auto preds = parse_predictions(in);
  REQUIRE(preds.size() == 2);
  CHECK(preds[0].selected_indices.has_value());
  CHECK(preds[1].generated_texts.has_value());

  std::istringstream bad(R"({"instance_id":"a"})");
  CHECK_THROWS_AS(parse_predictions(bad), ParseError);
}
