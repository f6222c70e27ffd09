#include <cmath>
#include <sstream>

#include "cci/metrics.hpp"
#include "cci/rng.hpp"
#include "doctest.h"
#include "oracle_metrics.hpp"
#include "testutil.hpp"

using namespace cci;

namespace {

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += tokens[i];
  }
  return out;
}

std::vector<std::string> random_tokens(Rng& rng, std::size_t max_len, std::size_t min_len = 0) {
  static const std::vector<std::string> vocab{"cat", "dog", "the", "a", "runs", "fast",
                                              "cookie", "banana"};
  const std::size_t len =
      min_len + static_cast<std::size_t>(rng.below(max_len - min_len + 1));
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < len; ++i) {
    tokens.push_back(vocab[rng.below(vocab.size())]);
  }
  return tokens;
}

}  // namespace

TEST_CASE("metric_tokenize: lowercase, punctuation stripped, whitespace split") {
  CHECK(metric_tokenize("The cat, runs FAST!") ==
        std::vector<std::string>{"the", "cat", "runs", "fast"});
  CHECK(metric_tokenize("   ").empty());
  CHECK(metric_tokenize("?!...").empty());
}

TEST_CASE("bleu: reference examples") {
  CHECK(bleu("the cat", "the cat", 4) == doctest::Approx(1.0));
  CHECK(bleu("the cat", "the dog", 1) == doctest::Approx(0.5));
  CHECK(bleu("apple pear", "cookie banana", 1) == doctest::Approx(0.0));
  CHECK(bleu("", "the dog", 4) == doctest::Approx(0.0));
  CHECK(bleu("a", "a", 4) == doctest::Approx(1.0));  // identity at any length
}

TEST_CASE("bleu: monotone over max_n") {
  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string cand = join(random_tokens(rng, 10, 1));
    const std::string ref = join(random_tokens(rng, 10, 1));
    const double b1 = bleu(cand, ref, 1);
    const double b2 = bleu(cand, ref, 2);
    const double b4 = bleu(cand, ref, 4);
    CHECK(b1 >= b2 - 1e-12);
    CHECK(b2 >= b4 - 1e-12);
  }
}

TEST_CASE("rouge_l: reference examples") {
  RougeL r = rouge_l("a b c", "a c");
  CHECK(r.precision == doctest::Approx(2.0 / 3.0));
  CHECK(r.recall == doctest::Approx(1.0));
  CHECK(r.f1 == doctest::Approx(0.8));

  RougeL identity = rouge_l("same words here", "same words here");
  CHECK(identity.precision == doctest::Approx(1.0));
  CHECK(identity.recall == doctest::Approx(1.0));
  CHECK(identity.f1 == doctest::Approx(1.0));

  RougeL disjoint = rouge_l("a b", "c d");
  CHECK(disjoint.f1 == doctest::Approx(0.0));

  RougeL empty = rouge_l("", "a b");
  CHECK(empty.precision == 0.0);
  CHECK(empty.recall == 0.0);
  CHECK(empty.f1 == 0.0);
}

TEST_CASE("rouge1_precision: reference examples") {
  CHECK(rouge1_precision("a b", "b c") == doctest::Approx(0.5));
  CHECK(rouge1_precision("b a", "a a b c") == doctest::Approx(1.0));  // multiset subset
  CHECK(rouge1_precision("a b", "c d") == doctest::Approx(0.0));
  CHECK(rouge1_precision("", "c d") == doctest::Approx(0.0));
}

TEST_CASE("cider: identity and disjoint conventions") {
  DocumentFrequency df;
  df.add_document("the cat runs fast today");
  df.add_document("a dog runs");
  CHECK(cider("the cat runs fast", "the cat runs fast", df) == doctest::Approx(1.0));
  CHECK(cider("a", "a", df) == doctest::Approx(1.0));  // short identity
  CHECK(cider("cat dog", "cookie banana", df) == doctest::Approx(0.0));
  CHECK(cider("", "", df) == doctest::Approx(0.0));
}

TEST_CASE("cider: two-sentence toy corpus matches the precomputed oracle value") {
  DocumentFrequency df;
  df.add_document("a b");
  df.add_document("b c");
  // brute-force tf-idf cosine computed independently before the build
  CHECK(cider("a b", "b c", df) == doctest::Approx(0.16804846363812873).epsilon(1e-9));

  oracle::Df odf;
  odf.add({"a", "b"});
  odf.add({"b", "c"});
  CHECK(cider("a b", "b c", df) ==
        doctest::Approx(oracle::cider({"a", "b"}, {"b", "c"}, odf)).epsilon(1e-12));
}

TEST_CASE("lexical metrics agree with the brute-force oracle") {
  Rng rng(1234);
  oracle::Df odf;
  std::vector<std::vector<std::string>> docs;
  for (int i = 0; i < 60; ++i) {
    docs.push_back(random_tokens(rng, 10));
    odf.add(docs.back());
  }
  DocumentFrequency df;
  for (const auto& doc : docs) df.add_document(join(doc));

  for (int trial = 0; trial < 300; ++trial) {
    const std::vector<std::string> a = random_tokens(rng, 10);
    const std::vector<std::string> b = random_tokens(rng, 10);
    const std::string sa = join(a), sb = join(b);
    for (int n : {1, 2, 4}) {
      CHECK(bleu(sa, sb, n) == doctest::Approx(oracle::bleu(a, b, n)).epsilon(1e-9));
    }
    CHECK(rouge_l(sa, sb).f1 == doctest::Approx(oracle::rouge_l(a, b).f1).epsilon(1e-9));
    CHECK(rouge1_precision(sa, sb) ==
          doctest::Approx(oracle::rouge1_precision(a, b)).epsilon(1e-9));
    CHECK(cider(sa, sb, df) == doctest::Approx(oracle::cider(a, b, odf)).epsilon(1e-9));
  }
}

TEST_CASE("embedding store: load, lookup, and validation") {
  std::ostringstream file;
  file << "dim=2\n";
  file << R"({"text":"east","vec":[1.0,0.0]})" << "\n";
  file << R"({"text":"north","vec":[0.0,1.0]})" << "\n";
  file << R"({"text":"sixty","vec":[0.5,0.8660254037844386]})" << "\n";
  std::istringstream in(file.str());
  EmbeddingStore store = EmbeddingStore::load(in);
  CHECK(store.dim() == 2);
  CHECK(store.size() == 3);

  CHECK(semantic_similarity("east", "east", store) == doctest::Approx(1.0));
  CHECK(semantic_similarity("east", "north", store) == doctest::Approx(0.0));
  CHECK(semantic_similarity("east", "sixty", store) == doctest::Approx(0.5));  // cos 60 deg

  CHECK_THROWS_WITH_AS(semantic_similarity("east", "missing", store),
                       doctest::Contains("missing"), Error);

  EmbeddingStore direct;
  CHECK_THROWS_WITH_AS(direct.insert("bad", {0.5, 0.5}), doctest::Contains("unit-norm"),
                       Error);
  direct.insert("ok", {1.0, 0.0});
  CHECK_THROWS_WITH_AS(direct.insert("short", {1.0}), doctest::Contains("dimension"), Error);
}

TEST_CASE("embedding store: header required") {
  std::istringstream no_header(R"({"text":"x","vec":[1.0]})");
  CHECK_THROWS_WITH_AS(EmbeddingStore::load(no_header), doctest::Contains("dim="), Error);
}

TEST_CASE("diversity_table: identical answers score 1.0 on lexical metrics") {
  // constructed directly; identical options would fail parse-time validation
  Dialogue d = testutil::make_dialogue("d1", 3);
  InferenceInstance inst;
  inst.id = "i1";
  inst.dialogue_id = "d1";
  inst.target_index = 0;
  inst.question_type = QuestionType::cause;
  inst.options = {"same answer text", "same answer text", "same answer text",
                  "same answer text"};
  inst.correct_indices = {0, 1};
  Corpus corpus = testutil::make_corpus({d}, {inst});

  auto rows = diversity_table(corpus);
  for (const DiversityRow& row : rows) {
    REQUIRE(row.bleu1.has_value());
    CHECK(*row.bleu1 == doctest::Approx(1.0));
    CHECK(*row.bleu4 == doctest::Approx(1.0));
    CHECK(*row.rouge_l == doctest::Approx(1.0));
    CHECK(*row.cider == doctest::Approx(1.0));
    CHECK_FALSE(row.sem_sim.has_value());  // no store supplied
  }
}

TEST_CASE("diversity_table: instances only contribute pair kinds they can form") {
  Dialogue d = testutil::make_dialogue("d1", 3);
  // one correct, two incorrect: no (C,C) pair anywhere
  InferenceInstance inst = testutil::make_instance("i1", "d1", 0, QuestionType::cause, 3, {0});
  Corpus corpus = testutil::make_corpus({d}, {inst}, Profile::v1);
  auto rows = diversity_table(corpus);
  CHECK(rows[0].instances_with_pairs == 0);
  CHECK_FALSE(rows[0].bleu1.has_value());
  CHECK(rows[1].instances_with_pairs == 1);
  CHECK(rows[2].instances_with_pairs == 1);
}

TEST_CASE("diversity_table: invariant under instance reordering") {
  std::vector<InferenceInstance> instances;
  Rng rng(5);
  for (int i = 0; i < 8; ++i) {
    InferenceInstance inst;
    inst.id = "i" + std::to_string(i);
    inst.dialogue_id = "d1";
    inst.target_index = 0;
    inst.question_type = kQuestionTypes[i % 5];
    for (int k = 0; k < 5; ++k) {
      inst.options.push_back(join(random_tokens(rng, 8, 2)) + " #" + std::to_string(k));
    }
    inst.correct_indices = {0, 2};
    instances.push_back(inst);
  }
  Corpus corpus =
      testutil::make_corpus({testutil::make_dialogue("d1", 3)}, instances, Profile::v1);
  auto base = diversity_table(corpus);
  rng.shuffle(corpus.instances);
  auto shuffled = diversity_table(corpus);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(*base[k].bleu1 == doctest::Approx(*shuffled[k].bleu1).epsilon(1e-12));
    CHECK(*base[k].cider == doctest::Approx(*shuffled[k].cider).epsilon(1e-12));
    CHECK(*base[k].rouge_l == doctest::Approx(*shuffled[k].rouge_l).epsilon(1e-12));
  }
}

TEST_CASE("diversity_table: sem_sim appears when a store is supplied") {
  Dialogue d = testutil::make_dialogue("d1", 3);
  InferenceInstance inst = testutil::make_instance("i1", "d1", 0, QuestionType::cause, 4, {0, 1});
  Corpus corpus = testutil::make_corpus({d}, {inst});

  EmbeddingStore store;
  store.insert(inst.options[0], {1.0, 0.0});
  store.insert(inst.options[1], {1.0, 0.0});
  store.insert(inst.options[2], {0.0, 1.0});
  store.insert(inst.options[3], {0.0, 1.0});
  DiversityOptions options;
  options.store = &store;
  auto rows = diversity_table(corpus, options);
  REQUIRE(rows[0].sem_sim.has_value());
  CHECK(*rows[0].sem_sim == doctest::Approx(1.0));  // (C,C): identical embeddings
  CHECK(*rows[1].sem_sim == doctest::Approx(1.0));  // (I,I)
  CHECK(*rows[2].sem_sim == doctest::Approx(0.0));  // (C,I): orthogonal
}
