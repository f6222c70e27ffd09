#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cci/corpus.hpp"

namespace cci {

/// Metric tokenization: lowercase, punctuation removed, whitespace split.
std::vector<std::string> metric_tokenize(std::string_view text);

/// Modified n-gram precision BLEU with brevity penalty and no smoothing:
/// any zero precision zeroes the score. The geometric mean runs over orders
/// n <= max_n where candidate or reference has at least one n-gram, so
/// identical inputs score 1 at any length; an order where only one side has
/// n-grams contributes a zero precision. Empty candidate -> 0.
double bleu(std::string_view candidate, std::string_view reference, int max_n);

struct RougeL {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// LCS-based ROUGE-L; empty candidate or reference -> all zeros.
RougeL rouge_l(std::string_view candidate, std::string_view reference);

/// Clipped unigram matches / candidate length; empty candidate -> 0.
double rouge1_precision(std::string_view candidate, std::string_view reference);

/// Document frequencies of 1..4-grams over the measured answer population.
/// Every added document counts once per distinct n-gram it contains.
class DocumentFrequency {
 public:
  void add_document(std::string_view text);
  std::size_t corpus_size() const { return corpus_size_; }
  std::size_t df(const std::string& ngram_key) const;

  /// Smooth idf, ln((1 + N) / (1 + df)) + 1. Strictly positive, so identical
  /// sentences always score 1 even when an n-gram occurs in every document.
  double idf(const std::string& ngram_key) const;

  static std::string ngram_key(std::span<const std::string> tokens, std::size_t pos,
                               std::size_t n);

 private:
  std::unordered_map<std::string, std::size_t> df_;
  std::size_t corpus_size_ = 0;
};

/// Mean over n = 1..4 of the cosine between tf-idf n-gram vectors. Orders
/// where neither side has n-grams are skipped; an order where only the
/// candidate lacks them contributes 0. No x10 scaling: scores live in [0,1].
double cider(std::string_view candidate, std::string_view reference,
             const DocumentFrequency& df);

/// Unit-norm vectors keyed by exact answer string, loaded from a sidecar
/// file: header "dim=<int>", then JSONL {"text":str,"vec":[float]}.
class EmbeddingStore {
 public:
  static EmbeddingStore load(std::istream& in);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }
  bool contains(std::string_view text) const;
  const std::vector<double>& vector_for(std::string_view text) const;  // throws if absent

  void insert(std::string text, std::vector<double> vec);  // validates norm/dim

 private:
  std::unordered_map<std::string, std::vector<double>> vectors_;
  std::size_t dim_ = 0;
};

/// Dot product of the stored unit vectors, clamped to [0,1] for reporting.
double semantic_similarity(std::string_view a, std::string_view b, const EmbeddingStore& store);

enum class PairKind { cc, ii, ci };
std::string_view to_string(PairKind kind);

struct DiversityRow {
  PairKind pair_kind = PairKind::cc;
  std::optional<double> bleu1, bleu2, bleu4, rouge_l, cider, sem_sim;
  std::size_t instances_with_pairs = 0;
};

struct DiversityOptions {
  const EmbeddingStore* store = nullptr;  // sem_sim omitted when null
  int workers = 1;
};

/// Instance-level average pairwise similarity for (correct, correct),
/// (incorrect, incorrect), and (correct, incorrect) answer pairs, averaged
/// across instances that can form at least one pair of the kind. Asymmetric
/// metrics are averaged over both orientations. The CIDEr document
/// frequencies are built over every answer in the corpus.
std::array<DiversityRow, 3> diversity_table(const Corpus& corpus,
                                            const DiversityOptions& options = {});

}  // namespace cci
