#include "cci/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <numeric>

#include "cci/util.hpp"
#include "json.hpp"

namespace cci {

using nlohmann::json;

std::vector<std::string> metric_tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (unsigned char c : text) {
    if (std::isspace(c)) {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
    } else if (std::isalnum(c) || c >= 0x80) {
      current.push_back(static_cast<char>(std::tolower(c)));
    }
    // punctuation is removed, not treated as a separator
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

namespace {

constexpr char kGramSep = '\x1f';

using Counts = std::unordered_map<std::string, std::size_t>;

std::string gram_at(std::span<const std::string> tokens, std::size_t pos, std::size_t n) {
  std::string key;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) key += kGramSep;
    key += tokens[pos + k];
  }
  return key;
}

Counts ngram_counts(std::span<const std::string> tokens, std::size_t n) {
  Counts counts;
  if (tokens.size() >= n && n > 0) {
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) ++counts[gram_at(tokens, i, n)];
  }
  return counts;
}

std::size_t total(const Counts& counts) {
  std::size_t sum = 0;
  for (const auto& [k, v] : counts) sum += v;
  return sum;
}

}  // namespace

double bleu(std::string_view candidate, std::string_view reference, int max_n) {
  const std::vector<std::string> cand = metric_tokenize(candidate);
  const std::vector<std::string> ref = metric_tokenize(reference);
  if (cand.empty()) return 0.0;

  double log_sum = 0.0;
  int active = 0;
  for (int n = 1; n <= max_n; ++n) {
    const std::size_t nn = static_cast<std::size_t>(n);
    const bool cand_has = cand.size() >= nn;
    const bool ref_has = ref.size() >= nn;
    if (!cand_has && !ref_has) continue;  // vacuous order
    ++active;
    if (!cand_has || !ref_has) return 0.0;
    const Counts cand_counts = ngram_counts(cand, nn);
    const Counts ref_counts = ngram_counts(ref, nn);
    std::size_t matched = 0;
    for (const auto& [gram, count] : cand_counts) {
      auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) matched += std::min(count, it->second);
    }
    if (matched == 0) return 0.0;
    log_sum += std::log(static_cast<double>(matched) / static_cast<double>(total(cand_counts)));
  }
  if (active == 0) return 0.0;
  const double precision = std::exp(log_sum / active);
  const double bp = cand.size() >= ref.size()
                        ? 1.0
                        : std::exp(1.0 - static_cast<double>(ref.size()) /
                                             static_cast<double>(cand.size()));
  return bp * precision;
}

namespace {

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b) {
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> curr(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      curr[j] = (a[i - 1] == b[j - 1]) ? prev[j - 1] + 1 : std::max(prev[j], curr[j - 1]);
    }
    std::swap(prev, curr);
  }
  return prev[b.size()];
}

}  // namespace

RougeL rouge_l(std::string_view candidate, std::string_view reference) {
  const std::vector<std::string> cand = metric_tokenize(candidate);
  const std::vector<std::string> ref = metric_tokenize(reference);
  if (cand.empty() || ref.empty()) return {};
  const double lcs = static_cast<double>(lcs_length(cand, ref));
  RougeL r;
  r.precision = lcs / static_cast<double>(cand.size());
  r.recall = lcs / static_cast<double>(ref.size());
  r.f1 = (r.precision + r.recall) > 0.0
             ? 2.0 * r.precision * r.recall / (r.precision + r.recall)
             : 0.0;
  return r;
}

double rouge1_precision(std::string_view candidate, std::string_view reference) {
  const std::vector<std::string> cand = metric_tokenize(candidate);
  if (cand.empty()) return 0.0;
  const Counts cand_counts = ngram_counts(cand, 1);
  const Counts ref_counts = ngram_counts(metric_tokenize(reference), 1);
  std::size_t matched = 0;
  for (const auto& [gram, count] : cand_counts) {
    auto it = ref_counts.find(gram);
    if (it != ref_counts.end()) matched += std::min(count, it->second);
  }
  return static_cast<double>(matched) / static_cast<double>(cand.size());
}

void DocumentFrequency::add_document(std::string_view text) {
  const std::vector<std::string> tokens = metric_tokenize(text);
  ++corpus_size_;
  for (std::size_t n = 1; n <= 4; ++n) {
    if (tokens.size() < n) break;
    std::unordered_map<std::string, bool> seen;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
      const std::string key = gram_at(tokens, i, n);
      if (!seen.emplace(key, true).second) continue;
      ++df_[key];
    }
  }
}

std::size_t DocumentFrequency::df(const std::string& ngram_key) const {
  auto it = df_.find(ngram_key);
  return it == df_.end() ? 0 : it->second;
}

double DocumentFrequency::idf(const std::string& ngram_key) const {
  return std::log(static_cast<double>(1 + corpus_size_) /
                  static_cast<double>(1 + df(ngram_key))) +
         1.0;
}

std::string DocumentFrequency::ngram_key(std::span<const std::string> tokens, std::size_t pos,
                                         std::size_t n) {
  return gram_at(tokens, pos, n);
}

double cider(std::string_view candidate, std::string_view reference,
             const DocumentFrequency& df) {
  const std::vector<std::string> cand = metric_tokenize(candidate);
  const std::vector<std::string> ref = metric_tokenize(reference);

  double sum = 0.0;
  int active = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const bool cand_has = cand.size() >= n;
    const bool ref_has = ref.size() >= n;
    if (!cand_has && !ref_has) continue;
    ++active;
    if (!cand_has || !ref_has) continue;  // contributes 0 for this order

    const Counts cand_counts = ngram_counts(cand, n);
    const Counts ref_counts = ngram_counts(ref, n);
    const double cand_total = static_cast<double>(total(cand_counts));
    const double ref_total = static_cast<double>(total(ref_counts));

    double dot = 0.0, cand_norm = 0.0, ref_norm = 0.0;
    for (const auto& [gram, count] : cand_counts) {
      const double w = (static_cast<double>(count) / cand_total) * df.idf(gram);
      cand_norm += w * w;
      auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) {
        const double rw = (static_cast<double>(it->second) / ref_total) * df.idf(gram);
        dot += w * rw;
      }
    }
    for (const auto& [gram, count] : ref_counts) {
      const double w = (static_cast<double>(count) / ref_total) * df.idf(gram);
      ref_norm += w * w;
    }
    if (cand_norm > 0.0 && ref_norm > 0.0) {
      sum += dot / (std::sqrt(cand_norm) * std::sqrt(ref_norm));
    }
  }
  return active > 0 ? sum / active : 0.0;
}

EmbeddingStore EmbeddingStore::load(std::istream& in) {
  EmbeddingStore store;
  std::string line;
  if (!std::getline(in, line)) throw Error("embedding store is empty");
  if (line.rfind("dim=", 0) != 0) {
    throw Error("embedding store must start with a 'dim=<int>' header line");
  }
  try {
    store.dim_ = static_cast<std::size_t>(std::stoull(line.substr(4)));
  } catch (const std::exception&) {
    throw Error("bad embedding dimension header: '" + line + "'");
  }
  if (store.dim_ == 0) throw Error("embedding dimension must be positive");

  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (normalize_whitespace(line).empty()) continue;
    try {
      json rec = json::parse(line);
      store.insert(rec.at("text").get<std::string>(),
                   rec.at("vec").get<std::vector<double>>());
    } catch (const json::exception& e) {
      throw ParseError(line_number, std::string("bad embedding record: ") + e.what());
    } catch (const Error& e) {
      throw ParseError(line_number, e.what());
    }
  }
  return store;
}

void EmbeddingStore::insert(std::string text, std::vector<double> vec) {
  if (dim_ == 0) dim_ = vec.size();
  if (vec.size() != dim_) {
    throw Error("embedding for '" + text + "' has dimension " + std::to_string(vec.size()) +
                ", expected " + std::to_string(dim_));
  }
  double norm_sq = 0.0;
  for (double v : vec) norm_sq += v * v;
  const double norm = std::sqrt(norm_sq);
  if (std::abs(norm - 1.0) > 1e-6) {
    throw Error("embedding for '" + text + "' is not unit-norm (|v| = " + std::to_string(norm) +
                ")");
  }
  vectors_[std::move(text)] = std::move(vec);
}

bool EmbeddingStore::contains(std::string_view text) const {
  return vectors_.count(std::string(text)) > 0;
}

const std::vector<double>& EmbeddingStore::vector_for(std::string_view text) const {
  auto it = vectors_.find(std::string(text));
  if (it == vectors_.end()) {
    throw Error("no embedding for answer string '" + std::string(text) + "'");
  }
  return it->second;
}

double semantic_similarity(std::string_view a, std::string_view b, const EmbeddingStore& store) {
  const std::vector<double>& va = store.vector_for(a);
  const std::vector<double>& vb = store.vector_for(b);
  const double dot = std::inner_product(va.begin(), va.end(), vb.begin(), 0.0);
  return std::clamp(dot, 0.0, 1.0);
}

std::string_view to_string(PairKind kind) {
  switch (kind) {
    case PairKind::cc: return "CC";
    case PairKind::ii: return "II";
    case PairKind::ci: return "CI";
  }
  return "CC";
}

namespace {

struct PairAccumulator {
  double bleu1 = 0, bleu2 = 0, bleu4 = 0, rouge = 0, cider_v = 0, sem = 0;
  std::size_t pairs = 0;

  void add(const std::string& a, const std::string& b, const DocumentFrequency& df,
           const EmbeddingStore* store) {
    // asymmetric metrics averaged over both orientations
    bleu1 += 0.5 * (bleu(a, b, 1) + bleu(b, a, 1));
    bleu2 += 0.5 * (bleu(a, b, 2) + bleu(b, a, 2));
    bleu4 += 0.5 * (bleu(a, b, 4) + bleu(b, a, 4));
    rouge += 0.5 * (rouge_l(a, b).f1 + rouge_l(b, a).f1);
    cider_v += 0.5 * (cider(a, b, df) + cider(b, a, df));
    if (store) sem += semantic_similarity(a, b, *store);
    ++pairs;
  }
};

}  // namespace

std::array<DiversityRow, 3> diversity_table(const Corpus& corpus,
                                            const DiversityOptions& options) {
  DocumentFrequency df;
  for (const InferenceInstance& inst : corpus.instances) {
    for (const std::string& option : inst.options) df.add_document(option);
  }

  // per-instance means, then the mean across instances that have pairs
  struct RowSums {
    double bleu1 = 0, bleu2 = 0, bleu4 = 0, rouge = 0, cider_v = 0, sem = 0;
    std::size_t instances = 0;
  };
  std::vector<std::array<PairAccumulator, 3>> per_instance(corpus.instances.size());

  parallel_for(corpus.instances.size(), options.workers, [&](std::size_t idx) {
    const InferenceInstance& inst = corpus.instances[idx];
    std::vector<const std::string*> correct, incorrect;
    for (std::size_t i = 0; i < inst.options.size(); ++i) {
      (inst.is_correct(i) ? correct : incorrect).push_back(&inst.options[i]);
    }
    auto& acc = per_instance[idx];
    for (std::size_t i = 0; i < correct.size(); ++i) {
      for (std::size_t j = i + 1; j < correct.size(); ++j) {
        acc[0].add(*correct[i], *correct[j], df, options.store);
      }
    }
    for (std::size_t i = 0; i < incorrect.size(); ++i) {
      for (std::size_t j = i + 1; j < incorrect.size(); ++j) {
        acc[1].add(*incorrect[i], *incorrect[j], df, options.store);
      }
    }
    for (const std::string* c : correct) {
      for (const std::string* inc : incorrect) {
        acc[2].add(*c, *inc, df, options.store);
      }
    }
  });

  std::array<RowSums, 3> sums;
  for (const auto& acc : per_instance) {
    for (std::size_t k = 0; k < 3; ++k) {
      if (acc[k].pairs == 0) continue;
      const double denom = static_cast<double>(acc[k].pairs);
      sums[k].bleu1 += acc[k].bleu1 / denom;
      sums[k].bleu2 += acc[k].bleu2 / denom;
      sums[k].bleu4 += acc[k].bleu4 / denom;
      sums[k].rouge += acc[k].rouge / denom;
      sums[k].cider_v += acc[k].cider_v / denom;
      sums[k].sem += acc[k].sem / denom;
      ++sums[k].instances;
    }
  }

  std::array<DiversityRow, 3> rows;
  const PairKind kinds[3] = {PairKind::cc, PairKind::ii, PairKind::ci};
  for (std::size_t k = 0; k < 3; ++k) {
    rows[k].pair_kind = kinds[k];
    rows[k].instances_with_pairs = sums[k].instances;
    if (sums[k].instances == 0) continue;
    const double denom = static_cast<double>(sums[k].instances);
    rows[k].bleu1 = sums[k].bleu1 / denom;
    rows[k].bleu2 = sums[k].bleu2 / denom;
    rows[k].bleu4 = sums[k].bleu4 / denom;
    rows[k].rouge_l = sums[k].rouge / denom;
    rows[k].cider = sums[k].cider_v / denom;
    if (options.store) rows[k].sem_sim = sums[k].sem / denom;
  }
  return rows;
}

}  // namespace cci
