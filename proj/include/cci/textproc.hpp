#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cci/corpus.hpp"
#include "cci/rng.hpp"

namespace cci {

enum class Pos { noun, verb, other };

std::string_view to_string(Pos pos);
Pos pos_from_string(std::string_view s);

struct Token {
  std::string surface;  // exact substring of the source text
  std::string lemma;    // nonempty, lowercase
  Pos pos = Pos::other;
  bool is_stop = false;

  bool operator==(const Token&) const = default;
};

using TokenList = std::vector<Token>;

/// Ordered, deduplicated content-word lemmas (non-stopword nouns/verbs),
/// first-occurrence order. Dedup is on the lemma string itself, so "drive"
/// (verb) and "driving" (gerund noun) coexist.
using ConceptList = std::vector<std::string>;

/// Maps raw text to tokens. Implementations must be deterministic:
/// identical text -> identical TokenList.
class TaggerBackend {
 public:
  virtual ~TaggerBackend() = default;
  virtual TokenList tag(std::string_view text) const = 0;
};

/// The tagger shipped with the toolkit: whitespace tokenization with
/// punctuation detachment, a fixed stopword list, and lexicon+context rules
/// for noun/verb assignment (unknown words default to noun, capitalized
/// non-initial words and known names to other). Lemmas come from an
/// irregular-form table plus -s/-ing/-ed suffix stripping against the
/// bundled base lexicon.
class LexiconTagger : public TaggerBackend {
 public:
  TokenList tag(std::string_view text) const override;
};

/// Reads pre-tagged text from a sidecar JSONL file keyed by the SHA-256 of
/// the exact text. Lines look like
///   {"text_sha256":hex,"tokens":[{"surface":s,"lemma":s,"pos":s,"stop":b}]}
class SidecarTagger : public TaggerBackend {
 public:
  static SidecarTagger load(std::istream& in);
  TokenList tag(std::string_view text) const override;

 private:
  std::unordered_map<std::string, TokenList> by_hash_;
};

/// One lowercase token per line, in lookup order. This is the versioned
/// stopword inventory behind is_stop and target_eligible.
const std::vector<std::string>& bundled_stopwords();

TokenList tokenize_and_tag(std::string_view text, const TaggerBackend& backend);

ConceptList extract_concepts(std::string_view text, const TaggerBackend& backend);
ConceptList concepts_from_tokens(const TokenList& tokens);

/// Removes one uniformly chosen concept, then applies a uniform permutation
/// (identity allowed) to the survivors. Requires >= 2 concepts.
ConceptList corrupt_concepts(const ConceptList& concepts, Rng& rng);

inline const std::vector<std::string>& default_act_whitelist() {
  static const std::vector<std::string> acts{"directive", "commissive"};
  return acts;
}

/// Annotation-target eligibility: at least one non-stop verb, more non-stop
/// words than stop words, and for DailyDialog an act from the whitelist.
/// Punctuation tokens are not words and count toward neither side.
/// Throws when source is dailydialog and dialogue_act is absent.
bool target_eligible(std::string_view utterance, const std::optional<std::string>& dialogue_act,
                     Source source, const TaggerBackend& backend,
                     const std::vector<std::string>& act_whitelist = default_act_whitelist());

}  // namespace cci
