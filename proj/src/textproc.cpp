#include "cci/textproc.hpp"

#include <algorithm>
#include <cctype>
#include <istream>

#include "json.hpp"
#include "lexicon_data.hpp"

namespace cci {

using nlohmann::json;

std::string_view to_string(Pos pos) {
  switch (pos) {
    case Pos::noun: return "noun";
    case Pos::verb: return "verb";
    case Pos::other: return "other";
  }
  return "other";
}

Pos pos_from_string(std::string_view s) {
  if (s == "noun") return Pos::noun;
  if (s == "verb") return Pos::verb;
  if (s == "other") return Pos::other;
  throw Error("unknown pos '" + std::string(s) + "'");
}

const std::vector<std::string>& bundled_stopwords() { return lex::stopword_list(); }

namespace {

bool is_word_char(unsigned char c) {
  return std::isalnum(c) || c == '\'' || c == '-' || c >= 0x80;
}

bool has_alnum(std::string_view s) {
  for (unsigned char c : s) {
    if (std::isalnum(c) || c >= 0x80) return true;
  }
  return false;
}

bool sentence_end_token(std::string_view s) {
  return s == "." || s == "!" || s == "?";
}

bool ends_with(std::string_view word, std::string_view suffix) {
  return word.size() > suffix.size() &&
         word.compare(word.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool in_verbs(const std::string& w) { return lex::verbs().count(w) > 0; }

// Base verb for an -ing form, or "" when no base is in the lexicon.
// Candidates, in order: restore -e (driving -> drive), bare stem
// (going -> go), undoubled consonant (running -> run).
std::string ing_base(const std::string& word) {
  if (!ends_with(word, "ing") || word.size() < 5) return "";
  const std::string stem = word.substr(0, word.size() - 3);
  if (in_verbs(stem + "e")) return stem + "e";
  if (in_verbs(stem)) return stem;
  if (stem.size() >= 3 && stem.back() == stem[stem.size() - 2] &&
      in_verbs(stem.substr(0, stem.size() - 1))) {
    return stem.substr(0, stem.size() - 1);
  }
  return "";
}

std::string ed_base(const std::string& word) {
  if (!ends_with(word, "ed") || word.size() < 4) return "";
  if (ends_with(word, "ied")) {
    const std::string y_form = word.substr(0, word.size() - 3) + "y";
    if (in_verbs(y_form)) return y_form;
  }
  const std::string stem = word.substr(0, word.size() - 2);
  if (in_verbs(stem + "e")) return stem + "e";
  if (in_verbs(stem)) return stem;
  if (stem.size() >= 3 && stem.back() == stem[stem.size() - 2] &&
      in_verbs(stem.substr(0, stem.size() - 1))) {
    return stem.substr(0, stem.size() - 1);
  }
  return "";
}

// Base verb for any inflected form, or "" when the word is not verb-like.
std::string verb_lemma(const std::string& word) {
  auto irregular = lex::irregular_verbs().find(word);
  if (irregular != lex::irregular_verbs().end()) return irregular->second;
  if (in_verbs(word)) return word;
  if (ends_with(word, "ies")) {
    const std::string y_form = word.substr(0, word.size() - 3) + "y";
    if (in_verbs(y_form)) return y_form;
  }
  if (ends_with(word, "es") && in_verbs(word.substr(0, word.size() - 2))) {
    return word.substr(0, word.size() - 2);
  }
  if (ends_with(word, "s") && !ends_with(word, "ss") &&
      in_verbs(word.substr(0, word.size() - 1))) {
    return word.substr(0, word.size() - 1);
  }
  if (std::string base = ing_base(word); !base.empty()) return base;
  if (std::string base = ed_base(word); !base.empty()) return base;
  return "";
}

std::string noun_lemma(const std::string& word) {
  auto irregular = lex::irregular_nouns().find(word);
  if (irregular != lex::irregular_nouns().end()) return irregular->second;
  if (ends_with(word, "'s") && word.size() > 3) return word.substr(0, word.size() - 2);
  if (ends_with(word, "s'") && word.size() > 3) return word.substr(0, word.size() - 2);
  if (ends_with(word, "ies") && word.size() > 4) {
    const std::string y_form = word.substr(0, word.size() - 3) + "y";
    if (lex::nouns().count(y_form) || in_verbs(y_form)) return y_form;
    return word.substr(0, word.size() - 1);  // cookies -> cookie
  }
  for (std::string_view es_suffix : {"sses", "shes", "ches", "xes", "zes"}) {
    if (ends_with(word, es_suffix)) return word.substr(0, word.size() - 2);
  }
  if (ends_with(word, "oes") && lex::nouns().count(word.substr(0, word.size() - 2))) {
    return word.substr(0, word.size() - 2);  // tomatoes -> tomato
  }
  if (ends_with(word, "ss") || ends_with(word, "us") || ends_with(word, "is")) return word;
  if (ends_with(word, "s") && word.size() > 2) return word.substr(0, word.size() - 1);
  return word;
}

bool noun_context(const std::string& prev) {
  static const std::unordered_set<std::string> determiners{
      "the", "a", "an", "this", "that", "these", "those", "my", "your", "his", "her",
      "its", "our", "their", "some", "any", "no", "each", "every", "such", "another",
      "what", "which", "whose"};
  return determiners.count(prev) > 0 || lex::adjectives().count(prev) > 0;
}

bool be_form(const std::string& prev) {
  static const std::unordered_set<std::string> forms{
      "am", "is", "are", "was", "were", "be", "been", "being", "i'm", "you're",
      "we're", "they're", "he's", "she's", "it's", "that's", "there's", "who's",
      "what's"};
  if (forms.count(prev)) return true;
  return ends_with(prev, "'m") || ends_with(prev, "'re") || ends_with(prev, "'s");
}

bool verb_context(const std::string& prev) {
  static const std::unordered_set<std::string> words{
      "can", "could", "will", "would", "shall", "should", "may", "might", "must",
      "do", "does", "did", "to", "not", "i", "you", "he", "she", "it", "we", "they",
      "who", "don", "gonna", "wanna", "let's", "please"};
  if (words.count(prev)) return true;
  return be_form(prev) || ends_with(prev, "n't") || ends_with(prev, "'ll") ||
         ends_with(prev, "'d") || ends_with(prev, "'ve");
}

bool all_digits(const std::string& word) {
  if (word.empty()) return false;
  return std::all_of(word.begin(), word.end(),
                     [](unsigned char c) { return std::isdigit(c) || c == '-' || c == '\''; });
}

struct Classified {
  Pos pos;
  std::string lemma;
};

// Rule order matters and is part of the versioned tagger behavior.
Classified classify(const std::string& surface, const std::string& fold,
                    const std::string& prev, bool sentence_initial) {
  if (auto it = lex::irregular_verbs().find(fold); it != lex::irregular_verbs().end()) {
    return {Pos::verb, it->second};
  }
  if (lex::other_words().count(fold) || lex::number_words().count(fold) || all_digits(fold)) {
    return {Pos::other, fold};
  }
  if (lex::names().count(fold)) return {Pos::other, fold};

  if (ends_with(fold, "ing") && fold.size() >= 5) {
    const std::string base = ing_base(fold);
    if (!base.empty()) {
      if (noun_context(prev)) return {Pos::noun, fold};  // gerund used nominally
      if (be_form(prev)) return {Pos::verb, base};
      if (lex::nouns().count(fold)) return {Pos::noun, fold};
      return {Pos::verb, base};
    }
  }

  if (const std::string vlemma = verb_lemma(fold); !vlemma.empty()) {
    if (lex::nouns().count(fold) || lex::nouns().count(noun_lemma(fold))) {
      if (verb_context(prev)) return {Pos::verb, vlemma};
      if (noun_context(prev)) return {Pos::noun, noun_lemma(fold)};
      if (sentence_initial) return {Pos::verb, vlemma};  // imperative-leaning data
      return {Pos::verb, vlemma};
    }
    return {Pos::verb, vlemma};
  }

  if (ends_with(fold, "ly") && fold.size() > 4 && !lex::nouns().count(fold)) {
    return {Pos::other, fold};  // adverb
  }
  if (!surface.empty() && std::isupper(static_cast<unsigned char>(surface[0])) &&
      !sentence_initial && !lex::nouns().count(fold)) {
    return {Pos::other, fold};  // unknown capitalized word mid-sentence: proper noun
  }
  return {Pos::noun, noun_lemma(fold)};
}

}  // namespace

TokenList LexiconTagger::tag(std::string_view text) const {
  // Whitespace split with punctuation detachment; every token is an exact
  // substring of text, in order.
  std::vector<std::string> raw;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view chunk = text.substr(i, j - i);
    // peel leading punctuation
    std::size_t begin = 0;
    while (begin < chunk.size() && !is_word_char(chunk[begin])) {
      raw.emplace_back(1, chunk[begin]);
      ++begin;
    }
    // find core end
    std::size_t end = chunk.size();
    while (end > begin && !is_word_char(chunk[end - 1])) --end;
    if (end > begin) {
      // trailing apostrophes/hyphens belong to punctuation, not the word
      std::size_t core_end = end;
      while (core_end > begin &&
             (chunk[core_end - 1] == '\'' || chunk[core_end - 1] == '-')) {
        --core_end;
      }
      if (core_end == begin) core_end = end;
      raw.emplace_back(chunk.substr(begin, core_end - begin));
      for (std::size_t k = core_end; k < chunk.size(); ++k) raw.emplace_back(1, chunk[k]);
    } else {
      for (std::size_t k = begin; k < chunk.size(); ++k) raw.emplace_back(1, chunk[k]);
    }
    i = j;
  }

  TokenList tokens;
  tokens.reserve(raw.size());
  bool sentence_initial = true;
  std::string prev_word;
  for (const std::string& surface : raw) {
    if (!has_alnum(surface)) {
      tokens.push_back({surface, surface, Pos::other, false});
      if (sentence_end_token(surface)) {
        sentence_initial = true;
        prev_word.clear();
      }
      continue;
    }
    const std::string fold = ascii_lower(surface);
    Classified c = classify(surface, fold, prev_word, sentence_initial);
    tokens.push_back({surface, c.lemma.empty() ? fold : c.lemma, c.pos,
                      lex::stopwords().count(fold) > 0});
    prev_word = fold;
    sentence_initial = false;
  }
  return tokens;
}

SidecarTagger SidecarTagger::load(std::istream& in) {
  SidecarTagger tagger;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (normalize_whitespace(line).empty()) continue;
    json rec;
    try {
      rec = json::parse(line);
      TokenList tokens;
      for (const json& t : rec.at("tokens")) {
        tokens.push_back({t.at("surface").get<std::string>(), t.at("lemma").get<std::string>(),
                          pos_from_string(t.at("pos").get<std::string>()),
                          t.at("stop").get<bool>()});
        if (tokens.back().lemma.empty()) throw Error("empty lemma");
      }
      tagger.by_hash_[rec.at("text_sha256").get<std::string>()] = std::move(tokens);
    } catch (const json::exception& e) {
      throw ParseError(line_number, std::string("bad sidecar record: ") + e.what());
    } catch (const Error& e) {
      throw ParseError(line_number, e.what());
    }
  }
  return tagger;
}

TokenList SidecarTagger::tag(std::string_view text) const {
  const std::string hash = sha256_hex(text);
  auto it = by_hash_.find(hash);
  if (it == by_hash_.end()) {
    throw Error("sidecar annotation missing for text with sha256 " + hash);
  }
  return it->second;
}

TokenList tokenize_and_tag(std::string_view text, const TaggerBackend& backend) {
  if (normalize_whitespace(text).empty()) {
    throw Error("cannot tokenize empty text");
  }
  return backend.tag(text);
}

ConceptList concepts_from_tokens(const TokenList& tokens) {
  ConceptList concepts;
  std::unordered_set<std::string> seen;
  for (const Token& t : tokens) {
    if (t.is_stop || (t.pos != Pos::noun && t.pos != Pos::verb)) continue;
    if (seen.insert(t.lemma).second) concepts.push_back(t.lemma);
  }
  return concepts;
}

ConceptList extract_concepts(std::string_view text, const TaggerBackend& backend) {
  return concepts_from_tokens(tokenize_and_tag(text, backend));
}

ConceptList corrupt_concepts(const ConceptList& concepts, Rng& rng) {
  if (concepts.size() < 2) throw Error("too few concepts to corrupt");
  const std::size_t removed = static_cast<std::size_t>(rng.below(concepts.size()));
  ConceptList survivors;
  survivors.reserve(concepts.size() - 1);
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    if (i != removed) survivors.push_back(concepts[i]);
  }
  rng.shuffle(survivors);
  return survivors;
}

bool target_eligible(std::string_view utterance, const std::optional<std::string>& dialogue_act,
                     Source source, const TaggerBackend& backend,
                     const std::vector<std::string>& act_whitelist) {
  if (source == Source::dailydialog) {
    if (!dialogue_act) {
      throw Error("dailydialog target needs a dialogue-act label to evaluate eligibility");
    }
    const std::string act = ascii_lower(normalize_whitespace(*dialogue_act));
    if (std::find(act_whitelist.begin(), act_whitelist.end(), act) == act_whitelist.end()) {
      return false;
    }
  }
  std::size_t stop_words = 0;
  std::size_t nonstop_words = 0;
  bool has_nonstop_verb = false;
  for (const Token& t : tokenize_and_tag(utterance, backend)) {
    if (!has_alnum(t.surface)) continue;  // punctuation is not a word
    if (t.is_stop) {
      ++stop_words;
    } else {
      ++nonstop_words;
      if (t.pos == Pos::verb) has_nonstop_verb = true;
    }
  }
  return has_nonstop_verb && nonstop_words > stop_words;
}

}  // namespace cci
