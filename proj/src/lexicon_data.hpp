#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

// Word inventories behind LexiconTagger. All entries are lowercase; the
// lists are versioned artifacts (changing them changes tagging output, so
// changes must be deliberate).
namespace cci::lex {

const std::vector<std::string>& stopword_list();  // print order
const std::unordered_set<std::string>& stopwords();
const std::unordered_set<std::string>& verbs();               // base forms
const std::unordered_map<std::string, std::string>& irregular_verbs();  // form -> base
const std::unordered_set<std::string>& nouns();               // singular forms
const std::unordered_map<std::string, std::string>& irregular_nouns();  // plural -> singular
const std::unordered_set<std::string>& adjectives();
const std::unordered_set<std::string>& other_words();  // adverbs, preps, interjections, modals
const std::unordered_set<std::string>& number_words();
const std::unordered_set<std::string>& names();

}  // namespace cci::lex
