#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "summeval/textproc.hpp"

namespace summeval {

/// Word lists compiled in from data/*.txt (one entry per line); the text
/// files are the versioned contract, these accessors just parse them.
const std::unordered_set<std::string>& stopword_set();
const std::unordered_map<std::string, PosTag>& pos_lexicon();
const std::unordered_set<std::string>& abbreviation_set();

bool is_stopword(std::string_view word);

std::string_view stopwords_resource_text();
std::string_view pos_lexicon_resource_text();
std::string_view abbreviations_resource_text();

}  // namespace summeval
