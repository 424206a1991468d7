#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace summeval {

struct TokenizeOptions {
    bool lowercase = true;
    bool strip_numeric = false;
    bool remove_stopwords = false;
    bool stem = false;

    bool operator==(const TokenizeOptions&) const = default;
};

/// Analyzer used for both indexing and query construction: lowercase,
/// numeric strip, stopword filter, Porter stemming -- all enabled.
TokenizeOptions default_analyzer_options();

/// Stable identifier for a set of tokenize options plus the bundled
/// stopword list. Indexes persist it; queries must carry the same one.
std::string analyzer_fingerprint(const TokenizeOptions& options);

struct Token {
    std::string surface;       // token text after optional lowercasing
    std::string stem;          // equals surface when stemming is off
    bool is_stopword = false;
    std::size_t position = 0;  // 0-based offset in the emitted sequence
};

enum class PosTag { Noun, Adj, Det, Verb, Other };

std::string_view to_string(PosTag tag);

struct TaggedToken {
    Token token;
    PosTag pos = PosTag::Other;
};

/// Porter (1980) stemmer, matching the reference implementation's output
/// on its published sample vocabulary. Input that is not lowercase
/// ASCII-alphabetic is returned unchanged, as are words of length <= 2.
std::string porter_stem(std::string_view word);

/// Splits on whitespace and punctuation; intra-word hyphens are kept.
/// Options apply in order: lowercase, numeric strip, stopword filter, stem.
std::vector<Token> tokenize(std::string_view text, const TokenizeOptions& options = {});

/// tokenize() reduced to the term strings fed to the index (stem field).
std::vector<std::string> analyze(std::string_view text, const TokenizeOptions& options);

/// Splits at [.!?] followed by whitespace and a capital letter, with a
/// bundled abbreviation exception list.
std::vector<std::string> sentence_split(std::string_view text);

using Phrase = std::vector<std::string>;

/// All contiguous n-grams with multiplicity; empty when the input is
/// shorter than n. Throws std::invalid_argument for n < 1.
std::map<Phrase, std::size_t> ngram_counts(const std::vector<std::string>& terms, std::size_t n);
std::map<Phrase, std::size_t> ngram_counts(const std::vector<Token>& tokens, std::size_t n);

/// Lexicon lookup first, then suffix rules, else OTHER. Determiners come
/// from the closed-class entries of the bundled lexicon.
std::vector<TaggedToken> pos_tag(const std::vector<Token>& tokens);

/// Maximal non-overlapping spans matching DET? (ADJ|NOUN)* NOUN+,
/// scanning left to right; the leading determiner is dropped.
std::vector<std::vector<Token>> np_chunks(const std::vector<TaggedToken>& tagged);

}  // namespace summeval
