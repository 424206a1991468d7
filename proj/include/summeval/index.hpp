#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "summeval/textproc.hpp"

namespace summeval {

struct Document {
    std::string id;
    std::string title;  // optional, empty when absent
    std::string text;
};

struct Posting {
    std::uint32_t doc = 0;                 // ordinal into doc id table
    std::vector<std::uint32_t> positions;  // ascending, post-filter token offsets
};

struct TermStats {
    std::uint64_t cf = 0;  // collection frequency
    std::vector<Posting> postings;  // sorted by doc ordinal

    std::uint32_t df() const { return static_cast<std::uint32_t>(postings.size()); }
};

/// Immutable inverted index with positional postings and collection
/// statistics. Documents are analyzed with the same options later used
/// for queries; the analyzer fingerprint is stored and enforced.
class Index {
  public:
    static Index build(const std::vector<Document>& corpus,
                       const TokenizeOptions& options = default_analyzer_options());

    std::size_t doc_count() const { return ids_.size(); }
    std::uint64_t total_token_count() const { return total_tokens_; }
    std::size_t vocabulary_size() const { return terms_.size(); }
    const TokenizeOptions& analyzer_options() const { return options_; }
    const std::string& fingerprint() const { return fingerprint_; }

    const std::vector<std::string>& doc_ids() const { return ids_; }
    std::optional<std::uint32_t> doc_ordinal(std::string_view id) const;
    std::uint32_t doc_length(std::uint32_t ordinal) const { return doc_lengths_.at(ordinal); }

    const TermStats* term(std::string_view t) const;
    std::uint32_t df(std::string_view t) const;
    std::uint64_t cf(std::string_view t) const;
    /// Term frequency of t in one document (0 when absent).
    std::uint32_t term_frequency(std::string_view t, std::uint32_t ordinal) const;

    /// Documents containing the terms consecutively (exact positional match).
    std::uint32_t phrase_df(const std::vector<std::string>& phrase) const;

    /// Sorted term dictionary view for iteration.
    const std::vector<std::pair<std::string, TermStats>>& terms() const { return terms_; }

    void save(const std::filesystem::path& directory) const;
    static Index load(const std::filesystem::path& directory);

  private:
    Index() = default;
    void validate() const;

    TokenizeOptions options_;
    std::string fingerprint_;
    std::vector<std::string> ids_;
    std::vector<std::uint32_t> doc_lengths_;
    std::uint64_t total_tokens_ = 0;
    std::vector<std::pair<std::string, TermStats>> terms_;  // sorted by term
};

int index_format_version();

}  // namespace summeval
