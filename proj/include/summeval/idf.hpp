#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "summeval/index.hpp"
#include "summeval/textproc.hpp"

namespace summeval {

/// idf(t) = ln((N + 1) / (df(t) + 1)), computed over a retrieval index.
/// Immutable after construction and shareable across threads; keeps a
/// handle to the index for exact phrase document frequencies.
class IdfTable {
  public:
    explicit IdfTable(const Index& index);

    double idf(std::string_view term) const;
    double phrase_idf(const Phrase& phrase) const;
    double mean_nonstop_idf() const { return mean_nonstop_idf_; }
    const Index& index() const { return *index_; }

  private:
    const Index* index_;
    double unseen_idf_;
    double mean_nonstop_idf_;
    std::vector<std::pair<std::string, double>> idf_;  // sorted by term
};

/// Throws summeval::error when the index is empty.
IdfTable compute_idf(const Index& index);

/// All 1..max_len-grams of the (stopword-free) token sequence whose idf
/// exceeds the table's mean non-stopword idf. Phrase adjacency is taken
/// over the filtered sequence, matching the positional index.
std::vector<Phrase> extract_keywords(const std::vector<Token>& summary_tokens,
                                     const IdfTable& idf_table,
                                     std::size_t max_len = 3);

}  // namespace summeval
