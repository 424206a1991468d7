#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "summeval/idf.hpp"
#include "summeval/index.hpp"
#include "summeval/retrieval.hpp"

namespace summeval {

struct SeraConfig {
    std::size_t cutoff = 5;  // rank cut-off n
    QueryMode mode = QueryMode::Plain;
    bool discounted = false;
    double mu = 2000.0;
};

/// Metric label for score tables, e.g. "SERA-5", "SERA-DIS-NP-10".
std::string sera_metric_name(const SeraConfig& config);

struct SeraScore {
    double value = 0.0;
    std::vector<double> per_gold;          // one component per gold summary
    bool candidate_query_empty = false;
    std::vector<bool> gold_query_empty;
    std::size_t candidate_list_len = 0;
    std::vector<std::size_t> gold_list_len;
};

/// Rebuild a summary as a retrieval query. PLAIN keeps all content
/// words, NP keeps noun-phrase tokens, KW keeps idf-thresholded
/// keywords/keyphrases. Throws empty_query_error when no terms survive.
Query reformulate(std::string_view summary_text, QueryMode mode, const IdfTable& idf_table);

/// Overlap of two ranked lists: |ids(a) n ids(b)| / max(|a|, |b|, 1).
double sera_pair_simple(const RankedList& candidate, const RankedList& gold);

/// Rank-discounted overlap credit: sum over matching (j, k) positions of
/// 1 / ln(|j - k| + 2).
double sera_pair_discounted_credit(const RankedList& candidate, const RankedList& gold);

/// Score directly from ranked lists (retrieval already done).
SeraScore sera_from_lists(const RankedList& candidate, const std::vector<RankedList>& golds,
                          bool discounted);

/// Batch scorer holding the index and its idf table (needed by KW mode).
class SeraScorer {
  public:
    explicit SeraScorer(const Index& index);

    SeraScore score(std::string_view candidate, const std::vector<std::string>& golds,
                    const SeraConfig& config) const;

    const Index& index() const { return *index_; }
    const IdfTable& idf_table() const { return idf_; }

  private:
    const Index* index_;
    IdfTable idf_;
};

SeraScore sera_simple(std::string_view candidate, const std::vector<std::string>& golds,
                      const Index& index, SeraConfig config);
SeraScore sera_discounted(std::string_view candidate, const std::vector<std::string>& golds,
                          const Index& index, SeraConfig config);

}  // namespace summeval
