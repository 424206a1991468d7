#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "summeval/index.hpp"

namespace summeval {

enum class QueryMode { Plain, NounPhrases, Keywords };

std::string_view to_string(QueryMode mode);

struct Query {
    std::vector<std::string> terms;  // stemmed non-stopword tokens, multiset
    QueryMode source = QueryMode::Plain;
    std::string fingerprint;  // analyzer fingerprint the terms were built with

    bool empty() const { return terms.empty(); }
};

/// Analyze free text into a PLAIN query (stopwords and numerals removed,
/// stemmed). Throws empty_query_error when nothing survives.
Query make_plain_query(std::string_view text);

struct ScoredDoc {
    std::string id;
    double score = 0.0;
};

struct RankedList {
    std::vector<ScoredDoc> entries;  // score descending, then doc id ascending
    std::size_t cutoff = 0;

    std::size_t size() const { return entries.size(); }
};

/// Dirichlet-smoothed query log likelihood:
///   sum_t c(t,q) * ln((c(t,d) + mu * cf(t)/T) / (|d| + mu))
/// Terms absent from the collection contribute nothing.
double lm_dirichlet_score(const Query& query, std::string_view doc_id, const Index& index,
                          double mu);

/// Top-n documents by lm_dirichlet_score; ties broken by doc id
/// ascending. Documents matching no query term are excluded, so fewer
/// than n entries may be returned.
RankedList retrieve(const Query& query, const Index& index, std::size_t n, double mu = 2000.0);

}  // namespace summeval
