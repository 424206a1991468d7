#include "summeval/retrieval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "summeval/errors.hpp"

namespace summeval {

namespace {

void check_fingerprint(const Query& query, const Index& index) {
    if (query.fingerprint != index.fingerprint())
        throw fingerprint_mismatch_error(
            "query analyzer fingerprint does not match the index (query '" + query.fingerprint +
            "', index '" + index.fingerprint() + "')");
}

std::map<std::string, std::uint32_t> term_counts(const Query& query) {
    std::map<std::string, std::uint32_t> counts;
    for (const std::string& t : query.terms) ++counts[t];
    return counts;
}

double score_ordinal(const std::map<std::string, std::uint32_t>& counts, std::uint32_t ordinal,
                     const Index& index, double mu) {
    const double total = static_cast<double>(index.total_token_count());
    const double doc_len = static_cast<double>(index.doc_length(ordinal));
    double score = 0.0;
    for (const auto& [term, query_count] : counts) {
        const std::uint64_t cf = index.cf(term);
        if (cf == 0) continue;  // terms outside the collection contribute nothing
        const double p_collection = static_cast<double>(cf) / total;
        const double tf = static_cast<double>(index.term_frequency(term, ordinal));
        score += static_cast<double>(query_count) *
                 std::log((tf + mu * p_collection) / (doc_len + mu));
    }
    return score;
}

}  // namespace

std::string_view to_string(QueryMode mode) {
    switch (mode) {
        case QueryMode::Plain: return "PLAIN";
        case QueryMode::NounPhrases: return "NP";
        case QueryMode::Keywords: return "KW";
    }
    return "PLAIN";
}

Query make_plain_query(std::string_view text) {
    Query query;
    query.source = QueryMode::Plain;
    query.terms = analyze(text, default_analyzer_options());
    query.fingerprint = analyzer_fingerprint(default_analyzer_options());
    if (query.terms.empty()) throw empty_query_error("query has no terms after analysis");
    return query;
}

double lm_dirichlet_score(const Query& query, std::string_view doc_id, const Index& index,
                          double mu) {
    if (mu <= 0) throw std::invalid_argument("mu must be positive");
    check_fingerprint(query, index);
    std::optional<std::uint32_t> ordinal = index.doc_ordinal(doc_id);
    if (!ordinal) throw not_found_error("unknown document id '" + std::string(doc_id) + "'");
    return score_ordinal(term_counts(query), *ordinal, index, mu);
}

RankedList retrieve(const Query& query, const Index& index, std::size_t n, double mu) {
    if (n < 1) throw std::invalid_argument("rank cut-off must be >= 1");
    if (mu <= 0) throw std::invalid_argument("mu must be positive");
    check_fingerprint(query, index);
    if (query.empty()) throw empty_query_error("cannot retrieve with an empty query");

    const auto counts = term_counts(query);
    // Only documents matching at least one query term are scored;
    // background-only documents carry no relevance evidence.
    std::set<std::uint32_t> candidates;
    for (const auto& [term, query_count] : counts) {
        if (const TermStats* stats = index.term(term))
            for (const Posting& posting : stats->postings) candidates.insert(posting.doc);
    }

    std::vector<std::pair<double, std::uint32_t>> scored;
    scored.reserve(candidates.size());
    for (std::uint32_t ordinal : candidates)
        scored.emplace_back(score_ordinal(counts, ordinal, index, mu), ordinal);
    // Document ids are stored sorted, so ordinal order is id order.
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });

    RankedList list;
    list.cutoff = n;
    const std::size_t take = std::min(n, scored.size());
    list.entries.reserve(take);
    for (std::size_t i = 0; i < take; ++i)
        list.entries.push_back(ScoredDoc{index.doc_ids()[scored[i].second], scored[i].first});
    return list;
}

}  // namespace summeval
