#include "summeval/sera.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "summeval/errors.hpp"

namespace summeval {

std::string sera_metric_name(const SeraConfig& config) {
    std::string name = "SERA";
    if (config.discounted) name += "-DIS";
    if (config.mode == QueryMode::NounPhrases) name += "-NP";
    if (config.mode == QueryMode::Keywords) name += "-KW";
    name += "-" + std::to_string(config.cutoff);
    return name;
}

Query reformulate(std::string_view summary_text, QueryMode mode, const IdfTable& idf_table) {
    Query query;
    query.source = mode;
    query.fingerprint = analyzer_fingerprint(default_analyzer_options());
    switch (mode) {
        case QueryMode::Plain: {
            query.terms = analyze(summary_text, default_analyzer_options());
            break;
        }
        case QueryMode::NounPhrases: {
            // Tag the unfiltered token stream, then normalize the chunk
            // tokens the same way plain queries are normalized.
            TokenizeOptions surface_only;
            surface_only.lowercase = true;
            std::vector<TaggedToken> tagged = pos_tag(tokenize(summary_text, surface_only));
            for (const auto& chunk : np_chunks(tagged)) {
                for (const Token& token : chunk) {
                    if (token.is_stopword) continue;
                    bool numeric = !token.surface.empty() &&
                                   token.surface.find_first_not_of("0123456789") ==
                                       std::string::npos;
                    if (numeric) continue;
                    query.terms.push_back(porter_stem(token.surface));
                }
            }
            break;
        }
        case QueryMode::Keywords: {
            std::vector<Token> tokens = tokenize(summary_text, default_analyzer_options());
            for (const Phrase& phrase : extract_keywords(tokens, idf_table))
                for (const std::string& term : phrase) query.terms.push_back(term);
            break;
        }
    }
    if (query.terms.empty())
        throw empty_query_error(std::string("summary reformulation (") +
                                std::string(to_string(mode)) + ") yields no query terms");
    return query;
}

double sera_pair_simple(const RankedList& candidate, const RankedList& gold) {
    std::set<std::string_view> candidate_ids;
    for (const ScoredDoc& doc : candidate.entries) candidate_ids.insert(doc.id);
    std::size_t overlap = 0;
    for (const ScoredDoc& doc : gold.entries) overlap += candidate_ids.count(doc.id);
    const std::size_t denom = std::max({candidate.size(), gold.size(), std::size_t{1}});
    return static_cast<double>(overlap) / static_cast<double>(denom);
}

double sera_pair_discounted_credit(const RankedList& candidate, const RankedList& gold) {
    double credit = 0.0;
    for (std::size_t j = 0; j < candidate.size(); ++j) {
        for (std::size_t k = 0; k < gold.size(); ++k) {
            if (candidate.entries[j].id != gold.entries[k].id) continue;
            const double rank_gap = j > k ? static_cast<double>(j - k) : static_cast<double>(k - j);
            credit += 1.0 / std::log(rank_gap + 2.0);
        }
    }
    return credit;
}

SeraScore sera_from_lists(const RankedList& candidate, const std::vector<RankedList>& golds,
                          bool discounted) {
    if (golds.empty()) throw std::invalid_argument("at least one gold summary is required");
    SeraScore score;
    score.candidate_list_len = candidate.size();
    score.per_gold.reserve(golds.size());
    score.gold_list_len.reserve(golds.size());
    score.gold_query_empty.assign(golds.size(), false);

    if (discounted) {
        std::size_t longest = std::max(candidate.size(), std::size_t{1});
        for (const RankedList& gold : golds) longest = std::max(longest, gold.size());
        const double d_max = static_cast<double>(longest) / std::log(2.0);
        for (const RankedList& gold : golds) {
            score.gold_list_len.push_back(gold.size());
            score.per_gold.push_back(sera_pair_discounted_credit(candidate, gold) / d_max);
        }
    } else {
        for (const RankedList& gold : golds) {
            score.gold_list_len.push_back(gold.size());
            score.per_gold.push_back(sera_pair_simple(candidate, gold));
        }
    }
    // Summing in value order keeps the mean bit-identical under any
    // permutation of the gold summaries.
    std::vector<double> ordered = score.per_gold;
    std::sort(ordered.begin(), ordered.end());
    double sum = 0.0;
    for (double component : ordered) sum += component;
    score.value = sum / static_cast<double>(golds.size());
    return score;
}

SeraScorer::SeraScorer(const Index& index) : index_(&index), idf_(index) {}

SeraScore SeraScorer::score(std::string_view candidate, const std::vector<std::string>& golds,
                            const SeraConfig& config) const {
    if (golds.empty()) throw std::invalid_argument("at least one gold summary is required");

    bool candidate_empty = false;
    RankedList candidate_list;
    candidate_list.cutoff = config.cutoff;
    try {
        Query query = reformulate(candidate, config.mode, idf_);
        candidate_list = retrieve(query, *index_, config.cutoff, config.mu);
    } catch (const empty_query_error&) {
        candidate_empty = true;  // fail soft, flagged in diagnostics
    }

    std::vector<RankedList> gold_lists;
    std::vector<bool> gold_empty;
    gold_lists.reserve(golds.size());
    for (const std::string& gold : golds) {
        RankedList list;
        list.cutoff = config.cutoff;
        bool empty = false;
        try {
            Query query = reformulate(gold, config.mode, idf_);
            list = retrieve(query, *index_, config.cutoff, config.mu);
        } catch (const empty_query_error&) {
            empty = true;
        }
        gold_lists.push_back(std::move(list));
        gold_empty.push_back(empty);
    }

    SeraScore score = sera_from_lists(candidate_list, gold_lists, config.discounted);
    score.candidate_query_empty = candidate_empty;
    score.gold_query_empty = std::move(gold_empty);
    return score;
}

SeraScore sera_simple(std::string_view candidate, const std::vector<std::string>& golds,
                      const Index& index, SeraConfig config) {
    config.discounted = false;
    return SeraScorer(index).score(candidate, golds, config);
}

SeraScore sera_discounted(std::string_view candidate, const std::vector<std::string>& golds,
                          const Index& index, SeraConfig config) {
    config.discounted = true;
    return SeraScorer(index).score(candidate, golds, config);
}

}  // namespace summeval
