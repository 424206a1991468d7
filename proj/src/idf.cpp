#include "summeval/idf.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "summeval/errors.hpp"
#include "summeval/resources.hpp"

namespace summeval {

IdfTable::IdfTable(const Index& index) : index_(&index) {
    if (index.doc_count() == 0) throw error("cannot compute idf over an empty index");
    const double n = static_cast<double>(index.doc_count());
    unseen_idf_ = std::log(n + 1.0);

    idf_.reserve(index.terms().size());
    double nonstop_sum = 0.0;
    std::size_t nonstop_count = 0;
    for (const auto& [term, stats] : index.terms()) {
        double value = std::log((n + 1.0) / (static_cast<double>(stats.df()) + 1.0));
        idf_.emplace_back(term, value);
        if (!is_stopword(term)) {
            nonstop_sum += value;
            ++nonstop_count;
        }
    }
    mean_nonstop_idf_ = nonstop_count > 0 ? nonstop_sum / static_cast<double>(nonstop_count) : 0.0;
}

double IdfTable::idf(std::string_view term) const {
    auto it = std::lower_bound(idf_.begin(), idf_.end(), term,
                               [](const auto& entry, std::string_view key) {
                                   return std::string_view(entry.first) < key;
                               });
    if (it == idf_.end() || it->first != term) return unseen_idf_;
    return it->second;
}

double IdfTable::phrase_idf(const Phrase& phrase) const {
    if (phrase.size() == 1) return idf(phrase[0]);
    const double n = static_cast<double>(index_->doc_count());
    const double df = static_cast<double>(index_->phrase_df(phrase));
    return std::log((n + 1.0) / (df + 1.0));
}

IdfTable compute_idf(const Index& index) { return IdfTable(index); }

std::vector<Phrase> extract_keywords(const std::vector<Token>& summary_tokens,
                                     const IdfTable& idf_table, std::size_t max_len) {
    // Membership excludes stopwords; adjacency is over the filtered
    // sequence, the same view the positional index has.
    std::vector<std::string> terms;
    terms.reserve(summary_tokens.size());
    for (const Token& token : summary_tokens)
        if (!token.is_stopword) terms.push_back(token.stem);

    const double threshold = idf_table.mean_nonstop_idf();
    std::set<Phrase> keywords;
    for (std::size_t n = 1; n <= max_len; ++n) {
        if (terms.size() < n) break;
        for (std::size_t i = 0; i + n <= terms.size(); ++i) {
            Phrase phrase(terms.begin() + static_cast<std::ptrdiff_t>(i),
                          terms.begin() + static_cast<std::ptrdiff_t>(i + n));
            if (keywords.count(phrase)) continue;
            if (idf_table.phrase_idf(phrase) > threshold) keywords.insert(std::move(phrase));
        }
    }
    return {keywords.begin(), keywords.end()};
}

}  // namespace summeval
