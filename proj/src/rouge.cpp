#include "summeval/rouge.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_map>

#include "summeval/textproc.hpp"

namespace summeval {

namespace {

constexpr char kSep = '\x1f';
constexpr char kUnigramMark = '\x02';  // pools unigrams with skip-bigrams in ROUGE-SU

std::vector<std::string> prepare(std::string_view text, const RougeOptions& options) {
    TokenizeOptions tok;
    tok.lowercase = true;
    tok.strip_numeric = false;
    tok.remove_stopwords = options.remove_stopwords;
    tok.stem = options.stem;
    return analyze(text, tok);
}

using Counts = std::unordered_map<std::string, std::size_t>;

Counts ngram_map(const std::vector<std::string>& terms, std::size_t n) {
    Counts counts;
    if (terms.size() < n) return counts;
    for (std::size_t i = 0; i + n <= terms.size(); ++i) {
        std::string key = terms[i];
        for (std::size_t j = 1; j < n; ++j) {
            key.push_back(kSep);
            key.append(terms[i + j]);
        }
        ++counts[key];
    }
    return counts;
}

// Ordered pairs (i, j), i < j, with at most max_gap tokens skipped.
Counts skip_bigram_map(const std::vector<std::string>& terms,
                       const std::optional<std::size_t>& max_gap, bool include_unigrams) {
    Counts counts;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::size_t limit =
            max_gap ? std::min(terms.size(), i + *max_gap + 2) : terms.size();
        for (std::size_t j = i + 1; j < limit; ++j)
            ++counts[terms[i] + kSep + terms[j]];
        if (include_unigrams) ++counts[kUnigramMark + terms[i]];
    }
    return counts;
}

std::size_t total(const Counts& counts) {
    std::size_t sum = 0;
    for (const auto& [key, count] : counts) sum += count;
    return sum;
}

std::size_t clipped_overlap(const Counts& candidate, const Counts& reference) {
    std::size_t overlap = 0;
    for (const auto& [key, count] : reference) {
        auto it = candidate.find(key);
        if (it != candidate.end()) overlap += std::min(count, it->second);
    }
    return overlap;
}

struct PairScore {
    double recall = 0.0;
    double precision = 0.0;
};

double f_score(double recall, double precision) {
    if (recall + precision <= 0.0) return 0.0;
    return 2.0 * recall * precision / (recall + precision);
}

RougeResult aggregate(const std::vector<PairScore>& per_reference, bool any_empty,
                      const RougeOptions& options, std::string variant) {
    RougeResult result;
    result.variant = std::move(variant);
    result.empty_input = any_empty;
    if (per_reference.empty()) return result;
    if (options.multi_ref == MultiRefAggregation::Average) {
        for (const PairScore& score : per_reference) {
            result.recall += score.recall;
            result.precision += score.precision;
        }
        result.recall /= static_cast<double>(per_reference.size());
        result.precision /= static_cast<double>(per_reference.size());
    } else {
        for (const PairScore& score : per_reference) {
            result.recall = std::max(result.recall, score.recall);
            result.precision = std::max(result.precision, score.precision);
        }
    }
    result.f = f_score(result.recall, result.precision);
    return result;
}

double lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    const std::size_t m = a.size();
    const std::size_t n = b.size();
    std::vector<std::size_t> prev(n + 1, 0), cur(n + 1, 0);
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            if (a[i - 1] == b[j - 1])
                cur[j] = prev[j - 1] + 1;
            else
                cur[j] = std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return static_cast<double>(prev[n]);
}

// Weighted LCS with f(k) = k^w: consecutive runs earn f(run+1) - f(run).
double wlcs(const std::vector<std::string>& a, const std::vector<std::string>& b, double w) {
    const std::size_t m = a.size();
    const std::size_t n = b.size();
    std::vector<std::vector<double>> c(m + 1, std::vector<double>(n + 1, 0.0));
    std::vector<std::vector<std::size_t>> run(m + 1, std::vector<std::size_t>(n + 1, 0));
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            if (a[i - 1] == b[j - 1]) {
                const std::size_t k = run[i - 1][j - 1];
                c[i][j] = c[i - 1][j - 1] + std::pow(static_cast<double>(k + 1), w) -
                          std::pow(static_cast<double>(k), w);
                run[i][j] = k + 1;
            } else if (c[i - 1][j] >= c[i][j - 1]) {
                c[i][j] = c[i - 1][j];
            } else {
                c[i][j] = c[i][j - 1];
            }
        }
    }
    return c[m][n];
}

std::string w_variant_name(double w) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "ROUGE-W-%g", w);
    return buf;
}

}  // namespace

RougeResult rouge_n(std::string_view candidate, const std::vector<std::string>& references,
                    int n, const RougeOptions& options) {
    if (n < 1 || n > 4) throw std::invalid_argument("rouge_n supports n in [1, 4]");
    const std::vector<std::string> cand = prepare(candidate, options);
    const Counts cand_counts = ngram_map(cand, static_cast<std::size_t>(n));
    const std::size_t cand_total = total(cand_counts);

    std::vector<PairScore> scores;
    bool any_empty = cand.empty();
    for (const std::string& reference : references) {
        const std::vector<std::string> ref = prepare(reference, options);
        any_empty = any_empty || ref.empty();
        const Counts ref_counts = ngram_map(ref, static_cast<std::size_t>(n));
        const std::size_t ref_total = total(ref_counts);
        const std::size_t overlap = clipped_overlap(cand_counts, ref_counts);
        PairScore score;
        if (ref_total > 0) score.recall = static_cast<double>(overlap) / static_cast<double>(ref_total);
        if (cand_total > 0)
            score.precision = static_cast<double>(overlap) / static_cast<double>(cand_total);
        scores.push_back(score);
    }
    return aggregate(scores, any_empty, options, "ROUGE-" + std::to_string(n));
}

RougeResult rouge_l(std::string_view candidate, const std::vector<std::string>& references,
                    const RougeOptions& options) {
    const std::vector<std::string> cand = prepare(candidate, options);
    std::vector<PairScore> scores;
    bool any_empty = cand.empty();
    for (const std::string& reference : references) {
        const std::vector<std::string> ref = prepare(reference, options);
        any_empty = any_empty || ref.empty();
        const double lcs = lcs_length(cand, ref);
        PairScore score;
        if (!ref.empty()) score.recall = lcs / static_cast<double>(ref.size());
        if (!cand.empty()) score.precision = lcs / static_cast<double>(cand.size());
        scores.push_back(score);
    }
    return aggregate(scores, any_empty, options, "ROUGE-L");
}

RougeResult rouge_w(std::string_view candidate, const std::vector<std::string>& references,
                    const RougeOptions& options) {
    if (options.w_weight <= 1.0) throw std::invalid_argument("w_weight must be > 1");
    const double w = options.w_weight;
    const std::vector<std::string> cand = prepare(candidate, options);
    std::vector<PairScore> scores;
    bool any_empty = cand.empty();
    for (const std::string& reference : references) {
        const std::vector<std::string> ref = prepare(reference, options);
        any_empty = any_empty || ref.empty();
        const double weighted = wlcs(cand, ref, w);
        PairScore score;
        if (!ref.empty())
            score.recall = std::pow(weighted / std::pow(static_cast<double>(ref.size()), w), 1.0 / w);
        if (!cand.empty())
            score.precision =
                std::pow(weighted / std::pow(static_cast<double>(cand.size()), w), 1.0 / w);
        scores.push_back(score);
    }
    return aggregate(scores, any_empty, options, w_variant_name(w));
}

namespace {

RougeResult rouge_skip(std::string_view candidate, const std::vector<std::string>& references,
                       const RougeOptions& options, bool include_unigrams, std::string variant) {
    const std::vector<std::string> cand = prepare(candidate, options);
    const Counts cand_counts = skip_bigram_map(cand, options.s_max_gap, include_unigrams);
    const std::size_t cand_total = total(cand_counts);

    std::vector<PairScore> scores;
    bool any_empty = cand.empty();
    for (const std::string& reference : references) {
        const std::vector<std::string> ref = prepare(reference, options);
        any_empty = any_empty || ref.empty();
        const Counts ref_counts = skip_bigram_map(ref, options.s_max_gap, include_unigrams);
        const std::size_t ref_total = total(ref_counts);
        const std::size_t overlap = clipped_overlap(cand_counts, ref_counts);
        PairScore score;
        if (ref_total > 0) score.recall = static_cast<double>(overlap) / static_cast<double>(ref_total);
        if (cand_total > 0)
            score.precision = static_cast<double>(overlap) / static_cast<double>(cand_total);
        scores.push_back(score);
    }
    return aggregate(scores, any_empty, options, std::move(variant));
}

}  // namespace

RougeResult rouge_s(std::string_view candidate, const std::vector<std::string>& references,
                    const RougeOptions& options) {
    return rouge_skip(candidate, references, options, false, "ROUGE-S");
}

RougeResult rouge_su(std::string_view candidate, const std::vector<std::string>& references,
                     const RougeOptions& options) {
    return rouge_skip(candidate, references, options, true, "ROUGE-SU");
}

}  // namespace summeval
