#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace summeval {

/// Extractive selectors. Each returns distinct sentence indices in
/// document order, |selection| = min(k, #sentences); every tie during
/// ranking is broken by ascending sentence index.

/// Stationary distribution of the damped random walk over the sentence
/// similarity graph (cosine over tf-idf). Sums to 1.
std::vector<double> lexrank_centrality(const std::vector<std::string>& sentences,
                                       double damping = 0.85, double sim_threshold = 0.1,
                                       double eps = 1e-4);

std::vector<std::size_t> lexrank(const std::vector<std::string>& sentences, std::size_t k,
                                 double damping = 0.85, double sim_threshold = 0.1,
                                 double eps = 1e-4);

/// Salience = mean document-level content-word frequency of the
/// sentence's tokens.
std::vector<std::size_t> freq_luhn(const std::vector<std::string>& sentences, std::size_t k);

/// Iterative highest-probability-word selection with p(w) <- p(w)^2
/// re-weighting after each pick.
std::vector<std::size_t> sumbasic(const std::vector<std::string>& sentences, std::size_t k);

/// Greedy selection minimizing KL(document || summary) with add-alpha
/// smoothed summary unigrams.
std::vector<std::size_t> kl_greedy(const std::vector<std::string>& sentences, std::size_t k,
                                   double smoothing_alpha = 1e-3);

/// Maximal marginal relevance against the document centroid (or an
/// explicit query sentence).
std::vector<std::size_t> mmr(const std::vector<std::string>& sentences, std::size_t k,
                             double lambda = 0.5, const std::string& query = "");

enum class SummarizerMethod { LexRank, Freq, SumBasic, Kl, Mmr };

std::string_view to_string(SummarizerMethod method);

struct SummaryRequest {
    std::size_t target_sentences = 3;
    SummarizerMethod method = SummarizerMethod::LexRank;
    double damping = 0.85;
    double sim_threshold = 0.1;
    double lambda = 0.5;
    double smoothing_alpha = 1e-3;
};

/// Split a document into sentences and run the requested selector;
/// returns the selected sentences in document order.
std::vector<std::string> summarize(const std::string& document_text, const SummaryRequest& request);

}  // namespace summeval
