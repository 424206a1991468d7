#include "summeval/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "summeval/textproc.hpp"

namespace summeval {

namespace {

using TermVector = std::map<std::string, double>;

struct SentenceModel {
    std::vector<std::vector<std::string>> terms;  // content terms per sentence
    std::vector<TermVector> vectors;              // tf-idf weights
    std::size_t count = 0;
};

SentenceModel build_model(const std::vector<std::string>& sentences) {
    if (sentences.empty()) throw std::invalid_argument("no sentences to summarize");
    SentenceModel model;
    model.count = sentences.size();
    model.terms.reserve(sentences.size());
    bool any_content = false;
    for (const std::string& sentence : sentences) {
        model.terms.push_back(analyze(sentence, default_analyzer_options()));
        any_content = any_content || !model.terms.back().empty();
    }
    if (!any_content)
        throw std::invalid_argument("all sentences are empty after preprocessing");

    // Sentence-level idf keeps the weighting self-contained per document.
    std::map<std::string, std::size_t> sentence_freq;
    for (const auto& terms : model.terms) {
        std::set<std::string_view> seen(terms.begin(), terms.end());
        for (std::string_view t : seen) ++sentence_freq[std::string(t)];
    }
    const double s = static_cast<double>(sentences.size());
    model.vectors.resize(sentences.size());
    for (std::size_t i = 0; i < model.terms.size(); ++i) {
        TermVector& vec = model.vectors[i];
        for (const std::string& t : model.terms[i]) vec[t] += 1.0;
        for (auto& [t, weight] : vec)
            weight *= std::log((s + 1.0) / (static_cast<double>(sentence_freq[t]) + 1.0));
    }
    return model;
}

double cosine(const TermVector& a, const TermVector& b) {
    double dot = 0.0;
    double norm_a = 0.0;
    double norm_b = 0.0;
    for (const auto& [t, w] : a) {
        norm_a += w * w;
        auto it = b.find(t);
        if (it != b.end()) dot += w * it->second;
    }
    for (const auto& [t, w] : b) norm_b += w * w;
    if (norm_a <= 0.0 || norm_b <= 0.0) return 0.0;
    return dot / std::sqrt(norm_a * norm_b);
}

// Top-k indices by (score desc, index asc), returned in document order.
std::vector<std::size_t> select_top(const std::vector<double>& scores, std::size_t k) {
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return scores[a] > scores[b];
    });
    order.resize(std::min(k, order.size()));
    std::sort(order.begin(), order.end());
    return order;
}

std::vector<std::size_t> all_indices(std::size_t count) {
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    return order;
}

}  // namespace

std::vector<double> lexrank_centrality(const std::vector<std::string>& sentences, double damping,
                                       double sim_threshold, double eps) {
    SentenceModel model = build_model(sentences);
    const std::size_t n = model.count;

    std::vector<std::vector<double>> sim(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            sim[i][j] = sim[j][i] = cosine(model.vectors[i], model.vectors[j]);

    std::vector<std::vector<double>> weight(n, std::vector<double>(n, 0.0));
    bool connected = true;
    {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && sim[i][j] >= sim_threshold) weight[i][j] = sim[i][j];
        // Reachability check from node 0 over thresholded edges.
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < n; ++v)
                if (!seen[v] && weight[u][v] > 0.0) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
        connected = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    }
    if (!connected) {
        // Fall back to the continuous similarity graph to avoid rank
        // degeneracy on small or sparse documents.
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) weight[i][j] = i == j ? 0.0 : sim[i][j];
    }

    std::vector<double> out_degree(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        out_degree[i] = std::accumulate(weight[i].begin(), weight[i].end(), 0.0);

    std::vector<double> p(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n, 0.0);
    const double teleport = (1.0 - damping) / static_cast<double>(n);
    for (int iter = 0; iter < 1000; ++iter) {
        double dangling = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            if (out_degree[i] <= 0.0) dangling += p[i];
        for (std::size_t v = 0; v < n; ++v) {
            double incoming = dangling / static_cast<double>(n);
            for (std::size_t u = 0; u < n; ++u)
                if (out_degree[u] > 0.0 && weight[u][v] > 0.0)
                    incoming += p[u] * weight[u][v] / out_degree[u];
            next[v] = teleport + damping * incoming;
        }
        double delta = 0.0;
        for (std::size_t v = 0; v < n; ++v) delta += std::abs(next[v] - p[v]);
        p.swap(next);
        if (delta < eps) break;
    }
    return p;
}

std::vector<std::size_t> lexrank(const std::vector<std::string>& sentences, std::size_t k,
                                 double damping, double sim_threshold, double eps) {
    if (k >= sentences.size()) {
        if (sentences.empty()) throw std::invalid_argument("no sentences to summarize");
        return all_indices(sentences.size());
    }
    return select_top(lexrank_centrality(sentences, damping, sim_threshold, eps), k);
}

std::vector<std::size_t> freq_luhn(const std::vector<std::string>& sentences, std::size_t k) {
    SentenceModel model = build_model(sentences);
    if (k >= sentences.size()) return all_indices(sentences.size());

    std::map<std::string, double> freq;
    for (const auto& terms : model.terms)
        for (const std::string& t : terms) freq[t] += 1.0;

    std::vector<double> scores(model.count, 0.0);
    for (std::size_t i = 0; i < model.count; ++i) {
        const auto& terms = model.terms[i];
        if (terms.empty()) continue;
        double sum = 0.0;
        for (const std::string& t : terms) sum += freq[t];
        scores[i] = sum / static_cast<double>(terms.size());
    }
    return select_top(scores, k);
}

std::vector<std::size_t> sumbasic(const std::vector<std::string>& sentences, std::size_t k) {
    SentenceModel model = build_model(sentences);
    if (k >= sentences.size()) return all_indices(sentences.size());

    std::map<std::string, double> p;
    double total = 0.0;
    for (const auto& terms : model.terms)
        for (const std::string& t : terms) {
            p[t] += 1.0;
            total += 1.0;
        }
    for (auto& [t, weight] : p) weight /= total;

    std::vector<bool> selected(model.count, false);
    std::vector<std::size_t> picked;
    while (picked.size() < k) {
        // Highest-probability word that still occurs in an unselected
        // sentence; ties go to the lexicographically smaller word.
        std::string best_word;
        double best_p = -1.0;
        for (const auto& [word, weight] : p) {
            if (weight <= best_p) continue;
            bool usable = false;
            for (std::size_t i = 0; i < model.count && !usable; ++i)
                usable = !selected[i] &&
                         std::find(model.terms[i].begin(), model.terms[i].end(), word) !=
                             model.terms[i].end();
            if (usable) {
                best_p = weight;
                best_word = word;
            }
        }
        if (best_word.empty()) {
            // Only contentless sentences remain; fill in document order.
            for (std::size_t i = 0; i < model.count && picked.size() < k; ++i)
                if (!selected[i]) {
                    selected[i] = true;
                    picked.push_back(i);
                }
            break;
        }
        std::size_t best_sentence = model.count;
        double best_avg = -1.0;
        for (std::size_t i = 0; i < model.count; ++i) {
            if (selected[i] || model.terms[i].empty()) continue;
            if (std::find(model.terms[i].begin(), model.terms[i].end(), best_word) ==
                model.terms[i].end())
                continue;
            double avg = 0.0;
            for (const std::string& t : model.terms[i]) avg += p[t];
            avg /= static_cast<double>(model.terms[i].size());
            if (avg > best_avg) {
                best_avg = avg;
                best_sentence = i;
            }
        }
        selected[best_sentence] = true;
        picked.push_back(best_sentence);
        std::set<std::string_view> words(model.terms[best_sentence].begin(),
                                         model.terms[best_sentence].end());
        for (std::string_view word : words) {
            double& weight = p[std::string(word)];
            weight *= weight;
        }
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

std::vector<std::size_t> kl_greedy(const std::vector<std::string>& sentences, std::size_t k,
                                   double smoothing_alpha) {
    SentenceModel model = build_model(sentences);
    if (k >= sentences.size()) return all_indices(sentences.size());

    std::map<std::string, double> doc_counts;
    double doc_total = 0.0;
    for (const auto& terms : model.terms)
        for (const std::string& t : terms) {
            doc_counts[t] += 1.0;
            doc_total += 1.0;
        }
    const double vocab = static_cast<double>(doc_counts.size());

    std::map<std::string, double> summary_counts;
    double summary_len = 0.0;
    auto divergence = [&](const std::vector<std::string>& added) {
        double extra_len = static_cast<double>(added.size());
        double kl = 0.0;
        for (const auto& [word, count] : doc_counts) {
            double q_count = smoothing_alpha;
            if (auto it = summary_counts.find(word); it != summary_counts.end())
                q_count += it->second;
            q_count += static_cast<double>(std::count(added.begin(), added.end(), word));
            const double q = q_count / (summary_len + extra_len + smoothing_alpha * vocab);
            const double prob = count / doc_total;
            kl += prob * std::log(prob / q);
        }
        return kl;
    };

    std::vector<bool> selected(model.count, false);
    std::vector<std::size_t> picked;
    while (picked.size() < k) {
        std::size_t best = model.count;
        double best_kl = 0.0;
        for (std::size_t i = 0; i < model.count; ++i) {
            if (selected[i]) continue;
            const double kl = divergence(model.terms[i]);
            if (best == model.count || kl < best_kl) {
                best = i;
                best_kl = kl;
            }
        }
        selected[best] = true;
        picked.push_back(best);
        for (const std::string& t : model.terms[best]) summary_counts[t] += 1.0;
        summary_len += static_cast<double>(model.terms[best].size());
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

std::vector<std::size_t> mmr(const std::vector<std::string>& sentences, std::size_t k,
                             double lambda, const std::string& query) {
    if (lambda < 0.0 || lambda > 1.0) throw std::invalid_argument("lambda must be in [0, 1]");
    if (k == 0) return {};
    SentenceModel model = build_model(sentences);
    if (k >= sentences.size()) return all_indices(sentences.size());

    TermVector query_vec;
    if (!query.empty()) {
        for (const std::string& t : analyze(query, default_analyzer_options()))
            query_vec[t] += 1.0;
    } else {
        // Document centroid.
        for (const TermVector& vec : model.vectors)
            for (const auto& [t, w] : vec) query_vec[t] += w / static_cast<double>(model.count);
    }

    std::vector<double> relevance(model.count, 0.0);
    for (std::size_t i = 0; i < model.count; ++i)
        relevance[i] = cosine(model.vectors[i], query_vec);

    std::vector<bool> selected(model.count, false);
    std::vector<std::size_t> picked;
    while (picked.size() < k) {
        std::size_t best = model.count;
        double best_score = 0.0;
        for (std::size_t i = 0; i < model.count; ++i) {
            if (selected[i]) continue;
            double redundancy = 0.0;
            for (std::size_t s : picked)
                redundancy = std::max(redundancy, cosine(model.vectors[i], model.vectors[s]));
            const double score = lambda * relevance[i] - (1.0 - lambda) * redundancy;
            if (best == model.count || score > best_score) {
                best = i;
                best_score = score;
            }
        }
        selected[best] = true;
        picked.push_back(best);
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

std::string_view to_string(SummarizerMethod method) {
    switch (method) {
        case SummarizerMethod::LexRank: return "lexrank";
        case SummarizerMethod::Freq: return "freq";
        case SummarizerMethod::SumBasic: return "sumbasic";
        case SummarizerMethod::Kl: return "kl";
        case SummarizerMethod::Mmr: return "mmr";
    }
    return "lexrank";
}

std::vector<std::string> summarize(const std::string& document_text,
                                   const SummaryRequest& request) {
    std::vector<std::string> sentences = sentence_split(document_text);
    if (sentences.empty()) throw std::invalid_argument("document has no sentences");
    std::vector<std::size_t> indices;
    switch (request.method) {
        case SummarizerMethod::LexRank:
            indices = lexrank(sentences, request.target_sentences, request.damping,
                              request.sim_threshold);
            break;
        case SummarizerMethod::Freq:
            indices = freq_luhn(sentences, request.target_sentences);
            break;
        case SummarizerMethod::SumBasic:
            indices = sumbasic(sentences, request.target_sentences);
            break;
        case SummarizerMethod::Kl:
            indices = kl_greedy(sentences, request.target_sentences, request.smoothing_alpha);
            break;
        case SummarizerMethod::Mmr:
            indices = mmr(sentences, request.target_sentences, request.lambda);
            break;
    }
    std::vector<std::string> out;
    out.reserve(indices.size());
    for (std::size_t i : indices) out.push_back(sentences[i]);
    return out;
}

}  // namespace summeval
