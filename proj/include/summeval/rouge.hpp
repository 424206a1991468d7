#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace summeval {

enum class MultiRefAggregation { Average, Max };

struct RougeOptions {
    bool stem = true;
    bool remove_stopwords = true;
    MultiRefAggregation multi_ref = MultiRefAggregation::Average;
    double w_weight = 1.2;                    // ROUGE-W weighting exponent, > 1
    std::optional<std::size_t> s_max_gap;     // skip-bigram gap limit; unset = unlimited
};

struct RougeResult {
    double recall = 0.0;
    double precision = 0.0;
    double f = 0.0;  // balanced F, recomputed from aggregated recall/precision
    std::string variant;
    bool empty_input = false;  // candidate or a reference empty after preprocessing
};

RougeResult rouge_n(std::string_view candidate, const std::vector<std::string>& references,
                    int n, const RougeOptions& options = {});
RougeResult rouge_l(std::string_view candidate, const std::vector<std::string>& references,
                    const RougeOptions& options = {});
RougeResult rouge_w(std::string_view candidate, const std::vector<std::string>& references,
                    const RougeOptions& options = {});
RougeResult rouge_s(std::string_view candidate, const std::vector<std::string>& references,
                    const RougeOptions& options = {});
RougeResult rouge_su(std::string_view candidate, const std::vector<std::string>& references,
                     const RougeOptions& options = {});

}  // namespace summeval
