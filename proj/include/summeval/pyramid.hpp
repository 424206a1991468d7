#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace summeval {

struct Nugget {
    std::string id;
    std::string text;
    int tier = 1;  // number of gold summaries the nugget occurs in
};

/// Tiered nugget structure; tier i holds nuggets occurring in exactly i
/// gold summaries, the top tier being the most important.
class Pyramid {
  public:
    static Pyramid build(const std::vector<Nugget>& nuggets);

    int top_tier() const { return static_cast<int>(tier_sizes_.size()); }
    std::size_t tier_size(int tier) const;
    std::size_t total_nuggets() const { return total_; }
    /// Tier of a nugget id; throws not_found_error for unknown ids.
    int tier_of(std::string_view nugget_id) const;
    bool contains(std::string_view nugget_id) const;

  private:
    Pyramid() = default;
    std::vector<std::size_t> tier_sizes_;                  // index 0 = tier 1
    std::vector<std::pair<std::string, int>> nugget_tiers_;  // sorted by id
    std::size_t total_ = 0;
};

struct CandidateMatch {
    std::vector<std::string> matched_ids;  // duplicates count once
};

/// Normalized pyramid score: P = sum_i i*N_i / P_max with
///   j   = max i such that sum_{t=i..n} |T_t| >= X,
///   P_max = sum_{i=j+1..n} i*|T_i| + j*(X - sum_{i=j+1..n} |T_i|).
/// X = 0 scores 0; unknown ids are rejected.
double pyramid_score(const CandidateMatch& match, const Pyramid& pyramid);

}  // namespace summeval
