#include "summeval/pyramid.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "summeval/errors.hpp"

namespace summeval {

Pyramid Pyramid::build(const std::vector<Nugget>& nuggets) {
    if (nuggets.empty()) throw std::invalid_argument("cannot build a pyramid from no nuggets");
    Pyramid pyramid;
    int top = 0;
    for (const Nugget& nugget : nuggets) {
        if (nugget.tier < 1)
            throw std::invalid_argument("nugget '" + nugget.id + "' has tier < 1");
        if (nugget.id.empty() || nugget.text.empty())
            throw std::invalid_argument("nugget with empty id or text");
        top = std::max(top, nugget.tier);
        pyramid.nugget_tiers_.emplace_back(nugget.id, nugget.tier);
    }
    std::sort(pyramid.nugget_tiers_.begin(), pyramid.nugget_tiers_.end());
    for (std::size_t i = 1; i < pyramid.nugget_tiers_.size(); ++i)
        if (pyramid.nugget_tiers_[i].first == pyramid.nugget_tiers_[i - 1].first)
            throw std::invalid_argument("duplicate nugget id '" + pyramid.nugget_tiers_[i].first +
                                        "'");
    pyramid.tier_sizes_.assign(static_cast<std::size_t>(top), 0);
    for (const auto& [id, tier] : pyramid.nugget_tiers_)
        ++pyramid.tier_sizes_[static_cast<std::size_t>(tier) - 1];
    pyramid.total_ = pyramid.nugget_tiers_.size();
    return pyramid;
}

std::size_t Pyramid::tier_size(int tier) const {
    if (tier < 1 || tier > top_tier()) return 0;
    return tier_sizes_[static_cast<std::size_t>(tier) - 1];
}

int Pyramid::tier_of(std::string_view nugget_id) const {
    auto it = std::lower_bound(nugget_tiers_.begin(), nugget_tiers_.end(), nugget_id,
                               [](const auto& entry, std::string_view key) {
                                   return std::string_view(entry.first) < key;
                               });
    if (it == nugget_tiers_.end() || it->first != nugget_id)
        throw not_found_error("unknown nugget id '" + std::string(nugget_id) + "'");
    return it->second;
}

bool Pyramid::contains(std::string_view nugget_id) const {
    auto it = std::lower_bound(nugget_tiers_.begin(), nugget_tiers_.end(), nugget_id,
                               [](const auto& entry, std::string_view key) {
                                   return std::string_view(entry.first) < key;
                               });
    return it != nugget_tiers_.end() && it->first == nugget_id;
}

double pyramid_score(const CandidateMatch& match, const Pyramid& pyramid) {
    std::set<std::string> matched(match.matched_ids.begin(), match.matched_ids.end());
    for (const std::string& id : matched)
        if (!pyramid.contains(id))
            throw std::invalid_argument("matched nugget '" + id + "' is not in the pyramid");

    const std::size_t x = matched.size();
    if (x == 0) return 0.0;  // nothing matched; caller sees the zero
    if (x > pyramid.total_nuggets())
        throw std::invalid_argument("match size exceeds pyramid size");

    long long numerator = 0;
    for (const std::string& id : matched) numerator += pyramid.tier_of(id);

    // j = highest tier whose suffix holds at least X nuggets.
    const int n = pyramid.top_tier();
    int j = 1;
    std::size_t suffix = 0;
    for (int i = n; i >= 1; --i) {
        suffix += pyramid.tier_size(i);
        if (suffix >= x) {
            j = i;
            break;
        }
    }
    long long p_max = 0;
    std::size_t above = 0;
    for (int i = j + 1; i <= n; ++i) {
        p_max += static_cast<long long>(i) * static_cast<long long>(pyramid.tier_size(i));
        above += pyramid.tier_size(i);
    }
    p_max += static_cast<long long>(j) * static_cast<long long>(x - above);
    return static_cast<double>(numerator) / static_cast<double>(p_max);
}

}  // namespace summeval
