#include "summeval/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "summeval/errors.hpp"

namespace summeval {

namespace {

void check_inputs(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("vectors must have equal length");
    if (x.size() < 3) throw std::invalid_argument("correlation needs at least 3 pairs");
    for (double v : x)
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite value in input");
    for (double v : y)
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite value in input");
}

bool is_constant(std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

}  // namespace

double pearson(std::span<const double> x, std::span<const double> y) {
    check_inputs(x, y);
    if (is_constant(x) || is_constant(y))
        throw undefined_correlation_error("pearson undefined for a constant vector");
    const double n = static_cast<double>(x.size());
    const double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0;
    double syy = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mean_x;
        const double dy = y[i] - mean_y;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    const double r = sxy / std::sqrt(sxx * syy);
    return std::clamp(r, -1.0, 1.0);
}

std::vector<double> fractional_ranks(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(values.size(), 0.0);
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
        // 1-based ranks i+1..j+1 average to (i + j) / 2 + 1.
        const double rank = (static_cast<double>(i + j) / 2.0) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
    check_inputs(x, y);
    if (is_constant(x) || is_constant(y))
        throw undefined_correlation_error("spearman undefined for a constant vector");
    const std::vector<double> rx = fractional_ranks(x);
    const std::vector<double> ry = fractional_ranks(y);
    return pearson(rx, ry);
}

double kendall(std::span<const double> x, std::span<const double> y) {
    check_inputs(x, y);
    if (is_constant(x) || is_constant(y))
        throw undefined_correlation_error("kendall undefined for a constant vector");
    long long concordant = 0;
    long long discordant = 0;
    long long ties_x = 0;
    long long ties_y = 0;
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dx = x[i] - x[j];
            const double dy = y[i] - y[j];
            if (dx == 0.0 && dy == 0.0) continue;
            if (dx == 0.0) {
                ++ties_x;
            } else if (dy == 0.0) {
                ++ties_y;
            } else if (dx * dy > 0.0) {
                ++concordant;
            } else {
                ++discordant;
            }
        }
    }
    const long long n0 = static_cast<long long>(n) * (static_cast<long long>(n) - 1) / 2;
    // n1 and n2 are the tied-pair counts of the tau-b correction.
    const long long n1 = ties_x + (n0 - concordant - discordant - ties_x - ties_y);
    const long long n2 = ties_y + (n0 - concordant - discordant - ties_x - ties_y);
    const double denom = std::sqrt(static_cast<double>(n0 - n1) * static_cast<double>(n0 - n2));
    if (denom == 0.0) throw undefined_correlation_error("kendall tau-b denominator is zero");
    const double tau = static_cast<double>(concordant - discordant) / denom;
    return std::clamp(tau, -1.0, 1.0);
}

}  // namespace summeval
