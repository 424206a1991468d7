#pragma once

#include <span>
#include <vector>

namespace summeval {

/// Sample Pearson correlation. Requires |x| = |y| >= 3; a constant
/// vector raises undefined_correlation_error, never a silent 0.
double pearson(std::span<const double> x, std::span<const double> y);

/// Pearson correlation of fractional (average) ranks.
double spearman(std::span<const double> x, std::span<const double> y);

/// Kendall tau-b: (concordant - discordant) / sqrt((n0-n1)(n0-n2)).
double kendall(std::span<const double> x, std::span<const double> y);

/// 1-based average ranks (ties share the mean of their rank range).
std::vector<double> fractional_ranks(std::span<const double> values);

}  // namespace summeval
