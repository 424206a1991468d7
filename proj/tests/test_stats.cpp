#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "summeval/errors.hpp"
#include "summeval/stats.hpp"

using namespace summeval;

namespace {

std::vector<double> random_vector(std::mt19937& rng, std::size_t n, bool with_ties) {
    std::vector<double> v(n);
    for (double& x : v)
        x = with_ties ? static_cast<double>(rng() % 5) : std::uniform_real_distribution<>(0, 1)(rng);
    return v;
}

// Independent ranking: per-element counting instead of sort-and-group.
std::vector<double> counting_ranks(const std::vector<double>& v) {
    std::vector<double> ranks(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::size_t less = 0;
        std::size_t equal = 0;
        for (double x : v) {
            if (x < v[i]) ++less;
            if (x == v[i]) ++equal;
        }
        ranks[i] = static_cast<double>(less) + (static_cast<double>(equal - 1)) / 2.0 + 1.0;
    }
    return ranks;
}

// tau-b through the sign-product formulation.
double sign_product_tau(const std::vector<double>& x, const std::vector<double>& y) {
    double num = 0.0;
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            const double a = x[i] == x[j] ? 0.0 : (x[i] < x[j] ? 1.0 : -1.0);
            const double b = y[i] == y[j] ? 0.0 : (y[i] < y[j] ? 1.0 : -1.0);
            num += a * b;
            sx += a * a;
            sy += b * b;
        }
    }
    return num / std::sqrt(sx * sy);
}

}  // namespace

TEST_CASE("pearson fixtures") {
    std::vector<double> x{1, 2, 3};
    std::vector<double> y{2, 4, 6};
    CHECK(pearson(x, y) == doctest::Approx(1.0));
    std::vector<double> neg{-1, -2, -3};
    CHECK(pearson(x, neg) == doctest::Approx(-1.0));
    std::vector<double> x4{1, 2, 3, 4};
    std::vector<double> y4{1, 3, 2, 4};
    CHECK(pearson(x4, y4) == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("spearman fixtures") {
    std::vector<double> x{1, 5, 9, 20};
    std::vector<double> y{2, 4, 11, 40};
    CHECK(spearman(x, y) == doctest::Approx(1.0));
    std::vector<double> x4{1, 2, 3, 4};
    std::vector<double> y4{1, 3, 2, 4};
    CHECK(spearman(x4, y4) == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("kendall fixtures") {
    std::vector<double> x{1, 2, 3, 4};
    std::vector<double> reversed{4, 3, 2, 1};
    CHECK(kendall(x, reversed) == doctest::Approx(-1.0));
    std::vector<double> y{1, 3, 2, 4};
    CHECK(kendall(x, y) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("input validation and constant vectors") {
    std::vector<double> x{1, 2};
    std::vector<double> y{1, 2};
    CHECK_THROWS_AS(pearson(x, y), std::invalid_argument);
    std::vector<double> a{1, 2, 3};
    std::vector<double> b{1, 2};
    CHECK_THROWS_AS(pearson(a, b), std::invalid_argument);
    std::vector<double> constant{2, 2, 2};
    CHECK_THROWS_AS(pearson(a, constant), undefined_correlation_error);
    CHECK_THROWS_AS(spearman(constant, a), undefined_correlation_error);
    CHECK_THROWS_AS(kendall(a, constant), undefined_correlation_error);
}

TEST_CASE("self correlation is 1") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> v = random_vector(rng, 3 + rng() % 10, trial % 2 == 0);
        if (std::all_of(v.begin(), v.end(), [&](double x) { return x == v[0]; })) continue;
        CHECK(pearson(v, v) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(spearman(v, v) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(kendall(v, v) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("symmetry in the two arguments") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 4 + rng() % 8;
        std::vector<double> x = random_vector(rng, n, true);
        std::vector<double> y = random_vector(rng, n, true);
        if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; })) continue;
        if (std::all_of(y.begin(), y.end(), [&](double v) { return v == y[0]; })) continue;
        CHECK(pearson(x, y) == doctest::Approx(pearson(y, x)).epsilon(1e-12));
        CHECK(spearman(x, y) == doctest::Approx(spearman(y, x)).epsilon(1e-12));
        CHECK(kendall(x, y) == doctest::Approx(kendall(y, x)).epsilon(1e-12));
    }
}

TEST_CASE("invariance under monotone transforms") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 4 + rng() % 8;
        std::vector<double> x = random_vector(rng, n, false);
        std::vector<double> y = random_vector(rng, n, false);
        std::vector<double> affine(n);
        std::vector<double> monotone(n);
        for (std::size_t i = 0; i < n; ++i) {
            affine[i] = 3.5 * x[i] + 2.0;
            monotone[i] = std::exp(x[i]);  // strictly increasing
        }
        CHECK(pearson(affine, y) == doctest::Approx(pearson(x, y)).epsilon(1e-9));
        CHECK(spearman(monotone, y) == doctest::Approx(spearman(x, y)).epsilon(1e-9));
        CHECK(kendall(monotone, y) == doctest::Approx(kendall(x, y)).epsilon(1e-12));
    }
}

TEST_CASE("spearman equals pearson applied to independent ranks") {
    std::mt19937 rng(73);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 3 + rng() % 10;
        std::vector<double> x = random_vector(rng, n, true);
        std::vector<double> y = random_vector(rng, n, true);
        if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; })) continue;
        if (std::all_of(y.begin(), y.end(), [&](double v) { return v == y[0]; })) continue;
        const double expected = pearson(counting_ranks(x), counting_ranks(y));
        CHECK(spearman(x, y) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("kendall matches the sign-product formulation exactly") {
    std::mt19937 rng(79);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 3 + rng() % 10;
        std::vector<double> x = random_vector(rng, n, true);
        std::vector<double> y = random_vector(rng, n, true);
        if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; })) continue;
        if (std::all_of(y.begin(), y.end(), [&](double v) { return v == y[0]; })) continue;
        CHECK(kendall(x, y) == doctest::Approx(sign_product_tau(x, y)).epsilon(1e-12));
    }
}

TEST_CASE("fractional ranks average over tie runs") {
    std::vector<double> v{10, 20, 20, 30};
    std::vector<double> expected{1.0, 2.5, 2.5, 4.0};
    CHECK(fractional_ranks(v) == expected);
}
