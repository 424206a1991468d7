#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "summeval/baselines.hpp"

using namespace summeval;

namespace {

const std::vector<std::string> kWordPool{"alpha",   "beta",   "gamma",  "delta", "epsilon",
                                         "glioma",  "enzyme", "tumor",  "cells", "pathway",
                                         "mutation"};

std::vector<std::string> random_sentences(std::mt19937& rng, std::size_t count) {
    std::vector<std::string> sentences;
    for (std::size_t s = 0; s < count; ++s) {
        std::string text;
        std::size_t len = 1 + rng() % 6;
        for (std::size_t i = 0; i < len; ++i) {
            if (!text.empty()) text += ' ';
            text += kWordPool[rng() % kWordPool.size()];
        }
        sentences.push_back(text);
    }
    return sentences;
}

void check_selection(const std::vector<std::size_t>& selection, std::size_t sentence_count,
                     std::size_t k) {
    CHECK(selection.size() == std::min(k, sentence_count));
    CHECK(std::is_sorted(selection.begin(), selection.end()));
    CHECK(std::adjacent_find(selection.begin(), selection.end()) == selection.end());
    for (std::size_t index : selection) CHECK(index < sentence_count);
}

}  // namespace

TEST_CASE("lexrank: two identical sentences share the centrality mass") {
    std::vector<double> centrality = lexrank_centrality({"alpha beta", "alpha beta"});
    REQUIRE(centrality.size() == 2);
    CHECK(centrality[0] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(centrality[1] == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("lexrank: hub sentence matches the closed-form stationary distribution") {
    // s0 is similar to both others; s1 and s2 share nothing, so the
    // stationary mass is p0 = (1+2d)/(3(1+d)), rest split evenly.
    std::vector<std::string> sentences{"alpha beta", "alpha gamma", "beta delta"};
    const double d = 0.85;
    std::vector<double> centrality = lexrank_centrality(sentences, d, 0.1, 1e-10);
    const double expected_hub = (1.0 + 2.0 * d) / (3.0 * (1.0 + d));
    CHECK(centrality[0] == doctest::Approx(expected_hub).epsilon(1e-6));
    CHECK(centrality[1] == doctest::Approx((1.0 - expected_hub) / 2.0).epsilon(1e-6));
    CHECK(centrality[2] == doctest::Approx((1.0 - expected_hub) / 2.0).epsilon(1e-6));

    auto top = lexrank(sentences, 1, d, 0.1, 1e-10);
    CHECK(top == std::vector<std::size_t>{0});
}

TEST_CASE("lexrank centrality sums to one") {
    std::mt19937 rng(83);
    for (int trial = 0; trial < 20; ++trial) {
        auto sentences = random_sentences(rng, 1 + rng() % 8);
        auto centrality = lexrank_centrality(sentences);
        const double sum = std::accumulate(centrality.begin(), centrality.end(), 0.0);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("lexrank returns everything in document order when k is large") {
    std::vector<std::string> sentences{"alpha beta", "gamma delta", "epsilon alpha"};
    CHECK(lexrank(sentences, 10) == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("all-empty sentences are rejected") {
    CHECK_THROWS_AS(lexrank({"the of", "and but"}, 1), std::invalid_argument);
    CHECK_THROWS_AS(freq_luhn({}, 1), std::invalid_argument);
}

TEST_CASE("freq_luhn scores sentences by mean content-word frequency") {
    // frequencies: alpha 2, beta 2, gamma 1 -> s0 = 2.0, s1 = 1.5
    std::vector<std::string> sentences{"alpha alpha beta", "beta gamma"};
    CHECK(freq_luhn(sentences, 1) == std::vector<std::size_t>{0});

    CHECK(freq_luhn({"alpha"}, 1) == std::vector<std::size_t>{0});

    // uniform frequencies tie; the earlier sentence wins
    CHECK(freq_luhn({"alpha beta", "gamma delta"}, 1) == std::vector<std::size_t>{0});
}

TEST_CASE("sumbasic picks the highest probability word first and reweights") {
    std::vector<std::string> sentences{"alpha beta", "alpha gamma"};
    CHECK(sumbasic(sentences, 1) == std::vector<std::size_t>{0});
    CHECK(sumbasic(sentences, 2) == std::vector<std::size_t>{0, 1});
    CHECK(sumbasic({"alpha beta"}, 1) == std::vector<std::size_t>{0});
}

TEST_CASE("kl_greedy prefers the dominant-word sentence") {
    std::vector<std::string> sentences{"alpha alpha", "beta"};
    CHECK(kl_greedy(sentences, 1) == std::vector<std::size_t>{0});
}

TEST_CASE("kl_greedy with k = sentence count returns all sentences") {
    std::mt19937 rng(89);
    for (int trial = 0; trial < 10; ++trial) {
        auto sentences = random_sentences(rng, 1 + rng() % 6);
        auto selection = kl_greedy(sentences, sentences.size());
        std::vector<std::size_t> expected(sentences.size());
        std::iota(expected.begin(), expected.end(), std::size_t{0});
        CHECK(selection == expected);
    }
}

TEST_CASE("mmr respects lambda") {
    std::vector<std::string> sentences{"alpha beta", "alpha beta", "gamma delta"};
    CHECK(mmr(sentences, 0) == std::vector<std::size_t>{});

    // duplicates are skipped once novelty matters
    auto picked = mmr(sentences, 2, 0.5);
    CHECK(picked == std::vector<std::size_t>{0, 2});

    CHECK_THROWS_AS(mmr(sentences, 1, 1.5), std::invalid_argument);
}

TEST_CASE("mmr with lambda 1 is pure relevance ranking") {
    std::mt19937 rng(97);
    for (int trial = 0; trial < 10; ++trial) {
        auto sentences = random_sentences(rng, 2 + rng() % 6);
        const std::size_t k = 1 + rng() % sentences.size();
        auto picked = mmr(sentences, k, 1.0);
        check_selection(picked, sentences.size(), k);
        // with lambda=1 selection must equal top-k by relevance; recompute
        // relevance through a second mmr call with k=1 repeatedly removed
        // is circular, so check the weaker anchor: the single best pick
        // appears in every prefix.
        auto best = mmr(sentences, 1, 1.0);
        REQUIRE(best.size() == 1);
        CHECK(std::find(picked.begin(), picked.end(), best[0]) != picked.end());
    }
}

TEST_CASE("selectors are deterministic and well-formed") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 15; ++trial) {
        auto sentences = random_sentences(rng, 1 + rng() % 8);
        const std::size_t k = 1 + rng() % 4;
        auto lex1 = lexrank(sentences, k);
        auto lex2 = lexrank(sentences, k);
        CHECK(lex1 == lex2);
        check_selection(lex1, sentences.size(), k);
        check_selection(freq_luhn(sentences, k), sentences.size(), k);
        check_selection(sumbasic(sentences, k), sentences.size(), k);
        check_selection(kl_greedy(sentences, k), sentences.size(), k);
        check_selection(mmr(sentences, k), sentences.size(), k);
    }
}

TEST_CASE("summarize splits sentences and returns document order") {
    const std::string document =
        "Glioma cells divide rapidly. The enzyme pathway stays active. "
        "Mutation of the receptor was observed.";
    SummaryRequest request;
    request.method = SummarizerMethod::Freq;
    request.target_sentences = 2;
    auto summary = summarize(document, request);
    CHECK(summary.size() == 2);
    for (const std::string& sentence : summary) CHECK(!sentence.empty());
}
