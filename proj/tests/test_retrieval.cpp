#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>

#include "summeval/errors.hpp"
#include "summeval/retrieval.hpp"

using namespace summeval;

namespace {

TokenizeOptions raw_options() {
    TokenizeOptions opt;
    opt.lowercase = true;
    return opt;
}

Query raw_query(const std::string& text) {
    Query q;
    q.terms = analyze(text, raw_options());
    q.fingerprint = analyzer_fingerprint(raw_options());
    return q;
}

Index two_doc_index() {
    return Index::build({{"d1", "", "a a b"}, {"d2", "", "a b c"}}, raw_options());
}

}  // namespace

TEST_CASE("dirichlet score matches the smoothed formula") {
    Index index = two_doc_index();
    const double score = lm_dirichlet_score(raw_query("a"), "d1", index, 1.0);
    CHECK(score == doctest::Approx(std::log(0.625)).epsilon(1e-12));
}

TEST_CASE("terms absent from the collection contribute nothing") {
    Index index = two_doc_index();
    const double with_unknown = lm_dirichlet_score(raw_query("a zzz"), "d1", index, 1.0);
    const double without = lm_dirichlet_score(raw_query("a"), "d1", index, 1.0);
    CHECK(with_unknown == doctest::Approx(without).epsilon(1e-15));
}

TEST_CASE("huge mu washes out document evidence") {
    Index index = two_doc_index();
    const double mu = 1e9;
    const double s1 = lm_dirichlet_score(raw_query("a b"), "d1", index, mu);
    const double s2 = lm_dirichlet_score(raw_query("a b"), "d2", index, mu);
    CHECK(std::abs(s1 - s2) < 1e-6);
}

TEST_CASE("unknown document raises not_found") {
    Index index = two_doc_index();
    CHECK_THROWS_AS(lm_dirichlet_score(raw_query("a"), "nope", index, 1.0), not_found_error);
}

TEST_CASE("retrieve ranks higher term frequency first") {
    Index index = two_doc_index();
    RankedList list = retrieve(raw_query("a a"), index, 2, 1.0);
    REQUIRE(list.size() == 2);
    CHECK(list.entries[0].id == "d1");
    CHECK(list.entries[1].id == "d2");

    RankedList top1 = retrieve(raw_query("a a"), index, 1, 1.0);
    REQUIRE(top1.size() == 1);
    CHECK(top1.entries[0].id == "d1");
}

TEST_CASE("identical documents tie-break by id ascending") {
    Index index = Index::build({{"beta", "", "x y"}, {"alpha", "", "x y"}}, raw_options());
    RankedList list = retrieve(raw_query("x"), index, 2, 500.0);
    REQUIRE(list.size() == 2);
    CHECK(list.entries[0].id == "alpha");
    CHECK(list.entries[1].id == "beta");
    CHECK(list.entries[0].score == list.entries[1].score);
}

TEST_CASE("documents without query terms are excluded") {
    Index index = Index::build({{"d1", "", "x y"}, {"d2", "", "z w"}}, raw_options());
    RankedList list = retrieve(raw_query("x"), index, 10, 100.0);
    REQUIRE(list.size() == 1);
    CHECK(list.entries[0].id == "d1");
}

TEST_CASE("retrieve argument validation") {
    Index index = two_doc_index();
    CHECK_THROWS_AS(retrieve(raw_query("a"), index, 0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(retrieve(raw_query("a"), index, 2, 0.0), std::invalid_argument);
    Query empty;
    empty.fingerprint = index.fingerprint();
    CHECK_THROWS_AS(retrieve(empty, index, 2, 1.0), empty_query_error);
}

TEST_CASE("fingerprint mismatch is an error, never silent") {
    Index index = two_doc_index();
    Query q = raw_query("a");
    q.fingerprint = analyzer_fingerprint(default_analyzer_options());
    CHECK_THROWS_AS(retrieve(q, index, 2, 1.0), fingerprint_mismatch_error);
    CHECK_THROWS_AS(lm_dirichlet_score(q, "d1", index, 1.0), fingerprint_mismatch_error);
}

TEST_CASE("retrieve(n) is a prefix of retrieve(n') and ignores term duplication") {
    std::mt19937 rng(17);
    std::vector<Document> docs;
    for (int d = 0; d < 40; ++d) {
        std::string text;
        std::size_t len = 1 + rng() % 10;
        for (std::size_t i = 0; i < len; ++i) {
            if (!text.empty()) text += ' ';
            text += std::string(1, static_cast<char>('q' + rng() % 5));
        }
        docs.push_back({"doc" + std::string(d < 10 ? "0" : "") + std::to_string(d), "", text});
    }
    Index index = Index::build(docs, raw_options());
    for (int trial = 0; trial < 20; ++trial) {
        std::string qtext;
        std::size_t qlen = 1 + rng() % 4;
        for (std::size_t i = 0; i < qlen; ++i) {
            if (!qtext.empty()) qtext += ' ';
            qtext += std::string(1, static_cast<char>('q' + rng() % 5));
        }
        Query q = raw_query(qtext);
        RankedList small = retrieve(q, index, 3, 2000.0);
        RankedList big = retrieve(q, index, 9, 2000.0);
        REQUIRE(small.size() <= big.size());
        for (std::size_t i = 0; i < small.size(); ++i)
            CHECK(small.entries[i].id == big.entries[i].id);

        Query doubled = q;
        doubled.terms.insert(doubled.terms.end(), q.terms.begin(), q.terms.end());
        RankedList doubled_list = retrieve(doubled, index, 9, 2000.0);
        REQUIRE(doubled_list.size() == big.size());
        for (std::size_t i = 0; i < big.size(); ++i)
            CHECK(doubled_list.entries[i].id == big.entries[i].id);
    }
}

TEST_CASE("retrieve equals exhaustive scoring on a small corpus") {
    std::mt19937 rng(23);
    std::vector<Document> docs;
    std::vector<std::vector<std::string>> doc_terms;
    for (int d = 0; d < 25; ++d) {
        std::size_t len = 1 + rng() % 8;
        std::string text;
        std::vector<std::string> terms;
        for (std::size_t i = 0; i < len; ++i) {
            std::string word(1, static_cast<char>('f' + rng() % 4));
            terms.push_back(word);
            if (!text.empty()) text += ' ';
            text += word;
        }
        char buf[8];
        std::snprintf(buf, sizeof(buf), "d%02d", d);
        docs.push_back({buf, "", text});
        doc_terms.push_back(terms);
    }
    Index index = Index::build(docs, raw_options());

    std::uint64_t total = 0;
    std::map<std::string, std::uint64_t> cf;
    for (const auto& terms : doc_terms) {
        total += terms.size();
        for (const auto& t : terms) ++cf[t];
    }

    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::string> qterms;
        std::size_t qlen = 1 + rng() % 3;
        for (std::size_t i = 0; i < qlen; ++i)
            qterms.emplace_back(1, static_cast<char>('f' + rng() % 4));
        Query q;
        q.terms = qterms;
        q.fingerprint = index.fingerprint();

        // Independent full scan: score every doc matching a query term.
        std::vector<std::pair<double, std::string>> expected;
        for (std::size_t d = 0; d < docs.size(); ++d) {
            const auto& terms = doc_terms[d];
            bool matches = false;
            for (const auto& t : qterms)
                matches = matches ||
                          std::find(terms.begin(), terms.end(), t) != terms.end();
            if (!matches) continue;
            std::map<std::string, int> counts;
            for (const auto& t : qterms) ++counts[t];
            double score = 0.0;
            for (const auto& [t, c_q] : counts) {
                if (cf[t] == 0) continue;
                double p = static_cast<double>(cf[t]) / static_cast<double>(total);
                double tf = static_cast<double>(std::count(terms.begin(), terms.end(), t));
                score += c_q * std::log((tf + 2000.0 * p) /
                                        (static_cast<double>(terms.size()) + 2000.0));
            }
            expected.emplace_back(score, docs[d].id);
        }
        std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });

        RankedList got = retrieve(q, index, 10, 2000.0);
        REQUIRE(got.size() == std::min<std::size_t>(10, expected.size()));
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(got.entries[i].id == expected[i].second);
            CHECK(got.entries[i].score == doctest::Approx(expected[i].first).epsilon(1e-12));
        }
    }
}
