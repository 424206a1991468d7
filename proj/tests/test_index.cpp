#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "summeval/corpus.hpp"
#include "summeval/errors.hpp"
#include "summeval/index.hpp"

using namespace summeval;
namespace fs = std::filesystem;

namespace {

TokenizeOptions raw_options() {
    TokenizeOptions opt;
    opt.lowercase = true;
    return opt;  // keep everything else off so counts are literal
}

fs::path temp_dir(const std::string& tag) {
    fs::path dir = fs::temp_directory_path() / ("summeval_test_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

bool same_stats(const Index& a, const Index& b) {
    if (a.doc_count() != b.doc_count()) return false;
    if (a.total_token_count() != b.total_token_count()) return false;
    if (a.doc_ids() != b.doc_ids()) return false;
    if (a.fingerprint() != b.fingerprint()) return false;
    if (a.terms().size() != b.terms().size()) return false;
    for (std::size_t i = 0; i < a.terms().size(); ++i) {
        const auto& [term_a, stats_a] = a.terms()[i];
        const auto& [term_b, stats_b] = b.terms()[i];
        if (term_a != term_b || stats_a.cf != stats_b.cf) return false;
        if (stats_a.postings.size() != stats_b.postings.size()) return false;
        for (std::size_t p = 0; p < stats_a.postings.size(); ++p) {
            if (stats_a.postings[p].doc != stats_b.postings[p].doc) return false;
            if (stats_a.postings[p].positions != stats_b.postings[p].positions) return false;
        }
    }
    for (std::uint32_t d = 0; d < a.doc_count(); ++d)
        if (a.doc_length(d) != b.doc_length(d)) return false;
    return true;
}

}  // namespace

TEST_CASE("build_index computes document and term statistics") {
    std::vector<Document> docs{{"d1", "", "a b"}, {"d2", "", "a"}};
    Index index = Index::build(docs, raw_options());
    CHECK(index.doc_count() == 2);
    CHECK(index.total_token_count() == 3);
    CHECK(index.df("a") == 2);
    CHECK(index.cf("a") == 2);
    CHECK(index.df("b") == 1);
    CHECK(index.cf("b") == 1);
    CHECK(index.doc_length(*index.doc_ordinal("d1")) == 2);
    CHECK(index.doc_length(*index.doc_ordinal("d2")) == 1);
}

TEST_CASE("build_index rejects bad corpora") {
    CHECK_THROWS_AS(Index::build({}), std::invalid_argument);
    CHECK_THROWS_AS(Index::build({{"d1", "", "   "}}), std::invalid_argument);
    try {
        Index::build({{"dup", "", "a"}, {"dup", "", "b"}});
        FAIL("expected indexing_error");
    } catch (const indexing_error& e) {
        CHECK(std::string(e.what()).find("dup") != std::string::npos);
    }
}

TEST_CASE("build_index is deterministic") {
    std::vector<Document> docs{{"z", "", "gene cell cell"}, {"a", "", "cell pathway"}};
    Index first = Index::build(docs);
    std::reverse(docs.begin(), docs.end());
    Index second = Index::build(docs);
    CHECK(same_stats(first, second));
}

TEST_CASE("df equals a full scan over documents") {
    std::mt19937 rng(3);
    std::vector<Document> docs;
    std::vector<std::vector<std::string>> doc_terms;
    for (int d = 0; d < 30; ++d) {
        std::size_t len = 1 + rng() % 12;
        std::string text;
        std::vector<std::string> terms;
        for (std::size_t i = 0; i < len; ++i) {
            std::string word(1, static_cast<char>('a' + rng() % 6));
            word += static_cast<char>('a' + rng() % 6);
            word += static_cast<char>('a' + rng() % 6);  // 3 letters, avoids stopword hits
            terms.push_back(word);
            if (!text.empty()) text += ' ';
            text += word;
        }
        docs.push_back({"doc" + std::to_string(d), "", text});
        doc_terms.push_back(terms);
    }
    Index index = Index::build(docs, raw_options());
    for (const auto& [term, stats] : index.terms()) {
        std::uint32_t expected = 0;
        for (const auto& terms : doc_terms)
            if (std::find(terms.begin(), terms.end(), term) != terms.end()) ++expected;
        CHECK(stats.df() == expected);
    }
}

TEST_CASE("title is indexed together with text") {
    std::vector<Document> docs{{"d1", "glioma study", "cells divide"}};
    Index index = Index::build(docs, raw_options());
    CHECK(index.df("glioma") == 1);
    CHECK(index.df("cells") == 1);
    CHECK(index.total_token_count() == 4);
}

TEST_CASE("phrase_df finds exact positional matches only") {
    std::vector<Document> docs{{"d1", "", "cell mutation drives growth"},
                               {"d2", "", "mutation cell growth"},
                               {"d3", "", "cell growth mutation"}};
    Index index = Index::build(docs, raw_options());
    CHECK(index.phrase_df({"cell", "mutation"}) == 1);
    CHECK(index.phrase_df({"mutation", "cell"}) == 1);
    CHECK(index.phrase_df({"cell", "mutation", "drives"}) == 1);
    CHECK(index.phrase_df({"growth", "cell"}) == 0);
    CHECK(index.phrase_df({"absent"}) == 0);
}

TEST_CASE("save and load round-trips every statistic") {
    std::vector<Document> docs{{"d1", "t", "a b a"}, {"d2", "", "b c"}, {"d3", "", "c c c a"}};
    Index index = Index::build(docs, raw_options());
    fs::path dir = temp_dir("roundtrip");
    index.save(dir);
    Index loaded = Index::load(dir);
    CHECK(same_stats(index, loaded));
    CHECK(loaded.analyzer_options() == raw_options());
    fs::remove_all(dir);
}

TEST_CASE("load rejects missing or foreign directories") {
    fs::path dir = temp_dir("empty");
    CHECK_THROWS_AS(Index::load(dir), unsupported_format_error);
    fs::remove_all(dir);
}

TEST_CASE("load rejects unsupported format versions") {
    std::vector<Document> docs{{"d1", "", "a b"}};
    Index index = Index::build(docs, raw_options());
    fs::path dir = temp_dir("version");
    index.save(dir);
    // Bump the version field in place.
    std::ifstream in(dir / "manifest.json");
    std::stringstream buf;
    buf << in.rdbuf();
    in.close();
    std::string manifest = buf.str();
    auto pos = manifest.find("\"version\": 1");
    REQUIRE(pos != std::string::npos);
    manifest.replace(pos, std::string("\"version\": 1").size(), "\"version\": 99");
    std::ofstream out(dir / "manifest.json", std::ios::trunc);
    out << manifest;
    out.close();
    try {
        Index::load(dir);
        FAIL("expected unsupported_format_error");
    } catch (const unsupported_format_error& e) {
        CHECK(std::string(e.what()).find("99") != std::string::npos);
    }
    fs::remove_all(dir);
}

TEST_CASE("load rejects corrupt postings") {
    std::vector<Document> docs{{"d1", "", "a b"}, {"d2", "", "b c"}};
    Index index = Index::build(docs, raw_options());
    fs::path dir = temp_dir("corrupt");
    index.save(dir);
    std::ofstream out(dir / "postings.json", std::ios::app);
    out << " ";
    out.close();
    CHECK_THROWS_AS(Index::load(dir), integrity_error);
    fs::remove_all(dir);
}

TEST_CASE("corpus jsonl reader parses ids, titles, and comments") {
    std::istringstream in(
        "# comment line\n"
        "{\"id\": \"d1\", \"text\": \"alpha beta\", \"title\": \"first\"}\n"
        "\n"
        "{\"id\": \"d2\", \"text\": \"gamma\"}\n");
    auto docs = read_corpus_jsonl(in);
    REQUIRE(docs.size() == 2);
    CHECK(docs[0].id == "d1");
    CHECK(docs[0].title == "first");
    CHECK(docs[1].title.empty());
}

TEST_CASE("corpus jsonl reader names the offending line") {
    std::istringstream in("{\"id\": \"d1\", \"text\": \"ok\"}\nnot json\n");
    try {
        read_corpus_jsonl(in);
        FAIL("expected indexing_error");
    } catch (const indexing_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}
