#include "summeval/index.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "summeval/errors.hpp"

namespace summeval {

namespace {

constexpr int kFormatVersion = 1;
constexpr std::string_view kFormatName = "summeval-index";

std::string trim_copy(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && static_cast<unsigned char>(s[b]) <= ' ') ++b;
    while (e > b && static_cast<unsigned char>(s[e - 1]) <= ' ') --e;
    return std::string(s.substr(b, e - b));
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xF];
        v >>= 4;
    }
    return out;
}

std::string checksum(std::string_view bytes) { return "fnv1a:" + hex64(fnv1a64(bytes)); }

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw unsupported_format_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw error("failed to write " + path.string());
}

}  // namespace

int index_format_version() { return kFormatVersion; }

Index Index::build(const std::vector<Document>& corpus, const TokenizeOptions& options) {
    if (corpus.empty()) throw std::invalid_argument("cannot index an empty corpus");

    std::vector<const Document*> docs;
    docs.reserve(corpus.size());
    std::set<std::string_view> seen;
    for (const Document& doc : corpus) {
        if (doc.id.empty()) throw indexing_error("document with empty id");
        if (!seen.insert(doc.id).second)
            throw indexing_error("duplicate document id '" + doc.id + "'");
        if (trim_copy(doc.text).empty())
            throw std::invalid_argument("document '" + doc.id + "' has empty text");
        docs.push_back(&doc);
    }
    // Documents are stored sorted by id so that posting lists and the
    // retrieval tie-break share one order.
    std::sort(docs.begin(), docs.end(),
              [](const Document* a, const Document* b) { return a->id < b->id; });

    Index index;
    index.options_ = options;
    index.fingerprint_ = analyzer_fingerprint(options);

    std::map<std::string, TermStats> terms;
    for (std::uint32_t ordinal = 0; ordinal < docs.size(); ++ordinal) {
        const Document& doc = *docs[ordinal];
        std::string field = doc.title.empty() ? doc.text : doc.title + "\n" + doc.text;
        std::vector<std::string> tokens = analyze(field, options);
        index.ids_.push_back(doc.id);
        index.doc_lengths_.push_back(static_cast<std::uint32_t>(tokens.size()));
        index.total_tokens_ += tokens.size();
        for (std::uint32_t pos = 0; pos < tokens.size(); ++pos) {
            TermStats& stats = terms[tokens[pos]];
            ++stats.cf;
            if (stats.postings.empty() || stats.postings.back().doc != ordinal)
                stats.postings.push_back(Posting{ordinal, {}});
            stats.postings.back().positions.push_back(pos);
        }
    }
    index.terms_.assign(std::make_move_iterator(terms.begin()), std::make_move_iterator(terms.end()));
    index.validate();
    return index;
}

void Index::validate() const {
    if (ids_.empty()) throw integrity_error("index has no documents");
    std::uint64_t total = 0;
    for (std::uint32_t len : doc_lengths_) total += len;
    if (total != total_tokens_) throw integrity_error("token count mismatch");
    for (const auto& [term, stats] : terms_) {
        if (stats.postings.empty() || stats.postings.size() > ids_.size())
            throw integrity_error("bad posting list for term '" + term + "'");
        if (stats.cf < stats.df()) throw integrity_error("cf < df for term '" + term + "'");
        std::uint64_t positions = 0;
        for (std::size_t p = 0; p < stats.postings.size(); ++p) {
            const Posting& posting = stats.postings[p];
            if (p > 0 && stats.postings[p - 1].doc >= posting.doc)
                throw integrity_error("postings out of order for term '" + term + "'");
            if (posting.doc >= ids_.size())
                throw integrity_error("posting references unknown document");
            if (posting.positions.empty())
                throw integrity_error("empty position list for term '" + term + "'");
            if (!std::is_sorted(posting.positions.begin(), posting.positions.end()))
                throw integrity_error("positions out of order for term '" + term + "'");
            positions += posting.positions.size();
        }
        if (positions != stats.cf) throw integrity_error("cf mismatch for term '" + term + "'");
    }
}

std::optional<std::uint32_t> Index::doc_ordinal(std::string_view id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return std::nullopt;
    return static_cast<std::uint32_t>(it - ids_.begin());
}

const TermStats* Index::term(std::string_view t) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t,
                               [](const auto& entry, std::string_view key) {
                                   return std::string_view(entry.first) < key;
                               });
    if (it == terms_.end() || it->first != t) return nullptr;
    return &it->second;
}

std::uint32_t Index::df(std::string_view t) const {
    const TermStats* stats = term(t);
    return stats ? stats->df() : 0;
}

std::uint64_t Index::cf(std::string_view t) const {
    const TermStats* stats = term(t);
    return stats ? stats->cf : 0;
}

std::uint32_t Index::term_frequency(std::string_view t, std::uint32_t ordinal) const {
    const TermStats* stats = term(t);
    if (!stats) return 0;
    auto it = std::lower_bound(stats->postings.begin(), stats->postings.end(), ordinal,
                               [](const Posting& p, std::uint32_t doc) { return p.doc < doc; });
    if (it == stats->postings.end() || it->doc != ordinal) return 0;
    return static_cast<std::uint32_t>(it->positions.size());
}

std::uint32_t Index::phrase_df(const std::vector<std::string>& phrase) const {
    if (phrase.empty()) return 0;
    if (phrase.size() == 1) return df(phrase[0]);
    std::vector<const TermStats*> stats;
    stats.reserve(phrase.size());
    for (const std::string& t : phrase) {
        const TermStats* s = term(t);
        if (!s) return 0;
        stats.push_back(s);
    }
    std::uint32_t count = 0;
    for (const Posting& first : stats[0]->postings) {
        bool doc_has_all = true;
        std::vector<const Posting*> rest(phrase.size(), nullptr);
        rest[0] = &first;
        for (std::size_t t = 1; t < phrase.size() && doc_has_all; ++t) {
            const auto& postings = stats[t]->postings;
            auto it = std::lower_bound(postings.begin(), postings.end(), first.doc,
                                       [](const Posting& p, std::uint32_t doc) { return p.doc < doc; });
            if (it == postings.end() || it->doc != first.doc)
                doc_has_all = false;
            else
                rest[t] = &*it;
        }
        if (!doc_has_all) continue;
        for (std::uint32_t start : first.positions) {
            bool match = true;
            for (std::size_t t = 1; t < phrase.size() && match; ++t) {
                const auto& positions = rest[t]->positions;
                match = std::binary_search(positions.begin(), positions.end(),
                                           start + static_cast<std::uint32_t>(t));
            }
            if (match) {
                ++count;
                break;
            }
        }
    }
    return count;
}

void Index::save(const std::filesystem::path& directory) const {
    namespace fs = std::filesystem;
    fs::create_directories(directory);

    nlohmann::json docs;
    docs["ids"] = ids_;
    docs["lengths"] = doc_lengths_;
    std::string docs_bytes = docs.dump();

    nlohmann::json postings = nlohmann::json::object();
    for (const auto& [term, stats] : terms_) {
        nlohmann::json lists = nlohmann::json::array();
        for (const Posting& posting : stats.postings)
            lists.push_back({posting.doc, posting.positions});
        postings[term] = {{"cf", stats.cf}, {"postings", std::move(lists)}};
    }
    std::string postings_bytes = postings.dump();

    nlohmann::json manifest;
    manifest["format"] = kFormatName;
    manifest["version"] = kFormatVersion;
    manifest["doc_count"] = ids_.size();
    manifest["total_token_count"] = total_tokens_;
    manifest["analyzer"] = {{"lowercase", options_.lowercase},
                            {"strip_numeric", options_.strip_numeric},
                            {"remove_stopwords", options_.remove_stopwords},
                            {"stem", options_.stem}};
    manifest["fingerprint"] = fingerprint_;
    manifest["checksums"] = {{"docs.json", checksum(docs_bytes)},
                             {"postings.json", checksum(postings_bytes)}};

    write_file(directory / "docs.json", docs_bytes);
    write_file(directory / "postings.json", postings_bytes);
    write_file(directory / "manifest.json", manifest.dump(2) + "\n");
}

Index Index::load(const std::filesystem::path& directory) {
    namespace fs = std::filesystem;
    fs::path manifest_path = directory / "manifest.json";
    if (!fs::exists(manifest_path))
        throw unsupported_format_error("no index manifest in " + directory.string());

    nlohmann::json manifest;
    try {
        manifest = nlohmann::json::parse(read_file(manifest_path));
    } catch (const nlohmann::json::exception& e) {
        throw integrity_error("corrupt manifest: " + std::string(e.what()));
    }
    if (manifest.value("format", "") != kFormatName)
        throw unsupported_format_error("not a summeval index: " + directory.string());
    int version = manifest.value("version", -1);
    if (version != kFormatVersion)
        throw unsupported_format_error("unsupported index format version " +
                                       std::to_string(version));

    Index index;
    try {
        index.total_tokens_ = manifest.at("total_token_count").get<std::uint64_t>();
        index.fingerprint_ = manifest.at("fingerprint").get<std::string>();
        const auto& analyzer = manifest.at("analyzer");
        index.options_.lowercase = analyzer.at("lowercase").get<bool>();
        index.options_.strip_numeric = analyzer.at("strip_numeric").get<bool>();
        index.options_.remove_stopwords = analyzer.at("remove_stopwords").get<bool>();
        index.options_.stem = analyzer.at("stem").get<bool>();

        const auto& checksums = manifest.at("checksums");
        std::string docs_bytes = read_file(directory / "docs.json");
        if (checksum(docs_bytes) != checksums.at("docs.json").get<std::string>())
            throw integrity_error("checksum mismatch for docs.json");
        std::string postings_bytes = read_file(directory / "postings.json");
        if (checksum(postings_bytes) != checksums.at("postings.json").get<std::string>())
            throw integrity_error("checksum mismatch for postings.json");

        nlohmann::json docs = nlohmann::json::parse(docs_bytes);
        index.ids_ = docs.at("ids").get<std::vector<std::string>>();
        index.doc_lengths_ = docs.at("lengths").get<std::vector<std::uint32_t>>();
        if (index.ids_.size() != index.doc_lengths_.size() ||
            index.ids_.size() != manifest.at("doc_count").get<std::size_t>())
            throw integrity_error("document table size mismatch");

        nlohmann::json postings = nlohmann::json::parse(postings_bytes);
        for (const auto& [term, entry] : postings.items()) {
            TermStats stats;
            stats.cf = entry.at("cf").get<std::uint64_t>();
            for (const auto& item : entry.at("postings")) {
                Posting posting;
                posting.doc = item.at(0).get<std::uint32_t>();
                posting.positions = item.at(1).get<std::vector<std::uint32_t>>();
                stats.postings.push_back(std::move(posting));
            }
            index.terms_.emplace_back(term, std::move(stats));
        }
    } catch (const integrity_error&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw integrity_error("corrupt index data: " + std::string(e.what()));
    }
    try {
        index.validate();
    } catch (const integrity_error& e) {
        throw integrity_error("index failed validation: " + std::string(e.what()));
    }
    return index;
}

}  // namespace summeval
