#include "summeval/corpus.hpp"

#include <fstream>
#include <istream>

#include <json.hpp>

#include "summeval/errors.hpp"

namespace summeval {

namespace {

nlohmann::json parse_line(const std::string& line, std::size_t line_no) {
    try {
        return nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw indexing_error("line " + std::to_string(line_no) + ": " + e.what());
    }
}

std::string require_string(const nlohmann::json& obj, const char* key, std::size_t line_no) {
    if (!obj.contains(key) || !obj[key].is_string())
        throw indexing_error("line " + std::to_string(line_no) + ": missing string field \"" +
                             key + "\"");
    return obj[key].get<std::string>();
}

bool skippable(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == '#';
    }
    return true;  // blank
}

}  // namespace

std::vector<Document> read_corpus_jsonl(std::istream& in) {
    std::vector<Document> corpus;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line)) continue;
        nlohmann::json obj = parse_line(line, line_no);
        Document doc;
        doc.id = require_string(obj, "id", line_no);
        doc.text = require_string(obj, "text", line_no);
        if (obj.contains("title")) doc.title = require_string(obj, "title", line_no);
        if (doc.id.empty())
            throw indexing_error("line " + std::to_string(line_no) + ": empty document id");
        corpus.push_back(std::move(doc));
    }
    return corpus;
}

std::vector<Document> read_corpus_jsonl(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw indexing_error("cannot open corpus file " + file.string());
    try {
        return read_corpus_jsonl(in);
    } catch (const indexing_error& e) {
        throw indexing_error(file.string() + ": " + e.what());
    }
}

std::vector<SummaryRecord> read_summaries_jsonl(const std::filesystem::path& file,
                                                bool require_system_id) {
    std::ifstream in(file);
    if (!in) throw error("cannot open summary file " + file.string());
    std::vector<SummaryRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line)) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw error(file.string() + " line " + std::to_string(line_no) + ": " + e.what());
        }
        SummaryRecord record;
        try {
            record.topic_id = require_string(obj, "topic_id", line_no);
            record.text = require_string(obj, "text", line_no);
            if (require_system_id || obj.contains("system_id"))
                record.system_id = require_string(obj, "system_id", line_no);
        } catch (const indexing_error& e) {
            throw error(file.string() + ": " + e.what());
        }
        records.push_back(std::move(record));
    }
    return records;
}

}  // namespace summeval
