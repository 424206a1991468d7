#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "summeval/index.hpp"

namespace summeval {

/// JSON Lines corpus: one object per line with required "id" and "text",
/// optional "title"; lines beginning with '#' (and blank lines) ignored.
/// Malformed lines raise indexing_error naming the line number.
std::vector<Document> read_corpus_jsonl(std::istream& in);
std::vector<Document> read_corpus_jsonl(const std::filesystem::path& file);

/// Summary records used by the scoring commands: one JSON object per
/// line with "topic_id" and "text"; candidates also carry "system_id".
struct SummaryRecord {
    std::string topic_id;
    std::string system_id;  // empty for gold summaries
    std::string text;
};

std::vector<SummaryRecord> read_summaries_jsonl(const std::filesystem::path& file,
                                                bool require_system_id);

}  // namespace summeval
