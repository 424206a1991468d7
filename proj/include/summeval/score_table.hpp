#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace summeval {

struct ScoreRow {
    std::string topic_id;
    std::string system_id;
    std::string metric;
    double value = 0.0;
};

/// TSV interchange format: header "topic_id\tsystem_id\tmetric_name\tvalue",
/// rows sorted by (topic, system, metric). Values are written with six
/// decimals so reruns are byte-identical.
void write_score_tsv(std::ostream& out, std::vector<ScoreRow> rows);
std::vector<ScoreRow> read_score_tsv(std::istream& in);

std::string format_score(double value);

/// Per-system mean over topics, keyed (system_id, metric).
std::map<std::pair<std::string, std::string>, double> aggregate_by_system(
    const std::vector<ScoreRow>& rows);

}  // namespace summeval
