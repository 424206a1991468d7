#include "summeval/score_table.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "summeval/errors.hpp"

namespace summeval {

namespace {

constexpr std::string_view kHeader = "topic_id\tsystem_id\tmetric_name\tvalue";

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return fields;
}

}  // namespace

std::string format_score(double value) {
    if (value == 0.0) value = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

void write_score_tsv(std::ostream& out, std::vector<ScoreRow> rows) {
    std::sort(rows.begin(), rows.end(), [](const ScoreRow& a, const ScoreRow& b) {
        return std::tie(a.topic_id, a.system_id, a.metric) <
               std::tie(b.topic_id, b.system_id, b.metric);
    });
    out << kHeader << '\n';
    for (const ScoreRow& row : rows)
        out << row.topic_id << '\t' << row.system_id << '\t' << row.metric << '\t'
            << format_score(row.value) << '\n';
}

std::vector<ScoreRow> read_score_tsv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw error("score file is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kHeader)
        throw error("score file header must be '" + std::string(kHeader) + "'");
    std::vector<ScoreRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields = split_tabs(line);
        if (fields.size() != 4)
            throw error("score file line " + std::to_string(line_no) + ": expected 4 columns");
        ScoreRow row;
        row.topic_id = fields[0];
        row.system_id = fields[1];
        row.metric = fields[2];
        try {
            row.value = std::stod(fields[3]);
        } catch (const std::exception&) {
            throw error("score file line " + std::to_string(line_no) + ": bad value '" +
                        fields[3] + "'");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::map<std::pair<std::string, std::string>, double> aggregate_by_system(
    const std::vector<ScoreRow>& rows) {
    std::map<std::pair<std::string, std::string>, std::pair<double, std::size_t>> sums;
    for (const ScoreRow& row : rows) {
        auto& [sum, count] = sums[{row.system_id, row.metric}];
        sum += row.value;
        ++count;
    }
    std::map<std::pair<std::string, std::string>, double> means;
    for (const auto& [key, sum_count] : sums)
        means[key] = sum_count.first / static_cast<double>(sum_count.second);
    return means;
}

}  // namespace summeval
