// summeval command line: corpus indexing, summary scoring, extractive
// baselines, correlation tables, and the rank cut-off sweep.
#include <atomic>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "summeval/baselines.hpp"
#include "summeval/corpus.hpp"
#include "summeval/errors.hpp"
#include "summeval/idf.hpp"
#include "summeval/index.hpp"
#include "summeval/pyramid.hpp"
#include "summeval/rouge.hpp"
#include "summeval/score_table.hpp"
#include "summeval/sera.hpp"
#include "summeval/stats.hpp"

namespace fs = std::filesystem;
using namespace summeval;

namespace {

// ---------------------------------------------------------------------------
// shared helpers

void write_text_output(const std::string& out_path, const std::string& bytes) {
    if (out_path.empty()) {
        std::cout << bytes;
        return;
    }
    fs::path target(out_path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw error("failed to write " + out_path);
    }
    fs::rename(tmp, target);
}

std::string render_rows(std::vector<ScoreRow> rows) {
    std::ostringstream out;
    write_score_tsv(out, std::move(rows));
    return std::move(out).str();
}

// Bounded worker pool; results land in caller-indexed slots so output
// order never depends on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    if (count == 0) return;
    const std::size_t workers =
        std::min<std::size_t>({count, std::max(1u, std::thread::hardware_concurrency()), 8});
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

struct TopicSummaries {
    std::vector<SummaryRecord> candidates;            // with system ids
    std::map<std::string, std::vector<std::string>> golds_by_topic;
};

TopicSummaries load_summaries(const std::string& candidates_file, const std::string& golds_file) {
    TopicSummaries data;
    data.candidates = read_summaries_jsonl(candidates_file, true);
    for (const SummaryRecord& gold : read_summaries_jsonl(golds_file, false))
        data.golds_by_topic[gold.topic_id].push_back(gold.text);
    if (data.candidates.empty()) throw error("no candidate summaries in " + candidates_file);
    if (data.golds_by_topic.empty()) throw error("no gold summaries in " + golds_file);
    for (const SummaryRecord& candidate : data.candidates)
        if (!data.golds_by_topic.count(candidate.topic_id))
            throw error("topic '" + candidate.topic_id + "' has no gold summaries");
    return data;
}

QueryMode parse_mode(const std::string& name) {
    if (name == "plain") return QueryMode::Plain;
    if (name == "np") return QueryMode::NounPhrases;
    if (name == "kw") return QueryMode::Keywords;
    throw error("unknown query mode '" + name + "' (expected plain, np, or kw)");
}

// ---------------------------------------------------------------------------
// index build

struct IndexBuildArgs {
    std::string corpus_file;
    std::string out_dir;
    bool no_stem = false;
    bool keep_stopwords = false;
    bool keep_numbers = false;
    bool no_lowercase = false;
};

int run_index_build(const IndexBuildArgs& args) {
    TokenizeOptions options = default_analyzer_options();
    if (args.no_stem) options.stem = false;
    if (args.keep_stopwords) options.remove_stopwords = false;
    if (args.keep_numbers) options.strip_numeric = false;
    if (args.no_lowercase) options.lowercase = false;

    std::vector<Document> corpus = read_corpus_jsonl(fs::path(args.corpus_file));
    if (corpus.empty()) throw error("corpus file " + args.corpus_file + " has no documents");
    Index index = Index::build(corpus, options);
    index.save(args.out_dir);
    std::cout << "indexed " << index.doc_count() << " documents, vocabulary "
              << index.vocabulary_size() << ", total tokens " << index.total_token_count()
              << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// score sera / sweep

struct SeraArgs {
    std::string index_dir;
    std::string candidates_file;
    std::string golds_file;
    std::string out_path;
    std::vector<std::size_t> cutoffs{5, 10};
    std::vector<std::string> modes{"plain", "np", "kw"};
    std::vector<std::string> variants{"simple", "dis"};
    double mu = 2000.0;
};

std::vector<SeraConfig> sera_configs(const SeraArgs& args) {
    std::vector<SeraConfig> configs;
    for (std::size_t n : args.cutoffs) {
        if (n < 1) throw error("rank cut-off must be >= 1");
        for (const std::string& mode : args.modes) {
            for (const std::string& variant : args.variants) {
                if (variant != "simple" && variant != "dis")
                    throw error("unknown sera variant '" + variant + "'");
                configs.push_back(
                    SeraConfig{n, parse_mode(mode), variant == "dis", args.mu});
            }
        }
    }
    return configs;
}

int run_score_sera(const SeraArgs& args) {
    Index index = Index::load(args.index_dir);
    SeraScorer scorer(index);
    TopicSummaries data = load_summaries(args.candidates_file, args.golds_file);
    std::vector<SeraConfig> configs = sera_configs(args);

    std::vector<std::vector<ScoreRow>> buckets(data.candidates.size());
    parallel_for(data.candidates.size(), [&](std::size_t i) {
        const SummaryRecord& candidate = data.candidates[i];
        const auto& golds = data.golds_by_topic.at(candidate.topic_id);
        for (const SeraConfig& config : configs) {
            SeraScore score = scorer.score(candidate.text, golds, config);
            if (score.candidate_query_empty)
                std::cerr << "warning: empty " << to_string(config.mode) << " query for topic "
                          << candidate.topic_id << ", system " << candidate.system_id << "\n";
            buckets[i].push_back(ScoreRow{candidate.topic_id, candidate.system_id,
                                          sera_metric_name(config), score.value});
        }
    });
    std::vector<ScoreRow> rows;
    for (auto& bucket : buckets)
        rows.insert(rows.end(), std::make_move_iterator(bucket.begin()),
                    std::make_move_iterator(bucket.end()));
    write_text_output(args.out_path, render_rows(std::move(rows)));
    return 0;
}

int run_sweep(const SeraArgs& args) {
    Index index = Index::load(args.index_dir);
    SeraScorer scorer(index);
    TopicSummaries data = load_summaries(args.candidates_file, args.golds_file);
    if (args.cutoffs.empty()) throw error("sweep needs at least one cut-off");
    std::vector<SeraConfig> configs = sera_configs(args);

    struct SweepRow {
        std::size_t n;
        std::string mode;
        bool discounted;
        std::string topic;
        std::string system;
        double value;
    };
    std::vector<std::vector<SweepRow>> buckets(data.candidates.size());
    parallel_for(data.candidates.size(), [&](std::size_t i) {
        const SummaryRecord& candidate = data.candidates[i];
        const auto& golds = data.golds_by_topic.at(candidate.topic_id);
        for (const SeraConfig& config : configs) {
            SeraScore score = scorer.score(candidate.text, golds, config);
            buckets[i].push_back(SweepRow{config.cutoff, std::string(to_string(config.mode)),
                                          config.discounted, candidate.topic_id,
                                          candidate.system_id, score.value});
        }
    });
    std::vector<SweepRow> rows;
    for (auto& bucket : buckets)
        rows.insert(rows.end(), std::make_move_iterator(bucket.begin()),
                    std::make_move_iterator(bucket.end()));
    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        return std::tie(a.n, a.mode, a.discounted, a.topic, a.system) <
               std::tie(b.n, b.mode, b.discounted, b.topic, b.system);
    });
    std::ostringstream out;
    out << "n\tmode\tdiscounted\ttopic_id\tsystem_id\tvalue\n";
    for (const SweepRow& row : rows)
        out << row.n << '\t' << row.mode << '\t' << (row.discounted ? 1 : 0) << '\t' << row.topic
            << '\t' << row.system << '\t' << format_score(row.value) << '\n';
    write_text_output(args.out_path, std::move(out).str());
    return 0;
}

// ---------------------------------------------------------------------------
// score rouge

struct RougeArgs {
    std::string candidates_file;
    std::string golds_file;
    std::string out_path;
    std::vector<std::string> variants{"1", "2", "3", "l", "s", "su", "w"};
    bool no_stem = false;
    bool keep_stopwords = false;
    std::string aggregate = "average";
    double w_weight = 1.2;
    int s_max_gap = -1;  // < 0 means unlimited
};

int run_score_rouge(const RougeArgs& args) {
    RougeOptions options;
    options.stem = !args.no_stem;
    options.remove_stopwords = !args.keep_stopwords;
    options.w_weight = args.w_weight;
    if (args.s_max_gap >= 0) options.s_max_gap = static_cast<std::size_t>(args.s_max_gap);
    if (args.aggregate == "max")
        options.multi_ref = MultiRefAggregation::Max;
    else if (args.aggregate != "average")
        throw error("unknown aggregation '" + args.aggregate + "'");

    TopicSummaries data = load_summaries(args.candidates_file, args.golds_file);

    std::vector<std::vector<ScoreRow>> buckets(data.candidates.size());
    parallel_for(data.candidates.size(), [&](std::size_t i) {
        const SummaryRecord& candidate = data.candidates[i];
        const auto& golds = data.golds_by_topic.at(candidate.topic_id);
        auto emit = [&](const RougeResult& result) {
            buckets[i].push_back(ScoreRow{candidate.topic_id, candidate.system_id,
                                          result.variant + "-R", result.recall});
            buckets[i].push_back(ScoreRow{candidate.topic_id, candidate.system_id,
                                          result.variant + "-P", result.precision});
            buckets[i].push_back(ScoreRow{candidate.topic_id, candidate.system_id,
                                          result.variant + "-F", result.f});
        };
        for (const std::string& variant : args.variants) {
            if (variant == "l")
                emit(rouge_l(candidate.text, golds, options));
            else if (variant == "s")
                emit(rouge_s(candidate.text, golds, options));
            else if (variant == "su")
                emit(rouge_su(candidate.text, golds, options));
            else if (variant == "w")
                emit(rouge_w(candidate.text, golds, options));
            else if (variant == "1" || variant == "2" || variant == "3" || variant == "4")
                emit(rouge_n(candidate.text, golds, variant[0] - '0', options));
            else
                throw error("unknown rouge variant '" + variant + "'");
        }
    });
    std::vector<ScoreRow> rows;
    for (auto& bucket : buckets)
        rows.insert(rows.end(), std::make_move_iterator(bucket.begin()),
                    std::make_move_iterator(bucket.end()));
    write_text_output(args.out_path, render_rows(std::move(rows)));
    return 0;
}

// ---------------------------------------------------------------------------
// score pyramid

struct PyramidArgs {
    std::string pyramids_file;
    std::string matches_file;
    std::string out_path;
};

std::vector<nlohmann::json> read_json_objects(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string bytes = buf.str();
    // Accept a single object, an array of objects, or JSON lines.
    try {
        nlohmann::json parsed = nlohmann::json::parse(bytes);
        if (parsed.is_object()) return {parsed};
        if (parsed.is_array()) return {parsed.begin(), parsed.end()};
    } catch (const nlohmann::json::exception&) {
        // fall through to JSONL
    }
    std::vector<nlohmann::json> objects;
    std::istringstream lines(bytes);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            objects.push_back(nlohmann::json::parse(line));
        } catch (const nlohmann::json::exception& e) {
            throw error(path + " line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return objects;
}

int run_score_pyramid(const PyramidArgs& args) {
    std::map<std::string, Pyramid> pyramids;
    for (const nlohmann::json& obj : read_json_objects(args.pyramids_file)) {
        const std::string topic = obj.at("topic_id").get<std::string>();
        std::vector<Nugget> nuggets;
        for (const auto& item : obj.at("nuggets"))
            nuggets.push_back(Nugget{item.at("id").get<std::string>(),
                                     item.at("text").get<std::string>(),
                                     item.at("tier").get<int>()});
        pyramids.emplace(topic, Pyramid::build(nuggets));
    }
    if (pyramids.empty()) throw error("no pyramids in " + args.pyramids_file);

    std::vector<ScoreRow> rows;
    for (const nlohmann::json& obj : read_json_objects(args.matches_file)) {
        const std::string topic = obj.at("topic_id").get<std::string>();
        auto it = pyramids.find(topic);
        if (it == pyramids.end()) throw error("no pyramid for topic '" + topic + "'");
        CandidateMatch match;
        for (const auto& id : obj.at("matched_ids"))
            match.matched_ids.push_back(id.get<std::string>());
        const double value = pyramid_score(match, it->second);
        rows.push_back(
            ScoreRow{topic, obj.at("system_id").get<std::string>(), "PYRAMID", value});
    }
    if (rows.empty()) throw error("no matches in " + args.matches_file);
    write_text_output(args.out_path, render_rows(std::move(rows)));
    return 0;
}

// ---------------------------------------------------------------------------
// summarize

struct SummarizeArgs {
    std::string input_file;
    std::string out_path;
    std::string method = "lexrank";
    std::size_t k = 3;
    double damping = 0.85;
    double sim_threshold = 0.1;
    double lambda = 0.5;
    double smoothing_alpha = 1e-3;
};

int run_summarize(const SummarizeArgs& args) {
    std::ifstream in(args.input_file);
    if (!in) throw error("cannot open " + args.input_file);
    std::stringstream buf;
    buf << in.rdbuf();

    SummaryRequest request;
    request.target_sentences = args.k;
    request.damping = args.damping;
    request.sim_threshold = args.sim_threshold;
    request.lambda = args.lambda;
    request.smoothing_alpha = args.smoothing_alpha;
    if (args.method == "lexrank")
        request.method = SummarizerMethod::LexRank;
    else if (args.method == "freq")
        request.method = SummarizerMethod::Freq;
    else if (args.method == "sumbasic")
        request.method = SummarizerMethod::SumBasic;
    else if (args.method == "kl")
        request.method = SummarizerMethod::Kl;
    else if (args.method == "mmr")
        request.method = SummarizerMethod::Mmr;
    else
        throw error("unknown method '" + args.method +
                    "' (expected lexrank, freq, sumbasic, kl, or mmr)");

    std::string out;
    for (const std::string& sentence : summarize(buf.str(), request)) {
        out += sentence;
        out += '\n';
    }
    write_text_output(args.out_path, out);
    return 0;
}

// ---------------------------------------------------------------------------
// correlate

struct CorrelateArgs {
    std::string x_file;
    std::string y_file;
    std::string out_path;
    bool per_topic = false;
    bool skip_constant = false;
};

std::vector<ScoreRow> read_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    try {
        return read_score_tsv(in);
    } catch (const error& e) {
        throw error(path + ": " + e.what());
    }
}

int run_correlate(const CorrelateArgs& args) {
    const std::vector<ScoreRow> x_rows = read_rows(args.x_file);
    const std::vector<ScoreRow> y_rows = read_rows(args.y_file);

    // key -> metric -> value, where key is the join unit
    using Table = std::map<std::string, std::map<std::string, double>>;
    auto tabulate = [&](const std::vector<ScoreRow>& rows) {
        Table table;
        if (args.per_topic) {
            for (const ScoreRow& row : rows)
                table[row.system_id + "\t" + row.topic_id][row.metric] = row.value;
        } else {
            for (const auto& [key, value] : aggregate_by_system(rows))
                table[key.first][key.second] = value;
        }
        return table;
    };
    Table x_table = tabulate(x_rows);
    Table y_table = tabulate(y_rows);

    std::vector<std::string> joined;
    for (const auto& [key, metrics] : x_table)
        if (y_table.count(key)) joined.push_back(key);
    if (joined.size() < 3)
        throw error("need at least 3 joined rows to correlate, got " +
                    std::to_string(joined.size()));

    std::set<std::string> x_metrics, y_metrics;
    for (const ScoreRow& row : x_rows) x_metrics.insert(row.metric);
    for (const ScoreRow& row : y_rows) y_metrics.insert(row.metric);

    std::ostringstream out;
    out << "metric_x\tmetric_y\tpearson_r\tspearman_rho\tkendall_tau\n";
    for (const std::string& metric_x : x_metrics) {
        for (const std::string& metric_y : y_metrics) {
            std::vector<double> x, y;
            for (const std::string& key : joined) {
                auto xit = x_table[key].find(metric_x);
                auto yit = y_table[key].find(metric_y);
                if (xit == x_table[key].end() || yit == y_table[key].end()) continue;
                x.push_back(xit->second);
                y.push_back(yit->second);
            }
            if (x.size() < 3)
                throw error("metric pair " + metric_x + " / " + metric_y +
                            " has fewer than 3 joined rows");
            try {
                const double r = pearson(x, y);
                const double rho = spearman(x, y);
                const double tau = kendall(x, y);
                out << metric_x << '\t' << metric_y << '\t' << format_score(r) << '\t'
                    << format_score(rho) << '\t' << format_score(tau) << '\n';
            } catch (const undefined_correlation_error& e) {
                if (!args.skip_constant)
                    throw error("metric pair " + metric_x + " / " + metric_y + ": " + e.what());
                std::cerr << "warning: skipping " << metric_x << " / " << metric_y << ": "
                          << e.what() << "\n";
            }
        }
    }
    write_text_output(args.out_path, std::move(out).str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"summarization evaluation toolkit"};
    app.require_subcommand(1);

    // index build
    auto* index_cmd = app.add_subcommand("index", "inverted index operations");
    index_cmd->require_subcommand(1);
    IndexBuildArgs index_args;
    auto* build_cmd = index_cmd->add_subcommand("build", "build an index from a JSONL corpus");
    build_cmd->add_option("--corpus", index_args.corpus_file, "corpus JSONL file")->required();
    build_cmd->add_option("--out", index_args.out_dir, "output index directory")->required();
    build_cmd->add_flag("--no-stem", index_args.no_stem, "disable Porter stemming");
    build_cmd->add_flag("--keep-stopwords", index_args.keep_stopwords, "do not drop stopwords");
    build_cmd->add_flag("--keep-numbers", index_args.keep_numbers, "keep numeric tokens");
    build_cmd->add_flag("--no-lowercase", index_args.no_lowercase, "keep original case");

    // score
    auto* score_cmd = app.add_subcommand("score", "score candidate summaries");
    score_cmd->require_subcommand(1);

    SeraArgs sera_args;
    auto* sera_cmd = score_cmd->add_subcommand("sera", "retrieval-overlap relevance scores");
    sera_cmd->add_option("--index", sera_args.index_dir, "index directory")
        ->envname("SUMMEVAL_INDEX")
        ->required();
    sera_cmd->add_option("--candidates", sera_args.candidates_file,
                         "candidate summaries JSONL (topic_id, system_id, text)")
        ->required();
    sera_cmd->add_option("--golds", sera_args.golds_file,
                         "gold summaries JSONL (topic_id, text)")
        ->required();
    sera_cmd->add_option("-o,--out", sera_args.out_path, "output TSV (default stdout)");
    sera_cmd->add_option("--cutoffs", sera_args.cutoffs, "rank cut-offs")
        ->delimiter(',')
        ->capture_default_str();
    sera_cmd->add_option("--modes", sera_args.modes, "query modes: plain, np, kw")
        ->delimiter(',')
        ->capture_default_str();
    sera_cmd->add_option("--variants", sera_args.variants, "simple and/or dis")
        ->delimiter(',')
        ->capture_default_str();
    sera_cmd->add_option("--mu", sera_args.mu, "Dirichlet smoothing mass")
        ->capture_default_str();

    RougeArgs rouge_args;
    auto* rouge_cmd = score_cmd->add_subcommand("rouge", "lexical overlap scores");
    rouge_cmd->add_option("--candidates", rouge_args.candidates_file,
                          "candidate summaries JSONL (topic_id, system_id, text)")
        ->required();
    rouge_cmd->add_option("--golds", rouge_args.golds_file, "gold summaries JSONL")->required();
    rouge_cmd->add_option("-o,--out", rouge_args.out_path, "output TSV (default stdout)");
    rouge_cmd->add_option("--variants", rouge_args.variants, "subset of 1,2,3,4,l,s,su,w")
        ->delimiter(',')
        ->capture_default_str();
    rouge_cmd->add_flag("--no-stem", rouge_args.no_stem, "disable stemming");
    rouge_cmd->add_flag("--keep-stopwords", rouge_args.keep_stopwords, "keep stopwords");
    rouge_cmd->add_option("--aggregate", rouge_args.aggregate, "multi-reference: average or max")
        ->capture_default_str();
    rouge_cmd->add_option("--w-weight", rouge_args.w_weight, "ROUGE-W weight exponent")
        ->capture_default_str();
    rouge_cmd->add_option("--s-max-gap", rouge_args.s_max_gap,
                          "skip-bigram gap limit (-1 = unlimited)")
        ->capture_default_str();

    PyramidArgs pyramid_args;
    auto* pyramid_cmd = score_cmd->add_subcommand("pyramid", "tiered nugget scores");
    pyramid_cmd
        ->add_option("--pyramids", pyramid_args.pyramids_file,
                     "pyramid annotations (JSON object/array or JSONL)")
        ->required();
    pyramid_cmd
        ->add_option("--matches", pyramid_args.matches_file,
                     "candidate match file (topic_id, system_id, matched_ids)")
        ->required();
    pyramid_cmd->add_option("-o,--out", pyramid_args.out_path, "output TSV (default stdout)");

    // summarize
    SummarizeArgs summarize_args;
    auto* summarize_cmd = app.add_subcommand("summarize", "extractive baseline summarizers");
    summarize_cmd->add_option("input", summarize_args.input_file, "plain text document")
        ->required();
    summarize_cmd->add_option("-o,--out", summarize_args.out_path, "output file (default stdout)");
    summarize_cmd
        ->add_option("--method", summarize_args.method, "lexrank, freq, sumbasic, kl, or mmr")
        ->capture_default_str();
    summarize_cmd->add_option("-k,--sentences", summarize_args.k, "summary length in sentences")
        ->capture_default_str();
    summarize_cmd->add_option("--damping", summarize_args.damping, "lexrank damping factor")
        ->capture_default_str();
    summarize_cmd
        ->add_option("--threshold", summarize_args.sim_threshold, "lexrank similarity threshold")
        ->capture_default_str();
    summarize_cmd->add_option("--lambda", summarize_args.lambda, "mmr relevance/novelty balance")
        ->capture_default_str();
    summarize_cmd->add_option("--alpha", summarize_args.smoothing_alpha, "kl smoothing")
        ->capture_default_str();

    // correlate
    CorrelateArgs correlate_args;
    auto* correlate_cmd = app.add_subcommand("correlate", "correlate two score tables");
    correlate_cmd->add_option("--x", correlate_args.x_file, "first score TSV")->required();
    correlate_cmd->add_option("--y", correlate_args.y_file, "second score TSV")->required();
    correlate_cmd->add_option("-o,--out", correlate_args.out_path, "output TSV (default stdout)");
    correlate_cmd->add_flag("--per-topic", correlate_args.per_topic,
                            "join on (system, topic) instead of per-system means");
    correlate_cmd->add_flag("--skip-constant", correlate_args.skip_constant,
                            "skip metric pairs with a constant vector instead of failing");

    // sweep
    SeraArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "rank cut-off sweep, plot-ready long format");
    sweep_cmd->add_option("--index", sweep_args.index_dir, "index directory")
        ->envname("SUMMEVAL_INDEX")
        ->required();
    sweep_cmd->add_option("--candidates", sweep_args.candidates_file, "candidate JSONL")
        ->required();
    sweep_cmd->add_option("--golds", sweep_args.golds_file, "gold JSONL")->required();
    sweep_cmd->add_option("-o,--out", sweep_args.out_path, "output TSV (default stdout)");
    sweep_cmd->add_option("--cutoffs", sweep_args.cutoffs, "rank cut-offs to sweep")
        ->delimiter(',')
        ->capture_default_str();
    sweep_cmd->add_option("--modes", sweep_args.modes, "query modes to sweep")
        ->delimiter(',')
        ->capture_default_str();
    sweep_cmd->add_option("--mu", sweep_args.mu, "Dirichlet smoothing mass")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (build_cmd->parsed()) return run_index_build(index_args);
        if (sera_cmd->parsed()) return run_score_sera(sera_args);
        if (rouge_cmd->parsed()) return run_score_rouge(rouge_args);
        if (pyramid_cmd->parsed()) return run_score_pyramid(pyramid_args);
        if (summarize_cmd->parsed()) return run_summarize(summarize_args);
        if (correlate_cmd->parsed()) return run_correlate(correlate_args);
        if (sweep_cmd->parsed()) return run_sweep(sweep_args);
    } catch (const std::exception& e) {
        std::cerr << "summeval: error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "summeval: no subcommand\n";
    return 1;
}
