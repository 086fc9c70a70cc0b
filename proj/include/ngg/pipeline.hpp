#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ngg/corpus_model.hpp"
#include "ngg/evaluator.hpp"
#include "ngg/ngram_graph.hpp"
#include "ngg/query_expansion.hpp"
#include "ngg/summarizer.hpp"

namespace ngg {

// Fully resolved run configuration shared by the CLI commands.
struct RunConfig {
    GraphParams graph;
    ScoringMode scoring = ScoringMode::Sentence;
    RedundancyMode redundancy = RedundancyMode::Removal;
    double redundancy_threshold = 0.2;
    int word_limit = 100;
    bool query_expansion = false;
    double sense_threshold = 0.05;
    int sense_min_len = 3;
    SenseDescriptor sense_descriptor = SenseDescriptor::Definition;
    std::filesystem::path thesaurus_path;
    std::filesystem::path prior_set_path;
    std::filesystem::path noise_topics_path;
    ContentMode content_mode = ContentMode::Intersection;
    bool collapse_ws = false;
    int workers = 1;
    unsigned long seed = 0; // reserved; the pipeline itself is deterministic

    // Re-validates every module constraint; throws std::invalid_argument.
    void validate() const;
};

// Topic definition file (first line title, rest narrative query).
struct TopicQuery {
    std::string title;
    std::string narrative;

    std::string full_text() const;
};

struct TopicResult {
    std::string topic_id;
    std::string summary;
    std::vector<ScoredSentence> sentences; // rank order, with verdicts
    std::vector<std::size_t> selected;     // selection order into `sentences`
    std::vector<AcceptedSense> accepted_senses;
    bool noise_subtracted = false;
    bool prior_merged = false;
    bool budget_too_small = false;
    int doc_count = 0;
};

// Reads `<topic_dir>/*.txt` (file-name order; an optional `topic.txt` holds
// the query), builds the content model, and runs the configured pipeline.
TopicResult summarize_topic(const std::filesystem::path& topic_dir, const RunConfig& config);

// Renders the diagnostics block for a topic run (resolved config, accepted
// senses, per-sentence scores and verdicts).
std::string render_diagnostics(const TopicResult& result, const RunConfig& config);

// Writes `<topic-id>.summary.txt` and `<topic-id>.diag.txt` under out_dir.
void write_topic_outputs(const TopicResult& result, const RunConfig& config,
                         const std::filesystem::path& out_dir);

// True when the directory directly contains .txt documents (a single topic)
// as opposed to a directory of topic subdirectories.
bool is_single_topic_dir(const std::filesystem::path& dir);

std::vector<std::filesystem::path> list_topic_dirs(const std::filesystem::path& root);

// Runs all topics (possibly in parallel per config.workers) writing outputs
// under out_dir; returns the per-topic results in topic order.
std::vector<TopicResult> summarize_topics(const std::vector<std::filesystem::path>& topic_dirs,
                                          const RunConfig& config,
                                          const std::filesystem::path& out_dir);

struct TopicEval {
    std::string topic_id;
    std::string peer_file;
    EvalReport report;
};

struct EvalRun {
    std::vector<TopicEval> topics;
    std::vector<std::string> warnings; // e.g. peers with no matching models
};

// Matches peer files to model files by topic id (file-name prefix up to the
// first '.') and scores each matched peer.
EvalRun evaluate_dirs(const std::filesystem::path& peer_dir,
                      const std::filesystem::path& model_dir, const GraphParams& params);

std::string render_eval_text(const EvalRun& run);
std::string render_eval_records(const EvalRun& run); // one JSON object per line

// Shared helpers for corpus loading.
std::string read_text_file(const std::filesystem::path& path);
std::vector<std::filesystem::path> list_documents(const std::filesystem::path& dir);
std::optional<TopicQuery> read_topic_query(const std::filesystem::path& topic_dir);

// Per-topic content graph used for classification and noise building: the
// documents of `dir` folded according to `mode`.
ContentModel build_topic_model(const std::filesystem::path& dir, const RunConfig& config);

} // namespace ngg
