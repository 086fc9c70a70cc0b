#include "ngg/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ngg/chunker.hpp"
#include "ngg/errors.hpp"
#include "ngg/graph_ops.hpp"
#include "ngg/serialization.hpp"
#include "ngg/text.hpp"

namespace fs = std::filesystem;

namespace ngg {

namespace {

const char* kTopicFileName = "topic.txt";

std::string scoring_name(ScoringMode mode) {
    return mode == ScoringMode::Sentence ? "sentence" : "chunk";
}

std::string redundancy_name(RedundancyMode mode) {
    switch (mode) {
    case RedundancyMode::Removal: return "removal";
    case RedundancyMode::Novelty: return "novelty";
    default: return "none";
    }
}

std::string content_mode_name(ContentMode mode) {
    return mode == ContentMode::Intersection ? "intersection" : "update-mean";
}

std::string reason_name(ExclusionReason reason) {
    switch (reason) {
    case ExclusionReason::Redundant: return "redundant";
    case ExclusionReason::OverBudget: return "over-budget";
    case ExclusionReason::Used: return "used";
    default: return "candidate";
    }
}

} // namespace

void RunConfig::validate() const {
    if (graph.l_min < 1 || graph.l_min > graph.l_max)
        throw std::invalid_argument("config: need 1 <= rank-min <= rank-max");
    if (graph.window < 1) throw std::invalid_argument("config: dwin must be >= 1");
    if (redundancy == RedundancyMode::Removal &&
        (redundancy_threshold <= 0.0 || redundancy_threshold >= 1.0))
        throw std::invalid_argument("config: redundancy threshold must be in (0, 1)");
    if (word_limit < 1) throw std::invalid_argument("config: word limit must be >= 1");
    if (sense_threshold < 0.0 || sense_threshold >= 1.0)
        throw std::invalid_argument("config: sense threshold must be in [0, 1)");
    if (sense_min_len < 1) throw std::invalid_argument("config: sense min length must be >= 1");
    if (workers < 1) throw std::invalid_argument("config: workers must be >= 1");
    if (query_expansion && thesaurus_path.empty())
        throw std::invalid_argument("config: query expansion needs a thesaurus file");
}

std::string TopicQuery::full_text() const {
    if (narrative.empty()) return title;
    if (title.empty()) return narrative;
    return title + " " + narrative;
}

std::string read_text_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<fs::path> list_documents(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw DataError("not a directory: " + dir.string());
    std::vector<fs::path> docs;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const fs::path& p = entry.path();
        if (p.extension() != ".txt") continue;
        if (p.filename() == kTopicFileName) continue;
        docs.push_back(p);
    }
    std::sort(docs.begin(), docs.end());
    return docs;
}

std::optional<TopicQuery> read_topic_query(const fs::path& topic_dir) {
    const fs::path path = topic_dir / kTopicFileName;
    if (!fs::exists(path)) return std::nullopt;
    std::istringstream in(read_text_file(path));
    TopicQuery query;
    std::string line;
    if (std::getline(in, line)) query.title = trim(line);
    std::string rest;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (!rest.empty()) rest += ' ';
        rest += t;
    }
    query.narrative = rest;
    return query;
}

ContentModel build_topic_model(const fs::path& dir, const RunConfig& config) {
    const auto docs = list_documents(dir);
    if (docs.empty()) throw DataError("no .txt documents in " + dir.string());
    std::vector<GraphSet> graphs;
    graphs.reserve(docs.size());
    for (const fs::path& doc : docs) {
        std::string text = read_text_file(doc);
        if (config.collapse_ws) text = collapse_whitespace(text);
        graphs.push_back(build_graphset(text, config.graph));
    }
    return build_content_model(graphs, config.content_mode);
}

bool is_single_topic_dir(const fs::path& dir) {
    return !list_documents(dir).empty();
}

std::vector<fs::path> list_topic_dirs(const fs::path& root) {
    if (!fs::is_directory(root)) throw DataError("not a directory: " + root.string());
    std::vector<fs::path> dirs;
    for (const auto& entry : fs::directory_iterator(root)) {
        if (!entry.is_directory()) continue;
        if (!list_documents(entry.path()).empty()) dirs.push_back(entry.path());
    }
    std::sort(dirs.begin(), dirs.end());
    return dirs;
}

TopicResult summarize_topic(const fs::path& topic_dir, const RunConfig& config) {
    config.validate();

    TopicResult result;
    result.topic_id = topic_dir.filename().string();
    if (result.topic_id.empty()) result.topic_id = topic_dir.parent_path().filename().string();

    const auto doc_paths = list_documents(topic_dir);
    if (doc_paths.empty()) throw DataError("no .txt documents in " + topic_dir.string());
    result.doc_count = static_cast<int>(doc_paths.size());

    std::vector<std::string> doc_texts;
    std::vector<GraphSet> doc_graphs;
    doc_texts.reserve(doc_paths.size());
    doc_graphs.reserve(doc_paths.size());
    for (const fs::path& p : doc_paths) {
        std::string text = read_text_file(p);
        if (config.collapse_ws) text = collapse_whitespace(text);
        doc_texts.push_back(std::move(text));
        doc_graphs.push_back(build_graphset(doc_texts.back(), config.graph));
    }

    ContentModel content = build_content_model(doc_graphs, config.content_mode);

    if (!config.noise_topics_path.empty()) {
        std::vector<GraphSet> noise_topic_graphs;
        for (const fs::path& dir : list_topic_dirs(config.noise_topics_path))
            noise_topic_graphs.push_back(build_topic_model(dir, config).content);
        if (noise_topic_graphs.size() < 2)
            throw DataError("noise model needs at least 2 topic directories under " +
                            config.noise_topics_path.string());
        content = subtract_noise(content, build_noise_model(noise_topic_graphs));
        result.noise_subtracted = true;
    }

    // Delimiters come from this topic's own documents.
    std::set<std::string> delimiters;
    if (config.scoring == ScoringMode::Chunk)
        delimiters = train_delimiter_model(doc_texts).delimiters;

    // With a query present the content definition always absorbs the query
    // graph; expansion additionally merges the senses that pass the filter.
    GraphSet scoring_content = content.content;
    const auto topic_query = read_topic_query(topic_dir);
    if (topic_query && !topic_query->full_text().empty()) {
        Thesaurus thesaurus;
        if (config.query_expansion) thesaurus = load_thesaurus_tsv(config.thesaurus_path);
        const SemanticIndex index =
            build_semantic_index(topic_query->full_text(), thesaurus, config.sense_min_len);
        ExpandedContent expanded =
            expand_query(topic_query->full_text(), content, index, config.sense_threshold,
                         config.sense_descriptor);
        scoring_content = std::move(expanded.content);
        result.accepted_senses = std::move(expanded.accepted_senses);
    }

    std::vector<Sentence> sentences;
    for (std::size_t d = 0; d < doc_paths.size(); ++d) {
        auto split = split_sentences(doc_texts[d], doc_paths[d].filename().string());
        sentences.insert(sentences.end(), split.begin(), split.end());
    }

    result.sentences = score_sentences(sentences, scoring_content, config.scoring, delimiters,
                                       config.graph);
    rank_candidates(result.sentences);

    SelectionResult selection;
    switch (config.redundancy) {
    case RedundancyMode::Removal:
        selection = select_redundancy_removal(result.sentences, config.redundancy_threshold,
                                              config.word_limit);
        break;
    case RedundancyMode::Novelty: {
        std::optional<GraphSet> prior;
        if (!config.prior_set_path.empty()) {
            prior = build_topic_model(config.prior_set_path, config).content;
            result.prior_merged = true;
        }
        selection = select_novelty(result.sentences, scoring_content, config.word_limit,
                                   prior ? &*prior : nullptr);
        break;
    }
    case RedundancyMode::None:
        selection = select_plain(result.sentences, config.word_limit);
        break;
    }

    result.summary = compose_summary(result.sentences, selection);
    result.selected = std::move(selection.selected);
    result.budget_too_small = selection.budget_too_small;
    return result;
}

std::string render_diagnostics(const TopicResult& result, const RunConfig& config) {
    std::ostringstream out;
    out << "topic " << result.topic_id << '\n';
    out << "config"
        << " rank_min=" << config.graph.l_min << " rank_max=" << config.graph.l_max
        << " dwin=" << config.graph.window << " scoring=" << scoring_name(config.scoring)
        << " redundancy=" << redundancy_name(config.redundancy)
        << " redundancy_threshold=" << format_weight(config.redundancy_threshold)
        << " word_limit=" << config.word_limit
        << " expand_query=" << (config.query_expansion ? "true" : "false")
        << " sense_threshold=" << format_weight(config.sense_threshold)
        << " sense_min_len=" << config.sense_min_len << " sense_descriptor="
        << (config.sense_descriptor == SenseDescriptor::Definition ? "definition" : "synonyms")
        << " content_mode=" << content_mode_name(config.content_mode)
        << " collapse_whitespace=" << (config.collapse_ws ? "true" : "false")
        << " workers=" << config.workers << " seed=" << config.seed
        << " thesaurus=" << config.thesaurus_path.string()
        << " prior_set=" << config.prior_set_path.string()
        << " noise_topics=" << config.noise_topics_path.string() << '\n';
    out << "docs " << result.doc_count << '\n';
    out << "noise_subtracted " << (result.noise_subtracted ? "true" : "false") << '\n';
    out << "prior_merged " << (result.prior_merged ? "true" : "false") << '\n';
    out << "budget_too_small " << (result.budget_too_small ? "true" : "false") << '\n';
    for (const AcceptedSense& sense : result.accepted_senses)
        out << "accepted_sense\t" << escape_label(sense.term) << '\t'
            << escape_label(sense.sense_id) << '\t' << format_weight(sense.score) << '\n';
    out << "summary_words " << word_count(result.summary) << '\n';
    for (const ScoredSentence& s : result.sentences) {
        out << "sentence\t" << escape_label(s.sentence.doc_id) << '\t' << s.sentence.index_in_doc
            << '\t' << format_weight(s.salience) << '\t' << format_weight(s.redundancy) << '\t'
            << s.final_rank_score << '\t' << reason_name(s.reason) << '\t'
            << escape_label(s.sentence.text) << '\n';
    }
    return out.str();
}

void write_topic_outputs(const TopicResult& result, const RunConfig& config,
                         const fs::path& out_dir) {
    fs::create_directories(out_dir);
    {
        std::ofstream out(out_dir / (result.topic_id + ".summary.txt"), std::ios::binary);
        if (!out) throw DataError("cannot write summary for topic " + result.topic_id);
        out << result.summary << '\n';
    }
    {
        std::ofstream out(out_dir / (result.topic_id + ".diag.txt"), std::ios::binary);
        if (!out) throw DataError("cannot write diagnostics for topic " + result.topic_id);
        out << render_diagnostics(result, config);
    }
}

std::vector<TopicResult> summarize_topics(const std::vector<fs::path>& topic_dirs,
                                          const RunConfig& config, const fs::path& out_dir) {
    std::vector<TopicResult> results(topic_dirs.size());
    const int workers = std::max(1, std::min<int>(config.workers,
                                                  static_cast<int>(topic_dirs.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < topic_dirs.size(); ++i) {
            results[i] = summarize_topic(topic_dirs[i], config);
            write_topic_outputs(results[i], config, out_dir);
        }
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= topic_dirs.size()) return;
            try {
                results[i] = summarize_topic(topic_dirs[i], config);
                write_topic_outputs(results[i], config, out_dir);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

namespace {

std::string topic_prefix(const fs::path& file) {
    const std::string name = file.filename().string();
    const auto dot = name.find('.');
    return dot == std::string::npos ? name : name.substr(0, dot);
}

} // namespace

EvalRun evaluate_dirs(const fs::path& peer_dir, const fs::path& model_dir,
                      const GraphParams& params) {
    if (!fs::is_directory(peer_dir)) throw DataError("not a directory: " + peer_dir.string());
    if (!fs::is_directory(model_dir)) throw DataError("not a directory: " + model_dir.string());

    std::map<std::string, std::vector<fs::path>> models_by_topic;
    for (const auto& entry : fs::directory_iterator(model_dir)) {
        if (!entry.is_regular_file()) continue;
        models_by_topic[topic_prefix(entry.path())].push_back(entry.path());
    }
    for (auto& [_, files] : models_by_topic) std::sort(files.begin(), files.end());

    std::vector<fs::path> peers;
    for (const auto& entry : fs::directory_iterator(peer_dir))
        if (entry.is_regular_file()) peers.push_back(entry.path());
    std::sort(peers.begin(), peers.end());

    EvalRun run;
    for (const fs::path& peer : peers) {
        const std::string topic = topic_prefix(peer);
        auto it = models_by_topic.find(topic);
        if (it == models_by_topic.end()) {
            run.warnings.push_back("no model summaries for topic '" + topic + "' (peer " +
                                   peer.filename().string() + "), skipped");
            continue;
        }
        std::vector<std::pair<std::string, std::string>> models;
        models.reserve(it->second.size());
        for (const fs::path& m : it->second)
            models.emplace_back(m.filename().string(), read_text_file(m));
        TopicEval te;
        te.topic_id = topic;
        te.peer_file = peer.filename().string();
        te.report = score_summary(read_text_file(peer), models, params);
        run.topics.push_back(std::move(te));
    }
    return run;
}

std::string render_eval_text(const EvalRun& run) {
    std::ostringstream out;
    for (const TopicEval& te : run.topics) {
        out << "topic " << te.topic_id << " mean " << format_weight(te.report.mean) << '\n';
        for (const auto& [model, score] : te.report.per_model)
            out << "  model " << model << ' ' << format_weight(score) << '\n';
    }
    for (const std::string& warning : run.warnings) out << "warning " << warning << '\n';
    return out.str();
}

std::string render_eval_records(const EvalRun& run) {
    std::ostringstream out;
    for (const TopicEval& te : run.topics) {
        nlohmann::json record;
        record["topic"] = te.topic_id;
        record["peer"] = te.peer_file;
        record["models"] = te.report.per_model;
        record["mean"] = te.report.mean;
        out << record.dump() << '\n';
    }
    return out.str();
}

} // namespace ngg
