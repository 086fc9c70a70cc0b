// Command-line front-end: summarize, evaluate, train-chunker, classify.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ngg/chunker.hpp"
#include "ngg/errors.hpp"
#include "ngg/pipeline.hpp"
#include "ngg/serialization.hpp"
#include "ngg/text.hpp"

namespace fs = std::filesystem;

namespace {

struct CliOptions {
    ngg::RunConfig config;
    std::string scoring = "sentence";
    std::string redundancy = "removal";
    std::string content_mode = "intersection";
    std::string sense_descriptor = "definition";
    std::string thesaurus;
    std::string prior_set;
    std::string noise_topics;
};

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--rank-min", opt.config.graph.l_min, "Minimum n-gram rank");
    cmd->add_option("--rank-max", opt.config.graph.l_max, "Maximum n-gram rank");
    cmd->add_option("--dwin", opt.config.graph.window, "Co-occurrence window");
    cmd->add_option("--scoring", opt.scoring, "Salience scoring: sentence|chunk");
    cmd->add_option("--redundancy", opt.redundancy, "Redundancy control: removal|novelty|none");
    cmd->add_option("--redundancy-threshold", opt.config.redundancy_threshold,
                    "Overlap above which a candidate is redundant");
    cmd->add_option("--word-limit", opt.config.word_limit, "Summary word budget");
    cmd->add_flag("--expand-query", opt.config.query_expansion,
                  "Expand the topic query through the thesaurus");
    cmd->add_option("--sense-threshold", opt.config.sense_threshold,
                    "Minimum sense-to-content similarity for the sense filter");
    cmd->add_option("--sense-min-len", opt.config.sense_min_len,
                    "Minimum substring length annotated in the semantic index");
    cmd->add_option("--sense-descriptor", opt.sense_descriptor,
                    "Sense text used for graphs: definition|synonyms");
    cmd->add_option("--thesaurus", opt.thesaurus, "Thesaurus TSV file");
    cmd->add_option("--prior-set", opt.prior_set,
                    "Directory of documents the reader already knows (novelty mode)");
    cmd->add_option("--content-mode", opt.content_mode,
                    "Content model fold: intersection|update-mean");
    cmd->add_option("--noise-topics", opt.noise_topics,
                    "Directory of topic directories used to build the noise model");
    cmd->add_flag("--collapse-whitespace", opt.config.collapse_ws,
                  "Collapse whitespace runs before any processing");
    cmd->add_option("--workers", opt.config.workers, "Parallel topic workers");
    cmd->add_option("--seed", opt.config.seed,
                    "Reserved for test-data generators; the pipeline is deterministic");
}

ngg::RunConfig resolve(const CliOptions& opt) {
    ngg::RunConfig config = opt.config;
    if (opt.scoring == "sentence") config.scoring = ngg::ScoringMode::Sentence;
    else if (opt.scoring == "chunk") config.scoring = ngg::ScoringMode::Chunk;
    else throw std::invalid_argument("unknown --scoring value: " + opt.scoring);

    if (opt.redundancy == "removal") config.redundancy = ngg::RedundancyMode::Removal;
    else if (opt.redundancy == "novelty") config.redundancy = ngg::RedundancyMode::Novelty;
    else if (opt.redundancy == "none") config.redundancy = ngg::RedundancyMode::None;
    else throw std::invalid_argument("unknown --redundancy value: " + opt.redundancy);

    if (opt.content_mode == "intersection") config.content_mode = ngg::ContentMode::Intersection;
    else if (opt.content_mode == "update-mean") config.content_mode = ngg::ContentMode::UpdateMean;
    else throw std::invalid_argument("unknown --content-mode value: " + opt.content_mode);

    if (opt.sense_descriptor == "definition")
        config.sense_descriptor = ngg::SenseDescriptor::Definition;
    else if (opt.sense_descriptor == "synonyms")
        config.sense_descriptor = ngg::SenseDescriptor::Synonyms;
    else throw std::invalid_argument("unknown --sense-descriptor value: " + opt.sense_descriptor);

    config.thesaurus_path = opt.thesaurus;
    config.prior_set_path = opt.prior_set;
    config.noise_topics_path = opt.noise_topics;
    config.validate();
    return config;
}

int run_summarize(const std::string& input_dir, const std::string& out_dir,
                  const CliOptions& opt) {
    const ngg::RunConfig config = resolve(opt);
    const fs::path input(input_dir);
    std::vector<fs::path> topics;
    if (ngg::is_single_topic_dir(input)) {
        topics.push_back(input);
    } else {
        topics = ngg::list_topic_dirs(input);
    }
    if (topics.empty()) throw ngg::DataError("no topics with .txt documents in " + input_dir);

    const auto results = ngg::summarize_topics(topics, config, out_dir);
    for (const auto& result : results) {
        std::cout << result.topic_id << ": " << ngg::word_count(result.summary) << " words, "
                  << result.selected.size() << " sentences";
        if (result.budget_too_small) std::cout << " [warning: nothing fit the word budget]";
        std::cout << '\n';
    }
    return 0;
}

int run_evaluate(const std::string& peer_dir, const std::string& model_dir,
                 const std::string& report_path, const std::string& records_path,
                 const CliOptions& opt) {
    const ngg::RunConfig config = resolve(opt);
    const ngg::EvalRun run = ngg::evaluate_dirs(peer_dir, model_dir, config.graph);

    const std::string text = ngg::render_eval_text(run);
    std::cout << text;
    if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::binary);
        if (!out) throw ngg::DataError("cannot write " + report_path);
        out << text;
    }
    if (!records_path.empty()) {
        std::ofstream out(records_path, std::ios::binary);
        if (!out) throw ngg::DataError("cannot write " + records_path);
        out << ngg::render_eval_records(run);
    }
    return 0;
}

int run_train_chunker(const std::string& corpus_dir, const std::string& out_path,
                      const CliOptions& opt) {
    const ngg::RunConfig config = resolve(opt);
    const auto docs = ngg::list_documents(corpus_dir);
    if (docs.empty()) throw ngg::DataError("no .txt documents in " + corpus_dir);
    std::vector<std::string> texts;
    texts.reserve(docs.size());
    for (const auto& doc : docs) {
        std::string text = ngg::read_text_file(doc);
        texts.push_back(config.collapse_ws ? ngg::collapse_whitespace(text) : text);
    }
    const ngg::EntropyModel model = ngg::train_delimiter_model(texts);
    ngg::save_entropy_model_file(out_path, model);

    std::cout << "contexts " << model.entropies.size() << '\n';
    std::cout << "threshold " << ngg::format_weight(model.threshold) << '\n';
    std::cout << "delimiters";
    for (const std::string& d : model.delimiters)
        std::cout << " '" << ngg::escape_label(d) << "'";
    std::cout << '\n';
    return 0;
}

int run_classify(const std::string& doc_path, const std::string& topics_dir,
                 const CliOptions& opt) {
    const ngg::RunConfig config = resolve(opt);

    std::map<std::string, ngg::ContentModel> topics;
    for (const fs::path& dir : ngg::list_topic_dirs(topics_dir))
        topics.emplace(dir.filename().string(), ngg::build_topic_model(dir, config));
    if (topics.empty()) throw ngg::DataError("no topic directories in " + topics_dir);

    if (!config.noise_topics_path.empty()) {
        std::vector<ngg::GraphSet> noise_graphs;
        for (const fs::path& dir : ngg::list_topic_dirs(config.noise_topics_path))
            noise_graphs.push_back(ngg::build_topic_model(dir, config).content);
        if (noise_graphs.size() < 2)
            throw ngg::DataError("noise model needs at least 2 topic directories");
        const ngg::NoiseModel noise = ngg::build_noise_model(noise_graphs);
        for (auto& [_, model] : topics) model = ngg::subtract_noise(model, noise);
    }

    std::string text = ngg::read_text_file(doc_path);
    if (config.collapse_ws) text = ngg::collapse_whitespace(text);
    const ngg::GraphSet doc = ngg::build_graphset(text, config.graph);
    const ngg::Classification verdict = ngg::classify(doc, topics);

    std::cout << "topic " << verdict.topic_id;
    if (verdict.low_confidence) std::cout << " [low confidence: all scores zero]";
    std::cout << '\n';
    for (const auto& [id, score] : verdict.scores)
        std::cout << "  " << id << ' ' << ngg::format_weight(score) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Character n-gram graph toolkit and extractive multi-document summarizer"};
    app.require_subcommand(1);

    CliOptions opt;

    std::string summarize_input, summarize_out = ".";
    CLI::App* summarize = app.add_subcommand(
        "summarize", "Summarize a topic directory (or a directory of topic directories)");
    summarize->add_option("topic-dir", summarize_input, "Topic directory")->required();
    summarize->add_option("--out-dir", summarize_out, "Output directory");
    add_common_flags(summarize, opt);

    std::string peer_dir, model_dir, report_path, records_path;
    CLI::App* evaluate =
        app.add_subcommand("evaluate", "Score peer summaries against model summaries");
    evaluate->add_option("peer-dir", peer_dir, "Peer summaries directory")->required();
    evaluate->add_option("model-dir", model_dir, "Model summaries directory")->required();
    evaluate->add_option("--report", report_path, "Write the text report here");
    evaluate->add_option("--records", records_path, "Write one JSON record per topic here");
    add_common_flags(evaluate, opt);

    std::string corpus_dir, model_out;
    CLI::App* train = app.add_subcommand("train-chunker",
                                         "Learn delimiter characters from a corpus directory");
    train->add_option("corpus-dir", corpus_dir, "Directory of .txt documents")->required();
    train->add_option("model-out", model_out, "Entropy model output file")->required();
    add_common_flags(train, opt);

    std::string doc_path, topics_dir;
    CLI::App* classify =
        app.add_subcommand("classify", "Assign a document to the most similar topic");
    classify->add_option("document", doc_path, "Document .txt file")->required();
    classify->add_option("topics-dir", topics_dir, "Directory of topic directories")->required();
    add_common_flags(classify, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (summarize->parsed()) return run_summarize(summarize_input, summarize_out, opt);
        if (evaluate->parsed())
            return run_evaluate(peer_dir, model_dir, report_path, records_path, opt);
        if (train->parsed()) return run_train_chunker(corpus_dir, model_out, opt);
        if (classify->parsed()) return run_classify(doc_path, topics_dir, opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
