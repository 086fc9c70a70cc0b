#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>

#include "ngg/errors.hpp"
#include "ngg/pipeline.hpp"
#include "ngg/sentences.hpp"
#include "ngg/text.hpp"

using namespace ngg;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        static std::mt19937_64 rng(std::random_device{}());
        path = fs::temp_directory_path() / ("ngg_test_" + std::to_string(rng()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

void write_file(const fs::path& p, const std::string& text) {
    fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    out << text;
}

// Two documents that share their lead sentences, plus a deliberate duplicate.
void write_toy_topic(const fs::path& dir) {
    write_file(dir / "doc1.txt",
               "The river flooded the old town again. Rescue teams arrived before dawn. "
               "Residents moved to higher ground quickly. The flood damaged many bridges.");
    write_file(dir / "doc2.txt",
               "The river flooded the old town again. Officials promised faster warnings. "
               "The flood damaged many bridges. Farmers counted their losses after the water fell.");
    write_file(dir / "topic.txt", "River flooding\nDescribe the flood and its damage.");
}

RunConfig toy_config() {
    RunConfig config;
    config.graph = {3, 3, 3};
    config.word_limit = 30;
    return config;
}

} // namespace

TEST_CASE("summarize_topic produces an extractive summary within budget") {
    TempDir tmp;
    const fs::path topic = tmp.path / "flood";
    write_toy_topic(topic);

    const RunConfig config = toy_config();
    const TopicResult result = summarize_topic(topic, config);

    CHECK(result.topic_id == "flood");
    CHECK(result.doc_count == 2);
    CHECK(word_count(result.summary) <= 30);
    CHECK_FALSE(result.selected.empty());

    // Every selected sentence is character-identical to a source sentence.
    std::vector<std::string> source_sentences;
    for (const char* name : {"doc1.txt", "doc2.txt"})
        for (const Sentence& s : split_sentences(read_text_file(topic / name)))
            source_sentences.push_back(s.text);
    for (std::size_t idx : result.selected) {
        const std::string& text = result.sentences[idx].sentence.text;
        CHECK(std::count(source_sentences.begin(), source_sentences.end(), text) >= 1);
    }
}

TEST_CASE("summarize_topic is deterministic") {
    TempDir tmp;
    const fs::path topic = tmp.path / "flood";
    write_toy_topic(topic);
    const RunConfig config = toy_config();

    const TopicResult a = summarize_topic(topic, config);
    const TopicResult b = summarize_topic(topic, config);
    CHECK(a.summary == b.summary);
    CHECK(render_diagnostics(a, config) == render_diagnostics(b, config));
}

TEST_CASE("redundancy removal suppresses the duplicated sentence") {
    TempDir tmp;
    const fs::path topic = tmp.path / "flood";
    write_toy_topic(topic);
    RunConfig config = toy_config();
    config.word_limit = 100;

    const TopicResult result = summarize_topic(topic, config);
    // "The river flooded..." and "The flood damaged..." each appear in both
    // documents; the second copies must not be selected twice.
    std::map<std::string, int> counts;
    for (std::size_t idx : result.selected) ++counts[result.sentences[idx].sentence.text];
    for (const auto& [text, n] : counts) CHECK(n == 1);

    bool saw_redundant = false;
    for (const auto& s : result.sentences)
        if (s.reason == ExclusionReason::Redundant) saw_redundant = true;
    CHECK(saw_redundant);
}

TEST_CASE("disabled expansion matches expansion with an empty thesaurus bitwise") {
    TempDir tmp;
    const fs::path topic = tmp.path / "flood";
    write_toy_topic(topic);

    RunConfig off = toy_config();

    RunConfig on = toy_config();
    on.query_expansion = true;
    on.thesaurus_path = tmp.path / "empty.tsv";
    write_file(on.thesaurus_path, "");

    const TopicResult a = summarize_topic(topic, off);
    const TopicResult b = summarize_topic(topic, on);
    CHECK(a.summary == b.summary);
    CHECK(a.accepted_senses.empty());
    CHECK(b.accepted_senses.empty());
}

TEST_CASE("novelty mode with a prior set marks it in the result") {
    TempDir tmp;
    const fs::path topic = tmp.path / "flood";
    write_toy_topic(topic);
    const fs::path prior = tmp.path / "prior";
    write_file(prior / "old1.txt", "The river flooded the old town again. That was last year.");

    RunConfig config = toy_config();
    config.redundancy = RedundancyMode::Novelty;
    config.prior_set_path = prior;

    const TopicResult result = summarize_topic(topic, config);
    CHECK(result.prior_merged);
    CHECK(word_count(result.summary) <= config.word_limit);
}

TEST_CASE("summarize_topic validates inputs") {
    TempDir tmp;
    fs::create_directories(tmp.path / "empty_topic");
    CHECK_THROWS_AS(summarize_topic(tmp.path / "empty_topic", toy_config()), DataError);
    CHECK_THROWS_AS(summarize_topic(tmp.path / "missing", toy_config()), DataError);

    RunConfig bad = toy_config();
    bad.graph.l_min = 0;
    TempDir tmp2;
    const fs::path topic = tmp2.path / "flood";
    write_toy_topic(topic);
    CHECK_THROWS_AS(summarize_topic(topic, bad), std::invalid_argument);
}

TEST_CASE("write_topic_outputs emits summary and diagnostics files") {
    TempDir tmp;
    const fs::path topic = tmp.path / "flood";
    write_toy_topic(topic);
    const RunConfig config = toy_config();
    const TopicResult result = summarize_topic(topic, config);

    const fs::path out = tmp.path / "out";
    write_topic_outputs(result, config, out);
    CHECK(fs::exists(out / "flood.summary.txt"));
    CHECK(fs::exists(out / "flood.diag.txt"));

    const std::string diag = read_text_file(out / "flood.diag.txt");
    CHECK(diag.find("topic flood") != std::string::npos);
    CHECK(diag.find("config rank_min=3") != std::string::npos);
    CHECK(diag.find("sentence\t") != std::string::npos);
}

TEST_CASE("summarize_topics processes topic directories in parallel") {
    TempDir tmp;
    write_toy_topic(tmp.path / "corpus" / "t1");
    write_toy_topic(tmp.path / "corpus" / "t2");
    write_toy_topic(tmp.path / "corpus" / "t3");

    RunConfig config = toy_config();
    config.workers = 3;
    const auto dirs = list_topic_dirs(tmp.path / "corpus");
    REQUIRE(dirs.size() == 3);

    const auto results = summarize_topics(dirs, config, tmp.path / "out");
    REQUIRE(results.size() == 3);
    CHECK(results[0].topic_id == "t1");
    CHECK(results[1].summary == results[0].summary); // identical inputs
    CHECK(fs::exists(tmp.path / "out" / "t3.summary.txt"));
}

TEST_CASE("evaluate_dirs matches topics by file-name prefix") {
    TempDir tmp;
    const std::string summary = "The river flooded the old town again.";
    write_file(tmp.path / "peers" / "t1.summary.txt", summary);
    write_file(tmp.path / "peers" / "t9.summary.txt", "An orphan peer.");
    write_file(tmp.path / "models" / "t1.model_a.txt", summary);
    write_file(tmp.path / "models" / "t1.model_b.txt", "Another take on the flood story.");

    const EvalRun run = evaluate_dirs(tmp.path / "peers", tmp.path / "models",
                                      GraphParams{3, 3, 3});
    REQUIRE(run.topics.size() == 1);
    CHECK(run.topics[0].topic_id == "t1");
    CHECK(run.topics[0].report.per_model.size() == 2);
    CHECK(run.topics[0].report.per_model.at("t1.model_a.txt") == doctest::Approx(1.0));
    REQUIRE(run.warnings.size() == 1);
    CHECK(run.warnings[0].find("t9") != std::string::npos);

    const std::string records = render_eval_records(run);
    CHECK(records.find("\"topic\":\"t1\"") != std::string::npos);
    CHECK(render_eval_text(run).find("topic t1 mean") != std::string::npos);

    // Empty peer directory: no topics, no warnings.
    fs::create_directories(tmp.path / "nopeers");
    const EvalRun empty = evaluate_dirs(tmp.path / "nopeers", tmp.path / "models",
                                        GraphParams{3, 3, 3});
    CHECK(empty.topics.empty());
}

TEST_CASE("topic query file parses title and narrative") {
    TempDir tmp;
    const fs::path topic = tmp.path / "q";
    write_file(topic / "doc.txt", "Some text.");
    write_file(topic / "topic.txt", "A Title\nline one\n\nline two\n");
    const auto query = read_topic_query(topic);
    REQUIRE(query.has_value());
    CHECK(query->title == "A Title");
    CHECK(query->narrative == "line one line two");
    CHECK(query->full_text() == "A Title line one line two");

    CHECK_FALSE(read_topic_query(tmp.path).has_value());
}
