#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ngg/corpus_model.hpp"
#include "ngg/graph_ops.hpp"
#include "support/pseudo_english.hpp"
#include "support/random_graphs.hpp"

using namespace ngg;
using namespace ngg::testsupport;

namespace {

GraphSet single_rank(const NGramGraph& g) {
    GraphSet set(g.rank(), g.rank(), g.window());
    set.at(g.rank()) = g;
    return set;
}

} // namespace

TEST_CASE("update-mean content model runs the mean schedule") {
    const std::vector<GraphSet> docs = {
        single_rank(make_graph(1, 1, {{ek("e", "1"), 2.0}})),
        single_rank(make_graph(1, 1, {{ek("e", "1"), 4.0}})),
        single_rank(make_graph(1, 1, {{ek("e", "1"), 6.0}})),
    };
    const ContentModel model = build_content_model(docs, ContentMode::UpdateMean);
    CHECK(model.doc_count == 3);
    CHECK_FALSE(model.noise_subtracted);
    CHECK(model.content.at(1).weight(ek("e", "1")) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("intersection content model") {
    const GraphSet only = single_rank(make_graph(1, 1, {{ek("a", "b"), 3.0}}));
    CHECK(build_content_model({only}, ContentMode::Intersection).content == only);

    const GraphSet other = single_rank(make_graph(1, 1, {{ek("x", "y"), 3.0}}));
    CHECK(build_content_model({only, other}, ContentMode::Intersection).content.empty());

    CHECK_THROWS_AS(build_content_model({}, ContentMode::Intersection), std::invalid_argument);
}

TEST_CASE("update-mean equals the brute-force per-edge mean") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 12);
        std::vector<GraphSet> docs;
        std::vector<NGramGraph> flat;
        for (int i = 0; i < k; ++i) {
            const NGramGraph g = random_graph(rng);
            docs.push_back(single_rank(g));
            flat.push_back(g);
        }
        const ContentModel model = build_content_model(docs, ContentMode::UpdateMean);
        const auto expected = brute_force_mean(flat);
        REQUIRE(model.content.at(1).size() == expected.size());
        for (const auto& [key, mean] : expected)
            CHECK(model.content.at(1).weight(key) == doctest::Approx(mean).epsilon(1e-9));
    }
}

TEST_CASE("noise model folds intersections and records sizes") {
    const GraphSet t1 = single_rank(make_graph(1, 1, {{ek("e", "1"), 1.0}, {ek("e", "2"), 1.0}}));
    const GraphSet t2 = single_rank(make_graph(1, 1, {{ek("e", "1"), 3.0}, {ek("e", "3"), 1.0}}));
    const GraphSet t3 = single_rank(make_graph(1, 1, {{ek("e", "1"), 5.0}}));

    const NoiseModel noise = build_noise_model({t1, t2, t3});
    CHECK(noise.noise.at(1).size() == 1);
    CHECK(noise.noise.at(1).weight(ek("e", "1")) == 3.5);
    CHECK(noise.fold_sizes == std::vector<std::size_t>{2, 1, 1});

    const GraphSet d1 = single_rank(make_graph(1, 1, {{ek("a", "b"), 1.0}}));
    const GraphSet d2 = single_rank(make_graph(1, 1, {{ek("x", "y"), 1.0}}));
    CHECK(build_noise_model({d1, d2}).noise.empty());

    CHECK(build_noise_model({t1, t1}).noise == t1);

    CHECK_THROWS_AS(build_noise_model({t1}), std::invalid_argument);
}

TEST_CASE("noise fold sizes never increase") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<GraphSet> topics;
        const int k = 2 + static_cast<int>(rng() % 6);
        for (int i = 0; i < k; ++i) topics.push_back(single_rank(random_graph(rng, 1, 12)));
        const NoiseModel noise = build_noise_model(topics);
        for (std::size_t i = 1; i < noise.fold_sizes.size(); ++i)
            CHECK(noise.fold_sizes[i] <= noise.fold_sizes[i - 1]);
        // The noise edge set is contained in every contributing topic.
        for (const GraphSet& topic : topics)
            for (const auto& [key, _] : noise.noise.at(1).edges())
                CHECK(topic.at(1).has_edge(key));
    }
}

TEST_CASE("subtract_noise applies delta per rank") {
    ContentModel content;
    content.content = single_rank(make_graph(1, 1, {{ek("e", "1"), 2.0}, {ek("e", "2"), 1.0}}));
    content.doc_count = 4;

    NoiseModel empty_noise;
    empty_noise.noise = GraphSet(1, 1, 1);
    const ContentModel same = subtract_noise(content, empty_noise);
    CHECK(same.content == content.content);
    CHECK(same.noise_subtracted);
    CHECK(same.doc_count == 4);

    NoiseModel all;
    all.noise = content.content;
    CHECK(subtract_noise(content, all).content.empty());

    NoiseModel partial;
    partial.noise = single_rank(make_graph(1, 1, {{ek("e", "1"), 9.0}}));
    const ContentModel cut = subtract_noise(content, partial);
    CHECK(cut.content.at(1).size() == 1);
    CHECK(cut.content.at(1).weight(ek("e", "2")) == 1.0);
}

TEST_CASE("classify picks the most similar topic deterministically") {
    const GraphSet doc = single_rank(make_graph(1, 1, {{ek("a", "b"), 1.0}}));
    std::map<std::string, ContentModel> topics;
    topics["t1"].content = doc;
    topics["t2"].content = single_rank(make_graph(1, 1, {{ek("x", "y"), 1.0}}));

    const Classification verdict = classify(doc, topics);
    CHECK(verdict.topic_id == "t1");
    CHECK(verdict.scores.at("t1") == 1.0);
    CHECK(verdict.scores.at("t2") == 0.0);
    CHECK_FALSE(verdict.low_confidence);

    // All-zero scores: the lexicographically smallest id wins, flagged.
    const GraphSet stranger = single_rank(make_graph(1, 1, {{ek("q", "q"), 1.0}}));
    std::map<std::string, ContentModel> zeros;
    zeros["beta"].content = single_rank(make_graph(1, 1, {{ek("m", "n"), 1.0}}));
    zeros["alfa"].content = single_rank(make_graph(1, 1, {{ek("o", "p"), 1.0}}));
    const Classification fallback = classify(stranger, zeros);
    CHECK(fallback.topic_id == "alfa");
    CHECK(fallback.low_confidence);

    CHECK_THROWS_AS(classify(doc, {}), std::invalid_argument);
}

TEST_CASE("synthetic topics classify back to their own topic") {
    const GraphParams params{3, 3, 3};
    const SyntheticTopics corpus = make_synthetic_topics(99, 3, 6, 60);

    std::map<std::string, ContentModel> topics;
    std::vector<GraphSet> topic_graphs;
    for (std::size_t t = 0; t < corpus.docs_per_topic.size(); ++t) {
        std::vector<GraphSet> docs;
        for (const std::string& text : corpus.docs_per_topic[t])
            docs.push_back(build_graphset(text, params));
        ContentModel model = build_content_model(docs, ContentMode::UpdateMean);
        topic_graphs.push_back(model.content);
        topics.emplace("topic" + std::to_string(t), std::move(model));
    }

    const NoiseModel noise = build_noise_model(topic_graphs);
    std::map<std::string, ContentModel> denoised;
    for (const auto& [id, model] : topics) denoised.emplace(id, subtract_noise(model, noise));

    int correct = 0;
    int total = 0;
    for (std::size_t t = 0; t < corpus.docs_per_topic.size(); ++t) {
        for (const std::string& text : corpus.docs_per_topic[t]) {
            const GraphSet doc = build_graphset(text, params);
            if (classify(doc, denoised).topic_id == "topic" + std::to_string(t)) ++correct;
            ++total;
        }
    }
    CHECK(static_cast<double>(correct) / total >= 0.9);
}
