#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "ngg/ngram_graph.hpp"
#include "support/random_graphs.hpp"

using namespace ngg;
using namespace ngg::testsupport;

TEST_CASE("extract_ngrams basics") {
    const auto grams = extract_ngrams("abcab", 2);
    REQUIRE(grams.size() == 4);
    CHECK(grams[0] == PositionedNGram{"ab", 1});
    CHECK(grams[1] == PositionedNGram{"bc", 2});
    CHECK(grams[2] == PositionedNGram{"ca", 3});
    CHECK(grams[3] == PositionedNGram{"ab", 4});

    CHECK(extract_ngrams("ab", 3).empty());

    const auto unigrams = extract_ngrams("aaa", 1);
    REQUIRE(unigrams.size() == 3);
    CHECK(unigrams[0] == PositionedNGram{"a", 1});
    CHECK(unigrams[2] == PositionedNGram{"a", 3});

    CHECK_THROWS_AS(extract_ngrams("abc", 0), std::invalid_argument);
}

TEST_CASE("extract_ngrams counts code points, not bytes") {
    const auto grams = extract_ngrams("αβγ", 2);
    REQUIRE(grams.size() == 2);
    CHECK(grams[0].text == "αβ");
    CHECK(grams[1].text == "βγ");
}

TEST_CASE("build_graph on worked examples") {
    const NGramGraph g = build_graph("abcab", 2, 2);
    CHECK(g.size() == 5);
    CHECK(g.weight(ek("ab", "bc")) == 1.0);
    CHECK(g.weight(ek("ab", "ca")) == 1.0);
    CHECK(g.weight(ek("bc", "ca")) == 1.0);
    CHECK(g.weight(ek("bc", "ab")) == 1.0);
    CHECK(g.weight(ek("ca", "ab")) == 1.0);

    const NGramGraph loops = build_graph("aaaa", 1, 1);
    CHECK(loops.size() == 1);
    CHECK(loops.weight(ek("a", "a")) == 3.0);

    CHECK(build_graph("", 2, 3).empty());
    CHECK_THROWS_AS(build_graph("abc", 1, 0), std::invalid_argument);
}

TEST_CASE("build_graph matches the brute-force oracle") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const std::string text = random_text(rng);
        for (int rank = 1; rank <= 3; ++rank) {
            for (int window = 1; window <= 3; ++window) {
                const NGramGraph g = build_graph(text, rank, window);
                const auto expected = brute_force_edges(text, rank, window);
                REQUIRE(g.edges() == expected);
            }
        }
    }
}

TEST_CASE("build_graph weight sum has a closed form") {
    // Total weight equals the number of position pairs within the window:
    // sum over i of min(window, count - i).
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const std::string text = random_text(rng);
        const int rank = 1 + static_cast<int>(rng() % 3);
        const int window = 1 + static_cast<int>(rng() % 4);
        const NGramGraph g = build_graph(text, rank, window);

        const long long count =
            std::max<long long>(0, static_cast<long long>(text.size()) - rank + 1);
        const long long d = window;
        long long expected = 0;
        if (count > 0) {
            if (count - 1 >= d)
                expected = d * (count - d) + d * (d - 1) / 2;
            else
                expected = count * (count - 1) / 2;
        }

        double total = 0.0;
        for (const auto& [_, w] : g.edges()) total += w;
        CHECK(total == static_cast<double>(expected));
    }
}

TEST_CASE("build_graph is deterministic and bounded by unique ngrams squared") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const std::string text = random_text(rng);
        const NGramGraph a = build_graph(text, 2, 3);
        const NGramGraph b = build_graph(text, 2, 3);
        CHECK(a == b);

        std::set<std::string> unique;
        for (const auto& gram : extract_ngrams(text, 2)) unique.insert(gram.text);
        CHECK(a.size() <= unique.size() * unique.size());
    }
}

TEST_CASE("duplicate label pairs accumulate onto one edge") {
    NGramGraph g(1, 1);
    g.add_weight("a", "b", 1.0);
    g.add_weight("a", "b", 2.0);
    CHECK(g.size() == 1);
    CHECK(g.weight(ek("a", "b")) == 3.0);
}

TEST_CASE("build_graphset") {
    const GraphSet set = build_graphset("abc", 1, 2, 2);
    CHECK(set.rank_count() == 2);
    CHECK(set.at(1).weight(ek("a", "b")) == 1.0);
    CHECK(set.at(1).weight(ek("a", "c")) == 1.0);
    CHECK(set.at(1).weight(ek("b", "c")) == 1.0);
    CHECK(set.at(1).size() == 3);
    CHECK(set.at(2).size() == 1);
    CHECK(set.at(2).weight(ek("ab", "bc")) == 1.0);

    const GraphSet empties = build_graphset("x", 2, 3, 2);
    CHECK(empties.at(2).empty());
    CHECK(empties.at(3).empty());
    CHECK(empties.empty());

    const GraphSet single = build_graphset("whatever", 3, 3, 3);
    CHECK(single.rank_count() == 1);

    CHECK_THROWS_AS(build_graphset("abc", 3, 2, 1), std::invalid_argument);
}
