#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ngg {

// N-gram rank range and co-occurrence window shared across a whole run.
struct GraphParams {
    int l_min = 3;
    int l_max = 3;
    int window = 3;

    friend bool operator==(const GraphParams&, const GraphParams&) = default;
};

// One character n-gram with its 1-based start offset (in code points).
struct PositionedNGram {
    std::string text;
    std::size_t position = 0;

    friend bool operator==(const PositionedNGram&, const PositionedNGram&) = default;
};

// Edge identity is the ordered (source, target) label pair.
using EdgeKey = std::pair<std::string, std::string>;
using EdgeMap = std::map<EdgeKey, double>;

// Weighted directed graph over character n-grams of a single rank.
// Edges record co-occurrence within `window` positions; after operator
// application weights may be fractional, and zero-weight edges are kept
// and treated like any other edge.
class NGramGraph {
public:
    NGramGraph() = default;
    NGramGraph(int rank, int window) : rank_(rank), window_(window) {}

    int rank() const noexcept { return rank_; }
    int window() const noexcept { return window_; }

    // |G| is the edge count.
    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }

    bool has_edge(const EdgeKey& key) const { return edges_.count(key) != 0; }

    // Weight of an edge, 0 for edges not in the graph.
    double weight(const EdgeKey& key) const {
        auto it = edges_.find(key);
        return it == edges_.end() ? 0.0 : it->second;
    }

    // Inserts the edge or accumulates onto the existing weight; a duplicate
    // label pair never creates a second edge.
    void add_weight(const EdgeKey& key, double w) { edges_[key] += w; }
    void add_weight(std::string source, std::string target, double w) {
        edges_[EdgeKey(std::move(source), std::move(target))] += w;
    }

    void set_weight(const EdgeKey& key, double w) { edges_[key] = w; }

    const EdgeMap& edges() const noexcept { return edges_; }

    friend bool operator==(const NGramGraph&, const NGramGraph&) = default;

private:
    int rank_ = 1;
    int window_ = 1;
    EdgeMap edges_;
};

// One NGramGraph per rank over a contiguous rank range; all ranks share
// the same window.
class GraphSet {
public:
    GraphSet() = default;
    GraphSet(int l_min, int l_max, int window);

    int l_min() const noexcept { return l_min_; }
    int l_max() const noexcept { return l_max_; }
    int window() const noexcept { return window_; }
    GraphParams params() const noexcept { return {l_min_, l_max_, window_}; }

    std::size_t rank_count() const noexcept { return graphs_.size(); }
    const NGramGraph& at(int rank) const;
    NGramGraph& at(int rank);

    const std::vector<NGramGraph>& graphs() const noexcept { return graphs_; }
    std::vector<NGramGraph>& graphs() noexcept { return graphs_; }

    std::size_t total_edges() const noexcept;
    // True when every rank's graph is empty.
    bool empty() const noexcept;

    friend bool operator==(const GraphSet&, const GraphSet&) = default;

private:
    int l_min_ = 1;
    int l_max_ = 0; // default set is rankless
    int window_ = 1;
    std::vector<NGramGraph> graphs_;
};

// All overlapping rank-length n-grams of `text`, in order, with 1-based
// start positions. Empty when the text is shorter than the rank.
std::vector<PositionedNGram> extract_ngrams(std::string_view text, int rank);

// Builds the rank-`rank` n-gram graph of `text`: an edge source->target for
// every ordered position pair (p, q) with 0 < q - p <= window, weighted by
// the number of such co-occurring pairs.
NGramGraph build_graph(std::string_view text, int rank, int window);

GraphSet build_graphset(std::string_view text, int l_min, int l_max, int window);
GraphSet build_graphset(std::string_view text, const GraphParams& params);

} // namespace ngg
