#include "ngg/ngram_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "ngg/text.hpp"

namespace ngg {

GraphSet::GraphSet(int l_min, int l_max, int window)
    : l_min_(l_min), l_max_(l_max), window_(window) {
    if (l_min < 1 || l_min > l_max)
        throw std::invalid_argument("GraphSet: need 1 <= l_min <= l_max");
    if (window < 1) throw std::invalid_argument("GraphSet: window must be >= 1");
    graphs_.reserve(static_cast<std::size_t>(l_max - l_min + 1));
    for (int r = l_min; r <= l_max; ++r) graphs_.emplace_back(r, window);
}

const NGramGraph& GraphSet::at(int rank) const {
    if (rank < l_min_ || rank > l_max_)
        throw std::out_of_range("GraphSet: rank outside [l_min, l_max]");
    return graphs_[static_cast<std::size_t>(rank - l_min_)];
}

NGramGraph& GraphSet::at(int rank) {
    if (rank < l_min_ || rank > l_max_)
        throw std::out_of_range("GraphSet: rank outside [l_min, l_max]");
    return graphs_[static_cast<std::size_t>(rank - l_min_)];
}

std::size_t GraphSet::total_edges() const noexcept {
    std::size_t total = 0;
    for (const auto& g : graphs_) total += g.size();
    return total;
}

bool GraphSet::empty() const noexcept {
    return std::all_of(graphs_.begin(), graphs_.end(),
                       [](const NGramGraph& g) { return g.empty(); });
}

std::vector<PositionedNGram> extract_ngrams(std::string_view text, int rank) {
    if (rank < 1) throw std::invalid_argument("extract_ngrams: rank must be >= 1");
    const std::u32string cps = decode_utf8(text);
    std::vector<PositionedNGram> out;
    const std::size_t n = static_cast<std::size_t>(rank);
    if (cps.size() < n) return out;
    out.reserve(cps.size() - n + 1);
    for (std::size_t i = 0; i + n <= cps.size(); ++i) {
        out.push_back({encode_utf8(std::u32string_view(cps).substr(i, n)), i + 1});
    }
    return out;
}

NGramGraph build_graph(std::string_view text, int rank, int window) {
    if (rank < 1) throw std::invalid_argument("build_graph: rank must be >= 1");
    if (window < 1) throw std::invalid_argument("build_graph: window must be >= 1");
    NGramGraph graph(rank, window);
    const std::u32string cps = decode_utf8(text);
    const std::size_t n = static_cast<std::size_t>(rank);
    if (cps.size() < n) return graph;

    const std::size_t count = cps.size() - n + 1;
    std::vector<std::string> labels;
    labels.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        labels.push_back(encode_utf8(std::u32string_view(cps).substr(i, n)));

    const std::size_t w = static_cast<std::size_t>(window);
    for (std::size_t p = 0; p < count; ++p) {
        const std::size_t hi = std::min(count - 1, p + w);
        for (std::size_t q = p + 1; q <= hi; ++q)
            graph.add_weight(labels[p], labels[q], 1.0);
    }
    return graph;
}

GraphSet build_graphset(std::string_view text, int l_min, int l_max, int window) {
    if (l_min < 1 || l_min > l_max)
        throw std::invalid_argument("build_graphset: need 1 <= l_min <= l_max");
    GraphSet set(l_min, l_max, window);
    for (int r = l_min; r <= l_max; ++r) set.at(r) = build_graph(text, r, window);
    return set;
}

GraphSet build_graphset(std::string_view text, const GraphParams& params) {
    return build_graphset(text, params.l_min, params.l_max, params.window);
}

} // namespace ngg
