#include "ngg/graph_ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace ngg {

namespace {

void require_same_rank(const NGramGraph& g1, const NGramGraph& g2) {
    if (g1.rank() != g2.rank())
        throw std::invalid_argument("graph operation: rank mismatch");
}

void require_same_range(const GraphSet& s1, const GraphSet& s2) {
    if (s1.l_min() != s2.l_min() || s1.l_max() != s2.l_max())
        throw std::invalid_argument("graph-set operation: rank range mismatch");
    if (s1.rank_count() == 0)
        throw std::invalid_argument("graph-set operation: empty rank range");
}

// Sum of VR over the common edge set, visited in sorted key order so the
// floating-point result is identical for both argument orders.
double common_value_ratio_sum(const NGramGraph& g1, const NGramGraph& g2) {
    double sum = 0.0;
    auto it1 = g1.edges().begin();
    auto it2 = g2.edges().begin();
    while (it1 != g1.edges().end() && it2 != g2.edges().end()) {
        if (it1->first < it2->first) {
            ++it1;
        } else if (it2->first < it1->first) {
            ++it2;
        } else {
            sum += value_ratio(it1->second, it2->second);
            ++it1;
            ++it2;
        }
    }
    return sum;
}

template <typename Fn>
GraphSet rankwise(const GraphSet& s1, const GraphSet& s2, Fn&& fn) {
    require_same_range(s1, s2);
    GraphSet out(s1.l_min(), s1.l_max(), s1.window());
    for (int r = s1.l_min(); r <= s1.l_max(); ++r) out.at(r) = fn(s1.at(r), s2.at(r));
    return out;
}

} // namespace

double value_ratio(double w1, double w2) {
    if (w1 < 0.0 || w2 < 0.0)
        throw std::invalid_argument("value_ratio: weights must be non-negative");
    const double hi = std::max(w1, w2);
    if (hi == 0.0) return 0.0;
    return std::min(w1, w2) / hi;
}

double value_similarity(const NGramGraph& g1, const NGramGraph& g2) {
    require_same_rank(g1, g2);
    const std::size_t hi = std::max(g1.size(), g2.size());
    if (hi == 0) return 0.0;
    return common_value_ratio_sum(g1, g2) / static_cast<double>(hi);
}

SimilarityBreakdown normalized_value_similarity(const NGramGraph& g1, const NGramGraph& g2) {
    require_same_rank(g1, g2);
    RankSimilarity r;
    const std::size_t lo = std::min(g1.size(), g2.size());
    const std::size_t hi = std::max(g1.size(), g2.size());
    if (hi == 0) {
        // Two empty graphs: identical in size, no content evidence.
        r = {0.0, 1.0, 0.0};
    } else {
        r.vs = common_value_ratio_sum(g1, g2) / static_cast<double>(hi);
        r.ss = static_cast<double>(lo) / static_cast<double>(hi);
        r.nvs = r.ss > 0.0 ? std::min(r.vs / r.ss, 1.0) : 0.0;
    }
    SimilarityBreakdown out;
    out.vs = r.vs;
    out.ss = r.ss;
    out.nvs = r.nvs;
    out.per_rank.emplace(g1.rank(), r);
    return out;
}

double value_containment(const NGramGraph& g1, const NGramGraph& g2, bool* degenerate) {
    require_same_rank(g1, g2);
    if (degenerate) *degenerate = g1.empty();
    if (g1.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& [key, w1] : g1.edges()) sum += value_ratio(w1, g2.weight(key));
    return sum / static_cast<double>(g1.size());
}

SimilarityBreakdown similarity(const GraphSet& s1, const GraphSet& s2) {
    require_same_range(s1, s2);
    SimilarityBreakdown out;
    double vs_sum = 0.0;
    double ss_sum = 0.0;
    double nvs_sum = 0.0;
    double rank_sum = 0.0;
    for (int r = s1.l_min(); r <= s1.l_max(); ++r) {
        const SimilarityBreakdown one = normalized_value_similarity(s1.at(r), s2.at(r));
        const RankSimilarity rs{one.vs, one.ss, one.nvs};
        out.per_rank.emplace(r, rs);
        vs_sum += r * rs.vs;
        ss_sum += r * rs.ss;
        nvs_sum += r * rs.nvs;
        rank_sum += r;
    }
    out.vs = vs_sum / rank_sum;
    out.ss = ss_sum / rank_sum;
    out.nvs = nvs_sum / rank_sum;
    return out;
}

double overall_similarity(const GraphSet& s1, const GraphSet& s2) {
    require_same_range(s1, s2);
    double vs_sum = 0.0;
    double rank_sum = 0.0;
    for (int r = s1.l_min(); r <= s1.l_max(); ++r) {
        vs_sum += r * value_similarity(s1.at(r), s2.at(r));
        rank_sum += r;
    }
    return vs_sum / rank_sum;
}

double weighted_nvs(const GraphSet& s1, const GraphSet& s2) {
    return similarity(s1, s2).nvs;
}

NGramGraph merge(const NGramGraph& g1, const NGramGraph& g2, MergeWeighting weighting) {
    require_same_rank(g1, g2);
    NGramGraph out(g1.rank(), g1.window());
    for (const auto& [key, w1] : g1.edges()) {
        const double w2 = g2.weight(key);
        out.set_weight(key, weighting == MergeWeighting::Average ? (w1 + w2) / 2.0
                                                                 : std::max(w1, w2));
    }
    for (const auto& [key, w2] : g2.edges()) {
        if (g1.has_edge(key)) continue;
        out.set_weight(key, weighting == MergeWeighting::Average ? w2 / 2.0 : w2);
    }
    return out;
}

NGramGraph intersect(const NGramGraph& g1, const NGramGraph& g2) {
    require_same_rank(g1, g2);
    NGramGraph out(g1.rank(), g1.window());
    for (const auto& [key, w1] : g1.edges()) {
        if (!g2.has_edge(key)) continue;
        out.set_weight(key, (w1 + g2.weight(key)) / 2.0);
    }
    return out;
}

NGramGraph delta(const NGramGraph& g1, const NGramGraph& g2) {
    require_same_rank(g1, g2);
    NGramGraph out(g1.rank(), g1.window());
    for (const auto& [key, w1] : g1.edges()) {
        if (g2.has_edge(key)) continue;
        out.set_weight(key, w1);
    }
    return out;
}

NGramGraph inverse_intersect(const NGramGraph& g1, const NGramGraph& g2) {
    require_same_rank(g1, g2);
    NGramGraph out(g1.rank(), g1.window());
    for (const auto& [key, w1] : g1.edges())
        if (!g2.has_edge(key)) out.set_weight(key, w1);
    for (const auto& [key, w2] : g2.edges())
        if (!g1.has_edge(key)) out.set_weight(key, w2);
    return out;
}

NGramGraph update(const NGramGraph& g1, const NGramGraph& g2, double learning_factor) {
    require_same_rank(g1, g2);
    if (learning_factor < 0.0 || learning_factor > 1.0)
        throw std::invalid_argument("update: learning factor must be in [0, 1]");
    NGramGraph out(g1.rank(), g1.window());
    for (const auto& [key, w1] : g1.edges())
        out.set_weight(key, w1 + (g2.weight(key) - w1) * learning_factor);
    for (const auto& [key, w2] : g2.edges()) {
        if (g1.has_edge(key)) continue;
        out.set_weight(key, w2 * learning_factor);
    }
    return out;
}

GraphSet merge(const GraphSet& s1, const GraphSet& s2, MergeWeighting weighting) {
    return rankwise(s1, s2, [weighting](const NGramGraph& a, const NGramGraph& b) {
        return merge(a, b, weighting);
    });
}

GraphSet intersect(const GraphSet& s1, const GraphSet& s2) {
    return rankwise(s1, s2, [](const NGramGraph& a, const NGramGraph& b) {
        return intersect(a, b);
    });
}

GraphSet delta(const GraphSet& s1, const GraphSet& s2) {
    return rankwise(s1, s2, [](const NGramGraph& a, const NGramGraph& b) {
        return delta(a, b);
    });
}

GraphSet inverse_intersect(const GraphSet& s1, const GraphSet& s2) {
    return rankwise(s1, s2, [](const NGramGraph& a, const NGramGraph& b) {
        return inverse_intersect(a, b);
    });
}

GraphSet update(const GraphSet& s1, const GraphSet& s2, double learning_factor) {
    return rankwise(s1, s2, [learning_factor](const NGramGraph& a, const NGramGraph& b) {
        return update(a, b, learning_factor);
    });
}

} // namespace ngg
