#pragma once

#include <map>

#include "ngg/ngram_graph.hpp"

namespace ngg {

// min/max ratio of two edge weights; 0 when both are 0 (a zero-weight edge
// matched against a missing edge carries no evidence).
double value_ratio(double w1, double w2);

// VS: sum of value ratios over shared edges divided by max(|g1|, |g2|).
// Symmetric, 1 for identical graphs, 0 against the empty graph.
double value_similarity(const NGramGraph& g1, const NGramGraph& g2);

struct RankSimilarity {
    double vs = 0.0;
    double ss = 1.0;
    double nvs = 0.0;
};

// vs/ss/nvs for a pair of graphs or, rank by rank, a pair of graph sets.
// At set level the top-level fields are the rank-weighted aggregates
// (weight r for rank r), so `vs` equals the overall similarity.
struct SimilarityBreakdown {
    double vs = 0.0;
    double ss = 1.0;
    double nvs = 0.0;
    std::map<int, RankSimilarity> per_rank;
};

// NVS = VS / SS with SS = min(|g1|,|g2|) / max(|g1|,|g2|). Two empty graphs
// give vs=0, ss=1, nvs=0; one empty graph gives vs=ss=nvs=0.
SimilarityBreakdown normalized_value_similarity(const NGramGraph& g1, const NGramGraph& g2);

// VC: sum of value ratios over g1's edges divided by |g1|. Asymmetric.
// An empty g1 returns 0 and raises the degenerate flag when provided.
double value_containment(const NGramGraph& g1, const NGramGraph& g2,
                         bool* degenerate = nullptr);

// Rank-weighted VS over a shared rank range: sum(r * VS_r) / sum(r).
double overall_similarity(const GraphSet& s1, const GraphSet& s2);

SimilarityBreakdown similarity(const GraphSet& s1, const GraphSet& s2);

// Rank-weighted NVS, the overlap measure used for salience and redundancy.
double weighted_nvs(const GraphSet& s1, const GraphSet& s2);

enum class MergeWeighting {
    Average, // default: result weight is the mean of the operand weights
    Maximum, // fuzzy-logic alternative: keep the larger weight
};

// Union of the edge sets. With Average weighting every result edge gets
// (w1 + w2) / 2 where a missing edge counts as 0, so an edge unique to one
// operand enters at half weight.
NGramGraph merge(const NGramGraph& g1, const NGramGraph& g2,
                 MergeWeighting weighting = MergeWeighting::Average);

// Common edges only, with averaged weights.
NGramGraph intersect(const NGramGraph& g1, const NGramGraph& g2);

// Edges of g1 absent from g2, weights unchanged. Not commutative.
NGramGraph delta(const NGramGraph& g1, const NGramGraph& g2);

// Symmetric difference of the edge sets; each edge keeps the weight from
// whichever operand holds it.
NGramGraph inverse_intersect(const NGramGraph& g1, const NGramGraph& g2);

// Union of the edge sets with w = w1 + (w2 - w1) * l, missing edges
// counting as 0. l=0 keeps g1's weights (g2-only edges enter at weight 0,
// and zero-weight edges are kept), l=1 adopts g2's, l=0.5 equals merge.
NGramGraph update(const NGramGraph& g1, const NGramGraph& g2, double learning_factor);

// Rank-wise variants over graph sets with identical rank ranges.
GraphSet merge(const GraphSet& s1, const GraphSet& s2,
               MergeWeighting weighting = MergeWeighting::Average);
GraphSet intersect(const GraphSet& s1, const GraphSet& s2);
GraphSet delta(const GraphSet& s1, const GraphSet& s2);
GraphSet inverse_intersect(const GraphSet& s1, const GraphSet& s2);
GraphSet update(const GraphSet& s1, const GraphSet& s2, double learning_factor);

} // namespace ngg
