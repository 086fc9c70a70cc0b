#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ngg/ngram_graph.hpp"

namespace ngg {

enum class ContentMode {
    Intersection, // fold of the intersection operator over all documents
    UpdateMean,   // update fold with l = 1 - (i-1)/i, so weights are per-edge means
};

// Common-content representation of a document set.
struct ContentModel {
    GraphSet content;
    int doc_count = 0;
    bool noise_subtracted = false;
};

// Folds the document graph sets in the given order. With UpdateMean every
// resulting edge weight is the mean of that edge's weights over all
// documents, counting missing edges as 0.
ContentModel build_content_model(const std::vector<GraphSet>& doc_graphs, ContentMode mode);

// Cross-topic common subgraph, the stopword-like part shared by all topics.
struct NoiseModel {
    GraphSet noise;
    // Total edge count of the running intersection after each fold step;
    // fold_sizes[0] is the first topic graph on its own.
    std::vector<std::size_t> fold_sizes;
};

// Left fold of the intersection over the topic graphs (order-sensitive:
// weight averaging makes the intersection non-associative).
NoiseModel build_noise_model(const std::vector<GraphSet>& topic_graphs);

ContentModel subtract_noise(const ContentModel& content, const NoiseModel& noise);

struct Classification {
    std::string topic_id;
    std::map<std::string, double> scores;
    bool low_confidence = false; // every topic scored 0
};

// Most similar topic by overall similarity; ties go to the
// lexicographically smallest topic id.
Classification classify(const GraphSet& doc, const std::map<std::string, ContentModel>& topics);

} // namespace ngg
