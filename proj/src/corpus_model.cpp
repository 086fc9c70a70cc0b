#include "ngg/corpus_model.hpp"

#include <stdexcept>

#include "ngg/graph_ops.hpp"

namespace ngg {

ContentModel build_content_model(const std::vector<GraphSet>& doc_graphs, ContentMode mode) {
    if (doc_graphs.empty())
        throw std::invalid_argument("build_content_model: no document graphs");

    ContentModel model;
    model.content = doc_graphs.front();
    model.doc_count = static_cast<int>(doc_graphs.size());
    for (std::size_t i = 1; i < doc_graphs.size(); ++i) {
        if (mode == ContentMode::Intersection) {
            model.content = intersect(model.content, doc_graphs[i]);
        } else {
            const double step = static_cast<double>(i + 1); // 1-based document index
            model.content = update(model.content, doc_graphs[i], 1.0 - (step - 1.0) / step);
        }
    }
    return model;
}

NoiseModel build_noise_model(const std::vector<GraphSet>& topic_graphs) {
    if (topic_graphs.size() < 2)
        throw std::invalid_argument("build_noise_model: need at least 2 topic graphs");

    NoiseModel model;
    model.noise = topic_graphs.front();
    model.fold_sizes.push_back(model.noise.total_edges());
    for (std::size_t i = 1; i < topic_graphs.size(); ++i) {
        model.noise = intersect(model.noise, topic_graphs[i]);
        model.fold_sizes.push_back(model.noise.total_edges());
    }
    return model;
}

ContentModel subtract_noise(const ContentModel& content, const NoiseModel& noise) {
    ContentModel out;
    out.content = delta(content.content, noise.noise);
    out.doc_count = content.doc_count;
    out.noise_subtracted = true;
    return out;
}

Classification classify(const GraphSet& doc, const std::map<std::string, ContentModel>& topics) {
    if (topics.empty()) throw std::invalid_argument("classify: no topics");

    Classification result;
    double best = -1.0;
    for (const auto& [id, model] : topics) {
        const double score = overall_similarity(doc, model.content);
        result.scores.emplace(id, score);
        if (score > best) { // strict: earlier (smaller) id wins ties
            best = score;
            result.topic_id = id;
        }
    }
    result.low_confidence = best == 0.0;
    return result;
}

} // namespace ngg
