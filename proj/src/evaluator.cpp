#include "ngg/evaluator.hpp"

#include <stdexcept>

#include "ngg/graph_ops.hpp"

namespace ngg {

EvalReport score_summary(std::string_view peer,
                         const std::vector<std::pair<std::string, std::string>>& models,
                         const GraphParams& params) {
    if (models.empty()) throw std::invalid_argument("score_summary: no model summaries");

    EvalReport report;
    report.params = params;
    const GraphSet peer_gs = build_graphset(peer, params);
    double sum = 0.0;
    for (const auto& [id, text] : models) {
        const double score = overall_similarity(peer_gs, build_graphset(text, params));
        report.per_model.emplace(id, score);
        sum += score;
    }
    report.mean = sum / static_cast<double>(models.size());
    return report;
}

} // namespace ngg
