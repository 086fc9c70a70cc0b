#include "ngg/query_expansion.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ngg/errors.hpp"
#include "ngg/graph_ops.hpp"

namespace ngg {

namespace {

std::vector<GraphSet> descriptor_graphs(const std::string& term, const Thesaurus& thesaurus,
                                        const GraphParams& params, SenseDescriptor descriptor) {
    const auto* senses = thesaurus.find(term);
    if (!senses) throw NotFoundError("relatedness: unknown term '" + term + "'");
    std::vector<GraphSet> graphs;
    graphs.reserve(senses->size());
    for (const Sense& sense : *senses)
        graphs.push_back(build_graphset(sense_descriptor(sense, descriptor), params));
    return graphs;
}

} // namespace

double relatedness(const std::string& term1, const std::string& term2,
                   const Thesaurus& thesaurus, const GraphParams& params,
                   SenseDescriptor descriptor) {
    const auto graphs1 = descriptor_graphs(term1, thesaurus, params, descriptor);
    const auto graphs2 = descriptor_graphs(term2, thesaurus, params, descriptor);
    double sum = 0.0;
    for (const GraphSet& g1 : graphs1)
        for (const GraphSet& g2 : graphs2) sum += overall_similarity(g1, g2);
    return sum / (static_cast<double>(graphs1.size()) * static_cast<double>(graphs2.size()));
}

double relatedness_max(const std::string& term1, const std::string& term2,
                       const Thesaurus& thesaurus, const GraphParams& params,
                       SenseDescriptor descriptor) {
    const auto graphs1 = descriptor_graphs(term1, thesaurus, params, descriptor);
    const auto graphs2 = descriptor_graphs(term2, thesaurus, params, descriptor);
    double best = 0.0;
    for (const GraphSet& g1 : graphs1)
        for (const GraphSet& g2 : graphs2)
            best = std::max(best, overall_similarity(g1, g2));
    return best;
}

ExpandedContent expand_query(std::string_view query, const ContentModel& content,
                             const SemanticIndex& index, double threshold,
                             SenseDescriptor descriptor) {
    if (threshold < 0.0 || threshold >= 1.0)
        throw std::invalid_argument("expand_query: threshold must be in [0, 1)");

    const GraphParams params = content.content.params();

    // Candidate senses come from vertices matching full query tokens,
    // deduplicated by (term, sense id).
    std::map<std::pair<std::string, std::string>, const SenseAnnotation*> candidates;
    for (const auto& [text, vertex] : index.vertices) {
        if (!vertex.is_token) continue;
        for (const SenseAnnotation& ann : vertex.senses)
            candidates.emplace(std::make_pair(ann.term, ann.sense.id), &ann);
    }

    ExpandedContent out;
    GraphSet expanded = merge(build_graphset(query, params), content.content);
    for (const auto& [key, ann] : candidates) {
        const GraphSet sense_graph =
            build_graphset(sense_descriptor(ann->sense, descriptor), params);
        if (intersect(sense_graph, content.content).empty()) continue;
        const double score = overall_similarity(sense_graph, content.content);
        if (score > threshold) {
            expanded = merge(expanded, sense_graph);
            out.accepted_senses.push_back({key.first, key.second, score});
        }
    }
    out.content = std::move(expanded);
    return out;
}

} // namespace ngg
