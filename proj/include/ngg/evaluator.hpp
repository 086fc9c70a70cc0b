#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ngg/ngram_graph.hpp"

namespace ngg {

struct EvalReport {
    std::map<std::string, double> per_model; // model id -> overall similarity
    double mean = 0.0;
    GraphParams params;
};

// Overall graph-set similarity of the peer summary to each model summary,
// plus the arithmetic mean. Models are (id, text) pairs.
EvalReport score_summary(std::string_view peer,
                         const std::vector<std::pair<std::string, std::string>>& models,
                         const GraphParams& params);

} // namespace ngg
