#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ngg/corpus_model.hpp"
#include "ngg/ngram_graph.hpp"
#include "ngg/semantic_index.hpp"
#include "ngg/thesaurus.hpp"

namespace ngg {

// Mean overall similarity between the graph representations of every pair of
// sense descriptors of the two terms. Symmetric; throws NotFoundError when a
// term is missing from the thesaurus.
double relatedness(const std::string& term1, const std::string& term2,
                   const Thesaurus& thesaurus, const GraphParams& params,
                   SenseDescriptor descriptor = SenseDescriptor::Definition);

// Max-over-pairs variant; never below `relatedness` for the same inputs.
double relatedness_max(const std::string& term1, const std::string& term2,
                       const Thesaurus& thesaurus, const GraphParams& params,
                       SenseDescriptor descriptor = SenseDescriptor::Definition);

struct AcceptedSense {
    std::string term;
    std::string sense_id;
    double score = 0.0; // overall similarity of the sense graph to the content
};

// Content model expanded with the query and the senses that pass the filter.
struct ExpandedContent {
    GraphSet content;
    std::vector<AcceptedSense> accepted_senses;
};

// Sense filter + query merge. A sense annotated on a full query token is
// kept iff its descriptor graph intersects the content at some rank and its
// overall similarity to the content exceeds `threshold`. The result is the
// merge of the query graph, the content, and every accepted sense graph, in
// that order. Sense graphs use the content model's own graph parameters.
ExpandedContent expand_query(std::string_view query, const ContentModel& content,
                             const SemanticIndex& index, double threshold,
                             SenseDescriptor descriptor = SenseDescriptor::Definition);

} // namespace ngg
