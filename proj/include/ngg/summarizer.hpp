#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ngg/ngram_graph.hpp"
#include "ngg/sentences.hpp"

namespace ngg {

enum class ScoringMode {
    Sentence, // the whole sentence is the single scored chunk
    Chunk,    // entropy-chunked; salience sums over the chunks
};

enum class RedundancyMode {
    Removal, // drop candidates overlapping a higher-ranked candidate
    Novelty, // iterative rank-difference reranking against the summary
    None,    // plain salience-order selection under the budget
};

enum class ExclusionReason { None, Redundant, OverBudget, Used };

// A source sentence with its graph representation and pipeline verdicts.
struct ScoredSentence {
    Sentence sentence;
    GraphSet graphset;
    std::vector<GraphSet> chunk_graphsets; // populated in chunk scoring mode
    double salience = 0.0;
    double redundancy = 0.0;  // novelty mode: similarity to the summary rest
    int final_rank_score = 0; // novelty mode: rank difference at selection
    bool excluded = false;
    ExclusionReason reason = ExclusionReason::None;
};

// Builds graph representations and salience scores for a batch of sentences.
// Salience is the rank-weighted NVS of each chunk against the content,
// summed over chunks; sentence mode treats the sentence as one chunk.
std::vector<ScoredSentence> score_sentences(const std::vector<Sentence>& sentences,
                                            const GraphSet& content, ScoringMode mode,
                                            const std::set<std::string>& delimiters,
                                            const GraphParams& params);

// Convenience single-sentence form of the same scoring.
double score_sentence(const Sentence& sentence, const GraphSet& content, ScoringMode mode,
                      const std::set<std::string>& delimiters, const GraphParams& params);

// Descending salience; ties in document order (doc id, then index).
void rank_candidates(std::vector<ScoredSentence>& sentences);

struct SelectionResult {
    std::vector<std::size_t> selected; // indices into the ranked list, in selection order
    bool budget_too_small = false;     // nothing fit even though candidates existed
};

// Marks candidates redundant when their overlap (rank-weighted NVS) with any
// higher-ranked non-redundant candidate exceeds the threshold, then selects
// the survivors in rank order. A candidate that would overflow the word
// budget is skipped and the scan continues with shorter ones.
SelectionResult select_redundancy_removal(std::vector<ScoredSentence>& ranked,
                                          double threshold, int word_limit);

// Iterative novelty selection: each round scores every unused candidate by
// its salience rank minus its redundancy rank, where redundancy is the
// overall similarity between candidate-minus-content and summary-minus-
// content. `prior` (e.g. an earlier document set the reader already knows)
// is kept merged into the summary representation.
SelectionResult select_novelty(std::vector<ScoredSentence>& ranked, const GraphSet& content,
                               int word_limit, const GraphSet* prior = nullptr);

// Salience-order selection without redundancy control.
SelectionResult select_plain(std::vector<ScoredSentence>& ranked, int word_limit);

// Joins the selected sentences with single spaces, in selection order.
std::string compose_summary(const std::vector<ScoredSentence>& ranked,
                            const SelectionResult& selection);

} // namespace ngg
