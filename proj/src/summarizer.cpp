#include "ngg/summarizer.hpp"

#include <algorithm>
#include <stdexcept>

#include "ngg/chunker.hpp"
#include "ngg/graph_ops.hpp"
#include "ngg/text.hpp"

namespace ngg {

namespace {

bool doc_order_less(const ScoredSentence& a, const ScoredSentence& b) {
    if (a.sentence.doc_id != b.sentence.doc_id) return a.sentence.doc_id < b.sentence.doc_id;
    return a.sentence.index_in_doc < b.sentence.index_in_doc;
}

double chunk_sum_salience(const ScoredSentence& s, const GraphSet& content) {
    if (content.empty()) return 0.0;
    double salience = 0.0;
    for (const GraphSet& chunk_gs : s.chunk_graphsets)
        salience += weighted_nvs(chunk_gs, content);
    return salience;
}

} // namespace

std::vector<ScoredSentence> score_sentences(const std::vector<Sentence>& sentences,
                                            const GraphSet& content, ScoringMode mode,
                                            const std::set<std::string>& delimiters,
                                            const GraphParams& params) {
    std::vector<ScoredSentence> out;
    out.reserve(sentences.size());
    for (const Sentence& sentence : sentences) {
        ScoredSentence scored;
        scored.sentence = sentence;
        scored.graphset = build_graphset(sentence.text, params);
        if (mode == ScoringMode::Chunk) {
            for (const std::string& piece : chunk(sentence.text, delimiters))
                scored.chunk_graphsets.push_back(build_graphset(piece, params));
        } else {
            scored.chunk_graphsets.push_back(scored.graphset);
        }
        scored.salience = chunk_sum_salience(scored, content);
        out.push_back(std::move(scored));
    }
    return out;
}

double score_sentence(const Sentence& sentence, const GraphSet& content, ScoringMode mode,
                      const std::set<std::string>& delimiters, const GraphParams& params) {
    return score_sentences({sentence}, content, mode, delimiters, params).front().salience;
}

void rank_candidates(std::vector<ScoredSentence>& sentences) {
    std::stable_sort(sentences.begin(), sentences.end(),
                     [](const ScoredSentence& a, const ScoredSentence& b) {
                         if (a.salience != b.salience) return a.salience > b.salience;
                         return doc_order_less(a, b);
                     });
}

SelectionResult select_redundancy_removal(std::vector<ScoredSentence>& ranked,
                                          double threshold, int word_limit) {
    if (threshold <= 0.0 || threshold >= 1.0)
        throw std::invalid_argument("select_redundancy_removal: threshold must be in (0, 1)");
    if (word_limit < 1)
        throw std::invalid_argument("select_redundancy_removal: word limit must be >= 1");

    // Mark redundancy over the whole candidate list first; each candidate is
    // compared only against higher-ranked candidates not already marked.
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (ranked[j].excluded) continue;
            const double overlap = weighted_nvs(ranked[i].graphset, ranked[j].graphset);
            if (overlap > threshold) {
                ranked[i].excluded = true;
                ranked[i].reason = ExclusionReason::Redundant;
                break;
            }
        }
    }

    SelectionResult result;
    std::size_t words = 0;
    const std::size_t limit = static_cast<std::size_t>(word_limit);
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        if (ranked[i].excluded) continue;
        const std::size_t wc = word_count(ranked[i].sentence.text);
        if (words + wc > limit) {
            ranked[i].excluded = true;
            ranked[i].reason = ExclusionReason::OverBudget;
            continue;
        }
        ranked[i].excluded = true;
        ranked[i].reason = ExclusionReason::Used;
        result.selected.push_back(i);
        words += wc;
    }
    result.budget_too_small = result.selected.empty() && !ranked.empty();
    return result;
}

namespace {

// Competition rank from the bottom: 1 + number of strictly smaller values,
// so the largest value gets the largest rank and ties share one rank.
int rank_from_bottom(const std::vector<double>& values, double v) {
    int below = 0;
    for (double other : values)
        if (other < v) ++below;
    return 1 + below;
}

} // namespace

SelectionResult select_novelty(std::vector<ScoredSentence>& ranked, const GraphSet& content,
                               int word_limit, const GraphSet* prior) {
    if (word_limit < 1)
        throw std::invalid_argument("select_novelty: word limit must be >= 1");

    SelectionResult result;
    std::size_t words = 0;
    const std::size_t limit = static_cast<std::size_t>(word_limit);
    const GraphParams params = content.params();

    std::string summary_text;
    while (true) {
        std::vector<std::size_t> unused;
        for (std::size_t i = 0; i < ranked.size(); ++i)
            if (!ranked[i].excluded) unused.push_back(i);
        if (unused.empty()) break;

        // Representation of the summary so far, with the prior model kept
        // merged in when one was supplied.
        GraphSet summary_gs = summary_text.empty() ? GraphSet(params.l_min, params.l_max,
                                                              params.window)
                                                   : build_graphset(summary_text, params);
        if (prior) summary_gs = summary_text.empty() ? *prior : merge(summary_gs, *prior);
        const GraphSet summary_rest = delta(summary_gs, content);

        std::vector<double> saliences;
        std::vector<double> redundancies;
        saliences.reserve(unused.size());
        redundancies.reserve(unused.size());
        for (std::size_t i : unused) {
            const GraphSet candidate_rest = delta(ranked[i].graphset, content);
            ranked[i].redundancy = overall_similarity(candidate_rest, summary_rest);
            saliences.push_back(ranked[i].salience);
            redundancies.push_back(ranked[i].redundancy);
        }

        std::size_t best = unused.size();
        int best_score = 0;
        for (std::size_t k = 0; k < unused.size(); ++k) {
            ScoredSentence& cand = ranked[unused[k]];
            const int r_sim = rank_from_bottom(saliences, cand.salience);
            const int r_red = rank_from_bottom(redundancies, cand.redundancy);
            cand.final_rank_score = r_sim - r_red;
            const bool better =
                best == unused.size() || cand.final_rank_score > best_score ||
                (cand.final_rank_score == best_score &&
                 (cand.salience > ranked[unused[best]].salience ||
                  (cand.salience == ranked[unused[best]].salience &&
                   doc_order_less(cand, ranked[unused[best]]))));
            if (better) {
                best = k;
                best_score = cand.final_rank_score;
            }
        }

        ScoredSentence& pick = ranked[unused[best]];
        const std::size_t wc = word_count(pick.sentence.text);
        if (words + wc > limit) {
            pick.excluded = true;
            pick.reason = ExclusionReason::OverBudget;
            continue;
        }
        pick.excluded = true;
        pick.reason = ExclusionReason::Used;
        result.selected.push_back(unused[best]);
        words += wc;
        if (!summary_text.empty()) summary_text += ' ';
        summary_text += pick.sentence.text;
    }
    result.budget_too_small = result.selected.empty() && !ranked.empty();
    return result;
}

SelectionResult select_plain(std::vector<ScoredSentence>& ranked, int word_limit) {
    if (word_limit < 1)
        throw std::invalid_argument("select_plain: word limit must be >= 1");
    SelectionResult result;
    std::size_t words = 0;
    const std::size_t limit = static_cast<std::size_t>(word_limit);
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        const std::size_t wc = word_count(ranked[i].sentence.text);
        if (words + wc > limit) {
            ranked[i].excluded = true;
            ranked[i].reason = ExclusionReason::OverBudget;
            continue;
        }
        ranked[i].excluded = true;
        ranked[i].reason = ExclusionReason::Used;
        result.selected.push_back(i);
        words += wc;
    }
    result.budget_too_small = result.selected.empty() && !ranked.empty();
    return result;
}

std::string compose_summary(const std::vector<ScoredSentence>& ranked,
                            const SelectionResult& selection) {
    std::string out;
    for (std::size_t idx : selection.selected) {
        if (!out.empty()) out += ' ';
        out += ranked[idx].sentence.text;
    }
    return out;
}

} // namespace ngg
