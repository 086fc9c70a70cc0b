#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ngg {

// Next-character statistics learned from a corpus: for every context n-gram,
// the frequency of each code point observed right after it, the entropy of
// that distribution, and the derived delimiter set.
struct EntropyModel {
    int context_rank = 1;
    // context n-gram -> follower code point (UTF-8) -> count
    std::map<std::string, std::map<std::string, std::uint64_t>> frequencies;
    std::map<std::string, double> entropies; // bits
    double threshold = 0.0;
    std::set<std::string> delimiters;
};

// Accumulates next-character frequencies per document (never across document
// boundaries) and computes per-context entropies. Contexts that only occur
// at the end of a document get no entry.
EntropyModel train_entropy(const std::vector<std::string>& corpus, int context_rank = 1);

// Recomputes model.entropies from model.frequencies.
void compute_entropies(EntropyModel& model);

struct ThresholdSelection {
    double threshold = 0.0;
    std::set<std::string> delimiters;
};

// Sorts contexts by entropy descending as H_1..H_M, takes the entropy deltas
// D(k) = |H_{k+1} - H_k| (D(M) = 0), and picks the threshold at the largest
// delta in the right half (k > floor(M/2), ties to the smallest k).
// Delimiters are the contexts with entropy strictly above the threshold.
ThresholdSelection select_threshold(const EntropyModel& model);

// train_entropy + select_threshold, with the results stored on the model.
EntropyModel train_delimiter_model(const std::vector<std::string>& corpus,
                                   int context_rank = 1);

// Splits after every occurrence of a delimiter; the delimiter stays attached
// to the preceding chunk, so the chunks concatenate back to the sentence.
std::vector<std::string> chunk(std::string_view sentence,
                               const std::set<std::string>& delimiters);

} // namespace ngg
