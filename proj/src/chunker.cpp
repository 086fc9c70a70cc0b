#include "ngg/chunker.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ngg/errors.hpp"
#include "ngg/text.hpp"

namespace ngg {

EntropyModel train_entropy(const std::vector<std::string>& corpus, int context_rank) {
    if (context_rank < 1)
        throw std::invalid_argument("train_entropy: context rank must be >= 1");
    if (corpus.empty())
        throw std::invalid_argument("train_entropy: corpus is empty");

    EntropyModel model;
    model.context_rank = context_rank;
    const std::size_t n = static_cast<std::size_t>(context_rank);
    std::size_t total_len = 0;
    for (const std::string& doc : corpus) {
        const std::u32string cps = decode_utf8(doc);
        total_len += cps.size();
        if (cps.size() <= n) continue;
        for (std::size_t i = 0; i + n < cps.size(); ++i) {
            std::string context = encode_utf8(std::u32string_view(cps).substr(i, n));
            std::string follower = encode_utf8(cps[i + n]);
            ++model.frequencies[std::move(context)][std::move(follower)];
        }
    }
    if (total_len <= n)
        throw std::invalid_argument("train_entropy: corpus shorter than the context rank");

    compute_entropies(model);
    return model;
}

void compute_entropies(EntropyModel& model) {
    model.entropies.clear();
    for (const auto& [context, followers] : model.frequencies) {
        double total = 0.0;
        for (const auto& [_, count] : followers) total += static_cast<double>(count);
        double h = 0.0;
        for (const auto& [_, count] : followers) {
            const double p = static_cast<double>(count) / total;
            h -= p * std::log2(p);
        }
        model.entropies[context] = h;
    }
}

ThresholdSelection select_threshold(const EntropyModel& model) {
    const std::size_t m = model.entropies.size();
    if (m < 2)
        throw DegenerateModelError("select_threshold: need at least 2 contexts");

    // (entropy desc, context asc) keeps the ordering deterministic under ties.
    std::vector<std::pair<double, std::string>> ordered;
    ordered.reserve(m);
    for (const auto& [context, h] : model.entropies) ordered.emplace_back(h, context);
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });

    std::vector<double> deltas(m, 0.0);
    for (std::size_t k = 0; k + 1 < m; ++k)
        deltas[k] = std::abs(ordered[k + 1].first - ordered[k].first);

    // Right half: 1-based k > floor(M/2).
    std::size_t best = m / 2;
    for (std::size_t k = m / 2; k < m; ++k)
        if (deltas[k] > deltas[best]) best = k;

    ThresholdSelection sel;
    sel.threshold = ordered[best].first;
    for (const auto& [h, context] : ordered) {
        if (h > sel.threshold) sel.delimiters.insert(context);
    }
    return sel;
}

EntropyModel train_delimiter_model(const std::vector<std::string>& corpus, int context_rank) {
    EntropyModel model = train_entropy(corpus, context_rank);
    ThresholdSelection sel = select_threshold(model);
    model.threshold = sel.threshold;
    model.delimiters = std::move(sel.delimiters);
    return model;
}

std::vector<std::string> chunk(std::string_view sentence,
                               const std::set<std::string>& delimiters) {
    std::vector<std::string> out;
    const std::u32string cps = decode_utf8(sentence);
    if (cps.empty()) return out;

    std::set<std::u32string> dset;
    std::set<std::size_t> lengths;
    for (const std::string& d : delimiters) {
        std::u32string dcp = decode_utf8(d);
        if (dcp.empty()) continue;
        lengths.insert(dcp.size());
        dset.insert(std::move(dcp));
    }

    std::u32string current;
    const std::u32string_view view(cps);
    for (std::size_t i = 0; i < cps.size(); ++i) {
        current.push_back(cps[i]);
        bool cut = false;
        for (std::size_t len : lengths) {
            if (i + 1 < len) continue;
            if (dset.count(std::u32string(view.substr(i + 1 - len, len)))) {
                cut = true;
                break;
            }
        }
        if (cut) {
            out.push_back(encode_utf8(current));
            current.clear();
        }
    }
    if (!current.empty()) out.push_back(encode_utf8(current));
    return out;
}

} // namespace ngg
