#include "ngg/semantic_index.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ngg/text.hpp"

namespace ngg {

std::vector<std::string> query_tokens(std::string_view query) {
    std::vector<std::string> tokens;
    const std::u32string cps = decode_utf8(query);
    std::u32string current;
    for (char32_t cp : cps) {
        if (is_space(cp)) {
            if (!current.empty()) {
                tokens.push_back(encode_utf8(current));
                current.clear();
            }
        } else {
            current.push_back(cp);
        }
    }
    if (!current.empty()) tokens.push_back(encode_utf8(current));
    return tokens;
}

SemanticIndex build_semantic_index(std::string_view query, const Thesaurus& thesaurus,
                                   int min_len) {
    if (query.empty()) throw std::invalid_argument("build_semantic_index: empty query");
    if (min_len < 1) throw std::invalid_argument("build_semantic_index: min_len must be >= 1");

    SemanticIndex index;
    index.min_len = min_len;

    const std::size_t min_cp = static_cast<std::size_t>(min_len);
    std::set<std::u32string> substrings;
    std::set<std::u32string> token_set;
    for (const std::string& token : query_tokens(query)) {
        const std::u32string cps = decode_utf8(token);
        if (cps.size() >= min_cp) token_set.insert(cps);
        for (std::size_t len = min_cp; len <= cps.size(); ++len)
            for (std::size_t i = 0; i + len <= cps.size(); ++i)
                substrings.insert(cps.substr(i, len));
    }

    for (const std::u32string& cps : substrings) {
        IndexVertex vertex;
        vertex.text = encode_utf8(cps);
        vertex.is_token = token_set.count(cps) != 0;
        if (const auto* senses = thesaurus.find(vertex.text)) {
            for (const Sense& sense : *senses)
                vertex.senses.push_back({vertex.text, sense, 0});
        }
        index.vertices.emplace(vertex.text, std::move(vertex));
    }

    // One-character extensions; the substring closure is reachable by paths.
    for (const std::u32string& u : substrings) {
        for (const std::u32string& v : substrings) {
            if (v.size() != u.size() + 1) continue;
            if (v.find(u) != std::u32string::npos)
                index.edges.emplace_back(encode_utf8(u), encode_utf8(v));
        }
    }

    // Inheritance: an unannotated vertex takes the senses of its longest
    // directly annotated substrings (smallest path distance).
    std::vector<std::u32string> ordered(substrings.begin(), substrings.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::set<std::u32string> direct;
    for (const std::u32string& cps : ordered) {
        if (!index.vertices.at(encode_utf8(cps)).senses.empty()) direct.insert(cps);
    }
    for (const std::u32string& cps : ordered) {
        IndexVertex& vertex = index.vertices.at(encode_utf8(cps));
        if (!vertex.senses.empty()) continue;
        for (std::size_t len = cps.size(); len-- > min_cp && vertex.senses.empty();) {
            std::set<std::u32string> sources;
            for (std::size_t i = 0; i + len <= cps.size(); ++i) {
                std::u32string sub = cps.substr(i, len);
                if (direct.count(sub)) sources.insert(std::move(sub));
            }
            const int distance = static_cast<int>(cps.size() - len);
            for (const std::u32string& src : sources) {
                const IndexVertex& from = index.vertices.at(encode_utf8(src));
                for (const SenseAnnotation& ann : from.senses)
                    vertex.senses.push_back({ann.term, ann.sense, distance});
            }
        }
    }
    return index;
}

} // namespace ngg
