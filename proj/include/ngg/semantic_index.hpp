#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ngg/thesaurus.hpp"

namespace ngg {

// A sense attached to an index vertex, either by direct thesaurus lookup
// (distance 0) or inherited from the nearest annotated substring.
struct SenseAnnotation {
    std::string term; // thesaurus headword the sense belongs to
    Sense sense;
    int distance = 0;
};

struct IndexVertex {
    std::string text;
    std::vector<SenseAnnotation> senses;
    bool is_token = false; // vertex equals a full query token
};

// Substring graph over the query's tokens: vertices are all code-point
// substrings of length >= min_len, edges connect each string to the
// one-character-longer strings that contain it, so path length equals the
// length difference. Vertices without a direct thesaurus match inherit the
// senses of their nearest (longest) directly annotated substrings.
struct SemanticIndex {
    std::map<std::string, IndexVertex> vertices;
    std::vector<std::pair<std::string, std::string>> edges; // substring -> superstring
    int min_len = 3;

    const IndexVertex* find(const std::string& text) const {
        auto it = vertices.find(text);
        return it == vertices.end() ? nullptr : &it->second;
    }
};

SemanticIndex build_semantic_index(std::string_view query, const Thesaurus& thesaurus,
                                   int min_len = 3);

// Whitespace tokenization used by the index.
std::vector<std::string> query_tokens(std::string_view query);

} // namespace ngg
