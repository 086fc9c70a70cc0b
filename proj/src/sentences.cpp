#include "ngg/sentences.hpp"

#include <algorithm>
#include <set>

#include "ngg/text.hpp"

namespace ngg {

namespace {

bool is_terminal(char32_t cp) { return cp == U'.' || cp == U'!' || cp == U'?'; }

bool is_upper(char32_t cp) {
    if (cp >= U'A' && cp <= U'Z') return true;
    // Latin-1 uppercase block, skipping the multiplication sign.
    return cp >= 0xC0 && cp <= 0xDE && cp != 0xD7;
}

char32_t to_lower_ascii(char32_t cp) {
    return (cp >= U'A' && cp <= U'Z') ? cp + 32 : cp;
}

bool is_word_char(char32_t cp) {
    return !is_space(cp) && !is_terminal(cp) && cp != U',' && cp != U';' && cp != U':' &&
           cp != U'(' && cp != U')' && cp != U'"' && cp != U'\'';
}

// Token immediately before position `pos` (exclusive), lowered, including
// any internal periods so "e.g." style abbreviations survive intact.
std::u32string preceding_token(const std::u32string& cps, std::size_t pos) {
    std::size_t end = pos;
    std::size_t begin = end;
    while (begin > 0 && (is_word_char(cps[begin - 1]) || cps[begin - 1] == U'.')) --begin;
    std::u32string token;
    for (std::size_t i = begin; i < end; ++i) token.push_back(to_lower_ascii(cps[i]));
    while (!token.empty() && token.front() == U'.') token.erase(token.begin());
    return token;
}

} // namespace

const std::vector<std::string>& default_abbreviations() {
    static const std::vector<std::string> abbreviations = {
        "mr",   "mrs",  "ms",   "dr",   "prof", "rev",  "gen",  "sen",  "rep",
        "sr",   "jr",   "st",   "mt",   "ft",   "capt", "col",  "lt",   "sgt",
        "etc",  "vs",   "inc",  "ltd",  "co",   "corp", "dept", "univ", "assn",
        "fig",  "no",   "vol",  "pp",   "approx", "est",
        "e.g",  "i.e",  "cf",   "al",   "u.s",  "u.k",  "u.n",
        "jan",  "feb",  "mar",  "apr",  "jun",  "jul",  "aug",  "sep",  "sept",
        "oct",  "nov",  "dec",
    };
    return abbreviations;
}

std::vector<Sentence> split_sentences(std::string_view document, std::string_view doc_id,
                                      const std::vector<std::string>& abbreviations) {
    std::set<std::u32string> guard;
    for (const std::string& a : abbreviations) guard.insert(decode_utf8(a));

    const std::u32string cps = decode_utf8(document);
    std::vector<Sentence> sentences;
    std::string doc(doc_id);

    std::u32string current;
    auto flush = [&] {
        std::string text = trim(encode_utf8(current));
        current.clear();
        if (text.empty()) return;
        Sentence s;
        s.text = std::move(text);
        s.doc_id = doc;
        s.index_in_doc = static_cast<int>(sentences.size());
        sentences.push_back(std::move(s));
    };

    for (std::size_t i = 0; i < cps.size(); ++i) {
        current.push_back(cps[i]);
        if (!is_terminal(cps[i])) continue;

        // Look past the punctuation: boundary at end of text or before an
        // uppercase sentence opener.
        std::size_t j = i + 1;
        while (j < cps.size() && is_space(cps[j])) ++j;
        const bool at_end = j == cps.size();
        const bool upper_next = !at_end && j > i + 1 && is_upper(cps[j]);
        if (!at_end && !upper_next) continue;

        if (cps[i] == U'.') {
            const std::u32string token = preceding_token(cps, i);
            if (guard.count(token)) continue;
        }
        flush();
    }
    flush();
    return sentences;
}

} // namespace ngg
