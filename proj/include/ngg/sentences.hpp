#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ngg {

struct Sentence {
    std::string text;
    std::string doc_id;
    int index_in_doc = 0;

    friend bool operator==(const Sentence&, const Sentence&) = default;
};

// Abbreviations whose trailing period does not end a sentence. Entries are
// lowercase, with internal periods but no trailing one ("mr", "e.g", "u.s").
const std::vector<std::string>& default_abbreviations();

// Rule-based splitting: a sentence ends at '.', '!' or '?' followed by
// whitespace and an uppercase letter, or at end of text. Periods after a
// guarded abbreviation never split. Sentence texts are trimmed; only
// inter-sentence whitespace is dropped.
std::vector<Sentence> split_sentences(std::string_view document, std::string_view doc_id = {},
                                      const std::vector<std::string>& abbreviations =
                                          default_abbreviations());

} // namespace ngg
