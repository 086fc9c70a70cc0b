#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace ngg {

// Decodes UTF-8 into code points. Invalid byte sequences decode to U+FFFD,
// one replacement per offending byte, so no input is ever rejected.
std::u32string decode_utf8(std::string_view text);

std::string encode_utf8(std::u32string_view text);
std::string encode_utf8(char32_t cp);

bool is_space(char32_t cp);

// Optional normalization pre-pass: collapses every run of whitespace to a
// single space. Not applied anywhere by default.
std::string collapse_whitespace(std::string_view text);

std::string trim(std::string_view text);

// Number of whitespace-separated tokens.
std::size_t word_count(std::string_view text);

} // namespace ngg
