#pragma once

#include <stdexcept>
#include <string>

namespace ngg {

// Malformed input in one of the text serialization formats.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Lookup of a term/topic/file that does not exist.
class NotFoundError : public std::runtime_error {
public:
    explicit NotFoundError(const std::string& what) : std::runtime_error(what) {}
};

// A statistical model too small to support the requested derivation
// (e.g. threshold selection over fewer than two contexts).
class DegenerateModelError : public std::runtime_error {
public:
    explicit DegenerateModelError(const std::string& what) : std::runtime_error(what) {}
};

// Problems reading corpus/topic/thesaurus data from disk.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ngg
