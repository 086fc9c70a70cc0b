#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace ngg {

struct Sense {
    std::string id;
    std::string definition;
    std::vector<std::string> synonyms;
};

struct Thesaurus {
    std::map<std::string, std::vector<Sense>> entries;

    bool contains(const std::string& term) const { return entries.count(term) != 0; }

    const std::vector<Sense>* find(const std::string& term) const {
        auto it = entries.find(term);
        return it == entries.end() ? nullptr : &it->second;
    }
};

// Which text stands in for a sense when it is turned into a graph.
enum class SenseDescriptor {
    Definition, // the sense's definition text
    Synonyms,   // the synonym list joined with ", "
};

std::string sense_descriptor(const Sense& sense, SenseDescriptor descriptor);

// TSV, one sense per line: term<TAB>sense-id<TAB>definition<TAB>syn1,syn2,...
// The synonyms column may be empty; lines starting with '#' are skipped.
Thesaurus load_thesaurus_tsv(std::istream& in);
Thesaurus load_thesaurus_tsv(const std::filesystem::path& path);

} // namespace ngg
