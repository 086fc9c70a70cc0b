#include "ngg/thesaurus.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "ngg/errors.hpp"

namespace ngg {

std::string sense_descriptor(const Sense& sense, SenseDescriptor descriptor) {
    if (descriptor == SenseDescriptor::Definition) return sense.definition;
    std::string joined;
    for (const std::string& syn : sense.synonyms) {
        if (!joined.empty()) joined += ", ";
        joined += syn;
    }
    return joined;
}

Thesaurus load_thesaurus_tsv(std::istream& in) {
    Thesaurus thesaurus;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;

        std::vector<std::string> fields;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == '\t') {
                fields.emplace_back(line.substr(start, i - start));
                start = i + 1;
            }
        }
        if (fields.size() < 3 || fields.size() > 4)
            throw FormatError("thesaurus line " + std::to_string(lineno) +
                              ": expected 3 or 4 tab-separated fields");
        if (fields[0].empty())
            throw FormatError("thesaurus line " + std::to_string(lineno) + ": empty term");
        if (fields[2].empty())
            throw FormatError("thesaurus line " + std::to_string(lineno) + ": empty definition");

        Sense sense;
        sense.id = fields[1];
        sense.definition = fields[2];
        if (fields.size() == 4 && !fields[3].empty()) {
            std::istringstream syns(fields[3]);
            std::string syn;
            while (std::getline(syns, syn, ',')) {
                if (!syn.empty()) sense.synonyms.push_back(syn);
            }
        }
        thesaurus.entries[fields[0]].push_back(std::move(sense));
    }
    return thesaurus;
}

Thesaurus load_thesaurus_tsv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read thesaurus " + path.string());
    return load_thesaurus_tsv(in);
}

} // namespace ngg
