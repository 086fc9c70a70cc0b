#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ngg/chunker.hpp"
#include "ngg/corpus_model.hpp"
#include "ngg/ngram_graph.hpp"

namespace ngg {

// Labels are stored with tab, newline, carriage return and backslash escaped
// so the line/field structure of the formats is unambiguous.
std::string escape_label(std::string_view label);
std::string unescape_label(std::string_view escaped); // throws FormatError

// Shortest decimal form that parses back to the same double.
std::string format_weight(double w);
double parse_weight(std::string_view text); // throws FormatError

// Graph format: a header line `rank <n> window <d>` followed by one edge per
// line `<source>\t<target>\t<weight>`. A graph set is the concatenation of
// its graphs' blocks in rank order. Round-trips are bit-exact.
void save_graph(std::ostream& out, const NGramGraph& graph);
NGramGraph load_graph(std::istream& in);

void save_graphset(std::ostream& out, const GraphSet& set);
GraphSet load_graphset(std::istream& in);

// Entropy model format: a header line `context_rank <r>` followed by one
// line `<context>\t<follower>\t<count>` per observed transition. Entropies,
// threshold and delimiters are recomputed on load.
void save_entropy_model(std::ostream& out, const EntropyModel& model);
EntropyModel load_entropy_model(std::istream& in);

// Content model format: a header line `docs <k> noise_subtracted <bool>`
// followed by the content graph set.
void save_content_model(std::ostream& out, const ContentModel& model);
ContentModel load_content_model(std::istream& in);

// File convenience wrappers.
void save_graphset_file(const std::filesystem::path& path, const GraphSet& set);
GraphSet load_graphset_file(const std::filesystem::path& path);
void save_entropy_model_file(const std::filesystem::path& path, const EntropyModel& model);
EntropyModel load_entropy_model_file(const std::filesystem::path& path);
void save_content_model_file(const std::filesystem::path& path, const ContentModel& model);
ContentModel load_content_model_file(const std::filesystem::path& path);

} // namespace ngg
