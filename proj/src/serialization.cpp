#include "ngg/serialization.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "ngg/errors.hpp"

namespace ngg {

namespace {

// Line source with one-line pushback so block parsers can stop at the next
// header without consuming it.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    std::optional<std::string> next() {
        if (pending_) {
            auto line = std::move(*pending_);
            pending_.reset();
            return line;
        }
        std::string line;
        if (!std::getline(in_, line)) return std::nullopt;
        return line;
    }

    void push_back(std::string line) { pending_ = std::move(line); }

private:
    std::istream& in_;
    std::optional<std::string> pending_;
};

std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == '\t') {
            fields.emplace_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
    return fields;
}

long long parse_int(std::string_view text, const char* what) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw FormatError(std::string("bad integer for ") + what + ": '" + std::string(text) + "'");
    return value;
}

NGramGraph parse_graph_block(LineReader& reader, const std::string& header) {
    std::istringstream hs(header);
    std::string kw_rank, kw_window;
    long long rank = 0, window = 0;
    hs >> kw_rank >> rank >> kw_window >> window;
    if (hs.fail() || kw_rank != "rank" || kw_window != "window" || rank < 1 || window < 1)
        throw FormatError("bad graph header: '" + header + "'");

    NGramGraph graph(static_cast<int>(rank), static_cast<int>(window));
    while (auto line = reader.next()) {
        if (line->find('\t') == std::string::npos) {
            reader.push_back(std::move(*line));
            break;
        }
        const auto fields = split_fields(*line);
        if (fields.size() != 3)
            throw FormatError("bad edge line: '" + *line + "'");
        graph.set_weight({unescape_label(fields[0]), unescape_label(fields[1])},
                         parse_weight(fields[2]));
    }
    return graph;
}

} // namespace

std::string escape_label(std::string_view label) {
    std::string out;
    out.reserve(label.size());
    for (char c : label) {
        switch (c) {
        case '\\': out += "\\\\"; break;
        case '\t': out += "\\t"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

std::string unescape_label(std::string_view escaped) {
    std::string out;
    out.reserve(escaped.size());
    for (std::size_t i = 0; i < escaped.size(); ++i) {
        const char c = escaped[i];
        if (c != '\\') {
            out.push_back(c);
            continue;
        }
        if (i + 1 >= escaped.size())
            throw FormatError("dangling escape in label");
        switch (escaped[++i]) {
        case '\\': out.push_back('\\'); break;
        case 't': out.push_back('\t'); break;
        case 'n': out.push_back('\n'); break;
        case 'r': out.push_back('\r'); break;
        default: throw FormatError("unknown escape in label");
        }
    }
    return out;
}

std::string format_weight(double w) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
    if (ec != std::errc{}) throw FormatError("weight not representable");
    return std::string(buf, ptr);
}

double parse_weight(std::string_view text) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw FormatError("bad weight: '" + std::string(text) + "'");
    return value;
}

void save_graph(std::ostream& out, const NGramGraph& graph) {
    out << "rank " << graph.rank() << " window " << graph.window() << '\n';
    for (const auto& [key, w] : graph.edges()) {
        out << escape_label(key.first) << '\t' << escape_label(key.second) << '\t'
            << format_weight(w) << '\n';
    }
}

NGramGraph load_graph(std::istream& in) {
    LineReader reader(in);
    auto header = reader.next();
    if (!header) throw FormatError("empty graph input");
    return parse_graph_block(reader, *header);
}

void save_graphset(std::ostream& out, const GraphSet& set) {
    for (const NGramGraph& g : set.graphs()) save_graph(out, g);
}

namespace {

GraphSet load_graphset_from(LineReader& reader) {
    std::vector<NGramGraph> graphs;
    while (auto line = reader.next()) {
        if (line->empty()) continue;
        if (line->find('\t') != std::string::npos)
            throw FormatError("edge line outside a graph block: '" + *line + "'");
        graphs.push_back(parse_graph_block(reader, *line));
    }
    if (graphs.empty()) throw FormatError("empty graph-set input");
    const int l_min = graphs.front().rank();
    const int l_max = graphs.back().rank();
    const int window = graphs.front().window();
    GraphSet set(l_min, l_max, window);
    int expected = l_min;
    for (NGramGraph& g : graphs) {
        if (g.rank() != expected++)
            throw FormatError("graph-set ranks are not contiguous ascending");
        set.at(g.rank()) = std::move(g);
    }
    return set;
}

} // namespace

GraphSet load_graphset(std::istream& in) {
    LineReader reader(in);
    return load_graphset_from(reader);
}

void save_entropy_model(std::ostream& out, const EntropyModel& model) {
    out << "context_rank " << model.context_rank << '\n';
    for (const auto& [context, followers] : model.frequencies)
        for (const auto& [follower, count] : followers)
            out << escape_label(context) << '\t' << escape_label(follower) << '\t' << count
                << '\n';
}

EntropyModel load_entropy_model(std::istream& in) {
    LineReader reader(in);
    auto header = reader.next();
    if (!header) throw FormatError("empty entropy model input");
    std::istringstream hs(*header);
    std::string kw;
    long long rank = 0;
    hs >> kw >> rank;
    if (hs.fail() || kw != "context_rank" || rank < 1)
        throw FormatError("bad entropy model header: '" + *header + "'");

    EntropyModel model;
    model.context_rank = static_cast<int>(rank);
    while (auto line = reader.next()) {
        if (line->empty()) continue;
        const auto fields = split_fields(*line);
        if (fields.size() != 3)
            throw FormatError("bad frequency line: '" + *line + "'");
        model.frequencies[unescape_label(fields[0])][unescape_label(fields[1])] =
            static_cast<std::uint64_t>(parse_int(fields[2], "frequency count"));
    }

    if (model.frequencies.empty())
        throw FormatError("entropy model has no transitions");

    // Entropies and the delimiter decision are derived data; recompute.
    compute_entropies(model);
    ThresholdSelection sel = select_threshold(model);
    model.threshold = sel.threshold;
    model.delimiters = std::move(sel.delimiters);
    return model;
}

void save_content_model(std::ostream& out, const ContentModel& model) {
    out << "docs " << model.doc_count << " noise_subtracted "
        << (model.noise_subtracted ? "true" : "false") << '\n';
    save_graphset(out, model.content);
}

ContentModel load_content_model(std::istream& in) {
    LineReader reader(in);
    auto header = reader.next();
    if (!header) throw FormatError("empty content model input");
    std::istringstream hs(*header);
    std::string kw_docs, kw_noise, flag;
    long long docs = 0;
    hs >> kw_docs >> docs >> kw_noise >> flag;
    if (hs.fail() || kw_docs != "docs" || kw_noise != "noise_subtracted" ||
        (flag != "true" && flag != "false") || docs < 0)
        throw FormatError("bad content model header: '" + *header + "'");

    ContentModel model;
    model.doc_count = static_cast<int>(docs);
    model.noise_subtracted = flag == "true";
    model.content = load_graphset_from(reader);
    return model;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read " + path.string());
    return in;
}

} // namespace

void save_graphset_file(const std::filesystem::path& path, const GraphSet& set) {
    auto out = open_out(path);
    save_graphset(out, set);
}

GraphSet load_graphset_file(const std::filesystem::path& path) {
    auto in = open_in(path);
    return load_graphset(in);
}

void save_entropy_model_file(const std::filesystem::path& path, const EntropyModel& model) {
    auto out = open_out(path);
    save_entropy_model(out, model);
}

EntropyModel load_entropy_model_file(const std::filesystem::path& path) {
    auto in = open_in(path);
    return load_entropy_model(in);
}

void save_content_model_file(const std::filesystem::path& path, const ContentModel& model) {
    auto out = open_out(path);
    save_content_model(out, model);
}

ContentModel load_content_model_file(const std::filesystem::path& path) {
    auto in = open_in(path);
    return load_content_model(in);
}

} // namespace ngg
