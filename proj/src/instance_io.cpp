#include "genfactor/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace genfactor {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long parse_int(std::string_view tok, int line, const char* what) {
    long long value = 0;
    const auto* begin = tok.data();
    const auto* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw ParseError(line, std::string("bad ") + what + " '" + std::string(tok) + "'");
    return value;
}

int parse_bounded(std::string_view tok, int line, const char* what, long long lo, long long hi) {
    const long long v = parse_int(tok, line, what);
    if (v < lo || v > hi)
        throw ParseError(line, std::string(what) + " " + std::to_string(v) + " out of range");
    return static_cast<int>(v);
}

DegreeList parse_list(std::string_view tok, int line) {
    if (tok == "-") return {};
    DegreeList out;
    size_t i = 0;
    while (i <= tok.size()) {
        size_t j = tok.find(',', i);
        if (j == std::string_view::npos) j = tok.size();
        if (j == i) throw ParseError(line, "empty element in degree list");
        const long long v = parse_int(tok.substr(i, j - i), line, "degree list entry");
        if (v < 0) throw ParseError(line, "negative degree list entry");
        if (v > 1'000'000'000) throw ParseError(line, "degree list entry too large");
        out.push_back(static_cast<int>(v));
        if (j == tok.size()) break;
        i = j + 1;
    }
    return out;
}

struct LineReader {
    std::string_view text;
    size_t pos = 0;
    int line_no = 0;

    // Returns the next meaningful line's tokens, or empty at end of input.
    std::vector<std::string_view> next() {
        while (pos < text.size()) {
            size_t nl = text.find('\n', pos);
            if (nl == std::string_view::npos) nl = text.size();
            std::string_view line = text.substr(pos, nl - pos);
            pos = nl + 1;
            ++line_no;
            size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string_view::npos) continue;  // blank
            if (line[first] == '#') continue;               // comment
            return split_tokens(line);
        }
        return {};
    }
};

}  // namespace

Instance parse_instance(std::string_view text) {
    LineReader reader{text};
    auto header = reader.next();
    if (header.empty()) throw ParseError(reader.line_no == 0 ? 1 : reader.line_no, "missing header");
    if (header.size() != 5 || header[0] != "p" || header[1] != "genfactor")
        throw ParseError(reader.line_no, "expected header 'p genfactor <m> <k> <nedges>'");
    const int m = parse_bounded(header[2], reader.line_no, "U count", 0, 1'000'000);
    const int k = parse_bounded(header[3], reader.line_no, "V count", 0, 1'000'000);
    const int declared_edges = parse_bounded(header[4], reader.line_no, "edge count", 0, 10'000'000);

    std::vector<DegreeList> u_lists(static_cast<size_t>(m)), v_lists(static_cast<size_t>(k));
    std::vector<char> u_seen(static_cast<size_t>(m), 0), v_seen(static_cast<size_t>(k), 0);
    std::vector<Edge> edges;
    std::vector<std::vector<char>> have_edge(static_cast<size_t>(m));

    while (true) {
        auto toks = reader.next();
        if (toks.empty()) break;
        const int ln = reader.line_no;
        if (toks[0] == "u" || toks[0] == "v") {
            const bool is_u = toks[0] == "u";
            if (toks.size() != 3)
                throw ParseError(ln, std::string("expected '") + (is_u ? "u" : "v") + " <index> <list>'");
            const int limit = is_u ? m : k;
            const int idx = parse_bounded(toks[1], ln, "vertex index", 1, limit);
            auto& seen = is_u ? u_seen : v_seen;
            if (seen[static_cast<size_t>(idx - 1)])
                throw ParseError(ln, "duplicate declaration of " + std::string(toks[0]) + " " +
                                         std::to_string(idx));
            seen[static_cast<size_t>(idx - 1)] = 1;
            (is_u ? u_lists : v_lists)[static_cast<size_t>(idx - 1)] = parse_list(toks[2], ln);
        } else if (toks[0] == "e") {
            if (toks.size() != 4) throw ParseError(ln, "expected 'e <i> <j> <rho>'");
            const int i = parse_bounded(toks[1], ln, "U endpoint", 1, m);
            const int j = parse_bounded(toks[2], ln, "V endpoint", 1, k);
            const int rho = parse_bounded(toks[3], ln, "capacity", 0, 1'000'000'000);
            if (!u_seen[static_cast<size_t>(i - 1)])
                throw ParseError(ln, "u " + std::to_string(i) + " referenced before declaration");
            if (!v_seen[static_cast<size_t>(j - 1)])
                throw ParseError(ln, "v " + std::to_string(j) + " referenced before declaration");
            auto& row = have_edge[static_cast<size_t>(i - 1)];
            if (row.empty()) row.assign(static_cast<size_t>(k), 0);
            if (row[static_cast<size_t>(j - 1)])
                throw ParseError(ln, "duplicate edge (" + std::to_string(i) + "," +
                                         std::to_string(j) + ")");
            row[static_cast<size_t>(j - 1)] = 1;
            edges.push_back({i, j, rho});
        } else {
            throw ParseError(ln, "unknown line type '" + std::string(toks[0]) + "'");
        }
    }

    for (int i = 1; i <= m; ++i)
        if (!u_seen[static_cast<size_t>(i - 1)])
            throw ParseError(reader.line_no, "missing declaration of u " + std::to_string(i));
    for (int j = 1; j <= k; ++j)
        if (!v_seen[static_cast<size_t>(j - 1)])
            throw ParseError(reader.line_no, "missing declaration of v " + std::to_string(j));
    if (static_cast<int>(edges.size()) != declared_edges)
        throw ParseError(reader.line_no, "header declares " + std::to_string(declared_edges) +
                                             " edges, found " + std::to_string(edges.size()));
    return Instance(m, k, std::move(edges), std::move(u_lists), std::move(v_lists));
}

namespace {

std::string list_to_string(const DegreeList& list) {
    if (list.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < list.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(list[i]);
    }
    return out;
}

}  // namespace

std::string serialize_instance(const Instance& inst) {
    std::string out = "p genfactor " + std::to_string(inst.num_u()) + " " +
                      std::to_string(inst.num_v()) + " " + std::to_string(inst.num_edges()) + "\n";
    for (int i = 1; i <= inst.num_u(); ++i)
        out += "u " + std::to_string(i) + " " + list_to_string(inst.list(u_vertex(i))) + "\n";
    for (int j = 1; j <= inst.num_v(); ++j)
        out += "v " + std::to_string(j) + " " + list_to_string(inst.list(v_vertex(j))) + "\n";
    for (const Edge& e : inst.edges())
        out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + " " +
               std::to_string(e.capacity) + "\n";
    return out;
}

FactorFile parse_factor(std::string_view text) {
    LineReader reader{text};
    auto header = reader.next();
    if (header.empty()) throw ParseError(reader.line_no == 0 ? 1 : reader.line_no, "missing header");
    if (header.size() != 3 || header[0] != "f" || header[1] != "genfactor")
        throw ParseError(reader.line_no, "expected header 'f genfactor <nedges>'");
    FactorFile file;
    file.declared_edges = parse_bounded(header[2], reader.line_no, "entry count", 0, 10'000'000);
    while (true) {
        auto toks = reader.next();
        if (toks.empty()) break;
        const int ln = reader.line_no;
        if (toks[0] != "w" || toks.size() != 4) throw ParseError(ln, "expected 'w <i> <j> <phi>'");
        const int i = parse_bounded(toks[1], ln, "U endpoint", 1, 1'000'000);
        const int j = parse_bounded(toks[2], ln, "V endpoint", 1, 1'000'000);
        const int w = parse_bounded(toks[3], ln, "weight", 0, 1'000'000'000);
        file.entries.emplace_back(i, j, w);
    }
    if (static_cast<int>(file.entries.size()) != file.declared_edges)
        throw ParseError(reader.line_no, "header declares " + std::to_string(file.declared_edges) +
                                             " entries, found " + std::to_string(file.entries.size()));
    return file;
}

std::string serialize_factor(const Instance& inst, std::span<const Weight> phi) {
    if (phi.size() != static_cast<size_t>(inst.num_edges()))
        throw std::invalid_argument("weighting size does not match edge count");
    int nonzero = 0;
    for (Weight w : phi)
        if (w != 0) ++nonzero;
    std::string out = "f genfactor " + std::to_string(nonzero) + "\n";
    for (int id = 0; id < inst.num_edges(); ++id) {
        if (phi[static_cast<size_t>(id)] == 0) continue;
        const Edge& e = inst.edge(id);
        out += "w " + std::to_string(e.u) + " " + std::to_string(e.v) + " " +
               std::to_string(phi[static_cast<size_t>(id)]) + "\n";
    }
    return out;
}

EdgeWeighting bind_factor(const Instance& inst, const FactorFile& file) {
    EdgeWeighting phi(static_cast<size_t>(inst.num_edges()), 0);
    std::vector<char> set(static_cast<size_t>(inst.num_edges()), 0);
    for (auto [u, v, w] : file.entries) {
        if (u < 1 || u > inst.num_u() || v < 1 || v > inst.num_v())
            throw std::invalid_argument("factor entry (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") is not an edge");
        const auto id = inst.find_edge(u, v);
        if (!id)
            throw std::invalid_argument("factor entry (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") is not an edge");
        if (set[static_cast<size_t>(*id)])
            throw std::invalid_argument("duplicate factor entry (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        set[static_cast<size_t>(*id)] = 1;
        phi[static_cast<size_t>(*id)] = w;
    }
    return phi;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace genfactor
