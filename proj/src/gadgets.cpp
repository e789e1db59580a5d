#include "genfactor/gadgets.hpp"

#include <algorithm>
#include <stdexcept>

#include "genfactor/instance_io.hpp"

namespace genfactor {

SelectionGadget selection_gadget(const std::vector<int>& amounts, int r) {
    const DegreeList a = canonical_list(amounts);
    if (a.empty()) throw std::invalid_argument("amount set must be non-empty");
    if (r < 0) throw std::invalid_argument("output count must be non-negative");
    const int m = a.back();  // number of U vertices

    std::vector<Edge> edges;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= r + 1; ++j) edges.push_back({i, j, 1});

    std::vector<DegreeList> u_lists(static_cast<size_t>(m), DegreeList{0, r + 1});
    DegreeList full_range(static_cast<size_t>(m) + 1);
    for (int c = 0; c <= m; ++c) full_range[static_cast<size_t>(c)] = c;
    std::vector<DegreeList> v_lists;
    v_lists.push_back(a);  // hub v_0 at index 1
    for (int j = 0; j < r; ++j) v_lists.push_back(full_range);

    SelectionGadget g;
    g.amounts = a;
    g.r = r;
    g.hub = 1;
    for (int j = 2; j <= r + 1; ++j) g.outputs.push_back(j);
    g.instance = Instance(m, r + 1, std::move(edges), std::move(u_lists), std::move(v_lists));
    return g;
}

DoubleSelectionGadget double_selection_gadget(const std::vector<int>& amounts, int r, int rprime) {
    const DegreeList a = canonical_list(amounts);
    if (a.empty()) throw std::invalid_argument("amount set must be non-empty");
    if (a.back() < 1)
        throw std::invalid_argument("amount set must contain a positive entry");
    if (r < 0 || rprime < 0) throw std::invalid_argument("output counts must be non-negative");

    const int m = a.back();            // lower U count
    const int n_scale = m + 1;         // N
    const int m_upper = n_scale * m;   // upper U count = max of the scaled set

    // V layout: 1 = lower hub, 2..r+1 = lower outputs, r+2 = q,
    // r+3 = upper hub, r+4..r+3+r' = upper outputs.
    const int q = r + 2;
    const int lower_hub = 1;
    const int upper_hub = r + 3;
    const int num_v = r + rprime + 3;

    std::vector<Edge> edges;
    // Lower gadget: complete bipartite to {lower hub, lower outputs, q}.
    for (int i = 1; i <= m; ++i) {
        edges.push_back({i, lower_hub, 1});
        for (int j = 2; j <= r + 1; ++j) edges.push_back({i, j, 1});
        edges.push_back({i, q, 1});
    }
    // Upper gadget: complete bipartite to {q, upper hub, upper outputs}.
    for (int i = 1; i <= m_upper; ++i) {
        edges.push_back({m + i, q, 1});
        edges.push_back({m + i, upper_hub, 1});
        for (int j = upper_hub + 1; j <= num_v; ++j) edges.push_back({m + i, j, 1});
    }

    std::vector<DegreeList> u_lists;
    for (int i = 0; i < m; ++i) u_lists.push_back({0, r + 2});
    for (int i = 0; i < m_upper; ++i) u_lists.push_back({0, rprime + 2});

    DegreeList scaled;  // A' = {N*alpha}
    for (int v : a) scaled.push_back(n_scale * v);
    DegreeList glued;  // {a + N*a}
    for (int v : a) glued.push_back(v + n_scale * v);
    DegreeList lower_range(static_cast<size_t>(m) + 1);
    for (int c = 0; c <= m; ++c) lower_range[static_cast<size_t>(c)] = c;
    DegreeList upper_range(static_cast<size_t>(m_upper) + 1);
    for (int c = 0; c <= m_upper; ++c) upper_range[static_cast<size_t>(c)] = c;

    std::vector<DegreeList> v_lists(static_cast<size_t>(num_v));
    v_lists[static_cast<size_t>(lower_hub - 1)] = a;
    for (int j = 2; j <= r + 1; ++j) v_lists[static_cast<size_t>(j - 1)] = lower_range;
    v_lists[static_cast<size_t>(q - 1)] = glued;
    v_lists[static_cast<size_t>(upper_hub - 1)] = scaled;
    for (int j = upper_hub + 1; j <= num_v; ++j) v_lists[static_cast<size_t>(j - 1)] = upper_range;

    DoubleSelectionGadget g;
    g.amounts = a;
    g.scale = n_scale;
    g.q = q;
    g.lower_hub = lower_hub;
    g.upper_hub = upper_hub;
    for (int j = 2; j <= r + 1; ++j) g.lower_outputs.push_back(j);
    for (int j = upper_hub + 1; j <= num_v; ++j) g.upper_outputs.push_back(j);
    g.instance = Instance(m + m_upper, num_v, std::move(edges), std::move(u_lists),
                          std::move(v_lists));
    return g;
}

int PartitionedGraph::pair_index(int i, int j) const {
    if (i < 1 || j <= i || j > parts) throw std::invalid_argument("bad part pair");
    int idx = 0;
    for (int t = 1; t < i; ++t) idx += parts - t;
    return idx + (j - i - 1);
}

bool PartitionedGraph::has_edge(int i, int a, int j, int b) const {
    return adjacency[static_cast<size_t>(pair_index(i, j))]
                    [static_cast<size_t>((a - 1) * part_size + (b - 1))] != 0;
}

void PartitionedGraph::add_edge(int i, int a, int j, int b) {
    if (a < 1 || a > part_size || b < 1 || b > part_size)
        throw std::invalid_argument("vertex index out of range");
    adjacency[static_cast<size_t>(pair_index(i, j))]
             [static_cast<size_t>((a - 1) * part_size + (b - 1))] = 1;
}

PartitionedGraph make_partitioned_graph(int parts, int part_size) {
    if (parts < 1 || part_size < 1) throw std::invalid_argument("bad partitioned graph shape");
    PartitionedGraph g;
    g.parts = parts;
    g.part_size = part_size;
    g.adjacency.assign(static_cast<size_t>(parts) * (parts - 1) / 2,
                       std::vector<char>(static_cast<size_t>(part_size) * part_size, 0));
    return g;
}

CliqueReduction reduce_clique(const PartitionedGraph& g) {
    const int k = g.parts;
    const int n = g.part_size;
    if (k < 2) throw std::invalid_argument("need at least two parts");
    if (n < 1) throw std::invalid_argument("parts must be non-empty");
    const int n_scale = n + 1;  // N
    const int pairs = k * (k - 1) / 2;

    CliqueReduction red;
    red.scale = n_scale;

    // V layout: the C(k,2) shared vertices h_{i,j} first (lexicographic in
    // (i,j)), then per part: lower hub, upper hub, q.
    red.h_vertices.resize(static_cast<size_t>(pairs));
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            red.h_vertices[static_cast<size_t>(g.pair_index(i, j))] = g.pair_index(i, j) + 1;
    auto lower_hub = [&](int i) { return pairs + 3 * (i - 1) + 1; };
    auto upper_hub = [&](int i) { return pairs + 3 * (i - 1) + 2; };
    auto q_of = [&](int i) { return pairs + 3 * (i - 1) + 3; };
    for (int i = 1; i <= k; ++i)
        red.part_cores.push_back({lower_hub(i), upper_hub(i), q_of(i)});
    const int num_v = pairs + 3 * k;

    DegreeList base_amounts(static_cast<size_t>(n));
    for (int c = 1; c <= n; ++c) base_amounts[static_cast<size_t>(c - 1)] = c;
    DegreeList scaled_amounts;
    for (int c : base_amounts) scaled_amounts.push_back(n_scale * c);
    DegreeList glued_list;
    for (int c : base_amounts) glued_list.push_back(c + n_scale * c);
    DegreeList lower_range(static_cast<size_t>(n) + 1);
    for (int c = 0; c <= n; ++c) lower_range[static_cast<size_t>(c)] = c;
    const int m_upper = n_scale * n;  // upper gadget U count per part
    DegreeList upper_range(static_cast<size_t>(m_upper) + 1);
    for (int c = 0; c <= m_upper; ++c) upper_range[static_cast<size_t>(c)] = c;

    std::vector<DegreeList> v_lists(static_cast<size_t>(num_v));
    for (int i = 1; i <= k; ++i) {
        v_lists[static_cast<size_t>(lower_hub(i) - 1)] = base_amounts;
        v_lists[static_cast<size_t>(upper_hub(i) - 1)] = scaled_amounts;
        v_lists[static_cast<size_t>(q_of(i) - 1)] = glued_list;
    }
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            DegreeList allowed;
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b)
                    if (g.has_edge(i, a, j, b)) allowed.push_back(n_scale * a + b);
            v_lists[static_cast<size_t>(red.h_vertices[static_cast<size_t>(g.pair_index(i, j))] - 1)] =
                canonical_list(std::move(allowed));
        }

    std::vector<Edge> edges;
    std::vector<DegreeList> u_lists;
    int next_u = 0;
    for (int i = 1; i <= k; ++i) {
        // Lower gadget of part i: r = i-1 outputs are h_{j,i} for j < i.
        std::vector<int> lower_targets{lower_hub(i)};
        for (int j = 1; j < i; ++j)
            lower_targets.push_back(red.h_vertices[static_cast<size_t>(g.pair_index(j, i))]);
        lower_targets.push_back(q_of(i));
        for (int t = 0; t < n; ++t) {
            ++next_u;
            for (int v : lower_targets) edges.push_back({next_u, v, 1});
            u_lists.push_back({0, static_cast<int>(lower_targets.size())});
        }
        // Upper gadget of part i: r' = k-i outputs are h_{i,j} for j > i.
        std::vector<int> upper_targets{q_of(i), upper_hub(i)};
        for (int j = i + 1; j <= k; ++j)
            upper_targets.push_back(red.h_vertices[static_cast<size_t>(g.pair_index(i, j))]);
        for (int t = 0; t < m_upper; ++t) {
            ++next_u;
            for (int v : upper_targets) edges.push_back({next_u, v, 1});
            u_lists.push_back({0, static_cast<int>(upper_targets.size())});
        }
    }

    red.instance = Instance(next_u, num_v, std::move(edges), std::move(u_lists),
                            std::move(v_lists));
    return red;
}

std::optional<std::vector<int>> find_clique_bruteforce(const PartitionedGraph& g) {
    std::vector<int> pick(static_cast<size_t>(g.parts), 1);
    while (true) {
        bool ok = true;
        for (int i = 1; i <= g.parts && ok; ++i)
            for (int j = i + 1; j <= g.parts && ok; ++j)
                if (!g.has_edge(i, pick[static_cast<size_t>(i - 1)], j, pick[static_cast<size_t>(j - 1)]))
                    ok = false;
        if (ok) return pick;
        int pos = g.parts - 1;
        while (pos >= 0 && pick[static_cast<size_t>(pos)] == g.part_size) {
            pick[static_cast<size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) return std::nullopt;
        ++pick[static_cast<size_t>(pos)];
    }
}

PartitionedGraph parse_pclique(std::string_view text) {
    // Same line conventions as the instance format.
    int line_no = 0;
    size_t pos = 0;
    auto next_tokens = [&]() {
        std::vector<std::string> toks;
        while (pos < text.size()) {
            size_t nl = text.find('\n', pos);
            if (nl == std::string_view::npos) nl = text.size();
            std::string_view line = text.substr(pos, nl - pos);
            pos = nl + 1;
            ++line_no;
            size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string_view::npos) continue;
            if (line[first] == '#') continue;
            size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
                size_t j = i;
                while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
                if (j > i) toks.emplace_back(line.substr(i, j - i));
                i = j;
            }
            return toks;
        }
        return toks;
    };
    auto to_int = [&](const std::string& tok, const char* what, int lo, int hi) {
        try {
            size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size() || v < lo || v > hi)
                throw std::invalid_argument("range");
            return v;
        } catch (...) {
            throw ParseError(line_no, std::string("bad ") + what + " '" + tok + "'");
        }
    };

    auto header = next_tokens();
    if (header.empty()) throw ParseError(std::max(line_no, 1), "missing header");
    if (header.size() != 5 || header[0] != "p" || header[1] != "pclique")
        throw ParseError(line_no, "expected header 'p pclique <k> <n> <m>'");
    const int k = to_int(header[2], "part count", 1, 1000);
    const int n = to_int(header[3], "part size", 1, 1000);
    const int m = to_int(header[4], "edge count", 0, 100'000'000);

    PartitionedGraph g = make_partitioned_graph(k, n);
    int found = 0;
    while (true) {
        auto toks = next_tokens();
        if (toks.empty()) break;
        if (toks[0] != "e" || toks.size() != 5)
            throw ParseError(line_no, "expected 'e <i> <a> <j> <b>'");
        const int i = to_int(toks[1], "part index", 1, k);
        const int a = to_int(toks[2], "vertex index", 1, n);
        const int j = to_int(toks[3], "part index", 1, k);
        const int b = to_int(toks[4], "vertex index", 1, n);
        if (i >= j) throw ParseError(line_no, "edge must satisfy i < j");
        if (g.has_edge(i, a, j, b)) throw ParseError(line_no, "duplicate edge");
        g.add_edge(i, a, j, b);
        ++found;
    }
    if (found != m)
        throw ParseError(line_no, "header declares " + std::to_string(m) + " edges, found " +
                                      std::to_string(found));
    return g;
}

std::string serialize_pclique(const PartitionedGraph& g) {
    int count = 0;
    std::string body;
    for (int i = 1; i <= g.parts; ++i)
        for (int j = i + 1; j <= g.parts; ++j)
            for (int a = 1; a <= g.part_size; ++a)
                for (int b = 1; b <= g.part_size; ++b)
                    if (g.has_edge(i, a, j, b)) {
                        ++count;
                        body += "e " + std::to_string(i) + " " + std::to_string(a) + " " +
                                std::to_string(j) + " " + std::to_string(b) + "\n";
                    }
    return "p pclique " + std::to_string(g.parts) + " " + std::to_string(g.part_size) + " " +
           std::to_string(count) + "\n" + body;
}

}  // namespace genfactor
