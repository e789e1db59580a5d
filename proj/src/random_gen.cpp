#include "genfactor/random_gen.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "genfactor/union_find.hpp"

namespace genfactor {

namespace {

DegreeList random_list(Rng& rng, int max_entries, int max_value, bool allow_empty) {
    std::set<int> vals;
    const int want = rng.range(allow_empty ? 0 : 1, max_entries);
    for (int t = 0; t < want; ++t) vals.insert(rng.range(0, max_value));
    return DegreeList(vals.begin(), vals.end());
}

}  // namespace

Instance random_weighted_instance(Rng& rng, int num_u, int num_v, int edge_percent,
                                  int max_capacity) {
    std::vector<Edge> edges;
    for (int i = 1; i <= num_u; ++i)
        for (int j = 1; j <= num_v; ++j)
            if (rng.chance(edge_percent)) edges.push_back({i, j, rng.range(1, max_capacity)});
    std::vector<DegreeList> u_lists, v_lists;
    for (int i = 0; i < num_u; ++i) u_lists.push_back({rng.range(0, 2)});
    for (int j = 0; j < num_v; ++j) v_lists.push_back(random_list(rng, 3, 4, false));
    return Instance(num_u, num_v, std::move(edges), std::move(u_lists), std::move(v_lists));
}

Instance random_all_ones_instance(Rng& rng, int num_u, int num_v, int edge_percent) {
    std::vector<Edge> edges;
    for (int i = 1; i <= num_u; ++i)
        for (int j = 1; j <= num_v; ++j)
            if (rng.chance(edge_percent)) edges.push_back({i, j, 1});
    std::vector<DegreeList> u_lists(static_cast<size_t>(num_u), DegreeList{1});
    std::vector<DegreeList> v_lists;
    for (int j = 0; j < num_v; ++j) v_lists.push_back(random_list(rng, 3, 4, false));
    return Instance(num_u, num_v, std::move(edges), std::move(u_lists), std::move(v_lists));
}

Instance random_forest_instance(Rng& rng, int num_u, int num_v, int extra_edge_percent) {
    RollbackDsu dsu(static_cast<size_t>(num_u + num_v));
    std::vector<Edge> edges;
    // Scan candidate pairs in a randomized order; keep an edge when it joins
    // two components (plus a dash of rejected candidates controls density).
    std::vector<std::pair<int, int>> candidates;
    for (int i = 1; i <= num_u; ++i)
        for (int j = 1; j <= num_v; ++j) candidates.emplace_back(i, j);
    for (size_t t = candidates.size(); t > 1; --t)
        std::swap(candidates[t - 1], candidates[static_cast<size_t>(rng.range(0, static_cast<int>(t) - 1))]);
    for (auto [i, j] : candidates) {
        const size_t a = static_cast<size_t>(i - 1);
        const size_t b = static_cast<size_t>(num_u + j - 1);
        if (dsu.same(a, b)) continue;
        if (!rng.chance(extra_edge_percent)) continue;
        dsu.unite(a, b);
        edges.push_back({i, j, rng.range(1, 3)});
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& x, const Edge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
    std::vector<DegreeList> u_lists, v_lists;
    for (int i = 0; i < num_u; ++i) u_lists.push_back(random_list(rng, 3, 6, false));
    for (int j = 0; j < num_v; ++j) v_lists.push_back(random_list(rng, 3, 6, false));
    return Instance(num_u, num_v, std::move(edges), std::move(u_lists), std::move(v_lists));
}

std::string random_egcc_model(Rng& rng, int num_vars, int num_vals) {
    std::vector<std::string> vals;
    for (int t = 0; t < num_vals; ++t) vals.push_back("val" + std::to_string(t + 1));
    std::string out = "{\n  \"variables\": {\n";
    for (int t = 0; t < num_vars; ++t) {
        std::set<int> dom;
        const int want = rng.range(1, std::min(3, num_vals));
        while (static_cast<int>(dom.size()) < want) dom.insert(rng.range(0, num_vals - 1));
        out += "    \"x" + std::to_string(t + 1) + "\": [";
        bool first = true;
        for (int d : dom) {
            if (!first) out += ", ";
            first = false;
            out += "\"" + vals[static_cast<size_t>(d)] + "\"";
        }
        out += "]";
        if (t + 1 < num_vars) out += ",";
        out += "\n";
    }
    out += "  },\n  \"cards\": {\n";
    std::vector<std::string> carded;
    for (const auto& v : vals)
        if (rng.chance(60)) carded.push_back(v);
    for (size_t t = 0; t < carded.size(); ++t) {
        std::set<int> allowed;
        const int want = rng.range(1, std::min(3, num_vars + 1));
        while (static_cast<int>(allowed.size()) < want) allowed.insert(rng.range(0, num_vars));
        out += "    \"" + carded[t] + "\": [";
        bool first = true;
        for (int c : allowed) {
            if (!first) out += ", ";
            first = false;
            out += std::to_string(c);
        }
        out += "]";
        if (t + 1 < carded.size()) out += ",";
        out += "\n";
    }
    out += "  }\n}\n";
    return out;
}

PartitionedGraph random_partitioned_graph(Rng& rng, int parts, int part_size, int edge_percent) {
    PartitionedGraph g = make_partitioned_graph(parts, part_size);
    for (int i = 1; i <= parts; ++i)
        for (int j = i + 1; j <= parts; ++j)
            for (int a = 1; a <= part_size; ++a)
                for (int b = 1; b <= part_size; ++b)
                    if (rng.chance(edge_percent)) g.add_edge(i, a, j, b);
    return g;
}

}  // namespace genfactor
