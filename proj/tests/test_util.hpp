#pragma once

// Shared helpers for the test binaries: tiny independent reference
// implementations (no pruning, no shared code with the library internals)
// and the exhaustive unit-capacity instance family used across suites.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "genfactor/instance.hpp"

namespace testutil {

using genfactor::DegreeList;
using genfactor::Edge;
using genfactor::EdgeWeighting;
using genfactor::Instance;
using genfactor::Weight;

// Every valid factor, found by stepping an odometer over all
// prod(rho(e)+1) weightings and keeping the ones verify_factor accepts.
// Emitted in ascending edge-id-major order.
inline std::vector<EdgeWeighting> all_factors_odometer(const Instance& inst) {
    std::vector<EdgeWeighting> out;
    EdgeWeighting phi(static_cast<size_t>(inst.num_edges()), 0);
    while (true) {
        if (genfactor::verify_factor(inst, phi).ok) out.push_back(phi);
        int pos = inst.num_edges() - 1;
        while (pos >= 0 && phi[static_cast<size_t>(pos)] == inst.edge(pos).capacity) {
            phi[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++phi[static_cast<size_t>(pos)];
    }
    return out;
}

// All maximal acyclic edge subsets, by checking every one of the 2^m subsets:
// acyclic, and every excluded edge would close a cycle if added.
// Only usable for small m. Each subset is an ascending id list.
inline std::vector<std::vector<int>> all_maximal_forests_naive(const Instance& inst) {
    const int m = inst.num_edges();
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> ids;
        for (int e = 0; e < m; ++e)
            if (mask & (1u << e)) ids.push_back(e);
        if (!genfactor::edges_form_forest(inst, ids)) continue;
        bool maximal = true;
        for (int e = 0; e < m && maximal; ++e) {
            if (mask & (1u << e)) continue;
            std::vector<int> extended = ids;
            extended.insert(std::lower_bound(extended.begin(), extended.end(), e), e);
            if (genfactor::edges_form_forest(inst, extended)) maximal = false;
        }
        if (maximal) out.push_back(std::move(ids));
    }
    return out;
}

inline bool is_acyclic_factor(const Instance& inst, const EdgeWeighting& phi) {
    return genfactor::edges_form_forest(inst, genfactor::skeleton_edges(inst, phi));
}

inline bool is_fully_acyclic_factor(const Instance& inst, const EdgeWeighting& phi) {
    return genfactor::edges_form_forest(inst, genfactor::full_skeleton_edges(inst, phi));
}

// The exhaustive unit-capacity family: every bipartite graph with
// num_u <= max_u and num_v <= max_v, every left list in {{1},{2}} and every
// right list a subset of {0,1,2,3} (the empty subset included). Calls
// cb(inst) for each member. With max_u=3, max_v=2 this is 151135 instances.
template <typename Callback>
void for_each_exhaustive_instance(int max_u, int max_v, Callback&& cb) {
    for (int m = 0; m <= max_u; ++m) {
        for (int k = 0; k <= max_v; ++k) {
            const int slots = m * k;
            for (std::uint32_t edge_mask = 0; edge_mask < (1u << slots); ++edge_mask) {
                std::vector<Edge> edges;
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < k; ++j)
                        if (edge_mask & (1u << (i * k + j))) edges.push_back({i + 1, j + 1, 1});
                for (std::uint32_t u_mask = 0; u_mask < (1u << m); ++u_mask) {
                    std::vector<DegreeList> u_lists;
                    for (int i = 0; i < m; ++i)
                        u_lists.push_back((u_mask & (1u << i)) ? DegreeList{2} : DegreeList{1});
                    std::uint64_t v_code_count = 1;
                    for (int j = 0; j < k; ++j) v_code_count *= 16;
                    for (std::uint64_t v_code = 0; v_code < v_code_count; ++v_code) {
                        std::vector<DegreeList> v_lists;
                        std::uint64_t rest = v_code;
                        for (int j = 0; j < k; ++j) {
                            const std::uint64_t bits = rest % 16;
                            rest /= 16;
                            DegreeList list;
                            for (int d = 0; d < 4; ++d)
                                if (bits & (1u << d)) list.push_back(d);
                            v_lists.push_back(std::move(list));
                        }
                        cb(Instance(m, k, edges, u_lists, v_lists));
                    }
                }
            }
        }
    }
}

// Number of instances for_each_exhaustive_instance visits.
inline std::uint64_t exhaustive_family_size(int max_u, int max_v) {
    std::uint64_t total = 0;
    for (int m = 0; m <= max_u; ++m)
        for (int k = 0; k <= max_v; ++k) {
            std::uint64_t term = 1;
            for (int s = 0; s < m * k; ++s) term *= 2;
            for (int s = 0; s < m; ++s) term *= 2;
            for (int s = 0; s < k; ++s) term *= 16;
            total += term;
        }
    return total;
}

}  // namespace testutil
