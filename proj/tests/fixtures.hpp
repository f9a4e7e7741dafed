#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// deliberately avoid the library's algorithm paths: cuts are enumerated over
// vertex subsets, cycles by direct neighbor scans.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hyperstar/graph.hpp"
#include "hyperstar/subsets.hpp"

namespace fixtures {

// HS(6,3) drawn with 20 labeled vertices and these 30 edges.
inline std::vector<std::pair<std::string, std::string>> hs63_edges() {
    return {
        {"326", "126"}, {"326", "123"}, {"326", "136"}, {"126", "256"}, {"126", "642"},
        {"256", "156"}, {"256", "125"}, {"123", "423"}, {"123", "523"}, {"423", "142"},
        {"423", "143"}, {"156", "654"}, {"156", "356"}, {"142", "524"}, {"142", "642"},
        {"524", "154"}, {"524", "125"}, {"154", "654"}, {"154", "435"}, {"654", "164"},
        {"356", "136"}, {"356", "135"}, {"143", "436"}, {"143", "435"}, {"523", "125"},
        {"523", "135"}, {"436", "136"}, {"436", "164"}, {"642", "164"}, {"135", "435"},
    };
}

// HS(4,2): the 6-cycle 12-42-14-43-13-32.
inline std::vector<std::pair<std::string, std::string>> hs42_edges() {
    return {{"12", "42"}, {"12", "32"}, {"42", "14"}, {"14", "43"}, {"43", "13"}, {"32", "13"}};
}

// FHS(4,2): the 6-cycle plus the three complement chords (K_{3,3}).
inline std::vector<std::pair<std::string, std::string>> fhs42_edges() {
    return {{"32", "14"}, {"32", "13"}, {"32", "12"}, {"14", "43"}, {"14", "42"},
            {"43", "13"}, {"43", "12"}, {"13", "42"}, {"12", "42"}};
}

inline std::set<std::pair<int, int>> edge_set_from_labels(
    const hyperstar::HyperStarGraph& g,
    const std::vector<std::pair<std::string, std::string>>& labeled) {
    std::set<std::pair<int, int>> out;
    for (const auto& [a, b] : labeled) {
        int u = g.rank_of(hyperstar::VertexSet::from_label(a, g.n()));
        int w = g.rank_of(hyperstar::VertexSet::from_label(b, g.n()));
        if (u > w) std::swap(u, w);
        out.emplace(u, w);
    }
    return out;
}

inline std::set<std::pair<int, int>> edge_set(const hyperstar::HyperStarGraph& g) {
    return {g.edges().begin(), g.edges().end()};
}

inline std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

// Existence of a cycle with exactly `target` edges: DFS simple paths whose
// smallest vertex is the start, closing back to it.
inline bool has_cycle_of_length(const hyperstar::HyperStarGraph& g, int target) {
    const int nv = g.vertex_count();
    std::vector<char> used(static_cast<std::size_t>(nv), 0);
    for (int start = 0; start < nv; ++start) {
        used.assign(static_cast<std::size_t>(nv), 0);
        used[static_cast<std::size_t>(start)] = 1;
        auto dfs = [&](auto&& self, int u, int depth) -> bool {
            if (depth == target) return g.adjacent_ranks(u, start);
            for (int w : g.neighbors(u)) {
                if (w <= start || used[static_cast<std::size_t>(w)]) continue;
                used[static_cast<std::size_t>(w)] = 1;
                const bool found = self(self, w, depth + 1);
                used[static_cast<std::size_t>(w)] = 0;
                if (found) return true;
            }
            return false;
        };
        if (dfs(dfs, start, 1)) return true;
    }
    return false;
}

inline std::optional<int> girth_oracle(const hyperstar::HyperStarGraph& g, int max_len = 12) {
    for (int len = 3; len <= max_len; ++len)
        if (has_cycle_of_length(g, len)) return len;
    return std::nullopt;
}

// 4-cycles through an edge, counted by scanning the two neighborhoods.
inline int four_cycles_through_edge(const hyperstar::HyperStarGraph& g, int v, int w) {
    int count = 0;
    for (int x : g.neighbors(v)) {
        if (x == w) continue;
        for (int y : g.neighbors(w)) {
            if (y == v || y == x) continue;
            if (g.adjacent_ranks(x, y)) ++count;
        }
    }
    return count;
}

// 6-cycles containing the 3-path a-b-c-d, counted by scanning candidate pairs.
inline int six_cycles_through_3path(const hyperstar::HyperStarGraph& g, int a, int b, int c,
                                    int d) {
    int count = 0;
    for (int e : g.neighbors(d)) {
        if (e == a || e == b || e == c) continue;
        for (int f : g.neighbors(a)) {
            if (f == b || f == c || f == d || f == e) continue;
            if (g.adjacent_ranks(e, f)) ++count;
        }
    }
    return count;
}

// Global minimum edge cut by exhausting all vertex bipartitions (<= 20 or so
// vertices). The side containing vertex 0 is fixed to halve the work.
inline int min_cut_oracle(const hyperstar::HyperStarGraph& g) {
    const int nv = g.vertex_count();
    int best = static_cast<int>(g.edge_count());
    for (std::uint32_t side = 1; side < (1u << (nv - 1)); ++side) {
        const std::uint32_t mask = side << 1;  // vertex 0 stays on the other side
        int crossing = 0;
        for (const auto& [u, w] : g.edges())
            if (((mask >> u) & 1u) != ((mask >> w) & 1u)) ++crossing;
        best = std::min(best, crossing);
    }
    return best;
}

}  // namespace fixtures
