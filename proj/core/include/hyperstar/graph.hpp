#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperstar/graph_algorithms.hpp"
#include "hyperstar/subsets.hpp"

namespace hyperstar {

/// True iff {v,w} is an edge: |v cap w| = k-1 with 1 in exactly one of the
/// two (exchange rule), or, in the folded graph, w is the complement of v.
bool adjacent(const VertexSet& v, const VertexSet& w, bool folded = false);

/// A path given by vertex ranks; consecutive entries adjacent, all distinct.
using PathSpec = std::vector<int>;

/// The hyper-star graph HS(n,k) on all weight-k subsets of {1..n}, plus the
/// folded variant FHS(2k,k) that joins every vertex to its complement.
/// Vertices are indexed by colexicographic subset rank. Immutable after
/// build(); all queries are const and safe to share across threads.
class HyperStarGraph {
public:
    static HyperStarGraph build(int n, int k, bool folded);

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    bool folded() const noexcept { return folded_; }
    int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const graphalg::AdjacencyList& adjacency() const noexcept { return adj_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool adjacent_ranks(int u, int v) const;
    /// Canonical edge list: pairs (u,v) with u < v, sorted.
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

    VertexSet vertex(int rank) const;
    int rank_of(const VertexSet& s) const;
    std::string vertex_label(int rank) const;

    /// Part P1 holds the vertices containing the element 1.
    bool in_part1(int v) const;
    std::pair<std::vector<int>, std::vector<int>> bipartition() const;

    /// Rank of the complement vertex; requires n = 2k so weights match.
    int complement_rank(int v) const;
    bool is_complement_edge(int u, int v) const;

    bool is_connected() const { return graphalg::is_connected(adj_); }
    std::optional<int> girth() const { return graphalg::girth(adj_); }
    std::optional<int> diameter() const { return graphalg::diameter(adj_); }
    int edge_connectivity() const { return graphalg::edge_connectivity(adj_); }
    std::uint64_t cycles_through_path(std::span<const int> path, int length) const {
        return graphalg::count_cycles_through_path(adj_, path, length);
    }

    /// Deterministic exports with subset labels ("123" style).
    std::string to_dot() const;
    std::string to_edge_list() const;

private:
    HyperStarGraph() = default;

    int n_ = 0;
    int k_ = 0;
    bool folded_ = false;
    graphalg::AdjacencyList adj_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<char> part1_;
};

}  // namespace hyperstar
