#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "hyperstar/graph.hpp"
#include "hyperstar/perm_group.hpp"

namespace hyperstar {

/// Cheap per-vertex data equal across an automorphism orbit; used only to
/// prune candidate images during the search.
struct VertexInvariant {
    int degree = 0;
    std::vector<int> neighbor_degrees;   // sorted multiset
    std::vector<int> distance_profile;   // BFS layer sizes by distance

    friend bool operator==(const VertexInvariant&, const VertexInvariant&) = default;
    friend auto operator<=>(const VertexInvariant&, const VertexInvariant&) = default;
};

std::vector<VertexInvariant> vertex_invariants(const HyperStarGraph& g);

/// Exact check that p maps the edge set onto itself.
bool is_automorphism(const HyperStarGraph& g, const VertexPerm& p);

/// Complete enumeration of the automorphisms fixing every listed vertex.
/// Backtracks over vertex images in BFS order, rejecting any partial map
/// that violates adjacency against the already-mapped vertices.
std::vector<VertexPerm> automorphisms_fixing(const HyperStarGraph& g,
                                             std::span<const int> fixed);

/// The full automorphism group, found by exhaustive backtracking: the
/// stabilizer of vertex 0 is enumerated completely, one coset representative
/// is searched per candidate image of vertex 0, and the resulting order is
/// cross-checked against orbit-stabilizer. Requires a connected graph with at
/// most 300 vertices.
PermGroup automorphism_group(const HyperStarGraph& g);

bool is_vertex_transitive(const HyperStarGraph& g, const PermGroup& aut);
bool is_edge_transitive(const HyperStarGraph& g, const PermGroup& aut);
/// One orbit on ordered adjacent pairs ("symmetric" in the vertex-transitive
/// case).
bool is_arc_transitive(const HyperStarGraph& g, const PermGroup& aut);

/// The subgroup of Aut fixing every vertex in `fixed_vertices` and every
/// neighbor of every vertex in `fixed_neighborhoods_of`, pointwise.
PermGroup pointwise_stabilizer(const HyperStarGraph& g,
                               std::span<const int> fixed_vertices,
                               std::span<const int> fixed_neighborhoods_of);

/// The group generated by the induced adjacent transpositions (i i+1),
/// 2 <= i <= 2k-1, together with complementation, acting on vertex ranks of
/// the regular graph; order 2(2k-1)!.
PermGroup structured_group(int k);

struct EqualityReport {
    int k = 0;
    std::uint64_t hs_aut_order = 0;
    std::uint64_t fhs_aut_order = 0;
    std::uint64_t structured_order = 0;
    bool groups_equal = false;
    bool hs_matches_structured = false;
    bool fhs_matches_structured = false;
};

/// Compares Aut(HS(2k,k)) and Aut(FHS(2k,k)), both computed by brute force,
/// against each other and against the structured group.
EqualityReport certify_equality(const HyperStarGraph& hs, const HyperStarGraph& fhs);

}  // namespace hyperstar
