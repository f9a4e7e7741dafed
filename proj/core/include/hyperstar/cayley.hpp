#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperstar/graph.hpp"
#include "hyperstar/perm_group.hpp"

namespace hyperstar {

/// Arithmetic obstruction to a regular subgroup of Aut(HS(2k,k)): a regular
/// subgroup forces a subgroup of Sym({2..2k}) of order C(2k,k)/2 that acts
/// (k-2)-homogeneously, so C(2k-1,k-2) must divide C(2k,k)/2. The two
/// binomials have exact ratio (k+1)/(k-1), so the test is equivalent to
/// k-1 | k+1 and fails for every k >= 4.
struct FilterResult {
    int k = 0;
    std::uint64_t binomial_lhs = 0;  // C(2k-1, k-2)
    std::uint64_t binomial_rhs = 0;  // C(2k,k) / 2
    bool divides = false;
    bool k_condition = false;        // k-1 divides k+1
    bool passes = false;             // == divides; failure rules a regular subgroup out
};

FilterResult divisibility_filter(int k);  // requires k >= 3

/// k = 3 endgame: every order-2 permutation of {1..6} fixing 1 fixes some
/// vertex of HS(6,3), so no even-order subgroup of the part-preserving
/// elements acts semiregularly.
bool involution_fixed_vertex_check();

struct RegularSearch {
    std::vector<PermGroup> witnesses;  // regular subgroups found (up to the limit)
    bool exhausted = false;            // the full search tree was explored
};

/// Exhaustive backtracking over sharply-transitive element sets: one element
/// g_v per vertex with g_v(v0) = v, fixed-point-free off the identity, closed
/// under products (propagated eagerly). Every complete assignment is a
/// regular subgroup and every regular subgroup is reached exactly once.
RegularSearch search_regular_subgroups(const PermGroup& g, int num_vertices,
                                       std::size_t max_witnesses,
                                       std::uint64_t order_cap = 10'000);

std::optional<PermGroup> find_regular_subgroup(const PermGroup& g, int num_vertices,
                                               std::uint64_t order_cap = 10'000);

struct CayleyVerdict {
    bool cayley = false;
    /// Present unless the filter settled the verdict without a group search.
    std::optional<std::uint64_t> aut_order;
    std::optional<PermGroup> witness;
    std::optional<SmallGroupId> witness_id;
    std::optional<FilterResult> filter;
    /// How the verdict was certified: "witness", "exhaustive-search",
    /// "divisibility-filter", or "aut-not-transitive".
    std::string method;
};

/// Decides whether the graph is a Cayley graph: a witness regular subgroup of
/// the automorphism group, or a certificate that none exists. The arithmetic
/// filter answers the regular family for k >= 4 without a search; the
/// search handles the rest up to the order cap.
CayleyVerdict is_cayley(const HyperStarGraph& g, std::uint64_t order_cap = 10'000);

}  // namespace hyperstar
