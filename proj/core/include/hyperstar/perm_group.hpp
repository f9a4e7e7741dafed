#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "hyperstar/perm.hpp"

namespace hyperstar {

namespace detail {
struct StabChain;
}

/// A finitely generated permutation group on points [0, degree) with exact
/// order and membership backed by a stabilizer chain. Construction is
/// deterministic for a fixed generator list: base points are the smallest
/// points moved by the generators and Schreier generators are processed in a
/// fixed order. Immutable after construction; queries are const.
class PermGroup {
public:
    static PermGroup trivial(int degree);
    static PermGroup from_generators(int degree, std::vector<VertexPerm> gens);

    int degree() const noexcept { return degree_; }
    /// The deduplicated, non-identity input generators.
    const std::vector<VertexPerm>& generators() const noexcept { return gens_; }
    std::vector<int> base() const;

    std::uint64_t order() const noexcept { return order_; }
    bool contains(const VertexPerm& p) const;

    std::vector<int> orbit(int point) const;  // sorted
    std::vector<std::vector<int>> orbits() const;
    bool is_transitive() const;
    bool is_semiregular() const;
    bool is_regular() const;

    /// |G_p| via orbit-stabilizer; exact for any order.
    std::uint64_t stabilizer_order(int point) const;
    /// The stabilizer subgroup of a point, by rebasing the chain onto it.
    PermGroup point_stabilizer(int point) const;

    /// All elements, enumerated from the chain in deterministic order.
    std::vector<VertexPerm> elements(std::uint64_t cap = 1'000'000) const;

private:
    PermGroup(int degree, std::vector<VertexPerm> gens, std::vector<int> base_hint);

    int degree_;
    std::vector<VertexPerm> gens_;
    std::shared_ptr<const detail::StabChain> chain_;
    std::uint64_t order_;
};

/// Breadth-first closure of the generated set; the independent order oracle
/// for the stabilizer chain. Throws CapExceeded past `cap` elements.
std::vector<VertexPerm> closure_elements(int degree, std::span<const VertexPerm> gens,
                                         std::size_t cap = 100'000);

/// Same degree, same order, and each group's generators are members of the
/// other.
bool equal_groups(const PermGroup& g, const PermGroup& h);

/// N <= G and conjugation by every generator of G keeps N's generators in N.
bool is_normal(const PermGroup& n, const PermGroup& g);

/// The three conditions of an (internal) semidirect product: N normal in G,
/// N meet Q trivial, and |N||Q| = |G| so NQ = G.
bool verify_semidirect(const PermGroup& g, const PermGroup& n, const PermGroup& q);

enum class GroupKind { cyclic, dihedral, symmetric3, other };

std::string_view to_string(GroupKind kind);

struct SmallGroupId {
    GroupKind kind = GroupKind::other;
    std::uint64_t order = 0;
    /// cyclic: the order; dihedral: order 2m, the m of the rotation subgroup.
    std::uint64_t m = 0;
};

/// Coarse identification for small groups (order <= 10^4): cyclic iff some
/// element has full order; the nonabelian group of order 6 is Sym(3);
/// dihedral iff an index-2 cyclic subgroup is inverted by an involution.
SmallGroupId identify_small(const PermGroup& g);

}  // namespace hyperstar
