#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperstar/subsets.hpp"

namespace hyperstar {

/// A permutation of the ground set {1..n}.
class Permutation {
public:
    explicit Permutation(int n);  // identity
    /// image[i] is the image of element i+1; must be a bijection of {1..n}.
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n) { return Permutation(n); }
    static Permutation transposition(int n, int a, int b);
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int degree() const noexcept { return static_cast<int>(image_.size()); }
    int apply(int x) const;
    int operator()(int x) const { return apply(x); }
    VertexSet apply(const VertexSet& s) const;

    Permutation inverse() const;
    bool is_identity() const;
    bool fixes(int x) const { return apply(x) == x; }

    /// Disjoint-cycle form, e.g. "(2 3)(4 5)"; the identity prints "()".
    std::string cycle_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> image_;
};

/// compose(p, q) applies q first: (p*q)(x) = p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);

/// A permutation of vertex ranks [0, d); the element type of permutation
/// groups acting on a hyper-star graph.
class VertexPerm {
public:
    explicit VertexPerm(int degree);  // identity
    explicit VertexPerm(std::vector<int> images);

    static VertexPerm identity(int degree) { return VertexPerm(degree); }

    int degree() const noexcept { return static_cast<int>(images_.size()); }
    int operator[](int p) const { return images_[static_cast<std::size_t>(p)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    VertexPerm inverse() const;
    bool is_identity() const;
    int count_fixed_points() const;
    /// Order as a permutation (lcm of cycle lengths).
    std::uint64_t element_order() const;

    friend bool operator==(const VertexPerm&, const VertexPerm&) = default;
    friend auto operator<=>(const VertexPerm& a, const VertexPerm& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<int> images_;
};

VertexPerm compose(const VertexPerm& p, const VertexPerm& q);

struct VertexPermHash {
    std::size_t operator()(const VertexPerm& p) const noexcept;
};

/// The action induced on weight-k subsets by a ground-set permutation:
/// sigma applied elementwise. An automorphism of HS(n,k) when sigma fixes 1.
VertexPerm induced(const Permutation& sigma, int k);

/// Complementation v -> v^c on the vertices of HS(2k,k); an involution that
/// swaps the parts P1 and P2.
VertexPerm theta(int k);

/// An automorphism of the regular graph in canonical factored form: apply the
/// induced map of sigma (which fixes 1) first, then theta when flip is set.
struct StructuredAut {
    Permutation sigma;
    bool flip = false;
};

VertexPerm realize(const StructuredAut& a);
StructuredAut compose(const StructuredAut& a, const StructuredAut& b);

/// Inverts the factored form: reconstructs (sigma, flip) from a vertex
/// permutation of HS(2k,k), or nullopt when it is not of that form.
std::optional<StructuredAut> decompose(const VertexPerm& vp, int k);

}  // namespace hyperstar
