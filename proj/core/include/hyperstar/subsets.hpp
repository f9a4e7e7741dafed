#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyperstar {

/// Ground sets are {1..n} with n capped so a subset fits one 64-bit word.
inline constexpr int kMaxGroundSize = 62;

/// Exact C(n,k) for 0 <= n <= kMaxGroundSize; 0 outside the triangle.
/// All values in range fit in 64 bits (max is C(62,31)).
std::uint64_t binomial(int n, int k) noexcept;

/// A k-subset of {1..n}, stored as a bitmask: bit i-1 set iff element i is in
/// the set. The distinguished element of the adjacency rule is 1.
class VertexSet {
public:
    VertexSet(std::uint64_t bits, int n);

    static VertexSet from_elements(std::span<const int> elems, int n);
    static VertexSet from_elements(std::initializer_list<int> elems, int n);
    /// Parses the bitstring form, e.g. "111000" -> {1,2,3} over n=6.
    /// Position 0 of the string is element 1.
    static VertexSet from_bitstring(std::string_view s);
    /// Parses the subset text form: digits "123" when n <= 9,
    /// comma-separated "1,2,12" otherwise.
    static VertexSet from_label(std::string_view s, int n);

    int ground_size() const noexcept { return n_; }
    int weight() const noexcept;
    bool contains(int element) const;
    std::uint64_t mask() const noexcept { return bits_; }

    VertexSet complement() const noexcept;
    std::vector<int> elements() const;

    std::string bitstring() const;
    std::string label() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::uint64_t bits_;
    int n_;
};

/// Colexicographic index of a weight-k subset among all weight-k subsets:
/// {1..k} ranks 0, {n-k+1..n} ranks C(n,k)-1.
using SubsetRank = std::uint64_t;

SubsetRank subset_rank(const VertexSet& s);
VertexSet subset_unrank(SubsetRank r, int n, int k);

}  // namespace hyperstar
