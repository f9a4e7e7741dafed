#include "hyperstar/subsets.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace hyperstar {

namespace {

constexpr int kTableSize = kMaxGroundSize + 1;

using BinomialTable = std::array<std::array<std::uint64_t, kTableSize>, kTableSize>;

BinomialTable make_binomial_table() {
    BinomialTable c{};
    for (int n = 0; n < kTableSize; ++n) {
        c[n][0] = 1;
        for (int k = 1; k <= n; ++k)
            c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
    return c;
}

const BinomialTable& table() {
    static const BinomialTable t = make_binomial_table();
    return t;
}

void check_ground_size(int n) {
    if (n < 1 || n > kMaxGroundSize)
        throw std::invalid_argument("ground-set size must be in [1, " +
                                    std::to_string(kMaxGroundSize) + "], got " + std::to_string(n));
}

}  // namespace

std::uint64_t binomial(int n, int k) noexcept {
    if (n < 0 || n > kMaxGroundSize || k < 0 || k > n) return 0;
    return table()[n][k];
}

VertexSet::VertexSet(std::uint64_t bits, int n) : bits_(bits), n_(n) {
    check_ground_size(n);
    if (n < 64 && (bits >> n) != 0)
        throw std::invalid_argument("subset has bits outside the ground set {1.." +
                                    std::to_string(n) + "}");
}

VertexSet VertexSet::from_elements(std::span<const int> elems, int n) {
    check_ground_size(n);
    std::uint64_t bits = 0;
    for (int e : elems) {
        if (e < 1 || e > n)
            throw std::invalid_argument("element " + std::to_string(e) +
                                        " outside ground set {1.." + std::to_string(n) + "}");
        bits |= std::uint64_t{1} << (e - 1);
    }
    return VertexSet(bits, n);
}

VertexSet VertexSet::from_elements(std::initializer_list<int> elems, int n) {
    return from_elements(std::span<const int>(elems.begin(), elems.size()), n);
}

VertexSet VertexSet::from_bitstring(std::string_view s) {
    const int n = static_cast<int>(s.size());
    check_ground_size(n);
    std::uint64_t bits = 0;
    for (int i = 0; i < n; ++i) {
        if (s[i] == '1')
            bits |= std::uint64_t{1} << i;
        else if (s[i] != '0')
            throw std::invalid_argument("bitstring may contain only '0' and '1'");
    }
    return VertexSet(bits, n);
}

VertexSet VertexSet::from_label(std::string_view s, int n) {
    check_ground_size(n);
    std::vector<int> elems;
    if (n <= 9) {
        for (char ch : s) {
            if (ch < '1' || ch > '9')
                throw std::invalid_argument("label digit out of range: " + std::string(s));
            elems.push_back(ch - '0');
        }
    } else {
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t comma = s.find(',', pos);
            if (comma == std::string_view::npos) comma = s.size();
            int value = 0;
            auto piece = s.substr(pos, comma - pos);
            auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
            if (ec != std::errc{} || ptr != piece.data() + piece.size())
                throw std::invalid_argument("bad label element: " + std::string(piece));
            elems.push_back(value);
            pos = comma + 1;
        }
    }
    return from_elements(elems, n);
}

int VertexSet::weight() const noexcept { return std::popcount(bits_); }

bool VertexSet::contains(int element) const {
    if (element < 1 || element > n_)
        throw std::invalid_argument("element " + std::to_string(element) +
                                    " outside ground set {1.." + std::to_string(n_) + "}");
    return (bits_ >> (element - 1)) & 1;
}

VertexSet VertexSet::complement() const noexcept {
    const std::uint64_t full = (n_ == 64) ? ~std::uint64_t{0}
                                          : ((std::uint64_t{1} << n_) - 1);
    VertexSet out = *this;
    out.bits_ = full & ~bits_;
    return out;
}

std::vector<int> VertexSet::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(weight()));
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1)
        out.push_back(std::countr_zero(rest) + 1);
    return out;
}

std::string VertexSet::bitstring() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i)
        if ((bits_ >> i) & 1) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

std::string VertexSet::label() const {
    std::string out;
    bool first = true;
    for (int e : elements()) {
        if (n_ <= 9) {
            out += static_cast<char>('0' + e);
        } else {
            if (!first) out += ',';
            out += std::to_string(e);
        }
        first = false;
    }
    return out;
}

SubsetRank subset_rank(const VertexSet& s) {
    std::uint64_t r = 0;
    int i = 0;
    for (int e : s.elements()) {
        ++i;
        r += binomial(e - 1, i);
    }
    return r;
}

VertexSet subset_unrank(SubsetRank r, int n, int k) {
    check_ground_size(n);
    if (k < 0 || k > n)
        throw std::invalid_argument("subset weight " + std::to_string(k) +
                                    " out of range for n = " + std::to_string(n));
    if (r >= binomial(n, k))
        throw std::out_of_range("subset rank " + std::to_string(r) + " >= C(" +
                                std::to_string(n) + "," + std::to_string(k) + ")");
    std::uint64_t bits = 0;
    int c = n;
    for (int i = k; i >= 1; --i) {
        while (binomial(c - 1, i) > r) --c;
        bits |= std::uint64_t{1} << (c - 1);
        r -= binomial(c - 1, i);
    }
    return VertexSet(bits, n);
}

}  // namespace hyperstar
