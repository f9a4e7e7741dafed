#include "hyperstar/perm.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "hyperstar/errors.hpp"

namespace hyperstar {

namespace {

constexpr std::uint64_t kActionSizeCap = std::uint64_t{1} << 22;

void check_bijection(const std::vector<int>& image, int lo) {
    const int n = static_cast<int>(image.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int y : image) {
        const int idx = y - lo;
        if (idx < 0 || idx >= n || seen[static_cast<std::size_t>(idx)])
            throw std::invalid_argument("image table is not a bijection");
        seen[static_cast<std::size_t>(idx)] = 1;
    }
}

int checked_vertex_degree(int k) {
    if (k < 1 || 2 * k > kMaxGroundSize)
        throw std::invalid_argument("k out of range: " + std::to_string(k));
    const std::uint64_t nv = binomial(2 * k, k);
    if (nv > kActionSizeCap)
        throw CapExceeded("vertex action on C(2k,k) = " + std::to_string(nv) +
                          " points exceeds the cap");
    return static_cast<int>(nv);
}

}  // namespace

Permutation::Permutation(int n) : image_(static_cast<std::size_t>(n)) {
    if (n < 1) throw std::invalid_argument("permutation degree must be positive");
    std::iota(image_.begin(), image_.end(), 1);
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    if (image_.empty()) throw std::invalid_argument("permutation degree must be positive");
    check_bijection(image_, 1);
}

Permutation Permutation::transposition(int n, int a, int b) {
    Permutation p(n);
    if (a < 1 || a > n || b < 1 || b > n || a == b)
        throw std::invalid_argument("bad transposition");
    std::swap(p.image_[static_cast<std::size_t>(a - 1)],
              p.image_[static_cast<std::size_t>(b - 1)]);
    return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Permutation p(n);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const int x = cyc[i];
            const int y = cyc[(i + 1) % cyc.size()];
            if (x < 1 || x > n) throw std::invalid_argument("cycle element out of range");
            p.image_[static_cast<std::size_t>(x - 1)] = y;
        }
    }
    check_bijection(p.image_, 1);
    return p;
}

int Permutation::apply(int x) const {
    if (x < 1 || x > degree())
        throw std::invalid_argument("element " + std::to_string(x) + " out of range");
    return image_[static_cast<std::size_t>(x - 1)];
}

VertexSet Permutation::apply(const VertexSet& s) const {
    if (s.ground_size() != degree())
        throw std::invalid_argument("subset ground size does not match permutation degree");
    std::uint64_t bits = 0;
    for (int x : s.elements())
        bits |= std::uint64_t{1} << (apply(x) - 1);
    return VertexSet(bits, s.ground_size());
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (int x = 1; x <= degree(); ++x)
        inv[static_cast<std::size_t>(image_[static_cast<std::size_t>(x - 1)] - 1)] = x;
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (int x = 1; x <= degree(); ++x)
        if (apply(x) != x) return false;
    return true;
}

std::string Permutation::cycle_string() const {
    std::string out;
    std::vector<char> seen(image_.size(), 0);
    for (int x = 1; x <= degree(); ++x) {
        if (seen[static_cast<std::size_t>(x - 1)] || apply(x) == x) continue;
        out += "(";
        int y = x;
        bool first = true;
        do {
            if (!first) out += " ";
            out += std::to_string(y);
            seen[static_cast<std::size_t>(y - 1)] = 1;
            y = apply(y);
            first = false;
        } while (y != x);
        out += ")";
    }
    return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("permutation degrees differ");
    std::vector<int> image(static_cast<std::size_t>(p.degree()));
    for (int x = 1; x <= p.degree(); ++x)
        image[static_cast<std::size_t>(x - 1)] = p.apply(q.apply(x));
    return Permutation(std::move(image));
}

VertexPerm::VertexPerm(int degree) : images_(static_cast<std::size_t>(degree)) {
    if (degree < 1) throw std::invalid_argument("vertex permutation degree must be positive");
    std::iota(images_.begin(), images_.end(), 0);
}

VertexPerm::VertexPerm(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty())
        throw std::invalid_argument("vertex permutation degree must be positive");
    check_bijection(images_, 0);
}

VertexPerm VertexPerm::inverse() const {
    std::vector<int> inv(images_.size());
    for (int p = 0; p < degree(); ++p)
        inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(p)])] = p;
    return VertexPerm(std::move(inv));
}

bool VertexPerm::is_identity() const {
    for (int p = 0; p < degree(); ++p)
        if ((*this)[p] != p) return false;
    return true;
}

int VertexPerm::count_fixed_points() const {
    int count = 0;
    for (int p = 0; p < degree(); ++p)
        if ((*this)[p] == p) ++count;
    return count;
}

std::uint64_t VertexPerm::element_order() const {
    std::uint64_t order = 1;
    std::vector<char> seen(images_.size(), 0);
    for (int p = 0; p < degree(); ++p) {
        if (seen[static_cast<std::size_t>(p)]) continue;
        std::uint64_t len = 0;
        int q = p;
        do {
            seen[static_cast<std::size_t>(q)] = 1;
            q = (*this)[q];
            ++len;
        } while (q != p);
        order = std::lcm(order, len);
    }
    return order;
}

VertexPerm compose(const VertexPerm& p, const VertexPerm& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("vertex permutation degrees differ");
    std::vector<int> images(static_cast<std::size_t>(p.degree()));
    for (int x = 0; x < p.degree(); ++x)
        images[static_cast<std::size_t>(x)] = p[q[x]];
    return VertexPerm(std::move(images));
}

std::size_t VertexPermHash::operator()(const VertexPerm& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.images()) {
        h ^= static_cast<std::size_t>(x);
        h *= 1099511628211ull;
    }
    return h;
}

VertexPerm induced(const Permutation& sigma, int k) {
    const int n = sigma.degree();
    if (k < 1 || k > n) throw std::invalid_argument("k out of range for induced action");
    const std::uint64_t nv = binomial(n, k);
    if (nv > kActionSizeCap)
        throw CapExceeded("vertex action on C(n,k) = " + std::to_string(nv) +
                          " points exceeds the cap");
    std::vector<int> images(static_cast<std::size_t>(nv));
    for (std::uint64_t r = 0; r < nv; ++r)
        images[static_cast<std::size_t>(r)] =
            static_cast<int>(subset_rank(sigma.apply(subset_unrank(r, n, k))));
    return VertexPerm(std::move(images));
}

VertexPerm theta(int k) {
    const int nv = checked_vertex_degree(k);
    const int n = 2 * k;
    std::vector<int> images(static_cast<std::size_t>(nv));
    for (int r = 0; r < nv; ++r)
        images[static_cast<std::size_t>(r)] = static_cast<int>(
            subset_rank(subset_unrank(static_cast<SubsetRank>(r), n, k).complement()));
    return VertexPerm(std::move(images));
}

VertexPerm realize(const StructuredAut& a) {
    const int n = a.sigma.degree();
    if (n % 2 != 0)
        throw std::invalid_argument("structured automorphisms need an even ground set");
    if (a.sigma.apply(1) != 1)
        throw std::invalid_argument("structured automorphism must fix the element 1");
    const int k = n / 2;
    VertexPerm v = induced(a.sigma, k);
    return a.flip ? compose(theta(k), v) : v;
}

StructuredAut compose(const StructuredAut& a, const StructuredAut& b) {
    // Complementation commutes with every induced map, so theta factors pull
    // to the outside and the flips add mod 2.
    return StructuredAut{compose(a.sigma, b.sigma),
                         static_cast<bool>(a.flip ^ b.flip)};
}

std::optional<StructuredAut> decompose(const VertexPerm& vp, int k) {
    const int nv = checked_vertex_degree(k);
    if (vp.degree() != nv) return std::nullopt;
    const int n = 2 * k;

    // The part behaviour fixes the theta factor: induced maps preserve P1,
    // theta swaps the parts.
    bool any_p1_to_p1 = false, any_p1_to_p2 = false;
    for (int r = 0; r < nv; ++r) {
        if (!subset_unrank(static_cast<SubsetRank>(r), n, k).contains(1)) continue;
        const bool image_in_p1 =
            subset_unrank(static_cast<SubsetRank>(vp[r]), n, k).contains(1);
        (image_in_p1 ? any_p1_to_p1 : any_p1_to_p2) = true;
        if (any_p1_to_p1 && any_p1_to_p2) return std::nullopt;
    }
    const bool flip = any_p1_to_p2;
    const VertexPerm alpha = flip ? compose(theta(k), vp) : vp;

    // Recover sigma(x) pointwise: two witness subsets meeting exactly in {x}
    // must have images meeting exactly in {sigma(x)}.
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) {
        std::vector<int> others;
        for (int y = 1; y <= n; ++y)
            if (y != x) others.push_back(y);
        std::vector<int> a_elems{x}, b_elems{x};
        a_elems.insert(a_elems.end(), others.begin(), others.begin() + (k - 1));
        b_elems.insert(b_elems.end(), others.begin() + (k - 1), others.begin() + 2 * (k - 1));
        const auto image_of = [&](const std::vector<int>& elems) {
            const VertexSet s = VertexSet::from_elements(elems, n);
            return subset_unrank(
                static_cast<SubsetRank>(alpha[static_cast<int>(subset_rank(s))]), n, k);
        };
        const std::uint64_t common = image_of(a_elems).mask() & image_of(b_elems).mask();
        if (std::popcount(common) != 1) return std::nullopt;
        image[static_cast<std::size_t>(x - 1)] = std::countr_zero(common) + 1;
    }

    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int y : image) {
        if (seen[static_cast<std::size_t>(y - 1)]) return std::nullopt;
        seen[static_cast<std::size_t>(y - 1)] = 1;
    }
    StructuredAut out{Permutation(std::move(image)), flip};
    if (out.sigma.apply(1) != 1) return std::nullopt;
    if (realize(out) != vp) return std::nullopt;
    return out;
}

}  // namespace hyperstar
