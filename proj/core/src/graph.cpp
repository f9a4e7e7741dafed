#include "hyperstar/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "hyperstar/errors.hpp"

namespace hyperstar {

namespace {

constexpr std::uint64_t kBuildVertexCap = std::uint64_t{1} << 22;

}  // namespace

bool adjacent(const VertexSet& v, const VertexSet& w, bool folded) {
    if (v.ground_size() != w.ground_size())
        throw std::invalid_argument("vertices live over different ground sets");
    if (v.weight() != w.weight())
        throw std::invalid_argument("vertex weights differ: " + std::to_string(v.weight()) +
                                    " vs " + std::to_string(w.weight()));
    if (folded && v.ground_size() != 2 * v.weight())
        throw std::invalid_argument("folded adjacency requires n = 2k");
    const bool one_in_v = v.contains(1);
    const bool one_in_w = w.contains(1);
    if (std::popcount(v.mask() & w.mask()) == v.weight() - 1 && one_in_v != one_in_w)
        return true;
    return folded && w == v.complement();
}

HyperStarGraph HyperStarGraph::build(int n, int k, bool folded) {
    if (n < 3) throw std::invalid_argument("need n >= 3, got n = " + std::to_string(n));
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("need 1 <= k <= n-1, got k = " + std::to_string(k));
    if (folded && n != 2 * k)
        throw std::invalid_argument("folded graph requires n = 2k");
    const std::uint64_t nv64 = binomial(n, k);
    if (nv64 > kBuildVertexCap)
        throw CapExceeded("C(" + std::to_string(n) + "," + std::to_string(k) +
                          ") = " + std::to_string(nv64) + " vertices exceeds the build cap");
    const int nv = static_cast<int>(nv64);

    HyperStarGraph g;
    g.n_ = n;
    g.k_ = k;
    g.folded_ = folded;
    g.adj_.resize(static_cast<std::size_t>(nv));
    g.part1_.resize(static_cast<std::size_t>(nv));

    for (int r = 0; r < nv; ++r) {
        const VertexSet v = subset_unrank(static_cast<SubsetRank>(r), n, k);
        g.part1_[static_cast<std::size_t>(r)] = v.contains(1) ? 1 : 0;
        auto& nb = g.adj_[static_cast<std::size_t>(r)];
        const std::uint64_t bits = v.mask();
        if (v.contains(1)) {
            // exchange 1 for any absent element
            const std::uint64_t base = bits & ~std::uint64_t{1};
            for (int y = 2; y <= n; ++y) {
                const std::uint64_t ybit = std::uint64_t{1} << (y - 1);
                if (bits & ybit) continue;
                nb.push_back(static_cast<int>(subset_rank(VertexSet(base | ybit, n))));
            }
        } else {
            // bring 1 in for any present element
            for (int x : v.elements()) {
                const std::uint64_t xbit = std::uint64_t{1} << (x - 1);
                nb.push_back(static_cast<int>(subset_rank(VertexSet((bits & ~xbit) | 1, n))));
            }
        }
        if (folded)
            nb.push_back(static_cast<int>(subset_rank(v.complement())));
        std::sort(nb.begin(), nb.end());
    }

    for (int u = 0; u < nv; ++u)
        for (int w : g.adj_[static_cast<std::size_t>(u)])
            if (u < w) g.edges_.emplace_back(u, w);
    return g;
}

const std::vector<int>& HyperStarGraph::neighbors(int v) const {
    if (v < 0 || v >= vertex_count())
        throw std::invalid_argument("vertex rank " + std::to_string(v) + " out of range");
    return adj_[static_cast<std::size_t>(v)];
}

int HyperStarGraph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool HyperStarGraph::adjacent_ranks(int u, int v) const {
    const auto& nb = neighbors(u);
    if (v < 0 || v >= vertex_count())
        throw std::invalid_argument("vertex rank " + std::to_string(v) + " out of range");
    return std::binary_search(nb.begin(), nb.end(), v);
}

VertexSet HyperStarGraph::vertex(int rank) const {
    if (rank < 0 || rank >= vertex_count())
        throw std::invalid_argument("vertex rank " + std::to_string(rank) + " out of range");
    return subset_unrank(static_cast<SubsetRank>(rank), n_, k_);
}

int HyperStarGraph::rank_of(const VertexSet& s) const {
    if (s.ground_size() != n_ || s.weight() != k_)
        throw std::invalid_argument("subset does not match graph parameters (n,k)");
    return static_cast<int>(subset_rank(s));
}

std::string HyperStarGraph::vertex_label(int rank) const { return vertex(rank).label(); }

bool HyperStarGraph::in_part1(int v) const {
    if (v < 0 || v >= vertex_count())
        throw std::invalid_argument("vertex rank " + std::to_string(v) + " out of range");
    return part1_[static_cast<std::size_t>(v)] != 0;
}

std::pair<std::vector<int>, std::vector<int>> HyperStarGraph::bipartition() const {
    std::pair<std::vector<int>, std::vector<int>> parts;
    for (int v = 0; v < vertex_count(); ++v)
        (in_part1(v) ? parts.first : parts.second).push_back(v);
    return parts;
}

int HyperStarGraph::complement_rank(int v) const {
    if (n_ != 2 * k_)
        throw std::invalid_argument("complement vertex requires n = 2k");
    return static_cast<int>(subset_rank(vertex(v).complement()));
}

bool HyperStarGraph::is_complement_edge(int u, int v) const {
    return n_ == 2 * k_ && complement_rank(u) == v;
}

std::string HyperStarGraph::to_dot() const {
    std::string out = "graph ";
    out += folded_ ? "FHS" : "HS";
    out += "_" + std::to_string(n_) + "_" + std::to_string(k_) + " {\n";
    for (int v = 0; v < vertex_count(); ++v)
        out += "  \"" + vertex_label(v) + "\";\n";
    for (const auto& [u, w] : edges_)
        out += "  \"" + vertex_label(u) + "\" -- \"" + vertex_label(w) + "\";\n";
    out += "}\n";
    return out;
}

std::string HyperStarGraph::to_edge_list() const {
    std::string out;
    for (const auto& [u, w] : edges_)
        out += vertex_label(u) + " " + vertex_label(w) + "\n";
    return out;
}

}  // namespace hyperstar
