#include "hyperstar/aut_search.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "hyperstar/errors.hpp"
#include "hyperstar/graph_algorithms.hpp"

namespace hyperstar {

namespace {

constexpr int kSearchVertexCap = 300;

// Fixed-capacity bitset covering kSearchVertexCap vertices.
struct VertexBits {
    std::array<std::uint64_t, (kSearchVertexCap + 63) / 64> words{};

    void set(int i) { words[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const {
        return (words[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1;
    }
    friend bool operator==(const VertexBits&, const VertexBits&) = default;
};

VertexBits masked_and(const VertexBits& a, const VertexBits& b) {
    VertexBits out;
    for (std::size_t i = 0; i < out.words.size(); ++i) out.words[i] = a.words[i] & b.words[i];
    return out;
}

struct SearchContext {
    const HyperStarGraph* graph = nullptr;
    int nv = 0;
    std::vector<VertexBits> adj_bits;
    std::vector<int> klass;                       // invariant class id per vertex
    std::vector<std::vector<int>> class_members;  // ascending
    std::vector<int> order;                       // BFS processing order from vertex 0
    std::vector<int> parent;                      // earlier-ordered BFS parent, -1 for the root
    std::vector<std::vector<int>> early;          // neighbors already mapped when a vertex is reached
};

SearchContext make_context(const HyperStarGraph& g) {
    const int nv = g.vertex_count();
    if (nv > kSearchVertexCap)
        throw CapExceeded("automorphism search supports at most " +
                          std::to_string(kSearchVertexCap) + " vertices, got " +
                          std::to_string(nv));
    if (!g.is_connected())
        throw std::invalid_argument("automorphism search requires a connected graph");

    SearchContext ctx;
    ctx.graph = &g;
    ctx.nv = nv;
    ctx.adj_bits.resize(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v)
        for (int w : g.neighbors(v)) ctx.adj_bits[static_cast<std::size_t>(v)].set(w);

    const auto invariants = vertex_invariants(g);
    std::map<VertexInvariant, int> ids;
    for (const auto& inv : invariants) ids.emplace(inv, 0);
    int next = 0;
    for (auto& [inv, id] : ids) id = next++;
    ctx.klass.resize(static_cast<std::size_t>(nv));
    ctx.class_members.resize(ids.size());
    for (int v = 0; v < nv; ++v) {
        ctx.klass[static_cast<std::size_t>(v)] = ids.at(invariants[static_cast<std::size_t>(v)]);
        ctx.class_members[static_cast<std::size_t>(ctx.klass[static_cast<std::size_t>(v)])]
            .push_back(v);
    }

    ctx.parent.assign(static_cast<std::size_t>(nv), -1);
    std::vector<int> pos(static_cast<std::size_t>(nv), -1);
    std::deque<int> queue{0};
    pos[0] = 0;
    ctx.order.push_back(0);
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (pos[static_cast<std::size_t>(w)] >= 0) continue;
            pos[static_cast<std::size_t>(w)] = static_cast<int>(ctx.order.size());
            ctx.parent[static_cast<std::size_t>(w)] = u;
            ctx.order.push_back(w);
            queue.push_back(w);
        }
    }
    ctx.early.resize(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v)
        for (int w : g.neighbors(v))
            if (pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(v)])
                ctx.early[static_cast<std::size_t>(v)].push_back(w);
    return ctx;
}

// Depth-first enumeration of adjacency-consistent complete maps. `forced`
// pins images (-1 = free). Invariant classes restrict candidates; a partial
// map survives iff the images of the already-mapped neighbors of u are
// exactly the mapped neighbors of its image. Returns false if the callback
// asked to stop.
template <typename Callback>
bool enumerate_automorphisms(const SearchContext& ctx, std::span<const int> forced,
                             Callback&& emit) {
    std::vector<int> img(static_cast<std::size_t>(ctx.nv), -1);
    VertexBits used;

    auto dfs = [&](auto&& self, int level) -> bool {
        if (level == ctx.nv) return emit(img);
        const int u = ctx.order[static_cast<std::size_t>(level)];
        const int cls = ctx.klass[static_cast<std::size_t>(u)];

        VertexBits mapped_image;
        for (int w : ctx.early[static_cast<std::size_t>(u)])
            mapped_image.set(img[static_cast<std::size_t>(w)]);

        auto try_candidate = [&](int c) -> bool {
            if (used.test(c) || ctx.klass[static_cast<std::size_t>(c)] != cls) return true;
            if (masked_and(ctx.adj_bits[static_cast<std::size_t>(c)], used) != mapped_image)
                return true;
            img[static_cast<std::size_t>(u)] = c;
            used.set(c);
            const bool keep_going = self(self, level + 1);
            used.reset(c);
            img[static_cast<std::size_t>(u)] = -1;
            return keep_going;
        };

        if (forced[static_cast<std::size_t>(u)] >= 0)
            return try_candidate(forced[static_cast<std::size_t>(u)]);
        const int p = ctx.parent[static_cast<std::size_t>(u)];
        const auto& candidates = p >= 0
            ? ctx.graph->neighbors(img[static_cast<std::size_t>(p)])
            : ctx.class_members[static_cast<std::size_t>(cls)];
        for (int c : candidates)
            if (!try_candidate(c)) return false;
        return true;
    };
    return dfs(dfs, 0);
}

// Grow a generating set by keeping only elements that enlarge the group.
struct GeneratorHarvest {
    int degree;
    std::vector<VertexPerm> gens;
    PermGroup group = PermGroup::trivial(1);

    explicit GeneratorHarvest(int degree_) : degree(degree_), group(PermGroup::trivial(degree_)) {}

    void offer(const VertexPerm& p) {
        if (p.is_identity() || group.contains(p)) return;
        gens.push_back(p);
        group = PermGroup::from_generators(degree, gens);
    }
};

}  // namespace

std::vector<VertexInvariant> vertex_invariants(const HyperStarGraph& g) {
    const int nv = g.vertex_count();
    std::vector<VertexInvariant> out(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v) {
        VertexInvariant& inv = out[static_cast<std::size_t>(v)];
        inv.degree = g.degree(v);
        for (int w : g.neighbors(v)) inv.neighbor_degrees.push_back(g.degree(w));
        std::sort(inv.neighbor_degrees.begin(), inv.neighbor_degrees.end());
        const auto dist = graphalg::bfs_distances(g.adjacency(), v);
        int reach = 0;
        for (int d : dist) reach = std::max(reach, d);
        inv.distance_profile.assign(static_cast<std::size_t>(reach) + 1, 0);
        for (int d : dist)
            if (d >= 0) ++inv.distance_profile[static_cast<std::size_t>(d)];
    }
    return out;
}

bool is_automorphism(const HyperStarGraph& g, const VertexPerm& p) {
    if (p.degree() != g.vertex_count()) return false;
    for (const auto& [u, w] : g.edges())
        if (!g.adjacent_ranks(p[u], p[w])) return false;
    return true;
}

std::vector<VertexPerm> automorphisms_fixing(const HyperStarGraph& g,
                                             std::span<const int> fixed) {
    const SearchContext ctx = make_context(g);
    std::vector<int> forced(static_cast<std::size_t>(ctx.nv), -1);
    for (int v : fixed) {
        if (v < 0 || v >= ctx.nv)
            throw std::invalid_argument("fixed vertex out of range");
        forced[static_cast<std::size_t>(v)] = v;
    }
    std::vector<VertexPerm> out;
    enumerate_automorphisms(ctx, forced, [&](const std::vector<int>& img) {
        out.push_back(VertexPerm(img));
        return true;
    });
    return out;
}

PermGroup automorphism_group(const HyperStarGraph& g) {
    const SearchContext ctx = make_context(g);
    const int nv = ctx.nv;

    // Full stabilizer of vertex 0.
    std::vector<int> forced(static_cast<std::size_t>(nv), -1);
    forced[0] = 0;
    std::vector<VertexPerm> stab_elements;
    enumerate_automorphisms(ctx, forced, [&](const std::vector<int>& img) {
        stab_elements.push_back(VertexPerm(img));
        return true;
    });

    GeneratorHarvest harvest(nv);
    for (const VertexPerm& e : stab_elements) harvest.offer(e);

    // One coset representative per attainable image of vertex 0.
    std::uint64_t orbit_size = 1;
    for (int c : ctx.class_members[static_cast<std::size_t>(ctx.klass[0])]) {
        if (c == 0) continue;
        forced[0] = c;
        bool found = false;
        enumerate_automorphisms(ctx, forced, [&](const std::vector<int>& img) {
            harvest.offer(VertexPerm(img));
            found = true;
            return false;  // first representative suffices
        });
        if (found) ++orbit_size;
    }

    std::sort(harvest.gens.begin(), harvest.gens.end());
    PermGroup group = PermGroup::from_generators(nv, harvest.gens);
    const std::uint64_t expected = stab_elements.size() * orbit_size;
    if (group.order() != expected)
        throw std::logic_error("automorphism search inconsistency: chain order " +
                               std::to_string(group.order()) + " vs orbit-stabilizer " +
                               std::to_string(expected));
    return group;
}

bool is_vertex_transitive(const HyperStarGraph& g, const PermGroup& aut) {
    return static_cast<int>(aut.orbit(0).size()) == g.vertex_count();
}

namespace {

// Orbit closure on edges or arcs under the group generators.
bool single_pair_orbit(const HyperStarGraph& g, const PermGroup& aut, bool ordered) {
    const int nv = g.vertex_count();
    std::vector<int> index(static_cast<std::size_t>(nv) * static_cast<std::size_t>(nv), -1);
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [u, w] : g.edges()) {
        index[static_cast<std::size_t>(u) * static_cast<std::size_t>(nv) +
              static_cast<std::size_t>(w)] = static_cast<int>(pairs.size());
        pairs.emplace_back(u, w);
        if (ordered) {
            index[static_cast<std::size_t>(w) * static_cast<std::size_t>(nv) +
                  static_cast<std::size_t>(u)] = static_cast<int>(pairs.size());
            pairs.emplace_back(w, u);
        } else {
            index[static_cast<std::size_t>(w) * static_cast<std::size_t>(nv) +
                  static_cast<std::size_t>(u)] = static_cast<int>(pairs.size()) - 1;
        }
    }
    if (pairs.empty()) return true;

    std::vector<char> seen(pairs.size(), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    std::size_t visited = 1;
    while (!queue.empty()) {
        const auto [u, w] = pairs[static_cast<std::size_t>(queue.front())];
        queue.pop_front();
        for (const VertexPerm& s : aut.generators()) {
            const int idx = index[static_cast<std::size_t>(s[u]) * static_cast<std::size_t>(nv) +
                                  static_cast<std::size_t>(s[w])];
            if (idx < 0)
                throw std::logic_error("group generator is not an automorphism of the graph");
            if (!seen[static_cast<std::size_t>(idx)]) {
                seen[static_cast<std::size_t>(idx)] = 1;
                ++visited;
                queue.push_back(idx);
            }
        }
    }
    return visited == pairs.size();
}

}  // namespace

bool is_edge_transitive(const HyperStarGraph& g, const PermGroup& aut) {
    return single_pair_orbit(g, aut, /*ordered=*/false);
}

bool is_arc_transitive(const HyperStarGraph& g, const PermGroup& aut) {
    return single_pair_orbit(g, aut, /*ordered=*/true);
}

PermGroup pointwise_stabilizer(const HyperStarGraph& g,
                               std::span<const int> fixed_vertices,
                               std::span<const int> fixed_neighborhoods_of) {
    std::vector<int> fixed(fixed_vertices.begin(), fixed_vertices.end());
    for (int v : fixed_neighborhoods_of)
        for (int w : g.neighbors(v)) fixed.push_back(w);
    std::sort(fixed.begin(), fixed.end());
    fixed.erase(std::unique(fixed.begin(), fixed.end()), fixed.end());

    GeneratorHarvest harvest(g.vertex_count());
    for (const VertexPerm& e : automorphisms_fixing(g, fixed)) harvest.offer(e);
    std::sort(harvest.gens.begin(), harvest.gens.end());
    return PermGroup::from_generators(g.vertex_count(), harvest.gens);
}

PermGroup structured_group(int k) {
    if (k < 2) throw std::invalid_argument("structured group needs k >= 2");
    const int n = 2 * k;
    std::vector<VertexPerm> gens;
    for (int i = 2; i <= n - 1; ++i)
        gens.push_back(induced(Permutation::transposition(n, i, i + 1), k));
    gens.push_back(theta(k));
    return PermGroup::from_generators(static_cast<int>(binomial(n, k)), std::move(gens));
}

EqualityReport certify_equality(const HyperStarGraph& hs, const HyperStarGraph& fhs) {
    if (hs.folded() || !fhs.folded())
        throw std::invalid_argument("certify_equality expects (unfolded, folded) graphs");
    if (hs.n() != fhs.n() || hs.k() != fhs.k() || hs.n() != 2 * hs.k())
        throw std::invalid_argument("certify_equality expects matching regular parameters");

    const PermGroup aut_hs = automorphism_group(hs);
    const PermGroup aut_fhs = automorphism_group(fhs);
    const PermGroup structured = structured_group(hs.k());

    EqualityReport report;
    report.k = hs.k();
    report.hs_aut_order = aut_hs.order();
    report.fhs_aut_order = aut_fhs.order();
    report.structured_order = structured.order();
    report.groups_equal = equal_groups(aut_hs, aut_fhs);
    report.hs_matches_structured = equal_groups(aut_hs, structured);
    report.fhs_matches_structured = equal_groups(aut_fhs, structured);
    return report;
}

}  // namespace hyperstar
