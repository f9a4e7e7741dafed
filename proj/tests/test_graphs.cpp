#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <set>
#include <stdexcept>
#include <string>

#include "fixtures.hpp"
#include "hyperstar/errors.hpp"
#include "hyperstar/graph.hpp"
#include "hyperstar/graph_algorithms.hpp"

using namespace hyperstar;

namespace {

// The defining rule on bitstrings: exchange the first symbol with a differing
// symbol in another position.
bool string_rule_adjacent(const std::string& a, const std::string& b) {
    if (a.size() != b.size() || a[0] == b[0]) return false;
    std::string swapped = a;
    for (std::size_t i = 1; i < a.size(); ++i) {
        if (a[i] == a[0]) continue;
        std::swap(swapped[0], swapped[i]);
        if (swapped == b) return true;
        std::swap(swapped[0], swapped[i]);
    }
    return false;
}

}  // namespace

TEST_CASE("adjacency rule") {
    const int n = 6;
    CHECK(adjacent(VertexSet::from_elements({1, 2, 3}, n),
                   VertexSet::from_elements({4, 2, 3}, n)));
    CHECK(!adjacent(VertexSet::from_elements({2, 3, 4}, n),
                    VertexSet::from_elements({2, 3, 5}, n)));
    CHECK(adjacent(VertexSet::from_elements({1, 2, 3}, n),
                   VertexSet::from_elements({4, 5, 6}, n), /*folded=*/true));
    CHECK(!adjacent(VertexSet::from_elements({1, 2, 3}, n),
                    VertexSet::from_elements({4, 5, 6}, n)));

    CHECK_THROWS_AS(adjacent(VertexSet::from_elements({1, 2}, 6),
                             VertexSet::from_elements({1, 2, 3}, 6)),
                    std::invalid_argument);
    CHECK_THROWS_AS(adjacent(VertexSet::from_elements({1, 2}, 5),
                             VertexSet::from_elements({3, 4}, 5), /*folded=*/true),
                    std::invalid_argument);
}

TEST_CASE("subset rule matches the bitstring exchange rule (n <= 8)") {
    for (int n = 3; n <= 8; ++n) {
        for (int k = 1; k <= n - 1; ++k) {
            const std::uint64_t count = binomial(n, k);
            for (std::uint64_t r = 0; r < count; ++r) {
                for (std::uint64_t s = 0; s < count; ++s) {
                    const VertexSet v = subset_unrank(r, n, k);
                    const VertexSet w = subset_unrank(s, n, k);
                    CHECK(adjacent(v, w) == string_rule_adjacent(v.bitstring(), w.bitstring()));
                }
            }
        }
    }
}

TEST_CASE("build HS(4,2) is the 6-cycle") {
    const auto g = HyperStarGraph::build(4, 2, false);
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 6);
    for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 2);
    CHECK(g.is_connected());
    CHECK(g.girth() == 6);
    CHECK(g.diameter() == 3);
    CHECK(g.edge_connectivity() == 2);
}

TEST_CASE("build HS(5,2) degree rule") {
    const auto g = HyperStarGraph::build(5, 2, false);
    CHECK(g.vertex_count() == 10);
    int deg3 = 0, deg2 = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.in_part1(v)) {
            CHECK(g.degree(v) == 3);  // n - k
            ++deg3;
        } else {
            CHECK(g.degree(v) == 2);  // k
            ++deg2;
        }
    }
    CHECK(deg3 == 4);
    CHECK(deg2 == 6);
}

TEST_CASE("build FHS(6,3)") {
    const auto g = HyperStarGraph::build(6, 3, true);
    CHECK(g.vertex_count() == 20);
    CHECK(g.edge_count() == 40);
    for (int v = 0; v < 20; ++v) CHECK(g.degree(v) == 4);
}

TEST_CASE("degree rule holds for every build with n <= 10") {
    for (int n = 3; n <= 10; ++n) {
        for (int k = 1; k <= n - 1; ++k) {
            const auto g = HyperStarGraph::build(n, k, false);
            for (int v = 0; v < g.vertex_count(); ++v)
                CHECK(g.degree(v) == (g.in_part1(v) ? n - k : k));
        }
    }
}

TEST_CASE("neighborhood subgraphs around a vertex pair (k = 3)") {
    // B = N(v) u N(v^c) minus the pair induces k edges; replacing v^c by a
    // plain neighbor w leaves exactly one edge (the complement pair v^c,w^c).
    const auto fhs = HyperStarGraph::build(6, 3, true);
    const auto induced_edge_count = [&](int a, int b) {
        std::set<int> verts;
        for (int x : fhs.neighbors(a))
            if (x != a && x != b) verts.insert(x);
        for (int x : fhs.neighbors(b))
            if (x != a && x != b) verts.insert(x);
        int count = 0;
        for (int x : verts)
            for (int y : verts)
                if (x < y && fhs.adjacent_ranks(x, y)) ++count;
        return count;
    };
    for (int v = 0; v < fhs.vertex_count(); ++v) {
        if (!fhs.in_part1(v)) continue;
        const int vc = fhs.complement_rank(v);
        CHECK(induced_edge_count(v, vc) == 3);
        for (int w : fhs.neighbors(v)) {
            if (w == vc) continue;
            CHECK(induced_edge_count(v, w) == 1);
        }
    }
}

TEST_CASE("build parameter guards") {
    CHECK_THROWS_AS(HyperStarGraph::build(2, 1, false), std::invalid_argument);
    CHECK_THROWS_AS(HyperStarGraph::build(6, 0, false), std::invalid_argument);
    CHECK_THROWS_AS(HyperStarGraph::build(6, 6, false), std::invalid_argument);
    CHECK_THROWS_AS(HyperStarGraph::build(5, 2, true), std::invalid_argument);
    CHECK_THROWS_AS(HyperStarGraph::build(62, 31, false), CapExceeded);
}

TEST_CASE("figure fixtures pin the edge sets") {
    const auto hs63 = HyperStarGraph::build(6, 3, false);
    CHECK(fixtures::edge_set(hs63) == fixtures::edge_set_from_labels(hs63, fixtures::hs63_edges()));

    const auto hs42 = HyperStarGraph::build(4, 2, false);
    CHECK(fixtures::edge_set(hs42) == fixtures::edge_set_from_labels(hs42, fixtures::hs42_edges()));

    const auto fhs42 = HyperStarGraph::build(4, 2, true);
    CHECK(fixtures::edge_set(fhs42) ==
          fixtures::edge_set_from_labels(fhs42, fixtures::fhs42_edges()));
}

TEST_CASE("FHS(4,2) is complete bipartite") {
    const auto g = HyperStarGraph::build(4, 2, true);
    const auto [p1, p2] = g.bipartition();
    CHECK(p1.size() == 3);
    CHECK(p2.size() == 3);
    for (int u : p1)
        for (int w : p2) CHECK(g.adjacent_ranks(u, w));
}

TEST_CASE("bipartition") {
    const auto hs = HyperStarGraph::build(6, 3, false);
    const auto [p1, p2] = hs.bipartition();
    CHECK(p1.size() == 10);
    CHECK(p2.size() == 10);
    for (const auto& [u, w] : hs.edges()) CHECK(hs.in_part1(u) != hs.in_part1(w));

    const auto fhs = HyperStarGraph::build(6, 3, true);
    for (const auto& [u, w] : fhs.edges()) CHECK(fhs.in_part1(u) != fhs.in_part1(w));
}

TEST_CASE("girth and diameter") {
    const auto hs63 = HyperStarGraph::build(6, 3, false);
    const auto fhs63 = HyperStarGraph::build(6, 3, true);
    CHECK(hs63.girth() == 6);
    CHECK(fhs63.girth() == 4);
    CHECK(hs63.diameter() == 5);
    CHECK(fhs63.diameter() == 3);
    CHECK(HyperStarGraph::build(8, 4, true).diameter() == 4);

    // HS(4,3) is a star: acyclic, diameter 2.
    const auto star = HyperStarGraph::build(4, 3, false);
    CHECK(!star.girth().has_value());
    CHECK(star.diameter() == 2);
}

TEST_CASE("girth agrees with the enumeration oracle") {
    for (const auto& [n, k, folded] : std::vector<std::array<int, 3>>{
             {4, 2, 0}, {6, 3, 0}, {6, 3, 1}, {5, 2, 0}, {8, 4, 0}}) {
        const auto g = HyperStarGraph::build(n, k, folded != 0);
        CHECK(g.girth() == fixtures::girth_oracle(g));
    }
}

TEST_CASE("no 4-cycles in the plain regular graphs") {
    for (int k : {2, 3, 4}) {
        const auto g = HyperStarGraph::build(2 * k, k, false);
        CHECK(!fixtures::has_cycle_of_length(g, 4));
        CHECK(!fixtures::has_cycle_of_length(g, 3));
        CHECK(!fixtures::has_cycle_of_length(g, 5));
    }
}

TEST_CASE("degenerate metric inputs") {
    // hand-built adjacency: two isolated edges -> disconnected, acyclic
    graphalg::AdjacencyList adj{{1}, {0}, {3}, {2}};
    CHECK(!graphalg::is_connected(adj));
    CHECK(!graphalg::diameter(adj).has_value());
    CHECK(!graphalg::girth(adj).has_value());
    CHECK(graphalg::edge_connectivity(adj) == 0);
}

TEST_CASE("cycles through paths") {
    const auto hs = HyperStarGraph::build(6, 3, false);

    // every 3-path lies in exactly one 6-cycle; oracle agrees
    int paths = 0;
    for (const auto& [b, c] : hs.edges()) {
        for (const auto& [x, y] : std::vector<std::pair<int, int>>{{b, c}, {c, b}}) {
            for (int a : hs.neighbors(x)) {
                if (a == y) continue;
                for (int d : hs.neighbors(y)) {
                    if (d == x || d == a || a > d) continue;
                    ++paths;
                    const std::array<int, 4> p{a, x, y, d};
                    CHECK(hs.cycles_through_path(p, 6) == 1);
                    CHECK(fixtures::six_cycles_through_3path(hs, a, x, y, d) == 1);
                }
            }
        }
    }
    CHECK(paths == 120);

    const auto fhs = HyperStarGraph::build(6, 3, true);
    for (const auto& [u, w] : fhs.edges()) {
        const std::array<int, 2> edge{u, w};
        const auto counted = fhs.cycles_through_path(edge, 4);
        CHECK(counted == static_cast<std::uint64_t>(fixtures::four_cycles_through_edge(fhs, u, w)));
        CHECK(counted == (fhs.is_complement_edge(u, w) ? 3u : 1u));
    }
}

TEST_CASE("cycles_through_path validation") {
    const auto g = HyperStarGraph::build(4, 2, false);
    const auto& e = g.edges().front();
    CHECK_THROWS_AS(g.cycles_through_path(std::array<int, 2>{e.first, e.first}, 4),
                    std::invalid_argument);  // repeated vertex
    CHECK_THROWS_AS(g.cycles_through_path(std::array<int, 2>{e.first, e.second}, 0),
                    std::invalid_argument);  // shorter than the path
    int non_neighbor = -1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (v != e.first && !g.adjacent_ranks(e.first, v)) non_neighbor = v;
    CHECK_THROWS_AS(g.cycles_through_path(std::array<int, 2>{e.first, non_neighbor}, 4),
                    std::invalid_argument);  // not a path
    // single-vertex path: cycles through a vertex
    CHECK(g.cycles_through_path(std::array<int, 1>{0}, 6) == 1);  // C6 itself
    CHECK(g.cycles_through_path(std::array<int, 1>{0}, 5) == 0);
}

TEST_CASE("edge connectivity matches the exhaustive cut oracle") {
    for (const auto& [n, k, folded] : std::vector<std::array<int, 3>>{
             {4, 2, 0}, {4, 2, 1}, {6, 3, 0}, {6, 3, 1}, {5, 2, 0}}) {
        const auto g = HyperStarGraph::build(n, k, folded != 0);
        REQUIRE(g.vertex_count() <= 20);
        CHECK(g.edge_connectivity() == fixtures::min_cut_oracle(g));
    }
    CHECK(HyperStarGraph::build(6, 3, true).edge_connectivity() == 4);
    CHECK(HyperStarGraph::build(6, 3, false).edge_connectivity() == 3);
    CHECK(HyperStarGraph::build(4, 2, false).edge_connectivity() == 2);
}

TEST_CASE("exports are deterministic and labeled") {
    const auto g = HyperStarGraph::build(6, 3, false);
    const auto again = HyperStarGraph::build(6, 3, false);
    CHECK(g.to_dot() == again.to_dot());
    CHECK(g.to_edge_list() == again.to_edge_list());

    const std::string edge_list = g.to_edge_list();
    CHECK(std::count(edge_list.begin(), edge_list.end(), '\n') == 30);
    CHECK(g.to_dot().find("\"123\" -- \"234\";") != std::string::npos);  // elements ascending
}
