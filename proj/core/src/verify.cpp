#include "hyperstar/verify.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperstar/aut_search.hpp"
#include "hyperstar/cayley.hpp"
#include "hyperstar/graph.hpp"
#include "hyperstar/perm.hpp"
#include "hyperstar/perm_group.hpp"

namespace hyperstar {

namespace {

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::string graph_name(int k, bool folded) {
    return std::string(folded ? "FHS(" : "HS(") + std::to_string(2 * k) + "," +
           std::to_string(k) + ")";
}

struct Checker {
    std::vector<CheckResult> results;

    void add(std::string name, bool pass, std::string detail = {}) {
        results.push_back({std::move(name), pass, std::move(detail)});
    }

    void expect_u64(std::string name, std::uint64_t measured, std::uint64_t expected) {
        add(std::move(name), measured == expected,
            "measured " + std::to_string(measured) + ", expected " + std::to_string(expected));
    }

    void expect_true(std::string name, bool measured, std::string detail = {}) {
        add(std::move(name), measured, std::move(detail));
    }
};

// All 3-paths a-b-c-d, each undirected path once.
template <typename Fn>
void for_each_3path(const HyperStarGraph& g, Fn&& fn) {
    for (const auto& [b, c] : g.edges()) {
        for (const auto& [x, y] : std::array<std::pair<int, int>, 2>{{{b, c}, {c, b}}}) {
            for (int a : g.neighbors(x)) {
                if (a == y) continue;
                for (int d : g.neighbors(y)) {
                    if (d == x || d == a || a > d) continue;
                    fn(std::array<int, 4>{a, x, y, d});
                }
            }
        }
    }
}

// Complement-anchored 3-paths u-w-v-v^c of the folded graph, u != w^c.
template <typename Fn>
void for_each_complement_anchored_3path(const HyperStarGraph& fhs, Fn&& fn) {
    for (int v = 0; v < fhs.vertex_count(); ++v) {
        const int vc = fhs.complement_rank(v);
        for (int w : fhs.neighbors(v)) {
            if (w == vc) continue;
            const int wc = fhs.complement_rank(w);
            for (int u : fhs.neighbors(w)) {
                if (u == v || u == wc || u == vc) continue;
                fn(std::array<int, 4>{u, w, v, vc});
            }
        }
    }
}

void check_metrics(Checker& out, int k, const HyperStarGraph& hs, const HyperStarGraph& fhs) {
    const std::string hsn = graph_name(k, false);
    const std::string fhsn = graph_name(k, true);
    const std::uint64_t nv = binomial(2 * k, k);

    out.expect_u64("Sec 1 vertex count " + hsn + " = C(2k,k)",
                   static_cast<std::uint64_t>(hs.vertex_count()), nv);
    out.expect_u64("Sec 1 edge count " + hsn + " = k C(2k,k)/2",
                   static_cast<std::uint64_t>(hs.edge_count()),
                   static_cast<std::uint64_t>(k) * nv / 2);
    out.expect_u64("Sec 3 edge count " + fhsn + " adds C(2k,k)/2 complement edges",
                   static_cast<std::uint64_t>(fhs.edge_count()),
                   static_cast<std::uint64_t>(k) * nv / 2 + nv / 2);

    bool degree_rule = true;
    for (int v = 0; v < hs.vertex_count(); ++v)
        if (hs.degree(v) != k) degree_rule = false;
    out.expect_true("Sec 1 " + hsn + " regular of degree k", degree_rule,
                    "every vertex has degree " + std::to_string(k));
    bool folded_degree = true;
    for (int v = 0; v < fhs.vertex_count(); ++v)
        if (fhs.degree(v) != k + 1) folded_degree = false;
    out.expect_true("Sec 3 " + fhsn + " regular of degree k+1", folded_degree,
                    "every vertex has degree " + std::to_string(k + 1));

    const auto [p1, p2] = hs.bipartition();
    const std::uint64_t half = binomial(2 * k - 1, k - 1);
    out.add("Lemma 2.1 bipartition |P1| = |P2| = C(2k-1,k-1) in " + hsn,
            p1.size() == half && p2.size() == half,
            "|P1| = " + std::to_string(p1.size()) + ", |P2| = " + std::to_string(p2.size()));
    bool crossing = true;
    for (const auto& [u, w] : fhs.edges())
        if (fhs.in_part1(u) == fhs.in_part1(w)) crossing = false;
    out.expect_true("Lemma 2.1 / Sec 3 every edge crosses P1-P2 (" + fhsn + ")", crossing);

    const auto hs_girth = hs.girth();
    out.expect_u64("Remark girth(" + hsn + ") = 6",
                   hs_girth ? static_cast<std::uint64_t>(*hs_girth) : 0, 6);
    const auto fhs_girth = fhs.girth();
    out.expect_u64("Sec 3 girth(" + fhsn + ") = 4",
                   fhs_girth ? static_cast<std::uint64_t>(*fhs_girth) : 0, 4);

    const auto hs_diam = hs.diameter();
    out.expect_u64("Sec 3 diameter(" + hsn + ") = 2k-1",
                   hs_diam ? static_cast<std::uint64_t>(*hs_diam) : 0,
                   static_cast<std::uint64_t>(2 * k - 1));
    const auto fhs_diam = fhs.diameter();
    out.expect_u64("Sec 3 diameter(" + fhsn + ") = k",
                   fhs_diam ? static_cast<std::uint64_t>(*fhs_diam) : 0,
                   static_cast<std::uint64_t>(k));

    out.expect_u64("Sec 3 edge connectivity(" + fhsn + ") = k+1 (maximum)",
                   static_cast<std::uint64_t>(fhs.edge_connectivity()),
                   static_cast<std::uint64_t>(k + 1));
}

void check_cycles(Checker& out, int k, const HyperStarGraph& hs, const HyperStarGraph& fhs) {
    const std::string hsn = graph_name(k, false);
    const std::string fhsn = graph_name(k, true);

    std::uint64_t paths = 0;
    bool unique6 = true;
    for_each_3path(hs, [&](const std::array<int, 4>& p) {
        ++paths;
        if (hs.cycles_through_path(p, 6) != 1) unique6 = false;
    });
    out.expect_true("Thm 2.4 every 3-path of " + hsn + " lies in exactly one 6-cycle",
                    unique6, std::to_string(paths) + " paths checked");

    // The folded 4- and 6-cycle counts are k >= 3 facts; FHS(4,2) is the
    // complete bipartite K_{3,3}, where every edge lies in four 4-cycles.
    if (k < 3) return;

    bool unique4 = true;
    bool complement4_is_k = true;
    for (const auto& [u, w] : fhs.edges()) {
        const std::array<int, 2> edge{u, w};
        const std::uint64_t c = fhs.cycles_through_path(edge, 4);
        if (fhs.is_complement_edge(u, w)) {
            if (c != static_cast<std::uint64_t>(k)) complement4_is_k = false;
        } else if (c != 1) {
            unique4 = false;
        }
    }
    out.expect_true("Sec 3 every non-complement edge of " + fhsn +
                        " lies in exactly one 4-cycle",
                    unique4);
    out.expect_true("Sec 3 every complement edge of " + fhsn + " lies in k 4-cycles",
                    complement4_is_k, "expected " + std::to_string(k) + " per edge");

    // The complement-anchored count collapses to 1 only once the plain graph
    // is too wide for a geodesic detour: at k = 3 the distance from v to v^c
    // is five, so each such path closes into three 6-cycles, not one.
    const std::uint64_t expected6 = (k == 3) ? 3 : 1;
    std::uint64_t anchored = 0;
    bool anchored_ok = true;
    for_each_complement_anchored_3path(fhs, [&](const std::array<int, 4>& p) {
        ++anchored;
        if (fhs.cycles_through_path(p, 6) != expected6) anchored_ok = false;
    });
    out.expect_true("Sec 3 complement-anchored 3-paths of " + fhsn + " lie in " +
                        std::to_string(expected6) + " 6-cycle(s)",
                    anchored_ok,
                    std::to_string(anchored) + " paths checked; uniqueness holds for k >= 4");
}

void check_transitivity(Checker& out, int k, const HyperStarGraph& hs,
                        const HyperStarGraph& fhs, const PermGroup& aut_hs,
                        const PermGroup& aut_fhs) {
    const std::string hsn = graph_name(k, false);
    const std::string fhsn = graph_name(k, true);

    out.expect_true("Lemma 2.1 " + hsn + " is vertex transitive",
                    is_vertex_transitive(hs, aut_hs));
    out.expect_true("Thm 2.2 " + hsn + " is symmetric (edge and arc transitive)",
                    is_edge_transitive(hs, aut_hs) && is_arc_transitive(hs, aut_hs));
    out.expect_true("Sec 3 " + fhsn + " is vertex transitive",
                    is_vertex_transitive(fhs, aut_fhs));

    if (k == 3) {
        const bool arc = is_arc_transitive(fhs, aut_fhs);
        // G_v fixes the complement neighbor, so N(v) splits into two orbits.
        bool complement_fixed = true;
        bool rest_one_orbit = true;
        const int v = 0;
        const PermGroup stab = aut_fhs.point_stabilizer(v);
        const int vc = fhs.complement_rank(v);
        if (stab.orbit(vc) != std::vector<int>{vc}) complement_fixed = false;
        std::vector<int> rest;
        for (int w : fhs.neighbors(v))
            if (w != vc) rest.push_back(w);
        const auto orb = stab.orbit(rest.front());
        for (int w : rest)
            if (!std::binary_search(orb.begin(), orb.end(), w)) rest_one_orbit = false;
        out.expect_true(
            "Thm 3.1 " + fhsn + " is not arc transitive; G_v fixes the complement neighbor",
            !arc && complement_fixed && rest_one_orbit,
            "orbits on N(v): {v^c} and the k plain neighbors");
    }
}

void check_aut(Checker& out, int k, const HyperStarGraph& hs, const HyperStarGraph& fhs,
               const PermGroup& aut_hs, const PermGroup& aut_fhs) {
    const std::string hsn = graph_name(k, false);
    const std::string fhsn = graph_name(k, true);
    const int n = 2 * k;
    const std::uint64_t expected_order = 2 * factorial(2 * k - 1);

    out.expect_u64("Thm 2.4 |Aut(" + hsn + ")| = 2(2k-1)!", aut_hs.order(), expected_order);

    std::vector<VertexPerm> n_gens;
    for (int i = 2; i <= n - 1; ++i)
        n_gens.push_back(induced(Permutation::transposition(n, i, i + 1), k));
    const PermGroup group_n = PermGroup::from_generators(hs.vertex_count(), n_gens);
    const PermGroup group_q =
        PermGroup::from_generators(hs.vertex_count(), {theta(k)});
    out.expect_u64("Thm 2.4 |N| = (2k-1)! (induced maps fixing 1)", group_n.order(),
                   factorial(2 * k - 1));
    out.expect_true("Thm 2.4 Aut(" + hsn + ") is the semidirect product of N by Q",
                    verify_semidirect(aut_hs, group_n, group_q),
                    "N normal, N meet Q = 1, |N||Q| = |G|");
    out.expect_true("Lemma 2.1 theta is not an induced map (swaps the parts)",
                    !group_n.contains(theta(k)));

    // N's orbits are exactly the parts P1 and P2.
    const auto orbits = group_n.orbits();
    const auto [p1, p2] = hs.bipartition();
    const bool parts_match =
        orbits.size() == 2 &&
        ((orbits[0] == p1 && orbits[1] == p2) || (orbits[0] == p2 && orbits[1] == p1));
    out.expect_true("Lemma 2.1 orbits of N are the parts P1 and P2", parts_match);

    bool conj_in_n = true;
    const VertexPerm th = theta(k);
    for (const VertexPerm& x : group_n.generators())
        if (!group_n.contains(compose(th, compose(x, th)))) conj_in_n = false;
    out.expect_true("Thm 2.4 theta normalizes N (conjugates stay induced)", conj_in_n);

    const PermGroup structured = structured_group(k);
    out.expect_true("Thm 2.4 structured group N.Q equals the brute-force group (" + hsn + ")",
                    equal_groups(structured, aut_hs),
                    "both of order " + std::to_string(structured.order()));

    if (k == 2) {
        out.expect_u64("Sec 3 |Aut(FHS(4,2))| = 72 (complete bipartite K_{3,3})",
                       aut_fhs.order(), 72);
        out.expect_true("Sec 3 k = 2 exception: Aut(HS(4,2)) differs from Aut(FHS(4,2))",
                        !equal_groups(aut_hs, aut_fhs),
                        "orders 12 vs 72");
        const SmallGroupId id = identify_small(aut_hs);
        out.expect_true("Sec 3 Aut(HS(4,2)) is the dihedral group of order 12",
                        id.kind == GroupKind::dihedral && id.order == 12,
                        std::string("identified ") + std::string(to_string(id.kind)) +
                            " of order " + std::to_string(id.order));
    } else {
        out.expect_true("Thm 3.1 Aut(" + fhsn + ") = Aut(" + hsn + ")",
                        equal_groups(aut_hs, aut_fhs),
                        "both of order " + std::to_string(aut_fhs.order()));
    }

    if (aut_hs.order() <= 20'000) {
        bool all_decompose = true;
        std::uint64_t count = 0;
        for (const VertexPerm& e : aut_hs.elements()) {
            const auto fact = decompose(e, k);
            if (!fact || realize(*fact) != e) {
                all_decompose = false;
                break;
            }
            ++count;
        }
        out.expect_true("Thm 2.4 every Aut element factors as theta^i alpha (G = NQ, " +
                            hsn + ")",
                        all_decompose, std::to_string(count) + " elements decomposed");
    }

    if (k == 3) {
        bool hs_rigid = true;
        for (const auto& [u, w] : hs.edges()) {
            const std::array<int, 2> pair{u, w};
            if (pointwise_stabilizer(hs, pair, pair).order() != 1) hs_rigid = false;
        }
        out.expect_true("Thm 2.4 L_{v,w} = 1 for every edge of " + hsn, hs_rigid,
                        std::to_string(hs.edge_count()) + " edges checked");

        bool fhs_rigid = true;
        for (const auto& [u, w] : fhs.edges()) {
            if (fhs.is_complement_edge(u, w)) continue;
            const std::array<int, 2> pair{u, w};
            if (pointwise_stabilizer(fhs, pair, pair).order() != 1) fhs_rigid = false;
        }
        out.expect_true("Thm 3.1 L_{v,w} = 1 for every non-complement edge of " + fhsn,
                        fhs_rigid);

        for (const HyperStarGraph* g : {&hs, &fhs}) {
            bool bound_holds = true;
            const PermGroup& aut = g->folded() ? aut_fhs : aut_hs;
            for (int v = 0; v < g->vertex_count(); ++v) {
                const std::uint64_t stab_order = aut.stabilizer_order(v);
                for (int w : g->neighbors(v)) {
                    const std::array<int, 2> pair{v, w};
                    const std::uint64_t lvw = pointwise_stabilizer(*g, pair, pair).order();
                    const std::uint64_t bound =
                        factorial(g->degree(v)) * factorial(g->degree(w) - 1) * lvw;
                    if (stab_order > bound) bound_holds = false;
                }
            }
            out.expect_true("Lemma 2.3 |G_v| <= b!(m-1)!|L_vw| at every vertex of " +
                                graph_name(k, g->folded()),
                            bound_holds);
        }

        // Corrected neighborhood-subgraph separation: B = N(v) u N(v^c) minus
        // the pair carries k edges, while D = N(v) u N(w) minus the pair
        // carries exactly one (the complement pair), so no automorphism fixing
        // v can move v^c onto a plain neighbor.
        bool separation = true;
        for (int v = 0; v < fhs.vertex_count(); ++v) {
            if (!fhs.in_part1(v)) continue;
            const int vc = fhs.complement_rank(v);
            const auto induced_edges = [&](int a, int b) {
                std::vector<int> verts;
                for (int x : fhs.neighbors(a))
                    if (x != a && x != b) verts.push_back(x);
                for (int x : fhs.neighbors(b))
                    if (x != a && x != b &&
                        std::find(verts.begin(), verts.end(), x) == verts.end())
                        verts.push_back(x);
                int count = 0;
                for (std::size_t i = 0; i < verts.size(); ++i)
                    for (std::size_t j = i + 1; j < verts.size(); ++j)
                        if (fhs.adjacent_ranks(verts[i], verts[j])) ++count;
                return count;
            };
            if (induced_edges(v, vc) != k) separation = false;
            for (int w : fhs.neighbors(v)) {
                if (w == vc) continue;
                if (induced_edges(v, w) != 1) separation = false;
            }
        }
        out.expect_true(
            "Thm 3.1 neighborhood subgraphs separate v^c from plain neighbors (" + fhsn + ")",
            separation, "k edges around the complement pair, 1 otherwise");
    }
}

void check_cayley(Checker& out, int k, const HyperStarGraph& hs, const HyperStarGraph& fhs,
                  const PermGroup& aut_hs, const PermGroup& aut_fhs,
                  std::uint64_t order_cap) {
    const std::string hsn = graph_name(k, false);
    const std::string fhsn = graph_name(k, true);

    if (k == 2) {
        auto hs_result = search_regular_subgroups(aut_hs, hs.vertex_count(), 64, order_cap);
        bool has_cyclic6 = false;
        for (const PermGroup& r : hs_result.witnesses) {
            const auto id = identify_small(r);
            if (id.kind == GroupKind::cyclic && id.order == 6) has_cyclic6 = true;
        }
        out.expect_true("Sec 3 HS(4,2) is the Cayley graph of the cyclic group of order 6",
                        !hs_result.witnesses.empty() && has_cyclic6,
                        std::to_string(hs_result.witnesses.size()) + " regular subgroups");

        auto fhs_result =
            search_regular_subgroups(aut_fhs, fhs.vertex_count(), 64, order_cap);
        bool has_sym3 = false;
        for (const PermGroup& r : fhs_result.witnesses) {
            const auto id = identify_small(r);
            if (id.kind == GroupKind::symmetric3) has_sym3 = true;
        }
        out.expect_true("Sec 3 FHS(4,2) is the Cayley graph of Sym(3)",
                        !fhs_result.witnesses.empty() && has_sym3,
                        std::to_string(fhs_result.witnesses.size()) + " regular subgroups");

        // Any regular subgroup splits evenly into part-preserving and
        // part-swapping elements.
        bool split_ok = true;
        for (const auto& result : {hs_result, fhs_result}) {
            for (const PermGroup& r : result.witnesses) {
                int preserving = 0;
                for (const VertexPerm& e : r.elements())
                    if (hs.in_part1(e[0]) == hs.in_part1(0)) ++preserving;
                if (preserving * 2 != static_cast<int>(r.order())) split_ok = false;
            }
        }
        out.expect_true("Thm 3.2 regular subgroups split evenly across the parts", split_ok,
                        "|M1| = |M2| = |R|/2 on every witness");
        return;
    }

    const FilterResult filter = divisibility_filter(k);
    if (k == 3) {
        out.expect_true("Thm 3.2 divisibility filter is inconclusive at k = 3",
                        filter.passes,
                        std::to_string(filter.binomial_lhs) + " divides " +
                            std::to_string(filter.binomial_rhs));
        out.expect_true("Thm 3.2 every involution of Sym(6) fixing 1 fixes a vertex",
                        involution_fixed_vertex_check());

        const auto hs_verdict = is_cayley(hs, order_cap);
        const auto fhs_verdict = is_cayley(fhs, order_cap);
        out.expect_true("Thm 3.2 " + hsn + " is not a Cayley graph (exhaustive search)",
                        !hs_verdict.cayley && hs_verdict.method == "exhaustive-search");
        out.expect_true("Thm 3.2 " + fhsn + " is not a Cayley graph (matches " + hsn + ")",
                        !fhs_verdict.cayley && fhs_verdict.cayley == hs_verdict.cayley);
    } else {
        out.expect_true("Thm 3.2 divisibility filter fails at k = " + std::to_string(k),
                        !filter.passes,
                        std::to_string(filter.binomial_lhs) + " does not divide " +
                            std::to_string(filter.binomial_rhs));
        const auto hs_verdict = is_cayley(hs, order_cap);
        const auto fhs_verdict = is_cayley(fhs, order_cap);
        out.expect_true("Thm 3.2 " + hsn + " and " + fhsn + " are not Cayley graphs",
                        !hs_verdict.cayley && !fhs_verdict.cayley,
                        "certified by the arithmetic filter");
    }
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    Checker out;
    if (options.k_min < 2 || options.k_max < options.k_min)
        throw std::invalid_argument("verification needs 2 <= k_min <= k_max");

    for (int k = options.k_min; k <= options.k_max && k <= 4; ++k) {
        const HyperStarGraph hs = HyperStarGraph::build(2 * k, k, false);
        const HyperStarGraph fhs = HyperStarGraph::build(2 * k, k, true);

        if (has(options.checks, CheckSet::metrics)) check_metrics(out, k, hs, fhs);
        if (has(options.checks, CheckSet::cycles)) check_cycles(out, k, hs, fhs);

        const bool needs_groups = has(options.checks, CheckSet::transitivity) ||
                                  has(options.checks, CheckSet::aut) ||
                                  has(options.checks, CheckSet::cayley);
        if (!needs_groups) continue;
        const PermGroup aut_hs = automorphism_group(hs);
        const PermGroup aut_fhs = automorphism_group(fhs);

        if (has(options.checks, CheckSet::transitivity))
            check_transitivity(out, k, hs, fhs, aut_hs, aut_fhs);
        if (has(options.checks, CheckSet::aut))
            check_aut(out, k, hs, fhs, aut_hs, aut_fhs);
        if (has(options.checks, CheckSet::cayley))
            check_cayley(out, k, hs, fhs, aut_hs, aut_fhs, options.group_order_cap);
    }

    if (options.enable_k5 && options.k_max >= 5 && has(options.checks, CheckSet::aut)) {
        const HyperStarGraph hs5 = HyperStarGraph::build(10, 5, false);
        const PermGroup aut5 = automorphism_group(hs5);
        out.expect_u64("Thm 2.4 |Aut(HS(10,5))| = 2(9!)", aut5.order(), 725760);
        out.expect_true("Thm 2.4 structured group equals the brute-force group (HS(10,5))",
                        equal_groups(aut5, structured_group(5)));
    }

    if (has(options.checks, CheckSet::cayley)) {
        bool only_small_k = true;
        for (int k = 3; k <= 10; ++k)
            if (divisibility_filter(k).passes != (k <= 3)) only_small_k = false;
        out.expect_true("Thm 3.2 divisibility filter passes only for k = 3 (checked 3..10)",
                        only_small_k);
    }

    return out.results;
}

}  // namespace hyperstar
