#include "hyperstar/report.hpp"

#include <array>
#include <utility>

namespace hyperstar {

Json graph_params_json(const HyperStarGraph& g) {
    return Json{{"n", g.n()}, {"k", g.k()}, {"folded", g.folded()}};
}

Json metrics_report(const HyperStarGraph& g) {
    Json out = graph_params_json(g);
    out["vertices"] = g.vertex_count();
    out["edges"] = g.edge_count();
    const auto gi = g.girth();
    out["girth"] = gi ? Json(*gi) : Json(nullptr);
    const auto di = g.diameter();
    out["diameter"] = di ? Json(*di) : Json(nullptr);
    out["edge_connectivity"] = g.edge_connectivity();
    const auto [p1, p2] = g.bipartition();
    out["bipartition_sizes"] = Json::array({p1.size(), p2.size()});
    return out;
}

Json group_report(const PermGroup& g) {
    Json out;
    out["degree"] = g.degree();
    out["order"] = g.order();
    out["n_generators"] = g.generators().size();
    out["transitive"] = g.is_transitive();
    out["semiregular"] = g.is_semiregular();
    out["regular"] = g.is_regular();
    Json sizes = Json::array();
    for (const auto& orbit : g.orbits()) sizes.push_back(orbit.size());
    out["orbits"] = std::move(sizes);
    return out;
}

Json aut_report(const HyperStarGraph& g, const PermGroup& aut, bool with_rigidity) {
    Json out;
    out["graph"] = graph_params_json(g);
    out["aut_order"] = aut.order();
    out["vertex_transitive"] = is_vertex_transitive(g, aut);
    out["edge_transitive"] = is_edge_transitive(g, aut);
    out["arc_transitive"] = is_arc_transitive(g, aut);
    if (g.n() == 2 * g.k() && g.k() >= 2) {
        const PermGroup structured = structured_group(g.k());
        out["structured_order"] = structured.order();
        out["groups_equal"] = equal_groups(aut, structured);
    } else {
        out["structured_order"] = nullptr;
        out["groups_equal"] = nullptr;
    }
    if (with_rigidity) {
        bool trivial = true;
        for (const auto& [u, w] : g.edges()) {
            if (g.folded() && g.is_complement_edge(u, w)) continue;
            const std::array<int, 2> pair{u, w};
            if (pointwise_stabilizer(g, pair, pair).order() != 1) {
                trivial = false;
                break;
            }
        }
        out["L_vw_trivial"] = trivial;
    } else {
        out["L_vw_trivial"] = nullptr;
    }
    return out;
}

Json cayley_report(const HyperStarGraph& g, const CayleyVerdict& verdict) {
    Json out;
    out["graph"] = graph_params_json(g);
    out["is_cayley"] = verdict.cayley;
    out["aut_order"] = verdict.aut_order ? Json(*verdict.aut_order) : Json(nullptr);
    out["witness_order"] =
        verdict.witness ? Json(verdict.witness->order()) : Json(nullptr);
    out["witness_kind"] =
        verdict.witness_id ? Json(to_string(verdict.witness_id->kind)) : Json(nullptr);
    if (verdict.filter) {
        out["filter"] = Json{{"binomial_lhs", verdict.filter->binomial_lhs},
                             {"binomial_rhs", verdict.filter->binomial_rhs},
                             {"divides", verdict.filter->divides},
                             {"k_condition", verdict.filter->k_condition}};
    } else {
        out["filter"] = nullptr;
    }
    out["method"] = verdict.method;
    return out;
}

Json equality_report_json(const EqualityReport& report) {
    return Json{{"k", report.k},
                {"hs_aut_order", report.hs_aut_order},
                {"fhs_aut_order", report.fhs_aut_order},
                {"structured_order", report.structured_order},
                {"groups_equal", report.groups_equal},
                {"hs_matches_structured", report.hs_matches_structured},
                {"fhs_matches_structured", report.fhs_matches_structured}};
}

}  // namespace hyperstar
