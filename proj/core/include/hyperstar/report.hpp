#pragma once

#include <nlohmann/json.hpp>

#include "hyperstar/aut_search.hpp"
#include "hyperstar/cayley.hpp"
#include "hyperstar/graph.hpp"
#include "hyperstar/perm_group.hpp"

namespace hyperstar {

/// Reports use ordered JSON so identical inputs serialize to identical bytes.
using Json = nlohmann::ordered_json;

Json graph_params_json(const HyperStarGraph& g);

/// {n, k, folded, vertices, edges, girth, diameter, edge_connectivity,
///  bipartition_sizes}; girth/diameter are null for acyclic/disconnected.
Json metrics_report(const HyperStarGraph& g);

/// {degree, order, n_generators, transitive, semiregular, regular, orbits}.
Json group_report(const PermGroup& g);

/// {graph, aut_order, vertex_transitive, edge_transitive, arc_transitive,
///  structured_order, groups_equal, L_vw_trivial}. The structured comparison
/// applies only to regular parameters; L_vw ranges over all edges of the
/// plain graph and the non-complement edges of the folded one.
Json aut_report(const HyperStarGraph& g, const PermGroup& aut, bool with_rigidity = true);

Json cayley_report(const HyperStarGraph& g, const CayleyVerdict& verdict);

Json equality_report_json(const EqualityReport& report);

}  // namespace hyperstar
