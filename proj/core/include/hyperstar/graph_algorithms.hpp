#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hyperstar::graphalg {

/// Algorithms over plain adjacency lists (sorted, symmetric, irreflexive).
/// Degenerate inputs yield distinguished values, never exceptions:
/// an acyclic graph has no girth, a disconnected graph has no diameter
/// and edge connectivity 0.

using AdjacencyList = std::vector<std::vector<int>>;

std::vector<int> bfs_distances(const AdjacencyList& adj, int source);

bool is_connected(const AdjacencyList& adj);

std::optional<int> girth(const AdjacencyList& adj);

std::optional<int> diameter(const AdjacencyList& adj);

/// Minimum edge cut via unit-capacity max-flow from a fixed vertex to every
/// other vertex (sound for global edge connectivity on connected graphs).
int edge_connectivity(const AdjacencyList& adj);

/// Number of distinct cycles of exactly `length` edges (counted as subgraphs)
/// that contain `path` as a consecutive subpath. The path must be a valid
/// simple path: distinct in-range vertices, consecutive pairs adjacent.
std::uint64_t count_cycles_through_path(const AdjacencyList& adj,
                                        std::span<const int> path, int length);

}  // namespace hyperstar::graphalg
