#include "hyperstar/graph_algorithms.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

namespace hyperstar::graphalg {

namespace {

bool has_edge(const AdjacencyList& adj, int u, int v) {
    const auto& nb = adj[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

void check_vertex(const AdjacencyList& adj, int v) {
    if (v < 0 || static_cast<std::size_t>(v) >= adj.size())
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

std::vector<int> bfs_distances(const AdjacencyList& adj, int source) {
    check_vertex(adj, source);
    std::vector<int> dist(adj.size(), -1);
    std::deque<int> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : adj[static_cast<std::size_t>(u)]) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

bool is_connected(const AdjacencyList& adj) {
    if (adj.empty()) return true;
    auto dist = bfs_distances(adj, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::optional<int> girth(const AdjacencyList& adj) {
    // BFS from every vertex; a non-tree edge (u,w) seen from source s closes a
    // walk of length dist[u]+dist[w]+1 containing a cycle no longer than that.
    // The minimum over all sources is exact.
    const int n = static_cast<int>(adj.size());
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> queue{s};
        dist[static_cast<std::size_t>(s)] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (2 * dist[static_cast<std::size_t>(u)] >= best) continue;
            for (int w : adj[static_cast<std::size_t>(u)]) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    queue.push_back(w);
                } else if (parent[static_cast<std::size_t>(u)] != w) {
                    best = std::min(best, dist[static_cast<std::size_t>(u)] +
                                              dist[static_cast<std::size_t>(w)] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

std::optional<int> diameter(const AdjacencyList& adj) {
    const int n = static_cast<int>(adj.size());
    if (n == 0) return 0;
    int best = 0;
    for (int s = 0; s < n; ++s) {
        auto dist = bfs_distances(adj, s);
        for (int d : dist) {
            if (d < 0) return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

namespace {

// Unit-capacity max-flow (BFS augmenting paths) between two vertices.
struct FlowNetwork {
    struct Arc {
        int to;
        int cap;
    };
    std::vector<Arc> arcs;                 // paired: arc i ^ 1 is the reverse
    std::vector<std::vector<int>> out;     // per-vertex arc indices

    explicit FlowNetwork(const AdjacencyList& adj) : out(adj.size()) {
        for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
            for (int w : adj[static_cast<std::size_t>(u)]) {
                if (w <= u) continue;
                out[static_cast<std::size_t>(u)].push_back(static_cast<int>(arcs.size()));
                arcs.push_back({w, 1});
                out[static_cast<std::size_t>(w)].push_back(static_cast<int>(arcs.size()));
                arcs.push_back({u, 1});
            }
        }
    }

    void reset() {
        for (auto& a : arcs) a.cap = 1;
    }

    int max_flow(int s, int t) {
        int flow = 0;
        std::vector<int> via(out.size());
        for (;;) {
            std::fill(via.begin(), via.end(), -1);
            via[static_cast<std::size_t>(s)] = -2;
            std::deque<int> queue{s};
            while (!queue.empty() && via[static_cast<std::size_t>(t)] == -1) {
                int u = queue.front();
                queue.pop_front();
                for (int idx : out[static_cast<std::size_t>(u)]) {
                    const Arc& a = arcs[static_cast<std::size_t>(idx)];
                    if (a.cap > 0 && via[static_cast<std::size_t>(a.to)] == -1) {
                        via[static_cast<std::size_t>(a.to)] = idx;
                        queue.push_back(a.to);
                    }
                }
            }
            if (via[static_cast<std::size_t>(t)] == -1) return flow;
            for (int v = t; v != s;) {
                int idx = via[static_cast<std::size_t>(v)];
                arcs[static_cast<std::size_t>(idx)].cap -= 1;
                arcs[static_cast<std::size_t>(idx ^ 1)].cap += 1;
                v = arcs[static_cast<std::size_t>(idx ^ 1)].to;
            }
            ++flow;
        }
    }
};

}  // namespace

int edge_connectivity(const AdjacencyList& adj) {
    const int n = static_cast<int>(adj.size());
    if (n <= 1) return 0;
    if (!is_connected(adj)) return 0;
    FlowNetwork net(adj);
    int best = std::numeric_limits<int>::max();
    for (int t = 1; t < n; ++t) {
        net.reset();
        best = std::min(best, net.max_flow(0, t));
        if (best == 0) break;
    }
    return best;
}

std::uint64_t count_cycles_through_path(const AdjacencyList& adj,
                                        std::span<const int> path, int length) {
    if (path.empty()) throw std::invalid_argument("path must contain at least one vertex");
    std::vector<char> on_path(adj.size(), 0);
    for (std::size_t i = 0; i < path.size(); ++i) {
        check_vertex(adj, path[i]);
        if (on_path[static_cast<std::size_t>(path[i])])
            throw std::invalid_argument("path vertices must be distinct");
        on_path[static_cast<std::size_t>(path[i])] = 1;
        if (i > 0 && !has_edge(adj, path[i - 1], path[i]))
            throw std::invalid_argument("consecutive path vertices must be adjacent");
    }
    const int path_edges = static_cast<int>(path.size()) - 1;
    if (length < path_edges)
        throw std::invalid_argument("cycle length shorter than the path");
    if (length < 3) return 0;

    // A cycle containing the path decomposes uniquely as the path plus a
    // return path from its tail to its head through fresh vertices, so
    // counting return paths counts cycles once each. A single-vertex path is
    // traversed in both directions, hence the halving.
    const int head = path.front();
    const int tail = path.back();
    const int budget = length - path_edges;
    if (budget == 0) return 0;

    std::uint64_t count = 0;
    std::vector<char> used = on_path;
    auto dfs = [&](auto&& self, int u, int remaining) -> void {
        if (remaining == 1) {
            if (has_edge(adj, u, head)) ++count;
            return;
        }
        for (int w : adj[static_cast<std::size_t>(u)]) {
            if (used[static_cast<std::size_t>(w)] || w == head) continue;
            used[static_cast<std::size_t>(w)] = 1;
            self(self, w, remaining - 1);
            used[static_cast<std::size_t>(w)] = 0;
        }
    };
    dfs(dfs, tail, budget);
    if (path.size() == 1) count /= 2;
    return count;
}

}  // namespace hyperstar::graphalg
