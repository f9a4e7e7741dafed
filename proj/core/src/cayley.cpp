#include "hyperstar/cayley.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "hyperstar/aut_search.hpp"
#include "hyperstar/errors.hpp"
#include "hyperstar/perm.hpp"

namespace hyperstar {

FilterResult divisibility_filter(int k) {
    if (k < 3) throw std::invalid_argument("divisibility filter needs k >= 3");
    FilterResult r;
    r.k = k;
    r.binomial_lhs = binomial(2 * k - 1, k - 2);
    r.binomial_rhs = binomial(2 * k, k) / 2;
    r.divides = r.binomial_rhs % r.binomial_lhs == 0;
    r.k_condition = (k + 1) % (k - 1) == 0;
    r.passes = r.divides;
    return r;
}

bool involution_fixed_vertex_check() {
    const int n = 6, k = 3;
    std::vector<int> tail{2, 3, 4, 5, 6};
    do {
        std::vector<int> image{1};
        image.insert(image.end(), tail.begin(), tail.end());
        const Permutation sigma(image);
        if (sigma.is_identity() || !compose(sigma, sigma).is_identity()) continue;
        if (induced(sigma, k).count_fixed_points() == 0) return false;
    } while (std::next_permutation(tail.begin(), tail.end()));
    (void)n;
    return true;
}

namespace {

struct RegularSearcher {
    int nv;
    std::size_t max_witnesses;
    std::vector<VertexPerm> elems;  // sorted; index 0 is the identity
    std::unordered_map<VertexPerm, int, VertexPermHash> index;
    std::vector<std::vector<int>> candidates;  // per vertex, ascending element ids
    std::vector<int> chosen;                   // vertex -> element id, -1 unset
    std::vector<int> assigned;                 // assignment trail for undo
    std::vector<PermGroup> found;

    RegularSearcher(const PermGroup& g, int nv_, std::size_t max_witnesses_,
                    std::uint64_t order_cap)
        : nv(nv_), max_witnesses(max_witnesses_) {
        if (g.degree() != nv)
            throw std::invalid_argument("regular subgroup search: degree mismatch");
        elems = g.elements(order_cap);
        std::sort(elems.begin(), elems.end());
        for (int i = 0; i < static_cast<int>(elems.size()); ++i)
            index.emplace(elems[static_cast<std::size_t>(i)], i);

        candidates.resize(static_cast<std::size_t>(nv));
        for (int i = 0; i < static_cast<int>(elems.size()); ++i) {
            const VertexPerm& e = elems[static_cast<std::size_t>(i)];
            if (e.is_identity())
                candidates[0].push_back(i);
            else if (e.count_fixed_points() == 0)
                candidates[static_cast<std::size_t>(e[0])].push_back(i);
        }
        chosen.assign(static_cast<std::size_t>(nv), -1);
    }

    // Assign vertex -> element and close under products against everything
    // already assigned; forced assignments cascade. Returns false on any
    // contradiction (fixed points, class clashes); the trail enables undo.
    bool assign_and_close(int vertex, int elem_id) {
        std::vector<std::pair<int, int>> todo{{vertex, elem_id}};
        while (!todo.empty()) {
            auto [v, id] = todo.back();
            todo.pop_back();
            if (chosen[static_cast<std::size_t>(v)] == id) continue;
            if (chosen[static_cast<std::size_t>(v)] >= 0) return false;
            chosen[static_cast<std::size_t>(v)] = id;
            assigned.push_back(v);
            const VertexPerm& a = elems[static_cast<std::size_t>(id)];
            for (std::size_t t = 0; t < assigned.size(); ++t) {
                const VertexPerm& b =
                    elems[static_cast<std::size_t>(chosen[static_cast<std::size_t>(
                        assigned[t])])];
                for (const VertexPerm& p : {compose(a, b), compose(b, a)}) {
                    const auto it = index.find(p);
                    if (it == index.end())
                        throw std::logic_error("product left the ambient group");
                    const int target = p[0];
                    if (!p.is_identity() && p.count_fixed_points() > 0) return false;
                    const int existing = chosen[static_cast<std::size_t>(target)];
                    if (existing == -1)
                        todo.emplace_back(target, it->second);
                    else if (existing != it->second)
                        return false;
                }
            }
        }
        return true;
    }

    void undo_to(std::size_t mark) {
        while (assigned.size() > mark) {
            chosen[static_cast<std::size_t>(assigned.back())] = -1;
            assigned.pop_back();
        }
    }

    // Returns false when the witness limit was hit (search stopped early).
    bool search() {
        int next = -1;
        for (int v = 0; v < nv; ++v)
            if (chosen[static_cast<std::size_t>(v)] < 0) { next = v; break; }
        if (next < 0) {
            std::vector<VertexPerm> members;
            members.reserve(static_cast<std::size_t>(nv));
            for (int id : chosen) members.push_back(elems[static_cast<std::size_t>(id)]);
            PermGroup witness = PermGroup::from_generators(nv, members);
            if (witness.order() != static_cast<std::uint64_t>(nv) || !witness.is_regular())
                throw std::logic_error("regular subgroup candidate failed validation");
            found.push_back(std::move(witness));
            return found.size() < max_witnesses;
        }
        for (int id : candidates[static_cast<std::size_t>(next)]) {
            const std::size_t mark = assigned.size();
            const bool consistent = assign_and_close(next, id);
            if (consistent && !search()) return false;
            undo_to(mark);
        }
        return true;
    }
};

}  // namespace

RegularSearch search_regular_subgroups(const PermGroup& g, int num_vertices,
                                       std::size_t max_witnesses,
                                       std::uint64_t order_cap) {
    if (!g.is_transitive())
        throw std::invalid_argument("regular subgroup search expects a transitive group");
    RegularSearch out;
    if (g.order() % static_cast<std::uint64_t>(num_vertices) != 0) {
        out.exhausted = true;  // Lagrange rules any order-|V| subgroup out
        return out;
    }
    RegularSearcher searcher(g, num_vertices, max_witnesses, order_cap);
    out.exhausted = searcher.search();
    out.witnesses = std::move(searcher.found);
    return out;
}

std::optional<PermGroup> find_regular_subgroup(const PermGroup& g, int num_vertices,
                                               std::uint64_t order_cap) {
    auto result = search_regular_subgroups(g, num_vertices, 1, order_cap);
    if (result.witnesses.empty()) return std::nullopt;
    return std::move(result.witnesses.front());
}

CayleyVerdict is_cayley(const HyperStarGraph& g, std::uint64_t order_cap) {
    CayleyVerdict verdict;

    if (g.n() == 2 * g.k() && g.k() >= 3)
        verdict.filter = divisibility_filter(g.k());

    if (verdict.filter && !verdict.filter->passes) {
        // No regular subgroup can exist; skip the group computation entirely.
        verdict.cayley = false;
        verdict.method = "divisibility-filter";
        return verdict;
    }

    const PermGroup aut = automorphism_group(g);
    verdict.aut_order = aut.order();
    if (!aut.is_transitive()) {
        verdict.cayley = false;
        verdict.method = "aut-not-transitive";
        return verdict;
    }

    auto result = search_regular_subgroups(aut, g.vertex_count(), 1, order_cap);
    if (!result.witnesses.empty()) {
        verdict.cayley = true;
        verdict.method = "witness";
        verdict.witness = std::move(result.witnesses.front());
        verdict.witness_id = identify_small(*verdict.witness);
    } else {
        verdict.cayley = false;
        verdict.method = "exhaustive-search";
    }
    return verdict;
}

}  // namespace hyperstar
