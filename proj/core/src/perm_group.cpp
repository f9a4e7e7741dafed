#include "hyperstar/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

#include "hyperstar/errors.hpp"

namespace hyperstar {

namespace detail {

// Deterministic Schreier-Sims. Strong generators live in one list; each level
// filters the ones fixing the base prefix. Orbits and transversals are
// rebuilt from scratch whenever a level is (re)verified, in fixed BFS order,
// so the chain depends only on the generator list and the base hint.
struct StabChain {
    struct Level {
        int base = -1;
        std::vector<int> gen_ids;          // strong generators fixing the prefix
        std::vector<int> orbit;            // BFS discovery order
        std::vector<int> slot;             // point -> index into orbit, -1 absent
        std::vector<VertexPerm> transversal;  // transversal[i](base) == orbit[i]
    };

    int degree;
    std::vector<VertexPerm> strong;
    std::vector<Level> levels;

    StabChain(int degree_, std::span<const VertexPerm> gens, std::span<const int> base_hint)
        : degree(degree_) {
        for (int b : base_hint) append_level(b);
        for (const VertexPerm& g : gens) add_strong(g);
        verify();
    }

    void append_level(int base_point) {
        Level lev;
        lev.base = base_point;
        levels.push_back(std::move(lev));
    }

    int min_moved(const VertexPerm& g) const {
        for (int p = 0; p < degree; ++p)
            if (g[p] != p) return p;
        return -1;
    }

    bool fixes_prefix(const VertexPerm& g, std::size_t nlevels) const {
        for (std::size_t l = 0; l < nlevels; ++l)
            if (g[levels[l].base] != levels[l].base) return false;
        return true;
    }

    void add_strong(const VertexPerm& g) {
        if (g.is_identity()) return;
        if (std::find(strong.begin(), strong.end(), g) != strong.end()) return;
        const int id = static_cast<int>(strong.size());
        strong.push_back(g);
        std::size_t l = 0;
        while (l < levels.size() && g[levels[l].base] == levels[l].base) ++l;
        if (l == levels.size()) append_level(min_moved(g));
        for (std::size_t i = 0; i <= l && i < levels.size(); ++i)
            levels[i].gen_ids.push_back(id);
    }

    void rebuild_orbit(Level& lev) const {
        lev.orbit.clear();
        lev.transversal.clear();
        lev.slot.assign(static_cast<std::size_t>(degree), -1);
        lev.orbit.push_back(lev.base);
        lev.slot[static_cast<std::size_t>(lev.base)] = 0;
        lev.transversal.push_back(VertexPerm::identity(degree));
        for (std::size_t head = 0; head < lev.orbit.size(); ++head) {
            const int p = lev.orbit[head];
            for (int id : lev.gen_ids) {
                const VertexPerm& s = strong[static_cast<std::size_t>(id)];
                const int q = s[p];
                if (lev.slot[static_cast<std::size_t>(q)] >= 0) continue;
                lev.slot[static_cast<std::size_t>(q)] = static_cast<int>(lev.orbit.size());
                lev.orbit.push_back(q);
                lev.transversal.push_back(compose(s, lev.transversal[head]));
            }
        }
    }

    // Sift g through levels starting at `from`; returns the residue and the
    // first level it could not pass (levels.size() when it passed them all).
    std::pair<VertexPerm, std::size_t> strip(VertexPerm g, std::size_t from) const {
        for (std::size_t l = from; l < levels.size(); ++l) {
            const Level& lev = levels[l];
            const int p = g[lev.base];
            const int slot = lev.slot[static_cast<std::size_t>(p)];
            if (slot < 0) return {std::move(g), l};
            g = compose(lev.transversal[static_cast<std::size_t>(slot)].inverse(), g);
        }
        return {std::move(g), levels.size()};
    }

    // Bottom-up verification: every Schreier generator of a level must sift
    // to the identity through the deeper levels; residues become new strong
    // generators, possibly extending the base.
    void verify() {
        for (auto& lev : levels) rebuild_orbit(lev);
        if (levels.empty()) return;
        std::size_t i = levels.size() - 1;
        for (;;) {
            rebuild_orbit(levels[i]);
            bool clean = true;
            for (std::size_t head = 0; clean && head < levels[i].orbit.size(); ++head) {
                for (int id : levels[i].gen_ids) {
                    const VertexPerm& s = strong[static_cast<std::size_t>(id)];
                    const int p = levels[i].orbit[head];
                    const int sp = s[p];
                    const VertexPerm& u_p = levels[i].transversal[head];
                    const VertexPerm& u_sp =
                        levels[i].transversal[static_cast<std::size_t>(
                            levels[i].slot[static_cast<std::size_t>(sp)])];
                    VertexPerm schreier = compose(u_sp.inverse(), compose(s, u_p));
                    auto [residue, at] = strip(std::move(schreier), i + 1);
                    if (residue.is_identity()) continue;
                    add_strong(residue);
                    i = std::min(at, levels.size() - 1);
                    clean = false;
                    break;
                }
            }
            if (!clean) continue;
            if (i == 0) break;
            --i;
        }
    }

    std::uint64_t order() const {
        std::uint64_t n = 1;
        for (const auto& lev : levels) n *= lev.orbit.size();
        return n;
    }

    bool contains(const VertexPerm& g) const {
        auto [residue, at] = strip(g, 0);
        return at == levels.size() && residue.is_identity();
    }

    void enumerate(std::size_t level, const VertexPerm& prefix,
                   std::vector<VertexPerm>& out) const {
        if (level == levels.size()) {
            out.push_back(prefix);
            return;
        }
        for (const VertexPerm& t : levels[level].transversal)
            enumerate(level + 1, compose(prefix, t), out);
    }
};

}  // namespace detail

PermGroup::PermGroup(int degree, std::vector<VertexPerm> gens, std::vector<int> base_hint)
    : degree_(degree) {
    if (degree < 1) throw std::invalid_argument("group degree must be positive");
    for (const VertexPerm& g : gens) {
        if (g.degree() != degree)
            throw std::invalid_argument("generator degree " + std::to_string(g.degree()) +
                                        " does not match group degree " +
                                        std::to_string(degree));
        if (g.is_identity()) continue;
        if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(g);
    }
    chain_ = std::make_shared<const detail::StabChain>(degree_, std::span(gens_), std::span(base_hint));
    order_ = chain_->order();
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}, {}); }

PermGroup PermGroup::from_generators(int degree, std::vector<VertexPerm> gens) {
    return PermGroup(degree, std::move(gens), {});
}

std::vector<int> PermGroup::base() const {
    std::vector<int> points;
    for (const auto& lev : chain_->levels) points.push_back(lev.base);
    return points;
}

bool PermGroup::contains(const VertexPerm& p) const {
    if (p.degree() != degree_)
        throw std::invalid_argument("membership query degree mismatch");
    return chain_->contains(p);
}

std::vector<int> PermGroup::orbit(int point) const {
    if (point < 0 || point >= degree_)
        throw std::invalid_argument("point out of range");
    std::vector<char> seen(static_cast<std::size_t>(degree_), 0);
    std::deque<int> queue{point};
    seen[static_cast<std::size_t>(point)] = 1;
    std::vector<int> out;
    while (!queue.empty()) {
        int p = queue.front();
        queue.pop_front();
        out.push_back(p);
        for (const VertexPerm& g : gens_) {
            int q = g[p];
            if (!seen[static_cast<std::size_t>(q)]) {
                seen[static_cast<std::size_t>(q)] = 1;
                queue.push_back(q);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
    std::vector<char> seen(static_cast<std::size_t>(degree_), 0);
    std::vector<std::vector<int>> out;
    for (int p = 0; p < degree_; ++p) {
        if (seen[static_cast<std::size_t>(p)]) continue;
        auto orb = orbit(p);
        for (int q : orb) seen[static_cast<std::size_t>(q)] = 1;
        out.push_back(std::move(orb));
    }
    return out;
}

bool PermGroup::is_transitive() const {
    return static_cast<int>(orbit(0).size()) == degree_;
}

bool PermGroup::is_semiregular() const {
    // Point stabilizers are trivial iff every orbit has full group size
    // (orbit-stabilizer), which also forces order <= degree.
    if (order_ > static_cast<std::uint64_t>(degree_)) return false;
    for (const auto& orb : orbits())
        if (orb.size() != order_) return false;
    return true;
}

bool PermGroup::is_regular() const { return is_transitive() && is_semiregular(); }

std::uint64_t PermGroup::stabilizer_order(int point) const {
    return order_ / orbit(point).size();
}

PermGroup PermGroup::point_stabilizer(int point) const {
    if (point < 0 || point >= degree_)
        throw std::invalid_argument("point out of range");
    detail::StabChain rebased(degree_, std::span(gens_), std::span(&point, 1));
    std::vector<VertexPerm> stab_gens;
    for (const VertexPerm& g : rebased.strong)
        if (g[point] == point) stab_gens.push_back(g);
    return from_generators(degree_, std::move(stab_gens));
}

std::vector<VertexPerm> PermGroup::elements(std::uint64_t cap) const {
    if (order_ > cap)
        throw CapExceeded("group order " + std::to_string(order_) +
                          " exceeds the enumeration cap " + std::to_string(cap));
    std::vector<VertexPerm> out;
    out.reserve(static_cast<std::size_t>(order_));
    chain_->enumerate(0, VertexPerm::identity(degree_), out);
    return out;
}

std::vector<VertexPerm> closure_elements(int degree, std::span<const VertexPerm> gens,
                                         std::size_t cap) {
    std::unordered_set<VertexPerm, VertexPermHash> seen;
    std::deque<VertexPerm> queue;
    seen.insert(VertexPerm::identity(degree));
    queue.push_back(VertexPerm::identity(degree));
    while (!queue.empty()) {
        VertexPerm g = std::move(queue.front());
        queue.pop_front();
        for (const VertexPerm& s : gens) {
            if (s.degree() != degree)
                throw std::invalid_argument("closure generator degree mismatch");
            VertexPerm h = compose(g, s);
            if (seen.insert(h).second) {
                if (seen.size() > cap)
                    throw CapExceeded("closure exceeds cap of " + std::to_string(cap) +
                                      " elements");
                queue.push_back(std::move(h));
            }
        }
    }
    std::vector<VertexPerm> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool equal_groups(const PermGroup& g, const PermGroup& h) {
    if (g.degree() != h.degree() || g.order() != h.order()) return false;
    for (const VertexPerm& x : g.generators())
        if (!h.contains(x)) return false;
    for (const VertexPerm& x : h.generators())
        if (!g.contains(x)) return false;
    return true;
}

bool is_normal(const PermGroup& n, const PermGroup& g) {
    if (n.degree() != g.degree()) return false;
    for (const VertexPerm& x : n.generators())
        if (!g.contains(x)) return false;
    for (const VertexPerm& a : g.generators()) {
        const VertexPerm a_inv = a.inverse();
        for (const VertexPerm& x : n.generators())
            if (!n.contains(compose(a, compose(x, a_inv)))) return false;
    }
    return true;
}

bool verify_semidirect(const PermGroup& g, const PermGroup& n, const PermGroup& q) {
    if (n.degree() != g.degree() || q.degree() != g.degree())
        throw std::invalid_argument("subgroup degrees do not match the group");
    for (const VertexPerm& x : n.generators())
        if (!g.contains(x))
            throw std::invalid_argument("generator of N is not a member of G");
    for (const VertexPerm& x : q.generators())
        if (!g.contains(x))
            throw std::invalid_argument("generator of Q is not a member of G");

    if (!is_normal(n, g)) return false;

    // |N meet Q| by scanning the smaller factor's elements.
    const PermGroup& small = n.order() <= q.order() ? n : q;
    const PermGroup& large = n.order() <= q.order() ? q : n;
    std::uint64_t common = 0;
    for (const VertexPerm& x : small.elements())
        if (large.contains(x)) ++common;
    if (common != 1) return false;

    // With trivial intersection |NQ| = |N||Q|; NQ = G iff the orders match.
    return g.order() % n.order() == 0 && g.order() / n.order() == q.order();
}

std::string_view to_string(GroupKind kind) {
    switch (kind) {
        case GroupKind::cyclic: return "cyclic";
        case GroupKind::dihedral: return "dihedral";
        case GroupKind::symmetric3: return "symmetric3";
        case GroupKind::other: return "other";
    }
    return "other";
}

SmallGroupId identify_small(const PermGroup& g) {
    constexpr std::uint64_t kIdentifyCap = 10'000;
    if (g.order() > kIdentifyCap)
        throw CapExceeded("identify_small supports order <= " + std::to_string(kIdentifyCap));
    const std::uint64_t order = g.order();
    if (order == 1) return {GroupKind::cyclic, 1, 1};

    const auto elems = g.elements();
    for (const VertexPerm& e : elems)
        if (e.element_order() == order) return {GroupKind::cyclic, order, order};

    const auto& gens = g.generators();
    const bool abelian = [&] {
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j)
                if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
        return true;
    }();
    if (order == 6 && !abelian) return {GroupKind::symmetric3, 6, 3};

    if (order % 2 == 0 && order >= 4) {
        const std::uint64_t m = order / 2;
        for (const VertexPerm& r : elems) {
            if (r.element_order() != m) continue;
            std::vector<VertexPerm> powers;
            VertexPerm p = VertexPerm::identity(g.degree());
            for (std::uint64_t i = 0; i < m; ++i) {
                powers.push_back(p);
                p = compose(p, r);
            }
            const VertexPerm r_inv = r.inverse();
            for (const VertexPerm& s : elems) {
                if (s.element_order() != 2) continue;
                if (std::find(powers.begin(), powers.end(), s) != powers.end()) continue;
                if (compose(s, compose(r, s)) == r_inv)
                    return {GroupKind::dihedral, order, m};
            }
        }
    }
    return {GroupKind::other, order, 0};
}

}  // namespace hyperstar
