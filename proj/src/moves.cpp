#include "transvec/moves.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <deque>
#include <functional>
#include <queue>

namespace transvec {

const char* class_kind_name(ClassKind k) {
    switch (k) {
        case ClassKind::DType: return "DType";
        case ClassKind::TreeA: return "TreeA";
        case ClassKind::TreeB: return "TreeB";
        case ClassKind::TreeC: return "TreeC";
    }
    return "?";
}

std::string ClassLabel::to_string() const {
    char buf[32];
    switch (kind) {
        case ClassKind::DType:
            std::snprintf(buf, sizeof buf, "D(%u,%u)", m, k);
            break;
        case ClassKind::TreeA:
            std::snprintf(buf, sizeof buf, "A(%u,%u)", n, p);
            break;
        case ClassKind::TreeB:
            std::snprintf(buf, sizeof buf, "B(%u,%u)", n, p);
            break;
        case ClassKind::TreeC:
            std::snprintf(buf, sizeof buf, "C(%u,%u)", n, p);
            break;
    }
    return buf;
}

GeneratingSet basic_move(const GeneratingSet& b, uint32_t c, uint32_t a) {
    if (c >= b.size() || a >= b.size() || c == a)
        throw NotAdjacent("move indices out of range or equal");
    if (pair(b.form, b.vecs[c], b.vecs[a]) == 0)
        throw NotAdjacent("move requires Omega(c,a) = 1");
    std::vector<F2Vec> moved = b.vecs;
    moved[c] = moved[c] ^ moved[a];
    return GeneratingSet(b.form, std::move(moved), b.labels);
}

namespace {

// One basic move applied directly to an adjacency matrix: vertex c takes on
// the symmetric difference of its row with a's row.
std::vector<uint32_t> move_adjacency(const std::vector<uint32_t>& adj, uint32_t c, uint32_t a) {
    std::vector<uint32_t> out = adj;
    uint32_t row = (out[c] ^ out[a]) & ~(1u << c);
    out[c] = row;
    for (uint32_t v = 0; v < out.size(); ++v) {
        if (v == c) continue;
        if ((row >> v) & 1u)
            out[v] |= 1u << c;
        else
            out[v] &= ~(1u << c);
    }
    return out;
}

Graph graph_from_rows(uint32_t n, const std::vector<uint32_t>& rows) {
    Graph g(n);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t m = rows[i] & ~((2u << i) - 1); m; m &= m - 1)
            g.add_edge(i, static_cast<uint32_t>(std::countr_zero(m)));
    return g;
}

}  // namespace

std::set<CanonicalGraph> equivalence_class(const Graph& g, uint64_t budget) {
    std::set<CanonicalGraph> seen;
    std::deque<std::vector<uint32_t>> frontier;
    seen.insert(canonical(g));
    frontier.push_back(g.adj);
    while (!frontier.empty()) {
        std::vector<uint32_t> cur = frontier.front();
        frontier.pop_front();
        for (uint32_t c = 0; c < g.n; ++c) {
            for (uint32_t m = cur[c]; m; m &= m - 1) {
                uint32_t a = static_cast<uint32_t>(std::countr_zero(m));
                std::vector<uint32_t> nxt = move_adjacency(cur, c, a);
                CanonicalGraph key = canonical(graph_from_rows(g.n, nxt));
                if (seen.insert(key).second) {
                    if (seen.size() > budget)
                        throw BudgetExceeded("equivalence class exploration exceeded budget");
                    frontier.push_back(std::move(nxt));
                }
            }
        }
    }
    return seen;
}

namespace {

const std::set<uint64_t>& e6_class_codes() {
    static const std::set<uint64_t> codes = [] {
        Graph e6(6);
        e6.add_edge(0, 1);
        e6.add_edge(1, 2);
        e6.add_edge(2, 3);
        e6.add_edge(3, 4);
        e6.add_edge(5, 2);
        std::set<uint64_t> out;
        for (const CanonicalGraph& c : equivalence_class(e6)) out.insert(c.code);
        // Regression pin: the closure has exactly 32 isomorphism types.
        if (out.size() != 32)
            throw Unclassifiable("unexpected size of the cached six-vertex tree class");
        return out;
    }();
    return codes;
}

bool subsets_of_six(uint32_t n, std::vector<uint32_t>& pick, uint32_t from,
                    const std::function<bool(const std::vector<uint32_t>&)>& visit) {
    if (pick.size() == 6) return visit(pick);
    for (uint32_t v = from; v + (5 - static_cast<uint32_t>(pick.size())) < n; ++v) {
        pick.push_back(v);
        if (subsets_of_six(n, pick, v + 1, visit)) return true;
        pick.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<uint32_t>> contains_e6(const Graph& g) {
    if (g.n < 6) return std::nullopt;
    const std::set<uint64_t>& codes = e6_class_codes();
    std::vector<uint32_t> pick;
    std::optional<std::vector<uint32_t>> found;
    subsets_of_six(g.n, pick, 0, [&](const std::vector<uint32_t>& vs) {
        if (codes.count(canonical(g.induced(vs)).code)) {
            found = vs;
            return true;
        }
        return false;
    });
    return found;
}

bool is_dm1(const Graph& g) {
    if (!is_connected(g)) throw NotConnected("single-broom test requires a connected graph");
    return find_forbidden(g).empty();
}

namespace {

bool tree_a_arf(uint32_t n) { return n % 4 == 2 || n % 4 == 3; }

ClassLabel tree_family_label(const GeneratingSet& b, const ClassWitnesses& w) {
    ClassLabel out;
    out.witnesses = w;
    uint32_t p = w.dimV0;
    if ((w.dimV - p) % 2 != 0)
        throw Unclassifiable("tree-family dimension must be 2n + p");
    uint32_t n = (w.dimV - p) / 2;
    out.n = n;
    out.p = p;
    if (w.qNontrivialOnRadical) {
        // Only the C family gives Q a nonzero value on a radical vector.
        if (n < 3 || p < 1) throw Unclassifiable("C-family parameters out of range");
        out.kind = ClassKind::TreeC;
        return out;
    }
    if (!w.arf) throw Unclassifiable("Arf must be defined when Q vanishes on the radical");
    bool a = *w.arf == 1;
    if (a == tree_a_arf(n)) {
        if (n < 3) throw Unclassifiable("A-family parameters out of range");
        out.kind = ClassKind::TreeA;
    } else {
        if (n < 4) throw Unclassifiable("B-family parameters out of range");
        out.kind = ClassKind::TreeB;
    }
    (void)b;
    return out;
}

ClassLabel broom_label(const ClassWitnesses& w) {
    ClassLabel out;
    out.witnesses = w;
    out.kind = ClassKind::DType;
    if (w.dimV000 + 1 == w.dimV0) {
        // Brooms with an even chain keep one radical direction out of V000.
        out.k = w.dimV000 + 1;
        out.m = w.dimV - out.k;
        if (out.m % 2 != 0 || out.m <= 2 || out.k != w.dimV0)
            throw Unclassifiable("inconsistent invariants for an even chain");
    } else if (w.dimV000 == w.dimV0 && w.dimV == w.dimV0 + 2) {
        // The odd parameterization would force a chain of length 1 here.
        out.m = 2;
        out.k = w.dimV0;
    } else if (w.dimV000 == w.dimV0) {
        out.k = w.dimV0 + 1;
        out.m = w.dimV - out.k;
        if (out.m % 2 == 0 || out.m < 3)
            throw Unclassifiable("inconsistent invariants for an odd chain");
    } else {
        throw Unclassifiable("V000 must have codimension 0 or 1 in the radical");
    }
    return out;
}

}  // namespace

ClassLabel recognize(const GeneratingSet& b) {
    Graph g = graph_of(b);
    if (!is_connected(g)) throw NotConnected("classification requires a connected graph");
    if (b.size() < 2) throw DimensionTooSmall("classification requires dimension at least 2");

    ClassWitnesses w;
    w.dimV = b.size();
    Subspace rad = radical(b.form, b.spanned());
    w.dimV0 = rad.dim();
    QuadraticForm q(b.form, b.vecs);
    // Q restricted to the radical is linear, so a basis scan settles it.
    for (const F2Vec& r : rad.basis())
        if (q(r)) w.qNontrivialOnRadical = true;
    if (!w.qNontrivialOnRadical) w.arf = arf(q);
    w.dimV000 = v000(b).dim();

    if (contains_e6(g)) return tree_family_label(b, w);
    return broom_label(w);
}

GeneratingSet normalize_to_tree(const GeneratingSet& b, uint64_t budget) {
    Graph g0 = graph_of(b);
    if (!is_connected(g0)) throw NotConnected("tree reduction requires a connected graph");

    auto key_of = [](const std::vector<F2Vec>& vs) {
        std::vector<uint64_t> key;
        key.reserve(vs.size());
        for (const F2Vec& v : vs) key.push_back(v.bits);
        std::sort(key.begin(), key.end());
        return key;
    };
    auto edges_of = [&](const std::vector<F2Vec>& vs) {
        uint32_t cnt = 0;
        for (uint32_t i = 0; i < vs.size(); ++i)
            for (uint32_t j = i + 1; j < vs.size(); ++j)
                if (pair(b.form, vs[i], vs[j]) || pair(b.form, vs[j], vs[i])) ++cnt;
        return cnt;
    };

    const uint32_t target = b.size() - 1;  // moves keep the graph connected
    using State = std::pair<uint32_t, std::vector<F2Vec>>;
    auto cmp = [](const State& x, const State& y) { return x.first > y.first; };
    std::priority_queue<State, std::vector<State>, decltype(cmp)> heap(cmp);
    std::set<std::vector<uint64_t>> seen;
    heap.push({edges_of(b.vecs), b.vecs});
    seen.insert(key_of(b.vecs));
    uint64_t expanded = 0;
    while (!heap.empty()) {
        auto [edges, vs] = heap.top();
        heap.pop();
        if (edges == target) return GeneratingSet(b.form, vs, b.labels);
        if (++expanded > budget) throw BudgetExceeded("tree reduction exceeded budget");
        for (uint32_t c = 0; c < vs.size(); ++c)
            for (uint32_t a = 0; a < vs.size(); ++a) {
                if (a == c || pair(b.form, vs[c], vs[a]) == 0) continue;
                std::vector<F2Vec> nxt = vs;
                nxt[c] = nxt[c] ^ nxt[a];
                if (seen.insert(key_of(nxt)).second) heap.push({edges_of(nxt), std::move(nxt)});
            }
    }
    throw BudgetExceeded("tree reduction exhausted its search space");
}

}  // namespace transvec
