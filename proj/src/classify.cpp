#include "transvec/classify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <random>

namespace transvec {

std::string OrbitLabel::to_string() const {
    if (isFixed) return "fixed";
    return "moving(d=" + std::to_string(d) + ")";
}

QuadraticForm quadratic_form(const GeneratingSet& b) { return QuadraticForm(b.form, b.vecs); }

bool gamma_invariance_check(const GeneratingSet& b, const QuadraticForm& q, uint32_t trials) {
    std::mt19937_64 rng(0x51ab5eed);
    uint64_t count = q.domain.dim() >= 63 ? ~uint64_t{0} : (uint64_t{1} << q.domain.dim());
    for (uint32_t t = 0; t < trials; ++t) {
        F2Vec x = q.domain.from_coefficients(rng() % count);
        const F2Vec& g = b.vecs[rng() % b.size()];
        if (q(transvect(b.form, g, x)) != q(x)) return false;
    }
    return true;
}

namespace {

// contains_e6 is called per classification query; graphs repeat, the answer
// is isomorphism-invariant, so memoize on the raw edge mask when it fits.
bool e6_memo(const Graph& g) {
    if (g.n > 11) return contains_e6(g).has_value();
    static std::map<std::pair<uint32_t, uint64_t>, bool> cache;
    static std::mutex mu;
    std::pair<uint32_t, uint64_t> key{g.n, g.edge_mask()};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    bool hit = contains_e6(g).has_value();
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, hit);
    return hit;
}

void require_dtype(const Graph& g) {
    if (!is_connected(g)) throw NotConnected("the support graph of the basis must be connected");
    if (e6_memo(g)) throw NotDType("basis is equivalent to a six-vertex-fork tree family");
}

}  // namespace

F2Vec minimal_representative(const GeneratingSet& b, const F2Vec& x) {
    require_dtype(graph_of(b));
    Subspace u000 = v000(b);
    if (radical(b.form, b.spanned()).member(x))
        throw InRadical("representatives are classified off the radical");
    Subspace sp = b.spanned();
    std::vector<uint64_t> blockers;
    for (const F2Vec& w : coset_members(F2Vec::zero(b.form.n), u000))
        if (!w.is_zero()) blockers.push_back(sp.expansion(w));

    bool have = false;
    F2Vec best = x;
    uint64_t bestMask = 0;
    for (const F2Vec& cand : coset_members(x, u000)) {
        uint64_t mask = sp.expansion(cand);
        bool valid = true;
        for (uint64_t w : blockers)
            if ((w & ~mask) == 0) valid = false;
        if (!valid) continue;
        if (!have || vec_less(F2Vec(b.size(), mask), F2Vec(b.size(), bestMask))) {
            have = true;
            best = cand;
            bestMask = mask;
        }
    }
    if (!have) throw NoMinimalRepresentative("every representative swallowed a V000 vector");
    return best;
}

int clique_sum(const Graph& g) {
    int total = static_cast<int>(connected_components(g).size());
    for (const auto& clique : maximal_cliques(g))
        if (clique.size() >= 3) total += static_cast<int>((clique.size() + 1) / 2) - 1;
    return total;
}

int d_formula(const GeneratingSet& b, const F2Vec& x) {
    require_dtype(graph_of(b));
    F2Vec rep = minimal_representative(b, x);
    return clique_sum(support_subgraph(b, rep));
}

OrbitLabel orbit_label(const GeneratingSet& b, const F2Vec& x) {
    Graph g = graph_of(b);
    if (!is_connected(g)) throw NotConnected("orbit labels require a connected graph");
    if (radical(b.form, b.spanned()).member(x)) return OrbitLabel::fixed();
    if (e6_memo(g)) {
        QuadraticForm q = quadratic_form(b);
        return OrbitLabel::moving(2 - q(x));
    }
    return OrbitLabel::moving(d_formula(b, x));
}

namespace {

// Chain length of a literally-indexed broom, or 0 when the adjacency does not
// match any D(m, k) layout on these exact indices.
uint32_t literal_broom_m(const GeneratingSet& b) {
    Graph g = graph_of(b);
    uint32_t size = b.size();
    for (uint32_t m = size; m >= 2; --m) {
        Graph broom(size);
        for (uint32_t i = 0; i + 1 < m; ++i) broom.add_edge(i, i + 1);
        for (uint32_t j = m; j < size; ++j) broom.add_edge(m - 1, j);
        if (broom.adj == g.adj) return m;
    }
    return 0;
}

}  // namespace

int broom_invariant(const GeneratingSet& b, const F2Vec& x) {
    uint32_t m = literal_broom_m(b);
    if (m == 0) throw NotNormalForm("expected a broom laid out as chain indices then leaves");
    uint64_t mix = b.spanned().expansion(x);
    uint64_t chain = mix & ((uint64_t{1} << m) - 1);
    uint64_t folded = chain | ((std::popcount(mix >> m) & 1u) ? (uint64_t{1} << m) : 0);
    if (folded == 0) return 0;
    std::vector<uint32_t> verts;
    for (uint64_t t = folded; t; t &= t - 1)
        verts.push_back(static_cast<uint32_t>(std::countr_zero(t)));
    return static_cast<int>(connected_components(graph_of(b).induced(verts)).size());
}

Subspace v000_local(const GeneratingSet& b, const std::vector<uint32_t>& x) {
    std::vector<F2Vec> coords;
    for (uint32_t i : x) {
        if (i >= b.size()) throw NotInSpan("pattern vertex outside the basis");
        coords.push_back(b.vecs[i]);
    }
    Subspace local = intersect(span(b.form.n, coords), v000(b));
    if (local.dim() == 0)
        throw EmptyIntersection("forbidden pattern contributed nothing to V000");

    // A chordless cycle of length >= 5 pins the intersection exactly.
    Graph ind = graph_of(b).induced(x);
    bool reg2 = x.size() >= 5;
    for (uint32_t i = 0; i < ind.n && reg2; ++i)
        if (std::popcount(ind.adj[i]) != 2) reg2 = false;
    if (reg2 && is_connected(ind)) {
        F2Vec ones = F2Vec::zero(b.form.n);
        for (const F2Vec& c : coords) ones = ones ^ c;
        if (local.dim() != 1 || !local.member(ones))
            throw EmptyIntersection("long cycle must meet V000 in exactly its full sum");
    }
    return local;
}

Subspace v000_from_subgraphs(const GeneratingSet& b) {
    if (b.size() < 3) throw DimensionTooSmall("subgraph spanning needs dimension at least 3");
    Graph g = graph_of(b);
    require_dtype(g);
    std::vector<F2Vec> collected;
    for (const ForbiddenHit& hit : find_forbidden(g)) {
        for (const F2Vec& v : v000_local(b, hit.vertices).basis()) collected.push_back(v);
    }
    Subspace assembled = span(b.form.n, collected);
    Subspace brute = v000(b);
    if (assembled.dim() != brute.dim() ||
        quotient_dim(brute, assembled) != 0)
        throw SpanMismatch("local V000 pieces failed to span the whole space");
    return assembled;
}

ClassLabel deletion_check(const GeneratingSet& b, const F2Vec& u, uint32_t bIdx) {
    ClassLabel base = recognize(b);
    if (base.kind != ClassKind::DType)
        throw NotDType("deletion corollary applies to broom classes only");
    if (base.k < 2) throw CorollaryViolated("deletion needs at least two leaves");
    if (u.is_zero() || !v000(b).member(u))
        throw CorollaryViolated("deleted vector must be a nonzero element of V000");
    if (bIdx >= b.size() || ((b.spanned().expansion(u) >> bIdx) & 1u) == 0)
        throw CorollaryViolated("deleted generator must occur in the vector's support");

    GeneratingSet rest = b.without(bIdx);
    if (!is_connected(graph_of(rest)))
        throw CorollaryViolated("deletion disconnected the graph");
    ClassLabel after = recognize(rest);
    if (after.kind != ClassKind::DType || after.m != base.m || after.k + 1 != base.k)
        throw CorollaryViolated("deletion did not step the leaf count down by one");
    return after;
}

}  // namespace transvec
