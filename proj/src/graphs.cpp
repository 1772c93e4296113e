#include "transvec/graphs.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace transvec {

namespace {

// Packed position of pair (i, j), i < j, in the upper-triangle encoding.
inline uint32_t pair_pos(uint32_t n, uint32_t i, uint32_t j) {
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

const std::vector<std::vector<uint8_t>>& permutations_of(uint32_t n) {
    static std::map<uint32_t, std::vector<std::vector<uint8_t>>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<uint8_t> p(n);
    std::iota(p.begin(), p.end(), static_cast<uint8_t>(0));
    std::vector<std::vector<uint8_t>> all;
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return cache.emplace(n, std::move(all)).first->second;
}

}  // namespace

GeneratingSet::GeneratingSet(BilinearForm f, std::vector<F2Vec> v, std::vector<std::string> labs)
    : form(std::move(f)), vecs(std::move(v)), labels(std::move(labs)) {
    for (const F2Vec& b : vecs) {
        if (b.n != form.n)
            throw DimensionMismatch("generator dimension does not match the form");
        if (b.is_zero() || pair(form, b, b) != 0)
            throw InvalidTransvector("generators must be nonzero with Omega(b,b)=0");
    }
    if (spanned().dim() != vecs.size())
        throw NotBasis("generators must be linearly independent");
}

std::string GeneratingSet::name_of(uint32_t i) const { return vec_to_string(vecs[i], labels); }

GeneratingSet GeneratingSet::without(uint32_t i) const {
    std::vector<F2Vec> rest;
    for (uint32_t t = 0; t < vecs.size(); ++t)
        if (t != i) rest.push_back(vecs[t]);
    return GeneratingSet(form, rest, labels);
}

Graph::Graph(uint32_t vertices) : n(vertices), adj(vertices, 0), tags(vertices) {
    if (vertices > 32) throw DimensionMismatch("graph supports at most 32 vertices");
    std::iota(tags.begin(), tags.end(), 0u);
}

void Graph::add_edge(uint32_t i, uint32_t j) {
    if (i >= n || j >= n) throw DimensionMismatch("edge endpoint out of range");
    if (i == j) throw DimensionMismatch("self-loops are not allowed");
    adj[i] |= 1u << j;
    adj[j] |= 1u << i;
}

uint32_t Graph::edge_count() const {
    uint32_t twice = 0;
    for (uint32_t row : adj) twice += static_cast<uint32_t>(std::popcount(row));
    return twice / 2;
}

Graph Graph::induced(const std::vector<uint32_t>& vertices) const {
    Graph g(static_cast<uint32_t>(vertices.size()));
    for (uint32_t a = 0; a < g.n; ++a) {
        g.tags[a] = tags[vertices[a]];
        for (uint32_t b = a + 1; b < g.n; ++b)
            if (has_edge(vertices[a], vertices[b])) g.add_edge(a, b);
    }
    return g;
}

uint64_t Graph::edge_mask() const {
    if (n > 11) throw DomainTooLarge("edge mask encoding limited to 11 vertices");
    uint64_t mask = 0;
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j)
            if (has_edge(i, j)) mask |= uint64_t{1} << pair_pos(n, i, j);
    return mask;
}

Graph Graph::from_edge_mask(uint32_t n, uint64_t mask) {
    Graph g(n);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j)
            if ((mask >> pair_pos(n, i, j)) & 1u) g.add_edge(i, j);
    return g;
}

Graph graph_of(const GeneratingSet& b) {
    Graph g(b.size());
    for (uint32_t i = 0; i < b.size(); ++i)
        for (uint32_t j = i + 1; j < b.size(); ++j)
            if (pair(b.form, b.vecs[i], b.vecs[j]) || pair(b.form, b.vecs[j], b.vecs[i]))
                g.add_edge(i, j);
    return g;
}

Graph support_subgraph(const GeneratingSet& b, const F2Vec& x) {
    uint64_t mix = b.spanned().expansion(x);
    std::vector<uint32_t> verts;
    for (uint64_t m = mix; m; m &= m - 1)
        verts.push_back(static_cast<uint32_t>(std::countr_zero(m)));
    return graph_of(b).induced(verts);
}

std::vector<std::vector<uint32_t>> connected_components(const Graph& g) {
    std::vector<std::vector<uint32_t>> comps;
    uint32_t seen = 0;
    for (uint32_t s = 0; s < g.n; ++s) {
        if ((seen >> s) & 1u) continue;
        uint32_t comp = 1u << s;
        uint32_t frontier = comp;
        while (frontier) {
            uint32_t next = 0;
            for (uint32_t f = frontier; f; f &= f - 1)
                next |= g.adj[std::countr_zero(f)];
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        std::vector<uint32_t> verts;
        for (uint32_t m = comp; m; m &= m - 1)
            verts.push_back(static_cast<uint32_t>(std::countr_zero(m)));
        comps.push_back(std::move(verts));
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

namespace {

void bron_kerbosch(const Graph& g, uint32_t r, uint32_t p, uint32_t x,
                   std::vector<uint32_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    // Pivot: vertex of P|X with most neighbours inside P (lowest index wins).
    uint32_t pivot = 0, best = 0;
    bool havePivot = false;
    for (uint32_t m = p | x; m; m &= m - 1) {
        uint32_t u = static_cast<uint32_t>(std::countr_zero(m));
        uint32_t cnt = static_cast<uint32_t>(std::popcount(p & g.adj[u]));
        if (!havePivot || cnt > best) {
            havePivot = true;
            best = cnt;
            pivot = u;
        }
    }
    uint32_t candidates = p & ~g.adj[pivot];
    for (uint32_t m = candidates; m; m &= m - 1) {
        uint32_t v = static_cast<uint32_t>(std::countr_zero(m));
        bron_kerbosch(g, r | (1u << v), p & g.adj[v], x & g.adj[v], out);
        p &= ~(1u << v);
        x |= 1u << v;
    }
}

std::vector<uint32_t> mask_to_verts(uint32_t mask) {
    std::vector<uint32_t> v;
    for (uint32_t m = mask; m; m &= m - 1)
        v.push_back(static_cast<uint32_t>(std::countr_zero(m)));
    return v;
}

}  // namespace

std::vector<std::vector<uint32_t>> maximal_cliques(const Graph& g) {
    std::vector<uint32_t> masks;
    uint32_t all = g.n == 32 ? ~0u : ((1u << g.n) - 1);
    if (g.n == 0) return {};
    bron_kerbosch(g, 0, all, 0, masks);
    std::vector<std::vector<uint32_t>> cliques;
    cliques.reserve(masks.size());
    for (uint32_t m : masks) cliques.push_back(mask_to_verts(m));
    std::sort(cliques.begin(), cliques.end());
    return cliques;
}

const char* forbidden_kind_name(ForbiddenKind k) {
    switch (k) {
        case ForbiddenKind::D22: return "D(2,2)";
        case ForbiddenKind::TwoTriangles: return "two-triangles";
        case ForbiddenKind::Cycle: return "cycle";
    }
    return "?";
}

namespace {

// Chordless cycles of length >= 4 whose minimum vertex is s. The path grows
// only through vertices > s; a new vertex may touch nothing on the path
// except its predecessor, and s only when it closes a cycle of length >= 4.
void chordless_from(const Graph& g, uint32_t s, std::vector<uint32_t>& path, uint32_t onPath,
                    std::vector<ForbiddenHit>& out) {
    uint32_t last = path.back();
    for (uint32_t m = g.adj[last] & ~onPath; m; m &= m - 1) {
        uint32_t w = static_cast<uint32_t>(std::countr_zero(m));
        if (w <= s) continue;
        uint32_t touches = g.adj[w] & onPath;
        if (path.size() == 1) {
            // Second vertex: its edge back to s is the path edge, not a chord.
            path.push_back(w);
            chordless_from(g, s, path, onPath | (1u << w), out);
            path.pop_back();
            continue;
        }
        bool closesToS = g.has_edge(w, s);
        uint32_t allowed = (1u << last) | (closesToS ? (1u << s) : 0u);
        if (touches != allowed) continue;  // a chord disqualifies w entirely
        if (closesToS) {
            // Triangles are not chordless cycles here; record once per direction.
            if (path.size() >= 3 && path[1] < w) {
                std::vector<uint32_t> cyc = path;
                cyc.push_back(w);
                out.push_back({ForbiddenKind::Cycle, cyc});
            }
        } else {
            path.push_back(w);
            chordless_from(g, s, path, onPath | (1u << w), out);
            path.pop_back();
        }
    }
}

}  // namespace

std::vector<ForbiddenHit> find_forbidden(const Graph& g) {
    std::vector<ForbiddenHit> hits;
    // Four-vertex patterns by direct enumeration.
    for (uint32_t a = 0; a < g.n; ++a)
        for (uint32_t b = a + 1; b < g.n; ++b)
            for (uint32_t c = b + 1; c < g.n; ++c)
                for (uint32_t d = c + 1; d < g.n; ++d) {
                    uint32_t quad[4] = {a, b, c, d};
                    uint32_t qmask = (1u << a) | (1u << b) | (1u << c) | (1u << d);
                    uint32_t deg[4], edges = 0;
                    for (int t = 0; t < 4; ++t) {
                        deg[t] = static_cast<uint32_t>(std::popcount(g.adj[quad[t]] & qmask));
                        edges += deg[t];
                    }
                    edges /= 2;
                    if (edges == 3) {
                        // Star tree: one centre of degree 3, leaves mutually apart.
                        int centre = -1;
                        bool leaves = true;
                        for (int t = 0; t < 4; ++t) {
                            if (deg[t] == 3)
                                centre = t;
                            else if (deg[t] != 1)
                                leaves = false;
                        }
                        if (centre >= 0 && leaves)
                            hits.push_back({ForbiddenKind::D22, {a, b, c, d}});
                    } else if (edges == 5) {
                        hits.push_back({ForbiddenKind::TwoTriangles, {a, b, c, d}});
                    }
                }
    for (uint32_t s = 0; s < g.n; ++s) {
        std::vector<uint32_t> path{s};
        chordless_from(g, s, path, 1u << s, hits);
    }
    return hits;
}

CanonicalGraph canonical(const Graph& g) {
    if (g.n > 8) throw DomainTooLarge("canonical form implemented for at most 8 vertices");
    if (g.n <= 1) return {g.n, 0};
    uint64_t best = ~uint64_t{0};
    for (const auto& p : permutations_of(g.n)) {
        uint64_t mask = 0;
        for (uint32_t i = 0; i < g.n; ++i) {
            for (uint32_t m = g.adj[i] & ~((2u << i) - 1); m; m &= m - 1) {
                uint32_t j = static_cast<uint32_t>(std::countr_zero(m));
                uint32_t pi = p[i], pj = p[j];
                if (pi > pj) std::swap(pi, pj);
                mask |= uint64_t{1} << pair_pos(g.n, pi, pj);
            }
        }
        best = std::min(best, mask);
    }
    return {g.n, best};
}

}  // namespace transvec
