#include "transvec/orbits.hpp"

#include <algorithm>
#include <unordered_set>

namespace transvec {

Domain Domain::whole(uint32_t ambient_dim) {
    Domain d;
    d.kind = Kind::Whole;
    d.base = F2Vec::zero(ambient_dim);
    std::vector<F2Vec> units;
    for (uint32_t i = 0; i < ambient_dim; ++i) units.push_back(F2Vec::unit(ambient_dim, i));
    d.sub = span(ambient_dim, units);
    d.description = "whole space (dim " + std::to_string(ambient_dim) + ")";
    return d;
}

Domain Domain::span_of(const GeneratingSet& b) {
    Domain d;
    d.kind = Kind::Span;
    d.base = F2Vec::zero(b.ambient_dim());
    d.sub = b.spanned();
    d.description = "span of the generators (dim " + std::to_string(d.sub.dim()) + ")";
    return d;
}

Domain Domain::coset(const GeneratingSet& b, const F2Vec& v) {
    Domain d;
    d.kind = Kind::Coset;
    d.base = v;
    d.sub = b.spanned();
    d.description = "coset v + span(B) (size 2^" + std::to_string(d.sub.dim()) + ")";
    return d;
}

bool Domain::contains(const F2Vec& x) const { return sub.member(x ^ base); }

uint64_t Domain::index_of(const F2Vec& x) const { return sub.coefficients(x ^ base); }

F2Vec Domain::at(uint64_t i) const { return base ^ sub.from_coefficients(i); }

uint32_t OrbitPartition::class_of(const F2Vec& x) const {
    return classIndex[domain.index_of(x)];
}

std::vector<F2Vec> OrbitPartition::members(uint32_t cls) const {
    std::vector<F2Vec> out;
    for (uint64_t i = 0; i < domain.size(); ++i)
        if (classIndex[i] == cls) out.push_back(domain.at(i));
    std::sort(out.begin(), out.end(), VecLess{});
    return out;
}

uint64_t OrbitPartition::singleton_count() const {
    uint64_t c = 0;
    for (const OrbitClass& cl : classes)
        if (cl.size == 1) ++c;
    return c;
}

bool OrbitPartition::same_partition(const OrbitPartition& other) const {
    if (domain.size() != other.domain.size()) return false;
    if (classes.size() != other.classes.size()) return false;
    // Domains must describe the same set; compare through vectors, not
    // indices, since echelon bases may differ.
    std::vector<uint32_t> map(classes.size(), UINT32_MAX);
    for (uint64_t i = 0; i < domain.size(); ++i) {
        F2Vec x = domain.at(i);
        if (!other.domain.contains(x)) return false;
        uint32_t a = classIndex[i];
        uint32_t b = other.classIndex[other.domain.index_of(x)];
        if (map[a] == UINT32_MAX)
            map[a] = b;
        else if (map[a] != b)
            return false;
    }
    // Injectivity: equal class counts plus surjectivity of the map.
    std::vector<bool> hit(classes.size(), false);
    for (uint32_t m : map) {
        if (m == UINT32_MAX || hit[m]) return false;
        hit[m] = true;
    }
    return true;
}

F2Vec transvect(const BilinearForm& form, const F2Vec& a, const F2Vec& x) {
    if (a.is_zero() || pair(form, a, a) != 0)
        throw InvalidTransvector("transvection vector must be nonzero with Omega(a,a)=0");
    return pair(form, x, a) ? x ^ a : x;
}

std::vector<F2Vec> orbit(const GeneratingSet& b, const F2Vec& x, uint64_t budget) {
    Domain d = Domain::coset(b, x);
    if (d.size() > budget) throw DomainTooLarge("orbit closure exceeds the visited-set budget");
    std::vector<bool> seen(d.size(), false);
    std::vector<uint64_t> frontier{d.index_of(x)}, result{d.index_of(x)};
    seen[frontier[0]] = true;
    while (!frontier.empty()) {
        std::vector<uint64_t> next;
        for (uint64_t idx : frontier) {
            F2Vec y = d.at(idx);
            for (const F2Vec& g : b.vecs) {
                F2Vec z = transvect(b.form, g, y);
                uint64_t zi = d.index_of(z);
                if (!seen[zi]) {
                    seen[zi] = true;
                    next.push_back(zi);
                    result.push_back(zi);
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<F2Vec> out;
    out.reserve(result.size());
    for (uint64_t idx : result) out.push_back(d.at(idx));
    std::sort(out.begin(), out.end(), VecLess{});
    return out;
}

OrbitPartition orbit_partition(const GeneratingSet& b, const Domain& domain, uint64_t budget) {
    if (domain.size() > budget) throw DomainTooLarge("domain exceeds the visited-set budget");
    // The action stays inside base + sub only when the generators lie in sub;
    // that holds for all three supported domain kinds by construction.
    for (const F2Vec& g : b.vecs)
        if (!domain.sub.member(g))
            throw NotSubspace("domain is not closed under the group action");

    OrbitPartition p;
    p.domain = domain;
    p.classIndex.assign(domain.size(), UINT32_MAX);
    std::vector<uint64_t> stack;
    std::vector<F2Vec> reps;
    for (uint64_t start = 0; start < domain.size(); ++start) {
        if (p.classIndex[start] != UINT32_MAX) continue;
        uint32_t id = static_cast<uint32_t>(reps.size());
        uint64_t count = 0;
        F2Vec least = domain.at(start);
        p.classIndex[start] = id;
        stack.push_back(start);
        while (!stack.empty()) {
            uint64_t idx = stack.back();
            stack.pop_back();
            ++count;
            F2Vec y = domain.at(idx);
            if (vec_less(y, least)) least = y;
            for (const F2Vec& g : b.vecs) {
                F2Vec z = transvect(b.form, g, y);
                uint64_t zi = domain.index_of(z);
                if (p.classIndex[zi] == UINT32_MAX) {
                    p.classIndex[zi] = id;
                    stack.push_back(zi);
                }
            }
        }
        reps.push_back(least);
        p.classes.push_back({least, count});
    }
    // Reorder classes by representative for a deterministic, basis-independent
    // presentation.
    std::vector<uint32_t> order(p.classes.size());
    for (uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t c) {
        return vec_less(p.classes[a].rep, p.classes[c].rep);
    });
    std::vector<uint32_t> rank(order.size());
    for (uint32_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
    std::vector<OrbitClass> sorted(p.classes.size());
    for (uint32_t i = 0; i < order.size(); ++i) sorted[rank[i]] = p.classes[i];
    p.classes = std::move(sorted);
    for (uint32_t& c : p.classIndex) c = rank[c];
    return p;
}

std::vector<F2Vec> fixed_points(const GeneratingSet& b, const Domain& domain) {
    // Solve pair(base + sum c_i r_i, g) = 0 for all generators g: a linear
    // system over the coefficient space of the domain.
    uint32_t d = domain.sub.dim();
    std::vector<F2Vec> rows = domain.sub.basis();
    std::vector<uint64_t> eq;   // coefficient masks
    std::vector<int> rhs;
    for (const F2Vec& g : b.vecs) {
        uint64_t mask = 0;
        for (uint32_t j = 0; j < d; ++j)
            if (pair(b.form, rows[j], g)) mask |= uint64_t{1} << j;
        eq.push_back(mask);
        rhs.push_back(pair(b.form, domain.base, g));
    }
    // Gaussian elimination.
    std::vector<uint64_t> ech;
    std::vector<int> echRhs;
    for (size_t e = 0; e < eq.size(); ++e) {
        uint64_t m = eq[e];
        int r = rhs[e];
        for (size_t t = 0; t < ech.size(); ++t) {
            uint32_t piv = static_cast<uint32_t>(std::countr_zero(ech[t]));
            if ((m >> piv) & 1u) {
                m ^= ech[t];
                r ^= echRhs[t];
            }
        }
        if (m == 0) {
            if (r) return {};  // inconsistent: no fixed points in the domain
            continue;
        }
        ech.push_back(m);
        echRhs.push_back(r);
    }
    // Particular solution: set free coordinates to zero.
    uint64_t particular = 0;
    for (size_t t = ech.size(); t-- > 0;) {
        uint32_t piv = static_cast<uint32_t>(std::countr_zero(ech[t]));
        int v = echRhs[t] ^ (std::popcount(ech[t] & particular & ~(uint64_t{1} << piv)) & 1);
        if (v) particular |= uint64_t{1} << piv;
    }
    // Kernel basis from the free coordinates.
    uint64_t pivots = 0;
    for (uint64_t row : ech) pivots |= uint64_t{1} << std::countr_zero(row);
    std::vector<uint64_t> kernel;
    for (uint32_t j = 0; j < d; ++j) {
        if ((pivots >> j) & 1u) continue;
        uint64_t k = uint64_t{1} << j;
        for (size_t t = ech.size(); t-- > 0;) {
            uint32_t piv = static_cast<uint32_t>(std::countr_zero(ech[t]));
            if (std::popcount(ech[t] & k & ~(uint64_t{1} << piv)) & 1) k |= uint64_t{1} << piv;
        }
        kernel.push_back(k);
    }
    if (kernel.size() > 24) throw DomainTooLarge("fixed-point set too large to enumerate");
    std::vector<F2Vec> out;
    for (uint64_t sel = 0; sel < (uint64_t{1} << kernel.size()); ++sel) {
        uint64_t c = particular;
        for (size_t j = 0; j < kernel.size(); ++j)
            if ((sel >> j) & 1u) c ^= kernel[j];
        out.push_back(domain.base ^ domain.sub.from_coefficients(c));
    }
    std::sort(out.begin(), out.end(), VecLess{});
    return out;
}

std::vector<F2Vec> delta_orbit(const GeneratingSet& b, uint64_t budget) {
    if (b.size() == 0) throw NotConnected("empty generating set has no Delta");
    if (!is_connected(graph_of(b)))
        throw NotConnected("Delta requires a connected generator graph");
    std::vector<F2Vec> delta = orbit(b, b.vecs[0], budget);
    for (const F2Vec& g : b.vecs)
        if (!std::binary_search(delta.begin(), delta.end(), g, VecLess{}))
            throw Error("internal: a generator escaped Delta despite connectivity");
    return delta;
}

Subspace v000(const GeneratingSet& b, uint64_t budget) {
    std::vector<F2Vec> delta = delta_orbit(b, budget);
    std::unordered_set<uint64_t> deltaBits;
    deltaBits.reserve(delta.size() * 2);
    for (const F2Vec& x : delta) deltaBits.insert(x.bits);
    Subspace v0 = radical(b.form, b.spanned());

    auto expressible = [&](const F2Vec& y) {
        for (const F2Vec& x1 : delta)
            if (deltaBits.count(y.bits ^ x1.bits)) return true;
        return false;
    };

    Subspace out(b.ambient_dim());
    for (const F2Vec& y : coset_members(F2Vec::zero(b.ambient_dim()), v0)) {
        if (y.is_zero()) continue;
        if (expressible(y)) out.insert(y);
    }
    // The span must not contain anything that is not itself a sum of two
    // Delta elements; check rather than trust.
    for (const F2Vec& y : coset_members(F2Vec::zero(b.ambient_dim()), out))
        if (!y.is_zero() && !expressible(y))
            throw Error("internal: span of pairwise Delta sums is not closed");
    return out;
}

Subspace v00(const GeneratingSet& b) {
    Subspace v0 = radical(b.form, b.spanned());
    QuadraticForm q(b.form, b.vecs, std::vector<int>(b.size(), 1));
    Subspace out(b.ambient_dim());
    for (const F2Vec& y : coset_members(F2Vec::zero(b.ambient_dim()), v0))
        if (!y.is_zero() && q(y) == 0) out.insert(y);
    for (const F2Vec& y : coset_members(F2Vec::zero(b.ambient_dim()), out))
        if (q(y) != 0) throw Error("internal: V00 span escaped the Q=0 set");
    return out;
}

namespace {

struct DeltaSearch {
    const std::vector<F2Vec>& delta;
    const std::unordered_set<uint64_t>& deltaBits;
    std::vector<std::vector<uint64_t>> orthRows;  // word-packed orthogonality masks
    uint32_t words;
    uint32_t dim;

    bool orth(uint32_t i, uint32_t j) const {
        return (orthRows[i][j >> 6] >> (j & 63)) & 1u;
    }
};

// Depth-limited search for k pairwise-orthogonal, independent Delta elements
// with the given sum, indices strictly increasing. `allowed` is word-packed.
bool dfs(const DeltaSearch& s, uint64_t rem, uint32_t minIdx, std::vector<uint64_t>& allowed,
         Subspace& chosen, uint32_t k, std::vector<uint32_t>& picks) {
    uint32_t count = static_cast<uint32_t>(s.delta.size());
    if (k == 1) {
        if (rem == 0 || !s.deltaBits.count(rem)) return false;
        uint32_t idx = static_cast<uint32_t>(
            std::lower_bound(s.delta.begin(), s.delta.end(), F2Vec(s.dim, rem), VecLess{}) -
            s.delta.begin());
        // delta is sorted by vec_less; find exact element.
        while (idx < count && s.delta[idx].bits != rem) ++idx;
        if (idx >= count || idx < minIdx) return false;
        if ((allowed[idx >> 6] >> (idx & 63)) & 1u) {
            if (chosen.member(F2Vec(s.dim, rem))) return false;
            picks.push_back(idx);
            return true;
        }
        return false;
    }
    // Feasibility: rem must lie in the span of the still-allowed elements.
    if (k >= 3) {
        Subspace feas(s.dim);
        bool covered = false;
        for (uint32_t w = 0; w < s.words && !covered; ++w) {
            for (uint64_t m = allowed[w]; m; m &= m - 1) {
                uint32_t idx = (w << 6) + static_cast<uint32_t>(std::countr_zero(m));
                if (idx < minIdx) continue;
                feas.insert(s.delta[idx]);
                if (feas.member(F2Vec(s.dim, rem))) {
                    covered = true;
                    break;
                }
            }
        }
        if (!covered) return false;
    }
    for (uint32_t w = minIdx >> 6; w < s.words; ++w) {
        uint64_t m = allowed[w];
        if (w == (minIdx >> 6)) m &= ~((uint64_t{1} << (minIdx & 63)) - 1);
        for (; m; m &= m - 1) {
            uint32_t idx = (w << 6) + static_cast<uint32_t>(std::countr_zero(m));
            const F2Vec& cand = s.delta[idx];
            if (chosen.member(cand)) continue;
            if (k == 2) {
                // Closing scan: partner must be rem ^ cand, orthogonal, later.
                uint64_t need = rem ^ cand.bits;
                if (need == 0 || !s.deltaBits.count(need)) continue;
            }
            std::vector<uint64_t> nextAllowed(s.words);
            for (uint32_t t = 0; t < s.words; ++t)
                nextAllowed[t] = allowed[t] & s.orthRows[idx][t];
            Subspace nextChosen = chosen;
            nextChosen.insert(cand);
            picks.push_back(idx);
            if (dfs(s, rem ^ cand.bits, idx + 1, nextAllowed, nextChosen, k - 1, picks))
                return true;
            picks.pop_back();
        }
    }
    return false;
}

}  // namespace

DOracleResult d_oracle(const GeneratingSet& b, const F2Vec& x, uint64_t budget) {
    if (!b.spanned().member(x)) throw NotInSpan("d is defined on the span of the generators");
    if (x.is_zero()) throw NoDecomposition("zero vector has no Delta-decomposition");
    std::vector<F2Vec> delta = delta_orbit(b, budget);
    if (delta.size() > 8192) throw DomainTooLarge("Delta too large for the decomposition search");
    std::unordered_set<uint64_t> deltaBits;
    for (const F2Vec& v : delta) deltaBits.insert(v.bits);

    uint32_t count = static_cast<uint32_t>(delta.size());
    uint32_t words = (count + 63) / 64;
    DeltaSearch s{delta, deltaBits, {}, words, b.ambient_dim()};
    s.orthRows.assign(count, std::vector<uint64_t>(words, 0));
    for (uint32_t i = 0; i < count; ++i)
        for (uint32_t j = 0; j < count; ++j)
            if (i != j && pair(b.form, delta[i], delta[j]) == 0)
                s.orthRows[i][j >> 6] |= uint64_t{1} << (j & 63);

    uint32_t maxDepth = b.size();
    for (uint32_t k = 1; k <= maxDepth; ++k) {
        std::vector<uint64_t> allowed(words, ~uint64_t{0});
        if (count & 63) allowed[words - 1] = (uint64_t{1} << (count & 63)) - 1;
        Subspace chosen(b.ambient_dim());
        std::vector<uint32_t> picks;
        if (dfs(s, x.bits, 0, allowed, chosen, k, picks)) {
            DOracleResult res;
            res.d = static_cast<int>(k);
            for (uint32_t idx : picks) res.witness.parts.push_back(delta[idx]);
            return res;
        }
    }
    throw NoDecomposition("no Delta-decomposition found (vector is in the radical?)");
}

}  // namespace transvec
