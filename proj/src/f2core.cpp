#include "transvec/f2core.hpp"

#include <algorithm>

namespace transvec {

F2Vec::F2Vec(uint32_t dim, uint64_t b) : n(dim), bits(b) {
    if (dim > kMaxDim)
        throw DimensionMismatch("dimension " + std::to_string(dim) + " exceeds maximum " +
                                std::to_string(kMaxDim));
    if (dim < 64 && (b >> dim) != 0)
        throw DimensionMismatch("vector has bits beyond its dimension");
}

F2Vec F2Vec::unit(uint32_t dim, uint32_t i) {
    if (i >= dim) throw DimensionMismatch("unit index out of range");
    return F2Vec(dim, uint64_t{1} << i);
}

F2Vec& F2Vec::set(uint32_t i, int v) {
    if (i >= n) throw DimensionMismatch("coordinate index out of range");
    if (v)
        bits |= uint64_t{1} << i;
    else
        bits &= ~(uint64_t{1} << i);
    return *this;
}

std::vector<uint32_t> F2Vec::support() const {
    std::vector<uint32_t> out;
    for (uint64_t b = bits; b; b &= b - 1)
        out.push_back(static_cast<uint32_t>(std::countr_zero(b)));
    return out;
}

F2Vec operator^(const F2Vec& a, const F2Vec& b) {
    if (a.n != b.n) throw DimensionMismatch("xor of vectors with different dimensions");
    F2Vec r;
    r.n = a.n;
    r.bits = a.bits ^ b.bits;
    return r;
}

bool vec_less(const F2Vec& a, const F2Vec& b) {
    if (a.n != b.n) throw DimensionMismatch("comparing vectors of different dimensions");
    uint64_t d = a.bits ^ b.bits;
    if (d == 0) return false;
    // First differing label decides; the vector with a 0 there comes first.
    return ((a.bits >> std::countr_zero(d)) & 1u) == 0;
}

BilinearForm::BilinearForm(uint32_t dim) : n(dim), rows(dim, 0) {
    if (dim > kMaxDim)
        throw DimensionMismatch("form dimension exceeds maximum " + std::to_string(kMaxDim));
}

void BilinearForm::set_entry(uint32_t i, uint32_t j, int v) {
    if (i >= n || j >= n) throw DimensionMismatch("form index out of range");
    if (v)
        rows[i] |= uint64_t{1} << j;
    else
        rows[i] &= ~(uint64_t{1} << j);
}

void BilinearForm::set_symmetric(uint32_t i, uint32_t j, int v) {
    set_entry(i, j, v);
    set_entry(j, i, v);
}

bool BilinearForm::alternating() const {
    for (uint32_t i = 0; i < n; ++i) {
        if ((rows[i] >> i) & 1u) return false;
        for (uint32_t j = i + 1; j < n; ++j)
            if (entry(i, j) != entry(j, i)) return false;
    }
    return true;
}

int pair(const BilinearForm& form, const F2Vec& u, const F2Vec& v) {
    if (u.n != form.n || v.n != form.n)
        throw DimensionMismatch("pair: vector dimension does not match the form");
    int acc = 0;
    for (uint64_t b = u.bits; b; b &= b - 1) {
        uint32_t i = static_cast<uint32_t>(std::countr_zero(b));
        acc ^= std::popcount(form.rows[i] & v.bits) & 1;
    }
    return acc;
}

bool Subspace::insert(const F2Vec& v, uint64_t tag) {
    if (n == 0) n = v.n;
    if (v.n != n) throw DimensionMismatch("inserting vector of wrong dimension");
    uint64_t x = v.bits;
    uint64_t mix = tag;
    for (size_t i = 0; i < rows.size(); ++i) {
        uint32_t p = static_cast<uint32_t>(std::countr_zero(rows[i]));
        if ((x >> p) & 1u) {
            x ^= rows[i];
            mix ^= mixmask[i];
        }
    }
    if (x == 0) return false;
    // Insert keeping rows ordered by pivot, then re-reduce above rows.
    uint32_t p = static_cast<uint32_t>(std::countr_zero(x));
    size_t pos = 0;
    while (pos < rows.size() && static_cast<uint32_t>(std::countr_zero(rows[pos])) < p) ++pos;
    rows.insert(rows.begin() + static_cast<long>(pos), x);
    mixmask.insert(mixmask.begin() + static_cast<long>(pos), mix);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i == pos) continue;
        if ((rows[i] >> p) & 1u) {
            rows[i] ^= x;
            mixmask[i] ^= mix;
        }
    }
    return true;
}

bool Subspace::member(const F2Vec& v) const {
    if (v.n != n) throw DimensionMismatch("membership test with wrong dimension");
    uint64_t x = v.bits;
    for (uint64_t row : rows) {
        uint32_t p = static_cast<uint32_t>(std::countr_zero(row));
        if ((x >> p) & 1u) x ^= row;
    }
    return x == 0;
}

bool Subspace::contains(const Subspace& other) const {
    for (uint64_t row : other.rows)
        if (!member(F2Vec(n, row))) return false;
    return true;
}

uint64_t Subspace::coefficients(const F2Vec& x) const {
    if (x.n != n) throw DimensionMismatch("coefficients with wrong dimension");
    uint64_t rem = x.bits, c = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        uint32_t p = static_cast<uint32_t>(std::countr_zero(rows[i]));
        if ((rem >> p) & 1u) {
            rem ^= rows[i];
            c |= uint64_t{1} << i;
        }
    }
    if (rem != 0) throw NotInSpan("vector not in subspace");
    return c;
}

F2Vec Subspace::from_coefficients(uint64_t c) const {
    uint64_t x = 0;
    for (size_t i = 0; i < rows.size(); ++i)
        if ((c >> i) & 1u) x ^= rows[i];
    return F2Vec(n, x);
}

uint64_t Subspace::expansion(const F2Vec& x) const {
    if (x.n != n) throw DimensionMismatch("expansion with wrong dimension");
    uint64_t rem = x.bits, mix = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        uint32_t p = static_cast<uint32_t>(std::countr_zero(rows[i]));
        if ((rem >> p) & 1u) {
            rem ^= rows[i];
            mix ^= mixmask[i];
        }
    }
    if (rem != 0) throw NotInSpan("vector not in span of the generators");
    return mix;
}

std::vector<F2Vec> Subspace::basis() const {
    std::vector<F2Vec> out;
    out.reserve(rows.size());
    for (uint64_t row : rows) out.emplace_back(n, row);
    return out;
}

Subspace span(const std::vector<F2Vec>& vectors) {
    if (vectors.empty()) throw DimensionMismatch("span of empty list needs an explicit dimension");
    return span(vectors.front().n, vectors);
}

Subspace span(uint32_t dim, const std::vector<F2Vec>& vectors) {
    Subspace s(dim);
    for (size_t i = 0; i < vectors.size(); ++i)
        s.insert(vectors[i], i < 64 ? (uint64_t{1} << i) : 0);
    return s;
}

bool member(const Subspace& s, const F2Vec& x) { return s.member(x); }

Subspace intersect(const Subspace& s, const Subspace& t) {
    if (s.n != t.n) throw DimensionMismatch("intersecting subspaces of different spaces");
    // Zassenhaus: echelonize rows (u | u) for u in S and (v | 0) for v in T;
    // rows whose left half is zero have right halves spanning the
    // intersection. Left half is the high word so the pivot order works out.
    uint32_t n = s.n;
    std::vector<uint64_t> work;
    for (uint64_t u : s.rows) work.push_back(u | (u << n));
    for (uint64_t v : t.rows) work.push_back(v << n);
    std::vector<uint64_t> ech;
    Subspace out(n);
    for (uint64_t w : work) {
        for (uint64_t row : ech) {
            uint32_t p = 63u - static_cast<uint32_t>(std::countl_zero(row));
            if ((w >> p) & 1u) w ^= row;
        }
        if (w == 0) continue;
        if ((w >> n) == 0) {
            out.insert(F2Vec(n, w));
        } else {
            ech.push_back(w);
        }
    }
    return out;
}

int quotient_dim(const Subspace& s, const Subspace& t) {
    if (s.n != t.n) throw DimensionMismatch("quotient of subspaces of different spaces");
    if (!s.contains(t)) throw NotSubspace("quotient_dim: second space not contained in first");
    return static_cast<int>(s.dim()) - static_cast<int>(t.dim());
}

std::vector<F2Vec> coset_members(const F2Vec& v, const Subspace& s) {
    if (v.n != s.n) throw DimensionMismatch("coset base has wrong dimension");
    if (s.dim() > 24) throw DomainTooLarge("coset too large to enumerate");
    std::vector<F2Vec> out;
    out.reserve(size_t{1} << s.dim());
    for (uint64_t c = 0; c < (uint64_t{1} << s.dim()); ++c)
        out.push_back(v ^ s.from_coefficients(c));
    return out;
}

Subspace radical(const BilinearForm& form, const Subspace& ambient) {
    if (ambient.n != form.n) throw DimensionMismatch("radical: subspace of a different space");
    // Solve pair(x, r_j) = 0 over the coefficient space of `ambient`.
    uint32_t d = ambient.dim();
    std::vector<F2Vec> rows = ambient.basis();
    // System rows: one equation per basis vector of ambient, unknowns are the
    // coefficients. Build the d x d matrix A[i][j] = pair(rows[j], rows[i]),
    // then the kernel of the transpose-free system A c = 0.
    std::vector<uint64_t> eqs(d, 0);
    for (uint32_t e = 0; e < d; ++e)
        for (uint32_t j = 0; j < d; ++j)
            if (pair(form, rows[j], rows[e])) eqs[e] |= uint64_t{1} << j;
    // Kernel by column elimination: each unknown contributes a column; a
    // column that reduces to zero yields a kernel vector via its mix mask.
    Subspace out(form.n);
    std::vector<uint64_t> colech, colmix;
    for (uint32_t j = 0; j < d; ++j) {
        uint64_t col = 0;
        for (uint32_t e = 0; e < d; ++e)
            if ((eqs[e] >> j) & 1u) col |= uint64_t{1} << e;
        uint64_t mix = uint64_t{1} << j;
        for (size_t r = 0; r < colech.size(); ++r) {
            uint64_t row = colech[r];
            if (row == 0) continue;
            uint32_t p = static_cast<uint32_t>(std::countr_zero(row));
            if ((col >> p) & 1u) {
                col ^= row;
                mix ^= colmix[r];
            }
        }
        if (col == 0) {
            // combination `mix` of ambient basis rows pairs to zero with all
            F2Vec x = F2Vec::zero(form.n);
            for (uint32_t t = 0; t < d; ++t)
                if ((mix >> t) & 1u) x = x ^ rows[t];
            out.insert(x);
        } else {
            colech.push_back(col);
            colmix.push_back(mix);
        }
    }
    return out;
}

Subspace radical(const BilinearForm& form) {
    std::vector<F2Vec> units;
    for (uint32_t i = 0; i < form.n; ++i) units.push_back(F2Vec::unit(form.n, i));
    return radical(form, span(form.n, units));
}

SymplecticDecomposition symplectic_basis(const BilinearForm& form, const Subspace& ambient) {
    std::vector<F2Vec> vecs = ambient.basis();
    for (size_t i = 0; i < vecs.size(); ++i) {
        if (pair(form, vecs[i], vecs[i]))
            throw NotAlternating("form is not alternating on the subspace (diagonal)");
        for (size_t j = i + 1; j < vecs.size(); ++j)
            if (pair(form, vecs[i], vecs[j]) != pair(form, vecs[j], vecs[i]))
                throw NotAlternating("form is not alternating on the subspace (asymmetric)");
    }
    SymplecticDecomposition dec;
    // Greedy pairing: first unpaired vector with a non-orthogonal partner,
    // first such partner, then orthogonalize the rest against the pair.
    while (!vecs.empty()) {
        F2Vec u = vecs.front();
        vecs.erase(vecs.begin());
        size_t pi = vecs.size();
        for (size_t i = 0; i < vecs.size(); ++i)
            if (pair(form, u, vecs[i])) {
                pi = i;
                break;
            }
        if (pi == vecs.size()) {
            dec.radicalPart.push_back(u);
            continue;
        }
        F2Vec f = vecs[pi];
        vecs.erase(vecs.begin() + static_cast<long>(pi));
        for (F2Vec& w : vecs) {
            if (pair(form, w, f)) w = w ^ u;
            if (pair(form, w, u)) w = w ^ f;
        }
        dec.pairs.emplace_back(u, f);
    }
    return dec;
}

QuadraticForm::QuadraticForm(const BilinearForm& f, std::vector<F2Vec> g, std::vector<int> vals)
    : form(f), gens(std::move(g)), values(std::move(vals)) {
    if (values.empty()) values.assign(gens.size(), 1);
    if (values.size() != gens.size())
        throw DimensionMismatch("quadratic form needs one value per generator");
    domain = span(form.n, gens);
    if (domain.dim() != gens.size())
        throw NotBasis("quadratic form generators must be linearly independent");
    genPairRows.assign(gens.size(), 0);
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < gens.size(); ++j)
            if (pair(form, gens[i], gens[j])) genPairRows[i] |= uint64_t{1} << j;
}

int QuadraticForm::operator()(const F2Vec& x) const {
    uint64_t mix = domain.expansion(x);
    int q = 0;
    for (uint64_t b = mix; b; b &= b - 1) q ^= values[static_cast<size_t>(std::countr_zero(b))];
    // Cross terms Omega(g_i, g_j) over i<j in the support of the expansion.
    for (uint64_t b = mix; b; b &= b - 1) {
        size_t i = static_cast<size_t>(std::countr_zero(b));
        uint64_t later = mix & ~((uint64_t{2} << i) - 1);
        q ^= std::popcount(genPairRows[i] & later) & 1;
    }
    return q;
}

int arf(const QuadraticForm& q) {
    SymplecticDecomposition dec = symplectic_basis(q.form, q.domain);
    for (const F2Vec& h : dec.radicalPart)
        if (q(h))
            throw ArfUndefined("quadratic form takes value 1 on the radical");
    int a = 0;
    for (const auto& [e, f] : dec.pairs) a ^= q(e) & q(f);
    return a;
}

std::string vec_to_string(const F2Vec& v, const std::vector<std::string>& labels) {
    if (v.is_zero()) return "0";
    std::string out;
    for (uint32_t i = 0; i < v.n; ++i) {
        if (!v.get(i)) continue;
        if (!out.empty()) out += '+';
        if (i < labels.size())
            out += labels[i];
        else
            out += "x" + std::to_string(i + 1);
    }
    return out;
}

}  // namespace transvec
