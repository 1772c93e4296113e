#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "transvec/errors.hpp"

namespace transvec {

// Hard cap on the ambient dimension. Everything fits in one 64-bit word and
// the Zassenhaus intersection below needs room for two stacked copies.
inline constexpr uint32_t kMaxDim = 32;

// A vector in F2^n. Bit i of `bits` is the coordinate on the i-th ambient
// basis vector (little-endian with respect to the declared label order).
struct F2Vec {
    uint32_t n = 0;
    uint64_t bits = 0;

    F2Vec() = default;
    F2Vec(uint32_t dim, uint64_t b);
    static F2Vec zero(uint32_t dim) { return F2Vec(dim, 0); }
    static F2Vec unit(uint32_t dim, uint32_t i);

    int get(uint32_t i) const { return static_cast<int>((bits >> i) & 1u); }
    F2Vec& set(uint32_t i, int v);
    bool is_zero() const { return bits == 0; }
    int popcount() const { return std::popcount(bits); }
    std::vector<uint32_t> support() const;

    friend F2Vec operator^(const F2Vec& a, const F2Vec& b);
    bool operator==(const F2Vec& o) const { return n == o.n && bits == o.bits; }
    bool operator!=(const F2Vec& o) const { return !(*this == o); }
};

// Order used everywhere a "lexicographically least" vector is required:
// compare coordinates in label order, absent-before-present. Equivalently the
// textual bitstrings compare as strings.
bool vec_less(const F2Vec& a, const F2Vec& b);

struct VecLess {
    bool operator()(const F2Vec& a, const F2Vec& b) const { return vec_less(a, b); }
};

// n x n bilinear form over F2; rows[i] holds Omega(e_i, e_j) in bit j.
struct BilinearForm {
    uint32_t n = 0;
    std::vector<uint64_t> rows;

    BilinearForm() = default;
    explicit BilinearForm(uint32_t dim);

    int entry(uint32_t i, uint32_t j) const { return static_cast<int>((rows[i] >> j) & 1u); }
    void set_entry(uint32_t i, uint32_t j, int v);
    void set_symmetric(uint32_t i, uint32_t j, int v);
    bool alternating() const;  // symmetric with zero diagonal
};

int pair(const BilinearForm& form, const F2Vec& u, const F2Vec& v);

// Subspace in reduced echelon form. Pivots are the lowest set bits, rows
// ordered by pivot. `mixmask[i]` records which of the original spanning
// vectors were combined into rows[i]; it makes expansion in a given basis
// (not just membership) cheap, which the quadratic-form evaluation needs.
struct Subspace {
    uint32_t n = 0;
    std::vector<uint64_t> rows;
    std::vector<uint64_t> mixmask;

    Subspace() = default;
    explicit Subspace(uint32_t dim) : n(dim) {}

    uint32_t dim() const { return static_cast<uint32_t>(rows.size()); }
    // Returns false if v was already in the span, true if the row was added.
    bool insert(const F2Vec& v, uint64_t tag = 0);
    bool member(const F2Vec& v) const;
    bool contains(const Subspace& other) const;
    // Coefficients over the echelon rows: x = XOR of rows[i] with bit i set.
    // Bijective between span members and [0, 2^dim).
    uint64_t coefficients(const F2Vec& x) const;  // throws NotInSpan
    F2Vec from_coefficients(uint64_t c) const;
    // Combination of the *original* spanning vectors giving x (via mixmask).
    uint64_t expansion(const F2Vec& x) const;  // throws NotInSpan
    std::vector<F2Vec> basis() const;
};

Subspace span(const std::vector<F2Vec>& vectors);
Subspace span(uint32_t dim, const std::vector<F2Vec>& vectors);
bool member(const Subspace& s, const F2Vec& x);
Subspace intersect(const Subspace& s, const Subspace& t);
int quotient_dim(const Subspace& s, const Subspace& t);  // throws NotSubspace
// v + S, each member exactly once, deterministic order (coefficient masks
// ascending).
std::vector<F2Vec> coset_members(const F2Vec& v, const Subspace& s);

struct SymplecticDecomposition {
    std::vector<std::pair<F2Vec, F2Vec>> pairs;  // Omega(e_i, f_i) = 1
    std::vector<F2Vec> radicalPart;
};

// {x in ambient : Omega(x, u) = 0 for all u in ambient}.
Subspace radical(const BilinearForm& form, const Subspace& ambient);
Subspace radical(const BilinearForm& form);  // ambient = whole space

SymplecticDecomposition symplectic_basis(const BilinearForm& form, const Subspace& ambient);

// Quadratic form determined by values on an independent generating list:
// Q(sum g_i) = sum values_i + sum_{i<j} Omega(g_i, g_j). Defined only on the
// span of the generators; elsewhere evaluation raises NotInSpan.
struct QuadraticForm {
    BilinearForm form;
    std::vector<F2Vec> gens;
    std::vector<int> values;  // one per generator, normally all 1
    Subspace domain;
    std::vector<uint64_t> genPairRows;  // pairwise Omega among gens

    QuadraticForm() = default;
    // Omitting `vals` takes the value 1 on every generator.
    QuadraticForm(const BilinearForm& f, std::vector<F2Vec> g, std::vector<int> vals = {});

    int operator()(const F2Vec& x) const;  // throws NotInSpan
};

int arf(const QuadraticForm& q);  // throws ArfUndefined

std::string vec_to_string(const F2Vec& v, const std::vector<std::string>& labels);

}  // namespace transvec
