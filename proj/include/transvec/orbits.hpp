#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "transvec/f2core.hpp"
#include "transvec/graphs.hpp"

namespace transvec {

inline constexpr uint64_t kOrbitBudget = uint64_t{1} << 24;

// A finite domain the group acts on: the whole ambient space, span(B), or a
// coset v + span(B). Always of the shape base + sub, with a bijection between
// members and coefficient indices.
struct Domain {
    enum class Kind { Whole, Span, Coset } kind = Kind::Whole;
    F2Vec base;
    Subspace sub;
    std::string description;

    static Domain whole(uint32_t ambient_dim);
    static Domain span_of(const GeneratingSet& b);
    static Domain coset(const GeneratingSet& b, const F2Vec& v);

    uint64_t size() const { return uint64_t{1} << sub.dim(); }
    bool contains(const F2Vec& x) const;
    uint64_t index_of(const F2Vec& x) const;  // throws NotInSpan when outside
    F2Vec at(uint64_t i) const;
};

struct OrbitClass {
    F2Vec rep;  // lexicographically least member
    uint64_t size = 0;
};

struct OrbitPartition {
    Domain domain;
    std::vector<OrbitClass> classes;       // ordered by representative
    std::vector<uint32_t> classIndex;      // domain index -> class id

    uint32_t class_of(const F2Vec& x) const;
    std::vector<F2Vec> members(uint32_t cls) const;
    uint64_t singleton_count() const;
    bool same_partition(const OrbitPartition& other) const;
};

struct DeltaDecomposition {
    std::vector<F2Vec> parts;  // pairwise orthogonal elements of Delta
};

F2Vec transvect(const BilinearForm& form, const F2Vec& a, const F2Vec& x);

std::vector<F2Vec> orbit(const GeneratingSet& b, const F2Vec& x,
                         uint64_t budget = kOrbitBudget);

OrbitPartition orbit_partition(const GeneratingSet& b, const Domain& domain,
                               uint64_t budget = kOrbitBudget);

std::vector<F2Vec> fixed_points(const GeneratingSet& b, const Domain& domain);

std::vector<F2Vec> delta_orbit(const GeneratingSet& b, uint64_t budget = kOrbitBudget);

Subspace v000(const GeneratingSet& b, uint64_t budget = kOrbitBudget);
Subspace v00(const GeneratingSet& b);

struct DOracleResult {
    int d = 0;
    DeltaDecomposition witness;
};

DOracleResult d_oracle(const GeneratingSet& b, const F2Vec& x, uint64_t budget = kOrbitBudget);

}  // namespace transvec
