#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "transvec/classify.hpp"

namespace transvec {

// Action of the transvection group on a coset v + U where U = span(B) is a
// proper subspace of the ambient space.
struct CosetProblem {
    GeneratingSet b;
    F2Vec v;

    CosetProblem(GeneratingSet basis, F2Vec vec);
};

enum class CosetBranch { TwoOrbits, FixedPointTranslation, ExtendedReduction };

const char* coset_branch_name(CosetBranch b);

struct CosetReport {
    CosetBranch branch;
    OrbitPartition partition;          // the full partition of v + U
    std::vector<F2Vec> fixedPoints;    // solutions of Omega(v+u, b) = 0 for all b
    std::optional<F2Vec> witnessFixed;      // translation base point, when used
    std::optional<F2Vec> witnessExtension;  // adjoined generator w, when used
};

// Q on span(B + {v}) taking the value 1 on every generator and on v.
QuadraticForm extended_quadratic(const GeneratingSet& b, const F2Vec& v);

std::vector<F2Vec> coset_fixed_points(const GeneratingSet& b, const F2Vec& v);

CosetReport classify_coset(const CosetProblem& problem);

OrbitPartition brute_coset_partition(const GeneratingSet& b, const F2Vec& v);

}  // namespace transvec
