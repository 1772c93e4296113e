#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "transvec/moves.hpp"

namespace transvec {

struct OrbitLabel {
    bool isFixed = false;
    int d = 0;  // meaningful only when moving

    static OrbitLabel fixed() { return {true, 0}; }
    static OrbitLabel moving(int d) { return {false, d}; }
    bool operator==(const OrbitLabel&) const = default;
    bool operator<(const OrbitLabel& o) const {
        if (isFixed != o.isFixed) return isFixed;
        return d < o.d;
    }
    std::string to_string() const;
};

QuadraticForm quadratic_form(const GeneratingSet& b);

// Randomized spot-check that Q really is invariant under every generator's
// transvection. Deterministic seed so failures reproduce.
bool gamma_invariance_check(const GeneratingSet& b, const QuadraticForm& q, uint32_t trials);

// Least representative of x + V000 whose support (in B-coordinates) contains
// no nonzero V000 vector's support.
F2Vec minimal_representative(const GeneratingSet& b, const F2Vec& x);

// Closed-form count read off a support subgraph: components plus the
// ceil(|A|/2) - 1 surcharge of every maximal clique A with at least 3 vertices.
int clique_sum(const Graph& g);

int d_formula(const GeneratingSet& b, const F2Vec& x);

OrbitLabel orbit_label(const GeneratingSet& b, const F2Vec& x);

// Component count of Gr(B, p(x)) where p folds every leaf coordinate of a
// literally-indexed broom onto the first leaf.
int broom_invariant(const GeneratingSet& b, const F2Vec& x);

Subspace v000_local(const GeneratingSet& b, const std::vector<uint32_t>& x);

Subspace v000_from_subgraphs(const GeneratingSet& b);

ClassLabel deletion_check(const GeneratingSet& b, const F2Vec& u, uint32_t bIdx);

}  // namespace transvec
