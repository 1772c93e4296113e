#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "transvec/orbits.hpp"

namespace transvec {

// Ordered partition B_1..B_r of the generating set into blocks. The form is
// alternating inside every block, while across blocks it may only point from
// a block into its immediate successor, so the chain carries all of the
// asymmetry of a non-alternating form.
struct BlockDecomposition {
    GeneratingSet b;
    std::vector<std::vector<uint32_t>> blocks;  // generator indices per block
    std::vector<Graph> blockGraphs;             // induced graph of each block

    uint32_t block_count() const { return static_cast<uint32_t>(blocks.size()); }
};

// Checks the chain conditions: the pieces partition the generator list, every
// induced graph is connected, the form restricted to each block is
// alternating, every cross pair vanishes unless it points into the successor
// block, and consecutive blocks actually touch.
BlockDecomposition validate_blocks(const GeneratingSet& b,
                                   const std::vector<std::vector<uint32_t>>& blocks);

// Least j (1-based, matching the B_1..B_r numbering) whose block moves x.
uint32_t first_active_block(const BlockDecomposition& d, const F2Vec& x);

// Orbit of x predicted by the chain structure: zero the coordinates of x on
// every block after the first active one, close the result under that block
// alone, then add the full span of the later blocks. The prediction is
// checked against the plain breadth-first orbit and must match exactly.
// Requires the generators to be coordinate vectors so the projection that
// zeroes later blocks is meaningful.
std::vector<F2Vec> predicted_orbit(const BlockDecomposition& d, const F2Vec& x);

struct PathLemmaReport {
    bool hypothesesHold = false;
    std::vector<uint32_t> witnessPath;  // generator indices; starts at a mover of x, ends at b
    std::string detail;
};

// Shortest-path criterion for pushing x to x+b when b itself does not move x:
// take a shortest path in Gr(B) from T(x) = {g in B : tau_g moves x} to b,
// and test that (i) the form is not alternating on the span of the path's
// vertices and (ii) the form points forward along every step. When both hold,
// membership of x+b in the orbit of x is asserted against the breadth-first
// oracle. When b already moves x the conclusion is immediate.
PathLemmaReport path_lemma_check(const GeneratingSet& b, const F2Vec& x, uint32_t bIdx);

}  // namespace transvec
