#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "transvec/graphs.hpp"
#include "transvec/orbits.hpp"

namespace transvec {

enum class ClassKind { DType, TreeA, TreeB, TreeC };

// Invariant data the classifier reads off the basis; kept alongside the label
// so callers can audit how a verdict was reached.
struct ClassWitnesses {
    uint32_t dimV = 0;
    uint32_t dimV0 = 0;
    uint32_t dimV000 = 0;
    bool qNontrivialOnRadical = false;
    std::optional<int> arf;
};

struct ClassLabel {
    ClassKind kind;
    // DType parameters (broom with a chain of m and k extra leaves).
    uint32_t m = 0, k = 0;
    // Tree-family parameters (dim V = 2n + p).
    uint32_t n = 0, p = 0;
    ClassWitnesses witnesses;

    std::string to_string() const;
    bool same_label(const ClassLabel& o) const {
        return kind == o.kind && m == o.m && k == o.k && n == o.n && p == o.p;
    }
};

const char* class_kind_name(ClassKind k);

// Replace generator c by c + a (requires the two to pair nontrivially).
GeneratingSet basic_move(const GeneratingSet& b, uint32_t c, uint32_t a);

inline constexpr uint64_t kMoveBudget = 1u << 20;

// All graphs reachable from g by basic moves, as canonical forms.
std::set<CanonicalGraph> equivalence_class(const Graph& g, uint64_t budget = kMoveBudget);

// Some 6-vertex subset whose induced subgraph is move-equivalent to the
// six-vertex Dynkin tree with a fork, or nullopt.
std::optional<std::vector<uint32_t>> contains_e6(const Graph& g);

bool is_dm1(const Graph& g);

ClassLabel recognize(const GeneratingSet& b);

GeneratingSet normalize_to_tree(const GeneratingSet& b, uint64_t budget = kMoveBudget);

}  // namespace transvec
