#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "transvec/f2core.hpp"
#include "transvec/graphs.hpp"

namespace th {

using namespace transvec;

// Symmetric form on `n` coordinates from an undirected edge list.
inline BilinearForm edge_form(uint32_t n,
                              std::initializer_list<std::pair<uint32_t, uint32_t>> edges) {
    BilinearForm f(n);
    for (auto [i, j] : edges) f.set_symmetric(i, j, 1);
    return f;
}

// Generating set = full standard basis under the given form.
inline GeneratingSet std_gens(const BilinearForm& f) {
    std::vector<F2Vec> vecs;
    for (uint32_t i = 0; i < f.n; ++i) vecs.push_back(F2Vec::unit(f.n, i));
    return GeneratingSet(f, vecs);
}

inline F2Vec vec(uint32_t n, std::initializer_list<uint32_t> support) {
    F2Vec v = F2Vec::zero(n);
    for (uint32_t i : support) v.set(i, 1);
    return v;
}

// Chain of m vertices with k extra leaves attached to the last chain vertex.
inline BilinearForm broom_form(uint32_t m, uint32_t k) {
    BilinearForm f(m + k);
    for (uint32_t i = 0; i + 1 < m; ++i) f.set_symmetric(i, i + 1, 1);
    for (uint32_t j = 0; j < k; ++j) f.set_symmetric(m - 1, m + j, 1);
    return f;
}

inline BilinearForm e6_form() {
    return edge_form(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 2}});
}

inline BilinearForm cycle_form(uint32_t r) {
    BilinearForm f(r);
    for (uint32_t i = 0; i < r; ++i) f.set_symmetric(i, (i + 1) % r, 1);
    return f;
}

// The three tree families of the classification, on 2n + p vertices each.
inline BilinearForm janssen_a_form(uint32_t n, uint32_t p) {
    BilinearForm f(2 * n + p);
    for (uint32_t i = 1; i + 1 < 2 * n - 1; ++i) f.set_symmetric(i, i + 1, 1);
    f.set_symmetric(0, 3, 1);
    for (uint32_t j = 1; j <= p + 1; ++j) f.set_symmetric(2 * n - 2, 2 * n - 2 + j, 1);
    return f;
}

inline BilinearForm janssen_b_form(uint32_t n, uint32_t p) {
    BilinearForm f(2 * n + p);
    for (uint32_t i = 2; i + 1 < 2 * n - 1; ++i) f.set_symmetric(i, i + 1, 1);
    f.set_symmetric(5, 1, 1);
    f.set_symmetric(1, 0, 1);
    for (uint32_t j = 1; j <= p + 1; ++j) f.set_symmetric(2 * n - 2, 2 * n - 2 + j, 1);
    return f;
}

inline BilinearForm janssen_c_form(uint32_t n, uint32_t p) {
    BilinearForm f(2 * n + p);
    for (uint32_t i = 1; i + 1 < 2 * n; ++i) f.set_symmetric(i, i + 1, 1);
    f.set_symmetric(0, 4, 1);
    for (uint32_t j = 1; j <= p; ++j) f.set_symmetric(2 * n - 1, 2 * n - 1 + j, 1);
    return f;
}

// Ten-coordinate worked example: six generators b1..b6 (indices 0..5) inside
// a space with four extra directions v1..v4 (indices 6..9).
inline BilinearForm ex_form() {
    return edge_form(10, {{6, 0}, {0, 4}, {8, 2}, {7, 1}, {1, 5}, {9, 3}, {0, 2}, {0, 8},
                          {1, 3}, {1, 2}, {1, 9}, {1, 8}, {2, 4}, {2, 5}, {3, 5}});
}

inline GeneratingSet ex_gens() {
    std::vector<F2Vec> vecs;
    for (uint32_t i = 0; i < 6; ++i) vecs.push_back(F2Vec::unit(10, i));
    return GeneratingSet(ex_form(), vecs);
}

// Nine-coordinate chained example: generators b1..b6 (indices 0..5), extra
// directions v1..v3 (indices 6..8). The form is symmetric inside the right
// side {b1,b2,b4,b5,v1,v2} and the left side {b3,b6,v3}, and points from
// left to right only.
inline BilinearForm exx_form() {
    BilinearForm f(9);
    for (auto [i, j] : {std::pair<uint32_t, uint32_t>{6, 0}, {0, 3}, {7, 1}, {1, 4}, {0, 7},
                        {0, 1}, {1, 3}, {3, 4}, {8, 2}, {2, 5}})
        f.set_symmetric(i, j, 1);
    for (auto [i, j] : {std::pair<uint32_t, uint32_t>{8, 1}, {2, 1}, {2, 4}, {5, 4}})
        f.set_entry(i, j, 1);
    return f;
}

inline GeneratingSet exx_gens() {
    std::vector<F2Vec> vecs;
    for (uint32_t i = 0; i < 6; ++i) vecs.push_back(F2Vec::unit(9, i));
    return GeneratingSet(exx_form(), vecs);
}

// Chain blocks of the example above: the left pair {b3,b6} feeds the right
// diamond {b1,b2,b4,b5}.
inline std::vector<std::vector<uint32_t>> exx_blocks() { return {{2, 5}, {0, 1, 3, 4}}; }

}  // namespace th
