#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "transvec/f2core.hpp"

namespace transvec {

// Ordered, linearly independent generating list B together with the ambient
// form. Every b must satisfy Omega(b,b)=0 so that tau_b is a transvection.
struct GeneratingSet {
    BilinearForm form;
    std::vector<F2Vec> vecs;
    std::vector<std::string> labels;  // ambient coordinate names (optional)

    GeneratingSet() = default;
    GeneratingSet(BilinearForm f, std::vector<F2Vec> v, std::vector<std::string> labs = {});

    uint32_t size() const { return static_cast<uint32_t>(vecs.size()); }
    uint32_t ambient_dim() const { return form.n; }
    Subspace spanned() const { return span(form.n, vecs); }
    std::string name_of(uint32_t i) const;
    GeneratingSet without(uint32_t i) const;
};

// Simple undirected graph, adjacency as bit rows. `tags` maps vertices back
// to generator indices when the graph is an induced subgraph.
struct Graph {
    uint32_t n = 0;
    std::vector<uint32_t> adj;
    std::vector<uint32_t> tags;

    Graph() = default;
    explicit Graph(uint32_t vertices);

    bool has_edge(uint32_t i, uint32_t j) const { return (adj[i] >> j) & 1u; }
    void add_edge(uint32_t i, uint32_t j);
    uint32_t edge_count() const;
    Graph induced(const std::vector<uint32_t>& vertices) const;
    uint64_t edge_mask() const;  // packed upper-triangle encoding
    static Graph from_edge_mask(uint32_t n, uint64_t mask);
};

struct CanonicalGraph {
    uint32_t n = 0;
    uint64_t code = 0;
    auto operator<=>(const CanonicalGraph&) const = default;
};

Graph graph_of(const GeneratingSet& b);
Graph support_subgraph(const GeneratingSet& b, const F2Vec& x);  // throws NotInSpan

std::vector<std::vector<uint32_t>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

std::vector<std::vector<uint32_t>> maximal_cliques(const Graph& g);

enum class ForbiddenKind { D22, TwoTriangles, Cycle };

struct ForbiddenHit {
    ForbiddenKind kind;
    std::vector<uint32_t> vertices;
};

const char* forbidden_kind_name(ForbiddenKind k);

// All induced occurrences of the three patterns: the 4-vertex star tree, two
// triangles sharing an edge, and chordless cycles of length >= 4.
std::vector<ForbiddenHit> find_forbidden(const Graph& g);

CanonicalGraph canonical(const Graph& g);

}  // namespace transvec
