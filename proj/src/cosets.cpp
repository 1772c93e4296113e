#include "transvec/cosets.hpp"

#include <algorithm>
#include <map>

namespace transvec {

const char* coset_branch_name(CosetBranch b) {
    switch (b) {
        case CosetBranch::TwoOrbits: return "two-orbits";
        case CosetBranch::FixedPointTranslation: return "fixed-point-translation";
        case CosetBranch::ExtendedReduction: return "extended-reduction";
    }
    return "?";
}

CosetProblem::CosetProblem(GeneratingSet basis, F2Vec vec)
    : b(std::move(basis)), v(std::move(vec)) {
    if (v.n != b.form.n) throw DimensionMismatch("coset vector has the wrong dimension");
    if (b.spanned().member(v)) throw Dependent("coset vector must lie outside span(B)");
    if (!is_connected(graph_of(b))) throw NotConnected("coset theory assumes a connected graph");
}

QuadraticForm extended_quadratic(const GeneratingSet& b, const F2Vec& v) {
    if (b.spanned().member(v)) throw Dependent("extension vector already lies in span(B)");
    std::vector<F2Vec> gens = b.vecs;
    gens.push_back(v);
    return QuadraticForm(b.form, std::move(gens));
}

std::vector<F2Vec> coset_fixed_points(const GeneratingSet& b, const F2Vec& v) {
    std::vector<F2Vec> fixed = fixed_points(b, Domain::coset(b, v));
    // The emptiness proposition: v pairing nontrivially with U000 forbids
    // fixed points altogether.
    bool pairsWithU000 = false;
    for (const F2Vec& w : v000(b).basis())
        if (pair(b.form, v, w)) pairsWithU000 = true;
    if (pairsWithU000 && !fixed.empty())
        throw Error("internal invariant failure: fixed point despite Omega(v, U000) != 0");
    return fixed;
}

namespace {

// Assemble an OrbitPartition over `domain` from an arbitrary labelling,
// renumbering classes so that they are ordered by least representative.
OrbitPartition assemble(const Domain& domain, const std::vector<uint64_t>& keyOf) {
    OrbitPartition part;
    part.domain = domain;
    std::map<uint64_t, uint32_t> ids;
    std::vector<OrbitClass> classes;
    std::vector<uint32_t> raw(domain.size());
    for (uint64_t i = 0; i < domain.size(); ++i) {
        auto [it, fresh] = ids.emplace(keyOf[i], static_cast<uint32_t>(classes.size()));
        if (fresh) classes.push_back({domain.at(i), 0});
        OrbitClass& cls = classes[it->second];
        F2Vec x = domain.at(i);
        if (vec_less(x, cls.rep)) cls.rep = x;
        ++cls.size;
        raw[i] = it->second;
    }
    std::vector<uint32_t> order(classes.size());
    for (uint32_t i = 0; i < classes.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t c) {
        return vec_less(classes[a].rep, classes[c].rep);
    });
    std::vector<uint32_t> rank(classes.size());
    for (uint32_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
    part.classes.resize(classes.size());
    for (uint32_t i = 0; i < classes.size(); ++i) part.classes[rank[i]] = classes[i];
    part.classIndex.resize(raw.size());
    for (uint64_t i = 0; i < raw.size(); ++i) part.classIndex[i] = rank[raw[i]];
    return part;
}

// Key space: fixed points get unique keys above the Q/label values.
constexpr uint64_t kFixedWatermark = uint64_t{1} << 32;

CosetReport level_set_report(const GeneratingSet& b, const F2Vec& v, const Domain& domain,
                             std::vector<F2Vec> fixed, bool expectNoFixed) {
    if (expectNoFixed && !fixed.empty())
        throw Error("internal invariant failure: unexpected fixed point in a two-orbit coset");
    QuadraticForm q = extended_quadratic(b, v);
    std::vector<uint64_t> keys(domain.size());
    uint64_t movingSeen[2] = {0, 0};
    for (uint64_t i = 0; i < domain.size(); ++i) {
        F2Vec x = domain.at(i);
        if (std::find(fixed.begin(), fixed.end(), x) != fixed.end()) {
            keys[i] = kFixedWatermark + i;
            continue;
        }
        int val = q(x);
        ++movingSeen[val];
        keys[i] = static_cast<uint64_t>(val);
    }
    if (domain.size() > fixed.size() && (movingSeen[0] == 0 || movingSeen[1] == 0))
        throw Error("internal invariant failure: level-set split is not two orbits");
    CosetReport report;
    report.branch = CosetBranch::TwoOrbits;
    report.partition = assemble(domain, keys);
    report.fixedPoints = std::move(fixed);
    return report;
}

}  // namespace

CosetReport classify_coset(const CosetProblem& problem) {
    const GeneratingSet& b = problem.b;
    const F2Vec& v = problem.v;
    if (b.size() < 2) throw DimensionTooSmall("coset classification needs dim U >= 2");
    Domain domain = Domain::coset(b, v);
    Graph g = graph_of(b);

    if (contains_e6(g)) {
        // Level sets of the extended Q, with every fixed point split off.
        return level_set_report(b, v, domain, coset_fixed_points(b, v), false);
    }

    bool pairsWithU000 = false;
    for (const F2Vec& w : v000(b).basis())
        if (pair(b.form, v, w)) pairsWithU000 = true;
    if (pairsWithU000) {
        return level_set_report(b, v, domain, coset_fixed_points(b, v), true);
    }

    std::vector<F2Vec> fixed = coset_fixed_points(b, v);
    if (!fixed.empty()) {
        // Translating by a fixed point carries orbits of U onto orbits of v+U.
        const F2Vec& base = fixed.front();  // least solution; fixed_points sorts
        OrbitPartition inU = orbit_partition(b, Domain::span_of(b));
        std::vector<uint64_t> keys(domain.size());
        for (uint64_t i = 0; i < domain.size(); ++i)
            keys[i] = inU.class_of(domain.at(i) ^ base);
        CosetReport report;
        report.branch = CosetBranch::FixedPointTranslation;
        report.partition = assemble(domain, keys);
        report.fixedPoints = std::move(fixed);
        report.witnessFixed = base;
        return report;
    }

    // No fixed point and v orthogonal to U000: adjoin a vector of v+U that
    // keeps the graph connected and free of the six-vertex fork; orbits in
    // v+U are then cut out by the orbits of the extended basis.
    std::vector<F2Vec> candidates;
    candidates.reserve(domain.size());
    for (uint64_t i = 0; i < domain.size(); ++i) candidates.push_back(domain.at(i));
    std::sort(candidates.begin(), candidates.end(), VecLess{});
    for (const F2Vec& w : candidates) {
        if (pair(b.form, w, w) != 0) continue;
        std::vector<F2Vec> extended = b.vecs;
        extended.push_back(w);
        GeneratingSet bw(b.form, extended);
        Graph gw = graph_of(bw);
        if (!is_connected(gw) || contains_e6(gw)) continue;

        std::vector<uint64_t> keys(domain.size());
        for (uint64_t i = 0; i < domain.size(); ++i) {
            F2Vec x = domain.at(i);
            OrbitLabel label = orbit_label(bw, x);
            keys[i] = label.isFixed ? kFixedWatermark + i
                                    : static_cast<uint64_t>(label.d);
        }
        CosetReport report;
        report.branch = CosetBranch::ExtendedReduction;
        report.partition = assemble(domain, keys);
        report.witnessExtension = w;
        return report;
    }
    throw NoExtensionFound("no extension vector yields a connected fork-free graph");
}

OrbitPartition brute_coset_partition(const GeneratingSet& b, const F2Vec& v) {
    return orbit_partition(b, Domain::coset(b, v));
}

}  // namespace transvec
