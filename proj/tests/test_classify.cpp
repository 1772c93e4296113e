#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "transvec/classify.hpp"

using namespace transvec;

TEST_CASE("quadratic form basics") {
    GeneratingSet edge = th::std_gens(th::edge_form(2, {{0, 1}}));
    QuadraticForm q = quadratic_form(edge);
    CHECK(q(F2Vec::unit(2, 0)) == 1);
    CHECK(q(F2Vec::unit(2, 1)) == 1);
    CHECK(q(F2Vec::zero(2)) == 0);
    CHECK(q(th::vec(2, {0, 1})) == 1);  // 1 + 1 + 1

    // the defining relation on random pairs
    GeneratingSet b = th::std_gens(th::broom_form(4, 2));
    QuadraticForm qb = quadratic_form(b);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        F2Vec u(6, rng() & 63), v(6, rng() & 63);
        CHECK(qb(u ^ v) == (qb(u) ^ qb(v) ^ pair(b.form, u, v)));
    }
}

TEST_CASE("gamma invariance check") {
    GeneratingSet b = th::std_gens(th::broom_form(4, 2));
    CHECK(gamma_invariance_check(b, quadratic_form(b), 1000));

    // corrupting one generator value breaks invariance
    std::vector<int> vals(6, 1);
    vals[2] = 0;
    QuadraticForm bad(b.form, b.vecs, vals);
    CHECK(!gamma_invariance_check(b, bad, 1000));
}

TEST_CASE("minimal representatives") {
    GeneratingSet d32 = th::std_gens(th::broom_form(3, 2));
    CHECK(minimal_representative(d32, th::vec(5, {0, 3, 4})) == F2Vec::unit(5, 0));

    GeneratingSet d22 = th::std_gens(th::broom_form(2, 2));
    F2Vec rep = minimal_representative(d22, th::vec(4, {1, 2, 3}));
    CHECK(rep.popcount() == 1);

    // trivial V000: every vector is its own representative
    GeneratingSet d31 = th::std_gens(th::broom_form(3, 1));
    F2Vec x = th::vec(4, {0, 2, 3});
    CHECK(minimal_representative(d31, x) == x);

    CHECK_THROWS_AS(minimal_representative(d32, th::vec(5, {3, 4})), InRadical);
    CHECK_THROWS_AS(minimal_representative(th::std_gens(th::e6_form()), F2Vec::unit(6, 0)),
                    NotDType);
}

TEST_CASE("representative independence of d") {
    // every valid representative yields the same clique sum
    for (const BilinearForm& f : {th::broom_form(3, 2), th::broom_form(4, 2)}) {
        GeneratingSet b = th::std_gens(f);
        Subspace rad = radical(b.form, b.spanned());
        Subspace u000 = v000(b);
        std::vector<uint64_t> blockers;
        for (const F2Vec& w : coset_members(F2Vec::zero(b.form.n), u000))
            if (!w.is_zero()) blockers.push_back(b.spanned().expansion(w));
        for (uint64_t bits = 1; bits < (uint64_t{1} << b.size()); ++bits) {
            F2Vec x(b.form.n, bits);
            if (rad.member(x)) continue;
            std::set<int> values;
            for (const F2Vec& cand : coset_members(x, u000)) {
                uint64_t mask = b.spanned().expansion(cand);
                bool valid = true;
                for (uint64_t w : blockers)
                    if ((w & ~mask) == 0) valid = false;
                if (valid) values.insert(clique_sum(support_subgraph(b, cand)));
            }
            CHECK(values.size() == 1);
            CHECK(*values.begin() == d_formula(b, x));
        }
    }
}

TEST_CASE("d formula values") {
    GeneratingSet d41 = th::std_gens(th::broom_form(4, 1));
    CHECK(d_formula(d41, F2Vec::unit(5, 0)) == 1);
    CHECK(d_formula(d41, th::vec(5, {0, 2})) == 2);
    CHECK_THROWS_AS(d_formula(d41, th::vec(5, {0, 2, 4})), InRadical);
    CHECK_THROWS_AS(d_formula(th::std_gens(th::e6_form()), F2Vec::unit(6, 0)), NotDType);

    // the triangle's full support evaluates through the clique surcharge
    Graph tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(0, 2);
    CHECK(clique_sum(tri) == 2);

    // formula agrees with the oracle across a whole small fixture
    GeneratingSet d32 = th::std_gens(th::broom_form(3, 2));
    Subspace rad32 = radical(d32.form, d32.spanned());
    for (uint64_t bits = 1; bits < 32; ++bits) {
        F2Vec x(5, bits);
        if (rad32.member(x)) continue;
        CHECK(d_formula(d32, x) == d_oracle(d32, x).d);
    }
}

TEST_CASE("d level sets match orbits") {
    GeneratingSet d42 = th::std_gens(th::broom_form(4, 2));
    OrbitPartition part = orbit_partition(d42, Domain::whole(6));
    Subspace rad = radical(d42.form, d42.spanned());
    std::map<int, std::set<uint32_t>> classesOfLevel;
    for (uint64_t bits = 1; bits < 64; ++bits) {
        F2Vec x(6, bits);
        if (rad.member(x)) continue;
        classesOfLevel[d_formula(d42, x)].insert(part.class_of(x));
    }
    // each level is exactly one orbit, and levels exhaust the moving classes
    uint32_t movingTotal = 0;
    for (const auto& [level, ids] : classesOfLevel) {
        CHECK(ids.size() == 1);
        movingTotal += ids.size();
    }
    CHECK(movingTotal == part.classes.size() - part.singleton_count());
}

TEST_CASE("orbit labels") {
    GeneratingSet d32 = th::std_gens(th::broom_form(3, 2));
    CHECK(orbit_label(d32, th::vec(5, {3, 4})) == OrbitLabel::fixed());
    CHECK(orbit_label(d32, F2Vec::unit(5, 0)) == OrbitLabel::moving(1));
    CHECK(orbit_label(d32, th::vec(5, {0, 2})) == OrbitLabel::moving(2));

    GeneratingSet e6 = th::std_gens(th::e6_form());
    QuadraticForm q = quadratic_form(e6);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        F2Vec x(6, 1 + (rng() % 63));
        CHECK(orbit_label(e6, x) == OrbitLabel::moving(2 - q(x)));
    }
    CHECK(orbit_label(e6, F2Vec::zero(6)) == OrbitLabel::fixed());
    CHECK(OrbitLabel::fixed().to_string() == "fixed");
    CHECK(OrbitLabel::moving(2).to_string() == "moving(d=2)");
}

TEST_CASE("broom fold invariant") {
    GeneratingSet d41 = th::std_gens(th::broom_form(4, 1));
    CHECK(broom_invariant(d41, F2Vec::unit(5, 0)) == 1);
    CHECK(broom_invariant(d41, th::vec(5, {0, 2})) == 2);

    GeneratingSet d32 = th::std_gens(th::broom_form(3, 2));
    CHECK(broom_invariant(d32, F2Vec::unit(5, 4)) == 1);   // c2 folds onto c1
    CHECK(broom_invariant(d32, th::vec(5, {3, 4})) == 0);  // c1+c2 folds away

    CHECK_THROWS_AS(broom_invariant(th::std_gens(th::cycle_form(4)), F2Vec::unit(4, 0)),
                    NotNormalForm);
}

TEST_CASE("broom fold induces the orbit partition") {
    for (const BilinearForm& f : {th::broom_form(3, 2), th::broom_form(4, 2)}) {
        GeneratingSet b = th::std_gens(f);
        uint32_t n = b.form.n;
        OrbitPartition part = orbit_partition(b, Domain::whole(n));
        Subspace rad = radical(b.form, b.spanned());
        std::map<int, std::set<uint32_t>> byFold;
        for (uint64_t bits = 1; bits < (uint64_t{1} << n); ++bits) {
            F2Vec x(n, bits);
            if (rad.member(x)) continue;
            byFold[broom_invariant(b, x)].insert(part.class_of(x));
        }
        for (const auto& [fold, ids] : byFold) CHECK(ids.size() == 1);
        CHECK(byFold.size() == part.classes.size() - part.singleton_count());
    }
}

TEST_CASE("local V000 slices") {
    // a 5-cycle meets V000 exactly in its all-ones sum
    GeneratingSet c5 = th::std_gens(th::cycle_form(5));
    Subspace s = v000_local(c5, {0, 1, 2, 3, 4});
    CHECK(s.dim() == 1);
    CHECK(s.member(th::vec(5, {0, 1, 2, 3, 4})));

    // the star pattern recovers the whole V000 of the star
    GeneratingSet d22 = th::std_gens(th::broom_form(2, 2));
    Subspace w = v000_local(d22, {0, 1, 2, 3});
    CHECK(w.dim() == 2);

    // a 4-cycle contributes its all-ones vector
    GeneratingSet c4 = th::std_gens(th::cycle_form(4));
    Subspace z = v000_local(c4, {0, 1, 2, 3});
    CHECK(z.member(th::vec(4, {0, 1, 2, 3})));

    // an edge of a chain has nothing to contribute
    GeneratingSet d31 = th::std_gens(th::broom_form(3, 1));
    CHECK_THROWS_AS(v000_local(d31, {0, 1}), EmptyIntersection);
}

TEST_CASE("V000 assembled from forbidden subgraphs") {
    CHECK(v000_from_subgraphs(th::std_gens(th::broom_form(5, 1))).dim() == 0);
    CHECK(v000_from_subgraphs(th::std_gens(th::cycle_form(5))).dim() == 1);
    CHECK(v000_from_subgraphs(th::std_gens(th::broom_form(2, 2))).dim() == 2);
    CHECK(v000_from_subgraphs(th::std_gens(th::broom_form(6, 2))).dim() == 1);

    // move-scrambled D(3,3) still assembles correctly
    std::mt19937_64 rng(71);
    GeneratingSet cur = th::std_gens(th::broom_form(3, 3));
    for (int step = 0; step < 25; ++step) {
        uint32_t c = rng() % 6, a = rng() % 6;
        if (c == a || pair(cur.form, cur.vecs[c], cur.vecs[a]) == 0) continue;
        cur = basic_move(cur, c, a);
    }
    Subspace assembled = v000_from_subgraphs(cur);
    Subspace brute = v000(cur);
    CHECK(assembled.dim() == brute.dim());
    for (const F2Vec& v : assembled.basis()) CHECK(brute.member(v));
}

TEST_CASE("leaf deletion corollary") {
    GeneratingSet d22 = th::std_gens(th::broom_form(2, 2));
    ClassLabel l = deletion_check(d22, th::vec(4, {2, 3}), 3);
    CHECK(l.kind == ClassKind::DType);
    CHECK(l.m == 2);
    CHECK(l.k == 1);

    GeneratingSet d33 = th::std_gens(th::broom_form(3, 3));
    ClassLabel l2 = deletion_check(d33, th::vec(6, {3, 4}), 3);
    CHECK(l2.m == 3);
    CHECK(l2.k == 2);

    GeneratingSet d31 = th::std_gens(th::broom_form(3, 1));
    CHECK_THROWS_AS(deletion_check(d31, th::vec(4, {3}), 3), CorollaryViolated);
    // u outside V000
    CHECK_THROWS_AS(deletion_check(d22, th::vec(4, {1}), 1), CorollaryViolated);
    // index outside u's support
    CHECK_THROWS_AS(deletion_check(d22, th::vec(4, {2, 3}), 0), CorollaryViolated);
}
