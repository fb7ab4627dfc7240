#include "oracles.hpp"

#include <doctest.h>

using namespace ht;
using oracle::q;

TEST_CASE("reduced invariant-form solve agrees with the full n^2 system")
{
    for (int n : {5, 7}) {
        for (const auto& id : family_ids(n)) {
            ExponentPair p;
            try {
                p = make_family(id);
            } catch (const Error&) {
                continue;
            }
            CAPTURE(id.str());
            MonodromySystem m = build(p);
            auto reduced = invariant_forms(m.A, m.B);
            auto full = oracle::invariant_forms_full(m.A, m.B);
            REQUIRE(reduced.size() == 1);
            REQUIRE(full.size() == 1);
            // proportional
            std::size_t k = 0;
            while (full[0].a[k] == 0) ++k;
            BigRational s = reduced[0].a[k] / full[0].a[k];
            CHECK(full[0].scaled(s) == reduced[0]);
        }
    }
}

TEST_CASE("lattice invariants")
{
    QuadLattice a = invariant_form(build(make_family({Family::N1, 1, 5, 5})));
    CHECK(a.parity == Parity::Even);
    CHECK(a.signature == Inertia{4, 1, 0});
    CHECK(a.hyperbolic());
    CHECK(a.gram(0, 1) == -3);
    CHECK(a.gram(0, 4) == -4);
    std::vector<BigInt> nontrivial;
    for (auto x : oracle::invariant_factors_minors(a.gram))
        if (abs(x) > 1) nontrivial.push_back(abs(x));
    CHECK(a.inv_factors == nontrivial);

    QuadLattice b = invariant_form(build(make_family({Family::N1, 1, 1, 7})));
    CHECK(b.parity == Parity::Odd);
    CHECK(b.gram(0, 1) == -4);
}

TEST_CASE("two-elementary test")
{
    CHECK(two_elementary(from_gram(IntMatrix(2, 2, {2, 0, 0, -2}))));
    CHECK_FALSE(two_elementary(from_gram(IntMatrix(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, -3}))));
}

TEST_CASE("quotient gate thresholds")
{
    QuadLattice odd31 = invariant_form(build(make_family({Family::N1, 1, 1, 31})));
    REQUIRE(odd31.parity == Parity::Odd);
    CHECK(quotient_gate(odd31).verdict == GateVerdict::InfiniteIndexCertified);
    QuadLattice odd9 = invariant_form(build(make_family({Family::N1, 1, 1, 9})));
    REQUIRE(odd9.parity == Parity::Odd);
    CHECK(quotient_gate(odd9).verdict == GateVerdict::Inconclusive);
    CHECK(nikulin_exceptions(11).empty());
}

TEST_CASE("reflection in v is C")
{
    MonodromySystem m = build(make_family({Family::M2, 5, 0, 7}));
    QuadLattice l = invariant_form(m);
    IntVec e0(7, BigInt(0));
    e0[0] = 1;
    RootVector r = make_root(l, e0);
    CHECK(r.norm == -2);
    CHECK(r.is_root);
    IntMatrix rl = reflection(l, r);
    CHECK(l.basis * rl == m.C * l.basis);
}

TEST_CASE("reflection fixture")
{
    IntMatrix f(4, 4, {2, 0, 0, 0, 0, 5, 0, 0, 0, 0, 10, 0, 0, 0, 0, -1});
    IntVec u{1, 1, 1, 4};
    CHECK(bilinear(f, u, u) == 1);
    IntMatrix ru = reflection(f, u);
    CHECK(to_rat(ru) == oracle::reflection(f, u));
    CHECK(ru.transpose() * f * ru == f);
    CHECK_THROWS_AS(reflection(f, IntVec{1, 1, 0, 0}), Error);  // norm 7, not a root
}
