#include "oracles.hpp"

#include <doctest.h>

using namespace ht;
using oracle::q;

namespace {

ExponentPair pair(std::vector<BigRational> a, std::vector<BigRational> b) { return ExponentPair::make(a, b); }

}  // namespace

TEST_CASE("classification examples")
{
    Classification c = classify(pair({q(1, 3), q(1, 2), q(2, 3)}, {q(0), q(1, 4), q(3, 4)}));
    CHECK(c.cyclotomic);
    CHECK(c.disjoint);
    CHECK(c.hyperbolic);
    CHECK(c.sig_defect == 1);

    Classification f = classify(pair({q(1, 4), q(3, 4)}, {q(0), q(1, 2)}));
    CHECK(f.sig_defect == 2);
    CHECK(f.category == Category::Finite);

    CHECK_FALSE(classify(pair({q(0), q(1, 2)}, {q(0), q(1, 2)})).disjoint);
    CHECK_THROWS_AS(pair({q(0)}, {q(0), q(1, 2)}), Error);
    CHECK_THROWS_AS(pair({q(1)}, {q(0)}), Error);
}

TEST_CASE("scalar shift")
{
    ExponentPair p = make_family({Family::M2, 2, 0, 5});
    CHECK(scalar_shift(p, q(0)) == p);
    CHECK(scalar_shift(p, q(1)) == p);
    CHECK(scalar_shift(scalar_shift(p, q(1, 2)), q(1, 2)) == p);
    ExponentPair s = scalar_shift(p, q(1, 2));
    // the reference-row form of M2(2,5)
    CHECK(s == pair({q(0), q(1, 8), q(3, 8), q(5, 8), q(7, 8)}, {q(1, 4), q(1, 2), q(1, 2), q(1, 2), q(3, 4)}));
    CHECK(classify(s).hyperbolic);
}

TEST_CASE("family constructions")
{
    CHECK(make_family({Family::N1, 1, 5, 5}) ==
          pair({q(0), q(1, 6), q(1, 3), q(2, 3), q(5, 6)}, {q(1, 2), q(1, 5), q(2, 5), q(3, 5), q(4, 5)}));
    CHECK(make_family({Family::M2, 3, 0, 5}) ==
          pair({q(1, 2), q(1, 8), q(3, 8), q(5, 8), q(7, 8)}, {q(0), q(0), q(0), q(1, 3), q(2, 3)}));
    CHECK_THROWS_AS(make_family({Family::M1, 2, 0, 7}), Error);
    CHECK_THROWS_AS(parse_family("Q9"), Error);
    // the factorial-ratio families written out independently
    for (int n : {5, 7, 9}) {
        CHECK(make_family({Family::N1, 1, n, n}) == oracle::factorial_family_i(n));
        CHECK(make_family({Family::M2, n - 2, 0, n}) == oracle::factorial_family_ii(n));
    }
}

TEST_CASE("match_family round trip")
{
    for (int n : {5, 7}) {
        for (const auto& id : family_ids(n)) {
            ExponentPair p;
            try {
                p = make_family(id);
            } catch (const Error&) {
                continue;
            }
            auto ids = match_family(p);
            CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
            auto shifted = match_family(scalar_shift(p, q(1, 3)));
            CHECK(std::find(shifted.begin(), shifted.end(), id) != shifted.end());
        }
    }
}

TEST_CASE("match_family agrees with an exhaustive equality scan at n = 3")
{
    ExponentPair p = pair({q(1, 3), q(1, 2), q(2, 3)}, {q(0), q(1, 4), q(3, 4)});
    std::vector<FamilyId> expect;
    for (const auto& id : family_ids(3)) {
        ExponentPair f;
        try {
            f = make_family(id);
        } catch (const Error&) {
            continue;
        }
        for (long s = 0; s < 12; ++s)
            if (scalar_shift(p, q(s, 12)) == f) {
                expect.push_back(id);
                break;
            }
    }
    // the scan finds the shift by 1/2 of M1(1,3) = ((0,1/6,5/6), (1/4,1/2,3/4))
    CHECK(expect == std::vector<FamilyId>{{Family::M1, 1, 0, 3}});
    CHECK(match_family(p) == expect);
    CHECK(scalar_shift(make_family({Family::M1, 1, 0, 3}), q(1, 2)) == p);
}

TEST_CASE("factorial forms")
{
    FactorialForm t = to_factorial_form(pair({q(1, 2)}, {q(0)}));
    CHECK(t.a_list == std::vector<unsigned>{2});
    CHECK(t.b_list == std::vector<unsigned>{1, 1});

    FactorialForm ii = to_factorial_form(oracle::factorial_family_ii(5));
    CHECK(ii.a_list == std::vector<unsigned>{8, 2});
    CHECK(ii.b_list == std::vector<unsigned>{4, 3, 1, 1, 1});
    CHECK(ii.d == 3);
    CHECK(landau_integral(ii));

    CHECK_FALSE(landau_integral(to_factorial_form(oracle::factorial_family_i(5))));
    // the printed series for family (i) is the factorial form of the exchanged pair
    ExponentPair i5 = oracle::factorial_family_i(5);
    FactorialForm sw = to_factorial_form(ExponentPair::make(i5.beta, i5.alpha));
    CHECK(sw.a_list == std::vector<unsigned>{5, 2, 2});
    CHECK(sw.b_list == std::vector<unsigned>{6, 1, 1, 1});
    CHECK_FALSE(landau_integral(sw));

    CHECK(landau_integral(FactorialForm{{}, {}, 0}));
}

TEST_CASE("Landau criterion against direct coefficient evaluation")
{
    // u_m = prod (a_i m)! / prod (b_j m)!, checked for m < 30
    auto integral_direct = [](const FactorialForm& ff) {
        for (unsigned m = 1; m < 30; ++m) {
            BigInt num = 1, den = 1;
            for (unsigned a : ff.a_list) {
                BigInt f;
                mpz_fac_ui(f.get_mpz_t(), a * m);
                num *= f;
            }
            for (unsigned b : ff.b_list) {
                BigInt f;
                mpz_fac_ui(f.get_mpz_t(), b * m);
                den *= f;
            }
            if (num % den != 0) return false;
        }
        return true;
    };
    for (int n : {5, 7}) {
        for (const auto& id : family_ids(n)) {
            ExponentPair p;
            try {
                p = make_family(id);
            } catch (const Error&) {
                continue;
            }
            FactorialForm ff = to_factorial_form(p);
            CHECK(landau_integral(ff) == integral_direct(ff));
        }
    }
}
