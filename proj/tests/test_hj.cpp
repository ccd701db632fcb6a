#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qgdef/hj.hpp>

using namespace qgdef;

namespace {

HJChain reversed(const HJChain& c) {
    HJChain r = c;
    std::reverse(r.weights.begin(), r.weights.end());
    return r;
}

} // namespace

TEST_CASE("continued fraction expansions") {
    CHECK(hj_expand(CyclicQuotient::make(9, 5)).weights == std::vector<long>{2, 5});
    CHECK(hj_expand(CyclicQuotient::make(2, 1)).weights == std::vector<long>{2});
    CHECK(hj_expand(CyclicQuotient::make(9, 7)).weights == std::vector<long>{2, 2, 2, 3});
}

TEST_CASE("chain evaluation") {
    CHECK(chain_to_type(HJChain{{2, 5}}) == CyclicQuotient::make(9, 5));
    CHECK(chain_to_type(HJChain{{3}}) == CyclicQuotient::make(3, 1));
    CHECK(chain_to_type(HJChain{{3, 2, 2, 2}}) == CyclicQuotient::make(9, 4));
    CHECK_THROWS_AS(chain_to_type(HJChain{{2, 1, 2}}), WeightBelowTwoError);
}

TEST_CASE("conjugate types") {
    CHECK(conjugate_type(CyclicQuotient::make(9, 5)) == CyclicQuotient::make(9, 2));
    CHECK(conjugate_type(CyclicQuotient::make(7, 1)) == CyclicQuotient::make(7, 1));
    CHECK(conjugate_type(CyclicQuotient::make(9, 7)) == CyclicQuotient::make(9, 4));
}

TEST_CASE("round trip and reversal duality up to n = 200") {
    for (long n = 2; n <= 200; ++n) {
        for (long a = 1; a < n; ++a) {
            mpz_class g;
            mpz_class zn = n, za = a;
            mpz_gcd(g.get_mpz_t(), zn.get_mpz_t(), za.get_mpz_t());
            if (g != 1) continue;
            CyclicQuotient q = CyclicQuotient::make(n, a);
            HJChain chain = hj_expand(q);
            CHECK(chain_to_type(chain) == q);
            CHECK(chain_to_type(reversed(chain)) == conjugate_type(q));
            CHECK(conjugate_type(conjugate_type(q)) == q);
        }
    }
}

TEST_CASE("discrepancies") {
    auto d95 = discrepancy_vector(CyclicQuotient::make(9, 5));
    REQUIRE(d95.size() == 2);
    CHECK(d95[0] == Rational(-1, 3)); // (a - n + 1)/n
    CHECK(d95[1] == Rational(-2, 3));

    auto d21 = discrepancy_vector(CyclicQuotient::make(2, 1));
    REQUIRE(d21.size() == 1);
    CHECK(d21[0] == Rational(0)); // DuVal

    auto d31 = discrepancy_vector(CyclicQuotient::make(3, 1));
    REQUIRE(d31.size() == 1);
    CHECK(d31[0] == Rational(-1, 3));
}

TEST_CASE("discrepancies are log terminal: entries in (-1, 0]") {
    for (long n = 2; n <= 30; ++n) {
        for (long a = 1; a < n; ++a) {
            mpz_class g;
            mpz_class zn = n, za = a;
            mpz_gcd(g.get_mpz_t(), zn.get_mpz_t(), za.get_mpz_t());
            if (g != 1) continue;
            CyclicQuotient q = CyclicQuotient::make(n, a);
            auto disc = discrepancy_vector(q);
            CHECK(disc.front() == Rational(a - n + 1, n));
            for (const Rational& d : disc) {
                CHECK(d > Rational(-1));
                CHECK(d <= Rational(0));
            }
        }
    }
}

TEST_CASE("closed-form different") {
    CHECK(diff_closed_form(2) == Rational(1, 2));
    CHECK(diff_closed_form(1) == Rational(0));
    CHECK(diff_closed_form(9) == Rational(8, 9));
    CHECK_THROWS_AS(diff_closed_form(0), InvalidParametersError);
}

TEST_CASE("slt blow-up facts") {
    auto f95 = slt_blowup_facts(9, 5);
    CHECK(f95.e_label_1() == "1/9(1,1)"); // 2a = 10 = 1 mod 9
    CHECK(f95.e_label_2() == "1/9(1,8)");
    CHECK(f95.ky_dot_f == Rational(-1, 9));

    CHECK(slt_blowup_facts(2, 1).ky_dot_f == Rational(-1)); // even case -2/n
    auto f31 = slt_blowup_facts(3, 1);
    CHECK(f31.e_label_1() == "1/3(1,2)");
    CHECK(f31.e_label_2() == "1/3(1,1)");
    CHECK(f31.ky_dot_f == Rational(-1, 3));

    CHECK_THROWS_AS(slt_blowup_facts(4, 2), InvalidParametersError);
}

TEST_CASE("ordinary double point blow-up facts") {
    auto f = odp_blowup_facts();
    CHECK(f.fiber_components == 2);
    CHECK(f.ky_dot_fiber == Rational(-1, 2));
    CHECK(f.fhat_sq == Rational(-1, 2));
    CHECK(f.e_singularity == "(xy-z^2=0)");
}

TEST_CASE("unreasonably long chains are refused") {
    CHECK_THROWS_AS(hj_expand(CyclicQuotient::make(mpz_class(3000000), mpz_class(2999999))),
                    InvalidParametersError);
}
