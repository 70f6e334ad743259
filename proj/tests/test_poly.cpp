#include "dlab/laurent.hpp"
#include "dlab/multipoly.hpp"
#include "dlab/poly_x.hpp"
#include "dlab/q_structures.hpp"
#include "dlab/sequences.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace dlab;

namespace {

ExactRat rat(long n, long d = 1) { return ExactRat(ExactInt(n), ExactInt(d)); }

PolyX random_poly(int max_degree, int den_max) {
    std::vector<ExactRat> c;
    const int deg = static_cast<int>(oracle::uniform(0, max_degree));
    for (int i = 0; i <= deg; ++i) c.push_back(rat(oracle::uniform(-9, 9), oracle::uniform(1, den_max)));
    return PolyX(std::move(c));
}

LaurentQ random_laurent(int width, int span = 6) {
    std::vector<LaurentQ::Term> t;
    const long lo = oracle::uniform(-span, span);
    for (int i = 0; i < width; ++i) t.emplace_back(lo + oracle::uniform(0, 2 * span), ExactInt(oracle::uniform(-5, 5)));
    return LaurentQ(std::move(t));
}

oracle::QMap as_map(const LaurentQ& a) {
    oracle::QMap m;
    for (const auto& [e, c] : a.terms()) m[e] = c.to_mpz();
    return m;
}

} // namespace

TEST_CASE("PolyX basics and canonical text") {
    CHECK_FALSE(PolyX().degree().has_value());
    CHECK(PolyX().to_string() == "0");
    CHECK(PolyX(std::vector<ExactRat>{rat(1), rat(0), rat(0)}).degree() == 0u);
    CHECK(PolyX({rat(1), rat(-1), rat(3, 2)}).to_string() == "3/2*x^2 - x + 1");
    CHECK(PolyX({rat(0), rat(-2)}).to_string() == "-2*x");
    CHECK((PolyX::x() * PolyX::x() - PolyX::x() * PolyX::x()).is_zero());
    CHECK(PolyX::linear(rat(3)).evaluate(rat(-3)).is_zero());
    const PolyX p({rat(1), rat(2), rat(1)});
    CHECK(p.compose(PolyX::linear(rat(-1))) == PolyX::x() * PolyX::x());
    CHECK(pow(PolyX::linear(rat(1)), 5).coeff(2) == rat(10));
}

TEST_CASE("polyx_binomial") {
    CHECK(polyx_binomial(0) == PolyX(rat(1)));
    CHECK(polyx_binomial(1) == PolyX::x());
    CHECK(polyx_binomial(2) == PolyX({rat(0), rat(-1, 2), rat(1, 2)}));
    for (unsigned k = 0; k <= 10; ++k) {
        for (long x = -12; x <= 12; ++x) {
            CHECK(polyx_binomial(k).evaluate(rat(x)) == ExactRat(ExactInt(oracle::falling_binomial(x, k))));
            CHECK(polyx_binomial_shifted(3, k).evaluate(rat(x)) == ExactRat(ExactInt(oracle::falling_binomial(x + 3, k))));
        }
    }
}

TEST_CASE("binomial basis conversion") {
    CHECK(to_binomial_basis(PolyX::x() * PolyX::x()).bcoeffs == std::vector<ExactRat>{rat(0), rat(1), rat(2)});
    CHECK(to_binomial_basis(polyx_binomial(3)).bcoeffs == std::vector<ExactRat>{rat(0), rat(0), rat(0), rat(1)});
    CHECK(to_binomial_basis(PolyX(rat(5))).bcoeffs == std::vector<ExactRat>{rat(5)});
    CHECK(to_binomial_basis(PolyX()).bcoeffs.empty());

    for (int i = 0; i < 100; ++i) {
        PolyX p = random_poly(20, 6);
        CHECK(to_binomial_basis(p).to_monomial() == p);
    }
}

TEST_CASE("integer-valuedness by the binomial basis agrees with evaluation") {
    CHECK(is_integer_valued(PolyX({rat(0), rat(1, 2), rat(1, 2)})));
    CHECK(to_binomial_basis(PolyX({rat(0), rat(1, 2), rat(1, 2)})).bcoeffs == std::vector<ExactRat>{rat(0), rat(1), rat(1)});
    CHECK_FALSE(is_integer_valued(PolyX({rat(0), rat(1, 2)})));
    CHECK(integer_valued_witness(PolyX({rat(0), rat(1, 2)})) == 1);
    CHECK(is_integer_valued(d_poly(3) * d_poly(3)));

    int valued = 0;
    for (int i = 0; i < 200; ++i) {
        PolyX p;
        if (i % 2 == 0) {
            // Integer combination of binomials: integer-valued by construction.
            for (unsigned k = 0; k <= static_cast<unsigned>(oracle::uniform(0, 8)); ++k) {
                p += polyx_binomial(k) * rat(oracle::uniform(-6, 6));
            }
            if (oracle::uniform(0, 2) == 0) p += PolyX::monomial(rat(1, oracle::uniform(2, 5)), oracle::uniform(0, 8));
        } else {
            p = random_poly(8, 4);
        }
        const long deg = p.degree().value_or(0);
        bool all_integer = true;
        for (long x = -(deg + 1); x <= deg + 1; ++x) all_integer = all_integer && p.evaluate(rat(x)).is_integer();
        CHECK(is_integer_valued(p) == all_integer);
        const auto w = integer_valued_witness(p);
        CHECK(w.has_value() == !all_integer);
        if (w) CHECK_FALSE(p.evaluate(rat(*w)).is_integer());
        valued += all_integer;
    }
    CHECK(valued > 50);  // both kinds of input were exercised
    CHECK(valued < 200);
}

TEST_CASE("LaurentQ arithmetic and text") {
    LaurentQ a({{-1, ExactInt(1)}, {0, ExactInt(1)}});
    LaurentQ b({{1, ExactInt(1)}, {0, ExactInt(-1)}});
    CHECK(laurent_mul(a, b) == LaurentQ({{1, ExactInt(1)}, {-1, ExactInt(-1)}}));
    CHECK(laurent_mul(a, LaurentQ(1)) == a);
    CHECK(laurent_sub(a, a).is_zero());
    CHECK(laurent_add(a, b).to_string() == "q + q^-1");
    CHECK(LaurentQ::q_power(-3).to_string() == "q^-3");
    CHECK(LaurentQ({{2, ExactInt(1)}, {1, ExactInt(-3)}, {0, ExactInt(1)}, {-1, ExactInt(1)}}).to_string() ==
          "q^2 - 3*q + 1 + q^-1");
    CHECK(LaurentQ().to_string() == "0");
    CHECK(LaurentQ({{3, ExactInt(2)}, {3, ExactInt(-2)}}).is_zero());
    CHECK(LaurentQ::from_dense({ExactInt(1), ExactInt(0), ExactInt(2), ExactInt(0)}, -1).to_string() == "2*q + q^-1");
    CHECK(a.invert_variable() == LaurentQ({{1, ExactInt(1)}, {0, ExactInt(1)}}));
    CHECK(b.at_one().is_zero());
    CHECK(a.min_exponent() == -1);
    CHECK_FALSE(LaurentQ().max_exponent().has_value());
}

TEST_CASE("LaurentQ ring axioms against a schoolbook oracle") {
    for (int i = 0; i < 150; ++i) {
        LaurentQ a = random_laurent(6), b = random_laurent(5), c = random_laurent(4);
        CHECK(as_map(a * b) == oracle::qmul(as_map(a), as_map(b)));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a - b) + b == a);
        if (!b.is_zero()) CHECK(laurent_exact_div(a * b, b) == a);
    }
}

TEST_CASE("exact division") {
    CHECK(laurent_exact_div(LaurentQ::one_minus_q_pow(4), LaurentQ::one_minus_q_pow(2)) ==
          LaurentQ({{0, ExactInt(1)}, {2, ExactInt(1)}}));
    CHECK_THROWS_AS(laurent_exact_div(LaurentQ::one_minus_q_pow(3), LaurentQ::one_minus_q_pow(2)), NotDivisible);
    try {
        laurent_exact_div(LaurentQ::one_minus_q_pow(3), LaurentQ::one_minus_q_pow(2));
    } catch (const NotDivisible& e) {
        CHECK_FALSE(e.remainder().is_zero());
    }
    LaurentQ a({{-2, ExactInt(3)}, {5, ExactInt(-1)}});
    CHECK(laurent_exact_div(a, LaurentQ(1)) == a);
    CHECK(laurent_exact_div(LaurentQ(), LaurentQ::one_minus_q_pow(3)).is_zero());
    CHECK_THROWS(laurent_exact_div(a, LaurentQ()));
    for (int n = 1; n <= 40; ++n) {
        LaurentQ qn = laurent_exact_div(LaurentQ::one_minus_q_pow(n), LaurentQ::one_minus_q_pow(1));
        CHECK(qn.terms().size() == static_cast<std::size_t>(n));
        for (const auto& [e, c] : qn.terms()) CHECK(c.is_one());
        CHECK(qn == q_integer(n));
    }
}

TEST_CASE("non-negativity and polynomial remainder") {
    CHECK(laurent_is_nonneg(LaurentQ::from_dense({ExactInt(1), ExactInt(1), ExactInt(2)})));
    CHECK_FALSE(laurent_is_nonneg(LaurentQ::one_minus_q_pow(1)));
    CHECK(laurent_is_nonneg(q_binomial(4, 2)));
    CHECK(laurent_is_nonneg(LaurentQ()));

    const LaurentQ m = pow(cyclotomic(3), 2);
    for (int i = 0; i < 50; ++i) {
        std::vector<ExactInt> qc, rc;
        for (int j = 0; j < 6; ++j) qc.push_back(ExactInt(oracle::uniform(-4, 4)));
        for (int j = 0; j < 4; ++j) rc.push_back(ExactInt(oracle::uniform(-4, 4)));
        LaurentQ r = LaurentQ::from_dense(rc);
        CHECK(polynomial_remainder(LaurentQ::from_dense(qc) * m + r, m) == r);
    }
    CHECK_THROWS(polynomial_remainder(LaurentQ::q_power(-1), m));
    CHECK_THROWS(polynomial_remainder(LaurentQ(5), LaurentQ({{1, ExactInt(2)}})));
}

TEST_CASE("MultiPolyZ") {
    const MultiPolyZ x0 = MultiPolyZ::variable(0), x1 = MultiPolyZ::variable(1);
    const MultiPolyZ p = MultiPolyZ(3) * x0 + MultiPolyZ(6) * x1;
    CHECK(multipoly_coeff_divisibility(p, ExactInt(3)));
    CHECK_FALSE(multipoly_coeff_divisibility(MultiPolyZ(3) * x0 + MultiPolyZ(4) * x1, ExactInt(3)));
    CHECK((MultiPolyZ(3) * x0 * x0 * x1 + MultiPolyZ(6) * x1).to_string() == "3*x0^2*x1 + 6*x1");
    CHECK(multipoly_pow(x0 + x1, 3).coeff({1, 2}) == ExactInt(3));
    CHECK(multipoly_pow(x0 + x1, 3).coeff({1, 2, 0, 0}) == ExactInt(3));
    CHECK(multipoly_scale(p, ExactInt(0)).is_zero());
    CHECK((p - p).is_zero());
    CHECK(MultiPolyZ::term(ExactInt(2), {0, 0, 0}) == MultiPolyZ(2));

    // sum_{k<5} (2k+1) S_k: every coefficient is a multiple of 5.
    MultiPolyZ sum;
    for (int k = 0; k < 5; ++k) sum += MultiPolyZ(2 * k + 1) * schmidt_poly(k);
    CHECK(multipoly_coeff_divisibility(sum, ExactInt(5)));
    CHECK(sum == schmidt_power_sum(5, 1, 1));
}
