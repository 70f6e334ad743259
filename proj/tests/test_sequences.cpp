#include "dlab/sequences.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace dlab;

namespace {

ExactRat rat(long n, long d = 1) { return ExactRat(ExactInt(n), ExactInt(d)); }

ExactInt ib(long n, long k) { return ExactInt(oracle::falling_binomial(n, static_cast<int>(k))); }

// d_n(x) and s_n(x) at an integer straight from the defining sums, using the
// falling-factorial oracle for every binomial.
ExactInt d_direct(int n, long x) {
    ExactInt r(0);
    for (int k = 0; k <= n; ++k) r += ib(n, k) * ib(x, k) * pow(ExactInt(2), k);
    return r;
}

ExactInt s_direct(int n, long x) {
    ExactInt r(0);
    for (int k = 0; k <= n; ++k) r += ib(n, k) * ib(x, k) * ib(x + k, k);
    return r;
}

} // namespace

TEST_CASE("d_n and s_n as polynomials") {
    CHECK(d_poly(0) == PolyX(rat(1)));
    CHECK(d_poly(1).to_string() == "2*x + 1");
    CHECK(s_poly(0) == PolyX(rat(1)));
    CHECK(s_poly(1).to_string() == "x^2 + x + 1");
    CHECK(s_alt_poly(1).to_string() == "x^2 + x + 1");
    for (int n = 0; n <= 12; ++n) {
        CHECK(d_poly(n).degree() == static_cast<std::size_t>(n));
        CHECK(s_poly(n).degree() == static_cast<std::size_t>(2 * n));
        CHECK(s_poly(n) == s_alt_poly(n));
    }
}

TEST_CASE("d_n(m) counts lattice paths") {
    for (int m = 0; m <= 8; ++m) {
        for (int n = 0; n <= 8; ++n) {
            CHECK(d_poly(n).evaluate(rat(m)) == ExactRat(ExactInt(oracle::delannoy_paths(m, n))));
            CHECK(delannoy_number(m, n).to_mpz() == oracle::delannoy_paths(m, n));
        }
    }
}

TEST_CASE("integer-point values agree with the polynomials and the defining sums") {
    for (int n = 0; n <= 10; ++n) {
        for (long x = -15; x <= 15; ++x) {
            CHECK(d_value(n, ExactInt(x)) == d_direct(n, x));
            CHECK(s_value(n, ExactInt(x)) == s_direct(n, x));
            CHECK(ExactRat(d_value(n, ExactInt(x))) == d_poly(n).evaluate(rat(x)));
            CHECK(ExactRat(s_value(n, ExactInt(x))) == s_poly(n).evaluate(rat(x)));
        }
    }
}

TEST_CASE("square identities") {
    CHECK(dn_square_rhs(0) == PolyX(rat(1)));
    CHECK(dn_square_rhs(1) == PolyX(rat(1)) + PolyX({rat(0), rat(4), rat(4)}));
    CHECK(sn_square_rhs(1) == s_poly(1) * s_poly(1));
    for (int n = 0; n <= 25; ++n) CHECK(dn_square_rhs(n) == d_poly(n) * d_poly(n));
    for (int n = 0; n <= 12; ++n) CHECK(sn_square_rhs(n) == s_poly(n) * s_poly(n));
}

TEST_CASE("reflection symmetry of d_n") {
    const PolyX reflect = PolyX({rat(-1), rat(-1)});
    for (int n = 0; n <= 25; ++n) {
        CHECK(d_poly(n).compose(reflect) == d_poly(n) * rat(n % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("double sums A_n(r) and B_n(r)") {
    for (int r = 0; r <= 6; ++r) {
        CHECK(double_sum_A(0, r) == ExactInt(r == 0 ? 1 : 0));
        CHECK(double_sum_B(0, r) == ExactInt(r == 0 ? 1 : 0));
    }
    for (int n = 0; n <= 12; ++n) {
        for (int r = 0; r <= 2 * n; ++r) CHECK(double_sum_A(n, r) == double_sum_B(n, r));
    }
    for (int n = 0; n <= 12; ++n) CHECK(double_sum_A(n, 0) == ExactInt(1));
}

TEST_CASE("odd-weight column sums") {
    for (int n = 0; n <= 40; ++n) {
        for (int k = 0; k <= n; ++k) {
            ExactInt direct(0);
            for (int i = k; i < n; ++i) direct += ExactInt(2 * i + 1) * ib(i + k, 2 * k);
            CHECK(odd_weight_column_sum(n, k) == direct);
            CHECK(ExactRat(direct) == odd_weight_column_closed(n, k));
        }
    }
}

TEST_CASE("weighted sums at documented points") {
    CHECK(sum_expression_value({SumKind::kDSquareScaled, 1, 1}, ExactInt(1)) == rat(1));
    CHECK(sum_expression_value({SumKind::kSSquareScaled, 2, 1}, ExactInt(1)) == rat(7));
    CHECK(to_string(SumKind::kMixedPowerAlternating) == "ds_power_alt");
    CHECK(uses_power(SumKind::kDPower));
    CHECK_FALSE(uses_power(SumKind::kSSquareScaled));
}

TEST_CASE("integer fast path and polynomial path agree") {
    for (SumKind kind : {SumKind::kDSquareScaled, SumKind::kDPower, SumKind::kDPowerAlternating, SumKind::kSSquareScaled,
                         SumKind::kSPower, SumKind::kSPowerAlternating, SumKind::kMixedPower,
                         SumKind::kMixedPowerAlternating}) {
        for (int n = 1; n <= 5; ++n) {
            for (int m = 1; m <= (uses_power(kind) ? 3 : 1); ++m) {
                const SumSpec spec{kind, n, m};
                const PolyX poly = sum_expression_poly(spec);
                for (long x = -6; x <= 6; ++x) CHECK(sum_expression_value(spec, ExactInt(x)) == poly.evaluate(rat(x)));
            }
        }
    }
}

TEST_CASE("the weighted sums are integers and integer-valued on small grids") {
    for (SumKind kind : {SumKind::kDSquareScaled, SumKind::kDPower, SumKind::kDPowerAlternating, SumKind::kSSquareScaled,
                         SumKind::kSPower, SumKind::kSPowerAlternating}) {
        for (int n = 1; n <= 5; ++n) {
            for (int m = 1; m <= (uses_power(kind) ? 2 : 1); ++m) {
                const SumSpec spec{kind, n, m};
                CHECK(is_integer_valued(sum_expression_poly(spec)));
                for (long x = -12; x <= 12; ++x) CHECK(sum_expression_value(spec, ExactInt(x)).is_integer());
            }
        }
    }
    // Halving one of them is caught (its value at x = 1 is 7/2).
    const PolyX too_far = sum_expression_poly({SumKind::kSSquareScaled, 2, 1}) * rat(1, 2);
    CHECK_FALSE(is_integer_valued(too_far));
}

TEST_CASE("single-sum and double-sum forms of the scaled sums") {
    for (int n = 1; n <= 15; ++n) CHECK(sum_expression_poly({SumKind::kDSquareScaled, n, 1}) == d_square_scaled_single_sum(n));
    for (int n = 1; n <= 10; ++n) CHECK(sum_expression_poly({SumKind::kSSquareScaled, n, 1}) == s_square_scaled_double_sum(n));
}

TEST_CASE("binomial quotients") {
    CHECK(integrality_pair(3, 2, 1, 0).first == rat(72));
    for (int n = 1; n <= 6; ++n) {
        CHECK(integrality_pair(n, 3, n, 0).first.is_zero());
        for (int m = 1; m <= 6; ++m) {
            for (int k = 0; k <= n + m; ++k) {
                for (int j = 0; j <= k; ++j) {
                    auto [a, b] = integrality_pair(n, m, k, j);
                    CHECK(a.is_integer());
                    CHECK(b.is_integer());
                }
            }
        }
    }
}

TEST_CASE("Schmidt polynomials and their power sums") {
    const MultiPolyZ x0 = MultiPolyZ::variable(0), x1 = MultiPolyZ::variable(1), x2 = MultiPolyZ::variable(2);
    CHECK(schmidt_poly(0) == x0);
    CHECK(schmidt_poly(1) == x0 + MultiPolyZ(2) * x1);
    CHECK(schmidt_poly(2) == x0 + MultiPolyZ(6) * x1 + MultiPolyZ(6) * x2);
    for (int eps : {1, -1}) {
        for (int m = 1; m <= 3; ++m) {
            for (int n = 1; n <= 6; ++n) {
                MultiPolyZ direct;
                for (int k = 0; k < n; ++k) {
                    MultiPolyZ t = multipoly_pow(schmidt_poly(k), m) * MultiPolyZ(2 * k + 1);
                    direct += (eps == -1 && k % 2 == 1) ? multipoly_scale(t, ExactInt(-1)) : t;
                }
                CHECK(schmidt_power_sum(n, m, eps) == direct);
                CHECK(multipoly_coeff_divisibility(direct, ExactInt(n)));
            }
        }
    }
}
