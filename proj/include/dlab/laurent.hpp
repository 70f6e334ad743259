#ifndef DLAB_LAURENT_HPP
#define DLAB_LAURENT_HPP

#include "dlab/exact.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dlab {

/// Laurent polynomial in q with integer coefficients.
///
/// Stored sparsely as (exponent, coefficient) terms sorted by exponent with
/// no zero coefficients, so exponents may be negative and widely spread.
class LaurentQ {
public:
    using Term = std::pair<std::int64_t, ExactInt>;

    LaurentQ() = default;
    LaurentQ(ExactInt constant);
    template <std::integral T>
    LaurentQ(T constant) : LaurentQ(ExactInt(constant)) {}
    /// Terms in any order; repeated exponents are summed, zeros dropped.
    explicit LaurentQ(std::vector<Term> terms);

    static LaurentQ monomial(ExactInt c, std::int64_t exponent);
    static LaurentQ q_power(std::int64_t exponent) { return monomial(ExactInt(1), exponent); }
    /// 1 - q^a
    static LaurentQ one_minus_q_pow(std::int64_t a);
    /// Dense coefficients c_0 + c_1 q + ..., trailing zeros allowed.
    static LaurentQ from_dense(const std::vector<ExactInt>& coeffs, std::int64_t low_exponent = 0);

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::optional<std::int64_t> min_exponent() const;
    std::optional<std::int64_t> max_exponent() const;
    ExactInt coeff(std::int64_t exponent) const;

    /// Value at q = 1.
    ExactInt at_one() const;
    /// Substitutes q -> q^-1.
    LaurentQ invert_variable() const;
    /// Multiplies by q^s.
    LaurentQ shifted(std::int64_t s) const;

    LaurentQ operator-() const;
    LaurentQ& operator+=(const LaurentQ& rhs);
    LaurentQ& operator-=(const LaurentQ& rhs);
    LaurentQ& operator*=(const LaurentQ& rhs);
    LaurentQ& operator*=(const ExactInt& scalar);

    friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
    friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
    friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
    friend LaurentQ operator*(LaurentQ a, const ExactInt& s) { return a *= s; }

    friend bool operator==(const LaurentQ& a, const LaurentQ& b) = default;

    /// Descending powers, e.g. "q^2 - 3*q + 1 + q^-1"; "0" for zero.
    std::string to_string(char var = 'q') const;

private:
    std::vector<Term> terms_;
};

LaurentQ pow(const LaurentQ& base, unsigned exponent);

/// Signals that a Laurent quotient does not exist; carries the nonzero
/// remainder left by long division as a witness.
class NotDivisible : public std::domain_error {
public:
    NotDivisible(const std::string& what, LaurentQ remainder)
        : std::domain_error(what), remainder_(std::move(remainder)) {}
    const LaurentQ& remainder() const noexcept { return remainder_; }

private:
    LaurentQ remainder_;
};

LaurentQ laurent_add(const LaurentQ& a, const LaurentQ& b);
LaurentQ laurent_sub(const LaurentQ& a, const LaurentQ& b);
LaurentQ laurent_mul(const LaurentQ& a, const LaurentQ& b);

/// Exact quotient num/den in Z[q, q^-1]. Throws NotDivisible when den does
/// not divide num; this is the polynomiality test for q-expressions.
/// Throws std::domain_error when den is zero.
LaurentQ laurent_exact_div(const LaurentQ& num, const LaurentQ& den);

/// True iff no stored coefficient is negative.
bool laurent_is_nonneg(const LaurentQ& a);

/// Remainder of polynomial division of a by m. Both must have non-negative
/// exponents and m must have leading coefficient +-1.
LaurentQ polynomial_remainder(const LaurentQ& a, const LaurentQ& m);

} // namespace dlab

#endif // DLAB_LAURENT_HPP
