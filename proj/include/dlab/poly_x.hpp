#ifndef DLAB_POLY_X_HPP
#define DLAB_POLY_X_HPP

#include "dlab/exact.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dlab {

/// Dense univariate polynomial in x over the rationals.
///
/// Coefficients are indexed by degree and trailing zeros are always trimmed,
/// so the zero polynomial has no coefficients at all and degree() == nullopt.
class PolyX {
public:
    PolyX() = default;
    PolyX(ExactRat constant);
    explicit PolyX(std::vector<ExactRat> coeffs);

    static PolyX x();
    static PolyX monomial(ExactRat c, std::size_t degree);
    /// x + shift
    static PolyX linear(ExactRat shift);

    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<ExactRat>& coeffs() const noexcept { return coeffs_; }
    /// Zero beyond the stored range.
    ExactRat coeff(std::size_t i) const;

    ExactRat evaluate(const ExactRat& at) const;
    /// p(q(x)) by Horner's scheme.
    PolyX compose(const PolyX& inner) const;

    PolyX operator-() const;
    PolyX& operator+=(const PolyX& rhs);
    PolyX& operator-=(const PolyX& rhs);
    PolyX& operator*=(const PolyX& rhs);
    PolyX& operator*=(const ExactRat& scalar);

    friend PolyX operator+(PolyX a, const PolyX& b) { return a += b; }
    friend PolyX operator-(PolyX a, const PolyX& b) { return a -= b; }
    friend PolyX operator*(const PolyX& a, const PolyX& b);
    friend PolyX operator*(PolyX a, const ExactRat& s) { return a *= s; }
    friend PolyX operator*(const ExactRat& s, PolyX a) { return a *= s; }

    friend bool operator==(const PolyX& a, const PolyX& b) = default;

    /// Descending powers, e.g. "3/2*x^2 - x + 1"; "0" for zero.
    std::string to_string(char var = 'x') const;

private:
    void trim();

    std::vector<ExactRat> coeffs_;
};

PolyX pow(const PolyX& base, unsigned exponent);

/// {x choose k} = x(x-1)...(x-k+1)/k!
PolyX polyx_binomial(unsigned k);
/// {x + shift choose k}
PolyX polyx_binomial_shifted(std::int64_t shift, unsigned k);

/// Coefficients c_k of P(x) = sum_k c_k {x choose k}.
struct BinomialBasisPoly {
    std::vector<ExactRat> bcoeffs;

    PolyX to_monomial() const;
    friend bool operator==(const BinomialBasisPoly&, const BinomialBasisPoly&) = default;
};

/// c_k = (Delta^k p)(0) via iterated forward differences of p(0..deg).
BinomialBasisPoly to_binomial_basis(const PolyX& p);

/// Polya's criterion: integer-valued iff every binomial-basis coefficient is
/// an integer.
bool is_integer_valued(const PolyX& p);

/// An integer point where p takes a non-integral value, or nullopt when p is
/// integer-valued. With c_k the first non-integral binomial coefficient,
/// p(k) = sum_{i<=k} c_i C(k, i) is non-integral, so x = k is returned.
std::optional<std::int64_t> integer_valued_witness(const PolyX& p);

} // namespace dlab

#endif // DLAB_POLY_X_HPP
