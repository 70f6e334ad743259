#ifndef DLAB_MULTIPOLY_HPP
#define DLAB_MULTIPOLY_HPP

#include "dlab/exact.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dlab {

/// Multivariate polynomial in x_0, x_1, ... with integer coefficients.
///
/// Exponent vectors have trailing zeros stripped so each monomial has one
/// key; zero coefficients are never stored.
class MultiPolyZ {
public:
    using Exponents = std::vector<std::uint32_t>;

    MultiPolyZ() = default;
    MultiPolyZ(ExactInt constant);

    static MultiPolyZ variable(std::size_t index);
    static MultiPolyZ term(ExactInt coeff, Exponents exponents);

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<Exponents, ExactInt>& terms() const noexcept { return terms_; }
    ExactInt coeff(const Exponents& exponents) const;

    MultiPolyZ& operator+=(const MultiPolyZ& rhs);
    MultiPolyZ& operator-=(const MultiPolyZ& rhs);
    MultiPolyZ& operator*=(const MultiPolyZ& rhs);

    friend MultiPolyZ operator+(MultiPolyZ a, const MultiPolyZ& b) { return a += b; }
    friend MultiPolyZ operator-(MultiPolyZ a, const MultiPolyZ& b) { return a -= b; }
    friend MultiPolyZ operator*(const MultiPolyZ& a, const MultiPolyZ& b);

    friend bool operator==(const MultiPolyZ&, const MultiPolyZ&) = default;

    /// e.g. "3*x0^2*x1 + 6*x1"; terms in lexicographic exponent order, descending.
    std::string to_string() const;

private:
    void add_term(Exponents e, const ExactInt& c);

    std::map<Exponents, ExactInt> terms_;
};

MultiPolyZ multipoly_pow(const MultiPolyZ& base, unsigned exponent);
MultiPolyZ multipoly_scale(const MultiPolyZ& p, const ExactInt& factor);
/// True iff n divides every coefficient (vacuously true for zero).
bool multipoly_coeff_divisibility(const MultiPolyZ& p, const ExactInt& n);

} // namespace dlab

#endif // DLAB_MULTIPOLY_HPP
