#ifndef DLAB_EXACT_HPP
#define DLAB_EXACT_HPP

// Exact scalars: arbitrary-precision integers and rationals, residues
// modulo an integer, and the elementary number theory built on them.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace dlab {

/// Arbitrary-precision signed integer.
///
/// Values that fit in an int64_t are stored inline and use overflow-checked
/// machine arithmetic; anything larger is promoted to a GMP integer. The
/// representation is canonical: a value is big only when it does not fit,
/// so equality never has to compare across representations.
class ExactInt {
public:
    ExactInt() noexcept : rep_(std::int64_t{0}) {}

    template <std::signed_integral T>
    ExactInt(T v) noexcept : rep_(static_cast<std::int64_t>(v)) {}

    template <std::unsigned_integral T>
    ExactInt(T v) {
        if (static_cast<std::uint64_t>(v) <= static_cast<std::uint64_t>(INT64_MAX)) {
            rep_ = static_cast<std::int64_t>(v);
        } else {
            const std::uint64_t wide = v;
            mpz_class z;
            mpz_import(z.get_mpz_t(), 1, 1, sizeof(wide), 0, 0, &wide);
            rep_ = std::move(z);
        }
    }

    explicit ExactInt(const mpz_class& z);
    explicit ExactInt(mpz_class&& z);

    /// Parses an optionally signed decimal literal; throws std::invalid_argument.
    static ExactInt from_string(std::string_view text);

    int sign() const noexcept;
    bool is_zero() const noexcept { return is_small() && small() == 0; }
    bool is_one() const noexcept { return is_small() && small() == 1; }
    bool fits_int64() const noexcept { return is_small(); }

    /// Throws std::overflow_error when the value does not fit.
    std::int64_t to_int64() const;
    mpz_class to_mpz() const;
    std::string to_string() const;

    ExactInt operator-() const;
    ExactInt& operator+=(const ExactInt& rhs);
    ExactInt& operator-=(const ExactInt& rhs);
    ExactInt& operator*=(const ExactInt& rhs);

    friend ExactInt operator+(ExactInt lhs, const ExactInt& rhs) { return lhs += rhs; }
    friend ExactInt operator-(ExactInt lhs, const ExactInt& rhs) { return lhs -= rhs; }
    friend ExactInt operator*(ExactInt lhs, const ExactInt& rhs) { return lhs *= rhs; }

    /// Truncating quotient and remainder, matching built-in integer semantics.
    /// Division by zero throws std::domain_error.
    friend ExactInt operator/(const ExactInt& lhs, const ExactInt& rhs);
    friend ExactInt operator%(const ExactInt& lhs, const ExactInt& rhs);

    friend bool operator==(const ExactInt& a, const ExactInt& b) noexcept;
    friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) noexcept;

    friend std::ostream& operator<<(std::ostream& os, const ExactInt& v);

    std::size_t hash() const noexcept;

private:
    bool is_small() const noexcept { return std::holds_alternative<std::int64_t>(rep_); }
    std::int64_t small() const noexcept { return std::get<std::int64_t>(rep_); }
    const mpz_class& big() const noexcept { return std::get<mpz_class>(rep_); }
    void normalize();

    std::variant<std::int64_t, mpz_class> rep_;
};

ExactInt abs(const ExactInt& v);
ExactInt gcd(const ExactInt& a, const ExactInt& b);
ExactInt pow(const ExactInt& base, unsigned exponent);

/// Quotient rounded toward negative infinity.
ExactInt floor_div(const ExactInt& a, const ExactInt& b);
/// Remainder with the sign of the divisor, so floor_mod(a, m) is in [0, m) for m > 0.
ExactInt floor_mod(const ExactInt& a, const ExactInt& b);
/// Quotient of a division known to be exact; throws std::domain_error otherwise.
ExactInt divexact(const ExactInt& a, const ExactInt& b);
bool divides(const ExactInt& d, const ExactInt& a);

/// Largest e with p^e | a; a must be nonzero and p >= 2.
int valuation(const ExactInt& a, const ExactInt& p);

ExactInt factorial(unsigned n);

/// Generalized binomial n(n-1)...(n-k+1)/k! for any integer n. Returns 0
/// when k < 0, so sums may run over out-of-range indices freely.
ExactInt int_binomial(const ExactInt& n, const ExactInt& k);

/// Deterministic trial division.
bool is_prime(const ExactInt& n);

/// Exact rational number kept in lowest terms with a positive denominator.
class ExactRat {
public:
    ExactRat() = default;
    ExactRat(ExactInt value) : num_(std::move(value)) {}
    template <std::integral T>
    ExactRat(T value) : num_(value) {}
    /// Throws std::domain_error when den is zero.
    ExactRat(ExactInt num, ExactInt den);

    const ExactInt& num() const noexcept { return num_; }
    const ExactInt& den() const noexcept { return den_; }

    int sign() const noexcept { return num_.sign(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integer() const noexcept { return den_.is_one(); }

    ExactRat operator-() const;
    ExactRat& operator+=(const ExactRat& rhs);
    ExactRat& operator-=(const ExactRat& rhs);
    ExactRat& operator*=(const ExactRat& rhs);
    ExactRat& operator/=(const ExactRat& rhs);

    friend ExactRat operator+(ExactRat lhs, const ExactRat& rhs) { return lhs += rhs; }
    friend ExactRat operator-(ExactRat lhs, const ExactRat& rhs) { return lhs -= rhs; }
    friend ExactRat operator*(ExactRat lhs, const ExactRat& rhs) { return lhs *= rhs; }
    friend ExactRat operator/(ExactRat lhs, const ExactRat& rhs) { return lhs /= rhs; }

    friend bool operator==(const ExactRat& a, const ExactRat& b) noexcept = default;
    friend std::strong_ordering operator<=>(const ExactRat& a, const ExactRat& b) noexcept;

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const ExactRat& v);

private:
    void normalize();

    ExactInt num_{0};
    ExactInt den_{1};
};

ExactRat pow(const ExactRat& base, unsigned exponent);

/// Raised when an element has no multiplicative inverse modulo its modulus.
class NotInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Residue class modulo a positive integer, stored in [0, modulus).
class ModScalar {
public:
    /// Throws std::invalid_argument when modulus < 1.
    ModScalar(const ExactInt& value, ExactInt modulus);

    /// Reduces num/den, inverting den; throws NotInvertible when gcd(den, modulus) != 1.
    static ModScalar from_rational(const ExactRat& value, const ExactInt& modulus);

    const ExactInt& residue() const noexcept { return residue_; }
    const ExactInt& modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return residue_.is_zero(); }

    ModScalar operator-() const;
    ModScalar& operator+=(const ModScalar& rhs);
    ModScalar& operator-=(const ModScalar& rhs);
    ModScalar& operator*=(const ModScalar& rhs);

    friend ModScalar operator+(ModScalar lhs, const ModScalar& rhs) { return lhs += rhs; }
    friend ModScalar operator-(ModScalar lhs, const ModScalar& rhs) { return lhs -= rhs; }
    friend ModScalar operator*(ModScalar lhs, const ModScalar& rhs) { return lhs *= rhs; }

    friend bool operator==(const ModScalar& a, const ModScalar& b) noexcept = default;

    /// Same modulus, value lifted from an integer.
    ModScalar with(const ExactInt& value) const { return ModScalar(value, modulus_); }

private:
    void require_same_modulus(const ModScalar& rhs) const;

    ExactInt residue_;
    ExactInt modulus_;
};

ModScalar pow(const ModScalar& base, const ExactInt& exponent);

/// Inverse by extended Euclid; throws NotInvertible when gcd(residue, modulus) != 1.
ModScalar mod_inverse(const ModScalar& a);

/// Euler's criterion. Throws std::invalid_argument unless p is an odd prime.
int legendre_symbol(const ExactInt& a, const ExactInt& p);

/// {x choose k} for a residue x, valid when k! is invertible modulo the
/// residue's modulus (k < p for a modulus p^e). Throws NotInvertible otherwise.
ModScalar binomial_mod(const ModScalar& x, unsigned k);

} // namespace dlab

template <>
struct std::hash<dlab::ExactInt> {
    std::size_t operator()(const dlab::ExactInt& v) const noexcept { return v.hash(); }
};

#endif // DLAB_EXACT_HPP
