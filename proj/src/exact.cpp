#include "dlab/exact.hpp"

#include <ostream>
#include <utility>

namespace dlab {

namespace {

mpz_class to_mpz_value(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

} // namespace

ExactInt::ExactInt(const mpz_class& z) : rep_(z) { normalize(); }
ExactInt::ExactInt(mpz_class&& z) : rep_(std::move(z)) { normalize(); }

ExactInt ExactInt::from_string(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("malformed integer literal: " + s);
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer literal: " + s);
    }
    if (s[0] == '+') s.erase(0, 1);
    return ExactInt(mpz_class(s, 10));
}

void ExactInt::normalize() {
    if (is_small()) return;
    const mpz_class& z = big();
    if (mpz_fits_slong_p(z.get_mpz_t())) rep_ = static_cast<std::int64_t>(z.get_si());
}

int ExactInt::sign() const noexcept {
    if (is_small()) return (small() > 0) - (small() < 0);
    return sgn(big());
}

std::int64_t ExactInt::to_int64() const {
    if (!is_small()) throw std::overflow_error("ExactInt does not fit in int64: " + to_string());
    return small();
}

mpz_class ExactInt::to_mpz() const { return is_small() ? to_mpz_value(small()) : big(); }

std::string ExactInt::to_string() const {
    return is_small() ? std::to_string(small()) : big().get_str();
}

ExactInt ExactInt::operator-() const {
    if (is_small() && small() != INT64_MIN) return ExactInt(-small());
    return ExactInt(mpz_class(-to_mpz()));
}

ExactInt& ExactInt::operator+=(const ExactInt& rhs) {
    if (is_small() && rhs.is_small()) {
        std::int64_t r;
        if (!__builtin_add_overflow(small(), rhs.small(), &r)) {
            rep_ = r;
            return *this;
        }
    }
    mpz_class r = to_mpz() + rhs.to_mpz();
    rep_ = std::move(r);
    normalize();
    return *this;
}

ExactInt& ExactInt::operator-=(const ExactInt& rhs) {
    if (is_small() && rhs.is_small()) {
        std::int64_t r;
        if (!__builtin_sub_overflow(small(), rhs.small(), &r)) {
            rep_ = r;
            return *this;
        }
    }
    mpz_class r = to_mpz() - rhs.to_mpz();
    rep_ = std::move(r);
    normalize();
    return *this;
}

ExactInt& ExactInt::operator*=(const ExactInt& rhs) {
    if (is_small() && rhs.is_small()) {
        std::int64_t r;
        if (!__builtin_mul_overflow(small(), rhs.small(), &r)) {
            rep_ = r;
            return *this;
        }
    }
    mpz_class r = to_mpz() * rhs.to_mpz();
    rep_ = std::move(r);
    normalize();
    return *this;
}

ExactInt operator/(const ExactInt& lhs, const ExactInt& rhs) {
    if (rhs.is_zero()) throw std::domain_error("ExactInt division by zero");
    if (lhs.is_small() && rhs.is_small() && !(lhs.small() == INT64_MIN && rhs.small() == -1)) {
        return ExactInt(lhs.small() / rhs.small());
    }
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), lhs.to_mpz().get_mpz_t(), rhs.to_mpz().get_mpz_t());
    return ExactInt(std::move(q));
}

ExactInt operator%(const ExactInt& lhs, const ExactInt& rhs) {
    if (rhs.is_zero()) throw std::domain_error("ExactInt division by zero");
    if (lhs.is_small() && rhs.is_small()) {
        if (rhs.small() == -1) return ExactInt(0);
        return ExactInt(lhs.small() % rhs.small());
    }
    mpz_class r;
    mpz_tdiv_r(r.get_mpz_t(), lhs.to_mpz().get_mpz_t(), rhs.to_mpz().get_mpz_t());
    return ExactInt(std::move(r));
}

bool operator==(const ExactInt& a, const ExactInt& b) noexcept {
    if (a.is_small() != b.is_small()) return false;
    if (a.is_small()) return a.small() == b.small();
    return a.big() == b.big();
}

std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) noexcept {
    if (a.is_small() && b.is_small()) return a.small() <=> b.small();
    int c = cmp(a.to_mpz(), b.to_mpz());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const ExactInt& v) { return os << v.to_string(); }

std::size_t ExactInt::hash() const noexcept {
    if (is_small()) return std::hash<std::int64_t>{}(small());
    return std::hash<std::string>{}(big().get_str(16));
}

ExactInt abs(const ExactInt& v) { return v.sign() < 0 ? -v : v; }

ExactInt gcd(const ExactInt& a, const ExactInt& b) {
    if (a.fits_int64() && b.fits_int64()) {
        std::int64_t x = a.to_int64(), y = b.to_int64();
        if (x != INT64_MIN && y != INT64_MIN) {
            x = x < 0 ? -x : x;
            y = y < 0 ? -y : y;
            while (y != 0) {
                std::int64_t t = x % y;
                x = y;
                y = t;
            }
            return ExactInt(x);
        }
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return ExactInt(std::move(g));
}

ExactInt pow(const ExactInt& base, unsigned exponent) {
    ExactInt result(1);
    ExactInt b = base;
    while (exponent != 0) {
        if (exponent & 1u) result *= b;
        exponent >>= 1;
        if (exponent != 0) b *= b;
    }
    return result;
}

ExactInt floor_div(const ExactInt& a, const ExactInt& b) {
    ExactInt q = a / b;
    ExactInt r = a - q * b;
    if (!r.is_zero() && ((r.sign() < 0) != (b.sign() < 0))) q -= ExactInt(1);
    return q;
}

ExactInt floor_mod(const ExactInt& a, const ExactInt& b) {
    ExactInt r = a % b;
    if (!r.is_zero() && ((r.sign() < 0) != (b.sign() < 0))) r += b;
    return r;
}

ExactInt divexact(const ExactInt& a, const ExactInt& b) {
    if (b.is_zero()) throw std::domain_error("ExactInt division by zero");
    if (!(a % b).is_zero()) {
        throw std::domain_error("inexact division: " + a.to_string() + " / " + b.to_string());
    }
    return a / b;
}

bool divides(const ExactInt& d, const ExactInt& a) {
    if (d.is_zero()) return a.is_zero();
    return (a % d).is_zero();
}

int valuation(const ExactInt& a, const ExactInt& p) {
    if (a.is_zero()) throw std::domain_error("valuation of zero");
    if (p < ExactInt(2)) throw std::domain_error("valuation base must be at least 2");
    int e = 0;
    ExactInt v = a;
    while (divides(p, v)) {
        v = v / p;
        ++e;
    }
    return e;
}

ExactInt factorial(unsigned n) {
    ExactInt r(1);
    for (unsigned i = 2; i <= n; ++i) r *= ExactInt(i);
    return r;
}

ExactInt int_binomial(const ExactInt& n, const ExactInt& k) {
    if (k.sign() < 0) return ExactInt(0);
    if (n.sign() >= 0 && k > n) return ExactInt(0);
    if (!k.fits_int64()) throw std::length_error("binomial lower index too large: " + k.to_string());
    std::int64_t kk = k.to_int64();
    // Symmetry keeps the product short for non-negative n.
    if (n.sign() >= 0 && n.fits_int64() && 2 * kk > n.to_int64()) kk = n.to_int64() - kk;
    // C(n, i+1) = C(n, i) (n - i) / (i + 1) stays integral at every step.
    ExactInt r(1);
    for (std::int64_t i = 0; i < kk; ++i) {
        r *= n - ExactInt(i);
        r = r / ExactInt(i + 1);
    }
    return r;
}

bool is_prime(const ExactInt& n) {
    if (n < ExactInt(2)) return false;
    if (n.fits_int64()) {
        std::int64_t v = n.to_int64();
        if (v < 4) return true;
        if (v % 2 == 0) return false;
        for (std::int64_t d = 3; d <= v / d; d += 2) {
            if (v % d == 0) return false;
        }
        return true;
    }
    ExactInt two(2);
    if (divides(two, n)) return false;
    for (ExactInt d(3); d * d <= n; d += two) {
        if (divides(d, n)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// ExactRat

ExactRat::ExactRat(ExactInt num, ExactInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("ExactRat with zero denominator");
    normalize();
}

void ExactRat::normalize() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (den_.is_one()) return;
    if (num_.is_zero()) {
        den_ = ExactInt(1);
        return;
    }
    ExactInt g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

ExactRat ExactRat::operator-() const {
    ExactRat r = *this;
    r.num_ = -r.num_;
    return r;
}

ExactRat& ExactRat::operator+=(const ExactRat& rhs) {
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
        if (!den_.is_one()) normalize();
        return *this;
    }
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

ExactRat& ExactRat::operator-=(const ExactRat& rhs) { return *this += -rhs; }

ExactRat& ExactRat::operator*=(const ExactRat& rhs) {
    if (is_integer() && rhs.is_integer()) {
        num_ *= rhs.num_;
        return *this;
    }
    // Cross-cancel first so the products stay small.
    ExactInt g1 = gcd(num_, rhs.den_);
    ExactInt g2 = gcd(rhs.num_, den_);
    num_ = (num_ / g1) * (rhs.num_ / g2);
    den_ = (den_ / g2) * (rhs.den_ / g1);
    if (num_.is_zero()) den_ = ExactInt(1);
    return *this;
}

ExactRat& ExactRat::operator/=(const ExactRat& rhs) {
    if (rhs.is_zero()) throw std::domain_error("ExactRat division by zero");
    return *this *= ExactRat(rhs.den_, rhs.num_);
}

std::strong_ordering operator<=>(const ExactRat& a, const ExactRat& b) noexcept {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::string ExactRat::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::ostream& operator<<(std::ostream& os, const ExactRat& v) { return os << v.to_string(); }

ExactRat pow(const ExactRat& base, unsigned exponent) {
    return ExactRat(pow(base.num(), exponent), pow(base.den(), exponent));
}

// ---------------------------------------------------------------------------
// ModScalar

ModScalar::ModScalar(const ExactInt& value, ExactInt modulus) : modulus_(std::move(modulus)) {
    if (modulus_ < ExactInt(1)) throw std::invalid_argument("modulus must be positive");
    residue_ = floor_mod(value, modulus_);
}

ModScalar ModScalar::from_rational(const ExactRat& value, const ExactInt& modulus) {
    ModScalar num(value.num(), modulus);
    if (value.is_integer()) return num;
    return num * mod_inverse(ModScalar(value.den(), modulus));
}

void ModScalar::require_same_modulus(const ModScalar& rhs) const {
    if (modulus_ != rhs.modulus_) {
        throw std::invalid_argument("modulus mismatch: " + modulus_.to_string() + " vs " +
                                    rhs.modulus_.to_string());
    }
}

ModScalar ModScalar::operator-() const { return ModScalar(-residue_, modulus_); }

ModScalar& ModScalar::operator+=(const ModScalar& rhs) {
    require_same_modulus(rhs);
    residue_ += rhs.residue_;
    if (residue_ >= modulus_) residue_ -= modulus_;
    return *this;
}

ModScalar& ModScalar::operator-=(const ModScalar& rhs) {
    require_same_modulus(rhs);
    residue_ -= rhs.residue_;
    if (residue_.sign() < 0) residue_ += modulus_;
    return *this;
}

ModScalar& ModScalar::operator*=(const ModScalar& rhs) {
    require_same_modulus(rhs);
    residue_ = (residue_ * rhs.residue_) % modulus_;
    return *this;
}

ModScalar pow(const ModScalar& base, const ExactInt& exponent) {
    if (exponent.sign() < 0) return pow(mod_inverse(base), -exponent);
    ModScalar result = base.with(ExactInt(1));
    ModScalar b = base;
    mpz_class e = exponent.to_mpz();
    while (e != 0) {
        if (mpz_odd_p(e.get_mpz_t())) result *= b;
        e >>= 1;
        if (e != 0) b *= b;
    }
    return result;
}

ModScalar mod_inverse(const ModScalar& a) {
    // Extended Euclid on (residue, modulus), tracking the residue's coefficient.
    ExactInt r0 = a.modulus(), r1 = a.residue();
    ExactInt s0(0), s1(1);
    while (!r1.is_zero()) {
        ExactInt q = r0 / r1;
        ExactInt r2 = r0 - q * r1;
        ExactInt s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (!r0.is_one()) {
        throw NotInvertible(a.residue().to_string() + " is not invertible modulo " +
                            a.modulus().to_string());
    }
    return a.with(s0);
}

int legendre_symbol(const ExactInt& a, const ExactInt& p) {
    if (p < ExactInt(3) || !is_prime(p)) {
        throw std::invalid_argument("legendre_symbol needs an odd prime, got " + p.to_string());
    }
    ModScalar base(a, p);
    if (base.is_zero()) return 0;
    ModScalar e = pow(base, (p - ExactInt(1)) / ExactInt(2));
    return e.residue().is_one() ? 1 : -1;
}

ModScalar binomial_mod(const ModScalar& x, unsigned k) {
    ModScalar falling = x.with(ExactInt(1));
    for (unsigned i = 0; i < k; ++i) falling *= x.with(x.residue() - ExactInt(i));
    return falling * mod_inverse(x.with(factorial(k)));
}

} // namespace dlab
