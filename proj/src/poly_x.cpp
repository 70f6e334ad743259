#include "dlab/poly_x.hpp"

#include <algorithm>
#include <sstream>

namespace dlab {

PolyX::PolyX(ExactRat constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

PolyX::PolyX(std::vector<ExactRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyX PolyX::x() { return monomial(ExactRat(1), 1); }

PolyX PolyX::monomial(ExactRat c, std::size_t degree) {
    if (c.is_zero()) return {};
    std::vector<ExactRat> v(degree + 1);
    v[degree] = std::move(c);
    return PolyX(std::move(v));
}

PolyX PolyX::linear(ExactRat shift) { return PolyX({std::move(shift), ExactRat(1)}); }

void PolyX::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> PolyX::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

ExactRat PolyX::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ExactRat(0); }

ExactRat PolyX::evaluate(const ExactRat& at) const {
    ExactRat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

PolyX PolyX::compose(const PolyX& inner) const {
    PolyX acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= inner;
        acc += PolyX(*it);
    }
    return acc;
}

PolyX PolyX::operator-() const {
    PolyX r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

PolyX& PolyX::operator+=(const PolyX& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

PolyX& PolyX::operator-=(const PolyX& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

PolyX operator*(const PolyX& a, const PolyX& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<ExactRat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return PolyX(std::move(out));
}

PolyX& PolyX::operator*=(const PolyX& rhs) { return *this = *this * rhs; }

PolyX& PolyX::operator*=(const ExactRat& scalar) {
    if (scalar.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

std::string PolyX::to_string(char var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const ExactRat& c = coeffs_[i];
        if (c.is_zero()) continue;
        ExactRat mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (mag != ExactRat(1)) os << mag << '*';
        os << var;
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

PolyX pow(const PolyX& base, unsigned exponent) {
    PolyX result(ExactRat(1));
    PolyX b = base;
    while (exponent != 0) {
        if (exponent & 1u) result *= b;
        exponent >>= 1;
        if (exponent != 0) b *= b;
    }
    return result;
}

PolyX polyx_binomial_shifted(std::int64_t shift, unsigned k) {
    PolyX r(ExactRat(1));
    for (unsigned i = 0; i < k; ++i) r *= PolyX::linear(ExactRat(shift - static_cast<std::int64_t>(i)));
    return r * ExactRat(ExactInt(1), factorial(k));
}

PolyX polyx_binomial(unsigned k) { return polyx_binomial_shifted(0, k); }

PolyX BinomialBasisPoly::to_monomial() const {
    PolyX r;
    for (std::size_t k = 0; k < bcoeffs.size(); ++k) {
        if (!bcoeffs[k].is_zero()) r += polyx_binomial(static_cast<unsigned>(k)) * bcoeffs[k];
    }
    return r;
}

BinomialBasisPoly to_binomial_basis(const PolyX& p) {
    auto deg = p.degree();
    if (!deg) return {};
    std::vector<ExactRat> diffs;
    diffs.reserve(*deg + 1);
    for (std::size_t i = 0; i <= *deg; ++i) diffs.push_back(p.evaluate(ExactRat(static_cast<std::int64_t>(i))));
    // After pass k, diffs[k] holds (Delta^k p)(0).
    for (std::size_t k = 1; k <= *deg; ++k) {
        for (std::size_t i = *deg; i >= k; --i) diffs[i] -= diffs[i - 1];
    }
    BinomialBasisPoly b{std::move(diffs)};
    while (!b.bcoeffs.empty() && b.bcoeffs.back().is_zero()) b.bcoeffs.pop_back();
    return b;
}

std::optional<std::int64_t> integer_valued_witness(const PolyX& p) {
    BinomialBasisPoly b = to_binomial_basis(p);
    for (std::size_t k = 0; k < b.bcoeffs.size(); ++k) {
        if (!b.bcoeffs[k].is_integer()) return static_cast<std::int64_t>(k);
    }
    return std::nullopt;
}

bool is_integer_valued(const PolyX& p) { return !integer_valued_witness(p).has_value(); }

} // namespace dlab
