#include "dlab/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace dlab {

namespace {

// Dense coefficient window [low, low + size) used inside multiplication and
// long division; sparse terms go in and out at the boundaries.
struct Dense {
    std::int64_t low = 0;
    std::vector<ExactInt> c;
};

Dense to_dense(const LaurentQ& a) {
    Dense d;
    if (a.is_zero()) return d;
    d.low = *a.min_exponent();
    d.c.resize(static_cast<std::size_t>(*a.max_exponent() - d.low + 1));
    for (const auto& [e, v] : a.terms()) d.c[static_cast<std::size_t>(e - d.low)] = v;
    return d;
}

} // namespace

LaurentQ::LaurentQ(ExactInt constant) {
    if (!constant.is_zero()) terms_.emplace_back(0, std::move(constant));
}

LaurentQ::LaurentQ(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().first == t.first) {
            terms_.back().second += t.second;
            if (terms_.back().second.is_zero()) terms_.pop_back();
        } else if (!t.second.is_zero()) {
            terms_.push_back(std::move(t));
        }
    }
}

LaurentQ LaurentQ::monomial(ExactInt c, std::int64_t exponent) {
    LaurentQ r;
    if (!c.is_zero()) r.terms_.emplace_back(exponent, std::move(c));
    return r;
}

LaurentQ LaurentQ::one_minus_q_pow(std::int64_t a) {
    return LaurentQ({Term{0, ExactInt(1)}, Term{a, ExactInt(-1)}});
}

LaurentQ LaurentQ::from_dense(const std::vector<ExactInt>& coeffs, std::int64_t low_exponent) {
    LaurentQ r;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (!coeffs[i].is_zero()) r.terms_.emplace_back(low_exponent + static_cast<std::int64_t>(i), coeffs[i]);
    }
    return r;
}

std::optional<std::int64_t> LaurentQ::min_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().first;
}

std::optional<std::int64_t> LaurentQ::max_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.back().first;
}

ExactInt LaurentQ::coeff(std::int64_t exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, std::int64_t e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) return it->second;
    return ExactInt(0);
}

ExactInt LaurentQ::at_one() const {
    ExactInt s(0);
    for (const auto& t : terms_) s += t.second;
    return s;
}

LaurentQ LaurentQ::invert_variable() const {
    LaurentQ r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.emplace_back(-it->first, it->second);
    return r;
}

LaurentQ LaurentQ::shifted(std::int64_t s) const {
    LaurentQ r = *this;
    for (auto& t : r.terms_) t.first += s;
    return r;
}

LaurentQ LaurentQ::operator-() const {
    LaurentQ r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& rhs) {
    std::vector<Term> out;
    out.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin();
    auto b = rhs.terms_.begin();
    while (a != terms_.end() || b != rhs.terms_.end()) {
        if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first < a->first) {
            out.push_back(*b++);
        } else {
            ExactInt s = a->second + b->second;
            if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& rhs) { return *this += -rhs; }

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
        const LaurentQ& mono = a.terms_.size() == 1 ? a : b;
        const LaurentQ& other = a.terms_.size() == 1 ? b : a;
        LaurentQ r = other.shifted(mono.terms_.front().first);
        return r *= mono.terms_.front().second;
    }
    const std::int64_t low = a.terms_.front().first + b.terms_.front().first;
    const std::int64_t high = a.terms_.back().first + b.terms_.back().first;
    std::vector<ExactInt> acc(static_cast<std::size_t>(high - low + 1));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) acc[static_cast<std::size_t>(ea + eb - low)] += ca * cb;
    }
    return LaurentQ::from_dense(acc, low);
}

LaurentQ& LaurentQ::operator*=(const LaurentQ& rhs) { return *this = *this * rhs; }

LaurentQ& LaurentQ::operator*=(const ExactInt& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= scalar;
    return *this;
}

std::string LaurentQ::to_string(char var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        ExactInt mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one()) os << mag << '*';
        os << var;
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

LaurentQ pow(const LaurentQ& base, unsigned exponent) {
    LaurentQ result(ExactInt(1));
    LaurentQ b = base;
    while (exponent != 0) {
        if (exponent & 1u) result *= b;
        exponent >>= 1;
        if (exponent != 0) b *= b;
    }
    return result;
}

LaurentQ laurent_add(const LaurentQ& a, const LaurentQ& b) { return a + b; }
LaurentQ laurent_sub(const LaurentQ& a, const LaurentQ& b) { return a - b; }
LaurentQ laurent_mul(const LaurentQ& a, const LaurentQ& b) { return a * b; }

LaurentQ laurent_exact_div(const LaurentQ& num, const LaurentQ& den) {
    if (den.is_zero()) throw std::domain_error("Laurent division by zero");
    if (num.is_zero()) return {};
    // Both sides are q^low times a polynomial with nonzero constant term;
    // q is a unit, so only the polynomial parts need to divide.
    Dense n = to_dense(num);
    Dense d = to_dense(den);
    if (n.c.size() < d.c.size()) {
        throw NotDivisible("degree of divisor exceeds dividend", num);
    }
    const std::size_t dlen = d.c.size();
    const ExactInt& lead = d.c.back();
    std::vector<ExactInt> quot(n.c.size() - dlen + 1);
    std::vector<ExactInt>& rem = n.c;
    for (std::size_t i = quot.size(); i-- > 0;) {
        const ExactInt& top = rem[i + dlen - 1];
        if (top.is_zero()) continue;
        if (!divides(lead, top)) {
            throw NotDivisible("leading coefficient does not divide", LaurentQ::from_dense(rem, n.low));
        }
        ExactInt qi = top / lead;
        for (std::size_t j = 0; j < dlen; ++j) {
            if (!d.c[j].is_zero()) rem[i + j] -= qi * d.c[j];
        }
        quot[i] = std::move(qi);
    }
    for (std::size_t i = 0; i + 1 < dlen; ++i) {
        if (!rem[i].is_zero()) throw NotDivisible("nonzero remainder", LaurentQ::from_dense(rem, n.low));
    }
    return LaurentQ::from_dense(quot, n.low - d.low);
}

bool laurent_is_nonneg(const LaurentQ& a) {
    return std::all_of(a.terms().begin(), a.terms().end(),
                       [](const LaurentQ::Term& t) { return t.second.sign() > 0; });
}

LaurentQ polynomial_remainder(const LaurentQ& a, const LaurentQ& m) {
    if (m.is_zero()) throw std::domain_error("polynomial remainder by zero");
    if ((!a.is_zero() && *a.min_exponent() < 0) || *m.min_exponent() < 0) {
        throw std::domain_error("polynomial remainder needs non-negative exponents");
    }
    const ExactInt& lead = m.terms().back().second;
    if (!abs(lead).is_one()) throw std::domain_error("polynomial remainder needs a leading coefficient of +-1");
    if (a.is_zero()) return {};
    const std::size_t mdeg = static_cast<std::size_t>(*m.max_exponent());
    std::vector<ExactInt> rem(static_cast<std::size_t>(*a.max_exponent()) + 1);
    for (const auto& [e, c] : a.terms()) rem[static_cast<std::size_t>(e)] = c;
    std::vector<ExactInt> mc(mdeg + 1);
    for (const auto& [e, c] : m.terms()) mc[static_cast<std::size_t>(e)] = c;
    for (std::size_t top = rem.size(); top-- > mdeg;) {
        if (rem[top].is_zero()) continue;
        ExactInt factor = rem[top] * lead;  // lead is its own inverse
        for (std::size_t j = 0; j <= mdeg; ++j) {
            if (!mc[j].is_zero()) rem[top - mdeg + j] -= factor * mc[j];
        }
    }
    rem.resize(std::min(rem.size(), mdeg));
    return LaurentQ::from_dense(rem);
}

} // namespace dlab
