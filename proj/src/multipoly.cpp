#include "dlab/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace dlab {

namespace {

void strip(MultiPolyZ::Exponents& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

} // namespace

MultiPolyZ::MultiPolyZ(ExactInt constant) {
    if (!constant.is_zero()) terms_.emplace(Exponents{}, std::move(constant));
}

MultiPolyZ MultiPolyZ::variable(std::size_t index) {
    Exponents e(index + 1, 0);
    e[index] = 1;
    return term(ExactInt(1), std::move(e));
}

MultiPolyZ MultiPolyZ::term(ExactInt coeff, Exponents exponents) {
    MultiPolyZ r;
    r.add_term(std::move(exponents), coeff);
    return r;
}

ExactInt MultiPolyZ::coeff(const Exponents& exponents) const {
    Exponents e = exponents;
    strip(e);
    auto it = terms_.find(e);
    return it == terms_.end() ? ExactInt(0) : it->second;
}

void MultiPolyZ::add_term(Exponents e, const ExactInt& c) {
    if (c.is_zero()) return;
    strip(e);
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPolyZ& MultiPolyZ::operator+=(const MultiPolyZ& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPolyZ& MultiPolyZ::operator-=(const MultiPolyZ& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MultiPolyZ operator*(const MultiPolyZ& a, const MultiPolyZ& b) {
    MultiPolyZ r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            MultiPolyZ::Exponents e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    }
    return r;
}

MultiPolyZ& MultiPolyZ::operator*=(const MultiPolyZ& rhs) { return *this = *this * rhs; }

std::string MultiPolyZ::to_string() const {
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
        if (e.empty()) {
            os << mag;
            continue;
        }
        bool need_star = false;
        if (!mag.is_one()) {
            os << mag;
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << '*';
            os << 'x' << i;
            if (e[i] > 1) os << '^' << e[i];
            need_star = true;
        }
    }
    return os.str();
}

MultiPolyZ multipoly_pow(const MultiPolyZ& base, unsigned exponent) {
    MultiPolyZ result(ExactInt(1));
    MultiPolyZ b = base;
    while (exponent != 0) {
        if (exponent & 1u) result *= b;
        exponent >>= 1;
        if (exponent != 0) b *= b;
    }
    return result;
}

MultiPolyZ multipoly_scale(const MultiPolyZ& p, const ExactInt& factor) {
    return p * MultiPolyZ(factor);
}

bool multipoly_coeff_divisibility(const MultiPolyZ& p, const ExactInt& n) {
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [&](const auto& t) { return divides(n, t.second); });
}

} // namespace dlab
