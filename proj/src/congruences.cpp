// p-adic congruences. x is a residue modulo a prime power; for k < p the
// binomials {x choose k} are p-integral and are evaluated modularly.

#include "checks.hpp"

#include "dlab/sequences.hpp"

#include <stdexcept>
#include <vector>

namespace dlab::detail {

namespace {

int as_int(const Params& p, std::string_view name) { return static_cast<int>(param_int(p, name)); }

void require_odd_prime(int p) {
    if (p < 3 || !is_prime(ExactInt(p))) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
}

ExactRat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return ExactRat(ExactInt::from_string(text));
    return ExactRat(ExactInt::from_string(text.substr(0, slash)), ExactInt::from_string(text.substr(slash + 1)));
}

// d_k(x) and s_k(x) modulo the modulus of x, for k < p.
class ModularFamilies {
public:
    ModularFamilies(const ModScalar& x, int p) {
        for (int i = 0; i < p; ++i) {
            bx_.push_back(binomial_mod(x, static_cast<unsigned>(i)));
            bxi_.push_back(binomial_mod(x.with(x.residue() + ExactInt(i)), static_cast<unsigned>(i)));
        }
    }

    ModScalar d(int k) const {
        ModScalar r = bx_[0].with(ExactInt(0));
        for (int i = 0; i <= k; ++i) {
            r += bx_[i] * r.with(int_binomial(ExactInt(k), ExactInt(i)) * pow(ExactInt(2), static_cast<unsigned>(i)));
        }
        return r;
    }

    ModScalar s(int k) const {
        ModScalar r = bx_[0].with(ExactInt(0));
        for (int i = 0; i <= k; ++i) r += bx_[i] * bxi_[i] * r.with(int_binomial(ExactInt(k), ExactInt(i)));
        return r;
    }

private:
    std::vector<ModScalar> bx_;   // {x choose i}
    std::vector<ModScalar> bxi_;  // {x+i choose i}
};

Outcome binomial_congruence(int p) {
    require_odd_prime(p);
    const ExactInt mod = ExactInt(p) * ExactInt(p);
    for (int k = 0; k < p; ++k) {
        ModScalar lhs(int_binomial(ExactInt(p - 1), ExactInt(k)) * int_binomial(ExactInt(p + k), ExactInt(k)), mod);
        ModScalar rhs(ExactInt(k % 2 == 0 ? 1 : -1), mod);
        if (lhs != rhs) {
            return fail({{"k", std::to_string(k)}, {"lhs", lhs.residue().to_string()}, {"rhs", rhs.residue().to_string()}});
        }
    }
    return pass();
}

ModScalar residue_param(const Params& params, int p, unsigned power) {
    const ExactInt mod = pow(ExactInt(p), power);
    const ExactInt x(param_int(params, "x"));
    if (x.sign() < 0 || x >= mod) {
        throw std::invalid_argument("x must be a residue in [0, " + mod.to_string() + ")");
    }
    return ModScalar(x, mod);
}

Outcome d_square_congruence(int p, const ModScalar& x) {
    require_odd_prime(p);
    ModularFamilies fam(x, p);
    ModScalar sum = x.with(ExactInt(0));
    for (int k = 0; k < p; ++k) {
        ModScalar d = fam.d(k);
        sum += x.with(ExactInt(2 * k + 1)) * d * d;
    }
    const ExactInt xp = floor_mod(x.residue(), ExactInt(p));
    ModScalar expected = x.with(ExactInt(0));
    std::string which = "otherwise";
    if (xp.is_zero()) {
        expected = -x;
        which = "x = 0 mod p";
    } else if (xp == ExactInt(p - 1)) {
        expected = x + x.with(ExactInt(1));
        which = "x = -1 mod p";
    }
    if (sum == expected) return pass();
    return fail({{"case", which}, {"lhs", sum.residue().to_string()}, {"rhs", expected.residue().to_string()}});
}

Outcome s_square_congruence(int p, const ModScalar& x) {
    require_odd_prime(p);
    ModularFamilies fam(x, p);
    ModScalar sum = x.with(ExactInt(0));
    for (int k = 0; k < p; ++k) {
        ModScalar s = fam.s(k);
        sum += x.with(ExactInt(2 * k + 1)) * s * s;
    }
    if (sum.is_zero()) return pass();
    return fail({{"lhs", sum.residue().to_string()}, {"rhs", "0"}});
}

Outcome s_square_lift_congruence(int p, const ModScalar& x) {
    if (p < 3 || !is_prime(ExactInt(p))) throw std::invalid_argument(std::to_string(p) + " is not a prime >= 3");
    const ExactInt X = x.residue();
    const ExactInt P(p);
    ExactInt lhs(0);
    for (int k = 0; k < p; ++k) lhs += ExactInt(2 * k + 1) * pow(s_value(k, X), 2);

    // The k = p-1 term carries a single p in its denominator, so the right
    // side is summed as an exact rational rather than modularly.
    ExactRat inner_sum(0);
    for (int k = 0; k < p; ++k) {
        ExactInt inner(0);
        for (int j = 0; j <= k; ++j) {
            inner += int_binomial(ExactInt(2 * k), ExactInt(j + k)) * int_binomial(X, ExactInt(j)) *
                     int_binomial(X + ExactInt(j), ExactInt(j));
        }
        ExactRat term(int_binomial(X + ExactInt(k), ExactInt(2 * k)) * inner, ExactInt(k + 1));
        inner_sum += k % 2 == 0 ? term : -term;
    }
    const ExactRat rhs = inner_sum * ExactRat(P * P);
    const ExactRat diff = ExactRat(lhs) - rhs;
    if (diff.is_zero()) return pass();
    const int v = valuation(diff.num(), P) - (diff.den().is_one() ? 0 : valuation(diff.den(), P));
    if (v >= 4) return pass();
    return fail({{"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}, {"p_valuation_of_difference", std::to_string(v)}});
}

Outcome s_square_rational_point(int p, const ExactRat& x, const ExactRat& constant, int legendre_top) {
    if (p < 5 || !is_prime(ExactInt(p))) {
        return skipped({{"reason", "needs a prime p >= 5"}});
    }
    const ExactInt mod = pow(ExactInt(p), 4);
    ModScalar xr(ExactInt(0), mod), c(ExactInt(0), mod);
    try {
        xr = ModScalar::from_rational(x, mod);
        c = ModScalar::from_rational(constant, mod);
    } catch (const NotInvertible&) {
        return skipped({{"reason", "denominator not invertible mod p"}});
    }
    ModularFamilies fam(xr, p);
    ModScalar sum = xr.with(ExactInt(0));
    for (int k = 0; k < p; ++k) {
        ModScalar s = fam.s(k);
        sum += xr.with(ExactInt(2 * k + 1)) * s * s;
    }
    const int symbol = legendre_symbol(ExactInt(legendre_top), ExactInt(p));
    ModScalar expected = c * xr.with(ExactInt(symbol) * ExactInt(p) * ExactInt(p));
    if (sum == expected) return pass();
    return fail({{"legendre", std::to_string(symbol)},
                 {"lhs", sum.residue().to_string()},
                 {"rhs", expected.residue().to_string()}});
}

} // namespace

Outcome run_congruence_claim(ClaimId claim, const Params& params) {
    switch (claim) {
    case ClaimId::BINOM_CONG: return binomial_congruence(as_int(params, "p"));
    case ClaimId::CONG_SUN1: {
        int p = as_int(params, "p");
        return d_square_congruence(p, residue_param(params, p, 2));
    }
    case ClaimId::CONG_SUN2: {
        int p = as_int(params, "p");
        return s_square_congruence(p, residue_param(params, p, 2));
    }
    case ClaimId::THM51: {
        int p = as_int(params, "p");
        return s_square_lift_congruence(p, residue_param(params, p, 4));
    }
    case ClaimId::CONJ_SUNFINAL:
        return s_square_rational_point(as_int(params, "p"), parse_rational(param_str(params, "x")),
                                       parse_rational(param_str(params, "c")), as_int(params, "a"));
    default: break;
    }
    throw std::logic_error("not a congruence claim: " + std::string(to_string(claim)));
}

} // namespace dlab::detail
