// Polynomiality, positivity and congruences of q-expressions.

#include "checks.hpp"

#include "dlab/q_structures.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace dlab::detail {

namespace {

int as_int(const Params& p, std::string_view name) { return static_cast<int>(param_int(p, name)); }

std::string first_negative(const LaurentQ& a) {
    for (const auto& [e, c] : a.terms()) {
        if (c.sign() < 0) return c.to_string() + "*q^" + std::to_string(e);
    }
    return "";
}

// Exact division followed by the sign check; witness keys are prefixed by
// the caller's point description.
Outcome nonneg_quotient(const QQuotient& quot, Witness where) {
    LaurentQ value;
    try {
        value = quot.divide();
    } catch (const NotDivisible& e) {
        where.emplace_back("not_divisible", e.remainder().to_string());
        return fail(std::move(where));
    }
    if (!laurent_is_nonneg(value)) {
        where.emplace_back("negative_term", first_negative(value));
        return fail(std::move(where));
    }
    return pass();
}

Outcome q_quotient_A(int n, int m) {
    for (int k = 0; k <= n; ++k) {
        Outcome o = nonneg_quotient(delannoy_weight_q_quotient(n, k, m), {{"k", std::to_string(k)}});
        if (o.status != Status::kPass) return o;
    }
    return pass();
}

Outcome q_quotient_B(int n, int m) {
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j <= k; ++j) {
            Outcome o = nonneg_quotient(schmidt_weight_q_quotient(n, k, m, j),
                                        {{"k", std::to_string(k)}, {"j", std::to_string(j)}});
            if (o.status != Status::kPass) return o;
        }
    }
    return pass();
}

std::string profile_text(const CycloProfile& p) {
    std::string s;
    for (const auto& [d, e] : p.exponents) {
        if (e == 0) continue;
        if (!s.empty()) s += ' ';
        s += std::to_string(d) + ':' + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

// Formula profile must be non-negative, agree with the brute-force valuations
// over its range, and rebuild the polynomial exactly.
Outcome compare_profile(const CycloProfile& formula, const QQuotient& quot, Witness where) {
    if (!formula.all_nonnegative()) {
        where.emplace_back("formula_profile", profile_text(formula));
        where.emplace_back("problem", "negative exponent");
        return fail(std::move(where));
    }
    LaurentQ value = quot.divide();
    CycloProfile brute = valuation_profile(value, formula.d_max);
    if (brute != formula) {
        where.emplace_back("formula_profile", profile_text(formula));
        where.emplace_back("valuation_profile", profile_text(brute));
        return fail(std::move(where));
    }
    if (formula.reconstruct() != value) {
        where.emplace_back("formula_profile", profile_text(formula));
        where.emplace_back("problem", "product of cyclotomic factors differs from the expression");
        return fail(std::move(where));
    }
    return pass();
}

Outcome profiles_A(int n, int m) {
    // k = n or k > m make the expression vanish; there is nothing to factor.
    for (int k = 0; k <= std::min(n - 1, m); ++k) {
        Outcome o = compare_profile(exponent_profile_A(n, k, m), delannoy_weight_q_quotient(n, k, m),
                                    {{"k", std::to_string(k)}});
        if (o.status != Status::kPass) return o;
    }
    return pass();
}

Outcome profiles_B(int n, int m) {
    for (int k = 0; k <= std::min(n - 1, m); ++k) {
        for (int j = 0; j <= k; ++j) {
            Outcome o = compare_profile(exponent_profile_B(n, k, m, j), schmidt_weight_q_quotient(n, k, m, j),
                                        {{"k", std::to_string(k)}, {"j", std::to_string(j)}});
            if (o.status != Status::kPass) return o;
        }
    }
    return pass();
}

// D_q(m,k) D_{q^-1}(m,k) for k < count.
std::vector<LaurentQ> delannoy_products(int m, int count) {
    std::vector<LaurentQ> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) {
        QDelannoyPair pr = q_delannoy(m, k);
        out.push_back(pr.dq * pr.dqinv);
    }
    return out;
}

Outcome q_d_square_congruence(int p, int m) {
    if (p < 3 || !is_prime(ExactInt(p))) throw std::invalid_argument("modulus [p]^2 needs an odd prime p");
    if (m < 1) throw std::invalid_argument("m must be positive");
    const auto products = delannoy_products(m, p);
    LaurentQ sum;
    for (int k = 0; k < p; ++k) sum += (q_integer(2 * k + 1) * products[k]).shifted(-k);

    LaurentQ expected;
    std::string which = "otherwise";
    if (m % p == 0) {
        expected = laurent_exact_div(LaurentQ::one_minus_q_pow(-2 * m), LaurentQ::one_minus_q_pow(2)).shifted(1);
        which = "m = 0 mod p";
    } else if ((m + 1) % p == 0) {
        expected = laurent_exact_div(LaurentQ::one_minus_q_pow(2 * m + 2), LaurentQ::one_minus_q_pow(2)).shifted(1);
        which = "m = -1 mod p";
    }
    LaurentQ diff = sum - expected;
    if (!diff.is_zero()) diff = diff.shifted(-*diff.min_exponent());
    LaurentQ rem = polynomial_remainder(diff, pow(cyclotomic(p), 2));
    if (rem.is_zero()) return pass();
    return fail({{"case", which}, {"remainder", rem.to_string()}});
}

QSumForm parse_form(const std::string& s) {
    for (QSumForm f : {QSumForm::kScaled, QSumForm::kPower, QSumForm::kPowerAlternating}) {
        if (to_string(f) == s) return f;
    }
    throw std::invalid_argument("unknown q-sum form '" + s + "'");
}

Outcome q_sum_positivity(QSumForm form, int n, int m, int r) {
    if (n < 1 || m < 1 || r < 1) throw std::invalid_argument("q-sums need n, m, r >= 1");
    const auto products = delannoy_products(m, n);
    QQuotient quot;
    switch (form) {
    case QSumForm::kScaled: {
        LaurentQ sum;
        for (int k = 0; k < n; ++k) sum += (LaurentQ::one_minus_q_pow(2 * k + 1) * products[k]).shifted(-k);
        quot.numerator = LaurentQ::one_minus_q_pow(m) * LaurentQ::one_minus_q_pow(m + 1) * sum;
        quot.denominator = LaurentQ::one_minus_q_pow(2) * pow(LaurentQ::one_minus_q_pow(n), 2);
        break;
    }
    case QSumForm::kPower:
        for (int k = 0; k < n; ++k) {
            quot.numerator += (LaurentQ::one_minus_q_pow(2 * k + 1) * pow(products[k], r)).shifted(-k);
        }
        quot.denominator = LaurentQ::one_minus_q_pow(n);
        break;
    case QSumForm::kPowerAlternating:
        for (int k = 0; k < n; ++k) {
            LaurentQ term = (LaurentQ::one_minus_q_pow(2 * k + 1) * pow(products[k], r)).shifted(k * (k - 1) / 2);
            if ((n - k - 1) % 2 == 1) term = -term;
            quot.numerator += term;
        }
        quot.denominator = LaurentQ::one_minus_q_pow(n);
        break;
    }
    return nonneg_quotient(quot, {});
}

} // namespace

Outcome run_q_claim(ClaimId claim, const Params& p) {
    switch (claim) {
    case ClaimId::THM21_A: return q_quotient_A(as_int(p, "n"), as_int(p, "m"));
    case ClaimId::THM21_B: return q_quotient_B(as_int(p, "n"), as_int(p, "m"));
    case ClaimId::THM21_PROFILE_A: return profiles_A(as_int(p, "n"), as_int(p, "m"));
    case ClaimId::THM21_PROFILE_B: return profiles_B(as_int(p, "n"), as_int(p, "m"));
    case ClaimId::CONJ_Q_SUN1: return q_d_square_congruence(as_int(p, "p"), as_int(p, "m"));
    case ClaimId::CONJ_Q_T11: {
        QSumForm form = parse_form(param_str(p, "expr"));
        int r = form == QSumForm::kScaled ? 1 : as_int(p, "r");
        return q_sum_positivity(form, as_int(p, "n"), as_int(p, "m"), r);
    }
    default: break;
    }
    throw std::logic_error("not a q claim: " + std::string(to_string(claim)));
}

} // namespace dlab::detail

namespace dlab {

std::string_view to_string(QSumForm f) {
    switch (f) {
    case QSumForm::kScaled: return "scaled";
    case QSumForm::kPower: return "power";
    case QSumForm::kPowerAlternating: return "power_alt";
    }
    return "?";
}

} // namespace dlab
