#include "dlab/sequences.hpp"

#include <stdexcept>
#include <vector>

namespace dlab {

namespace {

ExactInt binom(std::int64_t n, std::int64_t k) { return int_binomial(ExactInt(n), ExactInt(k)); }

// {x choose j}{x+j choose j} for j = 0..count-1
std::vector<PolyX> central_products(int count) {
    std::vector<PolyX> out;
    out.reserve(count);
    for (int j = 0; j < count; ++j) out.push_back(polyx_binomial(j) * polyx_binomial_shifted(j, j));
    return out;
}

void require_nonneg(int n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + " needs n >= 0");
}

struct Weights {
    ExactRat prefactor;
    bool alternating = false;
};

Weights weights_for(const SumSpec& spec) {
    if (spec.n < 1 || spec.m < 1) throw std::invalid_argument("sum expressions need n >= 1 and m >= 1");
    const ExactInt n(spec.n);
    switch (spec.kind) {
    case SumKind::kDSquareScaled:
        return {ExactRat(ExactInt(1), ExactInt(2) * n * n), false};
    case SumKind::kSSquareScaled:
        return {ExactRat(ExactInt(1), n * n), false};
    case SumKind::kDPower:
    case SumKind::kSPower:
    case SumKind::kMixedPower:
        return {ExactRat(ExactInt(1), n), false};
    case SumKind::kDPowerAlternating:
    case SumKind::kSPowerAlternating:
    case SumKind::kMixedPowerAlternating:
        return {ExactRat(ExactInt(1), n), true};
    }
    throw std::logic_error("unknown SumKind");
}

} // namespace

PolyX d_poly(int n) {
    require_nonneg(n, "d_poly");
    PolyX r;
    for (int k = 0; k <= n; ++k) r += polyx_binomial(k) * ExactRat(binom(n, k) * pow(ExactInt(2), k));
    return r;
}

PolyX s_poly(int n) {
    require_nonneg(n, "s_poly");
    PolyX r;
    auto u = central_products(n + 1);
    for (int k = 0; k <= n; ++k) r += u[k] * ExactRat(binom(n, k));
    return r;
}

PolyX s_alt_poly(int n) {
    require_nonneg(n, "s_alt_poly");
    PolyX r;
    for (int k = 0; k <= n; ++k) {
        r += polyx_binomial(k) * polyx_binomial_shifted(n - k, n) * ExactRat(binom(n, k));
    }
    return r;
}

PolyX dn_square_rhs(int n) {
    require_nonneg(n, "dn_square_rhs");
    PolyX r;
    auto u = central_products(n + 1);
    for (int k = 0; k <= n; ++k) r += u[k] * ExactRat(binom(n + k, 2 * k) * pow(ExactInt(4), k));
    return r;
}

PolyX sn_square_rhs(int n) {
    require_nonneg(n, "sn_square_rhs");
    auto u = central_products(n + 1);
    PolyX r;
    for (int k = 0; k <= n; ++k) {
        PolyX inner;
        for (int j = 0; j <= k; ++j) inner += u[j] * ExactRat(binom(2 * k, j + k));
        r += u[k] * inner * ExactRat(binom(n + k, 2 * k));
    }
    return r;
}

ExactInt d_value(int n, const ExactInt& x) {
    require_nonneg(n, "d_value");
    ExactInt r(0);
    for (int k = 0; k <= n; ++k) r += binom(n, k) * int_binomial(x, ExactInt(k)) * pow(ExactInt(2), k);
    return r;
}

ExactInt s_value(int n, const ExactInt& x) {
    require_nonneg(n, "s_value");
    ExactInt r(0);
    for (int k = 0; k <= n; ++k) {
        r += binom(n, k) * int_binomial(x, ExactInt(k)) * int_binomial(x + ExactInt(k), ExactInt(k));
    }
    return r;
}

ExactInt delannoy_number(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("delannoy_number needs m, n >= 0");
    ExactInt r(0);
    for (int k = 0; k <= n; ++k) r += binom(n, k) * binom(m, k) * pow(ExactInt(2), k);
    return r;
}

MultiPolyZ schmidt_poly(int n) {
    require_nonneg(n, "schmidt_poly");
    MultiPolyZ r;
    for (int k = 0; k <= n; ++k) {
        r += multipoly_scale(MultiPolyZ::variable(k), binom(n + k, 2 * k) * binom(2 * k, k));
    }
    return r;
}

ExactInt double_sum_A(int n, int r) {
    ExactInt s(0);
    for (int j = 0; j <= n; ++j) {
        for (int k = 0; k <= n; ++k) {
            s += binom(n, j) * binom(n, k) * binom(j + k, j) * binom(k, r - j) * binom(r, k);
        }
    }
    return s;
}

ExactInt double_sum_B(int n, int r) {
    ExactInt s(0);
    for (int j = 0; j <= n; ++j) {
        for (int k = 0; k <= n; ++k) {
            s += binom(n + k, 2 * k) * binom(2 * k, j + k) * binom(j + k, j) * binom(k, r - j) * binom(r, k);
        }
    }
    return s;
}

std::string_view to_string(SumKind kind) {
    switch (kind) {
    case SumKind::kDSquareScaled: return "d_square_scaled";
    case SumKind::kDPower: return "d_power";
    case SumKind::kDPowerAlternating: return "d_power_alt";
    case SumKind::kSSquareScaled: return "s_square_scaled";
    case SumKind::kSPower: return "s_power";
    case SumKind::kSPowerAlternating: return "s_power_alt";
    case SumKind::kMixedPower: return "ds_power";
    case SumKind::kMixedPowerAlternating: return "ds_power_alt";
    }
    return "?";
}

bool uses_power(SumKind kind) { return kind != SumKind::kDSquareScaled && kind != SumKind::kSSquareScaled; }

ExactRat sum_expression_value(const SumSpec& spec, const ExactInt& x) {
    const Weights w = weights_for(spec);
    const unsigned m = static_cast<unsigned>(spec.m);
    ExactInt total(0);
    for (int k = 0; k < spec.n; ++k) {
        ExactInt term;
        switch (spec.kind) {
        case SumKind::kDSquareScaled: term = pow(d_value(k, x), 2); break;
        case SumKind::kSSquareScaled: term = pow(s_value(k, x), 2); break;
        case SumKind::kDPower:
        case SumKind::kDPowerAlternating: term = pow(d_value(k, x), 2 * m); break;
        case SumKind::kSPower:
        case SumKind::kSPowerAlternating: term = pow(s_value(k, x), 2 * m); break;
        case SumKind::kMixedPower:
        case SumKind::kMixedPowerAlternating: term = pow(d_value(k, x) * s_value(k, x), m); break;
        }
        term *= ExactInt(2 * k + 1);
        if (w.alternating && k % 2 == 1) term = -term;
        total += term;
    }
    ExactRat value = ExactRat(total) * w.prefactor;
    if (spec.kind == SumKind::kDSquareScaled) value *= ExactRat(x * (x + ExactInt(1)));
    return value;
}

PolyX sum_expression_poly(const SumSpec& spec) {
    const Weights w = weights_for(spec);
    const unsigned m = static_cast<unsigned>(spec.m);
    PolyX total;
    for (int k = 0; k < spec.n; ++k) {
        PolyX term;
        switch (spec.kind) {
        case SumKind::kDSquareScaled: term = pow(d_poly(k), 2); break;
        case SumKind::kSSquareScaled: term = pow(s_poly(k), 2); break;
        case SumKind::kDPower:
        case SumKind::kDPowerAlternating: term = pow(d_poly(k), 2 * m); break;
        case SumKind::kSPower:
        case SumKind::kSPowerAlternating: term = pow(s_poly(k), 2 * m); break;
        case SumKind::kMixedPower:
        case SumKind::kMixedPowerAlternating: term = pow(d_poly(k) * s_poly(k), m); break;
        }
        ExactRat weight(2 * k + 1);
        if (w.alternating && k % 2 == 1) weight = -weight;
        total += term * weight;
    }
    total *= w.prefactor;
    if (spec.kind == SumKind::kDSquareScaled) total *= PolyX::x() * PolyX::linear(ExactRat(1));
    return total;
}

PolyX d_square_scaled_single_sum(int n) {
    if (n < 1) throw std::invalid_argument("d_square_scaled_single_sum needs n >= 1");
    PolyX r;
    for (int k = 0; k < n; ++k) {
        ExactRat c(ExactInt(n - k) * ExactInt(k + 1), ExactInt(2 * n));
        c *= ExactRat(binom(n + k, 2 * k) * pow(ExactInt(4), k));
        r += polyx_binomial_shifted(1, k + 1) * polyx_binomial_shifted(k, k + 1) * c;
    }
    return r;
}

PolyX s_square_scaled_double_sum(int n) {
    if (n < 1) throw std::invalid_argument("s_square_scaled_double_sum needs n >= 1");
    auto u = central_products(n);
    PolyX r;
    for (int k = 0; k < n; ++k) {
        PolyX inner;
        for (int j = 0; j <= k; ++j) inner += u[j] * ExactRat(binom(2 * k, j + k));
        ExactRat c(binom(n - 1, k) * binom(n + k, k), ExactInt(k + 1));
        r += polyx_binomial_shifted(k, 2 * k) * inner * c;
    }
    return r;
}

ExactInt odd_weight_column_sum(int n, int k) {
    ExactInt s(0);
    for (int i = k; i < n; ++i) s += ExactInt(2 * i + 1) * binom(i + k, 2 * k);
    return s;
}

ExactRat odd_weight_column_closed(int n, int k) {
    return ExactRat(ExactInt(n) * ExactInt(n - k) * binom(n + k, 2 * k), ExactInt(k + 1));
}

std::pair<ExactRat, ExactRat> integrality_pair(int n, int m, int k, int j) {
    if (n < 1 || m < 1 || k < 0 || j < 0) throw std::invalid_argument("integrality_pair needs n, m >= 1 and j, k >= 0");
    ExactRat first(ExactInt(n - k) * ExactInt(k + 1), ExactInt(n));
    first *= ExactRat(binom(n + k, 2 * k) * binom(m + 1, k + 1) * binom(m + k, k + 1));
    ExactRat second(ExactInt(1), ExactInt(k + 1));
    second *= ExactRat(binom(n - 1, k) * binom(n + k, k) * binom(2 * k, j + k) * binom(m + k, 2 * k) * binom(m, j) *
                       binom(m + j, j));
    return {first, second};
}

MultiPolyZ schmidt_power_sum(int n, int m, int eps) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +1 or -1");
    if (m < 0) throw std::invalid_argument("schmidt_power_sum needs m >= 0");
    MultiPolyZ r;
    for (int k = 0; k < n; ++k) {
        ExactInt w(2 * k + 1);
        if (eps < 0 && k % 2 == 1) w = -w;
        r += multipoly_scale(multipoly_pow(schmidt_poly(k), static_cast<unsigned>(m)), w);
    }
    return r;
}

} // namespace dlab
