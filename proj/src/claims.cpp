#include "dlab/verifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace dlab {

namespace {

using enum ClaimId;
constexpr ClaimKind T = ClaimKind::kTheorem;
constexpr ClaimKind C = ClaimKind::kConjecture;

const std::vector<ClaimInfo> kCatalog = {
    {EQ_DNSQUARE, "EQ_DNSQUARE", T, "d_n(x)^2 = sum_k C(n+k,2k) {x,k}{x+k,k} 4^k"},
    {EQ_SNSQUARE, "EQ_SNSQUARE", T, "s_n(x)^2 = sum_k C(n+k,2k) {x,k}{x+k,k} sum_j C(2k,j+k) {x,j}{x+j,j}"},
    {EQ_DOUBLESUM, "EQ_DOUBLESUM", T, "A_n(r) = B_n(r) for 0 <= r <= 2n"},
    {EQ_SIMPLE, "EQ_SIMPLE", T, "sum_{i=k}^{n-1} (2i+1) C(i+k,2k) = n(n-k)/(k+1) C(n+k,2k)"},
    {EQ_XX1, "EQ_XX1", T, "x(x+1)/(2n^2) sum (2k+1) d_k^2 equals its single-sum form"},
    {EQ_DOUBLESUM_TWO, "EQ_DOUBLESUM_TWO", T, "1/n^2 sum (2k+1) s_k^2 equals its double-sum form"},
    {EQ_D_REFLECT, "EQ_D_REFLECT", T, "d_n(-x-1) = (-1)^n d_n(x)"},
    {EQ_S_ALT, "EQ_S_ALT", T, "s_n(x) = sum_k C(n,k) {x,k}{x+n-k,n}"},
    {REC_ZEIL1, "REC_ZEIL1", T, "(n+2) d_{n+2} = (2x+1) d_{n+1} + (n+1) d_n"},
    {REC_ZEIL_SQUARES, "REC_ZEIL_SQUARES", T, "squared and product forms of the d_n recurrence"},
    {REC_DSQUARE, "REC_DSQUARE", T, "four-term recurrence for d_n^2 and its single-sum form"},
    {REC_ORDER2, "REC_ORDER2", T, "order-2 recurrence shared by A_n and B_n"},
    {REC_ORDER3, "REC_ORDER3", T, "order-3 recurrences of A_n and B_n"},
    {THM11_ALL, "THM11_ALL", T, "the six weighted d/s sums are integers on the x grid"},
    {THM11_POLY, "THM11_POLY", T, "the six weighted d/s sums are integer-valued polynomials"},
    {THM12, "THM12", T, "the two binomial quotients are integers"},
    {THM21_A, "THM21_A", T, "q-analogue of the first quotient is a non-negative polynomial"},
    {THM21_B, "THM21_B", T, "q-analogue of the second quotient is a non-negative polynomial"},
    {THM21_PROFILE_A, "THM21_PROFILE_A", T, "floor-sum exponents of the first q-quotient match valuations"},
    {THM21_PROFILE_B, "THM21_PROFILE_B", T, "floor-sum exponents of the second q-quotient match valuations"},
    {LEM34, "LEM34", T, "coefficients of sum eps^k (2k+1) S_k^m are multiples of n"},
    {BINOM_CONG, "BINOM_CONG", T, "C(p-1,k) C(p+k,k) = (-1)^k mod p^2"},
    {CONG_SUN1, "CONG_SUN1", T, "sum_{k<p} (2k+1) d_k(x)^2 mod p^2"},
    {CONG_SUN2, "CONG_SUN2", T, "sum_{k<p} (2k+1) s_k(x)^2 = 0 mod p^2"},
    {THM51, "THM51", T, "sum_{k<p} (2k+1) s_k(x)^2 mod p^4 via the double-sum form"},
    {CONJ_SUNFINAL, "CONJ_SUNFINAL", C, "sum_{k<p} (2k+1) s_k(x)^2 mod p^4 at x = -1/2, -1/3, -1/4, -1/6"},
    {CONJ_Q_SUN1, "CONJ_Q_SUN1", C, "q-analogue of the d_k^2 congruence modulo [p]^2"},
    {CONJ_Q_T11, "CONJ_Q_T11", C, "q-analogues of the d-sums are non-negative Laurent polynomials"},
    {CONJ_MIXED_DS, "CONJ_MIXED_DS", C, "1/n sum (+-1)^k (2k+1) d_k^m s_k^m is integer-valued"},
};

} // namespace

const std::vector<ClaimInfo>& claim_catalog() { return kCatalog; }

const ClaimInfo& claim_info(ClaimId id) {
    auto it = std::find_if(kCatalog.begin(), kCatalog.end(), [id](const ClaimInfo& c) { return c.id == id; });
    if (it == kCatalog.end()) throw std::logic_error("claim missing from catalog");
    return *it;
}

std::string_view to_string(ClaimId id) { return claim_info(id).name; }

std::optional<ClaimId> parse_claim(std::string_view name) {
    for (const auto& c : kCatalog) {
        if (c.name == name) return c.id;
    }
    return std::nullopt;
}

std::string_view to_string(Status s) {
    switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kSkipped: return "skipped";
    }
    return "?";
}

std::string_view verdict(const Report& r) {
    const bool conjecture = claim_info(r.claim).kind == ClaimKind::kConjecture;
    switch (r.status) {
    case Status::kPass: return conjecture ? "conjecture-consistent" : "holds";
    case Status::kFail: return conjecture ? "counterexample" : "violated";
    case Status::kSkipped: return "skipped";
    }
    return "?";
}

std::int64_t param_int(const Params& params, std::string_view name) {
    for (const auto& [k, v] : params) {
        if (k != name) continue;
        if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
        throw std::invalid_argument("parameter '" + std::string(name) + "' is not an integer");
    }
    throw std::invalid_argument("missing parameter '" + std::string(name) + "'");
}

std::string param_str(const Params& params, std::string_view name) {
    for (const auto& [k, v] : params) {
        if (k != name) continue;
        if (const auto* s = std::get_if<std::string>(&v)) return *s;
        throw std::invalid_argument("parameter '" + std::string(name) + "' is not a string");
    }
    throw std::invalid_argument("missing parameter '" + std::string(name) + "'");
}

} // namespace dlab
