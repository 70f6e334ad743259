#ifndef DLAB_VERIFIER_HPP
#define DLAB_VERIFIER_HPP

// Claim catalog, per-point checks and the suite runner. Every check turns a
// (claim, parameter point) pair into a Report; failures are data, never
// exceptions, and each report carries enough parameters to be re-run alone.

#include "dlab/exact.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace dlab {

enum class ClaimId {
    EQ_DNSQUARE,       // d_n(x)^2 as a single binomial sum
    EQ_SNSQUARE,       // s_n(x)^2 as a double binomial sum
    EQ_DOUBLESUM,      // A_n(r) = B_n(r)
    EQ_SIMPLE,         // closed form of sum_{i=k}^{n-1} (2i+1) C(i+k, 2k)
    EQ_XX1,            // single-sum form of x(x+1)/(2n^2) sum (2k+1) d_k^2
    EQ_DOUBLESUM_TWO,  // double-sum form of 1/n^2 sum (2k+1) s_k^2
    EQ_D_REFLECT,      // d_n(-x-1) = (-1)^n d_n(x)
    EQ_S_ALT,          // alternate binomial form of s_n(x)
    REC_ZEIL1,         // three-term recurrence of d_n
    REC_ZEIL_SQUARES,  // the squared and product forms of that recurrence
    REC_DSQUARE,       // four-term recurrence shared by d_n^2 and its single sum
    REC_ORDER2,        // order-2 recurrence shared by A_n and B_n
    REC_ORDER3,        // the order-3 recurrences of A_n and B_n
    THM11_ALL,         // the six weighted sums are integers on an x grid
    THM11_POLY,        // ... and integer-valued as polynomials
    THM12,             // the two binomial quotients are integers
    THM21_A,           // q-analogue of the first quotient: polynomial, non-negative
    THM21_B,           // q-analogue of the second quotient: polynomial, non-negative
    THM21_PROFILE_A,   // floor-sum exponents match cyclotomic valuations
    THM21_PROFILE_B,
    LEM34,             // Schmidt power sums have coefficients divisible by n
    BINOM_CONG,        // C(p-1,k) C(p+k,k) = (-1)^k mod p^2
    CONG_SUN1,         // sum (2k+1) d_k(x)^2 mod p^2, three cases
    CONG_SUN2,         // sum (2k+1) s_k(x)^2 = 0 mod p^2
    THM51,             // sum (2k+1) s_k(x)^2 mod p^4 via the double-sum form
    CONJ_SUNFINAL,     // sum (2k+1) s_k(x)^2 mod p^4 at x = -1/2, -1/3, -1/4, -1/6
    CONJ_Q_SUN1,       // q-analogue of CONG_SUN1 modulo [p]^2
    CONJ_Q_T11,        // q-analogues of the d-sums are non-negative Laurent polynomials
    CONJ_MIXED_DS,     // 1/n sum (+-1)^k (2k+1) d_k^m s_k^m is integer-valued
};

enum class ClaimKind { kTheorem, kConjecture };

struct ClaimInfo {
    ClaimId id;
    std::string_view name;
    ClaimKind kind;
    std::string_view summary;
};

/// Every claim, in suite order.
const std::vector<ClaimInfo>& claim_catalog();
const ClaimInfo& claim_info(ClaimId id);
std::string_view to_string(ClaimId id);
std::optional<ClaimId> parse_claim(std::string_view name);

enum class Status { kPass, kFail, kSkipped };
std::string_view to_string(Status s);

using ParamValue = std::variant<std::int64_t, std::string>;
using Params = std::vector<std::pair<std::string, ParamValue>>;
using Witness = std::vector<std::pair<std::string, std::string>>;

struct Report {
    ClaimId claim{};
    Params params;
    Status status = Status::kSkipped;
    /// Non-empty whenever status is kFail.
    Witness witness;
    std::chrono::nanoseconds elapsed{0};
};

/// "holds", "conjecture-consistent", "violated", "counterexample" or "skipped".
std::string_view verdict(const Report& r);

/// Parameter lookup; throws std::invalid_argument when missing or mistyped.
std::int64_t param_int(const Params& params, std::string_view name);
std::string param_str(const Params& params, std::string_view name);

/// Grid bounds. Unset fields fall back to each claim's own defaults, which
/// reproduce the acceptance grids; set fields override every selected claim.
struct SuiteBounds {
    std::optional<int> n_max;
    std::optional<int> m_max;
    std::optional<int> r_max;
    std::optional<int> x_min;
    std::optional<int> x_max;
    std::optional<std::vector<int>> primes;
    /// THM51 checks every residue mod p^4 when p^4 <= this, else this many samples.
    int lift_samples = 100;
    std::uint64_t seed = 0x5eed'de1a'2017ull;
};

/// Ordered parameter points for the selected claims (catalog order, then
/// ascending parameters).
std::vector<std::pair<ClaimId, Params>> enumerate_points(const std::vector<ClaimId>& claims,
                                                         const SuiteBounds& bounds);

/// Runs one claim at one parameter point.
Report evaluate(ClaimId claim, const Params& params);

/// Re-runs a report's claim at its recorded parameters.
Report recheck(const Report& report);

/// Runs every point with up to `parallelism` workers. Output order matches
/// enumerate_points regardless of completion order.
std::vector<Report> run_suite(const std::vector<ClaimId>& claims, const SuiteBounds& bounds,
                              unsigned parallelism = 1);

// -- Congruence checks --------------------------------------------------------

/// sum_{k<p} (2k+1) d_k(x)^2 mod p^2 against -x, x+1 or 0 by the class of x mod p.
/// x is a residue mod p^2; binomials are evaluated modularly (k < p).
Report check_d_square_congruence(int p, const ModScalar& x);
/// sum_{k<p} (2k+1) s_k(x)^2 = 0 mod p^2.
Report check_s_square_congruence(int p, const ModScalar& x);
/// sum_{k<p} (2k+1) s_k(x)^2 = p^2 sum_{k<p} (-1)^k/(k+1) {x+k choose 2k} sum_j ... mod p^4,
/// evaluated exactly at the canonical integer lift of x mod p^4.
Report check_s_square_lift_congruence(int p, const ModScalar& x);
/// sum_{k<p} (2k+1) s_k(x)^2 = constant * (a|p) * p^2 mod p^4 at a rational x.
/// Skipped when p < 5 or a denominator is not invertible mod p.
Report check_s_square_rational_point(int p, const ExactRat& x, const ExactRat& constant, int legendre_top);

enum class RationalPoint { kMinusHalf, kMinusThird, kMinusQuarter, kMinusSixth };
Report check_s_square_rational_point(int p, RationalPoint which);

/// sum_{k<p} [2k+1] D_q(m,k) D_{q^-1}(m,k) q^-k against its case right side modulo
/// Phi_p(q)^2: the difference is multiplied by q^N to clear negative powers
/// (q is a unit mod Phi_p^2) and its polynomial remainder must vanish.
Report check_q_d_square_congruence(int p, int m);

enum class QSumForm { kScaled, kPower, kPowerAlternating };
std::string_view to_string(QSumForm f);
/// One of the three q-sums over D_q D_{q^-1}; r is ignored for kScaled.
Report check_q_sum_positivity(QSumForm form, int n, int m, int r);

} // namespace dlab

#endif // DLAB_VERIFIER_HPP
