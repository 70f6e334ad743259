#include "checks.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace dlab {

namespace {

using enum ClaimId;
using detail::Outcome;

constexpr std::string_view kSumKindsDS[] = {"d_square_scaled", "d_power", "d_power_alt",
                                            "s_square_scaled", "s_power", "s_power_alt"};
constexpr std::string_view kSumKindsMixed[] = {"ds_power", "ds_power_alt"};

bool is_power_kind(std::string_view k) { return k.find("power") != std::string_view::npos; }

struct Range {
    int lo, hi;
};

// Per-claim defaults; each entry is one acceptance grid.
Range default_n(ClaimId c) {
    switch (c) {
    case EQ_DNSQUARE: case EQ_D_REFLECT: case REC_ZEIL1: return {0, 25};
    case EQ_SNSQUARE: case EQ_DOUBLESUM: case EQ_S_ALT: case REC_ORDER2: case REC_ORDER3: return {0, 12};
    case EQ_SIMPLE: return {0, 40};
    case EQ_XX1: return {1, 15};
    case EQ_DOUBLESUM_TWO: return {1, 10};
    case REC_ZEIL_SQUARES: case REC_DSQUARE: return {0, 20};
    case THM11_ALL: case LEM34: case THM21_PROFILE_A: case THM21_PROFILE_B: return {1, 8};
    case THM11_POLY: return {1, 6};
    case THM12: return {1, 12};
    case THM21_A: case THM21_B: return {1, 10};
    case CONJ_Q_T11: case CONJ_MIXED_DS: return {1, 5};
    default: return {0, -1};
    }
}

Range default_m(ClaimId c) {
    switch (c) {
    case THM11_ALL: case LEM34: return {1, 3};
    case THM11_POLY: return {1, 2};
    case THM12: return {1, 12};
    case THM21_A: case THM21_B: return {1, 10};
    case THM21_PROFILE_A: case THM21_PROFILE_B: return {1, 8};
    case CONJ_Q_SUN1: case CONJ_Q_T11: case CONJ_MIXED_DS: return {1, 5};
    default: return {0, -1};
    }
}

std::vector<int> default_primes(ClaimId c) {
    switch (c) {
    case THM51: return {3, 5, 7};
    case CONJ_SUNFINAL: return {5, 7, 11, 13};
    case CONJ_Q_SUN1: return {3, 5};
    default: return {3, 5, 7, 11, 13};
    }
}

Range with_max(Range r, const std::optional<int>& hi) {
    if (hi) r.hi = *hi;
    return r;
}

Params pn(std::string k, std::int64_t v) { return {{std::move(k), v}}; }

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Residues of THM51: every one when p^4 is small, else distinct samples in
// ascending order drawn from a fixed seed.
std::vector<std::int64_t> lift_residues(int p, const SuiteBounds& b) {
    const std::int64_t mod = ipow(p, 4);
    std::vector<std::int64_t> out;
    if (mod <= b.lift_samples) {
        for (std::int64_t x = 0; x < mod; ++x) out.push_back(x);
        return out;
    }
    std::mt19937_64 rng(b.seed ^ static_cast<std::uint64_t>(p));
    std::uniform_int_distribution<std::int64_t> dist(0, mod - 1);
    std::set<std::int64_t> picked;
    while (static_cast<int>(picked.size()) < b.lift_samples) picked.insert(dist(rng));
    return {picked.begin(), picked.end()};
}

struct SunFinalCase {
    const char* x;
    const char* c;
    int a;
};
constexpr SunFinalCase kSunFinal[] = {
    {"-1/2", "3/4", -1}, {"-1/3", "7/9", -3}, {"-1/4", "13/16", -2}, {"-1/6", "31/36", -1}};

void points_for(ClaimId c, const SuiteBounds& b, std::vector<std::pair<ClaimId, Params>>& out) {
    const Range nr = with_max(default_n(c), b.n_max);
    const Range mr = with_max(default_m(c), b.m_max);
    const std::vector<int> primes = b.primes ? *b.primes : default_primes(c);
    auto emit = [&](Params p) { out.emplace_back(c, std::move(p)); };

    switch (c) {
    case THM11_ALL: {
        const int xlo = b.x_min.value_or(-12), xhi = b.x_max.value_or(12);
        for (auto kind : kSumKindsDS) {
            for (int n = nr.lo; n <= nr.hi; ++n) {
                const int mhi = is_power_kind(kind) ? mr.hi : mr.lo;
                for (int m = mr.lo; m <= mhi; ++m) {
                    Params p{{"expr", std::string(kind)}, {"n", n}};
                    if (is_power_kind(kind)) p.emplace_back("m", m);
                    p.emplace_back("x_min", xlo);
                    p.emplace_back("x_max", xhi);
                    emit(std::move(p));
                }
            }
        }
        return;
    }
    case THM11_POLY:
    case CONJ_MIXED_DS: {
        const auto kinds = c == THM11_POLY ? std::vector<std::string_view>(std::begin(kSumKindsDS), std::end(kSumKindsDS))
                                           : std::vector<std::string_view>(std::begin(kSumKindsMixed), std::end(kSumKindsMixed));
        for (auto kind : kinds) {
            for (int n = nr.lo; n <= nr.hi; ++n) {
                const int mhi = is_power_kind(kind) ? mr.hi : mr.lo;
                for (int m = mr.lo; m <= mhi; ++m) {
                    Params p{{"expr", std::string(kind)}, {"n", n}};
                    if (is_power_kind(kind)) p.emplace_back("m", m);
                    emit(std::move(p));
                }
            }
        }
        return;
    }
    case THM12: case THM21_A: case THM21_B: case THM21_PROFILE_A: case THM21_PROFILE_B:
        for (int n = nr.lo; n <= nr.hi; ++n) {
            for (int m = mr.lo; m <= mr.hi; ++m) emit({{"n", n}, {"m", m}});
        }
        return;
    case LEM34:
        for (int eps : {1, -1}) {
            for (int m = mr.lo; m <= mr.hi; ++m) {
                for (int n = nr.lo; n <= nr.hi; ++n) emit({{"n", n}, {"m", m}, {"eps", eps}});
            }
        }
        return;
    case BINOM_CONG:
        for (int p : primes) emit(pn("p", p));
        return;
    case CONG_SUN1:
    case CONG_SUN2:
        for (int p : primes) {
            for (std::int64_t x = 0; x < std::int64_t{p} * p; ++x) emit({{"p", p}, {"x", x}});
        }
        return;
    case THM51:
        for (int p : primes) {
            for (std::int64_t x : lift_residues(p, b)) emit({{"p", p}, {"x", x}});
        }
        return;
    case CONJ_SUNFINAL:
        for (int p : primes) {
            for (const auto& sc : kSunFinal) {
                emit({{"p", p}, {"x", std::string(sc.x)}, {"c", std::string(sc.c)}, {"a", sc.a}});
            }
        }
        return;
    case CONJ_Q_SUN1:
        for (int p : primes) {
            for (int m = mr.lo; m <= mr.hi; ++m) emit({{"p", p}, {"m", m}});
        }
        return;
    case CONJ_Q_T11: {
        const int rhi = b.r_max.value_or(2);
        for (QSumForm f : {QSumForm::kScaled, QSumForm::kPower, QSumForm::kPowerAlternating}) {
            for (int n = nr.lo; n <= nr.hi; ++n) {
                for (int m = mr.lo; m <= mr.hi; ++m) {
                    if (f == QSumForm::kScaled) {
                        emit({{"expr", std::string(to_string(f))}, {"n", n}, {"m", m}});
                        continue;
                    }
                    for (int r = 1; r <= rhi; ++r) emit({{"expr", std::string(to_string(f))}, {"n", n}, {"m", m}, {"r", r}});
                }
            }
        }
        return;
    }
    default:
        for (int n = nr.lo; n <= nr.hi; ++n) emit(pn("n", n));
        return;
    }
}

Outcome dispatch(ClaimId c, const Params& p) {
    switch (c) {
    case THM21_A: case THM21_B: case THM21_PROFILE_A: case THM21_PROFILE_B: case CONJ_Q_SUN1: case CONJ_Q_T11:
        return detail::run_q_claim(c, p);
    case BINOM_CONG: case CONG_SUN1: case CONG_SUN2: case THM51: case CONJ_SUNFINAL:
        return detail::run_congruence_claim(c, p);
    default:
        return detail::run_identity_claim(c, p);
    }
}

} // namespace

std::vector<std::pair<ClaimId, Params>> enumerate_points(const std::vector<ClaimId>& claims,
                                                         const SuiteBounds& bounds) {
    std::vector<std::pair<ClaimId, Params>> out;
    for (const auto& info : claim_catalog()) {
        if (std::find(claims.begin(), claims.end(), info.id) == claims.end()) continue;
        points_for(info.id, bounds, out);
    }
    return out;
}

Report evaluate(ClaimId claim, const Params& params) {
    Report r;
    r.claim = claim;
    r.params = params;
    const auto start = std::chrono::steady_clock::now();
    try {
        Outcome o = dispatch(claim, params);
        r.status = o.status;
        r.witness = std::move(o.witness);
    } catch (const std::exception& e) {
        r.status = Status::kFail;
        r.witness = {{"error", e.what()}};
    }
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

Report recheck(const Report& report) { return evaluate(report.claim, report.params); }

std::vector<Report> run_suite(const std::vector<ClaimId>& claims, const SuiteBounds& bounds, unsigned parallelism) {
    const auto points = enumerate_points(claims, bounds);
    std::vector<Report> reports(points.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            reports[i] = evaluate(points[i].first, points[i].second);
        }
    };
    const unsigned workers = std::clamp<unsigned>(parallelism, 1, std::max<std::size_t>(points.size(), 1));
    if (workers == 1) {
        work();
        return reports;
    }
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    pool.clear();
    return reports;
}

Report check_d_square_congruence(int p, const ModScalar& x) {
    return evaluate(CONG_SUN1, {{"p", p}, {"x", floor_mod(x.residue(), ExactInt(p) * ExactInt(p)).to_int64()}});
}

Report check_s_square_congruence(int p, const ModScalar& x) {
    return evaluate(CONG_SUN2, {{"p", p}, {"x", floor_mod(x.residue(), ExactInt(p) * ExactInt(p)).to_int64()}});
}

Report check_s_square_lift_congruence(int p, const ModScalar& x) {
    return evaluate(THM51, {{"p", p}, {"x", floor_mod(x.residue(), pow(ExactInt(p), 4)).to_int64()}});
}

Report check_s_square_rational_point(int p, const ExactRat& x, const ExactRat& constant, int legendre_top) {
    return evaluate(CONJ_SUNFINAL, {{"p", p}, {"x", x.to_string()}, {"c", constant.to_string()}, {"a", legendre_top}});
}

Report check_s_square_rational_point(int p, RationalPoint which) {
    const auto& sc = kSunFinal[static_cast<int>(which)];
    return evaluate(CONJ_SUNFINAL, {{"p", p}, {"x", std::string(sc.x)}, {"c", std::string(sc.c)}, {"a", sc.a}});
}

Report check_q_d_square_congruence(int p, int m) { return evaluate(CONJ_Q_SUN1, {{"p", p}, {"m", m}}); }

Report check_q_sum_positivity(QSumForm form, int n, int m, int r) {
    Params p{{"expr", std::string(to_string(form))}, {"n", n}, {"m", m}};
    if (form != QSumForm::kScaled) p.emplace_back("r", r);
    return evaluate(CONJ_Q_T11, p);
}

} // namespace dlab
