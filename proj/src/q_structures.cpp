#include "dlab/q_structures.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace dlab {

namespace {

int floor_div_int(int a, int d) {
    int q = a / d;
    if ((a % d != 0) && ((a < 0) != (d < 0))) --q;
    return q;
}

int chi_divides(int d, int a) { return a % d == 0 ? 1 : 0; }

class CyclotomicCache {
public:
    LaurentQ get(int d) {
        std::lock_guard lock(mutex_);
        return fill(d);
    }

private:
    const LaurentQ& fill(int d) {
        if (static_cast<std::size_t>(d) < table_.size() && !table_[d].is_zero()) return table_[d];
        LaurentQ divisor(ExactInt(1));
        for (int e = 1; e < d; ++e) {
            if (d % e == 0) divisor *= fill(e);
        }
        LaurentQ value = laurent_exact_div(LaurentQ::q_power(d) - LaurentQ(1), divisor);
        if (table_.size() <= static_cast<std::size_t>(d)) table_.resize(d + 1);
        table_[d] = std::move(value);
        return table_[d];
    }

    std::mutex mutex_;
    std::vector<LaurentQ> table_;
};

// Rows of the q-Pascal triangle, extended on demand.
class QBinomialCache {
public:
    LaurentQ get(int n, int k) {
        std::lock_guard lock(mutex_);
        while (rows_.size() <= static_cast<std::size_t>(n)) extend();
        return rows_[n][k];
    }

private:
    void extend() {
        const int n = static_cast<int>(rows_.size());
        std::vector<LaurentQ> row(n + 1);
        row[0] = LaurentQ(1);
        row[n] = LaurentQ(1);
        for (int k = 1; k < n; ++k) {
            // [n,k] = [n-1,k-1] + q^k [n-1,k]
            row[k] = rows_[n - 1][k - 1] + rows_[n - 1][k].shifted(k);
        }
        rows_.push_back(std::move(row));
    }

    std::mutex mutex_;
    std::vector<std::vector<LaurentQ>> rows_;
};

CyclotomicCache& cyclotomic_cache() {
    static CyclotomicCache cache;
    return cache;
}

QBinomialCache& q_binomial_cache() {
    static QBinomialCache cache;
    return cache;
}

} // namespace

LaurentQ cyclotomic(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic index must be positive");
    return cyclotomic_cache().get(d);
}

LaurentQ q_binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return {};
    return q_binomial_cache().get(n, k);
}

LaurentQ q_integer(int n) {
    if (n <= 0) return {};
    return LaurentQ::from_dense(std::vector<ExactInt>(static_cast<std::size_t>(n), ExactInt(1)));
}

int cyclotomic_valuation(const LaurentQ& p, int d) {
    if (p.is_zero()) throw std::domain_error("valuation of the zero polynomial");
    const LaurentQ phi = cyclotomic(d);
    LaurentQ rest = p;
    int e = 0;
    for (;;) {
        try {
            rest = laurent_exact_div(rest, phi);
        } catch (const NotDivisible&) {
            return e;
        }
        ++e;
    }
}

bool CycloProfile::all_nonnegative() const {
    return std::all_of(exponents.begin(), exponents.end(), [](const auto& kv) { return kv.second >= 0; });
}

LaurentQ CycloProfile::reconstruct() const {
    LaurentQ r(1);
    for (const auto& [d, e] : exponents) {
        if (e < 0) throw std::domain_error("cannot reconstruct a profile with negative exponents");
        if (e > 0) r *= pow(cyclotomic(d), static_cast<unsigned>(e));
    }
    return r;
}

QQuotient delannoy_weight_q_quotient(int n, int k, int m) {
    QQuotient r;
    r.numerator = LaurentQ::one_minus_q_pow(n - k) * LaurentQ::one_minus_q_pow(k + 1) * q_binomial(n + k, 2 * k) *
                  q_binomial(m + 1, k + 1) * q_binomial(m + k, k + 1);
    r.denominator = LaurentQ::one_minus_q_pow(1) * LaurentQ::one_minus_q_pow(n);
    return r;
}

QQuotient schmidt_weight_q_quotient(int n, int k, int m, int j) {
    QQuotient r;
    r.numerator = LaurentQ::one_minus_q_pow(1) * q_binomial(n - 1, k) * q_binomial(n + k, k) *
                  q_binomial(2 * k, j + k) * q_binomial(m + k, 2 * k) * q_binomial(m, j) * q_binomial(m + j, j);
    r.denominator = LaurentQ::one_minus_q_pow(k + 1);
    return r;
}

CycloProfile exponent_profile_A(int n, int k, int m) {
    CycloProfile prof;
    // The product bound max(m+k, n+k) alone misses Phi_{m+1} from
    // [m+1 choose 1] when k = 0 and n <= m; the floor formula holds for all d.
    prof.d_max = std::max({m + k, n + k, m + 1});
    auto fl = [](int a, int d) { return floor_div_int(a, d); };
    for (int d = 2; d <= prof.d_max; ++d) {
        int e = chi_divides(d, n - k) + chi_divides(d, k + 1) - chi_divides(d, n);
        e += fl(n + k, d) + fl(m + 1, d) + fl(m + k, d);
        e -= fl(n - k, d) + fl(2 * k, d) + fl(m - k, d) + fl(m - 1, d) + 2 * fl(k + 1, d);
        prof.exponents[d] = e;
    }
    return prof;
}

CycloProfile exponent_profile_B(int n, int k, int m, int j) {
    CycloProfile prof;
    prof.d_max = std::max({n + k, m + k, m + j});
    auto fl = [](int a, int d) { return floor_div_int(a, d); };
    for (int d = 2; d <= prof.d_max; ++d) {
        int e = -chi_divides(d, k + 1);
        e += fl(n - 1, d) + fl(n + k, d) + fl(m + k, d) + fl(m + j, d);
        e -= fl(n, d) + fl(n - k - 1, d) + fl(j + k, d) + fl(k - j, d) + fl(m - k, d) + 2 * fl(k, d) +
             fl(m - j, d) + 2 * fl(j, d);
        prof.exponents[d] = e;
    }
    return prof;
}

CycloProfile valuation_profile(const LaurentQ& p, int d_max) {
    CycloProfile prof;
    prof.d_max = d_max;
    for (int d = 2; d <= d_max; ++d) prof.exponents[d] = cyclotomic_valuation(p, d);
    return prof;
}

QDelannoyPair q_delannoy(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("q_delannoy needs m, n >= 0");
    QDelannoyPair pair{m, n, {}, {}};
    for (int k = 0; k <= n; ++k) {
        LaurentQ core = q_binomial(n, k) * q_binomial(n + m - k, n);
        pair.dq += core.shifted(k * (k - 1) / 2);
        pair.dqinv += core.shifted(k * (k + 1) / 2);
    }
    pair.dqinv = pair.dqinv.shifted(-static_cast<std::int64_t>(m) * n);
    return pair;
}

} // namespace dlab
