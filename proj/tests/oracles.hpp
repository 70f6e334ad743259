#ifndef DLAB_TESTS_ORACLES_HPP
#define DLAB_TESTS_ORACLES_HPP

// Slow, independent reference computations. Nothing here calls the library
// routine it is used to check.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

// Lattice paths (0,0) -> (m,n) with E, N and NE steps, by dynamic programming.
inline mpz_class delannoy_paths(int m, int n) {
    std::vector<std::vector<mpz_class>> t(m + 1, std::vector<mpz_class>(n + 1, 0));
    for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= n; ++j) {
            if (i == 0 || j == 0) {
                t[i][j] = 1;
                continue;
            }
            t[i][j] = t[i - 1][j] + t[i][j - 1] + t[i - 1][j - 1];
        }
    }
    return t[m][n];
}

// Pascal triangle rows 0..n.
inline std::vector<std::vector<mpz_class>> pascal(int n) {
    std::vector<std::vector<mpz_class>> rows(n + 1);
    for (int i = 0; i <= n; ++i) {
        rows[i].assign(i + 1, 1);
        for (int k = 1; k < i; ++k) rows[i][k] = rows[i - 1][k - 1] + rows[i - 1][k];
    }
    return rows;
}

// Generalized binomial as falling factorial / k!, in GMP rationals.
inline mpz_class falling_binomial(long x, int k) {
    if (k < 0) return 0;
    mpq_class r = 1;
    for (int i = 0; i < k; ++i) r *= mpq_class(x - i, i + 1);
    r.canonicalize();
    return r.get_num();
}

// Laurent polynomials as exponent -> coefficient maps with schoolbook product.
using QMap = std::map<long, mpz_class>;

inline QMap qmul(const QMap& a, const QMap& b) {
    QMap r;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) r[ea + eb] += ca * cb;
    }
    for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

// Long division from the lowest term; the division must be exact and the
// lowest coefficient of den must be +-1.
inline QMap qdiv_exact(QMap num, const QMap& den) {
    QMap out;
    const long dlo = den.begin()->first;
    const mpz_class lead = den.begin()->second;
    while (!num.empty()) {
        auto [e, c] = *num.begin();
        mpz_class q = c / lead;
        out[e - dlo] = q;
        for (const auto& [ed, cd] : den) {
            num[e - dlo + ed] -= q * cd;
            if (num[e - dlo + ed] == 0) num.erase(e - dlo + ed);
        }
    }
    return out;
}

// Gaussian binomial from the product formula prod (1 - q^{n-k+i}) / (1 - q^i).
inline QMap q_binomial_product(int n, int k) {
    if (k < 0 || k > n) return {};
    QMap num{{0, 1}}, den{{0, 1}};
    for (int i = 1; i <= k; ++i) {
        num = qmul(num, QMap{{0, 1}, {n - k + i, -1}});
        den = qmul(den, QMap{{0, 1}, {i, -1}});
    }
    return qdiv_exact(num, den);
}

// D_q(m,n) = sum_k q^C(k,2) [n,k][m+n-k,n] with product-formula binomials.
inline QMap q_delannoy_sum(int m, int n) {
    QMap r;
    for (int k = 0; k <= n; ++k) {
        QMap t = qmul(q_binomial_product(n, k), q_binomial_product(n + m - k, n));
        for (const auto& [e, c] : t) r[e + k * (k - 1) / 2] += c;
    }
    return r;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20260417);
    return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

} // namespace oracle

#endif // DLAB_TESTS_ORACLES_HPP
