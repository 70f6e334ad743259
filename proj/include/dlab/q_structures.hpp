#ifndef DLAB_Q_STRUCTURES_HPP
#define DLAB_Q_STRUCTURES_HPP

#include "dlab/laurent.hpp"

#include <map>

namespace dlab {

/// Phi_d(q), by exact division of q^d - 1 by the lower cyclotomic factors.
/// Memoized in a process-wide cache; safe to call concurrently.
LaurentQ cyclotomic(int d);

/// Gaussian binomial [n choose k]_q; zero when k < 0, k > n or n < 0.
/// Built by the q-Pascal rule over a shared memo table.
LaurentQ q_binomial(int n, int k);

/// [n] = 1 + q + ... + q^(n-1), zero for n <= 0.
LaurentQ q_integer(int n);

/// Multiplicity of Phi_d in a nonzero polynomial, found by repeated exact
/// division. Independent of the floor-sum formulas below.
int cyclotomic_valuation(const LaurentQ& p, int d);

/// Exponents e_d of a product of cyclotomic polynomials, d in [2, d_max].
struct CycloProfile {
    int d_max = 1;
    std::map<int, int> exponents;

    bool all_nonnegative() const;
    /// prod_d Phi_d^e_d; requires every exponent to be non-negative.
    LaurentQ reconstruct() const;
    friend bool operator==(const CycloProfile&, const CycloProfile&) = default;
};

/// A q-expression held as numerator and denominator before division.
struct QQuotient {
    LaurentQ numerator;
    LaurentQ denominator;

    /// Throws NotDivisible when the quotient is not a Laurent polynomial.
    LaurentQ divide() const { return laurent_exact_div(numerator, denominator); }
};

/// (1-q^(n-k))(1-q^(k+1)) / ((1-q)(1-q^n)) [n+k, 2k] [m+1, k+1] [m+k, k+1]
QQuotient delannoy_weight_q_quotient(int n, int k, int m);

/// (1-q)/(1-q^(k+1)) [n-1, k] [n+k, k] [2k, j+k] [m+k, 2k] [m, j] [m+j, j]
QQuotient schmidt_weight_q_quotient(int n, int k, int m, int j);

/// Floor-sum exponents of the delannoy_weight_q_quotient factorization:
///   chi(d|n-k) + chi(d|k+1) - chi(d|n) + fl((n+k)/d) + fl((m+1)/d)
///   + fl((m+k)/d) - fl((n-k)/d) - fl(2k/d) - fl((m-k)/d) - fl((m-1)/d)
///   - 2 fl((k+1)/d)
/// for d in [2, max(m+k, n+k, m+1)].
CycloProfile exponent_profile_A(int n, int k, int m);

/// Floor-sum exponents of the schmidt_weight_q_quotient factorization:
///   -chi(d|k+1) + fl((n-1)/d) + fl((n+k)/d) + fl((m+k)/d) + fl((m+j)/d)
///   - fl(n/d) - fl((n-k-1)/d) - fl((j+k)/d) - fl((k-j)/d) - fl((m-k)/d)
///   - 2 fl(k/d) - fl((m-j)/d) - 2 fl(j/d)
/// for d in [2, max(n+k, m+k, m+j)]. Meaningful for 0 <= j <= k.
CycloProfile exponent_profile_B(int n, int k, int m, int j);

/// Profile of a nonzero polynomial by brute-force valuation for d in [2, d_max].
CycloProfile valuation_profile(const LaurentQ& p, int d_max);

/// D_q(m, n) and D_{q^-1}(m, n).
struct QDelannoyPair {
    int m = 0;
    int n = 0;
    LaurentQ dq;
    LaurentQ dqinv;
};

/// dq = sum_k q^C(k,2) [n,k] [n+m-k, n];
/// dqinv = q^(-mn) sum_k q^C(k+1,2) [n,k] [n+m-k, n].
QDelannoyPair q_delannoy(int m, int n);

} // namespace dlab

#endif // DLAB_Q_STRUCTURES_HPP
