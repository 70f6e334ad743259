#ifndef DLAB_SEQUENCES_HPP
#define DLAB_SEQUENCES_HPP

// The Delannoy-type polynomial families d_n(x), s_n(x), their squares and
// the weighted sums built from them, constructed exactly.

#include "dlab/multipoly.hpp"
#include "dlab/poly_x.hpp"

#include <string_view>
#include <utility>

namespace dlab {

/// d_n(x) = sum_k C(n,k) {x choose k} 2^k
PolyX d_poly(int n);
/// s_n(x) = sum_k C(n,k) {x choose k} {x+k choose k}
PolyX s_poly(int n);
/// s_n(x) = sum_k C(n,k) {x choose k} {x+n-k choose n}; built independently of s_poly.
PolyX s_alt_poly(int n);

/// sum_k C(n+k,2k) {x choose k} {x+k choose k} 4^k, which equals d_n(x)^2.
PolyX dn_square_rhs(int n);
/// sum_k C(n+k,2k) {x choose k}{x+k choose k} sum_j C(2k,j+k) {x choose j}{x+j choose j},
/// which equals s_n(x)^2.
PolyX sn_square_rhs(int n);

/// Integer-point values through generalized binomials, no polynomial expansion.
ExactInt d_value(int n, const ExactInt& x);
ExactInt s_value(int n, const ExactInt& x);

/// D(m, n) = sum_k C(n,k) C(m,k) 2^k.
ExactInt delannoy_number(int m, int n);

/// Schmidt polynomial S_n = sum_k C(n+k,2k) C(2k,k) x_k.
MultiPolyZ schmidt_poly(int n);

/// A_n(r) = sum_{j,k<=n} C(n,j) C(n,k) C(j+k,j) C(k,r-j) C(r,k)
ExactInt double_sum_A(int n, int r);
/// B_n(r) = sum_{j,k<=n} C(n+k,2k) C(2k,j+k) C(j+k,j) C(k,r-j) C(r,k)
ExactInt double_sum_B(int n, int r);

enum class SumKind {
    kDSquareScaled,          // x(x+1)/(2n^2) sum (2k+1) d_k^2
    kDPower,                 // 1/n sum (2k+1) d_k^(2m)
    kDPowerAlternating,      // 1/n sum (-1)^k (2k+1) d_k^(2m)
    kSSquareScaled,          // 1/n^2 sum (2k+1) s_k^2
    kSPower,                 // 1/n sum (2k+1) s_k^(2m)
    kSPowerAlternating,      // 1/n sum (-1)^k (2k+1) s_k^(2m)
    kMixedPower,             // 1/n sum (2k+1) d_k^m s_k^m
    kMixedPowerAlternating,  // 1/n sum (-1)^k (2k+1) d_k^m s_k^m
};

std::string_view to_string(SumKind kind);
/// The first two kinds do not depend on m.
bool uses_power(SumKind kind);

/// Sums run over k = 0 .. n-1. Requires n >= 1 and m >= 1.
struct SumSpec {
    SumKind kind = SumKind::kDPower;
    int n = 1;
    int m = 1;
};

/// Exact value at an integer x via the integer-point path.
ExactRat sum_expression_value(const SumSpec& spec, const ExactInt& x);
/// The same expression as an exact polynomial in x.
PolyX sum_expression_poly(const SumSpec& spec);

/// sum_{k<n} (n-k)(k+1)/(2n) C(n+k,2k) {x+1 choose k+1} {x+k choose k+1} 4^k,
/// a single-sum form of the kDSquareScaled expression.
PolyX d_square_scaled_single_sum(int n);
/// sum_{k<n} 1/(k+1) C(n-1,k) C(n+k,k) {x+k choose 2k} sum_{j<=k} C(2k,j+k) {x choose j}{x+j choose j},
/// a double-sum form of the kSSquareScaled expression.
PolyX s_square_scaled_double_sum(int n);

/// sum_{i=k}^{n-1} (2i+1) C(i+k, 2k)
ExactInt odd_weight_column_sum(int n, int k);
/// n(n-k)/(k+1) C(n+k, 2k), the closed form of odd_weight_column_sum.
ExactRat odd_weight_column_closed(int n, int k);

/// The two binomial quotients whose integrality underlies the sum identities:
///   first  = (n-k)(k+1)/n C(n+k,2k) C(m+1,k+1) C(m+k,k+1)
///   second = 1/(k+1) C(n-1,k) C(n+k,k) C(2k,j+k) C(m+k,2k) C(m,j) C(m+j,j)
std::pair<ExactRat, ExactRat> integrality_pair(int n, int m, int k, int j);

/// sum_{k<n} eps^k (2k+1) S_k^m
MultiPolyZ schmidt_power_sum(int n, int m, int eps);

} // namespace dlab

#endif // DLAB_SEQUENCES_HPP
