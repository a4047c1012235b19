#ifndef SEGSTAT_LAGRANGE_HPP
#define SEGSTAT_LAGRANGE_HPP

#include "segstat/series.hpp"
#include "segstat/weights.hpp"

namespace segstat {

/// Compositional inverse g of f (f(g(x)) = x mod x^{n+1}) by coefficient
/// extraction [x^k]g = (1/k)[x^{k-1}](x/f(x))^k.
///
/// f must be univariate, truncated at order >= n, with f_0 = 0 and f_1 a
/// nonzero rational. Symbolic higher coefficients are fine; a symbolic f_1 is
/// rejected with std::domain_error.
Series reversion(const Series& f, int n);

/// [x^n] phi(g(x)) for g the inverse of f, as (1/n)[x^{n-1}] phi'(x) (x/f(x))^n. n >= 1.
Polynomial lagrange_coeff(const Series& phi, const Series& f, int n);

/// Bivariate generating series M(x, y) of weighted Motzkin paths: the unique
/// solution of M = T(z) / (1 - (S(y)-1)/S(y) T(z)), z = x M, found by
/// fixed-point iteration from M = 1. [x^m y^k] is the weighted sum over paths
/// with m up-steps and k horizontal steps.
Series motzkin_gf(const WeightSpec& w, int nx, int ny);

/// C(x, y, q) = S(qy) / (1 + q S(qy) - q S(qy) T(x)): weighted compositions by
/// sum (x), number of zero parts (y) and number of parts (q).
Series compositions_gf(const WeightSpec& w, int nx, int ny, int nq);

/// The q^j slice of compositions_gf, built from potential polynomials:
/// sum_i y^{j-i} P_{j-i}^{(i+1)}(1!s_1, ...) / (j-i)! (T(x) - 1)^i.
Series comp_gf_fixed_parts(const WeightSpec& w, int j, int nx, int ny);

/// (sum_{i=0..j} (T(x) - 1)^i)^p: weighted p x j bipartite matrix compositions.
Series bipartite_gf(const WeightSpec& w, int p, int j, int nx);

/// comp_gf_fixed_parts(j)^p: weighted p x j matrix compositions (any nonnegative entries).
Series matrix_gf(const WeightSpec& w, int p, int j, int nx, int ny);

}  // namespace segstat

#endif  // SEGSTAT_LAGRANGE_HPP
