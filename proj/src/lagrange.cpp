#include "segstat/lagrange.hpp"

#include <stdexcept>

#include "segstat/bell.hpp"

namespace segstat {

namespace {

// x/f(x) for f with f_0 = 0 and an invertible rational f_1.
Series x_over(const Series& f, int n) {
  if (!f.is_univariate()) throw std::invalid_argument("Lagrange inversion needs a univariate series");
  if (f.nx() < n) throw std::out_of_range("series truncated below the requested order");
  if (!f.coeff(0).is_zero()) throw std::domain_error("Lagrange inversion needs f(0) = 0");
  const Polynomial& f1 = f.coeff(1);
  if (f1.is_zero() || !f1.is_constant())
    throw std::domain_error("Lagrange inversion needs a nonzero rational linear coefficient");
  Series h(n - 1);
  for (int i = 0; i < n; ++i) h.set(i, f.coeff(i + 1));
  return h.reciprocal();
}

Series shift_x(const Series& s) {
  Series r(s.order());
  for (int i = 0; i < s.nx(); ++i)
    for (int j = 0; j <= s.ny(); ++j)
      for (int l = 0; l <= s.nq(); ++l) r.set(i + 1, j, l, s.coeff(i, j, l));
  return r;
}

}  // namespace

Series reversion(const Series& f, int n) {
  if (n < 1) throw std::invalid_argument("reversion order must be >= 1");
  const Series base = x_over(f, n);
  Series g(n);
  Series power = Series::constant(Polynomial(1), base.order());
  for (int k = 1; k <= n; ++k) {
    power = power * base;
    g.set(k, power.coeff(k - 1) * Rational(1, k));
  }
  return g;
}

Polynomial lagrange_coeff(const Series& phi, const Series& f, int n) {
  if (n < 1) throw std::invalid_argument("lagrange_coeff needs n >= 1");
  if (!phi.is_univariate()) throw std::invalid_argument("lagrange_coeff needs a univariate phi");
  if (phi.nx() < n) throw std::out_of_range("phi truncated below the requested order");
  const Series base = x_over(f, n);
  const Series dphi = phi.truncated(Truncation{n, 0, 0}).derivative_x();
  const Series prod = dphi * base.pow(n);
  return prod.coeff(n - 1) * Rational(1, n);
}

Series motzkin_gf(const WeightSpec& w, int nx, int ny) {
  const Truncation order{nx, ny, 0};
  const Series one = Series::constant(Polynomial(1), order);
  const Series ratio = one - s_series(w, order).reciprocal();  // (S - 1)/S
  std::vector<Polynomial> t(nx + 1);
  for (int i = 1; i <= nx; ++i) t[i] = w.t(i);

  Series m = one;
  const int max_iterations = nx + ny + 2;
  for (int it = 0; it < max_iterations; ++it) {
    const Series z = shift_x(m);
    Series tz = one;
    Series zpow = one;
    for (int i = 1; i <= nx; ++i) {
      zpow = zpow * z;
      if (!t[i].is_zero()) tz += zpow.scaled(t[i]);
    }
    Series next = tz * (one - ratio * tz).reciprocal();
    if (next == m) return m;
    m = std::move(next);
  }
  throw std::logic_error("motzkin_gf: fixed-point iteration did not stabilize");
}

Series compositions_gf(const WeightSpec& w, int nx, int ny, int nq) {
  const Truncation order{nx, ny, nq};
  const Series one = Series::constant(Polynomial(1), order);
  Series sqy = one;
  for (int i = 1; i <= ny && i <= nq; ++i) sqy.set(0, i, i, w.s(i));
  const Series q = Series::monomial(Polynomial(1), 0, 0, 1, order);
  const Series t_minus_one = t_series(w, order) - one;
  return sqy * (one - q * sqy * t_minus_one).reciprocal();
}

Series comp_gf_fixed_parts(const WeightSpec& w, int j, int nx, int ny) {
  if (j < 0) throw std::invalid_argument("number of parts must be >= 0");
  const Truncation order{nx, ny, 0};
  const Series one = Series::constant(Polynomial(1), order);
  const Series t_minus_one = t_series(w, order) - one;
  const BellTable s_bell(j, WeightVector::factorial_scaled(w, Family::s));
  Series result(order);
  Series tpow = one;
  for (int i = 0; i <= j; ++i) {
    if (i > 0) tpow = tpow * t_minus_one;
    const int zeros = j - i;
    if (zeros > ny) continue;
    const Polynomial c = potential(zeros, i + 1, s_bell) * Rational(1, factorial(zeros));
    result += (tpow * Series::monomial(c, 0, zeros, 0, order));
  }
  return result;
}

Series bipartite_gf(const WeightSpec& w, int p, int j, int nx) {
  if (p < 0 || j < 0) throw std::invalid_argument("bipartite_gf needs p, j >= 0");
  const Truncation order{nx, 0, 0};
  const Series one = Series::constant(Polynomial(1), order);
  const Series t_minus_one = t_series(w, order) - one;
  Series row = one;
  Series tpow = one;
  for (int i = 1; i <= j; ++i) {
    tpow = tpow * t_minus_one;
    row += tpow;
  }
  return row.pow(p);
}

Series matrix_gf(const WeightSpec& w, int p, int j, int nx, int ny) {
  if (p < 0) throw std::invalid_argument("matrix_gf needs p >= 0");
  return comp_gf_fixed_parts(w, j, nx, ny).pow(p);
}

}  // namespace segstat
