#include "segstat/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace segstat {

Truncation min(const Truncation& a, const Truncation& b) {
  return {std::min(a.x, b.x), std::min(a.y, b.y), std::min(a.q, b.q)};
}

Series::Series(Truncation order) : order_(order) {
  if (order.x < 0 || order.y < 0 || order.q < 0) throw std::invalid_argument("negative truncation order");
  coeffs_.resize(static_cast<std::size_t>(order.x + 1) * (order.y + 1) * (order.q + 1));
}

Series Series::constant(const Polynomial& c, Truncation order) {
  Series s(order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::monomial(const Polynomial& c, int i, int j, int l, Truncation order) {
  Series s(order);
  if (i <= order.x && j <= order.y && l <= order.q) s.set(i, j, l, c);
  return s;
}

Series Series::from_coefficients(const std::vector<Polynomial>& c, int nx) {
  Series s(nx);
  for (int i = 0; i <= nx && i < static_cast<int>(c.size()); ++i) s.coeffs_[i] = c[i];
  return s;
}

const Polynomial& Series::coeff(int i, int j, int l) const {
  if (i < 0 || j < 0 || l < 0 || i > order_.x || j > order_.y || l > order_.q) {
    throw std::out_of_range("coefficient (" + std::to_string(i) + "," + std::to_string(j) + "," +
                            std::to_string(l) + ") outside truncation (" + std::to_string(order_.x) + "," +
                            std::to_string(order_.y) + "," + std::to_string(order_.q) + ")");
  }
  return coeffs_[index(i, j, l)];
}

void Series::set(int i, int j, int l, Polynomial value) {
  (void)coeff(i, j, l);  // bounds check
  coeffs_[index(i, j, l)] = std::move(value);
}

Series Series::truncated(Truncation order) const {
  order = min(order, order_);
  Series r(order);
  for (int i = 0; i <= order.x; ++i)
    for (int j = 0; j <= order.y; ++j)
      for (int l = 0; l <= order.q; ++l) r.coeffs_[r.index(i, j, l)] = coeffs_[index(i, j, l)];
  return r;
}

Series& Series::operator+=(const Series& o) {
  *this = *this + o;
  return *this;
}

Series& Series::operator-=(const Series& o) {
  *this = *this - o;
  return *this;
}

Series operator+(const Series& a, const Series& b) {
  Series r = a.truncated(min(a.order_, b.order_));
  const Truncation& t = r.order_;
  for (int i = 0; i <= t.x; ++i)
    for (int j = 0; j <= t.y; ++j)
      for (int l = 0; l <= t.q; ++l) r.coeffs_[r.index(i, j, l)] += b.coeffs_[b.index(i, j, l)];
  return r;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series Series::operator-() const {
  Series r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Series Series::scaled(const Polynomial& c) const {
  Series r(order_);
  for (std::size_t n = 0; n < coeffs_.size(); ++n)
    if (!coeffs_[n].is_zero()) r.coeffs_[n] = coeffs_[n] * c;
  return r;
}

Series operator*(const Series& a, const Series& b) {
  const Truncation t = min(a.order_, b.order_);
  Series r(t);
  for (int i1 = 0; i1 <= t.x; ++i1)
    for (int j1 = 0; j1 <= t.y; ++j1)
      for (int l1 = 0; l1 <= t.q; ++l1) {
        const Polynomial& ca = a.coeffs_[a.index(i1, j1, l1)];
        if (ca.is_zero()) continue;
        for (int i2 = 0; i1 + i2 <= t.x; ++i2)
          for (int j2 = 0; j1 + j2 <= t.y; ++j2)
            for (int l2 = 0; l1 + l2 <= t.q; ++l2) {
              const Polynomial& cb = b.coeffs_[b.index(i2, j2, l2)];
              if (cb.is_zero()) continue;
              r.coeffs_[r.index(i1 + i2, j1 + j2, l1 + l2)].add_product(ca, cb);
            }
      }
  return r;
}

Series Series::reciprocal() const {
  const Polynomial& c0 = coeffs_[0];
  if (!c0.is_constant() || c0.is_zero())
    throw std::domain_error("series reciprocal needs a nonzero rational constant term");
  const Rational inv0 = 1 / c0.constant_term();
  Series r(order_);
  // Lexicographic order visits every componentwise-smaller index first.
  for (int i = 0; i <= order_.x; ++i)
    for (int j = 0; j <= order_.y; ++j)
      for (int l = 0; l <= order_.q; ++l) {
        if (i == 0 && j == 0 && l == 0) {
          r.coeffs_[0] = Polynomial(inv0);
          continue;
        }
        Polynomial acc;
        for (int a = 0; a <= i; ++a)
          for (int b = 0; b <= j; ++b)
            for (int c = 0; c <= l; ++c) {
              if (a == 0 && b == 0 && c == 0) continue;
              const Polynomial& fa = coeffs_[index(a, b, c)];
              if (fa.is_zero()) continue;
              acc.add_product(fa, r.coeffs_[index(i - a, j - b, l - c)]);
            }
        r.coeffs_[index(i, j, l)] = acc * (-inv0);
      }
  return r;
}

Series Series::pow(long e) const {
  if (e < 0) return reciprocal().pow(-e);
  Series result = constant(Polynomial(1), order_);
  Series base = *this;
  while (e > 0) {
    if (e & 1L) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Series Series::derivative_x() const {
  if (order_.x == 0) throw std::domain_error("derivative of a series truncated at x^0");
  Series r(Truncation{order_.x - 1, order_.y, order_.q});
  for (int i = 1; i <= order_.x; ++i)
    for (int j = 0; j <= order_.y; ++j)
      for (int l = 0; l <= order_.q; ++l) r.coeffs_[r.index(i - 1, j, l)] = coeffs_[index(i, j, l)] * Rational(i);
  return r;
}

Series Series::compose(const Series& g) const {
  if (!is_univariate() || !g.is_univariate()) throw std::invalid_argument("compose needs univariate series");
  if (!g.coeff(0).is_zero()) throw std::domain_error("compose needs g(0) = 0");
  const int n = std::min(order_.x, g.order_.x);
  // Horner: f0 + g*(f1 + g*(f2 + ...))
  Series acc = constant(coeffs_[index(n, 0, 0)], Truncation{n, 0, 0});
  for (int i = n - 1; i >= 0; --i) acc = constant(coeffs_[index(i, 0, 0)], acc.order_) + acc * g.truncated(acc.order_);
  return acc;
}

}  // namespace segstat
