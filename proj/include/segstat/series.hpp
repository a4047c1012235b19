#ifndef SEGSTAT_SERIES_HPP
#define SEGSTAT_SERIES_HPP

#include <vector>

#include "segstat/polynomial.hpp"

namespace segstat {

/// Truncation orders of a series in the grading variables x, y and the
/// part-count marker q. A coefficient (i, j, l) is stored iff i <= x, j <= y, l <= q.
struct Truncation {
  int x = 0;
  int y = 0;
  int q = 0;

  friend bool operator==(const Truncation&, const Truncation&) = default;
};

Truncation min(const Truncation& a, const Truncation& b);

/// Truncated formal power series in x, y, q with Polynomial coefficients.
/// Orders are explicit; reads beyond them throw std::out_of_range.
class Series {
 public:
  explicit Series(Truncation order);
  explicit Series(int nx, int ny = 0, int nq = 0) : Series(Truncation{nx, ny, nq}) {}

  static Series constant(const Polynomial& c, Truncation order);
  /// c * x^i y^j q^l (zero if it falls outside the truncation).
  static Series monomial(const Polynomial& c, int i, int j, int l, Truncation order);
  /// Univariate series from coefficients c[0], c[1], ... (entries beyond nx ignored, missing are 0).
  static Series from_coefficients(const std::vector<Polynomial>& c, int nx);

  const Truncation& order() const { return order_; }
  int nx() const { return order_.x; }
  int ny() const { return order_.y; }
  int nq() const { return order_.q; }
  bool is_univariate() const { return order_.y == 0 && order_.q == 0; }

  const Polynomial& coeff(int i, int j = 0, int l = 0) const;
  void set(int i, int j, int l, Polynomial value);
  void set(int i, Polynomial value) { set(i, 0, 0, std::move(value)); }

  Series truncated(Truncation order) const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  Series scaled(const Polynomial& c) const;
  Series operator-() const;

  /// f^e. Negative e requires the constant term to be a nonzero rational; throws std::domain_error otherwise.
  Series pow(long e) const;
  Series reciprocal() const;

  /// d/dx.  The x^{nx} coefficient of the result is not determined and the order drops by one in x.
  Series derivative_x() const;
  /// f(g) for univariate f and g with g(0) = 0.
  Series compose(const Series& g) const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::size_t index(int i, int j, int l) const {
    return (static_cast<std::size_t>(i) * (order_.y + 1) + j) * (order_.q + 1) + l;
  }

  Truncation order_;
  std::vector<Polynomial> coeffs_;
};

}  // namespace segstat

#endif  // SEGSTAT_SERIES_HPP
