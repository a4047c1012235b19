#ifndef SEGSTAT_BELL_HPP
#define SEGSTAT_BELL_HPP

#include <functional>
#include <optional>
#include <vector>

#include "segstat/polynomial.hpp"
#include "segstat/series.hpp"
#include "segstat/weights.hpp"

namespace segstat {

/// Arguments x_1, x_2, ... of a partial Bell or potential polynomial.
///
/// Every closed form in this library passes the "k! times coefficient" vector
/// (1!t_1, 2!t_2, ...) of a series 1 + t_1 x + t_2 x^2 + ...; use
/// factorial_scaled() to build it from a WeightSpec.
class WeightVector {
 public:
  using Entry = std::function<Polynomial(long index)>;

  explicit WeightVector(Entry entry) : entry_(std::move(entry)) {}

  /// x_i = the symbolic variable t_i (or s_i).
  static WeightVector symbolic(Family f = Family::t);
  static WeightVector constant(const Rational& c);
  /// x_i = i! * w(f, i).
  static WeightVector factorial_scaled(const WeightSpec& w, Family f);
  /// x_i = i! * [x^i] f, for a univariate series (entries beyond its truncation throw).
  static WeightVector from_series(const Series& f);
  /// x_i = values[i - 1]; entries past the end are zero.
  static WeightVector from_values(std::vector<Polynomial> values);

  Polynomial operator()(long index) const { return entry_(index); }

  /// Entry-wise product with a scalar.
  WeightVector scaled(const Rational& q) const;

 private:
  Entry entry_;
};

/// All B_{n,r}(x) for 0 <= r <= n <= n_max, via the triangular recurrence
/// B_{n,r} = sum_i binom(n-1, i-1) x_i B_{n-i,r-1}.
class BellTable {
 public:
  BellTable(long n_max, const WeightVector& x);

  long n_max() const { return n_max_; }
  /// Zero for r > n or r < 0; throws std::out_of_range for n > n_max.
  const Polynomial& operator()(long n, long r) const;

 private:
  long n_max_;
  std::vector<std::vector<Polynomial>> rows_;
  Polynomial zero_;
};

Polynomial partial_bell(long n, long r, const WeightVector& x);

/// Literal partition sum over r_1 + ... + r_n = r, r_1 + 2 r_2 + ... + n r_n = n.
/// Independent of the recurrence; exponential time, n <= 30.
Polynomial partial_bell_oracle(long n, long r, const WeightVector& x);
inline constexpr long kPartialBellOracleBound = 30;

/// Potential polynomial P_n^{(lambda)}(a) = n! [x^n] (1 + sum_k a_k x^k / k!)^lambda,
/// assembled as sum_{k=1..n} binom(lambda, k) k! B_{n,k}(a). Integer lambda only.
Polynomial potential(long n, long lambda, const WeightVector& a);

/// Same, reusing a precomputed Bell table of the argument vector.
Polynomial potential(long n, long lambda, const BellTable& bell);

/// m! [x^m] f(x)^i for a univariate series with constant term 1.
Polynomial power_coeff(const Series& f, long m, long i);

/// Stirling number of the second kind, as B_{n,k}(1, 1, 1, ...).
Integer stirling2(long n, long k);

/// Polynomial families phi_n with phi_n(x + y) = sum_i binom(n, i) phi_i(x) phi_{n-i}(y).
class BinomialSequence {
 public:
  enum class Kind { power, factorial, abel, exponential, generic };

  static BinomialSequence power() { return BinomialSequence(Kind::power); }
  /// Rising factorial x(x+1)...(x+n-1).
  static BinomialSequence factorial() { return BinomialSequence(Kind::factorial); }
  /// x(x - q n)^{n-1}.
  static BinomialSequence abel(const Rational& q);
  /// sum_i S(n, i) x^i.
  static BinomialSequence exponential() { return BinomialSequence(Kind::exponential); }
  /// sum_n phi_n(x) u^n / n! = exp(x lambda(u)); lambda given by its coefficients
  /// lambda_1, lambda_2, ... (lambda_1 != 0).
  static BinomialSequence generic(std::vector<Rational> lambda);

  Kind kind() const { return kind_; }
  const Rational& q() const { return q_; }
  std::string name() const;

  Rational operator()(long n, const Rational& x) const;

 private:
  explicit BinomialSequence(Kind k) : kind_(k) {}

  Kind kind_;
  Rational q_;
  std::vector<Rational> lambda_;
};

Rational binseq_value(const BinomialSequence& seq, long n, const Rational& x);

}  // namespace segstat

#endif  // SEGSTAT_BELL_HPP
