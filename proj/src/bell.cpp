#include "segstat/bell.hpp"

#include <stdexcept>
#include <string>

namespace segstat {

WeightVector WeightVector::symbolic(Family f) {
  return WeightVector([f](long i) { return Polynomial::variable(f, static_cast<std::uint32_t>(i)); });
}

WeightVector WeightVector::constant(const Rational& c) {
  return WeightVector([c](long) { return Polynomial(c); });
}

WeightVector WeightVector::factorial_scaled(const WeightSpec& w, Family f) {
  return WeightVector([w, f](long i) { return w.weight(f, i) * Rational(factorial(i)); });
}

WeightVector WeightVector::from_series(const Series& f) {
  if (!f.is_univariate()) throw std::invalid_argument("WeightVector::from_series needs a univariate series");
  return WeightVector([f](long i) { return f.coeff(static_cast<int>(i)) * Rational(factorial(i)); });
}

WeightVector WeightVector::from_values(std::vector<Polynomial> values) {
  return WeightVector([v = std::move(values)](long i) {
    return i <= static_cast<long>(v.size()) ? v[i - 1] : Polynomial{};
  });
}

WeightVector WeightVector::scaled(const Rational& q) const {
  return WeightVector([e = entry_, q](long i) { return e(i) * q; });
}

BellTable::BellTable(long n_max, const WeightVector& x) : n_max_(n_max) {
  if (n_max < 0) throw std::invalid_argument("BellTable: negative size");
  std::vector<Polynomial> xs(n_max + 1);
  for (long i = 1; i <= n_max; ++i) xs[i] = x(i);
  rows_.resize(n_max + 1);
  for (long n = 0; n <= n_max; ++n) rows_[n].resize(n + 1);
  rows_[0][0] = Polynomial(1);
  for (long n = 1; n <= n_max; ++n) {
    for (long r = 1; r <= n; ++r) {
      Polynomial acc;
      for (long i = 1; i <= n - r + 1; ++i) {
        const Polynomial& prev = rows_[n - i].size() > static_cast<std::size_t>(r - 1) ? rows_[n - i][r - 1] : zero_;
        if (prev.is_zero() || xs[i].is_zero()) continue;
        acc.add_product(xs[i] * Rational(gen_binomial(n - 1, i - 1)), prev);
      }
      rows_[n][r] = std::move(acc);
    }
  }
}

const Polynomial& BellTable::operator()(long n, long r) const {
  if (n < 0 || n > n_max_) throw std::out_of_range("BellTable: n = " + std::to_string(n) + " outside table");
  if (r < 0 || r > n) return zero_;
  return rows_[n][r];
}

Polynomial partial_bell(long n, long r, const WeightVector& x) {
  if (n < 0 || r < 0) return {};
  if (r > n) return {};
  return BellTable(n, x)(n, r);
}

namespace {

// Visit every (r_1..r_n) with sum r_i = parts, sum i r_i = total, choosing r_i from i = n down.
void partition_sum(long i, long remaining_total, long remaining_parts, const std::vector<Polynomial>& xs,
                   const Rational& coeff, const Polynomial& acc, Polynomial& out) {
  if (i == 0) {
    if (remaining_total == 0 && remaining_parts == 0) out.add_product(acc, Polynomial(coeff));
    return;
  }
  const Rational inv_if(1, factorial(i));
  for (long ri = 0; ri * i <= remaining_total && ri <= remaining_parts; ++ri) {
    Rational c = coeff / Rational(factorial(ri));
    Polynomial term = acc;
    if (ri > 0) {
      c *= rational_pow(inv_if, ri);
      term = term * xs[i].pow(static_cast<unsigned>(ri));
    }
    partition_sum(i - 1, remaining_total - ri * i, remaining_parts - ri, xs, c, term, out);
  }
}

}  // namespace

Polynomial partial_bell_oracle(long n, long r, const WeightVector& x) {
  if (n > kPartialBellOracleBound) throw BoundExceeded("partial_bell_oracle: n > 30");
  if (n < 0 || r < 0) return {};
  std::vector<Polynomial> xs(n + 1);
  for (long i = 1; i <= n; ++i) xs[i] = x(i);
  Polynomial out;
  partition_sum(n, n, r, xs, Rational(factorial(n)), Polynomial(1), out);
  return out;
}

Polynomial potential(long n, long lambda, const BellTable& bell) {
  if (n < 0) throw std::invalid_argument("potential: negative n");
  if (n == 0) return Polynomial(1);
  Polynomial acc;
  for (long k = 1; k <= n; ++k) {
    const Integer c = gen_binomial(lambda, k) * factorial(k);
    if (c == 0) continue;
    acc += bell(n, k) * Rational(c);
  }
  return acc;
}

Polynomial potential(long n, long lambda, const WeightVector& a) {
  if (n < 0) throw std::invalid_argument("potential: negative n");
  return potential(n, lambda, BellTable(n, a));
}

Polynomial power_coeff(const Series& f, long m, long i) {
  if (!f.is_univariate()) throw std::invalid_argument("power_coeff needs a univariate series");
  if (m < 0 || m > f.nx()) throw std::out_of_range("power_coeff: m outside truncation");
  if (f.coeff(0) != Polynomial(1)) throw std::domain_error("power_coeff needs constant term 1");
  const Series p = f.truncated(Truncation{static_cast<int>(m), 0, 0}).pow(i);
  return p.coeff(static_cast<int>(m)) * Rational(factorial(m));
}

Integer stirling2(long n, long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("stirling2: negative argument");
  return to_integer(partial_bell(n, k, WeightVector::constant(1)).constant_term());
}

BinomialSequence BinomialSequence::abel(const Rational& q) {
  BinomialSequence s(Kind::abel);
  s.q_ = q;
  return s;
}

BinomialSequence BinomialSequence::generic(std::vector<Rational> lambda) {
  if (lambda.empty() || lambda[0] == 0) throw std::invalid_argument("generic binomial sequence needs lambda_1 != 0");
  BinomialSequence s(Kind::generic);
  s.lambda_ = std::move(lambda);
  return s;
}

std::string BinomialSequence::name() const {
  switch (kind_) {
    case Kind::power: return "power";
    case Kind::factorial: return "factorial";
    case Kind::abel: return "abel(q=" + q_.get_str() + ")";
    case Kind::exponential: return "exponential";
    case Kind::generic: return "generic";
  }
  return "?";
}

Rational BinomialSequence::operator()(long n, const Rational& x) const {
  if (n < 0) throw std::invalid_argument("binomial sequence index must be >= 0");
  if (n == 0) return 1;
  switch (kind_) {
    case Kind::power:
      return rational_pow(x, n);
    case Kind::factorial: {
      Rational r = 1;
      for (long i = 0; i < n; ++i) r *= x + i;
      return r;
    }
    case Kind::abel:
      return x * rational_pow(x - q_ * n, n - 1);
    case Kind::exponential: {
      const BellTable table(n, WeightVector::constant(1));
      Rational r = 0;
      for (long i = 0; i <= n; ++i) r += table(n, i).constant_term() * rational_pow(x, i);
      return r;
    }
    case Kind::generic: {
      // phi_n(x) = sum_k x^k B_{n,k}(1! lambda_1, 2! lambda_2, ...)
      std::vector<Polynomial> args;
      for (std::size_t i = 0; i < lambda_.size(); ++i) args.emplace_back(lambda_[i] * Rational(segstat::factorial(static_cast<long>(i) + 1)));
      const BellTable table(n, WeightVector::from_values(std::move(args)));
      Rational r = 0;
      for (long k = 1; k <= n; ++k) r += table(n, k).constant_term() * rational_pow(x, k);
      return r;
    }
  }
  return 0;
}

Rational binseq_value(const BinomialSequence& seq, long n, const Rational& x) { return seq(n, x); }

}  // namespace segstat
