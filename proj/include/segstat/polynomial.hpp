#ifndef SEGSTAT_POLYNOMIAL_HPP
#define SEGSTAT_POLYNOMIAL_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "segstat/core.hpp"

namespace segstat {

/// Weight variables come in two indexed families: t_i (u-segments) and s_i (h-segments).
enum class Family : std::uint8_t { t = 0, s = 1 };

struct Variable {
  Family family;
  std::uint32_t index;  // >= 1

  auto operator<=>(const Variable&) const = default;
  std::string name() const;
};

/// Product of variables with positive exponents, kept sorted by (family, index).
class Monomial {
 public:
  using Factor = std::pair<Variable, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(Variable v, std::uint32_t exponent = 1);
  /// Factors may be unsorted and may repeat; zero exponents are dropped.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t exponent(Variable v) const;

  /// sum over factors of index * exponent, restricted to one family.
  std::uint64_t weighted_degree(Family f) const;
  std::uint64_t degree(Family f) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
};

/// Multivariate polynomial over Rational in the t/s weight variables.
/// Zero coefficients are never stored, so equality is structural.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(const Integer& c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial variable(Family f, std::uint32_t index);
  static Polynomial term(const Rational& c, Monomial m);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  Rational constant_term() const;
  std::size_t size() const { return terms_.size(); }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  Polynomial& operator*=(const Polynomial& o);
  void add_term(const Monomial& m, const Rational& c);
  /// this += a * b without materializing the product.
  void add_product(const Polynomial& a, const Polynomial& b);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Terms terms_;
};

/// Canonical text form: terms joined by " + ", each "c" or "c*v1^e1*v2" (exponent 1 omitted);
/// coefficients as "p" or "p/q"; zero prints as "0".
std::string to_string(const Polynomial& p);

/// Inverse of to_string; throws std::invalid_argument on malformed input.
Polynomial parse_polynomial(std::string_view text);

}  // namespace segstat

#endif  // SEGSTAT_POLYNOMIAL_HPP
