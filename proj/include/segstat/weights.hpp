#ifndef SEGSTAT_WEIGHTS_HPP
#define SEGSTAT_WEIGHTS_HPP

#include <functional>
#include <optional>
#include <string>

#include "segstat/polynomial.hpp"
#include "segstat/series.hpp"

namespace segstat {

/// A numeric value, or nullopt to keep the weight as its symbolic variable.
using WeightValue = std::optional<Rational>;

/// Rule assigning a value to every t_i and s_i, i >= 1. A rule rather than a
/// table: T(x) and S(y) are infinite series truncated on demand.
class WeightSpec {
 public:
  using Rule = std::function<WeightValue(long index)>;

  WeightSpec(std::string name, Rule t_rule, Rule s_rule);

  static WeightSpec symbolic();
  static WeightSpec all_ones();

  const std::string& name() const { return name_; }
  WeightValue value(Family f, long index) const;
  bool is_numeric(Family f, long index) const { return value(f, index).has_value(); }

  /// The weight as a polynomial: the variable itself, or a constant.
  Polynomial weight(Family f, long index) const;
  Polynomial t(long index) const { return weight(Family::t, index); }
  Polynomial s(long index) const { return weight(Family::s, index); }

  /// Same rule with one family replaced.
  WeightSpec with(Family f, Rule rule, std::string name) const;

 private:
  std::string name_;
  Rule t_rule_;
  Rule s_rule_;
};

/// Exact evaluation; throws std::invalid_argument if a variable in p has no numeric value under w.
Rational specialize(const Polynomial& p, const WeightSpec& w);

/// Replace every variable that has a numeric value under w; symbolic ones stay.
Polynomial substitute(const Polynomial& p, const WeightSpec& w);

/// T(x) = 1 + sum_i t_i x^i, as a series in x truncated at nx.
Series t_series(const WeightSpec& w, Truncation order);
/// S(y) = 1 + sum_i s_i y^i, as a series in y truncated at order.y.
Series s_series(const WeightSpec& w, Truncation order);

}  // namespace segstat

#endif  // SEGSTAT_WEIGHTS_HPP
