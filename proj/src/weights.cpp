#include "segstat/weights.hpp"

#include <stdexcept>
#include <utility>

namespace segstat {

WeightSpec::WeightSpec(std::string name, Rule t_rule, Rule s_rule)
    : name_(std::move(name)), t_rule_(std::move(t_rule)), s_rule_(std::move(s_rule)) {}

WeightSpec WeightSpec::symbolic() {
  const Rule sym = [](long) -> WeightValue { return std::nullopt; };
  return {"symbolic", sym, sym};
}

WeightSpec WeightSpec::all_ones() {
  const Rule one = [](long) -> WeightValue { return Rational(1); };
  return {"all-ones", one, one};
}

WeightValue WeightSpec::value(Family f, long index) const {
  if (index < 1) throw std::invalid_argument("weight index must be >= 1");
  return f == Family::t ? t_rule_(index) : s_rule_(index);
}

Polynomial WeightSpec::weight(Family f, long index) const {
  const WeightValue v = value(f, index);
  if (v) return Polynomial(*v);
  return Polynomial::variable(f, static_cast<std::uint32_t>(index));
}

WeightSpec WeightSpec::with(Family f, Rule rule, std::string name) const {
  WeightSpec r = *this;
  (f == Family::t ? r.t_rule_ : r.s_rule_) = std::move(rule);
  r.name_ = std::move(name);
  return r;
}

namespace {

template <typename OnSymbolic>
Polynomial substitute_impl(const Polynomial& p, const WeightSpec& w, OnSymbolic on_symbolic) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Rational coeff = c;
    std::vector<Monomial::Factor> kept;
    for (const auto& [v, e] : m.factors()) {
      const WeightValue val = w.value(v.family, v.index);
      if (val) {
        coeff *= rational_pow(*val, e);
      } else {
        on_symbolic(v);
        kept.emplace_back(v, e);
      }
    }
    out.add_term(Monomial::from_factors(std::move(kept)), coeff);
  }
  return out;
}

}  // namespace

Rational specialize(const Polynomial& p, const WeightSpec& w) {
  const Polynomial r = substitute_impl(p, w, [&](const Variable& v) {
    throw std::invalid_argument("weight " + v.name() + " has no numeric value under '" + w.name() + "'");
  });
  return r.constant_term();
}

Polynomial substitute(const Polynomial& p, const WeightSpec& w) {
  return substitute_impl(p, w, [](const Variable&) {});
}

Series t_series(const WeightSpec& w, Truncation order) {
  Series s = Series::constant(Polynomial(1), order);
  for (int i = 1; i <= order.x; ++i) s.set(i, 0, 0, w.t(i));
  return s;
}

Series s_series(const WeightSpec& w, Truncation order) {
  Series s = Series::constant(Polynomial(1), order);
  for (int j = 1; j <= order.y; ++j) s.set(0, j, 0, w.s(j));
  return s;
}

}  // namespace segstat
