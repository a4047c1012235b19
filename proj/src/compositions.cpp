#include "segstat/compositions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace segstat {

Composition::Composition(std::vector<long> parts) : parts_(std::move(parts)) {
  for (long p : parts_)
    if (p < 0) throw std::invalid_argument("composition parts must be >= 0");
}

long Composition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }
long Composition::zeros() const { return std::count(parts_.begin(), parts_.end(), 0L); }

namespace {

void compositions_rec(long remaining, long slots, std::vector<long>& cur,
                      const std::function<void(const Composition&)>& visit) {
  if (slots == 0) {
    if (remaining == 0) visit(Composition(cur));
    return;
  }
  if (slots == 1) {
    cur.push_back(remaining);
    visit(Composition(cur));
    cur.pop_back();
    return;
  }
  for (long a = 0; a <= remaining; ++a) {
    cur.push_back(a);
    compositions_rec(remaining - a, slots - 1, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

void for_each_composition(long m, long j, const std::function<void(const Composition&)>& visit, long bound) {
  if (m < 0 || j < 0) throw std::invalid_argument("composition sizes must be >= 0");
  if (m > bound || j > bound)
    throw BoundExceeded("composition size (" + std::to_string(m) + ", " + std::to_string(j) +
                        ") exceeds enumeration bound " + std::to_string(bound));
  std::vector<long> cur;
  compositions_rec(m, j, cur, visit);
}

std::vector<Composition> enumerate_compositions(long m, long j, long bound) {
  std::vector<Composition> out;
  for_each_composition(m, j, [&](const Composition& c) { out.push_back(c); }, bound);
  return out;
}

MotzkinPath composition_to_motzkin(const Composition& c) {
  std::vector<Step> steps;
  for (long p : c.parts()) {
    if (p == 0) {
      steps.push_back(Step::horizontal);
    } else {
      steps.insert(steps.end(), p, Step::up);
      steps.insert(steps.end(), p, Step::down);
    }
  }
  return MotzkinPath(std::move(steps));
}

Polynomial comp_weighted_bruteforce(long m, long k, long j, const WeightSpec& w, long bound) {
  Polynomial sum;
  for_each_composition(m, j, [&](const Composition& c) {
    if (c.zeros() == k) sum += profile_weight(segment_profile(composition_to_motzkin(c)), w);
  }, bound);
  return sum;
}

Polynomial comp_weighted_closed(long m, long k, long j, const WeightSpec& w) {
  if (m < 0 || k < 0 || j < 0) throw std::invalid_argument("comp_weighted_closed: negative size");
  if (j < k) return {};
  const long nonzero = j - k;
  const Polynomial s_part = potential(k, nonzero + 1, WeightVector::factorial_scaled(w, Family::s)) *
                            Rational(Integer(1), factorial(k));
  const Polynomial t_part = partial_bell(m, nonzero, WeightVector::factorial_scaled(w, Family::t)) *
                            make_rational(factorial(nonzero), factorial(m));
  return s_part * t_part;
}

Polynomial comp_weighted_by_hsegments(long m, long k, long j, long l, const WeightSpec& w) {
  if (m < 0 || k < 0 || j < 0 || l < 0) throw std::invalid_argument("comp_weighted_by_hsegments: negative size");
  if (j < k) return {};
  const long nonzero = j - k;
  const Integer c = gen_binomial(nonzero + 1, l) * factorial(nonzero) * factorial(l);
  if (c == 0) return {};
  const Polynomial bt = partial_bell(m, nonzero, WeightVector::factorial_scaled(w, Family::t));
  const Polynomial bs = partial_bell(k, l, WeightVector::factorial_scaled(w, Family::s));
  return bt * bs * make_rational(c, factorial(k) * factorial(m));
}

Integer comp_count_by_type(long j, const SegmentType& u_type, const SegmentType& h_type) {
  long r = 0, k = 0, l = 0;
  std::vector<long> u_parts, h_parts;
  for (const auto& [len, n] : u_type) {
    if (len < 1 || n < 0) throw std::invalid_argument("segment types need lengths >= 1 and counts >= 0");
    r += n;
    u_parts.push_back(n);
  }
  for (const auto& [len, n] : h_type) {
    if (len < 1 || n < 0) throw std::invalid_argument("segment types need lengths >= 1 and counts >= 0");
    k += len * n;
    l += n;
    h_parts.push_back(n);
  }
  if (r != j - k) throw std::invalid_argument("inconsistent types: nonzero parts must number j - k");
  return gen_binomial(j - k + 1, l) * multinomial(r, u_parts) * multinomial(l, h_parts);
}

Integer restricted_count(long m, long j, const std::set<long>& allowed, std::optional<long> forbidden) {
  const WeightSpec::Rule t = [allowed, forbidden](long i) -> WeightValue {
    const bool in_set = allowed.empty() || allowed.count(i) > 0;
    return Rational((in_set && (!forbidden || *forbidden != i)) ? 1 : 0);
  };
  const WeightSpec w("restricted", t, [](long) -> WeightValue { return Rational(1); });
  const Rational v = specialize(comp_weighted_closed(m, 0, j, w), w);
  if (v.get_den() != 1) throw std::logic_error("restricted_count produced a non-integer");
  return v.get_num();
}

}  // namespace segstat
