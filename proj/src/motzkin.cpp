#include "segstat/motzkin.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <future>
#include <stdexcept>
#include <string>

namespace segstat {

MotzkinPath::MotzkinPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  long height = 0;
  for (Step s : steps_) {
    if (s == Step::up) ++height;
    if (s == Step::down && --height < 0) throw std::invalid_argument("path goes below the axis");
  }
  if (height != 0) throw std::invalid_argument("path does not end on the axis");
}

MotzkinPath MotzkinPath::parse(std::string_view text) {
  std::vector<Step> steps;
  for (char c : text) {
    switch (std::tolower(static_cast<unsigned char>(c))) {
      case 'u': steps.push_back(Step::up); break;
      case 'd': steps.push_back(Step::down); break;
      case 'h': steps.push_back(Step::horizontal); break;
      default: throw std::invalid_argument("unknown step '" + std::string(1, c) + "'");
    }
  }
  return MotzkinPath(std::move(steps));
}

long MotzkinPath::ups() const { return std::count(steps_.begin(), steps_.end(), Step::up); }
long MotzkinPath::horizontals() const { return std::count(steps_.begin(), steps_.end(), Step::horizontal); }

std::string MotzkinPath::to_string() const {
  std::string s;
  s.reserve(steps_.size());
  for (Step st : steps_) s.push_back(static_cast<char>(st));
  return s;
}

long SegmentProfile::u_segments() const {
  long r = 0;
  for (const auto& [len, n] : u_counts) r += n;
  return r;
}

long SegmentProfile::h_segments() const {
  long r = 0;
  for (const auto& [len, n] : h_counts) r += n;
  return r;
}

SegmentProfile segment_profile(const MotzkinPath& p) {
  SegmentProfile prof;
  const auto& st = p.steps();
  for (std::size_t i = 0; i < st.size();) {
    std::size_t j = i;
    while (j < st.size() && st[j] == st[i]) ++j;
    const long run = static_cast<long>(j - i);
    if (st[i] == Step::up) ++prof.u_counts[run];
    if (st[i] == Step::horizontal) ++prof.h_counts[run];
    i = j;
  }
  return prof;
}

Polynomial profile_weight(const SegmentProfile& profile, const WeightSpec& w) {
  Rational coeff = 1;
  std::vector<Monomial::Factor> factors;
  const auto absorb = [&](Family f, const SegmentType& counts) {
    for (const auto& [len, n] : counts) {
      const WeightValue v = w.value(f, len);
      if (v) {
        coeff *= rational_pow(*v, n);
      } else {
        factors.emplace_back(Variable{f, static_cast<std::uint32_t>(len)}, static_cast<std::uint32_t>(n));
      }
    }
  };
  absorb(Family::t, profile.u_counts);
  absorb(Family::s, profile.h_counts);
  return Polynomial::term(coeff, Monomial::from_factors(std::move(factors)));
}

namespace {

struct Walker {
  const std::function<void(const MotzkinPath&)>& visit;
  std::vector<Step> steps;

  void run(long ups_left, long height, long hs_left) {
    if (ups_left == 0 && height == 0 && hs_left == 0) {
      visit(MotzkinPath(steps));
      return;
    }
    if (ups_left > 0) descend(Step::up, ups_left - 1, height + 1, hs_left);
    if (height > 0) descend(Step::down, ups_left, height - 1, hs_left);
    if (hs_left > 0) descend(Step::horizontal, ups_left, height, hs_left - 1);
  }

  void descend(Step s, long u, long h, long k) {
    steps.push_back(s);
    run(u, h, k);
    steps.pop_back();
  }
};

void check_bound(long m, long k, long bound) {
  if (m < 0 || k < 0) throw std::invalid_argument("path counts must be >= 0");
  if (2 * m + k > bound)
    throw BoundExceeded("path length " + std::to_string(2 * m + k) + " exceeds enumeration bound " +
                        std::to_string(bound));
}

// Walk all paths that start with the given prefix (prefix must be a valid partial walk).
void for_each_with_prefix(long m, long k, const std::vector<Step>& prefix,
                          const std::function<void(const MotzkinPath&)>& visit) {
  long ups = 0, height = 0, hs = 0;
  for (Step s : prefix) {
    if (s == Step::up) ++ups, ++height;
    if (s == Step::down) --height;
    if (s == Step::horizontal) ++hs;
  }
  Walker w{visit, prefix};
  w.run(m - ups, height, k - hs);
}

// Valid partial walks of exactly `depth` steps (or complete paths if shorter), in walk order.
void collect_prefixes(long ups_left, long height, long hs_left, long depth, std::vector<Step>& cur,
                      std::vector<std::vector<Step>>& out) {
  if (depth == 0 || (ups_left == 0 && height == 0 && hs_left == 0)) {
    out.push_back(cur);
    return;
  }
  const auto go = [&](Step s, long u, long h, long k) {
    cur.push_back(s);
    collect_prefixes(u, h, k, depth - 1, cur, out);
    cur.pop_back();
  };
  if (ups_left > 0) go(Step::up, ups_left - 1, height + 1, hs_left);
  if (height > 0) go(Step::down, ups_left, height - 1, hs_left);
  if (hs_left > 0) go(Step::horizontal, ups_left, height, hs_left - 1);
}

}  // namespace

void for_each_path(long m, long k, const std::function<void(const MotzkinPath&)>& visit, long bound) {
  check_bound(m, k, bound);
  Walker w{visit, {}};
  w.steps.reserve(2 * m + k);
  w.run(m, 0, k);
}

std::vector<MotzkinPath> enumerate_paths(long m, long k, long bound) {
  std::vector<MotzkinPath> out;
  for_each_path(m, k, [&](const MotzkinPath& p) { out.push_back(p); }, bound);
  return out;
}

Integer count_paths_bruteforce(long m, long k, long bound) {
  Integer n = 0;
  for_each_path(m, k, [&](const MotzkinPath&) { ++n; }, bound);
  return n;
}

Polynomial weighted_sum_bruteforce(long m, long k, const WeightSpec& w, long bound, unsigned jobs) {
  check_bound(m, k, bound);
  if (jobs <= 1) {
    Polynomial sum;
    for_each_path(m, k, [&](const MotzkinPath& p) { sum += profile_weight(segment_profile(p), w); }, bound);
    return sum;
  }
  std::vector<std::vector<Step>> prefixes;
  std::vector<Step> cur;
  collect_prefixes(m, 0, k, std::min<long>(4, 2 * m + k), cur, prefixes);
  std::vector<Polynomial> partial(prefixes.size());
  std::vector<std::future<void>> workers;
  for (unsigned t = 0; t < jobs; ++t) {
    workers.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t i = t; i < prefixes.size(); i += jobs) {
        for_each_with_prefix(m, k, prefixes[i],
                             [&](const MotzkinPath& p) { partial[i] += profile_weight(segment_profile(p), w); });
      }
    }));
  }
  for (auto& f : workers) f.get();
  Polynomial sum;
  for (const auto& p : partial) sum += p;
  return sum;
}

Polynomial weighted_sum_closed(long m, long k, const WeightSpec& w) {
  if (m < 0 || k < 0) throw std::invalid_argument("weighted_sum_closed: negative size");
  const BellTable t_bell(m, WeightVector::factorial_scaled(w, Family::t));
  const BellTable s_bell(k, WeightVector::factorial_scaled(w, Family::s));
  const Rational inv_m1(Integer(1), factorial(m + 1));
  const Rational inv_k(Integer(1), factorial(k));
  Polynomial total;
  for (long j = 0; j <= k; ++j) {
    Polynomial s_part;
    for (long l = j; l <= k; ++l) {
      const Integer c = sign_pow(l - j) * gen_binomial(l - 1, l - j) * factorial(l);
      if (c == 0) continue;
      s_part += s_bell(k, l) * Rational(c);
    }
    if (s_part.is_zero()) continue;
    const Polynomial t_part = potential(m, m + j + 1, t_bell) * (Rational(gen_binomial(m + j, j)) * inv_m1);
    total.add_product(t_part, s_part * inv_k);
  }
  return total;
}

Integer v_coefficient(long m, long k, long r, long l) {
  Integer v = 0;
  for (long j = 0; j <= k; ++j)
    v += sign_pow(l - j) * gen_binomial(l - 1, l - j) * gen_binomial(m + j, m) * gen_binomial(m + j + 1, r);
  return v;
}

Polynomial weighted_sum_by_segments(long m, long k, long r, long l, const WeightSpec& w) {
  if (m < 0 || k < 0) throw std::invalid_argument("weighted_sum_by_segments: negative size");
  const Integer v = v_coefficient(m, k, r, l);
  if (v == 0 || r < 0 || l < 0 || r > m || l > k) return {};
  const Polynomial bt = partial_bell(m, r, WeightVector::factorial_scaled(w, Family::t));
  const Polynomial bs = partial_bell(k, l, WeightVector::factorial_scaled(w, Family::s));
  const Rational c(factorial(r) * factorial(l) * v, factorial(k) * factorial(m + 1));
  return bt * bs * make_rational(c.get_num(), c.get_den());
}

namespace {

// Returns (size, number of blocks) of a segment type.
std::pair<long, long> type_totals(const SegmentType& type) {
  long size = 0, blocks = 0;
  for (const auto& [len, n] : type) {
    if (len < 1 || n < 0) throw std::invalid_argument("segment types need lengths >= 1 and counts >= 0");
    size += len * n;
    blocks += n;
  }
  return {size, blocks};
}

Integer type_multinomial(const SegmentType& type, long blocks) {
  std::vector<long> parts;
  for (const auto& [len, n] : type) parts.push_back(n);
  return multinomial(blocks, parts);
}

void partitions_rec(long remaining, long max_part, SegmentType& cur, std::vector<SegmentType>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (long part = std::min(remaining, max_part); part >= 1; --part) {
    ++cur[part];
    partitions_rec(remaining - part, part, cur, out);
    if (--cur[part] == 0) cur.erase(part);
  }
}

}  // namespace

Integer count_by_type(long m, long k, const SegmentType& u_type, const SegmentType& h_type) {
  const auto [u_size, r] = type_totals(u_type);
  const auto [h_size, l] = type_totals(h_type);
  if (u_size != m || h_size != k) throw std::invalid_argument("segment type sizes do not match (m, k)");
  const Integer num = type_multinomial(u_type, r) * type_multinomial(h_type, l) * v_coefficient(m, k, r, l);
  const Rational q(num, Integer(m + 1));
  const Rational value = make_rational(q.get_num(), q.get_den());
  if (value.get_den() != 1 || value < 0)
    throw std::logic_error("count_by_type produced " + value.get_str() + ", not a nonnegative integer");
  return value.get_num();
}

std::vector<SegmentType> partitions_as_types(long n) {
  std::vector<SegmentType> out;
  SegmentType cur;
  partitions_rec(n, n, cur, out);
  return out;
}

// ---- named weights -----------------------------------------------------------

namespace {

WeightSpec::Rule constant_rule(const Rational& c) {
  return [c](long) -> WeightValue { return c; };
}

Rational inv_factorial(long i) { return Rational(Integer(1), factorial(i)); }

}  // namespace

WeightSpec stirling_weights() {
  const WeightSpec::Rule r = [](long i) -> WeightValue { return inv_factorial(i); };
  return {"stirling", r, r};
}

WeightSpec b_ary_weights(long b, long d) {
  const auto tree = [](long arity) {
    return [arity](long i) -> WeightValue {
      return make_rational(gen_binomial(arity * i + 1, i), Integer(arity * i + 1));
    };
  };
  return {"b-ary:b=" + std::to_string(b) + ",d=" + std::to_string(d), tree(b), tree(d)};
}

WeightSpec abel_weights(const Rational& q) {
  const WeightSpec::Rule t = [q](long i) -> WeightValue {
    return rational_pow(Rational(1) - q * i, i - 1) * inv_factorial(i);
  };
  return {"abel:q=" + q.get_str(), t, constant_rule(1)};
}

WeightSpec r_ary_labeled_weights(long r) {
  WeightSpec w = abel_weights(Rational(-(r + 1)));
  return w.with(Family::t, [r](long i) -> WeightValue {
    return rational_pow(Rational((r + 1) * i + 1), i - 1) * inv_factorial(i);
  }, "r-ary:r=" + std::to_string(r));
}

WeightSpec bell_number_weights() {
  const WeightSpec::Rule t = [](long i) -> WeightValue {
    return BinomialSequence::exponential()(i, 1) * inv_factorial(i);
  };
  return {"bell-numbers", t, constant_rule(1)};
}

WeightSpec binomial_sequence_weights(const BinomialSequence& phi, const BinomialSequence& psi) {
  const WeightSpec::Rule t = [phi](long i) -> WeightValue { return phi(i, 1) * inv_factorial(i); };
  const WeightSpec::Rule s = [psi](long i) -> WeightValue { return psi(i - 1, 1) * inv_factorial(i - 1); };
  return {"binomial-sequence:" + phi.name() + "," + psi.name(), t, s};
}

WeightSpec factorial_psi_weights() {
  WeightSpec w = binomial_sequence_weights(BinomialSequence::factorial(), BinomialSequence::factorial());
  return w.with(Family::s, [](long i) -> WeightValue {
    return BinomialSequence::factorial()(i - 1, 1) * inv_factorial(i - 1);
  }, "factorial-psi");
}

WeightSpec power_family_weights(const Series& f, const Series& g) {
  const WeightSpec::Rule t = [f](long i) -> WeightValue {
    if (i > f.nx()) throw std::out_of_range("power_family_weights: t index beyond series truncation");
    return specialize(power_coeff(f, i, i + 1), WeightSpec::all_ones()) * inv_factorial(i + 1);
  };
  const WeightSpec::Rule s = [g](long i) -> WeightValue {
    if (i - 1 > g.nx()) throw std::out_of_range("power_family_weights: s index beyond series truncation");
    return specialize(power_coeff(g, i - 1, i), WeightSpec::all_ones()) * inv_factorial(i);
  };
  return {"power-family", t, s};
}

WeightSpec power_family_weights(const Series& f) {
  WeightSpec w = power_family_weights(f, Series::from_coefficients({Polynomial(1), Polynomial(1)}, 1));
  return w.with(Family::s, constant_rule(1), "power-family");
}

namespace {

long parse_long_param(std::string_view text, std::string_view key, std::string_view kind) {
  const std::string needle = std::string(key) + "=";
  const auto pos = text.find(needle);
  if (pos == std::string_view::npos) throw std::invalid_argument("weight kind '" + std::string(kind) + "' needs " + needle);
  auto start = text.data() + pos + needle.size();
  const auto end = text.data() + text.size();
  long v = 0;
  auto [ptr, ec] = std::from_chars(start, end, v);
  if (ec != std::errc{} || (ptr != end && *ptr != ',')) throw std::invalid_argument("bad value for " + needle);
  return v;
}

}  // namespace

WeightSpec named_weights(std::string_view kind) {
  const auto colon = kind.find(':');
  const std::string_view base = kind.substr(0, colon);
  const std::string_view params = colon == std::string_view::npos ? std::string_view{} : kind.substr(colon + 1);
  if (base == "symbolic") return WeightSpec::symbolic();
  if (base == "all-ones") return WeightSpec::all_ones();
  if (base == "stirling") return stirling_weights();
  if (base == "bell-numbers") return bell_number_weights();
  if (base == "factorial-psi") return factorial_psi_weights();
  if (base == "b-ary") return b_ary_weights(parse_long_param(params, "b", kind), parse_long_param(params, "d", kind));
  if (base == "r-ary") return r_ary_labeled_weights(parse_long_param(params, "r", kind));
  if (base == "abel") {
    const auto pos = params.find("q=");
    if (pos == std::string_view::npos) throw std::invalid_argument("abel weights need q=");
    Rational q;
    if (q.set_str(std::string(params.substr(pos + 2)), 10) != 0) throw std::invalid_argument("bad value for q=");
    q.canonicalize();
    return abel_weights(q);
  }
  throw std::invalid_argument("unknown weight kind '" + std::string(kind) + "'");
}

// ---- closed forms for the specializations -------------------------------------

Rational stirling_closed(long m, long k) {
  Rational sum = 0;
  for (long j = 0; j <= k; ++j) {
    const Integer term = sign_pow(k - j) * gen_binomial(m + j, j) * factorial(j) *
                         rational_pow(Rational(m + j + 1), m).get_num() * stirling2(k, j);
    sum += Rational(term);
  }
  return sum / Rational(factorial(k) * factorial(m + 1));
}

Rational b_ary_closed(long m, long k, long b, long d) {
  Rational sum = 0;
  for (long j = 0; j <= k; ++j) {
    Rational s_factor;
    if (j == k) {
      s_factor = 1;
    } else {
      s_factor = make_rational(Integer(d * j - j), Integer(d * k - j)) * Rational(gen_binomial(d * k - j, k - j));
    }
    if (s_factor == 0) continue;
    const long top = (b + 1) * m + j + 1;
    const Rational t_factor = make_rational(Integer(m + j + 1), Integer(top)) * Rational(gen_binomial(top, m));
    sum += Rational(gen_binomial(m + j, j)) * t_factor * s_factor;
  }
  return sum / Rational(m + 1);
}

Rational b_ary_closed_d1(long m, long k, long b) {
  const long top = (b + 1) * m + k + 1;
  return make_rational(gen_binomial(m + k + 1, k) * gen_binomial(top, m), Integer(top));
}

Rational power_family_closed(const Series& f, long m, long k) {
  const Rational fm = specialize(power_coeff(f, m, 2 * m + k + 1), WeightSpec::all_ones());
  return Rational(gen_binomial(m + k + 1, k)) * fm / Rational(Integer(2 * m + k + 1) * factorial(m));
}

Rational power_family_general_closed(const Series& f, const Series& g, long m, long k) {
  if (k < 1) throw std::domain_error("power_family_general_closed is undefined at k = 0");
  const WeightSpec ones = WeightSpec::all_ones();
  Rational sum = 0;
  for (long j = 1; j <= k; ++j) {
    Rational inner = 0;
    for (long l = j; l <= k; ++l) {
      const Rational gk = specialize(power_coeff(g, k - l, k), ones) / Rational(factorial(k - l));
      inner += Rational(sign_pow(l - j) * gen_binomial(l, j)) * gk;
    }
    if (inner == 0) continue;
    const Rational fm = specialize(power_coeff(f, m, 2 * m + j + 1), ones);
    sum += inner * make_rational(Integer(j * (m + j + 1)), Integer(k * (2 * m + j + 1))) *
           Rational(gen_binomial(m + j, j)) * fm / Rational(factorial(m + 1));
  }
  return sum;
}

Rational r_ary_labeled_closed(long m, long k, long r) {
  return Rational(gen_binomial(m + k + 1, k)) * rational_pow(Rational((r + 2) * m + k + 1), m - 1) /
         Rational(factorial(m));
}

Rational binomial_sequence_closed(const BinomialSequence& phi, long m, long k) {
  return Rational(gen_binomial(m + k, k)) * phi(m, Rational(m + k + 1)) / Rational(factorial(m + 1));
}

Rational abel_closed(const Rational& q, long m, long k) {
  return Rational(gen_binomial(m + k + 1, k)) * rational_pow((1 - q) * m + k + 1, m - 1) / Rational(factorial(m));
}

Rational bell_number_closed(long m, long k) {
  Rational sum = 0;
  for (long i = 0; i <= m; ++i) sum += Rational(stirling2(m, i)) * rational_pow(Rational(m + k + 1), i);
  return Rational(gen_binomial(m + k, k)) * sum / Rational(factorial(m + 1));
}

Rational two_sequence_closed(const BinomialSequence& phi, const BinomialSequence& psi, long m, long k) {
  Rational sum = 0;
  for (long j = 0; j <= k; ++j) {
    Rational inner = 0;
    for (long l = j; l <= k; ++l) {
      const Integer c = sign_pow(l - j) * gen_binomial(l - 1, l - j);
      if (c == 0) continue;
      inner += Rational(c) * psi(k - l, Rational(l)) / Rational(factorial(k - l));
    }
    if (inner == 0) continue;
    sum += inner * Rational(gen_binomial(m + j, j)) * phi(m, Rational(m + j + 1)) / Rational(factorial(m + 1));
  }
  return sum;
}

}  // namespace segstat
