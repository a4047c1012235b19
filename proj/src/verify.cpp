#include "segstat/verify.hpp"

#include <functional>
#include <future>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "segstat/bell.hpp"
#include "segstat/compositions.hpp"
#include "segstat/lagrange.hpp"
#include "segstat/matrixcomp.hpp"
#include "segstat/motzkin.hpp"

namespace segstat {

namespace {

// Collects the first failure of an identity.
class Check {
 public:
  Check(std::string suite, std::string identity, std::string range)
      : result_{std::move(suite), std::move(identity), std::move(range), true, std::nullopt} {}

  template <typename Describe>
  void expect(bool ok, Describe describe) {
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
  }

  bool failed() const { return !result_.passed; }
  IdentityResult result() const { return result_; }

 private:
  IdentityResult result_;
};

using Task = std::function<IdentityResult()>;

std::string args(std::initializer_list<std::pair<const char*, long>> kv) {
  std::string s;
  for (const auto& [k, v] : kv) {
    if (!s.empty()) s += ", ";
    s += std::string(k) + "=" + std::to_string(v);
  }
  return s;
}

std::string mismatch(const std::string& where, const std::string& lhs, const std::string& rhs) {
  return where + ": " + lhs + " != " + rhs;
}

Task task(std::string suite, std::string identity, std::string range, std::function<void(Check&)> body) {
  return [=]() {
    Check c(suite, identity, range);
    try {
      body(c);
    } catch (const std::exception& e) {
      c.expect(false, [&] { return std::string("exception: ") + e.what(); });
    }
    return c.result();
  };
}

// ---- core ----------------------------------------------------------------------

void core_tasks(long n, std::vector<Task>& out) {
  const std::string s = "core-identities";
  const std::string range = "indices <= " + std::to_string(n);
  out.push_back(task(s, "vandermonde-style alternating sum", range, [n](Check& c) {
    for (long l = 0; l <= n; ++l)
      for (long j = 0; j <= n; ++j) {
        Integer lhs = 0;
        for (long i = 0; i <= j; ++i) lhs += sign_pow(i) * gen_binomial(j, i) * gen_binomial(-i, l);
        const Integer rhs = sign_pow(l - j) * gen_binomial(l - 1, l - j);
        c.expect(lhs == rhs, [&] { return mismatch(args({{"l", l}, {"j", j}}), lhs.get_str(), rhs.get_str()); });
      }
  }));
  out.push_back(task(s, "binomial orthogonality", range, [n](Check& c) {
    for (long k = 0; k <= n; ++k)
      for (long j = 0; j <= k; ++j) {
        Integer lhs = 0;
        for (long l = j; l <= k; ++l) lhs += sign_pow(l - j) * gen_binomial(l, j) * gen_binomial(k, l);
        const Integer rhs = (k == j) ? 1 : 0;
        c.expect(lhs == rhs, [&] { return mismatch(args({{"j", j}, {"k", k}}), lhs.get_str(), rhs.get_str()); });
      }
  }));
  out.push_back(task(s, "kronecker alternating sum", range, [n](Check& c) {
    for (long m = 0; m <= n; ++m)
      for (long r = 0; r <= n; ++r) {
        Integer lhs = 0;
        for (long i = 0; i <= m; ++i) lhs += sign_pow(i) * gen_binomial(m, i) * gen_binomial(m - i, r);
        const Integer rhs = (r == m) ? 1 : 0;
        c.expect(lhs == rhs, [&] { return mismatch(args({{"n", m}, {"r", r}}), lhs.get_str(), rhs.get_str()); });
      }
  }));
  out.push_back(task(s, "pascal recurrence", "-" + std::to_string(n) + " <= a <= " + std::to_string(n) + ", 1 <= b <= " + std::to_string(n), [n](Check& c) {
    for (long a = -n; a <= n; ++a)
      for (long b = 1; b <= n; ++b) {
        const Integer lhs = gen_binomial(a, b);
        const Integer rhs = gen_binomial(a - 1, b - 1) + gen_binomial(a - 1, b);
        c.expect(lhs == rhs, [&] { return mismatch(args({{"a", a}, {"b", b}}), lhs.get_str(), rhs.get_str()); });
      }
  }));
}

// ---- bell ----------------------------------------------------------------------

std::vector<BinomialSequence> builtin_sequences() {
  return {BinomialSequence::power(), BinomialSequence::factorial(), BinomialSequence::abel(Rational(2)),
          BinomialSequence::abel(Rational(-1, 2)), BinomialSequence::exponential()};
}

void bell_tasks(long n, std::vector<Task>& out) {
  const std::string s = "bell";
  const std::string range = "n <= " + std::to_string(n);
  out.push_back(task(s, "recurrence equals partition sum", range + ", symbolic", [n](Check& c) {
    const WeightVector x = WeightVector::symbolic();
    const BellTable table(n, x);
    for (long m = 0; m <= n; ++m)
      for (long r = 0; r <= m; ++r) {
        const Polynomial oracle = partial_bell_oracle(m, r, x);
        c.expect(table(m, r) == oracle,
                 [&] { return mismatch(args({{"n", m}, {"r", r}}), to_string(table(m, r)), to_string(oracle)); });
      }
  }));
  out.push_back(task(s, "homogeneity", range + ", q in {2, -1/3}", [n](Check& c) {
    const WeightVector x = WeightVector::symbolic();
    const BellTable base(n, x);
    for (const Rational& q : {Rational(2), Rational(-1, 3)}) {
      const BellTable scaled(n, x.scaled(q));
      for (long m = 0; m <= n; ++m)
        for (long r = 0; r <= m; ++r) {
          const Polynomial rhs = base(m, r) * rational_pow(q, r);
          c.expect(scaled(m, r) == rhs, [&] { return args({{"n", m}, {"r", r}}) + " q=" + q.get_str(); });
        }
    }
  }));
  out.push_back(task(s, "potential equals series power", range + ", -4 <= lambda <= 4", [n](Check& c) {
    const WeightVector a = WeightVector::symbolic();
    Series base = Series::constant(Polynomial(1), Truncation{static_cast<int>(n), 0, 0});
    for (long k = 1; k <= n; ++k) base.set(static_cast<int>(k), a(k) * Rational(Integer(1), factorial(k)));
    const BellTable table(n, a);
    for (long lambda = -4; lambda <= 4; ++lambda) {
      const Series p = base.pow(lambda);
      for (long m = 0; m <= n; ++m) {
        const Polynomial lhs = potential(m, lambda, table);
        const Polynomial rhs = p.coeff(static_cast<int>(m)) * Rational(factorial(m));
        c.expect(lhs == rhs, [&] { return mismatch(args({{"n", m}, {"lambda", lambda}}), to_string(lhs), to_string(rhs)); });
      }
    }
  }));
  out.push_back(task(s, "potential from shifted bell arguments", range + ", 1 <= r <= 6, symbolic", [n](Check& c) {
    const WeightVector f = WeightVector::symbolic();
    const BellTable table(n, f);
    const WeightVector shifted([f](long i) { return i == 1 ? Polynomial(1) : f(i - 1) * Rational(i); });
    const BellTable shifted_table(n + 6, shifted);
    for (long m = 0; m <= n; ++m)
      for (long r = 1; r <= 6; ++r) {
        const Polynomial lhs = potential(m, r, table);
        const Polynomial rhs = shifted_table(m + r, r) * Rational(Integer(1), gen_binomial(m + r, r));
        c.expect(lhs == rhs, [&] { return mismatch(args({{"n", m}, {"r", r}}), to_string(lhs), to_string(rhs)); });
      }
  }));
  out.push_back(task(s, "bell identity for powers of a unit series", "m <= " + std::to_string(n) + ", 25 random series", [n](Check& c) {
    for (std::uint64_t seed = 1; seed <= 25 && !c.failed(); ++seed) {
      const Series f = random_unit_series(seed, static_cast<int>(n));
      std::vector<Polynomial> args_vec;
      for (long i = 1; i <= n; ++i) args_vec.push_back(power_coeff(f, i - 1, i));
      const BellTable table(n, WeightVector::from_values(args_vec));
      for (long m = 1; m <= n; ++m)
        for (long r = 1; r <= m; ++r) {
          const Polynomial rhs = power_coeff(f, m - r, m) * Rational(gen_binomial(m - 1, r - 1));
          c.expect(table(m, r) == rhs, [&] {
            return mismatch(args({{"seed", static_cast<long>(seed)}, {"m", m}, {"r", r}}), to_string(table(m, r)), to_string(rhs));
          });
        }
    }
  }));
  out.push_back(task(s, "bell identity for binomial sequences", "m <= " + std::to_string(n) + ", power/factorial/abel/exponential", [n](Check& c) {
    for (const BinomialSequence& phi : builtin_sequences()) {
      const WeightVector x([phi](long i) { return Polynomial(phi(i - 1, 1) * i); });
      const BellTable table(n, x);
      for (long m = 1; m <= n; ++m)
        for (long r = 1; r <= m; ++r) {
          const Polynomial rhs(Rational(gen_binomial(m, r)) * phi(m - r, Rational(r)));
          c.expect(table(m, r) == rhs, [&] {
            return phi.name() + " " + mismatch(args({{"m", m}, {"r", r}}), to_string(table(m, r)), to_string(rhs));
          });
        }
    }
  }));
  out.push_back(task(s, "binomial sequence convolution", range + ", x, y in {1/2, -3, 5/7}", [n](Check& c) {
    std::vector<BinomialSequence> seqs = builtin_sequences();
    seqs.push_back(BinomialSequence::generic({Rational(1), Rational(1, 2), Rational(-2, 3)}));
    const std::vector<Rational> pts = {Rational(1, 2), Rational(-3), Rational(5, 7)};
    for (const auto& phi : seqs)
      for (const auto& x : pts)
        for (const auto& y : pts)
          for (long m = 0; m <= n; ++m) {
            Rational rhs = 0;
            for (long i = 0; i <= m; ++i) rhs += Rational(gen_binomial(m, i)) * phi(i, x) * phi(m - i, y);
            c.expect(phi(m, x + y) == rhs, [&] { return phi.name() + " n=" + std::to_string(m); });
          }
  }));
}

// ---- lagrange ----------------------------------------------------------------------

void lagrange_tasks(long n, std::vector<Task>& out) {
  const std::string s = "lagrange";
  const int order = static_cast<int>(n) + 12;
  out.push_back(task(s, "reversion round trip", "mod x^" + std::to_string(order + 1) + ", 50 random series", [order](Check& c) {
    for (std::uint64_t seed = 1; seed <= 50 && !c.failed(); ++seed) {
      const Series f = random_invertible_series(seed, order);
      const Series g = reversion(f, order);
      const Series fg = f.compose(g);
      Series x(order);
      x.set(1, Polynomial(1));
      c.expect(fg == x, [&] { return "seed=" + std::to_string(seed); });
    }
  }));
  out.push_back(task(s, "lagrange coefficient equals composition", "n <= " + std::to_string(n) + ", 20 random pairs", [n](Check& c) {
    for (std::uint64_t seed = 1; seed <= 20 && !c.failed(); ++seed) {
      const int order = static_cast<int>(n);
      const Series f = random_invertible_series(seed, order);
      const Series phi = random_unit_series(seed + 1000, order);
      const Series composed = phi.compose(reversion(f, order));
      for (int k = 1; k <= order; ++k) {
        const Polynomial lhs = lagrange_coeff(phi, f, k);
        c.expect(lhs == composed.coeff(k), [&] {
          return mismatch(args({{"seed", static_cast<long>(seed)}, {"n", k}}), to_string(lhs), to_string(composed.coeff(k)));
        });
      }
    }
  }));
}

// ---- motzkin --------------------------------------------------------------------

template <typename F>
void for_each_mk(long n, F f) {
  for (long m = 0; 2 * m <= n; ++m)
    for (long k = 0; 2 * m + k <= n; ++k) f(m, k);
}

void check_specialization(Check& c, long n, const WeightSpec& w, const std::function<Rational(long, long)>& closed,
                          const std::string& label) {
  for_each_mk(n, [&](long m, long k) {
    const Rational brute = specialize(weighted_sum_bruteforce(m, k, w), w);
    const Rational rhs = closed(m, k);
    c.expect(brute == rhs, [&] { return label + " " + mismatch(args({{"m", m}, {"k", k}}), brute.get_str(), rhs.get_str()); });
  });
}

void motzkin_tasks(long n, std::vector<Task>& out) {
  const std::string s = "motzkin";
  const std::string range = "2m+k <= " + std::to_string(n);
  out.push_back(task(s, "motzkin triple agreement", range + ", symbolic", [n](Check& c) {
    const WeightSpec w = WeightSpec::symbolic();
    const Series gf = motzkin_gf(w, static_cast<int>(n / 2), static_cast<int>(n));
    for_each_mk(n, [&](long m, long k) {
      const Polynomial brute = weighted_sum_bruteforce(m, k, w);
      const Polynomial closed = weighted_sum_closed(m, k, w);
      const Polynomial& series = gf.coeff(static_cast<int>(m), static_cast<int>(k));
      c.expect(brute == closed, [&] { return "closed " + mismatch(args({{"m", m}, {"k", k}}), to_string(closed), to_string(brute)); });
      c.expect(brute == series, [&] { return "series " + mismatch(args({{"m", m}, {"k", k}}), to_string(series), to_string(brute)); });
    });
  }));
  out.push_back(task(s, "generating series grading", range + ", symbolic", [n](Check& c) {
    const Series gf = motzkin_gf(WeightSpec::symbolic(), static_cast<int>(n / 2), static_cast<int>(n));
    for_each_mk(n, [&](long m, long k) {
      for (const auto& [mono, coeff] : gf.coeff(static_cast<int>(m), static_cast<int>(k)).terms()) {
        c.expect(mono.weighted_degree(Family::t) == static_cast<std::uint64_t>(m) &&
                     mono.weighted_degree(Family::s) == static_cast<std::uint64_t>(k),
                 [&] { return args({{"m", m}, {"k", k}}); });
      }
    });
  }));
  out.push_back(task(s, "segment-count refinement", range + ", symbolic", [n](Check& c) {
    const WeightSpec w = WeightSpec::symbolic();
    for_each_mk(n, [&](long m, long k) {
      // brute-force sums split by (r, l)
      std::map<std::pair<long, long>, Polynomial> split;
      for_each_path(m, k, [&](const MotzkinPath& p) {
        const SegmentProfile prof = segment_profile(p);
        split[{prof.u_segments(), prof.h_segments()}] += profile_weight(prof, w);
      });
      Polynomial total;
      for (long r = 0; r <= m; ++r)
        for (long l = 0; l <= k; ++l) {
          const Polynomial part = weighted_sum_by_segments(m, k, r, l, w);
          total += part;
          const Polynomial& brute = split[{r, l}];
          c.expect(part == brute, [&] {
            return mismatch(args({{"m", m}, {"k", k}, {"r", r}, {"l", l}}), to_string(part), to_string(brute));
          });
        }
      c.expect(total == weighted_sum_closed(m, k, w), [&] { return "sum over (r,l) " + args({{"m", m}, {"k", k}}); });
    });
  }));
  out.push_back(task(s, "segment-type counts", range, [n](Check& c) {
    for_each_mk(n, [&](long m, long k) {
      std::map<std::pair<SegmentType, SegmentType>, long> tally;
      for_each_path(m, k, [&](const MotzkinPath& p) {
        const SegmentProfile prof = segment_profile(p);
        ++tally[{prof.u_counts, prof.h_counts}];
      });
      Integer total = 0;
      for (const SegmentType& ut : partitions_as_types(m))
        for (const SegmentType& ht : partitions_as_types(k)) {
          const Integer count = count_by_type(m, k, ut, ht);
          total += count;
          const auto it = tally.find({ut, ht});
          const long brute = it == tally.end() ? 0 : it->second;
          c.expect(count == brute, [&] {
            return mismatch(args({{"m", m}, {"k", k}}), count.get_str(), std::to_string(brute));
          });
        }
      const Integer paths = count_paths_bruteforce(m, k);
      c.expect(total == paths, [&] { return "total " + mismatch(args({{"m", m}, {"k", k}}), total.get_str(), paths.get_str()); });
    });
  }));
  out.push_back(task(s, "motzkin and catalan numbers", "n <= " + std::to_string(n), [n](Check& c) {
    // Motzkin numbers by the classic recurrence (n+2)M_n = (2n+1)M_{n-1} + (3n-3)M_{n-2}.
    std::vector<Integer> motz{1, 1};
    for (long i = 2; i <= n; ++i) motz.push_back(((2 * i + 1) * motz[i - 1] + (3 * i - 3) * motz[i - 2]) / (i + 2));
    const WeightSpec ones = WeightSpec::all_ones();
    for (long len = 0; len <= n; ++len) {
      Rational total = 0;
      for (long m = 0; 2 * m <= len; ++m) total += specialize(weighted_sum_closed(m, len - 2 * m, ones), ones);
      c.expect(total == Rational(motz[len]), [&] { return mismatch("n=" + std::to_string(len), total.get_str(), motz[len].get_str()); });
    }
    const WeightSpec dyck = ones.with(Family::s, [](long) -> WeightValue { return Rational(0); }, "dyck");
    const Series gf = motzkin_gf(dyck, static_cast<int>(n / 2), 0);
    for (long m = 0; 2 * m <= n; ++m) {
      const Integer catalan = gen_binomial(2 * m, m) / (m + 1);
      const Rational got = specialize(gf.coeff(static_cast<int>(m), 0), dyck);
      c.expect(got == Rational(catalan), [&] { return mismatch("m=" + std::to_string(m), got.get_str(), catalan.get_str()); });
    }
  }));
  out.push_back(task(s, "stirling weights closed form", range, [n](Check& c) {
    const WeightSpec w = stirling_weights();
    for_each_mk(n, [&](long m, long k) {
      const Rational lhs = specialize(weighted_sum_closed(m, k, w), w);
      const Rational rhs = stirling_closed(m, k);
      c.expect(lhs == rhs, [&] { return mismatch(args({{"m", m}, {"k", k}}), lhs.get_str(), rhs.get_str()); });
    });
    check_specialization(c, n, w, stirling_closed, "brute");
  }));
  out.push_back(task(s, "b-ary tree weights, d = 1", range + ", b in {1,2,3}", [n](Check& c) {
    for (long b = 1; b <= 3; ++b) {
      const WeightSpec w = b_ary_weights(b, 1);
      for_each_mk(n, [&](long m, long k) {
        const Rational lhs = specialize(weighted_sum_closed(m, k, w), w);
        const Rational rhs = b_ary_closed_d1(m, k, b);
        c.expect(lhs == rhs, [&] { return "b=" + std::to_string(b) + " " + mismatch(args({{"m", m}, {"k", k}}), lhs.get_str(), rhs.get_str()); });
      });
    }
  }));
  out.push_back(task(s, "b-ary/d-ary tree weights, general d", range + ", b in {1,2,3}, d in {1,2,3}", [n](Check& c) {
    for (long b = 1; b <= 3; ++b)
      for (long d = 1; d <= 3; ++d)
        check_specialization(c, n, b_ary_weights(b, d), [b, d](long m, long k) { return b_ary_closed(m, k, b, d); },
                             "b=" + std::to_string(b) + ",d=" + std::to_string(d));
  }));
  out.push_back(task(s, "power-family weights", range + ", f = 1+x and 5 random unit series", [n](Check& c) {
    std::vector<Series> fs{Series::from_coefficients({Polynomial(1), Polynomial(1)}, static_cast<int>(n) + 1)};
    for (std::uint64_t seed = 1; seed <= 5; ++seed) fs.push_back(random_unit_series(seed, static_cast<int>(n) + 1));
    for (const Series& f : fs)
      check_specialization(c, n, power_family_weights(f), [&f](long m, long k) { return power_family_closed(f, m, k); }, "f");
  }));
  out.push_back(task(s, "power-family weights with h-weights, k >= 1", range + ", 3 random (f, g)", [n](Check& c) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const Series f = random_unit_series(seed, static_cast<int>(n) + 1);
      const Series g = random_unit_series(seed + 500, static_cast<int>(n) + 1);
      const WeightSpec w = power_family_weights(f, g);
      for_each_mk(n, [&](long m, long k) {
        if (k == 0) return;
        const Rational brute = specialize(weighted_sum_bruteforce(m, k, w), w);
        const Rational rhs = power_family_general_closed(f, g, m, k);
        c.expect(brute == rhs, [&] { return mismatch(args({{"seed", static_cast<long>(seed)}, {"m", m}, {"k", k}}), brute.get_str(), rhs.get_str()); });
      });
    }
  }));
  out.push_back(task(s, "r-ary labeled tree weights", range + ", r in {0,1,2}", [n](Check& c) {
    for (long r = 0; r <= 2; ++r)
      check_specialization(c, n, r_ary_labeled_weights(r), [r](long m, long k) { return r_ary_labeled_closed(m, k, r); },
                           "r=" + std::to_string(r));
  }));
  out.push_back(task(s, "binomial-sequence weights", range + ", power/factorial/abel/exponential", [n](Check& c) {
    for (const BinomialSequence& phi : builtin_sequences()) {
      const WeightSpec w = binomial_sequence_weights(phi, BinomialSequence::factorial());
      check_specialization(c, n, w, [&phi](long m, long k) { return binomial_sequence_closed(phi, m, k); }, phi.name());
      check_specialization(c, n, w, [&phi](long m, long k) {
        return two_sequence_closed(phi, BinomialSequence::factorial(), m, k);
      }, phi.name() + " double sum");
    }
    for (const Rational& q : {Rational(2), Rational(-1, 2), Rational(-3)})
      check_specialization(c, n, abel_weights(q), [&q](long m, long k) { return abel_closed(q, m, k); }, "abel q=" + q.get_str());
  }));
  out.push_back(task(s, "two binomial sequences", range + ", phi x psi over power/factorial/abel/exponential", [n](Check& c) {
    for (const BinomialSequence& phi : builtin_sequences())
      for (const BinomialSequence& psi : builtin_sequences())
        check_specialization(c, n, binomial_sequence_weights(phi, psi),
                             [&](long m, long k) { return two_sequence_closed(phi, psi, m, k); }, phi.name() + "," + psi.name());
  }));
  out.push_back(task(s, "bell-number weights", range, [n](Check& c) {
    check_specialization(c, n, bell_number_weights(), bell_number_closed, "bell");
  }));
  out.push_back(task(s, "parallel enumeration reduction", range + ", symbolic, 4 workers", [n](Check& c) {
    const WeightSpec w = WeightSpec::symbolic();
    for_each_mk(n, [&](long m, long k) {
      c.expect(weighted_sum_bruteforce(m, k, w, kDefaultPathBound, 4) == weighted_sum_bruteforce(m, k, w),
               [&] { return args({{"m", m}, {"k", k}}); });
    });
  }));
}

// ---- compositions -------------------------------------------------------------------

void composition_tasks(long n, std::vector<Task>& out) {
  const std::string s = "compositions";
  const long lim = std::max(1L, n - 1);
  const std::string range = "m, j <= " + std::to_string(lim);
  out.push_back(task(s, "closed form equals enumeration and series", range + ", symbolic", [lim](Check& c) {
    const WeightSpec w = WeightSpec::symbolic();
    const int l = static_cast<int>(lim);
    const Series gf = compositions_gf(w, l, l, l);
    for (long m = 0; m <= lim; ++m)
      for (long j = 0; j <= lim; ++j) {
        std::map<long, Polynomial> brute;
        for_each_composition(m, j, [&](const Composition& comp) {
          brute[comp.zeros()] += profile_weight(segment_profile(composition_to_motzkin(comp)), w);
        });
        for (long k = 0; k <= j; ++k) {
          const Polynomial closed = comp_weighted_closed(m, k, j, w);
          const Polynomial& series = gf.coeff(static_cast<int>(m), static_cast<int>(k), static_cast<int>(j));
          c.expect(closed == brute[k], [&] {
            return mismatch(args({{"m", m}, {"k", k}, {"j", j}}), to_string(closed), to_string(brute[k]));
          });
          c.expect(series == brute[k], [&] { return "series " + args({{"m", m}, {"k", k}, {"j", j}}); });
        }
      }
  }));
  out.push_back(task(s, "fixed-part slice equals q-graded series", range, [lim](Check& c) {
    const WeightSpec w = WeightSpec::symbolic();
    const int l = static_cast<int>(lim);
    const Series gf = compositions_gf(w, l, l, l);
    for (int j = 0; j <= l; ++j) {
      const Series slice = comp_gf_fixed_parts(w, j, l, l);
      for (int m = 0; m <= l; ++m)
        for (int k = 0; k <= l; ++k)
          c.expect(slice.coeff(m, k) == gf.coeff(m, k, j), [&] { return args({{"m", m}, {"k", k}, {"j", j}}); });
    }
  }));
  out.push_back(task(s, "h-segment refinement", range + ", symbolic", [lim](Check& c) {
    const WeightSpec w = WeightSpec::symbolic();
    for (long m = 0; m <= lim; ++m)
      for (long j = 0; j <= lim; ++j) {
        std::map<std::pair<long, long>, Polynomial> brute;
        for_each_composition(m, j, [&](const Composition& comp) {
          const SegmentProfile prof = segment_profile(composition_to_motzkin(comp));
          brute[{comp.zeros(), prof.h_segments()}] += profile_weight(prof, w);
        });
        for (long k = 0; k <= j; ++k) {
          Polynomial total;
          for (long l = 0; l <= k; ++l) {
            const Polynomial part = comp_weighted_by_hsegments(m, k, j, l, w);
            total += part;
            c.expect(part == brute[{k, l}], [&] { return args({{"m", m}, {"k", k}, {"j", j}, {"l", l}}); });
          }
          c.expect(total == comp_weighted_closed(m, k, j, w), [&] { return "sum " + args({{"m", m}, {"k", k}, {"j", j}}); });
        }
      }
  }));
  out.push_back(task(s, "segment-type counts", range, [lim](Check& c) {
    for (long m = 0; m <= lim; ++m)
      for (long j = 0; j <= lim; ++j) {
        std::map<std::pair<SegmentType, SegmentType>, long> tally;
        for_each_composition(m, j, [&](const Composition& comp) {
          const SegmentProfile prof = segment_profile(composition_to_motzkin(comp));
          ++tally[{prof.u_counts, prof.h_counts}];
          c.expect(prof.u_segments() == j - comp.zeros(), [&] { return "u-segments != j-k " + args({{"m", m}, {"j", j}}); });
          SegmentType nonzero;
          for (long p : comp.parts())
            if (p > 0) ++nonzero[p];
          c.expect(prof.u_counts == nonzero, [&] { return "embedding " + args({{"m", m}, {"j", j}}); });
        });
        for (long k = 0; k <= j; ++k) {
          Integer total = 0;
          for (const SegmentType& ut : partitions_as_types(m)) {
            long r = 0;
            for (const auto& [len, cnt] : ut) r += cnt;
            if (r != j - k) continue;
            for (const SegmentType& ht : partitions_as_types(k)) {
              const Integer count = comp_count_by_type(j, ut, ht);
              total += count;
              const auto it = tally.find({ut, ht});
              const long brute = it == tally.end() ? 0 : it->second;
              c.expect(count == brute, [&] { return mismatch(args({{"m", m}, {"k", k}, {"j", j}}), count.get_str(), std::to_string(brute)); });
            }
          }
          long size = 0;
          for (const auto& [key, cnt] : tally) {
            long zeros = 0;
            for (const auto& [len, c2] : key.second) zeros += len * c2;
            if (zeros == k) size += cnt;
          }
          c.expect(total == size, [&] { return "total " + args({{"m", m}, {"k", k}, {"j", j}}); });
        }
      }
  }));
  out.push_back(task(s, "restricted compositions", "m <= " + std::to_string(n + 2) + ", allowed {1,2} and forbidden r in {1,2,3}", [n](Check& c) {
    const long top = n + 2;
    for (long m = 0; m <= top; ++m)
      for (long j = 0; j <= top; ++j) {
        long allowed12 = 0;
        std::map<long, long> without;
        for_each_composition(m, j, [&](const Composition& comp) {
          if (comp.zeros() > 0) return;
          bool only12 = true;
          for (long p : comp.parts()) only12 = only12 && (p == 1 || p == 2);
          allowed12 += only12;
          for (long r = 1; r <= 3; ++r) {
            bool has = false;
            for (long p : comp.parts()) has = has || p == r;
            without[r] += !has;
          }
        }, std::max(top, 12L));
        const Integer got = restricted_count(m, j, {1, 2});
        c.expect(got == allowed12, [&] { return mismatch("allowed {1,2} " + args({{"m", m}, {"j", j}}), got.get_str(), std::to_string(allowed12)); });
        for (long r = 1; r <= 3; ++r) {
          const Integer g2 = restricted_count(m, j, {}, r);
          c.expect(g2 == without[r], [&] { return mismatch("forbid " + args({{"r", r}, {"m", m}, {"j", j}}), g2.get_str(), std::to_string(without[r])); });
        }
      }
  }));
}

// ---- matrix compositions ---------------------------------------------------------------

void matrix_tasks(long n, std::vector<Task>& out) {
  const std::string s = "matrixcomp";
  const long lim = std::max(1L, n - 1);
  out.push_back(task(s, "bipartite closed form equals enumeration and series", "m <= " + std::to_string(lim) + ", p <= 3, j <= 4, symbolic", [lim](Check& c) {
    const WeightSpec w = WeightSpec::symbolic();
    for (long p = 0; p <= 3; ++p)
      for (long j = 0; j <= 4; ++j) {
        const Series gf = bipartite_gf(w, static_cast<int>(p), static_cast<int>(j), static_cast<int>(lim));
        for (long m = 0; m <= lim; ++m) {
          std::map<long, Polynomial> by_r;
          Polynomial brute;
          for_each_bipartite(m, p, j, [&](const MatrixComposition& mc) {
            const Polynomial wt = entry_weight(mc, w);
            brute += wt;
            by_r[mc.nonzeros()] += wt;
          });
          const Polynomial closed = bipartite_weighted_closed(m, p, j, w);
          const auto where = args({{"m", m}, {"p", p}, {"j", j}});
          c.expect(closed == brute, [&] { return mismatch(where, to_string(closed), to_string(brute)); });
          c.expect(gf.coeff(static_cast<int>(m)) == brute, [&] { return "series " + where; });
          for (long r = 0; r <= m; ++r)
            c.expect(bipartite_by_nonzeros(m, p, j, r, w) == by_r[r], [&] { return "r=" + std::to_string(r) + " " + where; });
        }
      }
  }));
  out.push_back(task(s, "bipartite entry-type counts", "m <= " + std::to_string(lim) + ", p <= 3, j <= 4", [lim](Check& c) {
    for (long p = 0; p <= 3; ++p)
      for (long j = 0; j <= 4; ++j)
        for (long m = 0; m <= lim; ++m) {
          std::map<SegmentType, long> tally;
          for_each_bipartite(m, p, j, [&](const MatrixComposition& mc) {
            SegmentType t;
            for (long e : mc.entries())
              if (e > 0) ++t[e];
            ++tally[t];
          });
          for (const SegmentType& t : partitions_as_types(m)) {
            const Integer count = bipartite_count_by_type(p, j, t);
            const long brute = tally.count(t) ? tally[t] : 0;
            c.expect(count == brute, [&] { return mismatch(args({{"m", m}, {"p", p}, {"j", j}}), count.get_str(), std::to_string(brute)); });
          }
        }
  }));
  out.push_back(task(s, "bipartite power law", "to x^" + std::to_string(n) + ", p <= 4, j <= 4, symbolic", [n](Check& c) {
    const WeightSpec w = WeightSpec::symbolic();
    for (int j = 0; j <= 4; ++j) {
      const Series row = bipartite_gf(w, 1, j, static_cast<int>(n));
      for (int p = 0; p <= 4; ++p)
        c.expect(bipartite_gf(w, p, j, static_cast<int>(n)) == row.pow(p), [&] { return args({{"p", p}, {"j", j}}); });
    }
  }));
  out.push_back(task(s, "zero-one matrices", "m <= " + std::to_string(lim) + ", p <= 3, j <= 4", [lim](Check& c) {
    const WeightSpec w("zero-one", [](long i) -> WeightValue { return Rational(i == 1 ? 1 : 0); },
                       [](long) -> WeightValue { return Rational(1); });
    for (long p = 0; p <= 3; ++p)
      for (long j = 0; j <= 4; ++j)
        for (long m = 0; m <= lim; ++m) {
          long brute = 0;
          for_each_bipartite(m, p, j, [&](const MatrixComposition& mc) {
            bool ok = true;
            for (long e : mc.entries()) ok = ok && e <= 1;
            brute += ok;
          });
          const Integer u = zero_one_count(p, j, m);
          const Rational closed = specialize(bipartite_weighted_closed(m, p, j, w), w);
          c.expect(u == brute && closed == Rational(u), [&] { return mismatch(args({{"m", m}, {"p", p}, {"j", j}}), u.get_str(), std::to_string(brute)); });
        }
  }));
  out.push_back(task(s, "general matrix compositions", "m <= " + std::to_string(std::min(5L, n)) + ", p <= 2, j <= 3, symbolic", [n](Check& c) {
    const WeightSpec w = WeightSpec::symbolic();
    const long top = std::min(5L, n);
    for (long p = 0; p <= 2; ++p)
      for (long j = 0; j <= 3; ++j) {
        const long ny = p * j;
        const Series gf = matrix_gf(w, static_cast<int>(p), static_cast<int>(j), static_cast<int>(top), static_cast<int>(ny));
        for (long m = 0; m <= top; ++m) {
          std::map<long, Polynomial> brute;
          for_each_matrix(m, p, j, [&](const MatrixComposition& mc) { brute[mc.zeros()] += matrix_weight(mc, w); });
          for (long k = 0; k <= ny; ++k)
            c.expect(gf.coeff(static_cast<int>(m), static_cast<int>(k)) == brute[k], [&] {
              return args({{"m", m}, {"k", k}, {"p", p}, {"j", j}});
            });
        }
      }
  }));
  out.push_back(task(s, "bounded-outdegree plane trees", "m <= " + std::to_string(n) + ", j <= 4", [n](Check& c) {
    for (long m = 0; m <= n; ++m)
      for (long j = 1; j <= 4; ++j) {
        const Integer trees = bounded_outdegree_tree_count(m + 1, j, std::max(kTreeBound, n + 1));
        const Integer u = u_coefficient(m + 1, j, m);
        c.expect(trees * (m + 1) == u, [&] { return mismatch(args({{"m", m}, {"j", j}}), Integer(trees * (m + 1)).get_str(), u.get_str()); });
        c.expect(u_tree_formula(m, j) == u, [&] { return "formula " + args({{"m", m}, {"j", j}}); });
      }
  }));
  out.push_back(task(s, "large-j stability", "m <= " + std::to_string(n) + ", p <= 4", [n](Check& c) {
    for (long p = 0; p <= 4; ++p)
      for (long m = 0; m <= n; ++m)
        for (long j = m; j <= m + 3; ++j)
          c.expect(u_coefficient(p, j, m) == u_coefficient(p, m, m), [&] { return args({{"p", p}, {"m", m}, {"j", j}}); });
  }));
}

std::vector<Task> build_tasks(std::string_view suite, long n) {
  std::vector<Task> tasks;
  const bool all = suite == "all";
  bool known = all;
  const auto want = [&](std::string_view name) {
    const bool hit = all || suite == name;
    known = known || hit;
    return hit;
  };
  if (want("core-identities")) core_tasks(n, tasks);
  if (want("bell")) bell_tasks(n, tasks);
  if (want("lagrange")) lagrange_tasks(n, tasks);
  if (want("motzkin")) motzkin_tasks(n, tasks);
  if (want("compositions")) composition_tasks(n, tasks);
  if (want("matrixcomp")) matrix_tasks(n, tasks);
  if (!known) throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  return tasks;
}

Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  return make_rational(Integer(num(rng)), Integer(den(rng)));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"core-identities", "bell", "lagrange", "motzkin", "compositions", "matrixcomp"};
  return names;
}

std::vector<IdentityResult> run_suite(std::string_view suite, long max_n, unsigned jobs) {
  if (max_n < 0) throw std::invalid_argument("max-n must be >= 0");
  const std::vector<Task> tasks = build_tasks(suite, max_n);
  std::vector<IdentityResult> results(tasks.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
    return results;
  }
  std::vector<std::future<void>> workers;
  for (unsigned t = 0; t < jobs; ++t) {
    workers.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t i = t; i < tasks.size(); i += jobs) results[i] = tasks[i]();
    }));
  }
  for (auto& w : workers) w.get();
  return results;
}

bool all_passed(const std::vector<IdentityResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

std::string format_report(const std::vector<IdentityResult>& results, std::string_view format) {
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      nlohmann::ordered_json rec;
      rec["suite"] = r.suite;
      rec["identity"] = r.identity;
      rec["range"] = r.range;
      rec["status"] = r.passed ? "PASS" : "FAIL";
      if (r.counterexample) rec["counterexample"] = *r.counterexample;
      arr.push_back(std::move(rec));
    }
    return arr.dump(2) + "\n";
  }
  if (format != "text") throw std::invalid_argument("unknown report format '" + std::string(format) + "'");
  std::ostringstream os;
  for (const auto& r : results) {
    os << r.suite << "/" << r.identity << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.range << ")\n";
    if (r.counterexample) os << "    first counterexample: " << *r.counterexample << "\n";
  }
  return os.str();
}

Series random_unit_series(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  Series f = Series::constant(Polynomial(1), Truncation{n, 0, 0});
  for (int i = 1; i <= n; ++i) f.set(i, Polynomial(small_rational(rng)));
  return f;
}

Series random_invertible_series(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  Series f(n);
  Rational lead;
  do {
    lead = small_rational(rng);
  } while (lead == 0);
  f.set(1, Polynomial(lead));
  for (int i = 2; i <= n; ++i) f.set(i, Polynomial(small_rational(rng)));
  return f;
}

}  // namespace segstat
