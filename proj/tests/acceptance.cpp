// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. All comparisons are exact.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "segstat/bell.hpp"
#include "segstat/compositions.hpp"
#include "segstat/lagrange.hpp"
#include "segstat/matrixcomp.hpp"
#include "segstat/motzkin.hpp"
#include "segstat/verify.hpp"

using namespace segstat;

namespace {

class Criterion {
 public:
  explicit Criterion(std::ostringstream& log) : log_(log) {}

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures_;
      if (failures_ <= 5) log_ << "    mismatch: " << what << "\n";
    }
  }
  int failures() const { return failures_; }

 private:
  std::ostringstream& log_;
  int failures_ = 0;
};

std::string at(std::initializer_list<std::pair<const char*, long>> kv) {
  std::string s;
  for (const auto& [k, v] : kv) s += std::string(s.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return s;
}

template <typename F>
void for_each_mk(long n, F f) {
  for (long m = 0; 2 * m <= n; ++m)
    for (long k = 0; 2 * m + k <= n; ++k) f(m, k);
}

void brute_vs(Criterion& c, const WeightSpec& w, const std::function<Rational(long, long)>& closed, const std::string& label) {
  for_each_mk(8, [&](long m, long k) {
    c.expect(specialize(weighted_sum_bruteforce(m, k, w), w) == closed(m, k), label + " " + at({{"m", m}, {"k", k}}));
  });
}

void criterion_1(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  const WeightSpec w = WeightSpec::symbolic();
  const Series gf = motzkin_gf(w, 5, 10);
  for_each_mk(10, [&](long m, long k) {
    const Polynomial brute = weighted_sum_bruteforce(m, k, w);
    c.expect(weighted_sum_closed(m, k, w) == brute, "closed " + at({{"m", m}, {"k", k}}));
    c.expect(gf.coeff(static_cast<int>(m), static_cast<int>(k)) == brute, "series " + at({{"m", m}, {"k", k}}));
  });
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs <= 60.0, "runtime " + std::to_string(secs) + " s > 60 s");
}

void criterion_2(Criterion& c) {
  const WeightSpec w = WeightSpec::symbolic();
  for_each_mk(8, [&](long m, long k) {
    std::map<std::pair<long, long>, Polynomial> split;
    std::map<std::pair<SegmentType, SegmentType>, long> tally;
    for_each_path(m, k, [&](const MotzkinPath& p) {
      const SegmentProfile prof = segment_profile(p);
      split[{prof.u_segments(), prof.h_segments()}] += profile_weight(prof, w);
      ++tally[{prof.u_counts, prof.h_counts}];
    });
    Polynomial total;
    for (long r = 0; r <= m; ++r)
      for (long l = 0; l <= k; ++l) {
        const Polynomial part = weighted_sum_by_segments(m, k, r, l, w);
        c.expect(part == split[{r, l}], "by segments " + at({{"m", m}, {"k", k}, {"r", r}, {"l", l}}));
        total += part;
      }
    c.expect(total == weighted_sum_closed(m, k, w), "repartition " + at({{"m", m}, {"k", k}}));
    Integer count_total = 0;
    for (const auto& ut : partitions_as_types(m))
      for (const auto& ht : partitions_as_types(k)) {
        const Integer n = count_by_type(m, k, ut, ht);
        c.expect(n >= 0, "negative type count " + at({{"m", m}, {"k", k}}));
        const auto it = tally.find({ut, ht});
        c.expect(n == (it == tally.end() ? 0 : it->second), "type count vs enumeration " + at({{"m", m}, {"k", k}}));
        count_total += n;
      }
    c.expect(count_total == count_paths_bruteforce(m, k), "type counts total " + at({{"m", m}, {"k", k}}));
  });
}

void criterion_3(Criterion& c) {
  const long motzkin[] = {1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188};
  const WeightSpec ones = WeightSpec::all_ones();
  for (long n = 0; n <= 10; ++n) {
    Integer brute = 0;
    Rational closed = 0;
    for (long m = 0; 2 * m <= n; ++m) {
      brute += count_paths_bruteforce(m, n - 2 * m);
      closed += specialize(weighted_sum_closed(m, n - 2 * m, ones), ones);
    }
    c.expect(brute == motzkin[n], "enumerated Motzkin number n=" + std::to_string(n));
    c.expect(closed == motzkin[n], "closed-form Motzkin number n=" + std::to_string(n));
  }
  const long catalan[] = {1, 1, 2, 5, 14, 42};
  const WeightSpec dyck = ones.with(Family::s, [](long) -> WeightValue { return Rational(0); }, "dyck");
  const Series gf = motzkin_gf(dyck, 5, 0);
  for (long m = 0; m <= 5; ++m) {
    c.expect(count_paths_bruteforce(m, 0) == catalan[m], "Dyck enumeration m=" + std::to_string(m));
    c.expect(specialize(gf.coeff(static_cast<int>(m)), dyck) == catalan[m], "s = 0 series slice m=" + std::to_string(m));
  }
}

void criterion_4(Criterion& c) {
  const WeightSpec st = stirling_weights();
  for_each_mk(8, [&](long m, long k) {
    const Rational expected = stirling_closed(m, k);
    c.expect(specialize(weighted_sum_closed(m, k, st), st) == expected, "stirling closed " + at({{"m", m}, {"k", k}}));
    c.expect(specialize(weighted_sum_bruteforce(m, k, st), st) == expected, "stirling brute " + at({{"m", m}, {"k", k}}));
    for (long b = 1; b <= 3; ++b) {
      const WeightSpec w = b_ary_weights(b, 1);
      const Rational e = b_ary_closed_d1(m, k, b);
      c.expect(specialize(weighted_sum_closed(m, k, w), w) == e, "b-ary closed " + at({{"b", b}, {"m", m}, {"k", k}}));
      c.expect(specialize(weighted_sum_bruteforce(m, k, w), w) == e, "b-ary brute " + at({{"b", b}, {"m", m}, {"k", k}}));
    }
  });
}

void criterion_5(Criterion& c) {
  std::vector<Series> fs{Series::from_coefficients({1, 1}, 9)};
  for (std::uint64_t seed = 101; seed <= 103; ++seed) fs.push_back(random_unit_series(seed, 9));
  for (const Series& f : fs)
    brute_vs(c, power_family_weights(f), [&f](long m, long k) { return power_family_closed(f, m, k); }, "power family");
  for (long r = 0; r <= 2; ++r)
    brute_vs(c, r_ary_labeled_weights(r), [r](long m, long k) { return r_ary_labeled_closed(m, k, r); },
             "r-ary r=" + std::to_string(r));
  for (const BinomialSequence& phi : {BinomialSequence::power(), BinomialSequence::factorial(),
                                      BinomialSequence::abel(Rational(3)), BinomialSequence::exponential()}) {
    const WeightSpec w = binomial_sequence_weights(phi, BinomialSequence::factorial());
    brute_vs(c, w, [&phi](long m, long k) { return binomial_sequence_closed(phi, m, k); }, phi.name());
  }
  brute_vs(c, bell_number_weights(), bell_number_closed, "bell numbers");
}

void criterion_6(Criterion& c) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Series f = random_unit_series(seed * 7919, 8);
    std::vector<Polynomial> xs;
    for (long i = 1; i <= 8; ++i) xs.push_back(power_coeff(f, i - 1, i));
    const BellTable table(8, WeightVector::from_values(xs));
    for (long m = 1; m <= 8; ++m)
      for (long r = 1; r <= m; ++r)
        c.expect(table(m, r) == power_coeff(f, m - r, m) * Rational(gen_binomial(m - 1, r - 1)),
                 "power-coefficient identity " + at({{"seed", static_cast<long>(seed)}, {"m", m}, {"r", r}}));
  }
  for (const BinomialSequence& phi : {BinomialSequence::power(), BinomialSequence::factorial(),
                                      BinomialSequence::abel(Rational(-2)), BinomialSequence::exponential()}) {
    const BellTable table(8, WeightVector([&phi](long i) { return Polynomial(phi(i - 1, 1) * i); }));
    for (long m = 1; m <= 8; ++m)
      for (long r = 1; r <= m; ++r)
        c.expect(table(m, r) == Polynomial(Rational(gen_binomial(m, r)) * phi(m - r, Rational(r))),
                 phi.name() + " " + at({{"m", m}, {"r", r}}));
  }
}

void criterion_7(Criterion& c) {
  const WeightVector a = WeightVector::symbolic();
  const BellTable table(8, a);
  const BellTable shifted(14, WeightVector([a](long i) { return i == 1 ? Polynomial(1) : a(i - 1) * Rational(i); }));
  for (long n = 0; n <= 8; ++n)
    for (long r = 1; r <= 6; ++r)
      c.expect(potential(n, r, table) == shifted(n + r, r) * Rational(Integer(1), gen_binomial(n + r, r)),
               "shifted potential " + at({{"n", n}, {"r", r}}));
  Series x(20);
  x.set(1, 1);
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Series f = random_invertible_series(seed * 31, 20);
    c.expect(f.compose(reversion(f, 20)) == x, "reversion round trip seed=" + std::to_string(seed));
  }
}

void criterion_8(Criterion& c) {
  const WeightSpec w = WeightSpec::symbolic();
  const Series gf = compositions_gf(w, 7, 7, 7);
  for (long m = 0; m <= 7; ++m)
    for (long j = 0; j <= 7; ++j) {
      std::map<long, Polynomial> brute;
      std::map<std::pair<SegmentType, SegmentType>, long> tally;
      for_each_composition(m, j, [&](const Composition& comp) {
        const SegmentProfile prof = segment_profile(composition_to_motzkin(comp));
        brute[comp.zeros()] += profile_weight(prof, w);
        ++tally[{prof.u_counts, prof.h_counts}];
      });
      for (long k = 0; k <= j; ++k) {
        const auto where = at({{"m", m}, {"k", k}, {"j", j}});
        const Polynomial closed = comp_weighted_closed(m, k, j, w);
        c.expect(closed == brute[k], "closed " + where);
        c.expect(gf.coeff(static_cast<int>(m), static_cast<int>(k), static_cast<int>(j)) == brute[k], "series " + where);
        Polynomial by_l;
        for (long l = 0; l <= k; ++l) by_l += comp_weighted_by_hsegments(m, k, j, l, w);
        c.expect(by_l == closed, "h-segment refinement " + where);
      }
      for (const auto& [types, count] : tally)
        c.expect(comp_count_by_type(j, types.first, types.second) == count, "type count " + at({{"m", m}, {"j", j}}));
    }
  for (long m = 0; m <= 10; ++m)
    for (long j = 0; j <= 10; ++j) {
      long direct = 0;
      for_each_composition(m, j, [&](const Composition& comp) {
        bool ok = true;
        for (long p : comp.parts()) ok = ok && (p == 1 || p == 2);
        direct += ok;
      });
      c.expect(restricted_count(m, j, {1, 2}) == direct, "restricted {1,2} " + at({{"m", m}, {"j", j}}));
    }
}

void criterion_9(Criterion& c) {
  const WeightSpec w = WeightSpec::symbolic();
  for (long p = 0; p <= 3; ++p)
    for (long j = 0; j <= 4; ++j) {
      const Series gf = bipartite_gf(w, static_cast<int>(p), static_cast<int>(j), 8);
      c.expect(gf == bipartite_gf(w, 1, static_cast<int>(j), 8).pow(p), "power law " + at({{"p", p}, {"j", j}}));
      for (long m = 0; m <= 7; ++m) {
        std::map<long, Polynomial> by_r;
        std::map<SegmentType, long> tally;
        Polynomial brute;
        for_each_bipartite(m, p, j, [&](const MatrixComposition& mc) {
          const Polynomial wt = entry_weight(mc, w);
          brute += wt;
          by_r[mc.nonzeros()] += wt;
          SegmentType type;
          for (long e : mc.entries())
            if (e > 0) ++type[e];
          ++tally[type];
        });
        const auto where = at({{"m", m}, {"p", p}, {"j", j}});
        c.expect(bipartite_weighted_closed(m, p, j, w) == brute, "closed " + where);
        c.expect(gf.coeff(static_cast<int>(m)) == brute, "series " + where);
        for (long r = 0; r <= m; ++r) c.expect(bipartite_by_nonzeros(m, p, j, r, w) == by_r[r], "by nonzeros " + where);
        for (const auto& type : partitions_as_types(m))
          c.expect(bipartite_count_by_type(p, j, type) == (tally.count(type) ? tally[type] : 0), "type count " + where);
      }
    }
}

void criterion_10(Criterion& c) {
  for (long m = 0; m <= 8; ++m)
    for (long j = 0; j <= 4; ++j) {
      const Integer trees = bounded_outdegree_tree_count(m + 1, j);
      c.expect(trees * (m + 1) == u_coefficient(m + 1, j, m), "tree correspondence " + at({{"m", m}, {"j", j}}));
    }
  c.expect(u_coefficient(4, 2, 3) == 16, "U(4,2,3) = 16");
  c.expect(bounded_outdegree_tree_count(4, 2) == 4, "4 trees on 4 vertices with outdegree <= 2");
}

void criterion_11(Criterion& c) {
  for (long l = 0; l <= 12; ++l)
    for (long j = 0; j <= 12; ++j) {
      Integer lhs = 0;
      for (long i = 0; i <= j; ++i) lhs += sign_pow(i) * gen_binomial(j, i) * gen_binomial(-i, l);
      c.expect(lhs == sign_pow(l - j) * gen_binomial(l - 1, l - j), "alternating sum " + at({{"l", l}, {"j", j}}));
    }
  for (long k = 0; k <= 12; ++k)
    for (long j = 0; j <= k; ++j) {
      Integer lhs = 0;
      for (long l = j; l <= k; ++l) lhs += sign_pow(l - j) * gen_binomial(l, j) * gen_binomial(k, l);
      c.expect(lhs == (j == k ? 1 : 0), "orthogonality " + at({{"j", j}, {"k", k}}));
    }
  for (long n = 0; n <= 12; ++n)
    for (long r = 0; r <= 12; ++r) {
      Integer lhs = 0;
      for (long i = 0; i <= n; ++i) lhs += sign_pow(i) * gen_binomial(n, i) * gen_binomial(n - i, r);
      c.expect(lhs == (r == n ? 1 : 0), "kronecker " + at({{"n", n}, {"r", r}}));
    }
}

void criterion_12(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  const std::string cmd = std::string(SEGSTAT_CLI) + " verify --suite all --max-n 8 > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(WIFEXITED(status) && WEXITSTATUS(status) == 0, "verify --suite all --max-n 8 exit status");
  c.expect(secs <= 300.0, "verify runtime " + std::to_string(secs) + " s > 300 s");
  const auto sequential = run_suite("all", 8, 1);
  const auto parallel = run_suite("all", 8, 4);
  c.expect(format_report(sequential, "text") == format_report(parallel, "text"), "text reports differ");
  c.expect(format_report(sequential, "json") == format_report(parallel, "json"), "json reports differ");
}

struct Entry {
  int id;
  const char* description;
  void (*run)(Criterion&);
};

}  // namespace

int main() {
  const std::array<Entry, 12> criteria{{
      {1, "motzkin triple agreement, 2m+k <= 10, symbolic, <= 60 s", criterion_1},
      {2, "segment refinement and type counts, 2m+k <= 8", criterion_2},
      {3, "Motzkin numbers n <= 10 and Catalan numbers m <= 5", criterion_3},
      {4, "Stirling and b-ary (d = 1, b in 1..3) closed forms, 2m+k <= 8", criterion_4},
      {5, "power-family, r-ary, binomial-sequence and Bell-number weights vs enumeration, 2m+k <= 8", criterion_5},
      {6, "Bell identities for unit-series powers (25 series) and binomial sequences, m <= 8", criterion_6},
      {7, "shifted-argument potential n <= 8, r <= 6; reversion round trip mod x^21, 50 series", criterion_7},
      {8, "compositions m, j <= 7 symbolic; restricted {1,2} m <= 10", criterion_8},
      {9, "bipartite matrices m <= 7, p <= 3, j <= 4; power law to x^8", criterion_9},
      {10, "bounded-outdegree plane trees m <= 8, j <= 4; U(4,2,3) = 16", criterion_10},
      {11, "binomial identities, indices <= 12", criterion_11},
      {12, "verify --suite all --max-n 8 exits 0 within 5 min; parallel == sequential", criterion_12},
  }};
  int failed = 0;
  for (const Entry& e : criteria) {
    std::ostringstream log;
    Criterion c(log);
    const auto start = std::chrono::steady_clock::now();
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = c.failures() == 0;
    failed += !ok;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << e.id << ": " << e.description << " (" << timing << ")\n"
              << log.str();
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
