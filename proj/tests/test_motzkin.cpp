#include <doctest.h>

#include <algorithm>
#include <set>

#include "segstat/lagrange.hpp"
#include "segstat/motzkin.hpp"

using namespace segstat;

namespace {

Polynomial t(unsigned i) { return Polynomial::variable(Family::t, i); }
Polynomial s(unsigned i) { return Polynomial::variable(Family::s, i); }

std::set<std::string> path_strings(long m, long k) {
  std::set<std::string> out;
  for (const auto& p : enumerate_paths(m, k)) out.insert(p.to_string());
  return out;
}

}  // namespace

TEST_CASE("path validation") {
  CHECK(MotzkinPath::parse("UHD").to_string() == "uhd");
  CHECK_THROWS_AS(MotzkinPath::parse("du"), std::invalid_argument);
  CHECK_THROWS_AS(MotzkinPath::parse("uu"), std::invalid_argument);
  CHECK_THROWS_AS(MotzkinPath::parse("uxd"), std::invalid_argument);
}

TEST_CASE("path enumeration") {
  CHECK(path_strings(1, 1) == std::set<std::string>{"uhd", "udh", "hud"});
  CHECK(path_strings(0, 4) == std::set<std::string>{"hhhh"});
  CHECK(path_strings(2, 0) == std::set<std::string>{"uudd", "udud"});
  const auto paths = enumerate_paths(2, 2);
  CHECK(std::is_sorted(paths.begin(), paths.end(), [](const MotzkinPath& a, const MotzkinPath& b) {
    const auto rank = [](Step s) { return s == Step::up ? 0 : s == Step::down ? 1 : 2; };
    return std::lexicographical_compare(a.steps().begin(), a.steps().end(), b.steps().begin(), b.steps().end(),
                                        [&](Step x, Step y) { return rank(x) < rank(y); });
  }));
  CHECK_THROWS_AS(enumerate_paths(9, 0), BoundExceeded);
}

TEST_CASE("segment profiles") {
  const auto uudd = segment_profile(MotzkinPath::parse("uudd"));
  CHECK(uudd.u_counts == SegmentType{{2, 1}});
  CHECK(uudd.h_counts.empty());
  const auto uhd = segment_profile(MotzkinPath::parse("uhd"));
  CHECK(uhd.u_counts == SegmentType{{1, 1}});
  CHECK(uhd.h_counts == SegmentType{{1, 1}});
  const auto mixed = segment_profile(MotzkinPath::parse("uhhdud"));
  CHECK(mixed.u_counts == SegmentType{{1, 2}});
  CHECK(mixed.h_counts == SegmentType{{2, 1}});
  CHECK(mixed.u_segments() == 2);
  CHECK(mixed.h_segments() == 1);
}

TEST_CASE("weighted sums: enumeration and closed form") {
  const WeightSpec w = WeightSpec::symbolic();
  CHECK(weighted_sum_bruteforce(1, 1, w) == Polynomial(3) * t(1) * s(1));
  CHECK(weighted_sum_bruteforce(2, 0, w) == t(1).pow(2) + t(2));
  CHECK(weighted_sum_bruteforce(0, 3, w) == s(3));
  CHECK(weighted_sum_closed(1, 1, w) == Polynomial(3) * t(1) * s(1));
  CHECK(weighted_sum_closed(2, 0, w) == t(1).pow(2) + t(2));
  for (unsigned k = 1; k <= 5; ++k) CHECK(weighted_sum_closed(0, k, w) == s(k));
  CHECK(weighted_sum_closed(0, 0, w) == Polynomial(1));
}

TEST_CASE("triple agreement for 2m+k <= 10") {
  const WeightSpec w = WeightSpec::symbolic();
  const Series gf = motzkin_gf(w, 5, 10);
  for (long m = 0; 2 * m <= 10; ++m)
    for (long k = 0; 2 * m + k <= 10; ++k) {
      const Polynomial brute = weighted_sum_bruteforce(m, k, w);
      CHECK(weighted_sum_closed(m, k, w) == brute);
      CHECK(gf.coeff(static_cast<int>(m), static_cast<int>(k)) == brute);
    }
}

TEST_CASE("v coefficients and segment refinement") {
  CHECK(v_coefficient(1, 1, 1, 1) == 6);
  for (long m = 0; m <= 5; ++m)
    for (long r = 0; r <= m + 1; ++r) CHECK(v_coefficient(m, 0, r, 0) == gen_binomial(m + 1, r));
  CHECK(v_coefficient(2, 1, 1, 1) == 12);
  const WeightSpec w = WeightSpec::symbolic();
  CHECK(weighted_sum_by_segments(1, 1, 1, 1, w) == Polynomial(3) * t(1) * s(1));
  for (long m = 1; m <= 3; ++m)
    for (long l = 0; l <= 2; ++l) CHECK(weighted_sum_by_segments(m, 2, 0, l, w).is_zero());
}

TEST_CASE("segment-type counts") {
  CHECK(count_by_type(1, 1, {{1, 1}}, {{1, 1}}) == 3);
  CHECK(count_by_type(2, 0, {{2, 1}}, {}) == 1);
  CHECK(count_by_type(2, 0, {{1, 2}}, {}) == 1);
  CHECK_THROWS_AS(count_by_type(2, 0, {{1, 1}}, {}), std::invalid_argument);
  for (long m = 0; 2 * m <= 8; ++m)
    for (long k = 0; 2 * m + k <= 8; ++k) {
      Integer total = 0;
      for (const auto& ut : partitions_as_types(m))
        for (const auto& ht : partitions_as_types(k)) {
          const Integer c = count_by_type(m, k, ut, ht);
          CHECK(c >= 0);
          total += c;
        }
      CHECK(total == count_paths_bruteforce(m, k));
    }
}

TEST_CASE("named weights") {
  CHECK(named_weights("stirling").value(Family::t, 3) == Rational(1, 6));
  CHECK(named_weights("stirling").value(Family::s, 3) == Rational(1, 6));
  CHECK(named_weights("b-ary:b=1,d=1").value(Family::t, 2) == 1);
  CHECK(named_weights("abel:q=0").value(Family::t, 4) == Rational(1, 24));
  CHECK(named_weights("abel:q=-2").value(Family::t, 2) == Rational(5, 2));
  CHECK(named_weights("r-ary:r=1").value(Family::s, 5) == 1);
  CHECK(named_weights("bell-numbers").value(Family::t, 3) == Rational(5, 6));
  CHECK_FALSE(named_weights("symbolic").value(Family::t, 1).has_value());
  CHECK_THROWS_AS(named_weights("b-ary:b=x"), std::invalid_argument);
  CHECK_THROWS_AS(named_weights("unknown"), std::invalid_argument);
}

TEST_CASE("motzkin numbers from all-ones weights") {
  const long motzkin[] = {1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188};
  const WeightSpec ones = WeightSpec::all_ones();
  for (long n = 0; n <= 10; ++n) {
    Integer brute = 0;
    Rational closed = 0;
    for (long m = 0; 2 * m <= n; ++m) {
      brute += count_paths_bruteforce(m, n - 2 * m);
      closed += specialize(weighted_sum_closed(m, n - 2 * m, ones), ones);
    }
    CHECK(brute == motzkin[n]);
    CHECK(closed == motzkin[n]);
  }
}

TEST_CASE("specialized closed forms against enumeration") {
  for (long m = 0; 2 * m <= 8; ++m)
    for (long k = 0; 2 * m + k <= 8; ++k) {
      const WeightSpec st = stirling_weights();
      CHECK(specialize(weighted_sum_bruteforce(m, k, st), st) == stirling_closed(m, k));
      for (long b = 1; b <= 3; ++b) {
        const WeightSpec w = b_ary_weights(b, 1);
        CHECK(specialize(weighted_sum_bruteforce(m, k, w), w) == b_ary_closed_d1(m, k, b));
        CHECK(b_ary_closed(m, k, b, 1) == b_ary_closed_d1(m, k, b));
      }
      for (long r = 0; r <= 2; ++r) {
        const WeightSpec w = r_ary_labeled_weights(r);
        CHECK(specialize(weighted_sum_bruteforce(m, k, w), w) == r_ary_labeled_closed(m, k, r));
      }
      const WeightSpec bell = bell_number_weights();
      CHECK(specialize(weighted_sum_bruteforce(m, k, bell), bell) == bell_number_closed(m, k));
    }
}

TEST_CASE("b-ary and d-ary weights") {
  CHECK(b_ary_weights(1, 1).value(Family::t, 3) == 1);
  CHECK(b_ary_weights(2, 1).value(Family::t, 2) == 2);
  CHECK(b_ary_weights(1, 2).value(Family::s, 3) == 5);
  CHECK(b_ary_closed_d1(1, 0, 1) == 1);
  CHECK(b_ary_closed_d1(2, 0, 1) == 2);
  for (long m = 0; 2 * m <= 6; ++m)
    for (long k = 0; 2 * m + k <= 6; ++k)
      for (long d = 1; d <= 3; ++d) {
        const WeightSpec w = b_ary_weights(2, d);
        CHECK(specialize(weighted_sum_bruteforce(m, k, w), w) == b_ary_closed(m, k, 2, d));
      }
}

TEST_CASE("parallel enumeration matches sequential") {
  const WeightSpec w = WeightSpec::symbolic();
  CHECK(weighted_sum_bruteforce(3, 4, w, kDefaultPathBound, 4) == weighted_sum_bruteforce(3, 4, w));
  CHECK(weighted_sum_bruteforce(0, 1, w, kDefaultPathBound, 3) == s(1));
}
