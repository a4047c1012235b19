#include <doctest.h>

#include <set>

#include "segstat/lagrange.hpp"
#include "segstat/matrixcomp.hpp"

using namespace segstat;

namespace {

Polynomial t(unsigned i) { return Polynomial::variable(Family::t, i); }

std::set<std::vector<long>> entry_set(const std::vector<MatrixComposition>& ms) {
  std::set<std::vector<long>> out;
  for (const auto& m : ms) out.insert(m.entries());
  return out;
}

}  // namespace

TEST_CASE("bipartite enumeration") {
  CHECK(entry_set(enumerate_bipartite(2, 2, 1)) == std::set<std::vector<long>>{{2, 0}, {0, 2}, {1, 1}});
  CHECK(entry_set(enumerate_bipartite(0, 3, 2)) == std::set<std::vector<long>>{{0, 0, 0, 0, 0, 0}});
  CHECK(entry_set(enumerate_bipartite(2, 1, 2)) == std::set<std::vector<long>>{{2, 0}, {1, 1}});
  for (const auto& mc : enumerate_bipartite(4, 3, 3)) CHECK(mc.is_bipartite());
  CHECK_FALSE(MatrixComposition(1, 2, {0, 2}).is_bipartite());
  CHECK_THROWS_AS(enumerate_bipartite(11, 1, 1), BoundExceeded);
}

TEST_CASE("u coefficients") {
  for (long j = 0; j <= 4; ++j)
    for (long r = 0; r <= 6; ++r) CHECK(u_coefficient(1, j, r) == (r <= j ? 1 : 0));
  CHECK(u_coefficient(2, 1, 2) == 1);
  CHECK(u_coefficient(4, 2, 3) == 16);
  CHECK(u_coefficient(0, 3, 0) == 1);
  CHECK(u_coefficient(0, 3, 2) == 0);
}

TEST_CASE("bipartite weighted closed form") {
  const WeightSpec w = WeightSpec::symbolic();
  CHECK(bipartite_weighted_closed(2, 2, 1, w) == t(2) * Rational(2) + t(1).pow(2));
  CHECK(bipartite_weighted_closed(0, 0, 3, w) == Polynomial(1));
  for (long m = 1; m <= 4; ++m) CHECK(bipartite_weighted_closed(m, 0, 3, w).is_zero());
  CHECK(bipartite_weighted_closed(2, 1, 2, w) == t(2) + t(1).pow(2));
  CHECK(bipartite_by_nonzeros(2, 2, 1, 2, w) == t(1).pow(2));
  CHECK(bipartite_by_nonzeros(2, 2, 1, 1, w) == t(2) * Rational(2));
}

TEST_CASE("closed form, enumeration and series agree for m <= 7, p <= 3, j <= 4") {
  const WeightSpec w = WeightSpec::symbolic();
  for (long p = 0; p <= 3; ++p)
    for (long j = 0; j <= 4; ++j) {
      const Series gf = bipartite_gf(w, static_cast<int>(p), static_cast<int>(j), 7);
      CHECK(gf == bipartite_gf(w, 1, static_cast<int>(j), 7).pow(p));
      for (long m = 0; m <= 7; ++m) {
        const Polynomial brute = bipartite_weighted_bruteforce(m, p, j, w);
        CHECK(bipartite_weighted_closed(m, p, j, w) == brute);
        CHECK(gf.coeff(static_cast<int>(m)) == brute);
        Polynomial by_r;
        for (long r = 0; r <= m; ++r) by_r += bipartite_by_nonzeros(m, p, j, r, w);
        CHECK(by_r == brute);
      }
    }
}

TEST_CASE("entry-type counts") {
  CHECK(bipartite_count_by_type(2, 1, {{1, 2}}) == 1);
  CHECK(bipartite_count_by_type(2, 1, {{2, 1}}) == 2);
  for (long p = 1; p <= 3; ++p) CHECK(bipartite_count_by_type(p, 2, {}) == 1);
}

TEST_CASE("zero-one matrices") {
  CHECK(zero_one_count(2, 2, 2) == 3);
  for (long m = 0; m <= 5; ++m) CHECK(zero_one_count(1, 3, m) == (m <= 3 ? 1 : 0));
  CHECK(zero_one_count(4, 2, 3) == 16);
  const WeightSpec w("zero-one", [](long i) -> WeightValue { return Rational(i == 1 ? 1 : 0); },
                     [](long) -> WeightValue { return Rational(1); });
  CHECK(specialize(bipartite_weighted_closed(3, 4, 2, w), w) == 16);
}

TEST_CASE("plane trees") {
  CHECK(bounded_outdegree_tree_count(4, 2) == 4);
  CHECK(u_coefficient(4, 2, 3) == 4 * bounded_outdegree_tree_count(4, 2));
  CHECK(bounded_outdegree_tree_count(4, 3) == 5);
  CHECK(bounded_outdegree_tree_count(1, 0) == 1);
  CHECK(bounded_outdegree_tree_count(6, 5) == 42);
  CHECK_THROWS_AS(PlaneTree({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(bounded_outdegree_tree_count(11, 2), BoundExceeded);
  for (long m = 0; m <= 8; ++m)
    for (long j = 1; j <= 4; ++j) {
      const Integer trees = bounded_outdegree_tree_count(m + 1, j);
      CHECK(trees * (m + 1) == u_coefficient(m + 1, j, m));
      CHECK(u_tree_formula(m, j) == u_coefficient(m + 1, j, m));
    }
}

TEST_CASE("general matrix compositions against enumeration") {
  const WeightSpec w = WeightSpec::symbolic();
  for (long p = 0; p <= 2; ++p)
    for (long j = 0; j <= 3; ++j) {
      const Series gf = matrix_gf(w, static_cast<int>(p), static_cast<int>(j), 5, static_cast<int>(p * j));
      for (long m = 0; m <= 5; ++m)
        for (long k = 0; k <= p * j; ++k) {
          Polynomial brute;
          for_each_matrix(m, p, j, [&](const MatrixComposition& mc) {
            if (mc.zeros() == k) brute += matrix_weight(mc, w);
          });
          CHECK(gf.coeff(static_cast<int>(m), static_cast<int>(k)) == brute);
        }
    }
}
