#include "segstat/matrixcomp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace segstat {

MatrixComposition::MatrixComposition(long rows, long cols, std::vector<long> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0 || static_cast<long>(entries_.size()) != rows * cols)
    throw std::invalid_argument("matrix shape does not match entry count");
  for (long e : entries_)
    if (e < 0) throw std::invalid_argument("matrix entries must be >= 0");
}

long MatrixComposition::sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0L); }
long MatrixComposition::zeros() const { return std::count(entries_.begin(), entries_.end(), 0L); }
long MatrixComposition::nonzeros() const { return static_cast<long>(entries_.size()) - zeros(); }

bool MatrixComposition::is_bipartite() const {
  for (long r = 0; r < rows_; ++r) {
    bool seen_zero = false;
    for (long c = 0; c < cols_; ++c) {
      if (at(r, c) == 0) seen_zero = true;
      else if (seen_zero) return false;
    }
  }
  return true;
}

Composition MatrixComposition::row(long r) const {
  return Composition(std::vector<long>(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_));
}

namespace {

void check_bounds(long m, long p, long j, const MatrixBounds& b) {
  if (m < 0 || p < 0 || j < 0) throw std::invalid_argument("matrix sizes must be >= 0");
  if (m > b.m || p > b.p || j > b.j)
    throw BoundExceeded("matrix enumeration (m=" + std::to_string(m) + ", p=" + std::to_string(p) +
                        ", j=" + std::to_string(j) + ") exceeds bounds");
}

// Fill rows one at a time; each row is a composition of some amount <= remaining.
void matrices_rec(long row, long remaining, long p, long j, bool bipartite, std::vector<long>& entries,
                  const std::function<void(const MatrixComposition&)>& visit) {
  if (row == p) {
    if (remaining == 0) visit(MatrixComposition(p, j, entries));
    return;
  }
  if (row == p - 1) {
    for_each_composition(remaining, j, [&](const Composition& c) {
      if (bipartite && !MatrixComposition(1, j, c.parts()).is_bipartite()) return;
      entries.insert(entries.end(), c.parts().begin(), c.parts().end());
      matrices_rec(row + 1, 0, p, j, bipartite, entries, visit);
      entries.resize(entries.size() - j);
    }, std::max(remaining, j));
    return;
  }
  for (long amount = 0; amount <= remaining; ++amount) {
    if (j == 0 && amount > 0) break;
    for_each_composition(amount, j, [&](const Composition& c) {
      if (bipartite && !MatrixComposition(1, j, c.parts()).is_bipartite()) return;
      entries.insert(entries.end(), c.parts().begin(), c.parts().end());
      matrices_rec(row + 1, remaining - amount, p, j, bipartite, entries, visit);
      entries.resize(entries.size() - j);
    }, std::max(amount, j));
  }
}

}  // namespace

void for_each_bipartite(long m, long p, long j, const std::function<void(const MatrixComposition&)>& visit,
                        MatrixBounds bounds) {
  check_bounds(m, p, j, bounds);
  std::vector<long> entries;
  if (p == 0 || j == 0) {
    if (m == 0) visit(MatrixComposition(p, j, {}));
    return;
  }
  matrices_rec(0, m, p, j, true, entries, visit);
}

std::vector<MatrixComposition> enumerate_bipartite(long m, long p, long j, MatrixBounds bounds) {
  std::vector<MatrixComposition> out;
  for_each_bipartite(m, p, j, [&](const MatrixComposition& mc) { out.push_back(mc); }, bounds);
  return out;
}

void for_each_matrix(long m, long p, long j, const std::function<void(const MatrixComposition&)>& visit,
                     MatrixBounds bounds) {
  check_bounds(m, p, j, bounds);
  std::vector<long> entries;
  if (p == 0 || j == 0) {
    if (m == 0) visit(MatrixComposition(p, j, {}));
    return;
  }
  matrices_rec(0, m, p, j, false, entries, visit);
}

Polynomial matrix_weight(const MatrixComposition& mc, const WeightSpec& w) {
  Polynomial prod(1);
  for (long r = 0; r < mc.rows(); ++r) prod = prod * profile_weight(segment_profile(composition_to_motzkin(mc.row(r))), w);
  return prod;
}

Polynomial entry_weight(const MatrixComposition& mc, const WeightSpec& w) {
  Polynomial prod(1);
  for (long e : mc.entries())
    if (e > 0) prod *= w.t(e);
  return prod;
}

Polynomial bipartite_weighted_bruteforce(long m, long p, long j, const WeightSpec& w, MatrixBounds bounds) {
  Polynomial sum;
  for_each_bipartite(m, p, j, [&](const MatrixComposition& mc) { sum += entry_weight(mc, w); }, bounds);
  return sum;
}

Integer u_coefficient(long p, long j, long r) {
  if (p < 0 || j < 0 || r < 0) throw std::invalid_argument("u_coefficient needs p, j, r >= 0");
  if (p == 0) return r == 0 ? 1 : 0;
  Integer u = 0;
  for (long i = 0; i <= r / (j + 1); ++i)
    u += sign_pow(i) * gen_binomial(p, i) * gen_binomial(p + r - i * (j + 1) - 1, p - 1);
  return u;
}

Polynomial bipartite_by_nonzeros(long m, long p, long j, long r, const WeightSpec& w) {
  if (m < 0 || r < 0) throw std::invalid_argument("bipartite_by_nonzeros: negative size");
  const Integer u = u_coefficient(p, j, r);
  if (u == 0 || r > m) return {};
  return partial_bell(m, r, WeightVector::factorial_scaled(w, Family::t)) *
         make_rational(factorial(r) * u, factorial(m));
}

Polynomial bipartite_weighted_closed(long m, long p, long j, const WeightSpec& w) {
  if (m < 0) throw std::invalid_argument("bipartite_weighted_closed: negative m");
  const BellTable bell(m, WeightVector::factorial_scaled(w, Family::t));
  Polynomial sum;
  for (long r = 0; r <= m; ++r) {
    const Integer u = u_coefficient(p, j, r);
    if (u == 0) continue;
    sum += bell(m, r) * make_rational(factorial(r) * u, factorial(m));
  }
  return sum;
}

Integer bipartite_count_by_type(long p, long j, const SegmentType& entry_type) {
  long r = 0;
  std::vector<long> parts;
  for (const auto& [value, n] : entry_type) {
    if (value < 1 || n < 0) throw std::invalid_argument("entry types need values >= 1 and counts >= 0");
    r += n;
    parts.push_back(n);
  }
  return multinomial(r, parts) * u_coefficient(p, j, r);
}

Integer zero_one_count(long p, long j, long m) { return u_coefficient(p, j, m); }

PlaneTree::PlaneTree(std::vector<long> outdegrees) : outdegrees_(std::move(outdegrees)) {
  if (outdegrees_.empty()) throw std::invalid_argument("a plane tree has at least one vertex");
  long open = 1;
  for (std::size_t i = 0; i < outdegrees_.size(); ++i) {
    if (outdegrees_[i] < 0 || open <= 0) throw std::invalid_argument("invalid preorder outdegree sequence");
    open += outdegrees_[i] - 1;
  }
  if (open != 0) throw std::invalid_argument("invalid preorder outdegree sequence");
}

long PlaneTree::max_outdegree() const { return *std::max_element(outdegrees_.begin(), outdegrees_.end()); }

namespace {

// open = number of vertices still to be placed that some parent already promised.
void trees_rec(long placed, long v, long open, long cap, std::vector<long>& seq,
               const std::function<void(const PlaneTree&)>& visit) {
  if (placed == v) {
    if (open == 0) visit(PlaneTree(seq));
    return;
  }
  if (open == 0) return;
  const long left_after = v - placed - 1;
  for (long d = 0; d <= cap; ++d) {
    const long next_open = open - 1 + d;
    if (next_open > left_after) break;
    if (next_open == 0 && left_after > 0) continue;
    seq.push_back(d);
    trees_rec(placed + 1, v, next_open, cap, seq, visit);
    seq.pop_back();
  }
}

}  // namespace

void for_each_plane_tree(long v, long max_outdegree, const std::function<void(const PlaneTree&)>& visit, long bound) {
  if (v < 1 || max_outdegree < 0) throw std::invalid_argument("plane trees need v >= 1 and j >= 0");
  if (v > bound) throw BoundExceeded("plane tree enumeration: v = " + std::to_string(v) + " exceeds bound");
  std::vector<long> seq;
  trees_rec(0, v, 1, max_outdegree, seq, visit);
}

Integer bounded_outdegree_tree_count(long v, long j, long bound) {
  Integer n = 0;
  for_each_plane_tree(v, j, [&](const PlaneTree&) { ++n; }, bound);
  return n;
}

Integer u_tree_formula(long m, long j) {
  Integer u = 0;
  for (long i = 0; i <= m / (j + 1); ++i) u += sign_pow(i) * gen_binomial(m + 1, i) * gen_binomial(2 * m - i * (j + 1), m);
  return u;
}

}  // namespace segstat
