#ifndef SEGSTAT_MATRIXCOMP_HPP
#define SEGSTAT_MATRIXCOMP_HPP

#include <functional>
#include <map>
#include <vector>

#include "segstat/compositions.hpp"

namespace segstat {

/// p x j matrix of nonnegative integers, row-major.
class MatrixComposition {
 public:
  MatrixComposition(long rows, long cols, std::vector<long> entries);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  long at(long r, long c) const { return entries_[r * cols_ + c]; }
  const std::vector<long>& entries() const { return entries_; }
  long sum() const;
  long nonzeros() const;
  long zeros() const;
  /// Every row has all its nonzero entries before all its zero entries.
  bool is_bipartite() const;
  Composition row(long r) const;

  friend auto operator<=>(const MatrixComposition&, const MatrixComposition&) = default;

 private:
  long rows_;
  long cols_;
  std::vector<long> entries_;
};

struct MatrixBounds {
  long m = 10;
  long p = 4;
  long j = 5;
};

/// Each p x j bipartite matrix composition of m exactly once (rows chosen in
/// ascending lexicographic order). Throws BoundExceeded beyond `bounds`.
void for_each_bipartite(long m, long p, long j, const std::function<void(const MatrixComposition&)>& visit,
                        MatrixBounds bounds = {});
std::vector<MatrixComposition> enumerate_bipartite(long m, long p, long j, MatrixBounds bounds = {});

/// Every p x j nonnegative matrix with entry sum m (not only bipartite ones).
void for_each_matrix(long m, long p, long j, const std::function<void(const MatrixComposition&)>& visit,
                     MatrixBounds bounds = {});

/// prod over rows of the u-/h-segment weight of the row's Motzkin embedding.
Polynomial matrix_weight(const MatrixComposition& mc, const WeightSpec& w);

/// prod over nonzero entries e of t_e (the u-segment weight of all rows together).
Polynomial entry_weight(const MatrixComposition& mc, const WeightSpec& w);

/// Brute-force sum of entry_weight over bipartite matrices.
Polynomial bipartite_weighted_bruteforce(long m, long p, long j, const WeightSpec& w, MatrixBounds bounds = {});

/// U_{p,j,r} = sum_{i=0}^{floor(r/(j+1))} (-1)^i binom(p, i) binom(p + r - i(j+1) - 1, p - 1),
/// the coefficient of z^r in ((1 - z^{j+1})/(1 - z))^p; U_{0,j,r} = [r = 0].
Integer u_coefficient(long p, long j, long r);

/// sum_{r=0..m} r! U_{p,j,r} B_{m,r}(1!t_1, ...)/m!.
Polynomial bipartite_weighted_closed(long m, long p, long j, const WeightSpec& w);

/// Restriction to matrices with r nonzero entries: r! B_{m,r}(1!t_1, ...) U_{p,j,r}/m!.
Polynomial bipartite_by_nonzeros(long m, long p, long j, long r, const WeightSpec& w);

/// Bipartite matrices whose nonzero entries have the given type (value -> multiplicity).
Integer bipartite_count_by_type(long p, long j, const SegmentType& entry_type);

/// Bipartite (0,1)-matrices with m ones: U_{p,j,m}.
Integer zero_one_count(long p, long j, long m);

/// Plane tree stored as its preorder outdegree sequence.
class PlaneTree {
 public:
  /// Throws std::invalid_argument unless the sequence is a valid preorder outdegree sequence.
  explicit PlaneTree(std::vector<long> outdegrees);

  const std::vector<long>& outdegrees() const { return outdegrees_; }
  long vertices() const { return static_cast<long>(outdegrees_.size()); }
  long max_outdegree() const;

 private:
  std::vector<long> outdegrees_;
};

inline constexpr long kTreeBound = 10;

void for_each_plane_tree(long v, long max_outdegree, const std::function<void(const PlaneTree&)>& visit,
                         long bound = kTreeBound);
/// Plane trees on v vertices with every outdegree <= j, counted by exhaustive generation.
Integer bounded_outdegree_tree_count(long v, long j, long bound = kTreeBound);

/// Closed expression sum_i (-1)^i binom(m+1, i) binom(2m - i(j+1), m).
Integer u_tree_formula(long m, long j);

}  // namespace segstat

#endif  // SEGSTAT_MATRIXCOMP_HPP
