#ifndef SEGSTAT_MOTZKIN_HPP
#define SEGSTAT_MOTZKIN_HPP

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "segstat/bell.hpp"
#include "segstat/polynomial.hpp"
#include "segstat/series.hpp"
#include "segstat/weights.hpp"

namespace segstat {

enum class Step : char { up = 'u', down = 'd', horizontal = 'h' };

/// Lattice path from (0,0) to (n,0) with steps U, D, H that never goes below the axis.
class MotzkinPath {
 public:
  /// Throws std::invalid_argument if the steps do not form a Motzkin path.
  explicit MotzkinPath(std::vector<Step> steps);
  /// From a string over {u, d, h} (case-insensitive).
  static MotzkinPath parse(std::string_view text);

  const std::vector<Step>& steps() const { return steps_; }
  long ups() const;
  long horizontals() const;
  long length() const { return static_cast<long>(steps_.size()); }
  std::string to_string() const;

  friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;
  friend auto operator<=>(const MotzkinPath& a, const MotzkinPath& b) { return a.to_string() <=> b.to_string(); }

 private:
  std::vector<Step> steps_;
};

/// Multiset of run lengths: length -> number of runs of that length.
using SegmentType = std::map<long, long>;

/// Maximal-run decomposition of the U-steps and H-steps of a path.
struct SegmentProfile {
  SegmentType u_counts;
  SegmentType h_counts;

  long u_segments() const;
  long h_segments() const;

  friend bool operator==(const SegmentProfile&, const SegmentProfile&) = default;
};

SegmentProfile segment_profile(const MotzkinPath& p);

/// prod_i w(t_i)^{u_i} prod_i w(s_i)^{h_i}.
Polynomial profile_weight(const SegmentProfile& profile, const WeightSpec& w);

inline constexpr long kDefaultPathBound = 16;

/// Calls visit once per path with m up-steps and k horizontal steps, in
/// lexicographic order with U < D < H. Throws BoundExceeded if 2m + k > bound.
void for_each_path(long m, long k, const std::function<void(const MotzkinPath&)>& visit,
                   long bound = kDefaultPathBound);
std::vector<MotzkinPath> enumerate_paths(long m, long k, long bound = kDefaultPathBound);
Integer count_paths_bruteforce(long m, long k, long bound = kDefaultPathBound);

/// Sum over enumerated paths of the profile weight. With jobs > 1 the path
/// set is split by prefix and reduced in a fixed order.
Polynomial weighted_sum_bruteforce(long m, long k, const WeightSpec& w, long bound = kDefaultPathBound,
                                   unsigned jobs = 1);

/// The same sum from partial Bell and potential polynomials in polynomial time:
///   sum_{j<=k} sum_{j<=l<=k} (-1)^{l-j} binom(l-1, l-j) binom(m+j, j)
///     P_m^{(m+j+1)}(1!t_1, ...)/(m+1)! * l! B_{k,l}(1!s_1, ...)/k!
Polynomial weighted_sum_closed(long m, long k, const WeightSpec& w);

/// sum_{j=0..k} (-1)^{l-j} binom(l-1, l-j) binom(m+j, m) binom(m+j+1, r).
Integer v_coefficient(long m, long k, long r, long l);

/// Weighted sum restricted to paths with r u-segments and l h-segments.
Polynomial weighted_sum_by_segments(long m, long k, long r, long l, const WeightSpec& w);

/// Number of paths with m up-steps, k horizontal steps and the given u- and
/// h-segment types. Throws std::invalid_argument when a type does not match
/// its size and std::logic_error if the formula yields a non-integer.
Integer count_by_type(long m, long k, const SegmentType& u_type, const SegmentType& h_type);

/// Every pair of segment types for paths in the (m, k) class (partitions of m and of k).
std::vector<SegmentType> partitions_as_types(long n);

// ---- Named weight specializations -------------------------------------------

/// t_i = s_i = 1/i!.
WeightSpec stirling_weights();
/// t_i = binom(bi+1, i)/(bi+1), s_i = binom(di+1, i)/(di+1): complete b-ary / d-ary plane trees.
WeightSpec b_ary_weights(long b, long d);
/// t_i = ((r+1)i+1)^{i-1}/i!, s_i = 1: rooted complete r-ary labeled trees.
WeightSpec r_ary_labeled_weights(long r);
/// t_i = (1-qi)^{i-1}/i!, s_i = 1.
WeightSpec abel_weights(const Rational& q);
/// t_i = Bell(i)/i!, s_i = 1.
WeightSpec bell_number_weights();
/// t_i = phi_i(1)/i!, s_i = psi_{i-1}(1)/(i-1)!.
WeightSpec binomial_sequence_weights(const BinomialSequence& phi, const BinomialSequence& psi);
/// binomial_sequence_weights with phi = psi = rising factorial.
WeightSpec factorial_psi_weights();
/// t_i = f_i(i+1)/(i+1)!, s_i = g_{i-1}(i)/i! with f_m(i) = power_coeff(f, m, i).
/// g defaults to 1 + y (so s_i = 1). Indices beyond the series truncation throw.
WeightSpec power_family_weights(const Series& f, const Series& g);
WeightSpec power_family_weights(const Series& f);

/// Named kinds: symbolic, all-ones, stirling, b-ary:b=B,d=D, r-ary:r=R, abel:q=Q,
/// bell-numbers, factorial-psi. Throws std::invalid_argument for anything else.
WeightSpec named_weights(std::string_view kind);

// ---- Closed forms for the specializations -----------------------------------

/// Stirling weights: sum_j (-1)^{k-j} binom(m+j, j) j! (m+j+1)^m S(k, j) / (k! (m+1)!).
Rational stirling_closed(long m, long k);
/// b-ary/d-ary weights, general (b, d). The s-factor for j == k is taken as 1.
Rational b_ary_closed(long m, long k, long b, long d);
/// d = 1 case: binom(m+k+1, k) binom((b+1)m+k+1, m) / ((b+1)m+k+1).
Rational b_ary_closed_d1(long m, long k, long b);
/// power_family_weights(f) sum: binom(m+k+1, k) f_m(2m+k+1) / ((2m+k+1) m!).
Rational power_family_closed(const Series& f, long m, long k);
/// power_family_weights(f, g) sum for k >= 1 (throws std::domain_error at k = 0):
/// sum_j sum_{l>=j} (-1)^{l-j} binom(l, j) g_{k-l}(k)/(k-l)! j(m+j+1)/(k(2m+j+1)) binom(m+j, j) f_m(2m+j+1)/(m+1)!.
Rational power_family_general_closed(const Series& f, const Series& g, long m, long k);
/// r_ary_labeled_weights: binom(m+k+1, k) ((r+2)m+k+1)^{m-1} / m!.
Rational r_ary_labeled_closed(long m, long k, long r);
/// t_i = phi_i(1)/i!, s_i = 1: binom(m+k, k) phi_m(m+k+1) / (m+1)!.
Rational binomial_sequence_closed(const BinomialSequence& phi, long m, long k);
/// abel_weights: binom(m+k+1, k) ((1-q)m+k+1)^{m-1} / m!.
Rational abel_closed(const Rational& q, long m, long k);
/// bell_number_weights: binom(m+k, k) sum_i S(m, i)(m+k+1)^i / (m+1)!.
Rational bell_number_closed(long m, long k);
/// binomial_sequence_weights(phi, psi): double sum over j, l of
/// (-1)^{l-j} binom(l-1, l-j) psi_{k-l}(l)/(k-l)! binom(m+j, j) phi_m(m+j+1)/(m+1)!.
Rational two_sequence_closed(const BinomialSequence& phi, const BinomialSequence& psi, long m, long k);

}  // namespace segstat

#endif  // SEGSTAT_MOTZKIN_HPP
