#ifndef SEGSTAT_COMPOSITIONS_HPP
#define SEGSTAT_COMPOSITIONS_HPP

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "segstat/motzkin.hpp"

namespace segstat {

/// Ordered tuple of nonnegative parts. Embeds into Motzkin paths with a part
/// a >= 1 becoming u^a d^a and a zero part becoming a single h.
class Composition {
 public:
  explicit Composition(std::vector<long> parts);

  const std::vector<long>& parts() const { return parts_; }
  long sum() const;
  long num_parts() const { return static_cast<long>(parts_.size()); }
  long zeros() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<long> parts_;
};

inline constexpr long kDefaultCompositionBound = 12;

/// All j-tuples of nonnegative integers summing to m, ascending lexicographic.
/// Throws BoundExceeded when m or j exceeds bound.
void for_each_composition(long m, long j, const std::function<void(const Composition&)>& visit,
                          long bound = kDefaultCompositionBound);
std::vector<Composition> enumerate_compositions(long m, long j, long bound = kDefaultCompositionBound);

MotzkinPath composition_to_motzkin(const Composition& c);

/// Brute-force weighted sum over compositions of m with j parts, k of them zero.
Polynomial comp_weighted_bruteforce(long m, long k, long j, const WeightSpec& w,
                                    long bound = kDefaultCompositionBound);

/// P_k^{(j-k+1)}(1!s_1, ...)/k! * (j-k)! B_{m,j-k}(1!t_1, ...)/m!; zero when j < k.
Polynomial comp_weighted_closed(long m, long k, long j, const WeightSpec& w);

/// Restriction of comp_weighted_closed to compositions with l h-segments (maximal zero runs).
Polynomial comp_weighted_by_hsegments(long m, long k, long j, long l, const WeightSpec& w);

/// Number of compositions with j parts whose nonzero parts have type u_type and
/// whose zero runs have type h_type. Throws std::invalid_argument unless the
/// number of nonzero parts equals j - k, k being the total length of the zero runs.
Integer comp_count_by_type(long j, const SegmentType& u_type, const SegmentType& h_type);

/// Compositions of m into j positive parts, every part in `allowed` (all
/// positive integers when empty) and none equal to `forbidden`.
Integer restricted_count(long m, long j, const std::set<long>& allowed, std::optional<long> forbidden = std::nullopt);

}  // namespace segstat

#endif  // SEGSTAT_COMPOSITIONS_HPP
