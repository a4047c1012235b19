#ifndef SEGSTAT_VERIFY_HPP
#define SEGSTAT_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "segstat/series.hpp"

namespace segstat {

struct IdentityResult {
  std::string suite;
  std::string identity;
  std::string range;
  bool passed = true;
  std::optional<std::string> counterexample;
};

/// core-identities, bell, lagrange, motzkin, compositions, matrixcomp.
const std::vector<std::string>& suite_names();

/// Runs one suite (or "all") up to size max_n. Identities run on up to `jobs`
/// threads; results always come back in the same fixed order.
/// Throws std::invalid_argument for an unknown suite.
std::vector<IdentityResult> run_suite(std::string_view suite, long max_n, unsigned jobs = 1);

bool all_passed(const std::vector<IdentityResult>& results);

/// "text": one line per identity; "json": array of {suite, identity, range, status, counterexample?}.
std::string format_report(const std::vector<IdentityResult>& results, std::string_view format);

/// Univariate series 1 + c_1 x + ... + c_n x^n with small random rational c_i (deterministic in seed).
Series random_unit_series(std::uint64_t seed, int n);
/// c_1 x + ... + c_n x^n with c_1 a nonzero rational.
Series random_invertible_series(std::uint64_t seed, int n);

}  // namespace segstat

#endif  // SEGSTAT_VERIFY_HPP
