#pragma once

#include "dyckframe/count.hpp"
#include "dyckframe/frame.hpp"
#include "dyckframe/paths.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dyckframe {

/// C(n) by C(n) = sum_{k<n} C(n-1-k) C(k), C(0) = 1.
Count catalan(std::size_t n);

/// Number of Dyck paths of length 2n with j feet at level s, for every
/// 0 <= s <= max_level, 0 <= n <= max_half_length. Immutable once built.
class FootTable {
 public:
  /// Level 0 by lifting plus gluing on the left, level s > 0 from level s-1.
  FootTable(std::size_t max_level, std::size_t max_half_length);

  std::size_t max_level() const { return max_level_; }
  std::size_t max_half_length() const { return max_half_length_; }

  /// p^{2n}_{s,j}. Zero past the nonzero range. Queries outside the built bounds are
  /// answered from a larger table built on the spot.
  Count at(std::size_t half_length, std::size_t level, std::size_t feet) const;

  /// Row (j = 0 .. n+1) for a given n and s, within the built bounds.
  const std::vector<Count>& row(std::size_t half_length, std::size_t level) const;

 private:
  std::size_t max_level_;
  std::size_t max_half_length_;
  // entries_[s][n][j], j in 0..n+1
  std::vector<std::vector<std::vector<Count>>> entries_;
};

/// Level-0 slice only: rows[n][j] = p^{2n}_{0,j}, j in 0..n+1.
std::vector<std::vector<Count>> feet_level0(std::size_t max_half_length);

inline FootTable feet_table(std::size_t max_level, std::size_t max_half_length) {
  return FootTable(max_level, max_half_length);
}

/// Number of paths with frame f: prod_{k=1..deg} binom(i_k - 1, i_k - j_k - 1) with
/// j_1 = i_0 - 2, j_2 = i_1 - i_0, j_3 = i_2 - i_1 + i_0 - 2, ...
Count frame_cardinality(const Frame& f);

/// v_k, the number of up steps from level k to k+1 (k < degree). Same for every path of f.
std::vector<std::int64_t> up_steps_per_level(const Frame& f);

/// Per-level color multiplicities. h[k]: horizontal steps at level k (0 forbids them);
/// u[k], d[k]: up/down steps between levels k and k+1.
struct ColorSpec {
  std::vector<std::uint64_t> h;
  std::vector<std::uint64_t> u;
  std::vector<std::uint64_t> d;

  /// All ones, sized for paths of length `length`.
  static ColorSpec ones(std::size_t length);
};

/// Dyck paths of length 2n, colored by u and d. Requires u.size(), d.size() >= n.
Count count_colored_dyck(std::size_t half_length, const ColorSpec& colors,
                         const EnumerationLimits& limits = {});

/// Motzkin paths of length n with horizontal steps only on level k, each horizontal step
/// in one of r colors.
Count count_k_motzkin(std::size_t length, std::size_t level, std::uint64_t r = 1);

/// Motzkin number, summed over frames.
Count count_motzkin(std::size_t length, const EnumerationLimits& limits = {});

/// Motzkin paths of length n colored by h, u and d. With nu = n / 2, requires
/// h.size() >= nu + 1 and u.size(), d.size() >= nu.
Count count_colored_motzkin(std::size_t length, const ColorSpec& colors,
                            const EnumerationLimits& limits = {});

/// All sequences of `parts` nonnegative integers summing to `total`, in decreasing
/// lexicographic order. parts = 0 yields the empty composition iff total = 0.
std::vector<std::vector<std::int64_t>> weak_compositions(std::int64_t total, std::size_t parts);

/// binom(m + sum(parts) - 1, m) == sum over weak compositions k of m into parts.size() parts
/// of prod binom(k_t + i_t - 1, k_t).
bool binomial_identity_check(std::int64_t m, const std::vector<std::int64_t>& parts);

}  // namespace dyckframe
