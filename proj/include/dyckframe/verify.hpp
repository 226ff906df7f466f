#pragma once

#include "dyckframe/count.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace dyckframe {

struct VerifyCheck {
  std::string name;
  std::string parameters;
  Count expected;
  Count actual;
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  std::size_t passed() const;
  std::size_t failed() const { return checks.size() - passed(); }
  bool ok() const { return failed() == 0; }
};

struct VerifyOptions {
  /// Corrupts one result so callers can see the harness fail.
  bool inject_fault = false;
};

/// Runs every formula against the enumeration oracle up to half-length max_n.
/// Aggregate checks report the number of compared items as `expected` and the number
/// that agreed as `actual`.
///
///   frame-count        |frames(n)| = 2^{n-1}, 1 <= n <= max_n
///   frames-vs-oracle   frames(n) = {frame_of(p)}, n <= max_n
///   cardinality        per frame of length <= 2 max_n, closed form vs brute force
///   catalan-sum        sum of cardinalities = C(n)
///   level0-sum         sum_j p^{2n}_{0,j} = C(n)
///   feet-table         p^{2n}_{s,j} vs oracle, n, s <= max_n
///   canonical          frame_of(canonical_representative(I)) = I
///   consequences       consequences_hold on every frame
///   up-steps           v_k vs up steps counted on the canonical path, sum v_k = n
///   motzkin            count_motzkin(m) vs enumeration, m <= min(2 max_n, 12)
///   k-motzkin          m <= min(2 max_n, 10), k <= 5
///   colored-dyck       weighted oracle, fixed color vectors with entries <= 3
///   colored-motzkin    weighted oracle, m <= min(2 max_n, 8)
///   decider-agreement  sequences of <= min(8, max_n + 1) entries, sum <= min(21, 2 max_n + 5)
///   binomial-identity  m <= min(6, max_n), positive parts with sum <= 8
VerifyReport run_verification(std::size_t max_n, const VerifyOptions& options = {});

}  // namespace dyckframe
