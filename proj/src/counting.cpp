#include "dyckframe/counting.hpp"

#include "dyckframe/error.hpp"
#include "dyckframe/frames.hpp"

#include <algorithm>
#include <numeric>

namespace dyckframe {

namespace {

// Alternating partial sums A_k = i_k - A_{k-1}, A_0 = i_0, for k = 0..degree.
std::vector<std::int64_t> alternating_sums(const Frame& f) {
  std::vector<std::int64_t> sums;
  sums.reserve(f.degree() + 1);
  std::int64_t acc = 0;
  for (std::size_t k = 0; k <= f.degree(); ++k) {
    acc = f[k] - acc;
    sums.push_back(acc);
  }
  return sums;
}

const Count& entry_or_zero(const std::vector<Count>& row, std::size_t j) {
  static const Count kZero = 0;
  return j < row.size() ? row[j] : kZero;
}

// prod_k (u_k d_k)^{v_k}
Count step_color_weight(const Frame& f, const ColorSpec& colors) {
  Count weight = 1;
  const auto v = up_steps_per_level(f);
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto e = static_cast<std::uint64_t>(v[k]);
    weight *= power(colors.u[k], e) * power(colors.d[k], e);
  }
  return weight;
}

// Sum over weak compositions (k_0..k_nu) of m of prod binom(k_t + i_t - 1, k_t) h_t^{k_t},
// as the coefficient of x^m in prod_t sum_k binom(k + i_t - 1, k) h_t^k x^k.
Count horizontal_weight(const Frame& f, const std::vector<std::uint64_t>& h, std::size_t levels,
                        std::size_t m) {
  std::vector<Count> series(m + 1, 0);
  series[0] = 1;
  for (std::size_t t = 0; t < levels; ++t) {
    const std::int64_t feet = f[t];
    if (feet == 0) continue;  // factor is 1 + 0x + 0x^2 + ...
    std::vector<Count> factor(m + 1);
    Count h_pow = 1;
    for (std::size_t k = 0; k <= m; ++k) {
      factor[k] = binomial(static_cast<std::int64_t>(k) + feet - 1, static_cast<std::int64_t>(k)) * h_pow;
      h_pow *= h[t];
    }
    std::vector<Count> product(m + 1, 0);
    for (std::size_t a = 0; a <= m; ++a) {
      if (series[a] == 0) continue;
      for (std::size_t b = 0; a + b <= m; ++b) product[a + b] += series[a] * factor[b];
    }
    series = std::move(product);
  }
  return series[m];
}

void require_size(const std::vector<std::uint64_t>& v, std::size_t needed, const char* name) {
  if (v.size() < needed)
    throw InvalidArgument(std::string("color vector ") + name + " needs " + std::to_string(needed) +
                          " entries, got " + std::to_string(v.size()));
}

}  // namespace

Count catalan(std::size_t n) {
  std::vector<Count> c(n + 1, 0);
  c[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t k = 0; k < m; ++k) c[m] += c[m - 1 - k] * c[k];
  }
  return c[n];
}

std::vector<std::vector<Count>> feet_level0(std::size_t max_half_length) {
  std::vector<std::vector<Count>> rows(max_half_length + 1);
  for (std::size_t n = 0; n <= max_half_length; ++n) rows[n].assign(n + 2, 0);
  rows[0][1] = 1;
  if (max_half_length >= 1) rows[1][2] = 1;
  for (std::size_t n = 2; n <= max_half_length; ++n) {
    // 2-ped: lift any path of length 2(n-1).
    rows[n][2] = std::accumulate(rows[n - 1].begin(), rows[n - 1].end(), Count(0));
    // j-ped, j > 2: a lifted path of length 2(i+1) glued to a (j-1)-ped path.
    for (std::size_t j = 3; j <= n + 1; ++j) {
      for (std::size_t i = 0; i + 2 <= n; ++i) {
        rows[n][j] += rows[i + 1][2] * entry_or_zero(rows[n - i - 1], j - 1);
      }
    }
  }
  return rows;
}

FootTable::FootTable(std::size_t max_level, std::size_t max_half_length)
    : max_level_(max_level), max_half_length_(max_half_length) {
  entries_.resize(max_level + 1);
  entries_[0] = feet_level0(max_half_length);
  for (std::size_t s = 1; s <= max_level; ++s) {
    auto& level = entries_[s];
    const auto& below = entries_[s - 1];
    level.resize(max_half_length + 1);
    for (std::size_t n = 0; n <= max_half_length; ++n) level[n].assign(n + 2, 0);
    level[0][0] = 1;
    // lift(x) ∧ y with |x| = 2i, |y| = 2(n-i-1): feet of lift(x) at s are feet of x at s-1.
    for (std::size_t n = 1; n <= max_half_length; ++n) {
      for (std::size_t j = 0; j <= n + 1; ++j) {
        Count total = 0;
        for (std::size_t i = 0; i < n; ++i) {
          const auto& lifted = below[i];
          const auto& rest = level[n - i - 1];
          for (std::size_t k = 0; k <= j; ++k) total += entry_or_zero(lifted, k) * entry_or_zero(rest, j - k);
        }
        level[n][j] = std::move(total);
      }
    }
  }
}

Count FootTable::at(std::size_t half_length, std::size_t level, std::size_t feet) const {
  if (half_length > max_half_length_ || level > max_level_) {
    const FootTable larger(std::max(level, max_level_), std::max(half_length, max_half_length_));
    return larger.at(half_length, level, feet);
  }
  return entry_or_zero(entries_[level][half_length], feet);
}

const std::vector<Count>& FootTable::row(std::size_t half_length, std::size_t level) const {
  if (half_length > max_half_length_ || level > max_level_)
    throw InvalidArgument("FootTable::row outside the built bounds");
  return entries_[level][half_length];
}

Count frame_cardinality(const Frame& f) {
  const auto sums = alternating_sums(f);
  Count result = 1;
  for (std::size_t k = 1; k <= f.degree(); ++k) {
    // j_k = A_{k-1} - 2 when k-1 is even, A_{k-1} when odd.
    const std::int64_t j = sums[k - 1] - ((k - 1) % 2 == 0 ? 2 : 0);
    result *= binomial(f[k] - 1, f[k] - j - 1);
  }
  return result;
}

std::vector<std::int64_t> up_steps_per_level(const Frame& f) {
  const auto sums = alternating_sums(f);
  std::vector<std::int64_t> v(f.degree());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = sums[k] + (k % 2 == 0 ? -1 : 1);
  return v;
}

ColorSpec ColorSpec::ones(std::size_t length) {
  const std::size_t nu = length / 2;
  return {std::vector<std::uint64_t>(nu + 1, 1), std::vector<std::uint64_t>(nu, 1),
          std::vector<std::uint64_t>(nu, 1)};
}

Count count_colored_dyck(std::size_t half_length, const ColorSpec& colors, const EnumerationLimits& limits) {
  require_size(colors.u, half_length, "u");
  require_size(colors.d, half_length, "d");
  Count total = 0;
  for (const Frame& f : enumerate_frames(half_length, limits)) {
    total += frame_cardinality(f) * step_color_weight(f, colors);
  }
  return total;
}

Count count_k_motzkin(std::size_t length, std::size_t level, std::uint64_t r) {
  const std::size_t nu = length / 2;
  // No path of length <= 2nu reaches past nu, so every level above it has the same table.
  const std::size_t effective = std::min(level, nu + 1);
  const FootTable table(effective, nu);
  Count total = 0;
  for (std::size_t j = 0; j <= nu; ++j) {
    const auto flat = static_cast<std::int64_t>(length - 2 * j);
    const auto& row = table.row(j, effective);
    Count sum = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] == 0) continue;
      sum += row[i] * binomial(flat + static_cast<std::int64_t>(i) - 1, flat);
    }
    total += sum * power(r, static_cast<std::uint64_t>(flat));
  }
  return total;
}

Count count_motzkin(std::size_t length, const EnumerationLimits& limits) {
  const std::size_t nu = length / 2;
  Count total = 0;
  for (std::size_t j = 0; j <= nu; ++j) {
    Count frames_sum = 0;
    for (const Frame& f : enumerate_frames(j, limits)) frames_sum += frame_cardinality(f);
    total += frames_sum * binomial(static_cast<std::int64_t>(length), static_cast<std::int64_t>(length - 2 * j));
  }
  return total;
}

Count count_colored_motzkin(std::size_t length, const ColorSpec& colors, const EnumerationLimits& limits) {
  const std::size_t nu = length / 2;
  require_size(colors.h, nu + 1, "h");
  require_size(colors.u, nu, "u");
  require_size(colors.d, nu, "d");
  Count total = 0;
  for (std::size_t j = 0; j <= nu; ++j) {
    const std::size_t flat = length - 2 * j;
    for (const Frame& f : enumerate_frames(j, limits)) {
      total += frame_cardinality(f) * step_color_weight(f, colors) * horizontal_weight(f, colors.h, nu + 1, flat);
    }
  }
  return total;
}

std::vector<std::vector<std::int64_t>> weak_compositions(std::int64_t total, std::size_t parts) {
  if (total < 0) throw InvalidArgument("weak_compositions: total must be nonnegative");
  std::vector<std::vector<std::int64_t>> out;
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<std::int64_t> current(parts, 0);
  auto fill = [&](auto&& self, std::size_t pos, std::int64_t remaining) -> void {
    if (pos + 1 == parts) {
      current[pos] = remaining;
      out.push_back(current);
      return;
    }
    for (std::int64_t k = remaining; k >= 0; --k) {
      current[pos] = k;
      self(self, pos + 1, remaining - k);
    }
  };
  fill(fill, 0, total);
  return out;
}

bool binomial_identity_check(std::int64_t m, const std::vector<std::int64_t>& parts) {
  const std::int64_t sum = std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
  const Count lhs = binomial(m + sum - 1, m);
  Count rhs = 0;
  for (const auto& k : weak_compositions(m, parts.size())) {
    Count term = 1;
    for (std::size_t t = 0; t < parts.size(); ++t) term *= binomial(k[t] + parts[t] - 1, k[t]);
    rhs += term;
  }
  return lhs == rhs;
}

}  // namespace dyckframe
