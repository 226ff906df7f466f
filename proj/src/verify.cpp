#include "dyckframe/verify.hpp"

#include "dyckframe/counting.hpp"
#include "dyckframe/frames.hpp"
#include "dyckframe/paths.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dyckframe {

namespace {

std::string spaced(const Frame& f) {
  std::string out = "(";
  for (std::size_t k = 0; k < f.counts().size(); ++k) {
    if (k > 0) out.push_back(' ');
    out += std::to_string(f[k]);
  }
  return out + ")";
}

// Product over steps of the colors available to each step.
Count colored_weight(const Path& p, const ColorSpec& c) {
  Count w = 1;
  std::size_t level = 0;
  for (Step s : p.steps()) {
    switch (s) {
      case Step::Up: w *= c.u[level]; ++level; break;
      case Step::Down: --level; w *= c.d[level]; break;
      case Step::Horizontal: w *= level < c.h.size() ? c.h[level] : 0; break;
    }
  }
  return w;
}

ColorSpec sample_colors(std::size_t length) {
  const std::size_t nu = length / 2;
  ColorSpec c;
  for (std::size_t k = 0; k <= nu; ++k) c.h.push_back((k + 2) % 4);
  for (std::size_t k = 0; k < nu; ++k) {
    c.u.push_back(1 + k % 3);
    c.d.push_back(1 + (k + 1) % 3);
  }
  return c;
}

class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {}

  void add(std::string name, std::string parameters, Count expected, Count actual) {
    const bool pass = expected == actual;
    report_.checks.push_back({std::move(name), std::move(parameters), std::move(expected), std::move(actual), pass});
  }

 private:
  VerifyReport& report_;
};

void check_decider_agreement(Recorder& rec, std::size_t entries, std::int64_t max_sum) {
  std::size_t compared = 0;
  std::size_t agreed = 0;
  std::vector<std::int64_t> current(entries, 0);
  auto sweep = [&](auto&& self, std::size_t pos, std::int64_t remaining) -> void {
    if (pos == entries) {
      const RawSequence seq(current);
      ++compared;
      if (is_admissible_trace(seq) == is_admissible_closed(seq)) ++agreed;
      return;
    }
    for (std::int64_t v = 0; v <= remaining; ++v) {
      current[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  sweep(sweep, 0, max_sum);
  rec.add("decider-agreement", "entries<=" + std::to_string(entries) + " sum<=" + std::to_string(max_sum),
          compared, agreed);
}

void check_binomial_identity(Recorder& rec, std::int64_t max_m, std::int64_t max_parts_sum) {
  std::size_t compared = 0;
  std::size_t held = 0;
  std::vector<std::int64_t> parts;
  // Every vector of positive integers with sum <= max_parts_sum.
  auto sweep = [&](auto&& self, std::int64_t remaining) -> void {
    if (!parts.empty()) {
      for (std::int64_t m = 0; m <= max_m; ++m) {
        ++compared;
        if (binomial_identity_check(m, parts)) ++held;
      }
    }
    for (std::int64_t v = 1; v <= remaining; ++v) {
      parts.push_back(v);
      self(self, remaining - v);
      parts.pop_back();
    }
  };
  sweep(sweep, max_parts_sum);
  rec.add("binomial-identity", "m<=" + std::to_string(max_m) + " sum<=" + std::to_string(max_parts_sum),
          compared, held);
}

}  // namespace

std::size_t VerifyReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.pass; }));
}

VerifyReport run_verification(std::size_t max_n, const VerifyOptions& options) {
  VerifyReport report;
  Recorder rec(report);
  const FootTable table(max_n, max_n);

  for (std::size_t n = 0; n <= max_n; ++n) {
    const std::string at_n = "n=" + std::to_string(n);
    const auto frames = enumerate_frames(n);
    const auto paths = enumerate_dyck(n);

    if (n >= 1) rec.add("frame-count", at_n, Count(1) << (n - 1), frames.size());

    std::map<Frame, std::size_t> oracle;
    for (const Path& p : paths) ++oracle[frame_of(p)];
    // |union| vs |intersection|: equal iff the two sets coincide.
    std::set<Frame> both;
    std::set<Frame> either(frames.begin(), frames.end());
    for (const auto& [f, _] : oracle) {
      if (either.contains(f)) both.insert(f);
      either.insert(f);
    }
    rec.add("frames-vs-oracle", at_n, either.size(), both.size());

    Count card_sum = 0;
    std::size_t canonical_ok = 0;
    std::size_t consequences_ok = 0;
    std::size_t up_steps_ok = 0;
    for (const Frame& f : frames) {
      const Count card = frame_cardinality(f);
      card_sum += card;
      const auto it = oracle.find(f);
      rec.add("cardinality", at_n + " frame=" + spaced(f), it == oracle.end() ? 0 : it->second, card);

      const Path canon = canonical_representative(f);
      if (frame_of(canon) == f) ++canonical_ok;
      if (consequences_hold(f)) ++consequences_ok;

      const auto v = up_steps_per_level(f);
      std::vector<std::int64_t> counted(f.degree(), 0);
      std::size_t level = 0;
      for (Step s : canon.steps()) {
        if (s == Step::Up) ++counted[level++];
        else --level;
      }
      std::int64_t total = 0;
      for (auto x : v) total += x;
      if (v == counted && total == static_cast<std::int64_t>(n)) ++up_steps_ok;
    }
    rec.add("catalan-sum", at_n, catalan(n), card_sum);
    rec.add("canonical", at_n, frames.size(), canonical_ok);
    rec.add("consequences", at_n, frames.size(), consequences_ok);
    rec.add("up-steps", at_n, frames.size(), up_steps_ok);

    Count level0 = 0;
    for (std::size_t j = 0; j <= n + 1; ++j) level0 += table.at(n, 0, j);
    rec.add("level0-sum", at_n, catalan(n), level0);

    for (std::size_t s = 0; s <= max_n; ++s) {
      std::vector<std::size_t> feet_hist(n + 2, 0);
      for (const Path& p : paths) ++feet_hist[foot_count(p, s)];
      std::size_t agree = 0;
      for (std::size_t j = 0; j <= n + 1; ++j) {
        if (table.at(n, s, j) == feet_hist[j]) ++agree;
      }
      rec.add("feet-table", at_n + " s=" + std::to_string(s), n + 2, agree);
    }

    const ColorSpec colors = sample_colors(2 * n);
    Count weighted = 0;
    for (const Path& p : paths) weighted += colored_weight(p, colors);
    rec.add("colored-dyck", at_n, weighted, count_colored_dyck(n, colors));
  }

  const std::size_t motzkin_max = std::min<std::size_t>(2 * max_n, 12);
  for (std::size_t m = 0; m <= motzkin_max; ++m) {
    const std::string at_m = "m=" + std::to_string(m);
    const auto all = enumerate_motzkin(m);
    rec.add("motzkin", at_m, all.size(), count_motzkin(m));

    if (m <= std::min<std::size_t>(2 * max_n, 10)) {
      for (std::size_t k = 0; k <= 5; ++k) {
        rec.add("k-motzkin", at_m + " k=" + std::to_string(k), enumerate_motzkin(m, std::set<std::size_t>{k}).size(),
                count_k_motzkin(m, k, 1));
      }
    }
    if (m <= std::min<std::size_t>(2 * max_n, 8)) {
      const ColorSpec colors = sample_colors(m);
      Count weighted = 0;
      for (const Path& p : all) weighted += colored_weight(p, colors);
      rec.add("colored-motzkin", at_m, weighted, count_colored_motzkin(m, colors));
    }
  }

  check_decider_agreement(rec, std::min<std::size_t>(8, max_n + 1),
                          std::min<std::int64_t>(21, 2 * static_cast<std::int64_t>(max_n) + 5));
  check_binomial_identity(rec, std::min<std::int64_t>(6, static_cast<std::int64_t>(max_n)), 8);

  if (options.inject_fault && !report.checks.empty()) {
    auto& victim = report.checks.front();
    victim.actual += 1;
    victim.pass = victim.expected == victim.actual;
  }
  return report;
}

}  // namespace dyckframe
