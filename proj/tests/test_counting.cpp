#include "dyckframe/counting.hpp"
#include "dyckframe/error.hpp"
#include "dyckframe/frames.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <numeric>

using namespace dyckframe;

namespace {

std::vector<Count> counts(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

ColorSpec spec(std::vector<std::uint64_t> h, std::vector<std::uint64_t> u, std::vector<std::uint64_t> d) {
  return ColorSpec{std::move(h), std::move(u), std::move(d)};
}

Count weighted_oracle(const std::vector<std::string>& paths, const ColorSpec& c) {
  Count total = 0;
  for (const auto& s : paths) total += oracle::colored_weight(s, c.h, c.u, c.d);
  return total;
}

}  // namespace

TEST(Catalan, FirstTerms) {
  const std::vector<int> expected{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (std::size_t n = 0; n < expected.size(); ++n) EXPECT_EQ(catalan(n), expected[n]);
  EXPECT_EQ(to_string(catalan(30)), "3814986502092304");
}

TEST(FootTable, LevelZeroGoldenRows) {
  const auto rows = feet_level0(6);
  EXPECT_EQ(rows[0], counts({0, 1}));
  EXPECT_EQ(rows[1], counts({0, 0, 1}));
  EXPECT_EQ(rows[2], counts({0, 0, 1, 1}));
  EXPECT_EQ(rows[3], counts({0, 0, 2, 2, 1}));
  EXPECT_EQ(rows[4], counts({0, 0, 5, 5, 3, 1}));
  EXPECT_EQ(rows[5], counts({0, 0, 14, 14, 9, 4, 1}));
  EXPECT_EQ(rows[6], counts({0, 0, 42, 42, 28, 14, 5, 1}));
}

TEST(FootTable, HigherLevelEntries) {
  const FootTable t(3, 4);
  EXPECT_EQ(t.at(2, 1, 2), 2);
  EXPECT_EQ(t.at(2, 2, 1), 1);
  EXPECT_EQ(t.at(0, 3, 0), 1);
  EXPECT_EQ(t.at(0, 0, 1), 1);
  EXPECT_EQ(t.at(3, 0, 9), 0);
  // Outside the built bounds the answer still comes out right.
  EXPECT_EQ(t.at(6, 0, 3), 42);
  EXPECT_THROW(t.row(5, 0), InvalidArgument);
}

TEST(FootTable, MatchesBruteForce) {
  const std::size_t max_n = 8;
  const FootTable t(max_n, max_n);
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::map<std::pair<int, std::int64_t>, std::int64_t> tally;
    for (const auto& s : oracle::dyck(n)) {
      const auto fr = oracle::frame(s);
      for (std::size_t level = 0; level <= max_n; ++level)
        ++tally[{static_cast<int>(level), level < fr.size() ? fr[level] : 0}];
    }
    for (std::size_t s = 0; s <= max_n; ++s) {
      const auto& row = t.row(n, s);
      ASSERT_EQ(row.size(), n + 2);
      for (std::size_t j = 0; j < row.size(); ++j) {
        auto it = tally.find({static_cast<int>(s), static_cast<std::int64_t>(j)});
        ASSERT_EQ(row[j], it == tally.end() ? 0 : it->second) << "n=" << n << " s=" << s << " j=" << j;
      }
    }
  }
}

TEST(FootTable, LevelZeroRowsSumToCatalan) {
  const auto rows = feet_level0(15);
  for (std::size_t n = 0; n < rows.size(); ++n)
    EXPECT_EQ(std::accumulate(rows[n].begin(), rows[n].end(), Count(0)), catalan(n)) << "n=" << n;
}

TEST(FrameCardinality, WorkedExamples) {
  EXPECT_EQ(frame_cardinality(Frame::require({5, 8, 7, 3})), 700);
  EXPECT_EQ(frame_cardinality(Frame::require({3, 4, 3, 1})), 6);
  EXPECT_EQ(frame_cardinality(Frame::require({3, 6, 6, 3, 1})), 100);
  EXPECT_EQ(frame_cardinality(Frame{}), 1);
  EXPECT_EQ(frame_cardinality(Frame::require({3, 3, 1})), 2);
}

TEST(FrameCardinality, MatchesBruteForce) {
  for (std::size_t n = 0; n <= 8; ++n) {
    std::map<RawSequence, std::int64_t> tally;
    for (const auto& s : oracle::dyck(n)) ++tally[RawSequence(oracle::frame(s))];
    for (const Frame& f : enumerate_frames(n)) ASSERT_EQ(frame_cardinality(f), tally[f.sequence()]) << f.to_string();
  }
}

TEST(FrameCardinality, SumsToCatalan) {
  for (std::size_t n = 0; n <= 12; ++n) {
    Count total = 0;
    for (const Frame& f : enumerate_frames(n)) total += frame_cardinality(f);
    EXPECT_EQ(total, catalan(n)) << "n=" << n;
  }
}

TEST(FrameCardinality, EqualsLeftProgenitorCardinality) {
  for (std::size_t n = 0; n <= 9; ++n)
    for (const Frame& f : enumerate_frames(n)) ASSERT_EQ(frame_cardinality(f), frame_cardinality(left_progenitor(f)));
}

TEST(UpSteps, WorkedExamples) {
  EXPECT_EQ(up_steps_per_level(Frame::require({3, 4, 3, 1})), (std::vector<std::int64_t>{2, 2, 1}));
  EXPECT_EQ(up_steps_per_level(Frame::require({3, 6, 6, 3, 1})), (std::vector<std::int64_t>{2, 4, 2, 1}));
  EXPECT_TRUE(up_steps_per_level(Frame{}).empty());
}

TEST(UpSteps, MatchEveryPathOfTheFrame) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& s : oracle::dyck(n)) {
      const Frame f = Frame::require(RawSequence(oracle::frame(s)));
      std::vector<std::int64_t> counted(f.degree(), 0);
      int level = 0;
      for (char c : s) {
        if (c == 'U') ++counted[level++];
        else --level;
      }
      ASSERT_EQ(up_steps_per_level(f), counted) << s;
    }
  }
}

TEST(Motzkin, KnownValuesAndOracle) {
  const std::vector<int> expected{1, 1, 2, 4, 9, 21, 51, 127, 323};
  for (std::size_t n = 0; n < expected.size(); ++n) EXPECT_EQ(count_motzkin(n), expected[n]);
  for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(count_motzkin(n), oracle::motzkin(n).size()) << "n=" << n;
  EXPECT_NO_THROW(count_motzkin(15));
  EXPECT_THROW(count_motzkin(42), ResourceLimit);
}

TEST(KMotzkin, Examples) {
  EXPECT_EQ(count_k_motzkin(4, 3), 2);
  EXPECT_EQ(count_k_motzkin(3, 0), 3);
  EXPECT_EQ(count_k_motzkin(5, 0, 2), 74);
  EXPECT_EQ(count_k_motzkin(6, 1, 3), 140);
  EXPECT_EQ(count_k_motzkin(0, 4), 1);
  // No horizontal steps at all beyond half the length.
  EXPECT_EQ(count_k_motzkin(6, 9), catalan(3));
  EXPECT_EQ(count_k_motzkin(7, 9), 0);
}

TEST(KMotzkin, MatchesRestrictedOracle) {
  for (std::size_t n = 0; n <= 9; ++n) {
    for (int k = 0; k <= 5; ++k) {
      const std::set<int> allowed{k};
      const auto paths = oracle::motzkin(n, &allowed);
      EXPECT_EQ(count_k_motzkin(n, k), paths.size()) << "n=" << n << " k=" << k;
      // r colors per horizontal step.
      Count weighted = 0;
      for (const auto& s : paths) weighted += power(2, std::count(s.begin(), s.end(), 'H'));
      EXPECT_EQ(count_k_motzkin(n, k, 2), weighted) << "n=" << n << " k=" << k;
    }
  }
}

TEST(ColoredDyck, Examples) {
  EXPECT_EQ(count_colored_dyck(2, spec({}, {2, 1}, {1, 1})), 6);
  EXPECT_EQ(count_colored_dyck(3, spec({}, {2, 3, 1}, {3, 1, 2})), 522);
  EXPECT_THROW(count_colored_dyck(3, spec({}, {1, 1}, {1, 1, 1})), InvalidArgument);
}

TEST(ColoredDyck, OnesGiveCatalan) {
  for (std::size_t n = 0; n <= 12; ++n) EXPECT_EQ(count_colored_dyck(n, ColorSpec::ones(2 * n)), catalan(n));
}

TEST(ColoredDyck, MatchesWeightedOracle) {
  for (std::size_t n = 0; n <= 6; ++n) {
    ColorSpec c;
    for (std::size_t k = 0; k < n; ++k) {
      c.u.push_back((k + 1) % 4);
      c.d.push_back(3 - (k + 1) % 3);
    }
    c.h.assign(n + 1, 0);
    EXPECT_EQ(count_colored_dyck(n, c), weighted_oracle(oracle::dyck(n), c)) << "n=" << n;
  }
}

TEST(ColoredMotzkin, Examples) {
  EXPECT_EQ(count_colored_motzkin(4, spec({2, 1, 0}, {1, 1}, {1, 1})), 35);
  EXPECT_EQ(count_colored_motzkin(5, spec({2, 3, 1}, {2, 3}, {3, 1})), 1448);
  EXPECT_THROW(count_colored_motzkin(4, spec({1, 1}, {1, 1}, {1, 1})), InvalidArgument);
  EXPECT_THROW(count_colored_motzkin(4, spec({1, 1, 1}, {1}, {1, 1})), InvalidArgument);
}

TEST(ColoredMotzkin, OnesGiveMotzkin) {
  for (std::size_t n = 0; n <= 12; ++n) EXPECT_EQ(count_colored_motzkin(n, ColorSpec::ones(n)), count_motzkin(n));
}

TEST(ColoredMotzkin, MatchesWeightedOracle) {
  for (std::size_t n = 0; n <= 8; ++n) {
    const std::size_t nu = n / 2;
    for (std::uint64_t shift = 0; shift < 4; ++shift) {
      ColorSpec c;
      for (std::size_t k = 0; k <= nu; ++k) c.h.push_back((k + shift) % 4);
      for (std::size_t k = 0; k < nu; ++k) {
        c.u.push_back((k * 2 + shift) % 4);
        c.d.push_back(1 + (k + shift) % 3);
      }
      EXPECT_EQ(count_colored_motzkin(n, c), weighted_oracle(oracle::motzkin(n), c)) << "n=" << n << " shift=" << shift;
    }
  }
}

TEST(ColoredMotzkin, MatchesLiteralCompositionSum) {
  // Horizontal steps distributed over the feet of each level, one weak composition at a time.
  auto literal = [](std::size_t n, const ColorSpec& c) {
    const std::size_t nu = n / 2;
    Count total = 0;
    for (std::size_t j = 0; j <= nu; ++j) {
      const auto m = static_cast<std::int64_t>(n - 2 * j);
      for (const Frame& f : enumerate_frames(j)) {
        Count vertical = frame_cardinality(f);
        const auto v = up_steps_per_level(f);
        for (std::size_t k = 0; k < v.size(); ++k)
          vertical *= power(c.u[k] * c.d[k], static_cast<std::uint64_t>(v[k]));
        Count horizontal = 0;
        for (const auto& parts : weak_compositions(m, nu + 1)) {
          Count term = 1;
          for (std::size_t t = 0; t <= nu; ++t) {
            term *= binomial(parts[t] + f[t] - 1, parts[t]) * power(c.h[t], static_cast<std::uint64_t>(parts[t]));
          }
          horizontal += term;
        }
        total += vertical * horizontal;
      }
    }
    return total;
  };
  for (std::size_t n = 0; n <= 11; ++n) {
    const std::size_t nu = n / 2;
    ColorSpec c;
    for (std::size_t k = 0; k <= nu; ++k) c.h.push_back((3 * k + 2) % 5);
    for (std::size_t k = 0; k < nu; ++k) {
      c.u.push_back(1 + k % 2);
      c.d.push_back(2 + k % 3);
    }
    EXPECT_EQ(count_colored_motzkin(n, c), literal(n, c)) << "n=" << n;
  }
}

TEST(WeakCompositions, Order) {
  EXPECT_EQ(weak_compositions(2, 2), (std::vector<std::vector<std::int64_t>>{{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(weak_compositions(0, 0), (std::vector<std::vector<std::int64_t>>{{}}));
  EXPECT_TRUE(weak_compositions(1, 0).empty());
  EXPECT_EQ(weak_compositions(3, 3).size(), 10u);
  EXPECT_EQ(weak_compositions(0, 3), (std::vector<std::vector<std::int64_t>>{{0, 0, 0}}));
}

TEST(WeakCompositions, CountIsBinomial) {
  for (std::int64_t t = 0; t <= 6; ++t)
    for (std::size_t p = 1; p <= 5; ++p)
      EXPECT_EQ(weak_compositions(t, p).size(), oracle::pascal(static_cast<int>(t + p - 1), static_cast<int>(p - 1)));
}

TEST(BinomialIdentity, SmallSweep) {
  for (std::int64_t m = 0; m <= 5; ++m) {
    EXPECT_TRUE(binomial_identity_check(m, {1}));
    EXPECT_TRUE(binomial_identity_check(m, {2, 3}));
    EXPECT_TRUE(binomial_identity_check(m, {1, 1, 1, 4}));
  }
}
