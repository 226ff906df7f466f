#pragma once

#include "dyckframe/frame.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dyckframe {

enum class Step : char { Up = 'U', Down = 'D', Horizontal = 'H' };

/// A Motzkin path: steps from level 0 back to level 0, never dipping below 0.
/// The empty path is the null path.
class Path {
 public:
  Path() = default;

  /// Parses a string over {U, D, H}. Throws MalformedPath.
  static Path parse(std::string_view text);

  std::span<const Step> steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  bool is_dyck() const;

  /// The U/D/H rendering, no separators.
  std::string to_string() const;

  friend bool operator==(const Path&, const Path&) = default;

 private:
  explicit Path(std::vector<Step> steps) : steps_(std::move(steps)) {}

  friend Path lift(const Path& p);
  friend Path glue(const Path& p, const Path& q);
  friend class PathCursor;

  std::vector<Step> steps_;
};

/// Level of each lattice node; size is steps + 1.
using LevelSequence = std::vector<std::size_t>;

inline Path parse_path(std::string_view text) { return Path::parse(text); }

LevelSequence level_sequence(const Path& p);

/// Number of nodes of `p` lying on `level`.
std::size_t foot_count(const Path& p, std::size_t level);

/// Foot counts per level, trimmed. Throws NotDyck on a Horizontal step.
Frame frame_of(const Path& p);

/// U p D. Throws NotDyck.
Path lift(const Path& p);

/// Concatenation p q.
Path glue(const Path& p, const Path& q);

/// Hard caps on enumeration sizes; exceeding one raises ResourceLimit.
struct EnumerationLimits {
  std::size_t dyck_half_length = 16;
  std::size_t motzkin_length = 14;
  std::size_t frame_half_length = 20;

  static EnumerationLimits unlimited();
};

/// Lexicographic cursor (U < D < H) over the Motzkin paths of a fixed length whose
/// horizontal steps lie on an allowed set of levels. A Dyck cursor allows none.
class PathCursor {
 public:
  static PathCursor dyck(std::size_t half_length, const EnumerationLimits& limits = {});
  /// `horizontal_levels` absent means unrestricted.
  static PathCursor motzkin(std::size_t length,
                            std::optional<std::set<std::size_t>> horizontal_levels = std::nullopt,
                            const EnumerationLimits& limits = {});

  /// The next path, or nullopt once exhausted.
  std::optional<Path> next();

 private:
  PathCursor(std::size_t length, std::optional<std::set<std::size_t>> horizontal_levels);

  bool allowed_horizontal(std::size_t level) const;
  bool completable(std::size_t remaining, std::size_t level) const;
  bool try_step(std::size_t pos, Step s);
  void fill_from(std::size_t pos);
  bool advance();

  std::size_t length_;
  std::optional<std::set<std::size_t>> horizontal_levels_;
  // completable_[r][h]: a valid suffix of r steps exists from level h.
  std::vector<std::vector<char>> completable_;
  std::vector<Step> steps_;
  std::vector<std::size_t> heights_;
  bool started_ = false;
  bool done_ = false;
};

/// Every Dyck path of length 2n once, lexicographic with U < D.
std::vector<Path> enumerate_dyck(std::size_t half_length, const EnumerationLimits& limits = {});

std::vector<Path> enumerate_motzkin(std::size_t length,
                                    std::optional<std::set<std::size_t>> horizontal_levels = std::nullopt,
                                    const EnumerationLimits& limits = {});

}  // namespace dyckframe
