#include "dyckframe/paths.hpp"

#include "dyckframe/error.hpp"

#include <algorithm>
#include <limits>

namespace dyckframe {

namespace {

constexpr Step kStepOrder[] = {Step::Up, Step::Down, Step::Horizontal};

std::size_t rank(Step s) {
  switch (s) {
    case Step::Up: return 0;
    case Step::Down: return 1;
    case Step::Horizontal: return 2;
  }
  return 3;
}

}  // namespace

Path Path::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  std::int64_t level = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U': steps.push_back(Step::Up); ++level; break;
      case 'D': steps.push_back(Step::Down); --level; break;
      case 'H': steps.push_back(Step::Horizontal); break;
      default:
        throw MalformedPath("illegal character '" + std::string(1, text[i]) + "' at position " +
                            std::to_string(i));
    }
    if (level < 0) throw MalformedPath("path goes below level 0 at step " + std::to_string(i + 1));
  }
  if (level != 0) throw MalformedPath("path ends at level " + std::to_string(level));
  return Path(std::move(steps));
}

bool Path::is_dyck() const {
  return std::none_of(steps_.begin(), steps_.end(), [](Step s) { return s == Step::Horizontal; });
}

std::string Path::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(static_cast<char>(s));
  return out;
}

LevelSequence level_sequence(const Path& p) {
  LevelSequence levels;
  levels.reserve(p.size() + 1);
  std::size_t level = 0;
  levels.push_back(level);
  for (Step s : p.steps()) {
    if (s == Step::Up) ++level;
    else if (s == Step::Down) --level;
    levels.push_back(level);
  }
  return levels;
}

std::size_t foot_count(const Path& p, std::size_t level) {
  const auto levels = level_sequence(p);
  return static_cast<std::size_t>(std::count(levels.begin(), levels.end(), level));
}

Frame frame_of(const Path& p) {
  if (!p.is_dyck()) throw NotDyck("frame_of: path " + p.to_string() + " has horizontal steps");
  std::vector<std::int64_t> feet;
  for (std::size_t level : level_sequence(p)) {
    if (level >= feet.size()) feet.resize(level + 1, 0);
    ++feet[level];
  }
  return detail::FrameAccess::trusted(RawSequence(std::move(feet)));
}

Path lift(const Path& p) {
  if (!p.is_dyck()) throw NotDyck("lift: path " + p.to_string() + " has horizontal steps");
  std::vector<Step> steps;
  steps.reserve(p.size() + 2);
  steps.push_back(Step::Up);
  steps.insert(steps.end(), p.steps_.begin(), p.steps_.end());
  steps.push_back(Step::Down);
  return Path(std::move(steps));
}

Path glue(const Path& p, const Path& q) {
  std::vector<Step> steps = p.steps_;
  steps.insert(steps.end(), q.steps_.begin(), q.steps_.end());
  return Path(std::move(steps));
}

EnumerationLimits EnumerationLimits::unlimited() {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  return {kMax, kMax, kMax};
}

PathCursor::PathCursor(std::size_t length, std::optional<std::set<std::size_t>> horizontal_levels)
    : length_(length), horizontal_levels_(std::move(horizontal_levels)) {
  // Levels above length/2 can never be left and re-entered in time, so the table stops there.
  const std::size_t max_level = length / 2 + 1;
  completable_.assign(length + 1, std::vector<char>(max_level + 2, 0));
  completable_[0][0] = 1;
  for (std::size_t r = 1; r <= length; ++r) {
    for (std::size_t h = 0; h <= max_level; ++h) {
      const bool up = completable_[r - 1][h + 1];
      const bool down = h > 0 && completable_[r - 1][h - 1];
      const bool flat = allowed_horizontal(h) && completable_[r - 1][h];
      completable_[r][h] = up || down || flat;
    }
  }
  steps_.resize(length);
  heights_.assign(length + 1, 0);
}

PathCursor PathCursor::dyck(std::size_t half_length, const EnumerationLimits& limits) {
  if (half_length > limits.dyck_half_length)
    throw ResourceLimit("Dyck enumeration of half-length " + std::to_string(half_length) +
                        " exceeds the cap " + std::to_string(limits.dyck_half_length));
  return PathCursor(2 * half_length, std::set<std::size_t>{});
}

PathCursor PathCursor::motzkin(std::size_t length, std::optional<std::set<std::size_t>> horizontal_levels,
                               const EnumerationLimits& limits) {
  if (length > limits.motzkin_length)
    throw ResourceLimit("Motzkin enumeration of length " + std::to_string(length) +
                        " exceeds the cap " + std::to_string(limits.motzkin_length));
  return PathCursor(length, std::move(horizontal_levels));
}

bool PathCursor::allowed_horizontal(std::size_t level) const {
  return !horizontal_levels_ || horizontal_levels_->contains(level);
}

bool PathCursor::completable(std::size_t remaining, std::size_t level) const {
  return level < completable_[remaining].size() && completable_[remaining][level];
}

bool PathCursor::try_step(std::size_t pos, Step s) {
  const std::size_t h = heights_[pos];
  std::size_t next = h;
  if (s == Step::Up) {
    next = h + 1;
  } else if (s == Step::Down) {
    if (h == 0) return false;
    next = h - 1;
  } else if (!allowed_horizontal(h)) {
    return false;
  }
  if (!completable(length_ - pos - 1, next)) return false;
  steps_[pos] = s;
  heights_[pos + 1] = next;
  return true;
}

void PathCursor::fill_from(std::size_t pos) {
  for (; pos < length_; ++pos) {
    for (Step s : kStepOrder) {
      if (try_step(pos, s)) break;
    }
  }
}

bool PathCursor::advance() {
  for (std::size_t pos = length_; pos-- > 0;) {
    for (std::size_t r = rank(steps_[pos]) + 1; r < std::size(kStepOrder); ++r) {
      if (try_step(pos, kStepOrder[r])) {
        fill_from(pos + 1);
        return true;
      }
    }
  }
  return false;
}

std::optional<Path> PathCursor::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (!completable(length_, 0)) {
      done_ = true;
      return std::nullopt;
    }
    fill_from(0);
  } else if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return Path(steps_);
}

std::vector<Path> enumerate_dyck(std::size_t half_length, const EnumerationLimits& limits) {
  auto cursor = PathCursor::dyck(half_length, limits);
  std::vector<Path> out;
  while (auto p = cursor.next()) out.push_back(std::move(*p));
  return out;
}

std::vector<Path> enumerate_motzkin(std::size_t length, std::optional<std::set<std::size_t>> horizontal_levels,
                                    const EnumerationLimits& limits) {
  auto cursor = PathCursor::motzkin(length, std::move(horizontal_levels), limits);
  std::vector<Path> out;
  while (auto p = cursor.next()) out.push_back(std::move(*p));
  return out;
}

}  // namespace dyckframe
