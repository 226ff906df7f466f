#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dyckframe {

/// An eventually-zero sequence of nonnegative integers, stored without trailing zeros.
/// Not necessarily the frame of any path.
class RawSequence {
 public:
  RawSequence() = default;
  /// Throws InvalidArgument on a negative entry. Trailing zeros are dropped.
  explicit RawSequence(std::vector<std::int64_t> counts);
  RawSequence(std::initializer_list<std::int64_t> counts);

  std::span<const std::int64_t> counts() const { return counts_; }
  std::size_t size() const { return counts_.size(); }
  bool empty() const { return counts_.empty(); }

  /// Entry k, or 0 past the stored prefix.
  std::int64_t operator[](std::size_t k) const { return k < counts_.size() ? counts_[k] : 0; }

  /// Sum of all entries.
  std::int64_t total() const;

  /// Comma-separated entries, e.g. "3,4,3,1". The all-zero sequence renders as "0".
  std::string to_string() const;

  friend bool operator==(const RawSequence&, const RawSequence&) = default;
  friend auto operator<=>(const RawSequence&, const RawSequence&) = default;

 private:
  std::vector<std::int64_t> counts_;
};

class Frame;

namespace detail {
struct FrameAccess;
}

/// The frame of some Dyck path. Values only exist once admissibility is established,
/// either by a check or because they were built from a path or by lift/extend.
class Frame {
 public:
  /// The frame (1) of the null path.
  Frame();

  /// Returns the frame if `seq` is admissible.
  static std::optional<Frame> from(const RawSequence& seq);
  /// Throws NotAdmissible unless `seq` is admissible.
  static Frame require(const RawSequence& seq);

  const RawSequence& sequence() const { return seq_; }
  std::span<const std::int64_t> counts() const { return seq_.counts(); }
  std::int64_t operator[](std::size_t k) const { return seq_[k]; }

  /// Index of the last nonzero entry.
  std::size_t degree() const { return seq_.size() - 1; }
  /// Length of every path in the frame: sum of entries minus one.
  std::int64_t length() const { return seq_.total() - 1; }
  std::int64_t half_length() const { return length() / 2; }

  std::string to_string() const { return seq_.to_string(); }

  friend bool operator==(const Frame&, const Frame&) = default;
  friend auto operator<=>(const Frame&, const Frame&) = default;

 private:
  explicit Frame(RawSequence seq) : seq_(std::move(seq)) {}
  friend struct detail::FrameAccess;

  RawSequence seq_;
};

namespace detail {
/// Construction without a check; reserved for sequences admissible by construction.
struct FrameAccess {
  static Frame trusted(RawSequence seq) { return Frame(std::move(seq)); }
};
}  // namespace detail

}  // namespace dyckframe
