#include "dyckframe/frames.hpp"

#include "dyckframe/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace dyckframe {

RawSequence::RawSequence(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {
  if (std::any_of(counts_.begin(), counts_.end(), [](std::int64_t c) { return c < 0; }))
    throw InvalidArgument("sequence entries must be nonnegative");
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

RawSequence::RawSequence(std::initializer_list<std::int64_t> counts)
    : RawSequence(std::vector<std::int64_t>(counts)) {}

std::int64_t RawSequence::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

std::string RawSequence::to_string() const {
  if (counts_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    if (k > 0) out.push_back(',');
    out += std::to_string(counts_[k]);
  }
  return out;
}

Frame::Frame() : seq_{1} {}

std::optional<Frame> Frame::from(const RawSequence& seq) {
  if (!is_admissible_closed(seq)) return std::nullopt;
  return Frame(seq);
}

Frame Frame::require(const RawSequence& seq) {
  auto f = from(seq);
  if (!f) throw NotAdmissible("sequence (" + seq.to_string() + ") is not the frame of any Dyck path");
  return *f;
}

RawSequence parse_sequence(std::string_view text) {
  std::vector<std::int64_t> counts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view field = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || value < 0)
      throw ParseError("expected comma-separated nonnegative integers, got \"" + std::string(text) + "\"");
    counts.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return RawSequence(std::move(counts));
}

std::int64_t frame_length(const RawSequence& s) { return s.total() - 1; }

RawSequence lift_frame(const RawSequence& s) {
  std::vector<std::int64_t> out{2};
  out.insert(out.end(), s.counts().begin(), s.counts().end());
  return RawSequence(std::move(out));
}

Frame lift_frame(const Frame& f) { return detail::FrameAccess::trusted(lift_frame(f.sequence())); }

RawSequence glue_frames(const RawSequence& u, const RawSequence& v) {
  if (u.empty() || v.empty()) throw InvalidArgument("glue_frames: operands must be nonempty");
  std::vector<std::int64_t> out(std::max(u.size(), v.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = u[k] + v[k];
  out[0] -= 1;
  return RawSequence(std::move(out));
}

Frame glue_frames(const Frame& u, const Frame& v) {
  return detail::FrameAccess::trusted(glue_frames(u.sequence(), v.sequence()));
}

RawSequence extend_frame(const RawSequence& s) {
  if (s.empty()) throw InvalidArgument("extend_frame: operand must be nonempty");
  std::vector<std::int64_t> out(s.counts().begin(), s.counts().end());
  if (out.size() < 2) out.resize(2, 0);
  out[0] += 1;
  out[1] += 1;
  return RawSequence(std::move(out));
}

Frame extend_frame(const Frame& f) { return detail::FrameAccess::trusted(extend_frame(f.sequence())); }

RawSequence unextend(const RawSequence& s) {
  if (s[0] < 1 || s[1] < 1)
    throw Underflow("unextend: (" + s.to_string() + ") has a leading entry below 1");
  std::vector<std::int64_t> out(s.counts().begin(), s.counts().end());
  out[0] -= 1;
  out[1] -= 1;
  return RawSequence(std::move(out));
}

RawSequence unlift(const RawSequence& s) {
  if (s[0] != 2) throw NotLifted("unlift: (" + s.to_string() + ") does not start with 2");
  return RawSequence(std::vector<std::int64_t>(s.counts().begin() + 1, s.counts().end()));
}

std::optional<std::vector<Reduction>> reduction_trace(const RawSequence& s) {
  static const RawSequence kNull{1};
  std::vector<Reduction> trace;
  RawSequence current = s;
  // Both r and b lower the entry sum by 2, so the loop ends within total/2 + 1 rounds.
  for (std::int64_t fuel = s.total(); fuel >= 0; --fuel) {
    if (current == kNull) return trace;
    if (current.empty()) return std::nullopt;
    if (current[0] == 2) {
      current = unlift(current);
      trace.push_back(Reduction::Unlift);
    } else {
      if (current[0] < 1 || current[1] < 1) return std::nullopt;
      current = unextend(current);
      trace.push_back(Reduction::Unextend);
    }
  }
  return std::nullopt;
}

bool is_admissible_trace(const RawSequence& s) { return reduction_trace(s).has_value(); }

bool is_admissible_closed(const RawSequence& s) {
  if (s.empty()) return false;
  const std::size_t f = s.size() - 1;
  if (f == 0) return s[0] == 1;
  if (s[0] < 2) return false;
  std::int64_t alternating = s[0];
  for (std::size_t k = 1; k <= f; ++k) {
    alternating = s[k] - alternating;
    if (k == f) break;
    if (alternating < (k % 2 == 0 ? 2 : 0)) return false;
  }
  return alternating == (f % 2 == 0 ? 1 : -1);
}

std::vector<Frame> enumerate_frames(std::size_t half_length, const EnumerationLimits& limits) {
  if (half_length > limits.frame_half_length)
    throw ResourceLimit("frame enumeration of half-length " + std::to_string(half_length) +
                        " exceeds the cap " + std::to_string(limits.frame_half_length));
  std::vector<Frame> frames{Frame{}};
  for (std::size_t n = 1; n <= half_length; ++n) {
    std::vector<Frame> next;
    next.reserve(2 * frames.size());
    for (const Frame& f : frames) {
      next.push_back(lift_frame(f));
      next.push_back(extend_frame(f));
    }
    if (n == 1) next.pop_back();  // s(1) = a(1) = (2,1)
    frames = std::move(next);
  }
  return frames;
}

Path canonical_representative(const Frame& f) {
  const auto trace = reduction_trace(f.sequence());
  if (!trace) throw NotAdmissible("canonical_representative: (" + f.to_string() + ") does not reduce to (1)");
  static const Path kHat = Path::parse("UD");
  Path p;
  for (auto it = trace->rbegin(); it != trace->rend(); ++it) {
    p = (*it == Reduction::Unlift) ? lift(p) : glue(p, kHat);
  }
  return p;
}

bool consequences_hold(const Frame& fr) {
  const std::size_t f = fr.degree();
  if (f == 0) return true;
  if (!(fr[f - 1] > fr[f])) return false;
  // "i_1 = i_f" is positional: i_1 is the last nonzero entry. Read as a value equality it
  // fails on admissible frames such as (2,2,3,2).
  if ((fr[0] == fr[1] + 1) != (f == 1)) return false;
  for (std::size_t j = 1; j + 1 < f; ++j) {
    if (fr[j] < 2 || fr[j] > fr[j - 1] + fr[j + 1] - 2) return false;
  }
  return true;
}

Frame right_progenitor(const Frame& f) {
  if (f.degree() == 0) throw InvalidArgument("the null frame has no right progenitor");
  std::vector<std::int64_t> out(f.counts().begin(), f.counts().end());
  out[1] = out[1] - out[0] + 2;
  out[0] = 2;
  return detail::FrameAccess::trusted(RawSequence(std::move(out)));
}

Frame left_progenitor(const Frame& f) {
  const auto counts = f.counts();
  std::size_t t = 0;
  while (t < counts.size() && counts[t] == 2) ++t;
  return detail::FrameAccess::trusted(RawSequence(std::vector<std::int64_t>(counts.begin() + t, counts.end())));
}

}  // namespace dyckframe
