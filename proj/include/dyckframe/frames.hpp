#pragma once

// Frame algebra. Lifting s prepends a 2, gluing adds entrywise and drops the first
// entry by one, extension a glues with (2,1). Their partial inverses b and r drive
// both the admissibility trace and the canonical representative.

#include "dyckframe/frame.hpp"
#include "dyckframe/paths.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace dyckframe {

/// Parses "3,4,3,1". Surrounding whitespace per entry is ignored, trailing zeros are
/// accepted and dropped. Throws ParseError.
RawSequence parse_sequence(std::string_view text);

/// Sum of entries minus one.
std::int64_t frame_length(const RawSequence& s);

/// The operator s: (i0, i1, ...) -> (2, i0, i1, ...).
RawSequence lift_frame(const RawSequence& s);
Frame lift_frame(const Frame& f);

/// The operator ∧: (i0 + j0 - 1, i1 + j1, ...). Throws InvalidArgument on an empty operand
/// or if the first entry would go negative.
RawSequence glue_frames(const RawSequence& u, const RawSequence& v);
Frame glue_frames(const Frame& u, const Frame& v);

/// The operator a: adds 1 to the first two entries. Throws InvalidArgument if empty.
RawSequence extend_frame(const RawSequence& s);
Frame extend_frame(const Frame& f);

/// The operator b: subtracts 1 from the first two entries. Throws Underflow.
RawSequence unextend(const RawSequence& s);

/// The operator r: drops a leading 2. Throws NotLifted.
RawSequence unlift(const RawSequence& s);

/// One backward step of the reduction to the null frame.
enum class Reduction : char { Unlift = 'r', Unextend = 'b' };

/// Reduces `s` towards (1): r whenever the first entry is 2, b otherwise.
/// Returns the steps taken, or nullopt if the reduction gets stuck.
std::optional<std::vector<Reduction>> reduction_trace(const RawSequence& s);

/// Admissibility by replaying the r/b reduction.
bool is_admissible_trace(const RawSequence& s);

/// Admissibility by the alternating-sum conditions. With A_k = i_k - i_{k-1} + ... ± i_0:
/// f = 0 needs i_0 = 1; otherwise i_0 >= 2, A_k >= 0 for odd k < f, A_k >= 2 for even
/// 0 < k < f, and A_f = (-1)^f.
bool is_admissible_closed(const RawSequence& s);

/// All frames of length 2n, built from (1) by n rounds of {s, a}. The order is the
/// construction order: for each frame of the previous round, s then a.
std::vector<Frame> enumerate_frames(std::size_t half_length, const EnumerationLimits& limits = {});

/// The distinguished path of a frame: the r/b reduction replayed forwards on paths,
/// with r -> lift and b -> glue with UD.
Path canonical_representative(const Frame& f);

/// Necessary conditions every admissible frame of degree f >= 1 satisfies:
/// i_{f-1} > i_f; i_0 = i_1 + 1 iff i_1 is the last nonzero entry (f = 1);
/// 2 <= i_j <= i_{j-1} + i_{j+1} - 2 for 0 < j < f-1.
/// Vacuously true for the null frame.
bool consequences_hold(const Frame& f);

/// (2, i_1 - i_0 + 2, i_2, ...). Throws InvalidArgument on the null frame.
Frame right_progenitor(const Frame& f);

/// Strips the maximal run of leading 2s. A frame not starting with 2 is its own left progenitor.
Frame left_progenitor(const Frame& f);

}  // namespace dyckframe
