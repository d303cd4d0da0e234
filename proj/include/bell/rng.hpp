// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

#include "bell/angle.hpp"

namespace bell {

/// Identifies one reproducible random stream. Identical (seed, stream_index)
/// pairs produce identical draw sequences on every platform; distinct
/// stream_index values give statistically independent streams that may be
/// consumed concurrently.
struct RngStream {
  std::uint64_t seed = 0;
  std::uint64_t stream_index = 0;
};

/// Counter-based generator (Philox-4x32 with 10 rounds). The key is the
/// stream seed, the counter carries (block, stream_index), so jumping to an
/// arbitrary draw position costs nothing. Integer-only arithmetic keeps the
/// output bit-stable across platforms.
class Philox4x32 {
 public:
  explicit Philox4x32(RngStream stream, std::uint64_t draw_index = 0);

  /// Next 64-bit word of the stream.
  std::uint64_t next_u64();

  /// Uniform double in [0, 1) with 53-bit resolution.
  double uniform53() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform angle in [-pi, pi).
  Angle uniform_angle() { return Angle(-kPi + kTwoPi * uniform53()); }

  /// Raw 4x32 block for a given counter/key; exposed for verification
  /// against the published test vectors.
  static std::array<std::uint32_t, 4> block(const std::array<std::uint32_t, 4>& counter,
                                            const std::array<std::uint32_t, 2>& key);

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_index_;
  std::uint64_t block_index_;
  std::array<std::uint32_t, 4> buffer_{};
  int phase_;  // 0 or 1: which u64 of the current block comes next
};

}  // namespace bell
