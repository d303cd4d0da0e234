// SPDX-License-Identifier: Apache-2.0
#include "bell/rng.hpp"

namespace bell {

namespace {

constexpr std::uint32_t kMult0 = 0xD2511F53u;
constexpr std::uint32_t kMult1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void one_round(std::array<std::uint32_t, 4>& c, const std::array<std::uint32_t, 2>& k) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kMult0) * c[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kMult1) * c[2];
  const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
  const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
  c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

std::array<std::uint32_t, 4> Philox4x32::block(const std::array<std::uint32_t, 4>& counter,
                                               const std::array<std::uint32_t, 2>& key) {
  std::array<std::uint32_t, 4> c = counter;
  std::array<std::uint32_t, 2> k = key;
  for (int r = 0; r < 10; ++r) {
    if (r > 0) {
      k[0] += kWeyl0;
      k[1] += kWeyl1;
    }
    one_round(c, k);
  }
  return c;
}

Philox4x32::Philox4x32(RngStream stream, std::uint64_t draw_index)
    : key_{static_cast<std::uint32_t>(stream.seed), static_cast<std::uint32_t>(stream.seed >> 32)},
      stream_index_(stream.stream_index),
      block_index_(draw_index >> 1),
      phase_(static_cast<int>(draw_index & 1u)) {
  refill();
}

void Philox4x32::refill() {
  const std::array<std::uint32_t, 4> counter = {
      static_cast<std::uint32_t>(block_index_), static_cast<std::uint32_t>(block_index_ >> 32),
      static_cast<std::uint32_t>(stream_index_), static_cast<std::uint32_t>(stream_index_ >> 32)};
  buffer_ = block(counter, key_);
}

std::uint64_t Philox4x32::next_u64() {
  const int base = 2 * phase_;
  const std::uint64_t value =
      (static_cast<std::uint64_t>(buffer_[base + 1]) << 32) | buffer_[base];
  if (phase_ == 0) {
    phase_ = 1;
  } else {
    phase_ = 0;
    ++block_index_;
    refill();
  }
  return value;
}

}  // namespace bell
