#pragma once

#include <array>
#include <cstdint>

namespace qmcnls {

/// Counter-based pseudorandom generator, philox4x64 with 10 rounds.
///
/// Keyed by (seed, stream); distinct streams are statistically independent,
/// so parallel consumers never share state. The output sequence is
/// bit-compatible with numpy.random.Philox for key = stream * 2^64 + seed,
/// which is what the unit tests pin.
class Philox4x64 {
 public:
  static constexpr const char* algorithm_name() { return "philox4x64-10"; }

  explicit Philox4x64(std::uint64_t seed, std::uint64_t stream = 0)
      : key_{seed, stream} {}

  std::uint64_t next_u64() {
    if (cursor_ == 4) refill();
    return block_[cursor_++];
  }

  /// Uniform on [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  static std::uint64_t mulhilo(std::uint64_t a, std::uint64_t b,
                               std::uint64_t& hi) {
    const auto p =
        static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
    hi = static_cast<std::uint64_t>(p >> 64);
    return static_cast<std::uint64_t>(p);
  }

  void refill() {
    constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
    constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
    constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
    constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

    std::array<std::uint64_t, 4> ctr = counter_;
    std::array<std::uint64_t, 2> key = key_;
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      std::uint64_t hi0 = 0;
      std::uint64_t hi1 = 0;
      const std::uint64_t lo0 = mulhilo(kMul0, ctr[0], hi0);
      const std::uint64_t lo1 = mulhilo(kMul1, ctr[2], hi1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    block_ = ctr;
    cursor_ = 0;
    if (++counter_[0] == 0 && ++counter_[1] == 0 && ++counter_[2] == 0) {
      ++counter_[3];
    }
  }

  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> counter_{0, 0, 0, 0};
  std::array<std::uint64_t, 4> block_{};
  int cursor_ = 4;
};

/// Stream labels reserved by the library so that different consumers of one
/// user-facing seed never overlap.
namespace rng_stream {
inline constexpr std::uint64_t kQmcShifts = 0;
inline constexpr std::uint64_t kMcSamples = 1;
inline constexpr std::uint64_t kReference = 2;
// Pipelines offset per-row streams from this base.
inline constexpr std::uint64_t kRowBase = 16;
}  // namespace rng_stream

}  // namespace qmcnls
