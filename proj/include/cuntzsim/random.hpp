#pragma once

#include <cstdint>
#include <random>

namespace cuntzsim {

/// Seedable mt19937_64 with a portable double conversion, so a given seed
/// produces the same stream on every conforming standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  /// Independent stream derived from (seed, stream) through std::seed_seq.
  static Rng substream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  explicit Rng(std::mt19937_64 engine) : engine_(std::move(engine)) {}
  std::mt19937_64 engine_;
};

}  // namespace cuntzsim
