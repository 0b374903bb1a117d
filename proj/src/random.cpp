#include "cuntzsim/random.hpp"

namespace cuntzsim {
namespace {

std::mt19937_64 seeded(std::initializer_list<std::uint32_t> words) {
  std::seed_seq seq(words);
  return std::mt19937_64(seq);
}

std::uint32_t lo(std::uint64_t v) { return static_cast<std::uint32_t>(v); }
std::uint32_t hi(std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); }

}  // namespace

Rng::Rng(std::uint64_t seed) : engine_(seeded({lo(seed), hi(seed)})) {}

Rng Rng::substream(std::uint64_t seed, std::uint64_t stream) {
  return Rng(seeded({lo(seed), hi(seed), lo(stream), hi(stream), 0x5eedu}));
}

}  // namespace cuntzsim
