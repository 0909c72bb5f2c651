#pragma once

#include <cstdint>
#include <random>

namespace copkde {

//! Seeded PRNG wrapper with a fixed uint64 -> double mapping.
//!
//! std::mt19937_64 has a fully specified output sequence, but the standard
//! distributions do not. Converting via the top 53 bits keeps streams
//! bit-identical across standard libraries and platforms.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed)
    : engine_(seed)
  {
  }

  std::uint64_t next_u64() { return engine_(); }

  //! uniform double in [0, 1)
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
  std::mt19937_64 engine_;
};

//! splitmix64 finalizer; used to derive independent per-cell seeds
//! from (base, a, b) without correlated low bits.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b)
{
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (a + 1) + 0xbf58476d1ce4e5b9ULL * (b + 1);
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

} // namespace copkde
