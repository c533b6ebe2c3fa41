#pragma once

#include <cstdint>

namespace ratrec {

// Deterministic splitmix64 stream. Used instead of <random> engines so that
// identical seeds give identical output on every platform and standard
// library.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform draw from [lo, hi], inclusive. Modulo bias is irrelevant for the
  // small ranges used here.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  bool coin() { return (next() & 1) != 0; }

private:
  std::uint64_t state_;
};

// Derives an independent child seed; used to hand deterministic seeds to
// recursive branches without sharing stream state.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
  Rng rng(base ^ (salt * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
  return rng.next();
}

}  // namespace ratrec
