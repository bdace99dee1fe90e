#pragma once

#include <cstdint>
#include <cmath>

namespace tpl {

// pcg64 (XSL-RR 128/64) with a selectable stream.  Every sampler in this
// library draws from one of these; Monte Carlo drivers hand stream (base + i)
// to replicate i, so ensembles are reproducible and order-independent.
//
// The generator is seeded through splitmix64 so that nearby (seed, stream)
// pairs still land in well-separated states.  Normal variates use the polar
// Box-Muller method rather than std::normal_distribution, whose output is
// not pinned down by the standard; byte-exact reproducibility across
// platforms is part of this class's contract.
class rng {
 public:
  explicit rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t s = seed;
    const std::uint64_t hi_state = splitmix64(s);
    const std::uint64_t lo_state = splitmix64(s);
    std::uint64_t t = stream ^ 0xda3e39cb94b95bdbULL;
    const std::uint64_t hi_seq = splitmix64(t);
    const std::uint64_t lo_seq = splitmix64(t);

    const u128 initstate = (static_cast<u128>(hi_state) << 64) | lo_state;
    const u128 initseq = (static_cast<u128>(hi_seq) << 64) | lo_seq;

    state_ = 0;
    inc_ = (initseq << 1) | 1u;  // increment must be odd
    step();
    state_ += initstate;
    step();
  }

  std::uint64_t next_u64() {
    const u128 old = state_;
    step();
    const std::uint64_t xored =
        static_cast<std::uint64_t>(old >> 64) ^ static_cast<std::uint64_t>(old);
    const unsigned rot = static_cast<unsigned>(old >> 122);
    return (xored >> rot) | (xored << ((-rot) & 63u));
  }

  // Uniform on [0, 1) with the full 53-bit mantissa.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on the open interval (0, 1); safe under log() and 1/x.
  double uniform_pos() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double exponential() { return -std::log(uniform_pos()); }

  // Standard normal by the polar (Marsaglia) method; the second variate of
  // each accepted pair is cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform01() - 1.0;
      v = 2.0 * uniform01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    have_spare_ = true;
    return u * m;
  }

 private:
  using u128 = unsigned __int128;

  static std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  void step() {
    // PCG default 128-bit LCG multiplier.
    const u128 mult =
        (static_cast<u128>(0x2360ed051fc65da4ULL) << 64) | 0x4385df649fccf645ULL;
    state_ = state_ * mult + inc_;
  }

  u128 state_;
  u128 inc_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace tpl
