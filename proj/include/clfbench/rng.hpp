#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace clfbench {

/// Deterministic counter-based generator built on the SplitMix64 finalizer.
/// Output i of a stream is mix64(seed + (i+1) * GOLDEN), so the sequence is a
/// pure function of the seed and reproduces exactly on any platform with
/// 64-bit integers. Child streams are pure functions of (seed, label), which
/// lets independent tasks draw from disjoint streams without sharing state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1), 53 significant bits.
  double next_unit();

  /// Uniform double in (0, 1), never exactly 0 or 1.
  double next_unit_open();

  /// Standard normal draw via the inverse-CDF transform (one uniform in,
  /// one normal out; no rejection loop).
  double next_normal();

  double next_uniform(double lo, double hi);

  /// Uniform integer in [lo, hi], inclusive.
  std::int64_t next_int(std::int64_t lo, std::int64_t hi);

  std::uint64_t seed() const { return seed_; }

  /// Independent child stream identified by (seed, label). Does not consume
  /// or depend on this stream's position.
  Rng derive(std::uint64_t label) const;

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

/// Inverse of the standard normal CDF (Wichura's AS241 rational
/// approximations, accurate to full double precision). p must be in (0, 1).
double inverse_normal_cdf(double p);

/// n independent N(0,1) draws from the given stream.
std::vector<double> standard_normals(Rng& rng, std::size_t n);

}  // namespace clfbench
