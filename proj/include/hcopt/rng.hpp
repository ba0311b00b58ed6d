#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace hcopt {

/// SplitMix64 finalizer; used to derive independent stream seeds.
std::uint64_t mix64(std::uint64_t x);

/// FNV-1a hash of a label, used to name derived streams.
std::uint64_t label_hash(std::string_view label);

/// A seeded random stream. Identical (seed, stream) pairs produce identical
/// draw sequences; child streams are derived by hashing, so drawing from one
/// stream never perturbs another.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  RngStream child(std::uint64_t index) const;
  RngStream child(std::string_view label) const;

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform();
  bool coin() { return (engine_() >> 63) != 0; }
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  double normal();

  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace hcopt
