#include "hcopt/rng.hpp"

#include <stdexcept>

namespace hcopt {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t label_hash(std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(mix64(seed ^ mix64(stream))) {}

RngStream RngStream::child(std::uint64_t index) const {
  return RngStream(seed_, mix64(stream_ * 0x2545f4914f6cdd1dULL + index + 1));
}

RngStream RngStream::child(std::string_view label) const {
  return RngStream(seed_, mix64(stream_ ^ label_hash(label)));
}

double RngStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::below(std::uint64_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("RngStream::below: bound must be positive");
  }
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = engine_();
  while (x >= limit) {
    x = engine_();
  }
  return x % bound;
}

double RngStream::normal() { return normal_(engine_); }

}  // namespace hcopt
