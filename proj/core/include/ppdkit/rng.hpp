#pragma once

#include <cstdint>
#include <random>

namespace ppdkit {

// Seeded random source with explicit stream separation. The same
// (seed, stream) pair reproduces the same draw sequence across runs; distinct
// streams give statistically independent sequences. One chain owns one
// stream. All variate transforms are implemented here (not std distributions,
// whose algorithms are implementation-defined) so sequences are stable.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  // Uniform on [0, 1) with 53 random bits.
  double uniform01();
  // Standard normal via the Marsaglia polar method (pairs, one cached).
  double normal();
  double normal(double mean, double sd) { return mean + sd * normal(); }
  // Gamma(shape, scale) via Marsaglia-Tsang, with the boost for shape < 1.
  double gamma(double shape, double scale);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_ = 0;
  std::uint64_t stream_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace ppdkit
