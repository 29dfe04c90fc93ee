#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace perc {

// SplitMix64 finalizer. Used both for seeding engines and for the stateless
// pair-weight hash of implicit complete graphs.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Maps 64 random bits to a double in (0,1). Resolution is 2^-53; the zero
// bucket is nudged up so the result is never exactly 0.
inline double unit_from_bits(std::uint64_t h) {
  std::uint64_t bits = h >> 11;
  if (bits == 0) bits = 1;
  return static_cast<double>(bits) * 0x1.0p-53;
}

// A named, reproducible stream: (seed, stream) -> generator is a pure
// function. Workers derive disjoint streams from the master seed.
struct RandomSource {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  std::uint64_t key() const { return mix64(mix64(seed ^ 0x6a09e667f3bcc909ull) ^ stream); }
  RandomSource derive(std::uint64_t substream) const { return RandomSource{key(), substream}; }
};

// Deterministic generator wrapper. Distributions are implemented by hand so
// output depends only on the engine sequence, not on library internals.
class Rng {
 public:
  explicit Rng(RandomSource src) : eng_(src.key()) {}
  explicit Rng(std::uint64_t raw_key) : eng_(raw_key) {}

  std::uint64_t bits() { return eng_(); }

  double uniform01() { return unit_from_bits(eng_()); }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = eng_();
      if (r >= threshold) return r % n;
    }
  }

  double exp1() { return -std::log(uniform01()); }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u = uniform01();
    const double v = uniform01();
    const double rad = std::sqrt(-2.0 * std::log(u));
    const double ang = 2.0 * 3.14159265358979323846 * v;
    spare_ = rad * std::sin(ang);
    has_spare_ = true;
    return rad * std::cos(ang);
  }

  // Gamma(1/2, 1) via the squared-normal identity.
  double gamma_half() {
    const double z = normal();
    return 0.5 * z * z;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // k distinct values from [1, n], in random order.
  std::vector<std::uint32_t> sample_without_replacement(std::uint32_t n, std::uint32_t k) {
    if (k > n) throw std::invalid_argument("sample_without_replacement: k > n");
    std::vector<std::uint32_t> pool(n);
    for (std::uint32_t i = 0; i < n; ++i) pool[i] = i + 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      const std::uint64_t j = i + below(n - i);
      std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace perc
