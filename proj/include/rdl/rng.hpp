#pragma once

#include <cstdint>
#include <vector>

namespace rdl {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stateless mix used by the seeded-random coloring rule: the color of a pair
// must be a pure function of (seed, u, v).
inline std::uint64_t mix3(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t s = a;
  s ^= 0x9e3779b97f4a7c15ULL + (b << 6) + (b >> 2);
  std::uint64_t x = splitmix64(s);
  s ^= 0x9e3779b97f4a7c15ULL + (c << 6) + (c >> 2) + x;
  return splitmix64(s);
}

// Deterministic generator; std:: engines/distributions are avoided because
// distribution output is implementation-defined and reports must be
// byte-identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x853c49e6748fea9bULL) {}

  std::uint64_t next() { return splitmix64(state_); }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) {
    // multiply-shift with rejection to stay unbiased
    if (n == 0) return 0;
    std::uint64_t threshold = (-n) % n;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace rdl
