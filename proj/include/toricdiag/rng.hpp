#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace toricdiag {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// mt19937_64 with explicit mappings on top. The std distributions are
// implementation-defined, so reports would not be reproducible across
// standard libraries if we used them.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t u64() { return gen_(); }

  // Inclusive on both ends.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  int sign() { return (u64() & 1) ? -1 : 1; }
  bool coin() { return (u64() & 1) != 0; }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(range(0, static_cast<long long>(v.size()) - 1))];
  }

  // k distinct indices from [0, n).
  std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    for (std::size_t i = 0; i < k && i + 1 < n; ++i) {
      std::size_t j = i + static_cast<std::size_t>(u64() % (n - i));
      std::swap(all[i], all[j]);
    }
    all.resize(k < n ? k : n);
    return all;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace toricdiag
