#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace cci {

/// Deterministic PRNG with a platform-independent output stream.
///
/// std::shuffle and the standard distributions are implementation-defined,
/// so every shuffle/sample in the toolkit goes through this class instead.
/// The engine is splitmix64; draws below a bound use rejection sampling,
/// which keeps them unbiased and reproducible everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n); n must be > 0.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % n;
  }

  /// Fisher-Yates, identity permutation allowed.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

  /// k distinct indices from [0, n), in random order. Requires k <= n.
  std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k) {
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    std::vector<std::size_t> picked;
    picked.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t j = i + static_cast<std::size_t>(below(n - i));
      std::swap(pool[i], pool[j]);
      picked.push_back(pool[i]);
    }
    return picked;
  }

 private:
  std::uint64_t state_;
};

/// FNV-1a over the raw bytes; stable across platforms.
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Seed for a (master seed, record id, stream salt) triple. Each builder
/// salts its own stream so enabling or disabling other objective groups
/// never shifts the draws it sees.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view id,
                                 std::string_view salt = {}) {
  std::uint64_t z = master ^ fnv1a64(id) ^ (fnv1a64(salt) << 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace cci
