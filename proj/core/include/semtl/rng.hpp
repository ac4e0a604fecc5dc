#ifndef SEMTL_RNG_HPP
#define SEMTL_RNG_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace semtl {

// Deterministic PRNG (splitmix64 core).  We do not use <random>
// distributions because their output is implementation-defined; every
// artifact this library writes must be byte-identical for a given seed
// regardless of the standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ^ kGamma) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += kGamma);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n).  n must be > 0.
  std::uint64_t uniform(std::uint64_t n) {
    // Rejection-free multiply-shift; bias is < 2^-64 * n, irrelevant at the
    // sample counts used here.
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Uniform double in [0, 1).
  double real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return real() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Derives an independent stream from (seed, tag).  Used to give every
  // sweep cell / fold / target its own reproducible generator.
  static Rng derive(std::uint64_t seed, std::uint64_t tag) {
    Rng mixer(seed);
    mixer.state_ ^= 0x9e3779b97f4a7c15ULL * (tag + 1);
    mixer.next_u64();
    return Rng(mixer.next_u64());
  }

  static Rng derive(std::uint64_t seed, const std::string& tag) {
    // FNV-1a over the tag keeps derivation stable across platforms.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : tag) h = (h ^ c) * 0x100000001b3ULL;
    return derive(seed, h);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  std::uint64_t state_;
};

}  // namespace semtl

#endif  // SEMTL_RNG_HPP
