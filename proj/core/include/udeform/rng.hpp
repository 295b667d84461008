#ifndef UDEFORM_RNG_HPP
#define UDEFORM_RNG_HPP

#include <cstdint>

#include "udeform/poly.hpp"

namespace udeform {

/// Counter-based generator: value depends only on (seed, counter), so
/// probe batteries are reproducible under any execution order.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t at(std::uint64_t counter) const {
    std::uint64_t z = seed_ + counter * 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t counter, std::uint64_t bound) const {
    return at(counter) % bound;
  }

  /// Gaussian rational with numerators in [-9, 9], denominators in [1, 9].
  Scalar small_scalar(std::uint64_t counter) const {
    auto pick = [&](int slot) {
      return static_cast<long>(below(counter * 4 + slot, 19)) - 9;
    };
    long rn = pick(0), in = pick(1);
    long rd = static_cast<long>(below(counter * 4 + 2, 9)) + 1;
    long id = static_cast<long>(below(counter * 4 + 3, 9)) + 1;
    return Scalar(mpq_class(rn, rd), mpq_class(in, id));
  }

  /// Dense-ish random polynomial of total degree <= max_degree.
  Poly poly(std::uint64_t counter, int nvars, int max_degree) const {
    Poly out(nvars);
    std::uint64_t c = counter * 1000;
    int terms = 2 + static_cast<int>(below(c++, 4));
    for (int t = 0; t < terms; ++t) {
      Exponents e(nvars, 0);
      int budget = static_cast<int>(below(c++, max_degree + 1));
      for (int i = 0; i < nvars && budget > 0; ++i) {
        int k = static_cast<int>(below(c++, budget + 1));
        e[i] = static_cast<std::uint32_t>(k);
        budget -= k;
      }
      out.add_term(e, small_scalar(c++));
    }
    return out;
  }

private:
  std::uint64_t seed_;
};

}  // namespace udeform

#endif
