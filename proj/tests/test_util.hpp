#pragma once

#include <cstdint>
#include <vector>

#include "solvsym/catalog.hpp"
#include "solvsym/kform.hpp"
#include "solvsym/model.hpp"

namespace testutil {

using solvsym::Rational;
using solvsym::algebra::MultiIndex;
using solvsym::algebra::RationalForm;

/// Deterministic RNG independent of libstdc++ distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi] (inclusive).
  long long uniform(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

inline RationalForm random_form(Rng& rng, int dim, int degree) {
  RationalForm f(degree);
  std::size_t n = solvsym::algebra::binomial(dim, degree);
  for (std::size_t r = 0; r < n; ++r) {
    long long num = rng.uniform(-5, 5);
    if (num == 0) continue;
    long long den = rng.uniform(1, 3);
    f.add_term(solvsym::algebra::multi_index_unrank(r, dim, degree),
               Rational(solvsym::Integer(num), solvsym::Integer(den)));
  }
  return f;
}

inline RationalForm basis(std::initializer_list<int> idx) {
  return RationalForm::basis_element(MultiIndex(idx));
}

}  // namespace testutil
