#pragma once

#include <random>

#include "liefree/matrix.hpp"
#include "liefree/subspace.hpp"

namespace liefree::testing {

// Deterministic generator for property-style tests. Entries stay small
// (|num| <= 10, 1 <= den <= 10) so nothing hinges on magnitude.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  int int_in(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(eng);
  }
  Rational rational(int num_bound = 10, int den_bound = 10) {
    return make_rational(int_in(-num_bound, num_bound), int_in(1, den_bound));
  }
  Vec vec(int n) {
    Vec v(n);
    for (auto& x : v) x = rational();
    return v;
  }
  Matrix matrix(int r, int c) {
    Matrix m(r, c);
    for (auto& x : m.a) x = rational();
    return m;
  }
  Subspace subspace(int ambient, int spanning_rows) {
    return Subspace::span_of(matrix(spanning_rows, ambient));
  }
};

}  // namespace liefree::testing
