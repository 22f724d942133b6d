#pragma once

#include "gsp4/linalg.hpp"
#include "gsp4/sampling.hpp"

namespace gsp4::testing {

inline Matrix random_matrix(Sampler& rng, std::size_t rows, std::size_t cols, long bound) {
  std::vector<Vector> r;
  for (std::size_t i = 0; i < rows; ++i) r.push_back(rng.vector(cols, bound));
  return Matrix::from_rows(r);
}

inline Matrix random_invertible(Sampler& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n, 3);
    if (invertible(m)) return m;
  }
}

// J_4 written out entry by entry.
inline Matrix literal_j4() { return Matrix{{0, 0, 0, -1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}}; }

}  // namespace gsp4::testing
