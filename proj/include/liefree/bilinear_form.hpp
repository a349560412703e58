#pragma once

#include <stdexcept>
#include <utility>

#include "liefree/matrix.hpp"

namespace liefree {

/// Symmetric bilinear form given by its Gram matrix in the working basis.
struct BilinearForm {
  Matrix gram;

  BilinearForm() = default;
  explicit BilinearForm(Matrix g) : gram(std::move(g)) {
    if (!gram.is_square()) throw std::invalid_argument("bilinear form: non-square gram");
    if (!(gram == gram.transposed()))
      throw std::invalid_argument("bilinear form: gram not symmetric");
  }

  int dim() const { return gram.rows; }

  Rational eval(const Vec& x, const Vec& y) const {
    if (static_cast<int>(x.size()) != gram.rows || static_cast<int>(y.size()) != gram.cols)
      throw std::invalid_argument("bilinear form: size mismatch");
    Rational s = 0;
    for (int i = 0; i < gram.rows; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < gram.cols; ++j)
        if (gram(i, j) != 0 && y[j] != 0) s += x[i] * gram(i, j) * y[j];
    }
    return s;
  }

  bool nondegenerate() const { return det(gram) != 0; }
};

}  // namespace liefree
