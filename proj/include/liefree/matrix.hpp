#pragma once

#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "liefree/rational.hpp"

namespace liefree {

using Vec = std::vector<Rational>;

inline bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Vec vec_scaled(const Vec& v, const Rational& c) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

inline void vec_add_scaled(Vec& v, const Vec& w, const Rational& c) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i] * c;
}

/// Dense matrix of exact rationals, row-major.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {
    if (r < 0 || c < 0) throw std::invalid_argument("matrix: negative size");
  }
  Matrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows = static_cast<int>(init.size());
    cols = rows ? static_cast<int>(init.begin()->size()) : 0;
    a.reserve(static_cast<std::size_t>(rows) * cols);
    for (const auto& row : init) {
      if (static_cast<int>(row.size()) != cols)
        throw std::invalid_argument("matrix: ragged initializer");
      for (const auto& x : row) a.push_back(x);
    }
  }

  static Matrix zero(int r, int c) { return Matrix(r, c); }
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix from_rows(const std::vector<Vec>& rs, int ncols) {
    Matrix m(static_cast<int>(rs.size()), ncols);
    for (std::size_t i = 0; i < rs.size(); ++i) {
      if (static_cast<int>(rs[i].size()) != ncols)
        throw std::invalid_argument("matrix: row length mismatch");
      for (int j = 0; j < ncols; ++j) m(static_cast<int>(i), j) = rs[i][j];
    }
    return m;
  }

  Rational& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Rational& operator()(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }

  Vec row(int i) const {
    Vec r(cols);
    for (int j = 0; j < cols; ++j) r[j] = (*this)(i, j);
    return r;
  }
  Vec col(int j) const {
    Vec c(rows);
    for (int i = 0; i < rows; ++i) c[i] = (*this)(i, j);
    return c;
  }

  bool is_zero() const {
    for (const auto& x : a)
      if (x != 0) return false;
    return true;
  }
  bool is_square() const { return rows == cols; }

  Matrix transposed() const {
    Matrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vec apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("matrix: apply size");
    Vec r(rows, Rational(0));
    for (int i = 0; i < rows; ++i) {
      Rational s = 0;
      for (int j = 0; j < cols; ++j)
        if ((*this)(i, j) != 0 && v[j] != 0) s += (*this)(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix: + size");
    Matrix r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix: - size");
    Matrix r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
  }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix: * size");
    Matrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int l = 0; l < x.cols; ++l) {
        const Rational& xv = x(i, l);
        if (xv == 0) continue;
        for (int j = 0; j < y.cols; ++j)
          if (y(l, j) != 0) r(i, j) += xv * y(l, j);
      }
    return r;
  }
  friend Matrix operator*(const Rational& c, const Matrix& x) {
    Matrix r = x;
    for (auto& v : r.a) v *= c;
    return r;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }

  std::string str() const {
    std::ostringstream os;
    for (int i = 0; i < rows; ++i) {
      os << (i ? "\n[" : "[");
      for (int j = 0; j < cols; ++j) os << (j ? " " : "") << rat_to_string((*this)(i, j));
      os << "]";
    }
    return os.str();
  }
};

/// Matrix commutator xy - yx.
inline Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

struct RrefResult {
  Matrix r;
  std::vector<int> pivots;
  int rank = 0;
};

/// Unique reduced row-echelon form; row space is preserved.
inline RrefResult rref(Matrix m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
    Rational inv = Rational(1) / m(r, c);
    for (int j = c; j < m.cols; ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (int j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots), r};
}

/// Exact determinant by fraction-free (Bareiss) elimination: each row is
/// scaled to integers first, then all intermediate entries stay integral.
inline Rational det(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det: non-square matrix");
  const int n = m.rows;
  if (n == 0) return 1;

  std::vector<Int> w(static_cast<std::size_t>(n) * n);
  Int scale = 1;
  for (int i = 0; i < n; ++i) {
    Int l = 1;
    for (int j = 0; j < n; ++j) l = lcm(l, rat_den(m(i, j)));
    for (int j = 0; j < n; ++j) {
      const Rational& x = m(i, j);
      w[static_cast<std::size_t>(i) * n + j] = rat_num(x) * (l / rat_den(x));
    }
    scale *= l;
  }

  auto at = [&](int i, int j) -> Int& { return w[static_cast<std::size_t>(i) * n + j]; };
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (at(i, k) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != k) {
      for (int j = k; j < n; ++j) std::swap(at(p, j), at(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        at(i, j) = (at(k, k) * at(i, j) - at(i, k) * at(k, j)) / prev;
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return make_rational(sign * at(n - 1, n - 1), scale);
}

/// Solves A X = B exactly. Returns the particular solution with free
/// variables set to zero, or nullopt when the system is inconsistent.
inline std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows) throw std::invalid_argument("solve: row count mismatch");
  Matrix aug(a.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug(i, j) = a(i, j);
    for (int j = 0; j < b.cols; ++j) aug(i, a.cols + j) = b(i, j);
  }
  RrefResult rr = rref(std::move(aug));
  Matrix x(a.cols, b.cols);
  for (int r = 0; r < rr.rank; ++r) {
    int p = rr.pivots[r];
    if (p >= a.cols) return std::nullopt;  // pivot in the RHS block
    for (int j = 0; j < b.cols; ++j) x(p, j) = rr.r(r, a.cols + j);
  }
  return x;
}

inline Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: non-square matrix");
  auto x = solve(m, Matrix::identity(m.rows));
  if (!x || !((m * *x) == Matrix::identity(m.rows)))
    throw std::invalid_argument("inverse: singular matrix");
  return *x;
}

/// Row-major flattening of an n x n matrix into K^(n^2) and back; fixes the
/// coordinates used for subspaces of matrix space.
inline Vec mat_flatten(const Matrix& m) { return m.a; }

inline Matrix mat_unflatten(int rows, int cols, const Vec& v) {
  if (static_cast<int>(v.size()) != rows * cols)
    throw std::invalid_argument("mat_unflatten: size mismatch");
  Matrix m(rows, cols);
  m.a = v;
  return m;
}

}  // namespace liefree
