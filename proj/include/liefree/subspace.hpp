#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "liefree/matrix.hpp"

namespace liefree {

/// Linear subspace of K^n held as its unique RREF basis (rank rows, pivot
/// entries 1, zeros above and below pivots). Two subspaces are equal iff
/// their basis matrices are identical.
struct Subspace {
  int ambient = 0;
  Matrix basis;  // rank x ambient, reduced row-echelon form, no zero rows

  Subspace() = default;

  static Subspace zero(int ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Matrix(0, ambient);
    return s;
  }
  static Subspace full(int ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Matrix::identity(ambient);
    return s;
  }
  /// Canonicalizes the row space of `rows_span`.
  static Subspace span_of(const Matrix& rows_span) {
    RrefResult rr = rref(rows_span);
    Subspace s;
    s.ambient = rows_span.cols;
    s.basis = Matrix(rr.rank, rows_span.cols);
    for (int i = 0; i < rr.rank; ++i)
      for (int j = 0; j < rows_span.cols; ++j) s.basis(i, j) = rr.r(i, j);
    return s;
  }
  static Subspace span_of(const std::vector<Vec>& vectors, int ambient) {
    return span_of(Matrix::from_rows(vectors, ambient));
  }

  int dim() const { return basis.rows; }

  std::vector<int> pivot_columns() const {
    std::vector<int> p;
    for (int i = 0; i < basis.rows; ++i)
      for (int j = 0; j < basis.cols; ++j)
        if (basis(i, j) != 0) {
          p.push_back(j);
          break;
        }
    return p;
  }

  /// Reduces v against the RREF basis; membership iff the residue vanishes.
  bool contains(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient)
      throw std::invalid_argument("subspace: ambient dimension mismatch");
    Vec w = v;
    auto piv = pivot_columns();
    for (int i = 0; i < basis.rows; ++i) {
      const Rational& c = w[piv[i]];
      if (c != 0) vec_add_scaled(w, basis.row(i), -c);
    }
    return vec_is_zero(w);
  }

  bool contains(const Subspace& other) const {
    if (other.ambient != ambient)
      throw std::invalid_argument("subspace: ambient dimension mismatch");
    for (int i = 0; i < other.basis.rows; ++i)
      if (!contains(other.basis.row(i))) return false;
    return true;
  }

  friend bool operator==(const Subspace& s, const Subspace& t) {
    return s.ambient == t.ambient && s.basis == t.basis;
  }
};

/// Null space {x : Mx = 0} in canonical form. dim = cols - rank(M).
inline Subspace kernel(const Matrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> rows;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols, Rational(0));
    v[f] = 1;
    for (int r = 0; r < rr.rank; ++r) v[rr.pivots[r]] = -rr.r(r, f);
    rows.push_back(std::move(v));
  }
  return Subspace::span_of(rows, m.cols);
}

inline Subspace sum(const Subspace& s, const Subspace& t) {
  if (s.ambient != t.ambient) throw std::invalid_argument("sum: ambient mismatch");
  Matrix stacked(s.basis.rows + t.basis.rows, s.ambient);
  for (int i = 0; i < s.basis.rows; ++i)
    for (int j = 0; j < s.ambient; ++j) stacked(i, j) = s.basis(i, j);
  for (int i = 0; i < t.basis.rows; ++i)
    for (int j = 0; j < s.ambient; ++j) stacked(s.basis.rows + i, j) = t.basis(i, j);
  return Subspace::span_of(stacked);
}

/// Zassenhaus: reduce [S S; T 0]; rows with vanishing left block carry a
/// basis of the intersection in the right block.
inline Subspace intersect(const Subspace& s, const Subspace& t) {
  if (s.ambient != t.ambient) throw std::invalid_argument("intersect: ambient mismatch");
  const int n = s.ambient;
  Matrix z(s.basis.rows + t.basis.rows, 2 * n);
  for (int i = 0; i < s.basis.rows; ++i)
    for (int j = 0; j < n; ++j) {
      z(i, j) = s.basis(i, j);
      z(i, n + j) = s.basis(i, j);
    }
  for (int i = 0; i < t.basis.rows; ++i)
    for (int j = 0; j < n; ++j) z(s.basis.rows + i, j) = t.basis(i, j);
  RrefResult rr = rref(std::move(z));
  std::vector<Vec> rows;
  for (int i = 0; i < rr.rank; ++i) {
    bool left_zero = true;
    for (int j = 0; j < n && left_zero; ++j)
      if (rr.r(i, j) != 0) left_zero = false;
    if (!left_zero) continue;
    Vec v(n);
    for (int j = 0; j < n; ++j) v[j] = rr.r(i, n + j);
    rows.push_back(std::move(v));
  }
  return Subspace::span_of(rows, n);
}

struct QuotientData {
  Matrix complement;  // (n - dim S) rows: the coordinate vectors not pivotal in S
  Matrix projection;  // (n - dim S) x n, kernel exactly S, identity on the complement
};

/// Complement/projection pair for K^n / S: the complement is spanned by the
/// non-pivot coordinates of S's RREF basis.
inline QuotientData quotient_data(int ambient, const Subspace& s) {
  if (s.ambient != ambient) throw std::invalid_argument("quotient_data: ambient mismatch");
  auto piv = s.pivot_columns();
  std::vector<bool> is_pivot(ambient, false);
  for (int p : piv) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < ambient; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  const int c = static_cast<int>(free_cols.size());
  QuotientData qd;
  qd.complement = Matrix(c, ambient);
  qd.projection = Matrix(c, ambient);
  for (int i = 0; i < c; ++i) {
    qd.complement(i, free_cols[i]) = 1;
    qd.projection(i, free_cols[i]) = 1;
    for (int r = 0; r < s.basis.rows; ++r) qd.projection(i, piv[r]) = -s.basis(r, free_cols[i]);
  }
  return qd;
}

/// Image of S under the linear map with matrix m.
inline Subspace image(const Matrix& m, const Subspace& s) {
  if (m.cols != s.ambient) throw std::invalid_argument("image: size mismatch");
  std::vector<Vec> rows;
  for (int i = 0; i < s.basis.rows; ++i) rows.push_back(m.apply(s.basis.row(i)));
  return Subspace::span_of(rows, m.rows);
}

}  // namespace liefree
