#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liefree/bilinear_form.hpp"
#include "liefree/matrix.hpp"
#include "liefree/subspace.hpp"

namespace liefree {

/// Finite-dimensional Lie algebra over Q presented by structure constants on
/// an ordered basis: [b_i, b_j] = sum_k c_ij^k b_k for i < j, the rest by
/// antisymmetry. The Jacobi identity is verified on construction.
class LieAlgebra {
 public:
  using Terms = std::vector<std::pair<int, Rational>>;  // (basis index, coefficient)
  using BracketTable = std::map<std::pair<int, int>, Terms>;

  LieAlgebra() = default;

  LieAlgebra(int dim, std::vector<std::string> names, BracketTable brackets)
      : dim_(dim), names_(std::move(names)) {
    if (dim < 0) throw std::invalid_argument("lie algebra: negative dimension");
    if (names_.empty())
      for (int i = 1; i <= dim; ++i) names_.push_back("e" + std::to_string(i));
    if (static_cast<int>(names_.size()) != dim)
      throw std::invalid_argument("lie algebra: basis name count mismatch");
    table_.assign(static_cast<std::size_t>(dim) * dim, {});
    for (auto& [ij, terms] : brackets) {
      auto [i, j] = ij;
      if (i < 0 || j < 0 || i >= dim || j >= dim)
        throw std::invalid_argument("lie algebra: bracket index out of range");
      if (i >= j) throw std::invalid_argument("lie algebra: brackets must be given for i < j");
      Terms clean;
      for (auto& [k, c] : terms) {
        if (k < 0 || k >= dim) throw std::invalid_argument("lie algebra: term index out of range");
        if (c != 0) clean.emplace_back(k, c);
      }
      table_[idx(i, j)] = clean;
      Terms neg;
      for (auto& [k, c] : clean) neg.emplace_back(k, -c);
      table_[idx(j, i)] = std::move(neg);
    }
    check_jacobi();
  }

  int dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::string& basis_name(int i) const { return names_.at(i); }

  /// Sparse coordinates of [b_i, b_j]; valid for any i, j.
  const Terms& bracket_units(int i, int j) const { return table_[idx(i, j)]; }

  Vec bracket_units_vec(int i, int j) const {
    Vec v(dim_, Rational(0));
    for (auto& [k, c] : bracket_units(i, j)) v[k] = c;
    return v;
  }

  Vec bracket(const Vec& x, const Vec& y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
      throw std::invalid_argument("bracket: dimension mismatch");
    Vec r(dim_, Rational(0));
    for (int i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < dim_; ++j) {
        if (y[j] == 0) continue;
        const Rational f = x[i] * y[j];
        for (auto& [k, c] : bracket_units(i, j)) r[k] += f * c;
      }
    }
    return r;
  }

  /// Matrix of ad(x): y -> [x, y].
  Matrix ad(const Vec& x) const {
    Matrix m(dim_, dim_);
    for (int j = 0; j < dim_; ++j)
      for (int i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (auto& [k, c] : bracket_units(i, j)) m(k, j) += x[i] * c;
      }
    return m;
  }

  Matrix ad_unit(int i) const {
    Matrix m(dim_, dim_);
    for (int j = 0; j < dim_; ++j)
      for (auto& [k, c] : bracket_units(i, j)) m(k, j) = c;
    return m;
  }

  /// Structural equality: same dimension and identical structure constants
  /// (basis names are ignored).
  friend bool same_structure(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * dim_ + j; }

  void check_jacobi() const {
    for (int i = 0; i < dim_; ++i)
      for (int j = i + 1; j < dim_; ++j)
        for (int k = j + 1; k < dim_; ++k) {
          Vec acc(dim_, Rational(0));
          accumulate_nested(acc, i, j, k);
          accumulate_nested(acc, j, k, i);
          accumulate_nested(acc, k, i, j);
          if (!vec_is_zero(acc))
            throw std::invalid_argument(
                "lie algebra: Jacobi identity fails on basis triple (" + std::to_string(i + 1) +
                "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
        }
  }

  // acc += [[b_i, b_j], b_k]
  void accumulate_nested(Vec& acc, int i, int j, int k) const {
    for (auto& [l, c] : bracket_units(i, j))
      for (auto& [p, d] : bracket_units(l, k)) acc[p] += c * d;
  }

  int dim_ = 0;
  std::vector<std::string> names_;
  std::vector<Terms> table_;  // dim x dim, antisymmetric
};

/// Lower and upper central series together with the derived invariants.
struct SeriesReport {
  std::vector<Subspace> lower;  // C^0 = g, C^1, ... up to stabilization
  std::vector<Subspace> upper;  // C_0 = 0, C_1 = center, ... up to stabilization
  std::optional<int> nilpotency_class;  // least r with C^r = 0; empty if none
  bool two_step_solvable = false;

  const Subspace& lower_at(int r) const {
    return lower[std::min<std::size_t>(r, lower.size() - 1)];
  }
  const Subspace& upper_at(int r) const {
    return upper[std::min<std::size_t>(r, upper.size() - 1)];
  }
  const Subspace& center() const { return upper_at(1); }
};

inline Subspace derived(const LieAlgebra& g, int order);

inline SeriesReport series(const LieAlgebra& g) {
  const int n = g.dim();
  SeriesReport rep;

  rep.lower.push_back(Subspace::full(n));
  for (int r = 1; r <= n + 1; ++r) {
    const Subspace& prev = rep.lower.back();
    std::vector<Vec> gen;
    for (int i = 0; i < n; ++i)
      for (int v = 0; v < prev.basis.rows; ++v) {
        Vec w = g.ad_unit(i).apply(prev.basis.row(v));
        if (!vec_is_zero(w)) gen.push_back(std::move(w));
      }
    Subspace next = Subspace::span_of(gen, n);
    bool stable = next == prev;
    rep.lower.push_back(std::move(next));
    if (stable || rep.lower.back().dim() == 0) break;
  }
  if (rep.lower.back().dim() == 0)
    rep.nilpotency_class = static_cast<int>(rep.lower.size()) - 1;

  std::vector<Matrix> ad_right(n);  // x -> [x, b_j] is -ad(b_j)
  for (int j = 0; j < n; ++j) ad_right[j] = Rational(-1) * g.ad_unit(j);

  rep.upper.push_back(Subspace::zero(n));
  for (int r = 1; r <= n + 1; ++r) {
    const Subspace& prev = rep.upper.back();
    Matrix q = quotient_data(n, prev).projection;
    Matrix stacked(q.rows * n, n);
    for (int j = 0; j < n; ++j) {
      Matrix qa = q * ad_right[j];
      for (int i = 0; i < qa.rows; ++i)
        for (int c = 0; c < n; ++c) stacked(j * q.rows + i, c) = qa(i, c);
    }
    Subspace next = q.rows == 0 ? Subspace::full(n) : kernel(stacked);
    bool stable = next == prev;
    rep.upper.push_back(std::move(next));
    if (stable) break;
  }

  rep.two_step_solvable = derived(g, 2).dim() == 0;
  return rep;
}

/// g' = [g, g] for order 1, g'' = [g', g'] for order 2.
inline Subspace derived(const LieAlgebra& g, int order) {
  if (order != 1 && order != 2) throw std::invalid_argument("derived: order must be 1 or 2");
  const int n = g.dim();
  std::vector<Vec> gen;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec w = g.bracket_units_vec(i, j);
      if (!vec_is_zero(w)) gen.push_back(std::move(w));
    }
  Subspace d1 = Subspace::span_of(gen, n);
  if (order == 1) return d1;
  std::vector<Vec> gen2;
  for (int i = 0; i < d1.basis.rows; ++i)
    for (int j = i + 1; j < d1.basis.rows; ++j) {
      Vec w = g.bracket(d1.basis.row(i), d1.basis.row(j));
      if (!vec_is_zero(w)) gen2.push_back(std::move(w));
    }
  return Subspace::span_of(gen2, n);
}

/// Quotient by an ideal, with the projection onto the complement of the
/// ideal's pivot coordinates. Throws if the subspace is not an ideal.
inline std::pair<LieAlgebra, Matrix> quotient(const LieAlgebra& g, const Subspace& ideal) {
  const int n = g.dim();
  if (ideal.ambient != n) throw std::invalid_argument("quotient: ambient mismatch");
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < ideal.basis.rows; ++v)
      if (!ideal.contains(g.ad_unit(i).apply(ideal.basis.row(v))))
        throw std::invalid_argument("quotient: subspace is not an ideal (fails at [" +
                                    g.basis_name(i) + ", ideal basis " + std::to_string(v + 1) +
                                    "])");

  QuotientData qd = quotient_data(n, ideal);
  const int q = qd.projection.rows;
  std::vector<int> rep(q);  // coordinate representative of each quotient basis vector
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < n; ++j)
      if (qd.complement(i, j) != 0) {
        rep[i] = j;
        break;
      }

  std::vector<std::string> names;
  for (int i = 0; i < q; ++i) names.push_back(g.basis_name(rep[i]));

  LieAlgebra::BracketTable table;
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b) {
      Vec w = qd.projection.apply(g.bracket_units_vec(rep[a], rep[b]));
      LieAlgebra::Terms terms;
      for (int k = 0; k < q; ++k)
        if (w[k] != 0) terms.emplace_back(k, w[k]);
      if (!terms.empty()) table[{a, b}] = std::move(terms);
    }
  return {LieAlgebra(q, std::move(names), std::move(table)), qd.projection};
}

/// Heisenberg algebra of dimension 2n+1: [X_i, Y_i] = Z.
inline LieAlgebra heisenberg(int n) {
  if (n < 1) throw std::invalid_argument("heisenberg: n must be >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("Y" + std::to_string(i));
  names.push_back("Z");
  LieAlgebra::BracketTable table;
  for (int i = 0; i < n; ++i) table[{i, n + i}] = {{2 * n, Rational(1)}};
  return LieAlgebra(2 * n + 1, std::move(names), std::move(table));
}

/// Semidirect sum g x g* via the coadjoint action, with the split neutral
/// pairing <(x,f),(y,h)> = f(y) + h(x). The pairing is ad-invariant.
inline std::pair<LieAlgebra, BilinearForm> cotangent_double(const LieAlgebra& g) {
  const int n = g.dim();
  std::vector<std::string> names = g.basis_names();
  for (int i = 0; i < n; ++i) names.push_back(g.basis_name(i) + "*");

  LieAlgebra::BracketTable table;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      LieAlgebra::Terms t;
      for (auto& [k, c] : g.bracket_units(i, j)) t.emplace_back(k, c);
      if (!t.empty()) table[{i, j}] = std::move(t);
    }
  // [b_i, f^j] = -sum_l c_il^j f^l  (coadjoint action)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LieAlgebra::Terms t;
      for (int l = 0; l < n; ++l)
        for (auto& [k, c] : g.bracket_units(i, l))
          if (k == j) t.emplace_back(n + l, -c);
      if (!t.empty()) table[{i, n + j}] = std::move(t);
    }

  Matrix gram(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    gram(i, n + i) = 1;
    gram(n + i, i) = 1;
  }
  return {LieAlgebra(2 * n, std::move(names), std::move(table)),
          BilinearForm(std::move(gram))};
}

/// The 6-dimensional free 2-step nilpotent algebra on three generators in
/// its standard presentation: [e1,e2]=e4, [e1,e3]=e5, [e2,e3]=e6.
inline LieAlgebra n32() {
  LieAlgebra::BracketTable t;
  t[{0, 1}] = {{3, Rational(1)}};
  t[{0, 2}] = {{4, Rational(1)}};
  t[{1, 2}] = {{5, Rational(1)}};
  return LieAlgebra(6, {}, std::move(t));
}

/// The 5-dimensional free 3-step nilpotent algebra on two generators in its
/// standard presentation: [e1,e2]=e3, [e1,e3]=e4, [e2,e3]=e5.
inline LieAlgebra n23() {
  LieAlgebra::BracketTable t;
  t[{0, 1}] = {{2, Rational(1)}};
  t[{0, 2}] = {{3, Rational(1)}};
  t[{1, 2}] = {{4, Rational(1)}};
  return LieAlgebra(5, {}, std::move(t));
}

}  // namespace liefree
