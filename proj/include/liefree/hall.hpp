#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liefree/liealg.hpp"
#include "liefree/matrix.hpp"

namespace liefree {

/// Dimension d_m(s) of the degree-s layer of the free Lie algebra on m
/// generators, from the recursion s*d_m(s) = m^s - sum_{r|s, r<s} r*d_m(r).
inline Int witt_dim_big(int m, int s) {
  if (m < 2 || s < 1) throw std::invalid_argument("witt_dim: need m >= 2, s >= 1");
  std::vector<Int> d(s + 1);
  for (int t = 1; t <= s; ++t) {
    Int p = 1;
    for (int i = 0; i < t; ++i) p *= m;
    for (int r = 1; r < t; ++r)
      if (t % r == 0) p -= r * d[r];
    d[t] = p / t;
  }
  return d[s];
}

inline int witt_dim(int m, int s) {
  Int d = witt_dim_big(m, s);
  if (d > 1000000000) throw std::overflow_error("witt_dim: value out of int range");
  return static_cast<int>(d);
}

/// Hall basis of the free k-step nilpotent Lie algebra on m generators.
///
/// Elements are bracket trees stored by index; the index order is the total
/// order: first by length, ties by (left rank, right rank) lexicographically,
/// generators e1 < ... < em. A compound [E, F] (E = left, F = right) is
/// admitted when E > F and, if E = [G, H], F >= H.
class HallBasis {
 public:
  struct Node {
    int gen = -1;    // generator index (0-based) when a leaf
    int left = -1;   // basis index of E in [E, F]
    int right = -1;  // basis index of F
    int degree = 1;
  };

  HallBasis(int m, int k) : m_(m), k_(k) {
    if (m < 2 || k < 1) throw std::invalid_argument("hall basis: need m >= 2, k >= 1");
    for (int g = 0; g < m; ++g) {
      Node n;
      n.gen = g;
      nodes_.push_back(n);
    }
    ranges_.push_back({0, m});
    for (int s = 2; s <= k; ++s) {
      int first = static_cast<int>(nodes_.size());
      int limit = first;  // only elements of degree < s can be children
      for (int u = 0; u < limit; ++u)
        for (int v = 0; v < u; ++v) {
          if (nodes_[u].degree + nodes_[v].degree != s) continue;
          if (!hall_pair(u, v)) continue;
          Node n;
          n.left = u;
          n.right = v;
          n.degree = s;
          compound_index_[{u, v}] = static_cast<int>(nodes_.size());
          nodes_.push_back(n);
        }
      ranges_.push_back({first, static_cast<int>(nodes_.size())});
    }
  }

  int generator_count() const { return m_; }
  int degree_cap() const { return k_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int i) const { return nodes_.at(i); }
  int degree(int i) const { return nodes_.at(i).degree; }

  /// Index range [first, last) of the elements of degree s.
  std::pair<int, int> degree_range(int s) const {
    if (s < 1 || s > k_) throw std::invalid_argument("hall basis: degree out of range");
    return ranges_[s - 1];
  }

  /// Both admissibility conditions for the candidate compound [u, v].
  bool hall_pair(int u, int v) const {
    if (u <= v) return false;  // condition (1): E > F in the total order
    const Node& e = nodes_[u];
    if (e.gen < 0 && v < e.right) return false;  // condition (2): F >= H
    return true;
  }

  /// Basis index of the compound [left, right], or -1 when absent.
  int find_compound(int left, int right) const {
    auto it = compound_index_.find({left, right});
    return it == compound_index_.end() ? -1 : it->second;
  }

  std::string name(int i) const {
    const Node& n = nodes_.at(i);
    if (n.gen >= 0) return "e" + std::to_string(n.gen + 1);
    return "[" + name(n.left) + "," + name(n.right) + "]";
  }

 private:
  int m_, k_;
  std::vector<Node> nodes_;
  std::vector<std::pair<int, int>> ranges_;
  std::map<std::pair<int, int>, int> compound_index_;
};

/// Polynomial in the free associative algebra on m generators, truncated at
/// a fixed total degree. Words are generator-index sequences.
struct NcPoly {
  std::map<std::vector<int>, Rational> terms;

  static NcPoly word(std::vector<int> w) {
    NcPoly p;
    p.terms[std::move(w)] = 1;
    return p;
  }

  NcPoly& add_scaled(const NcPoly& other, const Rational& c) {
    for (auto& [w, x] : other.terms) terms[w] += c * x;
    for (auto it = terms.begin(); it != terms.end();)
      it = it->second == 0 ? terms.erase(it) : std::next(it);
    return *this;
  }

  friend NcPoly mul_truncated(const NcPoly& a, const NcPoly& b, int max_deg) {
    NcPoly r;
    for (auto& [wa, ca] : a.terms)
      for (auto& [wb, cb] : b.terms) {
        if (static_cast<int>(wa.size() + wb.size()) > max_deg) continue;
        std::vector<int> w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        r.terms[std::move(w)] += ca * cb;
      }
    for (auto it = r.terms.begin(); it != r.terms.end();)
      it = it->second == 0 ? r.terms.erase(it) : std::next(it);
    return r;
  }

  friend NcPoly nc_bracket(const NcPoly& a, const NcPoly& b, int max_deg) {
    NcPoly r = mul_truncated(a, b, max_deg);
    r.add_scaled(mul_truncated(b, a, max_deg), -1);
    return r;
  }
};

/// Expansion of a Hall element into the truncated free associative algebra:
/// generators map to length-1 words, [u, v] to uv - vu.
inline NcPoly expand(const HallBasis& hb, int index) {
  const auto& n = hb.node(index);
  if (n.gen >= 0) return NcPoly::word({n.gen});
  return nc_bracket(expand(hb, n.left), expand(hb, n.right), hb.degree_cap());
}

namespace detail {

inline long long word_code(const std::vector<int>& w, int m) {
  long long c = 0;
  for (int g : w) c = c * m + g;
  return c;
}

}  // namespace detail

/// Structure constants of the free k-step nilpotent algebra on m generators
/// over its Hall basis, via expansion into the free associative algebra and
/// exact linear solves degree by degree. The expansions of the degree-s
/// basis elements are checked to be linearly independent at runtime.
inline LieAlgebra free_nilpotent(int m, int k) {
  HallBasis hb(m, k);
  const int n = hb.size();

  std::vector<NcPoly> ex(n);
  for (int i = 0; i < n; ++i) ex[i] = expand(hb, i);

  LieAlgebra::BracketTable table;
  for (int s = 2; s <= k; ++s) {
    auto [first, last] = hb.degree_range(s);
    const int nbasis = last - first;
    if (nbasis == 0) continue;

    long long words = 1;
    for (int t = 0; t < s; ++t) words *= m;

    std::vector<std::pair<int, int>> pairs;  // brackets landing in degree s
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (hb.degree(i) + hb.degree(j) == s) pairs.emplace_back(i, j);

    Matrix aug(static_cast<int>(words), nbasis + static_cast<int>(pairs.size()));
    for (int t = 0; t < nbasis; ++t)
      for (auto& [w, c] : ex[first + t].terms)
        aug(static_cast<int>(detail::word_code(w, m)), t) = c;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      NcPoly br = nc_bracket(ex[pairs[p].first], ex[pairs[p].second], k);
      for (auto& [w, c] : br.terms)
        aug(static_cast<int>(detail::word_code(w, m)), nbasis + static_cast<int>(p)) = c;
    }

    RrefResult rr = rref(std::move(aug));
    for (int r = 0; r < rr.rank; ++r)
      if (rr.pivots[r] >= nbasis)
        throw std::logic_error(
            "free_nilpotent: Hall expansions of degree " + std::to_string(s) +
            " are not linearly independent / bracket not in their span");
    if (rr.rank != nbasis)
      throw std::logic_error("free_nilpotent: Hall expansions of degree " + std::to_string(s) +
                             " are linearly dependent");

    for (std::size_t p = 0; p < pairs.size(); ++p) {
      LieAlgebra::Terms terms;
      for (int r = 0; r < nbasis; ++r) {
        const Rational& c = rr.r(r, nbasis + static_cast<int>(p));
        if (c != 0) terms.emplace_back(first + r, c);
      }
      if (!terms.empty()) table[pairs[p]] = std::move(terms);
    }
  }

  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(hb.name(i));
  return LieAlgebra(n, std::move(names), std::move(table));
}

/// Free metabelian k-step nilpotent algebra: the quotient of the free one by
/// its second derived subalgebra.
inline LieAlgebra free_metabelian(int m, int k) {
  LieAlgebra g = free_nilpotent(m, k);
  return quotient(g, derived(g, 2)).first;
}

/// The tail sets used to bound the center dimension for k >= 5: `base` holds
/// [[[e_i, e_j], e_l], e_m] for 1 <= j < i <= m, l >= j (all of degree 4),
/// `extended` their (k-4)-fold right-brackets with the last generator e_m
/// (all of degree k). Indices refer to elements of `hb`; every step is
/// resolved through the basis, so membership is verified structurally.
struct TailSets {
  std::vector<int> base;
  std::vector<int> extended;
};

inline TailSets tail_sets(const HallBasis& hb) {
  const int m = hb.generator_count();
  const int k = hb.degree_cap();
  if (k < 5) throw std::invalid_argument("tail_sets: need k >= 5");

  TailSets ts;
  for (int j = 0; j < m; ++j)
    for (int i = j + 1; i < m; ++i) {
      int ij = hb.find_compound(i, j);
      if (ij < 0) throw std::logic_error("tail_sets: [e_i, e_j] missing from basis");
      for (int l = j; l < m; ++l) {
        int ijl = hb.find_compound(ij, l);
        if (ijl < 0) throw std::logic_error("tail_sets: [[e_i, e_j], e_l] missing from basis");
        int x = hb.find_compound(ijl, m - 1);
        if (x < 0) throw std::logic_error("tail_sets: degree-4 element missing from basis");
        ts.base.push_back(x);
        for (int s = 0; s < k - 4; ++s) {
          x = hb.find_compound(x, m - 1);
          if (x < 0) throw std::logic_error("tail_sets: tail element missing from basis");
        }
        ts.extended.push_back(x);
      }
    }
  return ts;
}

}  // namespace liefree
