#include <catch2/catch_amalgamated.hpp>

#include "liefree/hall.hpp"
#include "test_support.hpp"

using namespace liefree;

namespace {

// Every (m, k) with m >= 2, k >= 1 and dim n_{m,k} <= cap.
std::vector<std::pair<int, int>> instances_up_to_dim(int cap) {
  std::vector<std::pair<int, int>> out;
  for (int m = 2; m <= cap; ++m) {
    Int total = 0;
    for (int k = 1;; ++k) {
      total += witt_dim_big(m, k);
      if (total > cap) break;
      out.emplace_back(m, k);
    }
    if (witt_dim_big(m, 1) > cap) break;
  }
  return out;
}

}  // namespace

TEST_CASE("witt dimension recursion") {
  CHECK(witt_dim(3, 2) == 3);
  CHECK(witt_dim(3, 3) == 8);
  CHECK(witt_dim(2, 5) == 6);  // (2^5 - 1*2)/5 unfolded by hand
  for (int m = 2; m <= 6; ++m) {
    CHECK(witt_dim(m, 1) == m);
    CHECK(witt_dim(m, 2) == m * (m - 1) / 2);
    CHECK(witt_dim(m, 3) == m * (m * m - 1) / 3);
  }
  CHECK_THROWS_AS(witt_dim(1, 2), std::invalid_argument);
}

TEST_CASE("hall basis small shapes") {
  HallBasis h22(2, 2);
  REQUIRE(h22.size() == 3);
  CHECK(h22.name(0) == "e1");
  CHECK(h22.name(1) == "e2");
  CHECK(h22.name(2) == "[e2,e1]");

  HallBasis h23(2, 3);
  REQUIRE(h23.size() == 5);
  std::vector<int> degrees;
  for (int i = 0; i < h23.size(); ++i) degrees.push_back(h23.degree(i));
  CHECK(degrees == std::vector<int>{1, 1, 2, 3, 3});
  CHECK(h23.name(3) == "[[e2,e1],e1]");
  CHECK(h23.name(4) == "[[e2,e1],e2]");

  CHECK(HallBasis(3, 2).size() == 6);
}

TEST_CASE("hall basis degree counts match the dimension recursion") {
  for (auto [m, k] : instances_up_to_dim(40)) {
    HallBasis hb(m, k);
    for (int s = 1; s <= k; ++s) {
      auto [first, last] = hb.degree_range(s);
      INFO("m=" << m << " k=" << k << " s=" << s);
      CHECK(last - first == witt_dim(m, s));
    }
  }
}

TEST_CASE("hall elements satisfy both admissibility conditions") {
  HallBasis hb(3, 4);
  for (int i = 0; i < hb.size(); ++i) {
    const auto& n = hb.node(i);
    if (n.gen >= 0) continue;
    CHECK(n.left > n.right);  // condition (1)
    const auto& left = hb.node(n.left);
    if (left.gen < 0) CHECK(n.right >= left.right);  // condition (2)
    CHECK(n.degree == hb.node(n.left).degree + hb.node(n.right).degree);
  }
}

TEST_CASE("expansion into the free associative algebra") {
  HallBasis hb(2, 3);
  NcPoly p0 = expand(hb, 0);
  REQUIRE(p0.terms.size() == 1);
  CHECK(p0.terms.at({0}) == 1);

  NcPoly p2 = expand(hb, 2);  // [e2,e1] -> (2,1) - (1,2)
  CHECK(p2.terms.at({1, 0}) == 1);
  CHECK(p2.terms.at({0, 1}) == -1);

  NcPoly p3 = expand(hb, 3);  // [[e2,e1],e1] -> (2,1,1) - 2(1,2,1) + (1,1,2)
  REQUIRE(p3.terms.size() == 3);
  CHECK(p3.terms.at({1, 0, 0}) == 1);
  CHECK(p3.terms.at({0, 1, 0}) == -2);
  CHECK(p3.terms.at({0, 0, 1}) == 1);
}

TEST_CASE("free nilpotent structure constants: integrality, grading, Jacobi") {
  // Jacobi is checked by the LieAlgebra constructor itself; the rest here.
  for (auto [m, k] : instances_up_to_dim(40)) {
    LieAlgebra g = free_nilpotent(m, k);
    HallBasis hb(m, k);
    REQUIRE(g.dim() == hb.size());
    for (int i = 0; i < g.dim(); ++i)
      for (int j = i + 1; j < g.dim(); ++j)
        for (auto& [l, c] : g.bracket_units(i, j)) {
          INFO("m=" << m << " k=" << k << " [" << i << "," << j << "] -> " << l);
          CHECK(rat_den(c) == 1);  // integer structure constants
          CHECK(hb.degree(l) == hb.degree(i) + hb.degree(j));  // grading
        }
  }
}

TEST_CASE("free nilpotent brackets of generators at small sizes") {
  LieAlgebra g22 = free_nilpotent(2, 2);
  CHECK(g22.bracket_units_vec(1, 0) == Vec{0, 0, 1});  // [e2,e1] is the third element

  LieAlgebra g32 = free_nilpotent(3, 2);
  int nonzero_pairs = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!g32.bracket_units(i, j).empty()) ++nonzero_pairs;
  CHECK(nonzero_pairs == 3);
}

namespace {

// Extends the identity-on-generators map to the paper-style presentation by
// evaluating its defining bracket words in `h`, and checks it is a signed
// basis relabeling transporting the structure constants.
void check_signed_relabeling(const LieAlgebra& table_alg, const LieAlgebra& hall_alg,
                             const std::vector<std::pair<int, int>>& defining_brackets) {
  const int n = table_alg.dim();
  REQUIRE(hall_alg.dim() == n);
  const int m = n - static_cast<int>(defining_brackets.size());

  Matrix phi(n, n);  // columns: images of the table basis
  for (int i = 0; i < m; ++i) phi(i, i) = 1;
  for (std::size_t t = 0; t < defining_brackets.size(); ++t) {
    auto [i, j] = defining_brackets[t];
    Vec img = hall_alg.bracket(phi.col(i), phi.col(j));
    for (int r = 0; r < n; ++r) phi(r, m + static_cast<int>(t)) = img[r];
  }

  // signed permutation: every column is +/- a unit vector, all distinct
  std::vector<bool> hit(n, false);
  for (int j = 0; j < n; ++j) {
    int support = -1;
    for (int i = 0; i < n; ++i)
      if (phi(i, j) != 0) {
        REQUIRE(support == -1);
        support = i;
        CHECK((phi(i, j) == 1 || phi(i, j) == -1));
      }
    REQUIRE(support >= 0);
    CHECK_FALSE(hit[support]);
    hit[support] = true;
  }

  // homomorphism on all basis pairs
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      CHECK(hall_alg.bracket(phi.col(i), phi.col(j)) == phi.apply(table_alg.bracket_units_vec(i, j)));
}

}  // namespace

TEST_CASE("hall-engine n32 and n23 match the table presentations up to signs") {
  check_signed_relabeling(n32(), free_nilpotent(3, 2), {{0, 1}, {0, 2}, {1, 2}});
  check_signed_relabeling(n23(), free_nilpotent(2, 3), {{0, 1}, {0, 2}, {1, 2}});
  check_signed_relabeling(heisenberg(1), free_nilpotent(2, 2), {{0, 1}});
}

TEST_CASE("tail sets at k = 5") {
  for (int m : {2, 3, 4}) {
    HallBasis hb(m, 5);
    TailSets ts = tail_sets(hb);
    INFO("m=" << m);
    CHECK(ts.base.size() == ts.extended.size());

    // enumerated count: sum_j (m-j+1)(m-j) == m(m^2-1)/3
    int by_sum = 0;
    for (int j = 1; j <= m; ++j) by_sum += (m - j + 1) * (m - j);
    CHECK(static_cast<int>(ts.extended.size()) == by_sum);
    CHECK(by_sum == m * (m * m - 1) / 3);

    for (int idx : ts.base) CHECK(hb.degree(idx) == 4);
    for (int idx : ts.extended) {
      CHECK(hb.degree(idx) == 5);
      // structurally valid: both conditions hold at the top node
      const auto& node = hb.node(idx);
      CHECK(hb.hall_pair(node.left, node.right));
    }
    CHECK(static_cast<int>(ts.extended.size()) <= witt_dim(m, 5));
  }
  CHECK(tail_sets(HallBasis(2, 5)).extended.size() == 2);
  CHECK(tail_sets(HallBasis(3, 5)).extended.size() == 8);
  CHECK_THROWS_AS(tail_sets(HallBasis(2, 4)), std::invalid_argument);
}

TEST_CASE("tail sets extend to higher degree caps") {
  HallBasis hb(2, 6);
  TailSets ts = tail_sets(hb);
  CHECK(ts.extended.size() == 2);
  for (int idx : ts.extended) CHECK(hb.degree(idx) == 6);
}
