#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "k3dream/errors.hpp"
#include "k3dream/linalg.hpp"
#include "k3dream/quadric.hpp"
#include "oracles.hpp"

using namespace k3dream;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                        int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
  return m;
}

bool is_hnf(const IntMatrix& h) {
  long prev_pivot_col = -1;
  bool seen_zero_row = false;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    long pivot = -1;
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h.at(i, j) != 0) {
        pivot = static_cast<long>(j);
        break;
      }
    if (pivot < 0) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;           // zero rows trail
    if (pivot <= prev_pivot_col) return false; // echelon
    if (h.at(i, pivot) <= 0) return false;     // positive pivots
    for (std::size_t r = 0; r < i; ++r) {
      if (h.at(r, pivot) < 0) return false;    // reduced above
      if (h.at(r, pivot) >= h.at(i, pivot)) return false;
    }
    prev_pivot_col = pivot;
  }
  return true;
}

} // namespace

TEST_CASE("hnf: identity and diagonal inputs are fixed points") {
  IntMatrix id = IntMatrix::identity(2);
  auto [h, u] = hermite_normal_form(id);
  CHECK(h == id);
  CHECK(u == id);

  IntMatrix diag{{2, 0}, {0, 3}};
  auto r = hermite_normal_form(diag);
  CHECK(r.h == diag);
  CHECK(r.u == id);
}

TEST_CASE("hnf: determinant magnitude is preserved") {
  IntMatrix m{{2, 4}, {6, 8}};
  auto [h, u] = hermite_normal_form(m);
  CHECK(abs(oracles::cofactor_det(h)) == abs(oracles::cofactor_det(m)));
  CHECK(abs(oracles::cofactor_det(m)) == 8);
  CHECK(abs(u.det()) == 1);
  CHECK(u * m == h);
  CHECK(is_hnf(h));
}

TEST_CASE("hnf: random matrices, idempotence and unimodularity") {
  std::mt19937 rng(20240901);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    IntMatrix m = random_matrix(rng, rows, cols, -9, 9);
    auto [h, u] = hermite_normal_form(m);
    CHECK(u * m == h);
    CHECK(abs(u.det()) == 1);
    CHECK(is_hnf(h));
    auto again = hermite_normal_form(h);
    CHECK(again.h == h);
    if (rows == cols)
      CHECK(abs(h.det()) == abs(oracles::cofactor_det(m)));
  }
}

TEST_CASE("integer_kernel: pinned examples") {
  IntMatrix m{{1, 2}};
  auto basis = integer_kernel(m);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == IntVector{2, -1});

  CHECK(integer_kernel(IntMatrix::identity(3)).empty());

  IntMatrix zero(1, 2);
  auto full = integer_kernel(zero);
  REQUIRE(full.size() == 2);
  CHECK(full[0] == IntVector{1, 0});
  CHECK(full[1] == IntVector{0, 1});
}

TEST_CASE("integer_kernel: saturation against a box scan") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + rng() % 2, cols = 2 + rng() % 2;
    IntMatrix m = random_matrix(rng, rows, cols, -3, 3);
    auto basis = integer_kernel(m);
    for (const auto& v : basis) {
      IntVector image = m * v;
      for (const auto& entry : image) CHECK(entry == 0);
    }
    // Every small kernel vector must be an integer combination of the basis.
    for (const auto& v : oracles::kernel_box_scan(m, 4))
      CHECK(oracles::in_integer_span(basis, v));
  }
}

TEST_CASE("orthogonal_complement: contraction example") {
  IntMatrix gram{{4, 2, 0, 0}, {2, -2, 1, 1}, {0, 1, -2, 0}, {0, 1, 0, -2}};
  auto [basis, cgram] = orthogonal_complement(gram, {2, 3});
  CHECK(cgram == IntMatrix{{4, 0}, {0, -8}});
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis)
    for (std::size_t idx : {2, 3}) {
      IntVector e(4);
      e[idx] = 1;
      CHECK(gram_pair(gram, v, e) == 0);
    }
}

TEST_CASE("orthogonal_complement: diagonal and degenerate index sets") {
  IntMatrix gram{{2, 0}, {0, -2}};
  auto one = orthogonal_complement(gram, {1});
  CHECK(one.gram == IntMatrix{{2}});

  auto none = orthogonal_complement(gram, {0, 1});
  CHECK(none.basis.empty());
  CHECK(none.gram.rows() == 0);
}

TEST_CASE("orthogonal_complement: pairing property on random grams") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + rng() % 3;
    IntMatrix a = random_matrix(rng, n, n, -3, 3);
    IntMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        gram.at(i, j) = a.at(i, j) + a.at(j, i);
    std::vector<std::size_t> indices{rng() % n};
    auto [basis, cgram] = orthogonal_complement(gram, indices);
    CHECK(cgram.is_symmetric());
    for (const auto& v : basis)
      for (std::size_t idx : indices) {
        IntVector e(n);
        e[idx] = 1;
        CHECK(gram_pair(gram, v, e) == 0);
      }
  }
}

TEST_CASE("solve_linear: identity, ledger slice, and failures") {
  RatMatrix id = RatMatrix::identity(2);
  RatVector b{Rat(3, 5), Rat(-2)};
  CHECK(solve_linear(id, b) == b);

  // Two relations of the degree-10 case pinned as a raw system:
  // s1 = 3 H.G1 - G1.G2 and s1 + s2 = 9 H.H - 2 G1.G2.
  RatMatrix a{{Rat(1), Rat(0)}, {Rat(1), Rat(1)}};
  RatVector rhs{Rat(3) * Rat(1) - Rat(5), Rat(9) * Rat(2, 3) - Rat(10)};
  RatVector solved = solve_linear(a, rhs);
  CHECK(solved[0] == -2); // Gamma_1^2
  CHECK(solved[1] == -2); // Gamma_2^2

  RatMatrix over{{Rat(1)}, {Rat(1)}};
  CHECK_THROWS_AS(solve_linear(over, RatVector{Rat(1), Rat(2)}),
                  InconsistentSystem);
  RatMatrix sing{{Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
  CHECK_THROWS_AS(solve_linear(sing, RatVector{Rat(1), Rat(2)}),
                  SingularSystem);
  CHECK_THROWS_AS(solve_linear(sing, RatVector{Rat(1), Rat(2)}), Error);
}

TEST_CASE("solve_linear: overdetermined consistent systems verify exactly") {
  RatMatrix a{{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}, {Rat(2), Rat(0)}};
  RatVector b{Rat(3), Rat(1), Rat(4)};
  RatVector x = solve_linear(a, b);
  CHECK(x == RatVector{Rat(2), Rat(1)});
}

TEST_CASE("enumerate_quadric: one-dimensional and error cases") {
  QuadricSpec q(RatMatrix{{Rat(-2)}}, RatVector{Rat(0)}, Rat(0), Rat(-2));
  auto sols = enumerate_quadric(q);
  REQUIRE(sols.size() == 2);
  CHECK(sols[0] == IntVector{-1});
  CHECK(sols[1] == IntVector{1});

  CHECK_THROWS_AS(QuadricSpec(RatMatrix{{Rat(2)}}, RatVector{Rat(0)}, Rat(0),
                              Rat(0)),
                  NotNegativeDefinite);
  CHECK_THROWS_AS(QuadricSpec(RatMatrix{{Rat(-1), Rat(2)}, {Rat(2), Rat(-1)}},
                              RatVector{Rat(0), Rat(0)}, Rat(0), Rat(0)),
                  NotNegativeDefinite);
}

TEST_CASE("enumerate_quadric: contraction-surface quadrics") {
  // Gram of (H - 2E1, E2, E3) inside the rank-four contraction example.
  RatMatrix sub{{Rat(-12), Rat(-2), Rat(-2)},
                {Rat(-2), Rat(-2), Rat(0)},
                {Rat(-2), Rat(0), Rat(-2)}};
  QuadricSpec neg2(sub, RatVector(3), Rat(0), Rat(-2));
  auto sols = enumerate_quadric(neg2);
  std::vector<IntVector> expected{{0, -1, 0}, {0, 0, -1}, {0, 0, 1}, {0, 1, 0}};
  CHECK(sols == expected);
  CHECK(sols == oracles::quadric_box_scan(sub, RatVector(3), Rat(0), Rat(-2), 3));

  // Degree-two classes E1 + a(H-2E1) + bE2 + cE3 admit no square-zero point.
  RatVector linear{Rat(12), Rat(2), Rat(2)};
  QuadricSpec zero(sub, linear, Rat(-2), Rat(0));
  CHECK(enumerate_quadric(zero).empty());
  CHECK(oracles::quadric_box_scan(sub, linear, Rat(-2), Rat(0), 4).empty());
}

TEST_CASE("enumerate_quadric: agrees with box scans on random quadrics") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> small(-2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 1 + rng() % 3;
    IntMatrix a = random_matrix(rng, n, n, -2, 2);
    RatMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Int s = 0;
        for (std::size_t k = 0; k < n; ++k) s += a.at(k, i) * a.at(k, j);
        gram.at(i, j) = Rat(-s);
        if (i == j) gram.at(i, j) -= 1; // -(a^T a + I): negative definite
      }
    RatVector linear(n);
    for (auto& x : linear) x = small(rng);
    Rat constant = small(rng);
    Rat target = -Rat(rng() % 8);
    QuadricSpec q(gram, linear, constant, target);
    auto sols = enumerate_quadric(q);
    // Soundness, plus completeness within the scan box.
    for (const auto& v : sols) CHECK(q.evaluate(v) == target);
    CHECK(std::is_sorted(sols.begin(), sols.end()));
    CHECK(std::adjacent_find(sols.begin(), sols.end()) == sols.end());
    auto brute = oracles::quadric_box_scan(gram, linear, constant, target, 12);
    for (const auto& v : brute)
      CHECK(std::binary_search(sols.begin(), sols.end(), v));
  }
}
