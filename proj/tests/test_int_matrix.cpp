#include "doctest.h"
#include "thetalab/int_matrix.hpp"
#include "thetalab/rng.hpp"

#include <vector>

using namespace thetalab;

namespace {

IntMatrix random_matrix(Rng& rng, int rows, int cols, long bound) {
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = rng.uniform_int(-bound, bound);
  }
  return m;
}

// Laplace expansion along the first row.
BigInt laplace(const IntMatrix& m) {
  const int n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  BigInt total = 0;
  for (int c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int j = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, cc++) = m(i, j);
      }
    }
    const BigInt term = m(0, c) * laplace(minor);
    total += (c % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

}  // namespace

TEST_CASE("construction and element access") {
  const IntMatrix m{{1, 2, 3}, {4, 5, 6}};
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m(1, 2) == 6);
  CHECK(IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}}) == m);
  CHECK(IntMatrix::identity(3).is_identity());
  CHECK_FALSE(m.is_identity());
}

TEST_CASE("arithmetic against hand-computed values") {
  const IntMatrix a{{1, 2}, {3, 4}};
  const IntMatrix b{{0, 1}, {-1, 0}};
  CHECK(a * b == IntMatrix{{-2, 1}, {-4, 3}});
  CHECK(a + b == IntMatrix{{1, 3}, {2, 4}});
  CHECK(a - b == IntMatrix{{1, 1}, {4, 4}});
  CHECK(-a == IntMatrix{{-1, -2}, {-3, -4}});
  CHECK(a.scaled(3) == IntMatrix{{3, 6}, {9, 12}});
  CHECK(a.transpose() == IntMatrix{{1, 3}, {2, 4}});
  const IntMatrix big{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  CHECK(big.block(1, 1, 2, 2) == IntMatrix{{5, 6}, {8, 9}});
  CHECK(big.block(0, 2, 3, 1) == IntMatrix{{3}, {6}, {9}});
}

TEST_CASE("product is associative and transposes reverse order") {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(1, 6));
    const IntMatrix a = random_matrix(rng, n, n, 20);
    const IntMatrix b = random_matrix(rng, n, n, 20);
    const IntMatrix c = random_matrix(rng, n, n, 20);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("congruent_identity") {
  const IntMatrix m{{3, 2}, {-4, 1}};
  CHECK(m.congruent_identity(2));
  CHECK_FALSE(m.congruent_identity(4));
  CHECK(IntMatrix{{5, 4}, {8, -3}}.congruent_identity(4));
}

TEST_CASE("entries do not overflow") {
  IntMatrix m{{2, 0}, {0, 1}};
  IntMatrix p = IntMatrix::identity(2);
  for (int k = 0; k < 200; ++k) p = p * m;
  BigInt expected = 1;
  for (int k = 0; k < 200; ++k) expected *= 2;
  CHECK(p(0, 0) == expected);
  CHECK(p.max_bits() == 201);
}

TEST_CASE("determinant matches Laplace expansion") {
  CHECK(determinant(IntMatrix{{1, 2}, {3, 4}}) == -2);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK(determinant(IntMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == -1);
  Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(1, 6));
    const IntMatrix a = random_matrix(rng, n, n, 9);
    CHECK(determinant(a) == laplace(a));
  }
}

TEST_CASE("mod helpers return least non-negative residues") {
  CHECK(mod(BigInt(-3), 4) == 1);
  CHECK(mod(BigInt(7), 4) == 3);
  CHECK(mod2(BigInt(-3)) == 1);
  CHECK(mod2(BigInt(-4)) == 0);
}
