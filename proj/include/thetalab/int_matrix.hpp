#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace thetalab {

using BigInt = mpz_class;

// Dense integer matrix with arbitrary-precision entries, 0-based indexing.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  BigInt& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const BigInt& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix operator-() const;
  IntMatrix scaled(const BigInt& k) const;
  IntMatrix transpose() const;
  IntMatrix block(int row0, int col0, int nrows, int ncols) const;

  bool operator==(const IntMatrix& other) const;
  bool is_identity() const;
  // True when every entry is congruent to the identity modulo d.
  bool congruent_identity(const BigInt& d) const;
  std::size_t max_bits() const;

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

// Exact determinant of a square matrix (fraction-free elimination).
BigInt determinant(const IntMatrix& m);

// Least non-negative residue.
inline BigInt mod(const BigInt& a, const BigInt& d) {
  BigInt r = a % d;
  if (r < 0) r += d;
  return r;
}

inline int mod2(const BigInt& a) { return mpz_odd_p(a.get_mpz_t()) ? 1 : 0; }

}  // namespace thetalab
