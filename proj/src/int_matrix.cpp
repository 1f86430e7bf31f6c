#include "thetalab/int_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace thetalab {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
  data_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows.front().size()));
  for (int i = 0; i < m.rows_; ++i) {
    for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[i].at(j);
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        const BigInt& b = rhs(k, j);
        if (b != 0) out(i, j) += a * b;
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  IntMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  IntMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix out = *this;
  for (auto& v : out.data_) v = -v;
  return out;
}

IntMatrix IntMatrix::scaled(const BigInt& k) const {
  IntMatrix out = *this;
  for (auto& v : out.data_) v *= k;
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

IntMatrix IntMatrix::block(int row0, int col0, int nrows, int ncols) const {
  IntMatrix out(nrows, ncols);
  for (int i = 0; i < nrows; ++i) {
    for (int j = 0; j < ncols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
  }
  return out;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

bool IntMatrix::congruent_identity(const BigInt& d) const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      BigInt diff = (*this)(i, j) - (i == j ? 1 : 0);
      if (mod(diff, d) != 0) return false;
    }
  }
  return true;
}

std::size_t IntMatrix::max_bits() const {
  std::size_t bits = 0;
  for (const auto& v : data_) bits = std::max(bits, mpz_sizeinbase(v.get_mpz_t(), 2));
  return bits;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

BigInt determinant(const IntMatrix& m) {
  const int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace thetalab
