#include "thetalab/f2.hpp"

#include <bit>

namespace thetalab::f2 {

BitVec& BitVec::operator^=(const BitVec& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool BitVec::any() const noexcept {
  for (auto w : words_) {
    if (w != 0) return true;
  }
  return false;
}

std::size_t BitVec::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitVec::first_set() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return size_;
}

bool BitVec::dot(const BitVec& other) const noexcept {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

Mod2Matrix Mod2Matrix::identity(int n) {
  Mod2Matrix m(n);
  for (int i = 0; i < n; ++i) m.cols_[i] = std::uint64_t{1} << i;
  return m;
}

void Mod2Matrix::set(int row, int col, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << row;
  if (value) {
    cols_[col] |= bit;
  } else {
    cols_[col] &= ~bit;
  }
}

std::uint64_t Mod2Matrix::apply(std::uint64_t v) const noexcept {
  std::uint64_t out = 0;
  while (v != 0) {
    const int j = std::countr_zero(v);
    out ^= cols_[j];
    v &= v - 1;
  }
  return out;
}

Mod2Matrix Mod2Matrix::operator*(const Mod2Matrix& rhs) const {
  Mod2Matrix out(n_);
  for (int j = 0; j < n_; ++j) out.cols_[j] = apply(rhs.cols_[j]);
  return out;
}

Mod2Matrix Mod2Matrix::transpose() const {
  Mod2Matrix out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out.set(j, i, get(i, j));
  }
  return out;
}

std::string Mod2Matrix::to_string() const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) s += get(i, j) ? '1' : '0';
    s += '\n';
  }
  return s;
}

bool pairing(int g, std::uint64_t x, std::uint64_t y) noexcept {
  const std::uint64_t mask = (std::uint64_t{1} << g) - 1;
  const std::uint64_t xa = x & mask, xb = (x >> g) & mask;
  const std::uint64_t ya = y & mask, yb = (y >> g) & mask;
  return std::popcount((xa & yb) ^ (xb & ya)) & 1;
}

bool is_symplectic(int g, const Mod2Matrix& m) {
  if (m.dim() != 2 * g) return false;
  for (int i = 0; i < 2 * g; ++i) {
    for (int j = 0; j < 2 * g; ++j) {
      const bool expected = (j == i + g) || (i == j + g);
      if (pairing(g, m.column(i), m.column(j)) != expected) return false;
    }
  }
  return true;
}

bool Subspace::insert(BitVec v) {
  v = reduce(std::move(v));
  if (!v.any()) return false;
  const std::size_t p = v.first_set();
  for (auto& row : rows_) {
    if (row.get(p)) row ^= v;
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

BitVec Subspace::reduce(BitVec v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (v.get(pivots_[k])) v ^= rows_[k];
  }
  return v;
}

}  // namespace thetalab::f2
