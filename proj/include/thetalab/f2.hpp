#pragma once

// Linear algebra over F2: bit-packed vectors, small square matrices acting on
// F2^n (n <= 64), and an incremental row-reduced subspace.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace thetalab::f2 {

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (value) {
      words_[i / 64] |= bit;
    } else {
      words_[i / 64] &= ~bit;
    }
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  BitVec& operator^=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  bool operator==(const BitVec& other) const = default;

  bool any() const noexcept;
  std::size_t count() const noexcept;
  // Index of the lowest set bit, or size() if none.
  std::size_t first_set() const noexcept;
  bool dot(const BitVec& other) const noexcept;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Square matrix over F2 of dimension n <= 64, stored by columns.
class Mod2Matrix {
 public:
  Mod2Matrix() = default;
  explicit Mod2Matrix(int n) : n_(n), cols_(static_cast<std::size_t>(n), 0) {}

  static Mod2Matrix identity(int n);

  int dim() const noexcept { return n_; }
  bool get(int row, int col) const { return (cols_[col] >> row) & 1u; }
  void set(int row, int col, bool value);
  void flip(int row, int col) { cols_[col] ^= std::uint64_t{1} << row; }
  std::uint64_t column(int col) const { return cols_[col]; }

  std::uint64_t apply(std::uint64_t v) const noexcept;
  Mod2Matrix operator*(const Mod2Matrix& rhs) const;
  Mod2Matrix transpose() const;
  bool operator==(const Mod2Matrix& other) const = default;

  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> cols_;
};

// Symplectic pairing on F2^{2g} in the basis (A_1..A_g, B_1..B_g).
bool pairing(int g, std::uint64_t x, std::uint64_t y) noexcept;

bool is_symplectic(int g, const Mod2Matrix& m);

// Reduced basis of a subspace of F2^n.  Each stored row owns a pivot column
// that is zero in every other row.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  // Adds v to the span; returns true when the rank grew.
  bool insert(BitVec v);
  // Canonical representative of v modulo the subspace.
  BitVec reduce(BitVec v) const;
  bool contains(const BitVec& v) const { return !reduce(v).any(); }
  const std::vector<BitVec>& rows() const noexcept { return rows_; }
  std::vector<std::size_t> pivots() const { return pivots_; }

 private:
  std::size_t ambient_;
  std::vector<BitVec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace thetalab::f2
