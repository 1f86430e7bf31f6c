#pragma once

// Square-free boolean polynomials of degree <= 3 over F2 in the barred
// generators A1..Ag, B1..Bg, together with the Sp(2g; Z/2) action, the
// quotient by alpha * B^1, coinvariants and the B_g contraction.

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "thetalab/f2.hpp"

namespace thetalab {

// Monomials are bitmasks over the 2g variables: bit k < g is A_{k+1}, bit
// g + k is B_{k+1}.
class MonomialBasis {
 public:
  static std::shared_ptr<const MonomialBasis> get(int g);

  explicit MonomialBasis(int g);

  int genus() const noexcept { return g_; }
  std::size_t size() const noexcept { return masks_.size(); }
  std::uint64_t mask(std::size_t index) const { return masks_[index]; }
  // Throws DegreeOverflow for masks of degree > 3.
  std::size_t index(std::uint64_t mask) const;

  // "A1*B1*A4", variables in the order A1 < B1 < A2 < B2 < ...
  std::string name(std::uint64_t mask) const;
  std::uint64_t parse(const std::string& text) const;

 private:
  int g_;
  std::vector<std::uint64_t> masks_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

class BooleanPolynomial {
 public:
  explicit BooleanPolynomial(int g);

  static BooleanPolynomial one(int g);
  static BooleanPolynomial monomial(int g, std::uint64_t mask);
  // 0-based variable index in [0, 2g).
  static BooleanPolynomial variable(int g, int k);
  // Sum of monomials such as "A1*B1*A4 + A1*B1 + 1".
  static BooleanPolynomial parse(int g, const std::string& text);

  int genus() const noexcept { return basis_->genus(); }
  const MonomialBasis& basis() const noexcept { return *basis_; }
  const f2::BitVec& coeffs() const noexcept { return coeffs_; }
  f2::BitVec& coeffs() noexcept { return coeffs_; }

  bool coefficient(std::uint64_t mask) const { return coeffs_.get(basis_->index(mask)); }
  bool is_zero() const { return !coeffs_.any(); }
  // -1 for the zero polynomial.
  int degree() const;
  std::vector<std::uint64_t> monomials() const;

  BooleanPolynomial& operator+=(const BooleanPolynomial& o);
  friend BooleanPolynomial operator+(BooleanPolynomial a, const BooleanPolynomial& b) { return a += b; }
  bool operator==(const BooleanPolynomial& o) const { return coeffs_ == o.coeffs_; }

  std::string to_string() const;

 private:
  std::shared_ptr<const MonomialBasis> basis_;
  f2::BitVec coeffs_;
};

// sum_i xbar_i + sum_{i<j} (x_i . x_j) for v = sum_i x_i over basis elements.
BooleanPolynomial bar_of_class(int g, std::uint64_t v);
// The same value computed by repeatedly applying bar(x+y) = xbar + ybar + x.y.
BooleanPolynomial bar_of_class_recursive(int g, std::uint64_t v);

// Throws DegreeOverflow when some product term has degree > 3.
BooleanPolynomial bp_mul(const BooleanPolynomial& p, const BooleanPolynomial& q);

// Throws NotSymplecticMod2.
BooleanPolynomial sp2_action(const f2::Mod2Matrix& sigma, const BooleanPolynomial& p);

// sum_i A_i B_i.
BooleanPolynomial omega_polynomial(int g);

class QuotientSpace {
 public:
  QuotientSpace(int g, f2::Subspace relations) : g_(g), relations_(std::move(relations)) {}

  int genus() const noexcept { return g_; }
  std::size_t ambient_dimension() const noexcept { return relations_.ambient(); }
  std::size_t dimension() const noexcept { return relations_.ambient() - relations_.rank(); }
  const f2::Subspace& relations() const noexcept { return relations_; }

  // Idempotent; the kernel is the relation subspace.
  f2::BitVec project(const f2::BitVec& v) const { return relations_.reduce(v); }

 private:
  int g_;
  f2::Subspace relations_;
};

// r = 1: the full space.  r = 0: the quotient by alpha * B^1.
QuotientSpace b3_space(int g, int r);

struct CoinvariantResult {
  std::size_t dimension = 0;
  std::vector<BooleanPolynomial> representatives;
  f2::Subspace relations{0};

  // Coordinates of the class of p in the representative basis.
  std::vector<bool> project(const BooleanPolynomial& p) const;
  bool is_zero_class(const BooleanPolynomial& p) const { return !relations.reduce(p.coeffs()).any(); }
  bool same_class(const BooleanPolynomial& p, const BooleanPolynomial& q) const { return is_zero_class(p + q); }

 private:
  friend CoinvariantResult coinvariants(const QuotientSpace&, const std::vector<f2::Mod2Matrix>&);
  f2::Subspace tagged_{0};
};

// Throws GeneratorNotInStabilizer if some generator moves B_g mod 2.
CoinvariantResult coinvariants(const QuotientSpace& space, const std::vector<f2::Mod2Matrix>& gens);

// (X.Y)(B_g.Z) + (Y.Z)(B_g.X) + (Z.X)(B_g.Y) on degree-3 monomials, 0 below.
int contraction(const BooleanPolynomial& p);

// A1*B1*Ag + A1*B1.
BooleanPolynomial johnson_mu_reference(int g);

}  // namespace thetalab
