#pragma once

// Homology shadows of Dehn twists on H_1 of a closed genus-g surface.

#include <string>
#include <vector>

#include "thetalab/int_matrix.hpp"
#include "thetalab/symplectic.hpp"

namespace thetalab {

class HomologyClass {
 public:
  HomologyClass() = default;
  HomologyClass(int g, std::vector<BigInt> coords);

  static HomologyClass zero(int g);
  // 1-based basis vectors A_i and B_i.
  static HomologyClass a(int g, int i);
  static HomologyClass b(int g, int i);

  int genus() const noexcept { return g_; }
  const std::vector<BigInt>& coords() const noexcept { return c_; }
  const BigInt& operator[](int k) const { return c_[k]; }

  HomologyClass operator+(const HomologyClass& o) const;
  HomologyClass operator-(const HomologyClass& o) const;
  HomologyClass operator-() const;
  HomologyClass scaled(const BigInt& k) const;
  bool operator==(const HomologyClass& o) const = default;

  // Intersection number tx J y.
  BigInt dot(const HomologyClass& o) const;

  std::string to_string() const;

 private:
  int g_ = 0;
  std::vector<BigInt> c_;
};

HomologyClass apply(const SymplecticMatrix& sigma, const HomologyClass& x);

enum class CurveLabel { C, CPrime, Cij, CPrimeij, CDoublePrimeij };

// [C_i]=A_i, [C'_i]=B_i, [C_ij]=A_i+A_j, [C'_ij]=B_i+B_j, [C''_ij]=A_i+B_j.
// j is ignored for the single-index labels.
HomologyClass curve_class(CurveLabel label, int i, int j, int g);

// Homology action of the k-th power of a Dehn twist: v -> v + k (x.v) x.
// sign = -1 flips the orientation convention and exists for sensitivity
// tests only.
SymplecticMatrix transvection(const HomologyClass& x, const BigInt& k, int sign = 1);

struct IdentityCheck {
  std::string name;
  bool holds = false;
  // False for alternative readings reported for information only.
  bool normative = true;
};

struct FactorizationReport {
  int genus = 0;
  std::vector<IdentityCheck> checks;
  bool all_normative_hold() const;
};

FactorizationReport verify_factorizations(int g, int twist_sign = 1);

struct ChainReport {
  HomologyClass d;
  HomologyClass d_prime;
  // Number of sign choices (d, d') in {+-x1 +- x3}^2 that the oracle accepted.
  int oracle_matches = 0;
  bool holds = false;
  // The oracle's answer agrees with d = x1 + (x1.x2)(x2.x3) x3.
  bool closed_form_agrees = false;
};

// Throws NotAChain unless x1.x2 = +-1, x2.x3 = +-1 and x1.x3 = 0.
ChainReport chain_shadow(const HomologyClass& x1, const HomologyClass& x2, const HomologyClass& x3);

}  // namespace thetalab
