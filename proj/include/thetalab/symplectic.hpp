#pragma once

// Exact arithmetic in Sp(2g; Z): level subgroups, the stabilizer of B_g mod 2,
// the mod-4 homomorphism psi, and the actions on characteristics and on the
// Siegel upper half space.
//
// Conventions: homology classes are column vectors in the basis
// (A_1..A_g, B_1..B_g), matrices act on the left, and
// J = (0 I; -I 0) so that A_i . B_i = +1.  A matrix is written in g x g
// blocks as (alpha beta; gamma delta).

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "thetalab/error.hpp"
#include "thetalab/f2.hpp"
#include "thetalab/int_matrix.hpp"

namespace thetalab {

IntMatrix symplectic_form(int g);

class SymplecticMatrix {
 public:
  // Throws OddDimension / NotSymplectic.
  explicit SymplecticMatrix(IntMatrix entries);

  static SymplecticMatrix identity(int g);

  int genus() const noexcept { return g_; }
  int dim() const noexcept { return 2 * g_; }
  const IntMatrix& entries() const noexcept { return m_; }
  const BigInt& operator()(int i, int j) const { return m_(i, j); }

  IntMatrix alpha() const { return m_.block(0, 0, g_, g_); }
  IntMatrix beta() const { return m_.block(0, g_, g_, g_); }
  IntMatrix gamma() const { return m_.block(g_, 0, g_, g_); }
  IntMatrix delta() const { return m_.block(g_, g_, g_, g_); }

  // Results are not re-validated.
  SymplecticMatrix operator*(const SymplecticMatrix& rhs) const;
  SymplecticMatrix inverse() const;
  SymplecticMatrix transpose() const;
  SymplecticMatrix pow(long k) const;

  f2::Mod2Matrix mod2() const;

  bool operator==(const SymplecticMatrix& other) const { return m_ == other.m_; }
  std::string to_string() const { return m_.to_string(); }

 private:
  struct Trusted {};
  SymplecticMatrix(Trusted, int g, IntMatrix entries) : g_(g), m_(std::move(entries)) {}

  int g_ = 0;
  IntMatrix m_;
};

SymplecticMatrix validate_symplectic(const IntMatrix& entries);

// Igusa's generators of the level-2 subgroup.  Indices are 1-based.
enum class IgusaKind { Alpha, Beta, Gamma };

std::string to_string(IgusaKind kind);
SymplecticMatrix igusa_generator(IgusaKind kind, int i, int j, int g);

struct LabeledMatrix {
  std::string label;
  SymplecticMatrix matrix;
};

// Every matrix of Igusa's list for genus g.
std::vector<LabeledMatrix> igusa_generators(int g);

bool in_level(const SymplecticMatrix& sigma, const BigInt& d);

// Stabilizer of B_g mod 2: row g and column 2g congruent to unit vectors.
bool in_gamma_p2(const SymplecticMatrix& sigma);

// (sigma_{g,2g} / 2) mod 2.  Throws NotInSubgroup outside Gamma_g(p2).
int psi(const SymplecticMatrix& sigma);

// A g-characteristic, written (m' | m'').
class Characteristic {
 public:
  Characteristic() = default;
  Characteristic(int g, std::vector<BigInt> entries);
  static Characteristic from_parts(const std::vector<long>& prime, const std::vector<long>& second);

  // Parses "a,b|c,d".
  static Characteristic parse(const std::string& text);

  int genus() const noexcept { return g_; }
  const std::vector<BigInt>& entries() const noexcept { return v_; }
  const BigInt& prime(int i) const { return v_[i]; }
  const BigInt& second(int i) const { return v_[g_ + i]; }

  // 0 for even, 1 for odd.
  int parity() const;
  bool even() const { return parity() == 0; }
  bool is_reduced() const;
  Characteristic operator+(const Characteristic& other) const;
  Characteristic scaled(long k) const;
  Characteristic mod2() const;
  bool operator==(const Characteristic& other) const = default;

  std::string to_string() const;

 private:
  int g_ = 0;
  std::vector<BigInt> v_;
};

// All characteristics with entries in {0,1} of the given parity.
std::vector<Characteristic> reduced_characteristics(int g, int parity);

// sigma . m = m (ta, -tc; -tb, td) + ((b ta)_0 | (d tc)_0), on row vectors.
Characteristic char_apply(const SymplecticMatrix& sigma, const Characteristic& m);

// A point of the Siegel upper half space.
class SiegelPoint {
 public:
  // Throws NotSiegel when tau is not symmetric (1e-12 relative) or Im tau is
  // not positive definite.
  explicit SiegelPoint(Eigen::MatrixXcd tau);

  static SiegelPoint scalar_i(int g);

  int size() const noexcept { return static_cast<int>(tau_.rows()); }
  const Eigen::MatrixXcd& tau() const noexcept { return tau_; }
  double lambda_min() const noexcept { return lambda_min_; }

  std::string to_string() const;

 private:
  Eigen::MatrixXcd tau_;
  double lambda_min_ = 0.0;
};

Eigen::MatrixXd to_double(const IntMatrix& m);

// det(beta tau + alpha), the automorphy factor of the action below.
std::complex<double> cocycle_det(const SymplecticMatrix& sigma, const SiegelPoint& tau);

// sigma . tau = (delta tau + gamma)(beta tau + alpha)^{-1}.
SiegelPoint siegel_apply(const SymplecticMatrix& sigma, const SiegelPoint& tau);

// exp(pi i k / 4).
class RootOfUnity {
 public:
  constexpr RootOfUnity() = default;
  constexpr explicit RootOfUnity(int k) : k_(((k % 8) + 8) % 8) {}

  constexpr int exponent() const noexcept { return k_; }
  constexpr RootOfUnity operator*(RootOfUnity o) const { return RootOfUnity(k_ + o.k_); }
  constexpr RootOfUnity inverse() const { return RootOfUnity(-k_); }
  constexpr RootOfUnity pow(int n) const { return RootOfUnity(k_ * n); }
  constexpr bool operator==(const RootOfUnity&) const = default;

  // Multiplicative order: 1, 2, 4 or 8.
  int order() const;
  std::complex<double> value() const;
  std::string to_string() const;

 private:
  int k_ = 0;
};

// Nearest 8th root of unity to z and the distance to it.
struct SnappedRoot {
  RootOfUnity root;
  double residual = 0.0;
};
SnappedRoot snap_root(std::complex<double> z);

// Mod-2 transvection v -> v + (x.v) x.
f2::Mod2Matrix transvection_mod2(int g, std::uint64_t x);

// Generator list for the stabilizer of B_g in Sp(2g; Z/2): embedded
// Sp(2g-2; Z/2) transvections together with the elementary matrices used in
// the coinvariant computation.
std::vector<f2::Mod2Matrix> stabilizer_generators_mod2(int g);

// Transvection on A_g, which moves B_g.
f2::Mod2Matrix off_stabilizer_generator_mod2(int g);

bool fixes_bg_mod2(int g, const f2::Mod2Matrix& m);

struct OrbitReport {
  int genus = 0;
  std::uint64_t orbit_size = 0;
  std::uint64_t expected = 0;
  bool stabilizer_fixes_bg = false;
  int generator_count = 0;
};

// BFS orbit of B_g mod 2 under the stabilizer list plus the off-stabilizer
// generator.  Throws GenusTooLarge for g > 8.
OrbitReport orbit_index(int g);

}  // namespace thetalab
