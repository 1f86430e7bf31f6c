#pragma once

// Theta constants with characteristics, their multipliers under Sp(2g; Z),
// the ratio Phi and the Z/4-valued invariant e of compatible pairs.

#include <complex>
#include <vector>

#include "thetalab/rng.hpp"
#include "thetalab/symplectic.hpp"

namespace thetalab {

inline constexpr int kDefaultRadiusCap = 40;
inline constexpr double kDefaultThetaTol = 1e-12;

struct ThetaValue {
  std::complex<double> value;
  int radius = 0;
  // Rigorous bound on the omitted part of the series.
  double tail_bound = 0.0;
  // Heuristic bound on floating-point error in the partial sum.
  double rounding = 0.0;

  double error() const { return tail_bound + rounding; }
};

// Smallest box radius R whose tail bound is below tol, or -1 if none up to cap.
int required_radius(int g, double lambda_min, double tol, int cap = kDefaultRadiusCap);

// Bound on the part of the series outside the box of radius R.
double theta_tail_bound(int g, double lambda_min, int radius);

// Sum over the fixed box of radius R, in lexicographic order.
ThetaValue theta_partial(const Characteristic& m, const SiegelPoint& tau, int radius);

// Literal summation of the defining series over p in c + [-R, R]^g with
// c = -round(m'/2), phases exp(2 pi i q . m''/2) in floating point.  Shares
// no characteristic arithmetic with theta_partial and serves as its oracle.
ThetaValue theta_direct_partial(const Characteristic& m, const SiegelPoint& tau, int radius);
ThetaValue theta_direct(const Characteristic& m, const SiegelPoint& tau, double tol = kDefaultThetaTol,
                        int radius_cap = kDefaultRadiusCap);

// Throws NotConverged when the cap is too small for tol, GenusTooLarge for
// g > 4 and DimensionMismatch when sizes differ.
ThetaValue theta_eval(const Characteristic& m, const SiegelPoint& tau, double tol = kDefaultThetaTol,
                      int radius_cap = kDefaultRadiusCap);

struct ReducedCharacteristic {
  Characteristic canonical;
  int sign = 1;
};

// canonical = u mod 2 and sign = (-1)^{u'.v''} with v = (canonical - u)/2.
ReducedCharacteristic char_reduce(const Characteristic& u);

struct ThetaOptions {
  double tol = kDefaultThetaTol;
  int radius_cap = kDefaultRadiusCap;
  double residual_tol = 1e-8;
  double spread_tol = 1e-6;
  double near_zero = 1e-8;
  // Evaluate with theta_direct instead of theta_eval.
  bool direct = false;
};

struct MultiplierResult {
  RootOfUnity root;
  // Max distance of a sample to the snapped root.
  double residual = 0.0;
  // Max distance between samples.
  double spread = 0.0;
  std::vector<std::complex<double>> samples;
  std::complex<double> mean() const;
};

// r = theta_{sigma m}(sigma tau) theta_{sigma n}(sigma tau)
//     / (det(beta tau + alpha) theta_m(tau) theta_n(tau)),
// which is gamma_m(sigma) gamma_n(sigma).  Throws NoRootWithinTolerance and
// ThetaNearZero.
MultiplierResult multiplier_product(const SymplecticMatrix& sigma, const Characteristic& m, const Characteristic& n,
                                    const std::vector<SiegelPoint>& taus, const ThetaOptions& opt = {});

// gamma_m(sigma)^2.
MultiplierResult multiplier_squared(const SymplecticMatrix& sigma, const Characteristic& m,
                                    const std::vector<SiegelPoint>& taus, const ThetaOptions& opt = {});

// Same computation without the tolerance checks.
MultiplierResult measure_multiplier(const SymplecticMatrix& sigma, const Characteristic& m, const Characteristic& n,
                                    const std::vector<SiegelPoint>& taus, const ThetaOptions& opt = {});

struct PhiValue {
  std::complex<double> value;
  double error = 0.0;
};

// theta_{mt}(tau_t)^2 / (theta_m(tau) theta_n(tau)).
PhiValue phi_eval(const Characteristic& mt, const Characteristic& m, const Characteristic& n, const SiegelPoint& tau_t,
                  const SiegelPoint& tau, const ThetaOptions& opt = {});

// pi drops indices g and 2g.
std::vector<int> prym_indices(int g);

// Throws SizeMismatch unless sizes are 2(g-1) and 2g.
bool pair_compatible(const SymplecticMatrix& sigma_t, const SymplecticMatrix& sigma);

class CompatiblePair {
 public:
  // Throws CompatibilityViolated.
  CompatiblePair(SymplecticMatrix sigma_t, SymplecticMatrix sigma);

  static CompatiblePair identity(int g);
  // (I, beta_gg): the lift of the square of the twist about the curve of class A_g.
  static CompatiblePair a_hat(int g);
  // (I, gamma_gg), the transposed reading.
  static CompatiblePair a_hat_transposed(int g);
  // (-I, I).
  static CompatiblePair deck(int g);

  int genus() const noexcept { return sigma_.genus(); }
  const SymplecticMatrix& tilde() const noexcept { return sigma_t_; }
  const SymplecticMatrix& full() const noexcept { return sigma_; }

  CompatiblePair operator*(const CompatiblePair& o) const;

 private:
  SymplecticMatrix sigma_t_;
  SymplecticMatrix sigma_;
};

// m = (mt', 0 | mt'', 1) and n = (mt', 0 | mt'', 0).
Characteristic lift_m(const Characteristic& mt);
Characteristic lift_n(const Characteristic& mt);

struct DSignReport {
  int sign = 1;
  Characteristic m, n;
  Characteristic image_m, image_n;
  ReducedCharacteristic reduced_m, reduced_n;
  int k1 = 0, k2 = 0;
};

// Throws CompatibilityViolated when the reduced images do not have the form
// ((sigma_t . mt)' mod 2, 0 | (sigma_t . mt)'' mod 2, k) with k1 + k2 = 1.
DSignReport d_sign(const CompatiblePair& pair, const Characteristic& mt);

// The Phi ratio at the reduced characteristics over the one at the raw
// images, with every theta constant summed by theta_direct; equals d_sign at
// every pair of Siegel points.
std::complex<double> d_sign_numeric(const CompatiblePair& pair, const Characteristic& mt, const SiegelPoint& tau_t,
                                    const SiegelPoint& tau, const ThetaOptions& opt = {});

struct EValue {
  RootOfUnity root;
  int d = 1;
  MultiplierResult squared;
  MultiplierResult product;
  std::complex<double> raw;
  double residual = 0.0;
};

// d * gamma_mt(sigma_t)^2 / (gamma_m(sigma) gamma_n(sigma)), snapped to a 4th
// root of unity.  Throws NotFourthRoot.
EValue e_value(const CompatiblePair& pair, const Characteristic& mt, const std::vector<SiegelPoint>& taus_t,
               const std::vector<SiegelPoint>& taus, const ThetaOptions& opt = {});

// Im tau = I + symmetric perturbation in [-0.1, 0.1], Re tau in [-0.5, 0.5].
SiegelPoint sample_siegel(Rng& rng, int g);

// Draws count points tau for which both tau and sigma . tau are certifiable
// within the radius cap; falls back to the best draws seen.
std::vector<SiegelPoint> sample_siegel_for(Rng& rng, const SymplecticMatrix& sigma, int count,
                                           const ThetaOptions& opt = {});

}  // namespace thetalab
