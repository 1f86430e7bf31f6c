#include "thetalab/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace thetalab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Neumaier's compensated sum.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

long mod4(const BigInt& v) { return mod(v, 4).get_si(); }

void check_genus(const Characteristic& m, const SiegelPoint& tau) {
  if (m.genus() != tau.size()) throw Error(ErrorKind::DimensionMismatch, "characteristic and tau sizes differ");
  if (tau.size() > 4) throw Error(ErrorKind::GenusTooLarge, "theta evaluation supports g <= 4");
}

}  // namespace

double theta_tail_bound(int g, double lambda, int radius) {
  const double rp = radius + 0.5;
  const double one_dim_tail = 2.0 * std::exp(-kPi * lambda * rp * rp) * (1.0 + 1.0 / (2.0 * kPi * lambda * rp));
  const double one_dim_full = 2.0 + 1.0 / std::sqrt(lambda);
  return g * one_dim_tail * std::pow(one_dim_full, g - 1);
}

int required_radius(int g, double lambda, double tol, int cap) {
  if (!(lambda > 0.0)) return -1;
  for (int r = 1; r <= cap; ++r) {
    if (theta_tail_bound(g, lambda, r) < tol) return r;
  }
  return -1;
}

ThetaValue theta_partial(const Characteristic& m, const SiegelPoint& tau, int radius) {
  check_genus(m, tau);
  const int g = tau.size();
  std::vector<int> r(g);
  std::vector<long> m2(g);
  for (int j = 0; j < g; ++j) {
    r[j] = mod2(m.prime(j));
    m2[j] = mod4(m.second(j));
  }
  const Eigen::MatrixXcd& t = tau.tau();

  CompensatedSum re, im;
  double abs_sum = 0.0;
  double weighted = 0.0;
  std::vector<int> p(g, -radius);
  std::vector<double> q(g);
  while (true) {
    long phase = 0;
    for (int j = 0; j < g; ++j) {
      q[j] = p[j] + 0.5 * r[j];
      phase += (2L * p[j] + r[j]) * m2[j];
    }
    std::complex<double> quad = 0.0;
    for (int j = 0; j < g; ++j) {
      quad += q[j] * q[j] * t(j, j);
      for (int k = j + 1; k < g; ++k) quad += 2.0 * q[j] * q[k] * t(j, k);
    }
    // exp(pi i quad) * i^phase
    const double mag = std::exp(-kPi * quad.imag());
    const double ang = kPi * quad.real();
    std::complex<double> term(mag * std::cos(ang), mag * std::sin(ang));
    switch (((phase % 4) + 4) % 4) {
      case 1: term = {-term.imag(), term.real()}; break;
      case 2: term = -term; break;
      case 3: term = {term.imag(), -term.real()}; break;
      default: break;
    }
    re.add(term.real());
    im.add(term.imag());
    abs_sum += mag;
    weighted += mag * (4.0 + kPi * std::abs(quad));

    int j = g - 1;
    while (j >= 0 && p[j] == radius) {
      p[j] = -radius;
      --j;
    }
    if (j < 0) break;
    ++p[j];
  }
  ThetaValue out;
  out.value = {re.value(), im.value()};
  out.radius = radius;
  out.tail_bound = theta_tail_bound(g, tau.lambda_min(), radius);
  out.rounding = kEps * (weighted + 4.0 * abs_sum);
  return out;
}

ThetaValue theta_direct_partial(const Characteristic& m, const SiegelPoint& tau, int radius) {
  check_genus(m, tau);
  const int g = tau.size();
  std::vector<double> half_prime(g), half_second(g);
  std::vector<long> center(g);
  for (int j = 0; j < g; ++j) {
    half_prime[j] = m.prime(j).get_d() / 2.0;
    half_second[j] = m.second(j).get_d() / 2.0;
    center[j] = std::lround(-half_prime[j]);
  }
  const Eigen::MatrixXcd& t = tau.tau();
  CompensatedSum re, im;
  double weighted = 0.0;
  std::vector<long> p(g);
  std::vector<double> q(g);
  for (int j = 0; j < g; ++j) p[j] = center[j] - radius;
  while (true) {
    double lin = 0.0;
    for (int j = 0; j < g; ++j) {
      q[j] = static_cast<double>(p[j]) + half_prime[j];
      lin += q[j] * half_second[j];
    }
    std::complex<double> quad = 0.0;
    for (int j = 0; j < g; ++j) {
      for (int k = 0; k < g; ++k) quad += q[j] * t(j, k) * q[k];
    }
    // exp(pi i (q tau q) + 2 pi i q . m''/2)
    const std::complex<double> term = std::exp(std::complex<double>(0.0, kPi) * (quad + 2.0 * lin));
    re.add(term.real());
    im.add(term.imag());
    weighted += std::abs(term) * (4.0 + kPi * (std::abs(quad) + 2.0 * std::abs(lin)));

    int j = g - 1;
    while (j >= 0 && p[j] == center[j] + radius) {
      p[j] = center[j] - radius;
      --j;
    }
    if (j < 0) break;
    ++p[j];
  }
  ThetaValue out;
  out.value = {re.value(), im.value()};
  out.radius = radius;
  out.tail_bound = theta_tail_bound(g, tau.lambda_min(), radius);
  out.rounding = kEps * weighted;
  return out;
}

ThetaValue theta_direct(const Characteristic& m, const SiegelPoint& tau, double tol, int radius_cap) {
  check_genus(m, tau);
  const int r = required_radius(tau.size(), tau.lambda_min(), tol, radius_cap);
  if (r < 0) throw Error(ErrorKind::NotConverged, "radius cap too small for the requested tolerance");
  return theta_direct_partial(m, tau, r);
}

ThetaValue theta_eval(const Characteristic& m, const SiegelPoint& tau, double tol, int radius_cap) {
  check_genus(m, tau);
  const int r = required_radius(tau.size(), tau.lambda_min(), tol, radius_cap);
  if (r < 0) {
    throw Error(ErrorKind::NotConverged, "lambda_min(Im tau) = " + std::to_string(tau.lambda_min()) +
                                             " needs a radius beyond " + std::to_string(radius_cap));
  }
  return theta_partial(m, tau, r);
}

ReducedCharacteristic char_reduce(const Characteristic& u) {
  const int g = u.genus();
  ReducedCharacteristic out;
  out.canonical = u.mod2();
  BigInt s = 0;
  for (int i = 0; i < g; ++i) {
    const BigInt v2 = (out.canonical.second(i) - u.second(i)) / 2;
    s += u.prime(i) * v2;
  }
  out.sign = mod2(s) ? -1 : 1;
  return out;
}

std::complex<double> MultiplierResult::mean() const {
  std::complex<double> s = 0.0;
  for (auto z : samples) s += z;
  return samples.empty() ? s : s / static_cast<double>(samples.size());
}

namespace {

ThetaValue theta_by(const ThetaOptions& opt, const Characteristic& m, const SiegelPoint& tau) {
  return opt.direct ? theta_direct(m, tau, opt.tol, opt.radius_cap) : theta_eval(m, tau, opt.tol, opt.radius_cap);
}

std::complex<double> checked_theta(const Characteristic& m, const SiegelPoint& tau, const ThetaOptions& opt) {
  const ThetaValue v = theta_by(opt, m, tau);
  if (std::abs(v.value) <= opt.near_zero) {
    throw Error(ErrorKind::ThetaNearZero, "|theta_" + m.to_string() + "| <= " + std::to_string(opt.near_zero));
  }
  return v.value;
}

void finish(MultiplierResult& res) {
  const SnappedRoot s = snap_root(res.mean());
  res.root = s.root;
  for (auto z : res.samples) {
    res.residual = std::max(res.residual, std::abs(z - s.root.value()));
    for (auto w : res.samples) res.spread = std::max(res.spread, std::abs(z - w));
  }
}

void enforce(const MultiplierResult& res, const ThetaOptions& opt) {
  if (res.residual >= opt.residual_tol || res.spread >= opt.spread_tol) {
    throw Error(ErrorKind::NoRootWithinTolerance,
                "residual " + std::to_string(res.residual) + ", spread " + std::to_string(res.spread));
  }
}

}  // namespace

MultiplierResult measure_multiplier(const SymplecticMatrix& sigma, const Characteristic& m, const Characteristic& n,
                                    const std::vector<SiegelPoint>& taus, const ThetaOptions& opt) {
  const Characteristic sm = char_apply(sigma, m);
  const Characteristic sn = char_apply(sigma, n);
  MultiplierResult res;
  for (const auto& tau : taus) {
    const std::complex<double> before = checked_theta(m, tau, opt) * checked_theta(n, tau, opt);
    const SiegelPoint image = siegel_apply(sigma, tau);
    const ThetaValue a = theta_by(opt, sm, image);
    const ThetaValue b = theta_by(opt, sn, image);
    res.samples.push_back(a.value * b.value / (cocycle_det(sigma, tau) * before));
  }
  finish(res);
  return res;
}

MultiplierResult multiplier_product(const SymplecticMatrix& sigma, const Characteristic& m, const Characteristic& n,
                                    const std::vector<SiegelPoint>& taus, const ThetaOptions& opt) {
  MultiplierResult res = measure_multiplier(sigma, m, n, taus, opt);
  enforce(res, opt);
  return res;
}

MultiplierResult multiplier_squared(const SymplecticMatrix& sigma, const Characteristic& m,
                                    const std::vector<SiegelPoint>& taus, const ThetaOptions& opt) {
  return multiplier_product(sigma, m, m, taus, opt);
}

PhiValue phi_eval(const Characteristic& mt, const Characteristic& m, const Characteristic& n, const SiegelPoint& tau_t,
                  const SiegelPoint& tau, const ThetaOptions& opt) {
  const ThetaValue num = theta_by(opt, mt, tau_t);
  const ThetaValue a = theta_by(opt, m, tau);
  const ThetaValue b = theta_by(opt, n, tau);
  if (std::abs(a.value) <= opt.near_zero || std::abs(b.value) <= opt.near_zero) {
    throw Error(ErrorKind::ThetaNearZero, "denominator theta constant vanishes");
  }
  PhiValue out;
  out.value = num.value * num.value / (a.value * b.value);
  const double rel = (std::abs(num.value) > 0 ? 2.0 * num.error() / std::abs(num.value) : 0.0) +
                     a.error() / std::abs(a.value) + b.error() / std::abs(b.value);
  out.error = std::abs(out.value) * rel;
  return out;
}

std::vector<int> prym_indices(int g) {
  std::vector<int> idx;
  for (int k = 0; k < 2 * g; ++k) {
    if (k != g - 1 && k != 2 * g - 1) idx.push_back(k);
  }
  return idx;
}

bool pair_compatible(const SymplecticMatrix& sigma_t, const SymplecticMatrix& sigma) {
  if (sigma_t.genus() + 1 != sigma.genus()) {
    throw Error(ErrorKind::SizeMismatch, "expected sizes 2(g-1) and 2g, got " + std::to_string(sigma_t.dim()) +
                                             " and " + std::to_string(sigma.dim()));
  }
  if (!in_gamma_p2(sigma)) return false;
  const std::vector<int> idx = prym_indices(sigma.genus());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b < idx.size(); ++b) {
      if (mod2(sigma(idx[a], idx[b])) != mod2(sigma_t(static_cast<int>(a), static_cast<int>(b)))) return false;
    }
  }
  return true;
}

CompatiblePair::CompatiblePair(SymplecticMatrix sigma_t, SymplecticMatrix sigma)
    : sigma_t_(std::move(sigma_t)), sigma_(std::move(sigma)) {
  if (!pair_compatible(sigma_t_, sigma_)) {
    throw Error(ErrorKind::CompatibilityViolated, "pair fails the mod 2 block congruence");
  }
}

CompatiblePair CompatiblePair::identity(int g) {
  return {SymplecticMatrix::identity(g - 1), SymplecticMatrix::identity(g)};
}

CompatiblePair CompatiblePair::a_hat(int g) {
  return {SymplecticMatrix::identity(g - 1), igusa_generator(IgusaKind::Beta, g, g, g)};
}

CompatiblePair CompatiblePair::a_hat_transposed(int g) {
  return {SymplecticMatrix::identity(g - 1), igusa_generator(IgusaKind::Gamma, g, g, g)};
}

CompatiblePair CompatiblePair::deck(int g) {
  return {SymplecticMatrix(-IntMatrix::identity(2 * (g - 1))), SymplecticMatrix::identity(g)};
}

CompatiblePair CompatiblePair::operator*(const CompatiblePair& o) const {
  return {sigma_t_ * o.sigma_t_, sigma_ * o.sigma_};
}

namespace {

Characteristic lift(const Characteristic& mt, long last) {
  const int h = mt.genus();
  std::vector<BigInt> v;
  for (int i = 0; i < h; ++i) v.push_back(mt.prime(i));
  v.emplace_back(0);
  for (int i = 0; i < h; ++i) v.push_back(mt.second(i));
  v.emplace_back(last);
  return Characteristic(h + 1, std::move(v));
}

}  // namespace

Characteristic lift_m(const Characteristic& mt) { return lift(mt, 1); }
Characteristic lift_n(const Characteristic& mt) { return lift(mt, 0); }

DSignReport d_sign(const CompatiblePair& pair, const Characteristic& mt) {
  const int g = pair.genus();
  if (mt.genus() != g - 1) throw Error(ErrorKind::DimensionMismatch, "characteristic must have size 2(g-1)");
  if (!mt.even()) throw std::invalid_argument("d_sign needs an even characteristic");
  DSignReport rep;
  rep.m = lift_m(mt);
  rep.n = lift_n(mt);
  rep.image_m = char_apply(pair.full(), rep.m);
  rep.image_n = char_apply(pair.full(), rep.n);
  rep.reduced_m = char_reduce(rep.image_m);
  rep.reduced_n = char_reduce(rep.image_n);
  rep.sign = rep.reduced_m.sign * rep.reduced_n.sign;

  const Characteristic target = char_apply(pair.tilde(), mt).mod2();
  auto shape_ok = [&](const Characteristic& c, int& k) {
    for (int i = 0; i < g - 1; ++i) {
      if (c.prime(i) != target.prime(i) || c.second(i) != target.second(i)) return false;
    }
    if (c.prime(g - 1) != 0) return false;
    k = mod2(c.second(g - 1));
    return true;
  };
  if (!shape_ok(rep.reduced_m.canonical, rep.k1) || !shape_ok(rep.reduced_n.canonical, rep.k2) ||
      rep.k1 + rep.k2 != 1) {
    throw Error(ErrorKind::CompatibilityViolated, "reduced images " + rep.reduced_m.canonical.to_string() + ", " +
                                                      rep.reduced_n.canonical.to_string() + " do not match " +
                                                      target.to_string());
  }
  return rep;
}

std::complex<double> d_sign_numeric(const CompatiblePair& pair, const Characteristic& mt, const SiegelPoint& tau_t,
                                    const SiegelPoint& tau, const ThetaOptions& opt) {
  const DSignReport rep = d_sign(pair, mt);
  const Characteristic st = char_apply(pair.tilde(), mt);
  ThetaOptions direct = opt;
  direct.direct = true;
  const PhiValue reduced = phi_eval(st.mod2(), rep.reduced_m.canonical, rep.reduced_n.canonical, tau_t, tau, direct);
  const PhiValue raw = phi_eval(st, rep.image_m, rep.image_n, tau_t, tau, direct);
  return reduced.value / raw.value;
}

EValue e_value(const CompatiblePair& pair, const Characteristic& mt, const std::vector<SiegelPoint>& taus_t,
               const std::vector<SiegelPoint>& taus, const ThetaOptions& opt) {
  EValue out;
  out.d = d_sign(pair, mt).sign;
  out.squared = multiplier_squared(pair.tilde(), mt, taus_t, opt);
  out.product = multiplier_product(pair.full(), lift_m(mt), lift_n(mt), taus, opt);
  out.raw = static_cast<double>(out.d) * out.squared.mean() / out.product.mean();
  const SnappedRoot s = snap_root(out.raw);
  out.root = s.root;
  out.residual = s.residual;
  if (s.root.exponent() % 2 != 0 || s.residual >= opt.spread_tol) {
    throw Error(ErrorKind::NotFourthRoot, "e = " + std::to_string(out.raw.real()) + " + " +
                                              std::to_string(out.raw.imag()) + "i is not near a 4th root of unity");
  }
  return out;
}

SiegelPoint sample_siegel(Rng& rng, int g) {
  Eigen::MatrixXd re(g, g), im = Eigen::MatrixXd::Identity(g, g);
  for (int i = 0; i < g; ++i) {
    for (int j = i; j < g; ++j) {
      re(i, j) = re(j, i) = rng.uniform_real(-0.5, 0.5);
      const double d = rng.uniform_real(-0.1, 0.1);
      im(i, j) += d;
      if (i != j) im(j, i) += d;
    }
  }
  Eigen::MatrixXcd t(g, g);
  t.real() = re;
  t.imag() = im;
  return SiegelPoint(t);
}

std::vector<SiegelPoint> sample_siegel_for(Rng& rng, const SymplecticMatrix& sigma, int count,
                                           const ThetaOptions& opt) {
  const int g = sigma.genus();
  std::vector<SiegelPoint> good;
  std::vector<std::pair<double, SiegelPoint>> spare;
  for (int attempt = 0; attempt < 400 * count && static_cast<int>(good.size()) < count; ++attempt) {
    SiegelPoint tau = sample_siegel(rng, g);
    double lam;
    try {
      lam = std::min(tau.lambda_min(), siegel_apply(sigma, tau).lambda_min());
    } catch (const Error&) {
      continue;
    }
    if (required_radius(g, lam, opt.tol, opt.radius_cap) > 0) {
      good.push_back(std::move(tau));
    } else {
      spare.emplace_back(lam, std::move(tau));
    }
  }
  std::stable_sort(spare.begin(), spare.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t k = 0; static_cast<int>(good.size()) < count && k < spare.size(); ++k) good.push_back(spare[k].second);
  return good;
}

}  // namespace thetalab
