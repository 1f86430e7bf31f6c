#include "thetalab/symplectic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <unordered_set>

namespace thetalab {

IntMatrix symplectic_form(int g) {
  IntMatrix j(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    j(i, g + i) = 1;
    j(g + i, i) = -1;
  }
  return j;
}

SymplecticMatrix::SymplecticMatrix(IntMatrix entries) {
  if (entries.rows() != entries.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
  }
  if (entries.rows() % 2 != 0 || entries.rows() == 0) {
    throw Error(ErrorKind::OddDimension, "dimension " + std::to_string(entries.rows()));
  }
  g_ = entries.rows() / 2;
  const IntMatrix j = symplectic_form(g_);
  if (!(entries.transpose() * j * entries == j)) {
    throw Error(ErrorKind::NotSymplectic, "transpose(M) J M != J");
  }
  m_ = std::move(entries);
}

SymplecticMatrix SymplecticMatrix::identity(int g) { return {Trusted{}, g, IntMatrix::identity(2 * g)}; }

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& rhs) const {
  if (rhs.g_ != g_) throw Error(ErrorKind::DimensionMismatch, "genus mismatch in product");
  return {Trusted{}, g_, m_ * rhs.m_};
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  // J^{-1} = -J, and M^{-1} = J^{-1} M^T J.
  const IntMatrix j = symplectic_form(g_);
  return {Trusted{}, g_, -(j * m_.transpose() * j)};
}

SymplecticMatrix SymplecticMatrix::transpose() const { return {Trusted{}, g_, m_.transpose()}; }

SymplecticMatrix SymplecticMatrix::pow(long k) const {
  SymplecticMatrix base = k < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  SymplecticMatrix out = identity(g_);
  while (e != 0) {
    if (e & 1u) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

f2::Mod2Matrix SymplecticMatrix::mod2() const {
  f2::Mod2Matrix out(2 * g_);
  for (int i = 0; i < 2 * g_; ++i) {
    for (int j = 0; j < 2 * g_; ++j) out.set(i, j, thetalab::mod2(m_(i, j)) != 0);
  }
  return out;
}

SymplecticMatrix validate_symplectic(const IntMatrix& entries) { return SymplecticMatrix(entries); }

std::string to_string(IgusaKind kind) {
  switch (kind) {
    case IgusaKind::Alpha: return "alpha";
    case IgusaKind::Beta: return "beta";
    case IgusaKind::Gamma: return "gamma";
  }
  return "?";
}

SymplecticMatrix igusa_generator(IgusaKind kind, int i, int j, int g) {
  if (g < 1 || i < 1 || j < 1 || i > g || j > g) {
    throw Error(ErrorKind::IndexOutOfRange, "indices (" + std::to_string(i) + "," + std::to_string(j) +
                                                ") outside 1.." + std::to_string(g));
  }
  if (kind != IgusaKind::Alpha && i > j) {
    throw Error(ErrorKind::IndexOutOfRange, to_string(kind) + " requires i <= j");
  }
  IntMatrix m = IntMatrix::identity(2 * g);
  const int a = i - 1, b = j - 1;
  switch (kind) {
    case IgusaKind::Alpha:
      if (a == b) {
        m(a, a) -= 2;
        m(g + a, g + a) -= 2;
      } else {
        m(a, b) += 2;
        m(g + b, g + a) -= 2;
      }
      break;
    case IgusaKind::Beta:
    case IgusaKind::Gamma:
      if (a == b) {
        m(a, g + a) += 2;
      } else {
        m(a, g + b) += 2;
        m(b, g + a) += 2;
      }
      if (kind == IgusaKind::Gamma) m = m.transpose();
      break;
  }
  return SymplecticMatrix(std::move(m));
}

std::vector<LabeledMatrix> igusa_generators(int g) {
  std::vector<LabeledMatrix> out;
  auto label = [](const char* name, int i, int j) {
    return std::string(name) + "_" + std::to_string(i) + "," + std::to_string(j);
  };
  for (int i = 1; i <= g; ++i) {
    for (int j = 1; j <= g; ++j) out.push_back({label("alpha", i, j), igusa_generator(IgusaKind::Alpha, i, j, g)});
  }
  for (int i = 1; i <= g; ++i) {
    for (int j = i; j <= g; ++j) {
      out.push_back({label("beta", i, j), igusa_generator(IgusaKind::Beta, i, j, g)});
      out.push_back({label("gamma", i, j), igusa_generator(IgusaKind::Gamma, i, j, g)});
    }
  }
  return out;
}

bool in_level(const SymplecticMatrix& sigma, const BigInt& d) { return sigma.entries().congruent_identity(d); }

bool in_gamma_p2(const SymplecticMatrix& sigma) {
  const int g = sigma.genus();
  const int n = 2 * g;
  for (int i = 0; i < n; ++i) {
    if (mod2(sigma(g - 1, i)) != (i == g - 1 ? 1 : 0)) return false;
    if (mod2(sigma(i, n - 1)) != (i == n - 1 ? 1 : 0)) return false;
  }
  return true;
}

int psi(const SymplecticMatrix& sigma) {
  if (!in_gamma_p2(sigma)) throw Error(ErrorKind::NotInSubgroup, "matrix does not fix B_g mod 2");
  const int g = sigma.genus();
  const BigInt half = sigma(g - 1, 2 * g - 1) / 2;
  return mod2(half);
}

// --- characteristics -------------------------------------------------------

Characteristic::Characteristic(int g, std::vector<BigInt> entries) : g_(g), v_(std::move(entries)) {
  if (static_cast<int>(v_.size()) != 2 * g_) {
    throw Error(ErrorKind::DimensionMismatch, "characteristic needs 2g entries");
  }
}

Characteristic Characteristic::from_parts(const std::vector<long>& prime, const std::vector<long>& second) {
  if (prime.size() != second.size()) throw Error(ErrorKind::DimensionMismatch, "m' and m'' differ in length");
  std::vector<BigInt> v;
  for (long x : prime) v.emplace_back(x);
  for (long x : second) v.emplace_back(x);
  return Characteristic(static_cast<int>(prime.size()), std::move(v));
}

Characteristic Characteristic::parse(const std::string& text) {
  const auto bar = text.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("characteristic must look like 'a,b|c,d'");
  auto split = [](const std::string& part) {
    std::vector<long> out;
    std::stringstream ss(part);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) out.push_back(std::stol(item));
    }
    return out;
  };
  return from_parts(split(text.substr(0, bar)), split(text.substr(bar + 1)));
}

int Characteristic::parity() const {
  BigInt s = 0;
  for (int i = 0; i < g_; ++i) s += v_[i] * v_[g_ + i];
  return thetalab::mod2(s);
}

bool Characteristic::is_reduced() const {
  for (const auto& v : v_) {
    if (v != 0 && v != 1) return false;
  }
  return true;
}

Characteristic Characteristic::operator+(const Characteristic& other) const {
  if (other.g_ != g_) throw Error(ErrorKind::DimensionMismatch, "characteristic sizes differ");
  std::vector<BigInt> out(v_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.v_[i];
  return Characteristic(g_, std::move(out));
}

Characteristic Characteristic::scaled(long k) const {
  std::vector<BigInt> out(v_);
  for (auto& v : out) v *= k;
  return Characteristic(g_, std::move(out));
}

Characteristic Characteristic::mod2() const {
  std::vector<BigInt> out;
  out.reserve(v_.size());
  for (const auto& v : v_) out.emplace_back(thetalab::mod2(v));
  return Characteristic(g_, std::move(out));
}

std::string Characteristic::to_string() const {
  std::string s;
  for (int i = 0; i < 2 * g_; ++i) {
    if (i == g_) {
      s += '|';
    } else if (i > 0) {
      s += ',';
    }
    s += v_[i].get_str();
  }
  return s;
}

std::vector<Characteristic> reduced_characteristics(int g, int parity) {
  std::vector<Characteristic> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (2 * g)); ++bits) {
    std::vector<BigInt> v;
    for (int i = 0; i < 2 * g; ++i) v.emplace_back(static_cast<long>((bits >> i) & 1u));
    Characteristic c(g, std::move(v));
    if (c.parity() == parity) out.push_back(std::move(c));
  }
  return out;
}

Characteristic char_apply(const SymplecticMatrix& sigma, const Characteristic& m) {
  const int g = sigma.genus();
  if (m.genus() != g) throw Error(ErrorKind::DimensionMismatch, "characteristic and matrix sizes differ");
  const IntMatrix a = sigma.alpha(), b = sigma.beta(), c = sigma.gamma(), d = sigma.delta();
  std::vector<BigInt> out(2 * g);
  for (int j = 0; j < g; ++j) {
    BigInt first = 0, second = 0;
    for (int i = 0; i < g; ++i) {
      first += m.prime(i) * a(j, i) - m.second(i) * b(j, i);
      second += -m.prime(i) * c(j, i) + m.second(i) * d(j, i);
      // diagonal corrections (b ta)_jj and (d tc)_jj
      first += b(j, i) * a(j, i);
      second += d(j, i) * c(j, i);
    }
    out[j] = first;
    out[g + j] = second;
  }
  return Characteristic(g, std::move(out));
}

// --- Siegel upper half space ----------------------------------------------

SiegelPoint::SiegelPoint(Eigen::MatrixXcd tau) : tau_(std::move(tau)) {
  if (tau_.rows() != tau_.cols() || tau_.rows() == 0) throw Error(ErrorKind::NotSiegel, "tau must be square");
  const double scale = std::max(1.0, tau_.cwiseAbs().maxCoeff());
  if ((tau_ - tau_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw Error(ErrorKind::NotSiegel, "tau is not symmetric");
  }
  tau_ = 0.5 * (tau_ + tau_.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tau_.imag());
  lambda_min_ = es.eigenvalues().minCoeff();
  if (!(lambda_min_ > 0.0)) throw Error(ErrorKind::NotSiegel, "Im tau is not positive definite");
}

SiegelPoint SiegelPoint::scalar_i(int g) {
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Identity(g, g) * std::complex<double>(0.0, 1.0);
  return SiegelPoint(t);
}

std::string SiegelPoint::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << '[';
  for (int i = 0; i < size(); ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < size(); ++j) {
      os << (j ? "," : "") << tau_(i, j).real() << (tau_(i, j).imag() < 0 ? "" : "+") << tau_(i, j).imag() << 'i';
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Eigen::MatrixXd to_double(const IntMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  }
  return out;
}

namespace {

void check_size(const SymplecticMatrix& sigma, const SiegelPoint& tau) {
  if (tau.size() != sigma.genus()) throw Error(ErrorKind::DimensionMismatch, "Siegel point size != genus");
}

}  // namespace

std::complex<double> cocycle_det(const SymplecticMatrix& sigma, const SiegelPoint& tau) {
  check_size(sigma, tau);
  const Eigen::MatrixXcd d = to_double(sigma.beta()).cast<std::complex<double>>() * tau.tau() +
                             to_double(sigma.alpha()).cast<std::complex<double>>();
  return d.determinant();
}

SiegelPoint siegel_apply(const SymplecticMatrix& sigma, const SiegelPoint& tau) {
  check_size(sigma, tau);
  using C = std::complex<double>;
  const Eigen::MatrixXcd num = to_double(sigma.delta()).cast<C>() * tau.tau() + to_double(sigma.gamma()).cast<C>();
  const Eigen::MatrixXcd den = to_double(sigma.beta()).cast<C>() * tau.tau() + to_double(sigma.alpha()).cast<C>();
  if (std::abs(den.determinant()) < 1e-12) throw Error(ErrorKind::SingularCocycle, "|det(beta tau + alpha)| < 1e-12");
  // X = num den^{-1}  <=>  den^T X^T = num^T
  Eigen::MatrixXcd x = den.transpose().fullPivLu().solve(num.transpose()).transpose();
  const double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
  if ((x - x.transpose()).cwiseAbs().maxCoeff() > 1e-8 * scale) {
    throw Error(ErrorKind::NotSiegel, "sigma . tau lost symmetry");
  }
  x = 0.5 * (x + x.transpose()).eval();
  return SiegelPoint(std::move(x));
}

// --- roots of unity ----------------------------------------------------------

int RootOfUnity::order() const {
  for (int n : {1, 2, 4, 8}) {
    if ((k_ * n) % 8 == 0) return n;
  }
  return 8;
}

std::complex<double> RootOfUnity::value() const {
  switch (k_) {
    case 0: return {1, 0};
    case 2: return {0, 1};
    case 4: return {-1, 0};
    case 6: return {0, -1};
    default: return std::polar(1.0, std::numbers::pi * k_ / 4.0);
  }
}

std::string RootOfUnity::to_string() const {
  switch (k_) {
    case 0: return "1";
    case 2: return "i";
    case 4: return "-1";
    case 6: return "-i";
    default: return "exp(" + std::to_string(k_) + "*pi*i/4)";
  }
}

SnappedRoot snap_root(std::complex<double> z) {
  const double turns = std::arg(z) / (std::numbers::pi / 4.0);
  RootOfUnity r(static_cast<int>(std::lround(turns)));
  return {r, std::abs(z - r.value())};
}

// --- stabilizer of B_g mod 2 --------------------------------------------------

f2::Mod2Matrix transvection_mod2(int g, std::uint64_t x) {
  f2::Mod2Matrix m = f2::Mod2Matrix::identity(2 * g);
  for (int j = 0; j < 2 * g; ++j) {
    if (f2::pairing(g, x, std::uint64_t{1} << j)) {
      for (int i = 0; i < 2 * g; ++i) {
        if ((x >> i) & 1u) m.flip(i, j);
      }
    }
  }
  return m;
}

namespace {

// 1-based (row, col) list added to the identity mod 2.
f2::Mod2Matrix elementary(int g, std::initializer_list<std::pair<int, int>> entries) {
  f2::Mod2Matrix m = f2::Mod2Matrix::identity(2 * g);
  for (auto [r, c] : entries) m.flip(r - 1, c - 1);
  return m;
}

}  // namespace

std::vector<f2::Mod2Matrix> stabilizer_generators_mod2(int g) {
  std::vector<f2::Mod2Matrix> out;
  auto a = [](int i) { return std::uint64_t{1} << (i - 1); };
  auto b = [g](int i) { return std::uint64_t{1} << (g + i - 1); };
  const int h = g - 1;
  // embedded Sp(2g-2; Z/2) on indices {1..g-1, g+1..2g-1}
  for (int i = 1; i <= h; ++i) {
    out.push_back(transvection_mod2(g, a(i)));
    out.push_back(transvection_mod2(g, b(i)));
    for (int j = i + 1; j <= h; ++j) {
      out.push_back(transvection_mod2(g, a(i) | a(j)));
      out.push_back(transvection_mod2(g, b(i) | b(j)));
    }
    for (int j = 1; j <= h; ++j) {
      if (j != i) out.push_back(transvection_mod2(g, a(i) | b(j)));
    }
  }
  out.push_back(transvection_mod2(g, b(g)));
  if (g >= 2) {
    out.push_back(elementary(g, {{1, g + 1}}));
    out.push_back(elementary(g, {{g + 1, 1}}));
  }
  if (g >= 3) out.push_back(elementary(g, {{1, 2}, {g + 2, g + 1}}));
  for (int i = 2; i < g; ++i) {
    out.push_back(elementary(g, {{g + i, 1}, {g + 1, i}}));
    out.push_back(elementary(g, {{i, g + 1}, {1, g + i}}));
    out.push_back(elementary(g, {{1, 1}, {g + i, g + i}, {i, 1}, {1, i}, {g + i, g + 1}, {g + 1, g + i}}));
  }
  for (int j = 1; j < g; ++j) {
    out.push_back(elementary(g, {{g + j, j}}));
    out.push_back(elementary(g, {{j, g + j}}));
    out.push_back(elementary(g, {{g + j, g}, {2 * g, j}}));
  }
  return out;
}

f2::Mod2Matrix off_stabilizer_generator_mod2(int g) { return transvection_mod2(g, std::uint64_t{1} << (g - 1)); }

bool fixes_bg_mod2(int g, const f2::Mod2Matrix& m) {
  const std::uint64_t bg = std::uint64_t{1} << (2 * g - 1);
  return m.apply(bg) == bg;
}

OrbitReport orbit_index(int g) {
  if (g < 1) throw Error(ErrorKind::IndexOutOfRange, "genus must be positive");
  if (g > 8) throw Error(ErrorKind::GenusTooLarge, "orbit BFS supports g <= 8");
  auto gens = stabilizer_generators_mod2(g);
  OrbitReport rep;
  rep.genus = g;
  rep.generator_count = static_cast<int>(gens.size());
  rep.stabilizer_fixes_bg = true;
  for (const auto& m : gens) {
    if (!f2::is_symplectic(g, m) || !fixes_bg_mod2(g, m)) rep.stabilizer_fixes_bg = false;
  }
  gens.push_back(off_stabilizer_generator_mod2(g));

  const std::uint64_t start = std::uint64_t{1} << (2 * g - 1);
  std::vector<char> seen(std::size_t{1} << (2 * g), 0);
  std::vector<std::uint64_t> frontier{start};
  seen[start] = 1;
  std::uint64_t count = 1;
  while (!frontier.empty()) {
    const std::uint64_t v = frontier.back();
    frontier.pop_back();
    for (const auto& m : gens) {
      const std::uint64_t w = m.apply(v);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        frontier.push_back(w);
      }
    }
  }
  rep.orbit_size = count;
  rep.expected = (std::uint64_t{1} << (2 * g)) - 1;
  return rep;
}

}  // namespace thetalab
