#include "thetalab/homology.hpp"

#include <array>

namespace thetalab {

HomologyClass::HomologyClass(int g, std::vector<BigInt> coords) : g_(g), c_(std::move(coords)) {
  if (static_cast<int>(c_.size()) != 2 * g_) throw Error(ErrorKind::DimensionMismatch, "homology class needs 2g coordinates");
}

HomologyClass HomologyClass::zero(int g) { return HomologyClass(g, std::vector<BigInt>(2 * g)); }

HomologyClass HomologyClass::a(int g, int i) {
  if (i < 1 || i > g) throw Error(ErrorKind::IndexOutOfRange, "A_" + std::to_string(i));
  HomologyClass x = zero(g);
  x.c_[i - 1] = 1;
  return x;
}

HomologyClass HomologyClass::b(int g, int i) {
  if (i < 1 || i > g) throw Error(ErrorKind::IndexOutOfRange, "B_" + std::to_string(i));
  HomologyClass x = zero(g);
  x.c_[g + i - 1] = 1;
  return x;
}

HomologyClass HomologyClass::operator+(const HomologyClass& o) const {
  if (o.g_ != g_) throw Error(ErrorKind::DimensionMismatch, "genus mismatch");
  HomologyClass r = *this;
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] += o.c_[k];
  return r;
}

HomologyClass HomologyClass::operator-(const HomologyClass& o) const { return *this + (-o); }

HomologyClass HomologyClass::operator-() const { return scaled(-1); }

HomologyClass HomologyClass::scaled(const BigInt& k) const {
  HomologyClass r = *this;
  for (auto& v : r.c_) v *= k;
  return r;
}

BigInt HomologyClass::dot(const HomologyClass& o) const {
  if (o.g_ != g_) throw Error(ErrorKind::DimensionMismatch, "genus mismatch");
  BigInt s = 0;
  for (int i = 0; i < g_; ++i) s += c_[i] * o.c_[g_ + i] - c_[g_ + i] * o.c_[i];
  return s;
}

std::string HomologyClass::to_string() const {
  std::string s;
  for (int k = 0; k < 2 * g_; ++k) {
    if (c_[k] == 0) continue;
    const std::string name = (k < g_ ? "A" : "B") + std::to_string(k % g_ + 1);
    if (c_[k] < 0) {
      s += s.empty() ? "-" : " - ";
    } else if (!s.empty()) {
      s += " + ";
    }
    const BigInt mag = abs(c_[k]);
    if (mag != 1) s += mag.get_str() + "*";
    s += name;
  }
  return s.empty() ? "0" : s;
}

HomologyClass apply(const SymplecticMatrix& sigma, const HomologyClass& x) {
  const int n = sigma.dim();
  if (x.genus() != sigma.genus()) throw Error(ErrorKind::DimensionMismatch, "genus mismatch");
  std::vector<BigInt> out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out[i] += sigma(i, j) * x[j];
  }
  return HomologyClass(x.genus(), std::move(out));
}

HomologyClass curve_class(CurveLabel label, int i, int j, int g) {
  const bool two = label == CurveLabel::Cij || label == CurveLabel::CPrimeij || label == CurveLabel::CDoublePrimeij;
  if (i < 1 || i > g || (two && (j < 1 || j > g))) {
    throw Error(ErrorKind::IndexOutOfRange, "curve index outside 1.." + std::to_string(g));
  }
  switch (label) {
    case CurveLabel::C: return HomologyClass::a(g, i);
    case CurveLabel::CPrime: return HomologyClass::b(g, i);
    case CurveLabel::Cij: return HomologyClass::a(g, i) + HomologyClass::a(g, j);
    case CurveLabel::CPrimeij: return HomologyClass::b(g, i) + HomologyClass::b(g, j);
    case CurveLabel::CDoublePrimeij: return HomologyClass::a(g, i) + HomologyClass::b(g, j);
  }
  return HomologyClass::zero(g);
}

SymplecticMatrix transvection(const HomologyClass& x, const BigInt& k, int sign) {
  const int g = x.genus();
  const int n = 2 * g;
  // I + k x (tx J); (tx J)_j = x_{j-g} for j >= g and -x_{j+g} for j < g.
  std::vector<BigInt> row(n);
  for (int j = 0; j < g; ++j) {
    row[j] = -x[g + j];
    row[g + j] = x[j];
  }
  IntMatrix m = IntMatrix::identity(n);
  const BigInt kk = k * sign;
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) m(i, j) += kk * x[i] * row[j];
  }
  return SymplecticMatrix(std::move(m));
}

bool FactorizationReport::all_normative_hold() const {
  for (const auto& c : checks) {
    if (c.normative && !c.holds) return false;
  }
  return !checks.empty();
}

FactorizationReport verify_factorizations(int g, int twist_sign) {
  if (g < 2) throw Error(ErrorKind::IndexOutOfRange, "factorizations need g >= 2");
  FactorizationReport rep;
  rep.genus = g;
  auto t = [twist_sign](const HomologyClass& x, long k) { return transvection(x, k, twist_sign); };
  const HomologyClass ag = HomologyClass::a(g, g);
  const HomologyClass bg = HomologyClass::b(g, g);
  const SymplecticMatrix beta_gg = igusa_generator(IgusaKind::Beta, g, g, g);
  const SymplecticMatrix gamma_gg = igusa_generator(IgusaKind::Gamma, g, g, g);

  for (int j = 1; j < g; ++j) {
    const HomologyClass bj = HomologyClass::b(g, j);
    const SymplecticMatrix target = igusa_generator(IgusaKind::Alpha, g, j, g);
    const std::string idx = std::to_string(g) + "," + std::to_string(j);
    rep.checks.push_back({"alpha_" + idx + " = T(A" + std::to_string(g) + "-B" + std::to_string(j) + ")^2 T(B" +
                              std::to_string(j) + ")^-2 T(A" + std::to_string(g) + ")^-2",
                          t(ag - bj, 2) * t(bj, -2) * t(ag, -2) == target, true});
    rep.checks.push_back({"alpha_" + idx + " = T(A" + std::to_string(g) + "+B" + std::to_string(j) + ")^2 T(B" +
                              std::to_string(j) + ")^-2 T(A" + std::to_string(g) + ")^-2",
                          t(ag + bj, 2) * t(bj, -2) * t(ag, -2) == target, false});
  }
  for (int i = 1; i < g; ++i) {
    const HomologyClass ai = HomologyClass::a(g, i);
    const SymplecticMatrix target = igusa_generator(IgusaKind::Beta, i, g, g);
    rep.checks.push_back({"beta_" + std::to_string(i) + "," + std::to_string(g) + " = T(A" + std::to_string(i) +
                              "+A" + std::to_string(g) + ")^2 T(A" + std::to_string(i) + ")^-2 T(A" +
                              std::to_string(g) + ")^-2",
                          t(ai + ag, 2) * t(ai, -2) * t(ag, -2) == target, true});
  }
  const std::string gs = std::to_string(g);
  rep.checks.push_back({"alpha_" + gs + "," + gs + " = T(A" + gs + "+B" + gs + ")^2 beta_" + gs + "," + gs +
                            " gamma_" + gs + "," + gs + "^-1",
                        t(ag + bg, 2) * beta_gg * gamma_gg.inverse() == igusa_generator(IgusaKind::Alpha, g, g, g),
                        true});
  rep.checks.push_back({"beta_" + gs + "," + gs + " = T(A" + gs + ")^2", t(ag, 2) == beta_gg, true});
  return rep;
}

ChainReport chain_shadow(const HomologyClass& x1, const HomologyClass& x2, const HomologyClass& x3) {
  const BigInt p12 = x1.dot(x2), p23 = x2.dot(x3), p13 = x1.dot(x3);
  if (abs(p12) != 1 || abs(p23) != 1 || p13 != 0) {
    throw Error(ErrorKind::NotAChain, "need x1.x2 = +-1, x2.x3 = +-1, x1.x3 = 0 (got " + p12.get_str() + ", " +
                                          p23.get_str() + ", " + p13.get_str() + ")");
  }
  const SymplecticMatrix w = transvection(x1, 1) * transvection(x2, 1) * transvection(x3, 1);
  const SymplecticMatrix lhs = w.pow(4);

  ChainReport rep;
  std::vector<HomologyClass> candidates;
  for (int s1 : {1, -1}) {
    for (int s3 : {1, -1}) candidates.push_back(x1.scaled(s1) + x3.scaled(s3));
  }
  bool found = false;
  for (const auto& d : candidates) {
    for (const auto& dp : candidates) {
      if (transvection(d, 1) * transvection(dp, 1) == lhs) {
        ++rep.oracle_matches;
        if (!found) {
          rep.d = d;
          rep.d_prime = dp;
          found = true;
        }
      }
    }
  }
  rep.holds = found;
  if (found) {
    const HomologyClass predicted = x1 + x3.scaled(p12 * p23);
    auto same_line = [&](const HomologyClass& c) { return c == predicted || c == -predicted; };
    rep.closed_form_agrees = same_line(rep.d) && same_line(rep.d_prime);
  }
  return rep;
}

}  // namespace thetalab
