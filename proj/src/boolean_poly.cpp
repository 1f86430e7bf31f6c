#include "thetalab/boolean_poly.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <sstream>

#include "thetalab/error.hpp"

namespace thetalab {

namespace {

int display_key(int g, int var) { return 2 * (var % g) + (var >= g ? 1 : 0); }

std::vector<int> sorted_keys(int g, std::uint64_t mask) {
  std::vector<int> keys;
  for (int k = 0; k < 2 * g; ++k) {
    if ((mask >> k) & 1u) keys.push_back(display_key(g, k));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

void require_same_genus(const BooleanPolynomial& p, const BooleanPolynomial& q) {
  if (p.genus() != q.genus()) throw Error(ErrorKind::DimensionMismatch, "polynomials of different genus");
}

}  // namespace

MonomialBasis::MonomialBasis(int g) : g_(g) {
  if (g < 1 || g > 16) throw Error(ErrorKind::IndexOutOfRange, "boolean polynomials need 1 <= g <= 16");
  const int n = 2 * g;
  std::vector<std::vector<std::uint64_t>> levels(4);
  levels[0].push_back(0);
  for (int a = 0; a < n; ++a) {
    const std::uint64_t ma = std::uint64_t{1} << a;
    levels[1].push_back(ma);
    for (int b = a + 1; b < n; ++b) {
      const std::uint64_t mb = ma | (std::uint64_t{1} << b);
      levels[2].push_back(mb);
      for (int c = b + 1; c < n; ++c) levels[3].push_back(mb | (std::uint64_t{1} << c));
    }
  }
  for (auto& level : levels) {
    std::sort(level.begin(), level.end(),
              [g](std::uint64_t x, std::uint64_t y) { return sorted_keys(g, x) < sorted_keys(g, y); });
    for (auto m : level) {
      index_.emplace(m, masks_.size());
      masks_.push_back(m);
    }
  }
}

std::shared_ptr<const MonomialBasis> MonomialBasis::get(int g) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const MonomialBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[g];
  if (!slot) slot = std::make_shared<const MonomialBasis>(g);
  return slot;
}

std::size_t MonomialBasis::index(std::uint64_t mask) const {
  const auto it = index_.find(mask);
  if (it == index_.end()) {
    if (std::popcount(mask) > 3) throw Error(ErrorKind::DegreeOverflow, "monomial of degree > 3");
    throw Error(ErrorKind::IndexOutOfRange, "variable outside the genus");
  }
  return it->second;
}

std::string MonomialBasis::name(std::uint64_t mask) const {
  if (mask == 0) return "1";
  std::vector<std::pair<int, int>> vars;
  for (int k = 0; k < 2 * g_; ++k) {
    if ((mask >> k) & 1u) vars.emplace_back(display_key(g_, k), k);
  }
  std::sort(vars.begin(), vars.end());
  std::string s;
  for (auto [key, k] : vars) {
    if (!s.empty()) s += '*';
    s += (k < g_ ? "A" : "B") + std::to_string(k % g_ + 1);
  }
  return s;
}

std::uint64_t MonomialBasis::parse(const std::string& text) const {
  std::uint64_t mask = 0;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '*')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty() || item == "1") continue;
    if (item.size() < 2 || (item[0] != 'A' && item[0] != 'B')) {
      throw std::invalid_argument("bad variable '" + item + "'");
    }
    const int i = std::stoi(item.substr(1));
    if (i < 1 || i > g_) throw Error(ErrorKind::IndexOutOfRange, "variable " + item);
    const int k = (item[0] == 'A' ? 0 : g_) + i - 1;
    // x^2 = x
    mask |= std::uint64_t{1} << k;
  }
  index(mask);
  return mask;
}

BooleanPolynomial::BooleanPolynomial(int g) : basis_(MonomialBasis::get(g)), coeffs_(basis_->size()) {}

BooleanPolynomial BooleanPolynomial::one(int g) { return monomial(g, 0); }

BooleanPolynomial BooleanPolynomial::monomial(int g, std::uint64_t mask) {
  BooleanPolynomial p(g);
  p.coeffs_.set(p.basis_->index(mask));
  return p;
}

BooleanPolynomial BooleanPolynomial::variable(int g, int k) {
  if (k < 0 || k >= 2 * g) throw Error(ErrorKind::IndexOutOfRange, "variable index");
  return monomial(g, std::uint64_t{1} << k);
}

BooleanPolynomial BooleanPolynomial::parse(int g, const std::string& text) {
  BooleanPolynomial p(g);
  std::stringstream ss(text);
  std::string term;
  while (std::getline(ss, term, '+')) {
    term.erase(std::remove_if(term.begin(), term.end(), ::isspace), term.end());
    if (term.empty() || term == "0") continue;
    p.coeffs_.flip(p.basis_->index(p.basis_->parse(term)));
  }
  return p;
}

int BooleanPolynomial::degree() const {
  int d = -1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_.get(i)) d = std::max(d, std::popcount(basis_->mask(i)));
  }
  return d;
}

std::vector<std::uint64_t> BooleanPolynomial::monomials() const {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_.get(i)) out.push_back(basis_->mask(i));
  }
  return out;
}

BooleanPolynomial& BooleanPolynomial::operator+=(const BooleanPolynomial& o) {
  require_same_genus(*this, o);
  coeffs_ ^= o.coeffs_;
  return *this;
}

std::string BooleanPolynomial::to_string() const {
  // Highest degree first, matching the way the classes are usually written.
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_.get(i)) idx.push_back(i);
  }
  if (idx.empty()) return "0";
  std::stable_sort(idx.begin(), idx.end(), [this](std::size_t a, std::size_t b) {
    return std::popcount(basis_->mask(a)) > std::popcount(basis_->mask(b));
  });
  std::string s;
  for (auto i : idx) {
    if (!s.empty()) s += " + ";
    s += basis_->name(basis_->mask(i));
  }
  return s;
}

BooleanPolynomial bar_of_class(int g, std::uint64_t v) {
  BooleanPolynomial p(g);
  int pairs = 0;
  for (int i = 0; i < 2 * g; ++i) {
    if (!((v >> i) & 1u)) continue;
    p += BooleanPolynomial::variable(g, i);
    for (int j = i + 1; j < 2 * g; ++j) {
      if (((v >> j) & 1u) && f2::pairing(g, std::uint64_t{1} << i, std::uint64_t{1} << j)) ++pairs;
    }
  }
  if (pairs % 2) p += BooleanPolynomial::one(g);
  return p;
}

BooleanPolynomial bar_of_class_recursive(int g, std::uint64_t v) {
  if (v == 0) return BooleanPolynomial(g);
  const std::uint64_t low = v & (~v + 1);
  const std::uint64_t rest = v ^ low;
  BooleanPolynomial p = bar_of_class_recursive(g, rest) + BooleanPolynomial::variable(g, std::countr_zero(low));
  if (f2::pairing(g, low, rest)) p += BooleanPolynomial::one(g);
  return p;
}

BooleanPolynomial bp_mul(const BooleanPolynomial& p, const BooleanPolynomial& q) {
  require_same_genus(p, q);
  const int g = p.genus();
  BooleanPolynomial out(g);
  const auto& basis = p.basis();
  const auto mp = p.monomials();
  const auto mq = q.monomials();
  for (auto a : mp) {
    for (auto b : mq) {
      const std::uint64_t m = a | b;
      if (std::popcount(m) > 3) {
        throw Error(ErrorKind::DegreeOverflow, basis.name(a) + " * " + basis.name(b) + " has degree > 3");
      }
      out.coeffs().flip(basis.index(m));
    }
  }
  return out;
}

BooleanPolynomial sp2_action(const f2::Mod2Matrix& sigma, const BooleanPolynomial& p) {
  const int g = p.genus();
  if (sigma.dim() != 2 * g) throw Error(ErrorKind::DimensionMismatch, "matrix size != 2g");
  if (!f2::is_symplectic(g, sigma)) throw Error(ErrorKind::NotSymplecticMod2, "matrix is not symplectic mod 2");
  std::vector<BooleanPolynomial> images;
  images.reserve(2 * g);
  for (int k = 0; k < 2 * g; ++k) images.push_back(bar_of_class(g, sigma.column(k)));
  BooleanPolynomial out(g);
  for (auto m : p.monomials()) {
    BooleanPolynomial term = BooleanPolynomial::one(g);
    for (int k = 0; k < 2 * g; ++k) {
      if ((m >> k) & 1u) term = bp_mul(term, images[k]);
    }
    out += term;
  }
  return out;
}

BooleanPolynomial omega_polynomial(int g) {
  BooleanPolynomial a(g);
  for (int i = 0; i < g; ++i) {
    a += BooleanPolynomial::monomial(g, (std::uint64_t{1} << i) | (std::uint64_t{1} << (g + i)));
  }
  return a;
}

QuotientSpace b3_space(int g, int r) {
  if (g < 2) throw Error(ErrorKind::IndexOutOfRange, "b3_space needs g >= 2");
  if (r != 0 && r != 1) throw Error(ErrorKind::IndexOutOfRange, "r must be 0 or 1");
  const auto basis = MonomialBasis::get(g);
  f2::Subspace rel(basis->size());
  if (r == 0) {
    const BooleanPolynomial alpha = omega_polynomial(g);
    rel.insert(alpha.coeffs());
    for (int k = 0; k < 2 * g; ++k) rel.insert(bp_mul(alpha, BooleanPolynomial::variable(g, k)).coeffs());
  }
  return QuotientSpace(g, std::move(rel));
}

namespace {

f2::BitVec extend(const f2::BitVec& v, std::size_t size) {
  f2::BitVec out(size);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.get(i)) out.set(i);
  }
  return out;
}

}  // namespace

CoinvariantResult coinvariants(const QuotientSpace& space, const std::vector<f2::Mod2Matrix>& gens) {
  const int g = space.genus();
  const auto basis = MonomialBasis::get(g);
  const std::uint64_t bg = std::uint64_t{1} << (2 * g - 1);
  for (const auto& s : gens) {
    if (s.dim() != 2 * g) throw Error(ErrorKind::DimensionMismatch, "generator size != 2g");
    if (s.apply(bg) != bg) throw Error(ErrorKind::GeneratorNotInStabilizer, "generator moves B_g mod 2:\n" + s.to_string());
  }
  CoinvariantResult res;
  res.relations = space.relations();
  for (const auto& s : gens) {
    for (std::size_t i = 0; i < basis->size(); ++i) {
      const BooleanPolynomial b = BooleanPolynomial::monomial(g, basis->mask(i));
      res.relations.insert((sp2_action(s, b) + b).coeffs());
    }
  }
  res.dimension = basis->size() - res.relations.rank();

  std::vector<std::size_t> order(basis->size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::popcount(basis->mask(a)) > std::popcount(basis->mask(b));
  });
  f2::Subspace chosen = res.relations;
  const std::size_t n = basis->size();
  res.tagged_ = f2::Subspace(n + res.dimension);
  for (auto i : order) {
    if (res.representatives.size() == res.dimension) break;
    const BooleanPolynomial m = BooleanPolynomial::monomial(g, basis->mask(i));
    if (chosen.insert(m.coeffs())) {
      f2::BitVec tagged = extend(res.relations.reduce(m.coeffs()), n + res.dimension);
      tagged.set(n + res.representatives.size());
      res.tagged_.insert(std::move(tagged));
      res.representatives.push_back(m);
    }
  }
  return res;
}

std::vector<bool> CoinvariantResult::project(const BooleanPolynomial& p) const {
  const std::size_t n = p.coeffs().size();
  const f2::BitVec r = tagged_.reduce(extend(relations.reduce(p.coeffs()), n + dimension));
  std::vector<bool> out(dimension);
  for (std::size_t k = 0; k < dimension; ++k) out[k] = r.get(n + k);
  return out;
}

int contraction(const BooleanPolynomial& p) {
  const int g = p.genus();
  const std::uint64_t bg = std::uint64_t{1} << (2 * g - 1);
  int total = 0;
  for (auto m : p.monomials()) {
    if (std::popcount(m) != 3) continue;
    std::uint64_t v[3];
    int n = 0;
    for (int k = 0; k < 2 * g; ++k) {
      if ((m >> k) & 1u) v[n++] = std::uint64_t{1} << k;
    }
    for (int s = 0; s < 3; ++s) {
      const auto x = v[s], y = v[(s + 1) % 3], z = v[(s + 2) % 3];
      total += f2::pairing(g, x, y) && f2::pairing(g, bg, z);
    }
  }
  return total % 2;
}

BooleanPolynomial johnson_mu_reference(int g) {
  const std::uint64_t a1 = 1, b1 = std::uint64_t{1} << g, ag = std::uint64_t{1} << (g - 1);
  return BooleanPolynomial::monomial(g, a1 | b1 | ag) + BooleanPolynomial::monomial(g, a1 | b1);
}

}  // namespace thetalab
