#include "doctest.h"
#include "thetalab/boolean_poly.hpp"
#include "thetalab/rng.hpp"
#include "thetalab/symplectic.hpp"

#include <bit>

using namespace thetalab;

namespace {

std::uint64_t A(int g, int i) { return std::uint64_t{1} << (i - 1); }
std::uint64_t B(int g, int i) { return std::uint64_t{1} << (g + i - 1); }

BooleanPolynomial P(int g, const std::string& s) { return BooleanPolynomial::parse(g, s); }

// I + sum of e_{ij} over F2, 1-based.
f2::Mod2Matrix elementary(int g, std::initializer_list<std::pair<int, int>> entries) {
  f2::Mod2Matrix m = f2::Mod2Matrix::identity(2 * g);
  for (auto [i, j] : entries) m.flip(i - 1, j - 1);
  return m;
}

// Random product of stabilizer generators.
f2::Mod2Matrix random_stabilizer_word(Rng& rng, int g, int len) {
  const auto gens = stabilizer_generators_mod2(g);
  f2::Mod2Matrix m = f2::Mod2Matrix::identity(2 * g);
  for (int k = 0; k < len; ++k) m = m * gens[static_cast<std::size_t>(rng.uniform_int(0, gens.size() - 1))];
  return m;
}

// Random element of Sp(2g; Z/2) from mod-2 transvections.
f2::Mod2Matrix random_sp2(Rng& rng, int g, int len) {
  f2::Mod2Matrix m = f2::Mod2Matrix::identity(2 * g);
  for (int k = 0; k < len; ++k) {
    const auto x = static_cast<std::uint64_t>(rng.uniform_int(1, (1L << (2 * g)) - 1));
    m = m * transvection_mod2(g, x);
  }
  return m;
}

BooleanPolynomial random_poly(Rng& rng, int g, int max_degree) {
  BooleanPolynomial p(g);
  for (std::size_t i = 0; i < p.basis().size(); ++i) {
    if (std::popcount(p.basis().mask(i)) <= max_degree && rng.coin()) p.coeffs().set(i);
  }
  return p;
}

std::size_t binom(int n, int k) {
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) r = r * static_cast<std::size_t>(n - i) / static_cast<std::size_t>(i + 1);
  return r;
}

// Plain Gaussian elimination rank.
std::size_t dense_rank(std::vector<f2::BitVec> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  for (std::size_t col = 0; col < rows[0].size() && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && !rows[p].get(col)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::NotSymplectic;
}

}  // namespace

TEST_CASE("monomial basis size and naming") {
  for (int g = 1; g <= 6; ++g) {
    const int n = 2 * g;
    CHECK(MonomialBasis::get(g)->size() == 1 + binom(n, 1) + binom(n, 2) + binom(n, 3));
  }
  CHECK(MonomialBasis::get(3)->size() == 42);
  CHECK(MonomialBasis::get(4)->size() == 93);
  const auto basis = MonomialBasis::get(4);
  CHECK(basis->name(A(4, 1) | B(4, 1) | A(4, 4)) == "A1*B1*A4");
  CHECK(basis->name(B(4, 2) | A(4, 3)) == "B2*A3");
  CHECK(basis->name(0) == "1");
  CHECK(basis->parse("A4*B1*A1") == (A(4, 1) | B(4, 1) | A(4, 4)));
  CHECK(basis->parse("A1*A1") == A(4, 1));
  CHECK(kind_of([&] { basis->index(A(4, 1) | A(4, 2) | A(4, 3) | A(4, 4)); }) == ErrorKind::DegreeOverflow);
  CHECK(kind_of([&] { basis->parse("A5"); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("polynomial formatting puts higher degree first") {
  const BooleanPolynomial p = P(4, "1 + A1*B1 + A1*B1*A4");
  CHECK(p.to_string() == "A1*B1*A4 + A1*B1 + 1");
  CHECK(p.degree() == 3);
  CHECK(BooleanPolynomial(4).degree() == -1);
  CHECK(BooleanPolynomial(4).to_string() == "0");
  CHECK((p + p).is_zero());
  CHECK(P(2, "A1 + A1").is_zero());
}

TEST_CASE("bar_of_class examples") {
  const int g = 2;
  CHECK(bar_of_class(g, A(g, 1)) == P(g, "A1"));
  CHECK(bar_of_class(g, A(g, 1) | B(g, 1)) == P(g, "A1 + B1 + 1"));
  CHECK(bar_of_class(g, A(g, 1) | A(g, 2)) == P(g, "A1 + A2"));
  CHECK(bar_of_class(g, 0).is_zero());
  // A1.B1 + A2.B2 = 0 mod 2, so no constant term
  CHECK(bar_of_class(g, A(g, 1) | B(g, 1) | A(g, 2) | B(g, 2)) == P(g, "A1 + B1 + A2 + B2"));
}

TEST_CASE("bar_of_class closed form equals the recursive expansion") {
  for (std::uint64_t v = 0; v < 16; ++v) CHECK(bar_of_class(2, v) == bar_of_class_recursive(2, v));
  Rng rng(31);
  for (int g = 3; g <= 5; ++g) {
    for (int k = 0; k < 200; ++k) {
      const auto v = static_cast<std::uint64_t>(rng.uniform_int(0, (1L << (2 * g)) - 1));
      CHECK(bar_of_class(g, v) == bar_of_class_recursive(g, v));
    }
  }
}

TEST_CASE("bp_mul examples") {
  const int g = 4;
  CHECK(bp_mul(P(g, "A1"), P(g, "A1")) == P(g, "A1"));
  CHECK(bp_mul(P(g, "A1"), P(g, "B1")) == P(g, "A1*B1"));
  CHECK(bp_mul(omega_polynomial(g), P(g, "A4")) == P(g, "A1*B1*A4 + A2*B2*A4 + A3*B3*A4 + A4*B4"));
  CHECK(bp_mul(P(g, "1"), P(g, "A2*B3")) == P(g, "A2*B3"));
  CHECK(bp_mul(P(g, "A1 + 1"), P(g, "A1 + 1")) == P(g, "A1 + 1"));
  CHECK(kind_of([&] { bp_mul(P(g, "A1*B1"), P(g, "A2*B2")); }) == ErrorKind::DegreeOverflow);
  CHECK(kind_of([&] { bp_mul(P(g, "A1"), P(3, "A1")); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("bp_mul is commutative and associative where defined") {
  Rng rng(32);
  const int g = 3;
  for (int k = 0; k < 100; ++k) {
    const BooleanPolynomial p = random_poly(rng, g, 1);
    const BooleanPolynomial q = random_poly(rng, g, 1);
    const BooleanPolynomial r = random_poly(rng, g, 1);
    CHECK(bp_mul(p, q) == bp_mul(q, p));
    CHECK(bp_mul(bp_mul(p, q), r) == bp_mul(p, bp_mul(q, r)));
    CHECK(bp_mul(p, q + r) == bp_mul(p, q) + bp_mul(p, r));
  }
}

TEST_CASE("sp2_action examples") {
  const int g = 4;
  const BooleanPolynomial p = P(g, "A1*B2*A3 + B4 + 1");
  CHECK(sp2_action(f2::Mod2Matrix::identity(2 * g), p) == p);
  CHECK(sp2_action(elementary(g, {{1, g + 1}}), P(g, "B1*A4")) == P(g, "B1*A4 + A1*A4 + A4"));
  CHECK(sp2_action(elementary(g, {{g + 1, 1}}), P(g, "A1*A4")) == P(g, "A1*A4 + B1*A4 + A4"));
  f2::Mod2Matrix bad = f2::Mod2Matrix::identity(2 * g);
  bad.flip(0, 1);
  CHECK(kind_of([&] { sp2_action(bad, p); }) == ErrorKind::NotSymplecticMod2);
}

TEST_CASE("sp2_action sends generators to bar of the image class") {
  Rng rng(33);
  const int g = 3;
  for (int k = 0; k < 30; ++k) {
    const f2::Mod2Matrix s = random_sp2(rng, g, 6);
    for (int v = 0; v < 2 * g; ++v) {
      CHECK(sp2_action(s, BooleanPolynomial::variable(g, v)) == bar_of_class(g, s.apply(std::uint64_t{1} << v)));
    }
  }
}

TEST_CASE("sp2_action is a linear group action preserving the degree filtration") {
  Rng rng(34);
  for (int g = 2; g <= 4; ++g) {
    for (int k = 0; k < 40; ++k) {
      const f2::Mod2Matrix s = random_sp2(rng, g, 5);
      const f2::Mod2Matrix t = random_sp2(rng, g, 5);
      const BooleanPolynomial p = random_poly(rng, g, 3);
      const BooleanPolynomial q = random_poly(rng, g, 3);
      CHECK(sp2_action(s * t, p) == sp2_action(s, sp2_action(t, p)));
      CHECK(sp2_action(s, p + q) == sp2_action(s, p) + sp2_action(s, q));
      for (int d = 0; d <= 3; ++d) {
        const BooleanPolynomial low = random_poly(rng, g, d);
        CHECK(sp2_action(s, low).degree() <= d);
      }
    }
  }
}

TEST_CASE("b3_space dimensions") {
  CHECK(b3_space(3, 1).dimension() == 42);
  CHECK(b3_space(4, 1).dimension() == 93);
  for (int g = 2; g <= 5; ++g) {
    // independent rank of alpha * B^1: alpha * 1 and alpha * x for each variable
    const auto basis = MonomialBasis::get(g);
    std::vector<f2::BitVec> rows;
    for (int x = -1; x < 2 * g; ++x) {
      f2::BitVec row(basis->size());
      for (int i = 1; i <= g; ++i) {
        std::uint64_t mask = A(g, i) | B(g, i);
        if (x >= 0) mask |= std::uint64_t{1} << x;
        row.flip(basis->index(mask));
      }
      rows.push_back(row);
    }
    const QuotientSpace q = b3_space(g, 0);
    CHECK(q.ambient_dimension() == basis->size());
    CHECK(q.dimension() == basis->size() - dense_rank(rows));
    CHECK(q.project(q.project(P(g, "A1*B2").coeffs())) == q.project(P(g, "A1*B2").coeffs()));
    CHECK_FALSE(q.project(omega_polynomial(g).coeffs()).any());
  }
}

TEST_CASE("coinvariants under the trivial group keep the full space") {
  for (int g = 2; g <= 4; ++g) {
    const std::vector<f2::Mod2Matrix> trivial{f2::Mod2Matrix::identity(2 * g)};
    CHECK(coinvariants(b3_space(g, 1), trivial).dimension == MonomialBasis::get(g)->size());
    CHECK(coinvariants(b3_space(g, 0), trivial).dimension == b3_space(g, 0).dimension());
  }
}

TEST_CASE("coinvariant dimensions under the stabilizer of B_g") {
  struct Case {
    int g, r;
    std::size_t dim;
  };
  for (const Case c : {Case{4, 0, 0}, Case{4, 1, 1}, Case{5, 0, 1}, Case{5, 1, 1}}) {
    CAPTURE(c.g);
    CAPTURE(c.r);
    const CoinvariantResult res = coinvariants(b3_space(c.g, c.r), stabilizer_generators_mod2(c.g));
    CHECK(res.dimension == c.dim);
    CHECK(res.representatives.size() == c.dim);
  }
  const CoinvariantResult g4 = coinvariants(b3_space(4, 1), stabilizer_generators_mod2(4));
  REQUIRE(g4.representatives.size() == 1);
  CHECK(g4.representatives[0].to_string() == "A1*B1*A4");
  CHECK(g4.is_zero_class(P(4, "A1*B1")));
  CHECK_FALSE(g4.is_zero_class(P(4, "A1*B1*A4")));
  CHECK(g4.same_class(P(4, "A1*B1*A4"), P(4, "A2*B2*A4")));
  CHECK(g4.project(P(4, "A1*B1*A4")) == std::vector<bool>{true});
  CHECK(g4.project(johnson_mu_reference(4)) == std::vector<bool>{true});
}

TEST_CASE("coinvariants are invariant under the generators") {
  Rng rng(35);
  const int g = 4;
  const CoinvariantResult res = coinvariants(b3_space(g, 1), stabilizer_generators_mod2(g));
  for (int k = 0; k < 50; ++k) {
    const f2::Mod2Matrix s = random_stabilizer_word(rng, g, 8);
    const BooleanPolynomial p = random_poly(rng, g, 3);
    CHECK(res.same_class(sp2_action(s, p), p));
  }
}

TEST_CASE("coinvariants reject generators that move B_g") {
  const int g = 3;
  std::vector<f2::Mod2Matrix> gens = stabilizer_generators_mod2(g);
  gens.push_back(off_stabilizer_generator_mod2(g));
  CHECK(kind_of([&] { coinvariants(b3_space(g, 1), gens); }) == ErrorKind::GeneratorNotInStabilizer);
}

TEST_CASE("contraction examples") {
  const int g = 4;
  CHECK(contraction(P(g, "A1*B1*A4")) == 1);
  CHECK(contraction(P(g, "A1*A2*A3")) == 0);
  CHECK(contraction(P(g, "1")) == 0);
  CHECK(contraction(P(g, "A1*B1 + A4")) == 0);
  CHECK(contraction(johnson_mu_reference(g)) == 1);
  CHECK(johnson_mu_reference(g) == P(g, "A1*B1*A4 + A1*B1"));
  CHECK(contraction(P(g, "A2*B2*A4")) == 1);
  CHECK(contraction(P(g, "A2*B2*B4")) == 0);
  CHECK(contraction(P(g, "A1*B1*A4 + A2*B2*A4")) == 0);
}

TEST_CASE("contraction is invariant under the stabilizer") {
  for (int g = 2; g <= 5; ++g) {
    const auto basis = MonomialBasis::get(g);
    for (const auto& s : stabilizer_generators_mod2(g)) {
      for (std::size_t i = 0; i < basis->size(); ++i) {
        if (std::popcount(basis->mask(i)) != 3) continue;
        const BooleanPolynomial v = BooleanPolynomial::monomial(g, basis->mask(i));
        CHECK(contraction(sp2_action(s, v)) == contraction(v));
      }
    }
  }
}

TEST_CASE("contraction on alpha * B^1 vanishes exactly for odd genus") {
  for (int g = 2; g <= 6; ++g) {
    bool all_zero = true;
    for (int x = 0; x < 2 * g; ++x) {
      all_zero = all_zero && contraction(bp_mul(omega_polynomial(g), BooleanPolynomial::variable(g, x))) == 0;
    }
    CHECK(all_zero == (g % 2 == 1));
  }
}
