#include "doctest.h"
#include "thetalab/symplectic.hpp"
#include "thetalab/words.hpp"

#include <cmath>
#include <numbers>

using namespace thetalab;

namespace {

// I + sum of k * e_{ij}, 1-based.
struct Entry {
  int i, j;
  long k;
};
IntMatrix elementary(int n, std::initializer_list<Entry> entries) {
  IntMatrix m = IntMatrix::identity(n);
  for (const auto& e : entries) m(e.i - 1, e.j - 1) += e.k;
  return m;
}

Eigen::MatrixXcd random_tau_matrix(Rng& rng, int g) {
  return sample_siegel(rng, g).tau();
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::NotSymplectic;
}

}  // namespace

TEST_CASE("validate_symplectic examples") {
  for (int g = 1; g <= 4; ++g) {
    CHECK_NOTHROW(validate_symplectic(IntMatrix::identity(2 * g)));
    CHECK_NOTHROW(validate_symplectic(symplectic_form(g)));
  }
  CHECK(kind_of([] { validate_symplectic(IntMatrix{{2, 0}, {0, 1}}); }) == ErrorKind::NotSymplectic);
  CHECK(kind_of([] { validate_symplectic(IntMatrix::identity(3)); }) == ErrorKind::OddDimension);
  CHECK(kind_of([] { validate_symplectic(IntMatrix(2, 4)); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("symplectic_form is (0 I; -I 0)") {
  const IntMatrix j = symplectic_form(2);
  CHECK(j == IntMatrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}});
}

TEST_CASE("igusa_generator examples") {
  for (int g = 1; g <= 4; ++g) {
    const int n = 2 * g;
    CHECK(igusa_generator(IgusaKind::Beta, g, g, g).entries() == elementary(n, {{g, 2 * g, 2}}));
    CHECK(igusa_generator(IgusaKind::Gamma, g, g, g).entries() == elementary(n, {{2 * g, g, 2}}));
  }
  CHECK(igusa_generator(IgusaKind::Alpha, 1, 2, 2).entries() == elementary(4, {{1, 2, 2}, {4, 3, -2}}));
  CHECK(igusa_generator(IgusaKind::Alpha, 2, 2, 2).entries() == elementary(4, {{2, 2, -2}, {4, 4, -2}}));
  CHECK(igusa_generator(IgusaKind::Beta, 1, 2, 3).entries() == elementary(6, {{1, 5, 2}, {2, 4, 2}}));
  CHECK(igusa_generator(IgusaKind::Gamma, 1, 2, 3).entries() == elementary(6, {{5, 1, 2}, {4, 2, 2}}));

  CHECK(kind_of([] { igusa_generator(IgusaKind::Beta, 2, 1, 2); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { igusa_generator(IgusaKind::Alpha, 0, 1, 2); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { igusa_generator(IgusaKind::Gamma, 1, 3, 2); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("every Igusa generator is symplectic and congruent to I mod 2") {
  for (int g = 1; g <= 5; ++g) {
    const auto gens = igusa_generators(g);
    // g^2 alphas, and g(g+1)/2 each of betas and gammas
    CHECK(gens.size() == static_cast<std::size_t>(g * g + g * (g + 1)));
    for (const auto& gen : gens) {
      CHECK_NOTHROW(validate_symplectic(gen.matrix.entries()));
      CHECK(in_level(gen.matrix, 2));
      CHECK_FALSE(in_level(gen.matrix, 4));
    }
  }
}

TEST_CASE("in_level examples") {
  for (int d : {1, 2, 3, 8}) CHECK(in_level(SymplecticMatrix::identity(3), d));
  const auto b11 = igusa_generator(IgusaKind::Beta, 1, 1, 3);
  CHECK(in_level(b11, 2));
  CHECK_FALSE(in_level(b11, 4));
  CHECK(in_level(b11.pow(2), 4));
}

TEST_CASE("in_gamma_p2 examples") {
  for (int g = 1; g <= 4; ++g) {
    CHECK(in_gamma_p2(SymplecticMatrix::identity(g)));
    CHECK(in_gamma_p2(igusa_generator(IgusaKind::Beta, g, g, g)));
    // A_g -> B_g, B_g -> -A_g
    IntMatrix m = IntMatrix::identity(2 * g);
    m(g - 1, g - 1) = 0;
    m(2 * g - 1, 2 * g - 1) = 0;
    m(2 * g - 1, g - 1) = 1;
    m(g - 1, 2 * g - 1) = -1;
    CHECK_FALSE(in_gamma_p2(validate_symplectic(m)));
  }
}

TEST_CASE("psi examples") {
  for (int g = 1; g <= 4; ++g) {
    const auto b = igusa_generator(IgusaKind::Beta, g, g, g);
    CHECK(psi(SymplecticMatrix::identity(g)) == 0);
    CHECK(psi(b) == 1);
    CHECK((b * b).entries() == elementary(2 * g, {{g, 2 * g, 4}}));
    CHECK(psi(b * b) == 0);
    CHECK(psi(b.inverse()) == 1);
  }
  IntMatrix m = IntMatrix::identity(2);
  m(0, 0) = 0;
  m(1, 1) = 0;
  m(1, 0) = 1;
  m(0, 1) = -1;
  const SymplecticMatrix swap = validate_symplectic(m);
  CHECK(kind_of([&] { psi(swap); }) == ErrorKind::NotInSubgroup);
}

TEST_CASE("group closure on random words") {
  Rng rng(21);
  for (int g = 2; g <= 5; ++g) {
    const auto gens = sp_generators(g);
    for (int k = 0; k < 200; ++k) {
      const SymplecticMatrix a = random_word(rng, gens);
      const SymplecticMatrix b = random_word(rng, gens);
      CHECK_NOTHROW(validate_symplectic((a * b).entries()));
      CHECK_NOTHROW(validate_symplectic(a.inverse().entries()));
      CHECK((a * a.inverse()).entries().is_identity());
      CHECK(a.transpose().entries() == a.entries().transpose());
      CHECK(a.pow(-2) == a.inverse() * a.inverse());
    }
  }
}

TEST_CASE("membership closure and psi additivity on Gamma(p2) words") {
  Rng rng(22);
  for (int g = 2; g <= 5; ++g) {
    const auto gens = gamma_p2_generators(g);
    const auto level2 = igusa_generators(g);
    for (int k = 0; k < 300; ++k) {
      const SymplecticMatrix a = random_word(rng, gens);
      const SymplecticMatrix b = random_word(rng, gens);
      REQUIRE(in_gamma_p2(a));
      REQUIRE(in_gamma_p2(b));
      const SymplecticMatrix ab = a * b;
      CHECK(in_gamma_p2(ab));
      CHECK(in_gamma_p2(a.inverse()));
      CHECK(psi(ab) == (psi(a) + psi(b)) % 2);
      const int n = g - 1, c = 2 * g - 1;
      CHECK(mod(ab(n, c) - a(n, c) - b(n, c), 4) == 0);

      const SymplecticMatrix l1 = random_word(rng, level2, 1, 5);
      const SymplecticMatrix l2 = random_word(rng, level2, 1, 5);
      CHECK(in_level(l1 * l2, 2));
      CHECK(in_level(l1.inverse(), 2));
    }
  }
}

TEST_CASE("Characteristic parsing, parity and reduction") {
  const Characteristic m = Characteristic::parse("1,0|1,3");
  CHECK(m.genus() == 2);
  CHECK(m.to_string() == "1,0|1,3");
  CHECK(m.parity() == 1);
  CHECK_FALSE(m.is_reduced());
  CHECK(m.mod2() == Characteristic::parse("1,0|1,1"));
  CHECK(Characteristic::parse("-1|1").mod2() == Characteristic::parse("1|1"));
  CHECK(m + m.scaled(-1) == Characteristic::parse("0,0|0,0"));
  CHECK(Characteristic::from_parts({1, 0}, {1, 3}) == m);
  for (int g = 1; g <= 4; ++g) {
    const std::size_t even = reduced_characteristics(g, 0).size();
    const std::size_t odd = reduced_characteristics(g, 1).size();
    CHECK(even == (std::size_t{1} << (g - 1)) * ((std::size_t{1} << g) + 1));
    CHECK(odd == (std::size_t{1} << (g - 1)) * ((std::size_t{1} << g) - 1));
  }
}

TEST_CASE("char_apply examples") {
  const Characteristic m = Characteristic::parse("0,1|1,0");
  CHECK(char_apply(SymplecticMatrix::identity(2), m) == m);
  const auto gamma22 = igusa_generator(IgusaKind::Gamma, 2, 2, 2);
  CHECK(char_apply(gamma22, Characteristic::parse("0,0|0,1")) == Characteristic::parse("0,0|0,3"));
  // J at g = 1 swaps (m' | m'') to (-m'' | m') up to the diagonal correction
  const SymplecticMatrix j = SymplecticMatrix(symplectic_form(1));
  CHECK(char_apply(j, Characteristic::parse("1|0")) == Characteristic::parse("0|1"));
  CHECK(kind_of([&] { char_apply(gamma22, Characteristic::parse("0|0")); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("char_apply parity and mod-2 dependence") {
  Rng rng(23);
  for (int g = 1; g <= 4; ++g) {
    const auto gens = sp_generators(g);
    const auto level2 = igusa_generators(g);
    for (int k = 0; k < 100; ++k) {
      const SymplecticMatrix s = random_word(rng, gens, 1, 10);
      std::vector<BigInt> v(2 * g), w(2 * g);
      for (auto& x : v) x = rng.uniform_int(-3, 3);
      for (auto& x : w) x = rng.uniform_int(-3, 3);
      const Characteristic m(g, v);
      const Characteristic image = char_apply(s, m);
      CHECK(image.parity() == m.parity());
      // m + 2w and a level-2 perturbation of s give the same class mod 2
      const Characteristic shifted = m + Characteristic(g, w).scaled(2);
      const SymplecticMatrix s2 = s * random_word(rng, level2, 1, 4);
      CHECK(char_apply(s2, shifted).mod2() == image.mod2());
      const Characteristic diff = char_apply(s, shifted) + image.scaled(-1);
      for (const auto& e : diff.entries()) CHECK(mod2(e) == 0);
    }
  }
}

TEST_CASE("siegel_apply examples") {
  Rng rng(24);
  for (int g = 1; g <= 3; ++g) {
    const SiegelPoint tau(random_tau_matrix(rng, g));
    const SiegelPoint same = siegel_apply(SymplecticMatrix::identity(g), tau);
    CHECK((same.tau() - tau.tau()).norm() < 1e-14);
  }
  // (alpha=0, beta=-1; gamma=1, delta=0) sends tau to -1/tau
  const SymplecticMatrix s = validate_symplectic(IntMatrix{{0, -1}, {1, 0}});
  const SiegelPoint i1 = siegel_apply(s, SiegelPoint::scalar_i(1));
  CHECK(std::abs(i1.tau()(0, 0) - std::complex<double>(0, 1)) < 1e-14);
  Eigen::MatrixXcd t(1, 1);
  t(0, 0) = {0.3, 1.7};
  const SiegelPoint moved = siegel_apply(s, SiegelPoint(t));
  CHECK(std::abs(moved.tau()(0, 0) - (-1.0 / t(0, 0))) < 1e-14);
}

TEST_CASE("SiegelPoint validation") {
  Eigen::MatrixXcd asym(2, 2);
  asym << std::complex<double>(0, 1), 0.5, 0.0, std::complex<double>(0, 1);
  CHECK(kind_of([&] { SiegelPoint p(asym); }) == ErrorKind::NotSiegel);
  Eigen::MatrixXcd indefinite(2, 2);
  indefinite << std::complex<double>(0, 1), 0.0, 0.0, std::complex<double>(0, -1);
  CHECK(kind_of([&] { SiegelPoint p(indefinite); }) == ErrorKind::NotSiegel);
  CHECK(SiegelPoint::scalar_i(3).lambda_min() == doctest::Approx(1.0));
}

TEST_CASE("siegel_apply lands in the upper half space and satisfies the cocycle law") {
  Rng rng(25);
  for (int g = 1; g <= 3; ++g) {
    const auto gens = sp_generators(g);
    for (int k = 0; k < 60; ++k) {
      const SymplecticMatrix s1 = random_word(rng, gens, 1, 8);
      const SymplecticMatrix s2 = random_word(rng, gens, 1, 8);
      const SiegelPoint tau(random_tau_matrix(rng, g));
      const SiegelPoint t2 = siegel_apply(s2, tau);
      CHECK(t2.lambda_min() > 0.0);
      const std::complex<double> lhs = cocycle_det(s2, tau) * cocycle_det(s1, t2);
      const std::complex<double> rhs = cocycle_det(s1 * s2, tau);
      CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max(1.0, std::abs(rhs)));
      const SiegelPoint composed = siegel_apply(s1, t2);
      const SiegelPoint direct = siegel_apply(s1 * s2, tau);
      CHECK((composed.tau() - direct.tau()).norm() <= 1e-8 * std::max(1.0, direct.tau().norm()));
    }
  }
}

TEST_CASE("RootOfUnity arithmetic and snapping") {
  const RootOfUnity i(2);
  CHECK(i.order() == 4);
  CHECK((i * i) == RootOfUnity(4));
  CHECK(i.inverse() == RootOfUnity(6));
  CHECK(RootOfUnity(-1) == RootOfUnity(7));
  CHECK(RootOfUnity(1).order() == 8);
  CHECK(RootOfUnity(4).order() == 2);
  CHECK(RootOfUnity(0).order() == 1);
  CHECK(i.pow(3) == RootOfUnity(6));
  CHECK(i.to_string() == "i");
  CHECK(RootOfUnity(6).to_string() == "-i");
  for (int k = 0; k < 8; ++k) {
    const std::complex<double> z = std::polar(1.0, std::numbers::pi * k / 4.0);
    CHECK(std::abs(RootOfUnity(k).value() - z) < 1e-15);
    const SnappedRoot s = snap_root(z * 1.001);
    CHECK(s.root == RootOfUnity(k));
    CHECK(s.residual == doctest::Approx(0.001).epsilon(1e-6));
  }
}

TEST_CASE("orbit_index") {
  CHECK(orbit_index(1).orbit_size == 3);
  CHECK(orbit_index(2).orbit_size == 15);
  CHECK(orbit_index(3).orbit_size == 63);
  for (int g = 1; g <= 6; ++g) {
    const OrbitReport r = orbit_index(g);
    CHECK(r.orbit_size == (std::uint64_t{1} << (2 * g)) - 1);
    CHECK(r.expected == r.orbit_size);
    CHECK(r.stabilizer_fixes_bg);
  }
  CHECK(kind_of([] { orbit_index(9); }) == ErrorKind::GenusTooLarge);
}

TEST_CASE("stabilizer generators are symplectic mod 2 and fix B_g") {
  for (int g = 1; g <= 6; ++g) {
    for (const auto& m : stabilizer_generators_mod2(g)) {
      CHECK(f2::is_symplectic(g, m));
      CHECK(fixes_bg_mod2(g, m));
    }
    const auto off = off_stabilizer_generator_mod2(g);
    CHECK(f2::is_symplectic(g, off));
    CHECK_FALSE(fixes_bg_mod2(g, off));
  }
  // v -> v + (x.v) x with x = A1 sends B1 to B1 + A1
  const f2::Mod2Matrix t = transvection_mod2(2, 0b0001);
  CHECK(t.apply(0b0100) == 0b0101);
  CHECK(t.apply(0b0010) == 0b0010);
}
