#include "doctest.h"
#include "thetalab/words.hpp"

#include <set>

using namespace thetalab;

TEST_CASE("generator lists") {
  for (int g = 1; g <= 5; ++g) {
    const auto sp = sp_generators(g);
    CHECK(sp.size() == static_cast<std::size_t>(3 * g - 1));
    for (const auto& gen : sp) CHECK_NOTHROW(validate_symplectic(gen.matrix.entries()));
    for (const auto& gen : gamma_p2_generators(g)) {
      CAPTURE(gen.label);
      CHECK(in_gamma_p2(gen.matrix));
    }
  }
  // T(B_g) lies in Gamma(p2) and has psi = 0; beta_gg has psi = 1
  bool has_psi_one = false;
  for (const auto& gen : gamma_p2_generators(3)) has_psi_one = has_psi_one || psi(gen.matrix) == 1;
  CHECK(has_psi_one);
}

TEST_CASE("WordSampler reproduces the naive product of the same letters") {
  for (int g = 1; g <= 4; ++g) {
    const auto gens = sp_generators(g);
    const WordSampler sampler(gens);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      Rng a(seed), b(seed);
      const SymplecticMatrix fast = sampler.sample(a, 1, 30);
      SymplecticMatrix slow = SymplecticMatrix::identity(g);
      const long len = b.uniform_int(1, 30);
      for (long k = 0; k < len; ++k) {
        const auto& m = gens[static_cast<std::size_t>(b.uniform_int(0, static_cast<long>(gens.size()) - 1))].matrix;
        slow = slow * (b.coin() ? m : m.inverse());
      }
      CHECK(fast == slow);
      CHECK(a.next() == b.next());
    }
  }
}

TEST_CASE("random_word is seeded and spans the length range") {
  const auto gens = sp_generators(3);
  Rng a(99), b(99);
  for (int k = 0; k < 20; ++k) CHECK(random_word(a, gens) == random_word(b, gens));
  Rng c(1);
  std::set<std::string> seen;
  for (int k = 0; k < 400; ++k) seen.insert(random_word(c, gens, 1, 1).to_string());
  // 8 generators and their inverses, all distinct
  CHECK(seen.size() == 16);
}

TEST_CASE("pair generators are compatible and genuine lists are nested") {
  for (int g = 2; g <= 4; ++g) {
    const auto genuine = pair_generators(g);
    const auto all = compatible_pair_generators(g);
    CHECK(all.size() > genuine.size());
    for (std::size_t k = 0; k < genuine.size(); ++k) CHECK(all[k].label == genuine[k].label);
    for (const auto& p : all) {
      CAPTURE(p.label);
      CHECK(pair_compatible(p.pair.tilde(), p.pair.full()));
    }
    Rng rng(static_cast<std::uint64_t>(g));
    for (int k = 0; k < 20; ++k) {
      const CompatiblePair p = random_pair(rng, all, 1, 10);
      CHECK(pair_compatible(p.tilde(), p.full()));
    }
  }
}

TEST_CASE("random_chain produces chains") {
  Rng rng(7);
  for (int g = 2; g <= 5; ++g) {
    for (int k = 0; k < 30; ++k) {
      const ChainTriple c = random_chain(rng, g);
      CHECK(abs(c.x1.dot(c.x2)) == 1);
      CHECK(abs(c.x2.dot(c.x3)) == 1);
      CHECK(c.x1.dot(c.x3) == 0);
    }
  }
}

TEST_CASE("prym_projection drops A_g and B_g") {
  const int g = 3;
  const HomologyClass x = HomologyClass(g, {1, 2, 3, 4, 5, 6});
  CHECK(prym_projection(x) == HomologyClass(2, {1, 2, 4, 5}));
}
