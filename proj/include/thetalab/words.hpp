#pragma once

// Generator lists and seeded random words used by the randomized checks.

#include <vector>

#include "thetalab/homology.hpp"
#include "thetalab/rng.hpp"
#include "thetalab/symplectic.hpp"
#include "thetalab/theta.hpp"

namespace thetalab {

// Transvections T(x, 1) for x in {A_i, B_i, B_i - B_{i+1}}; these generate Sp(2g; Z).
std::vector<LabeledMatrix> sp_generators(int g);

// Igusa's list together with T(x, 1) for x supported away from A_g and B_g,
// and T(B_g, 1).  Every entry lies in Gamma_g(p2).
std::vector<LabeledMatrix> gamma_p2_generators(int g);

// Uniform length in [min_len, max_len]; each letter is a random generator or
// its inverse.
SymplecticMatrix random_word(Rng& rng, const std::vector<LabeledMatrix>& gens, int min_len = 1, int max_len = 30);

// Same distribution as random_word.  Letters are applied through their
// sparse part (letter - I).
class WordSampler {
 public:
  explicit WordSampler(const std::vector<LabeledMatrix>& gens);
  SymplecticMatrix sample(Rng& rng, int min_len = 1, int max_len = 30) const;

 private:
  struct Entry {
    int row, col;
    BigInt value;
  };
  int g_;
  // Index 2k is generator k, 2k + 1 its inverse.
  std::vector<std::vector<Entry>> deltas_;
};

struct LabeledPair {
  std::string label;
  CompatiblePair pair;
};

// Pairs that lift symmetric mapping classes: (T(pi x, +-1), T(x, +-1)) for x
// on the genus g-1 subsurface, the a-hat pair and the deck pair.
std::vector<LabeledPair> pair_generators(int g);

// A larger generating set of pairs (sigma_t, sigma) with sigma in Gamma(p2)
// and sigma_t = pi(sigma) mod 2, not all of them lifts of mapping classes:
// pair_generators(g) together with (T(pi x, +-1), T(x, +-1)) for x = y + B_g,
// (I, T(x, 2)) for x in {A_i, B_i, A_i + B_i} and (T(y, 2), I).
std::vector<LabeledPair> compatible_pair_generators(int g);

CompatiblePair random_pair(Rng& rng, const std::vector<LabeledPair>& gens, int min_len = 1, int max_len = 3);

// Random (x1, x2, x3) with x1.x2 = x2.x3 = +-1 and x1.x3 = 0, obtained by
// moving a standard chain with a random symplectic word.
struct ChainTriple {
  HomologyClass x1, x2, x3;
};
ChainTriple random_chain(Rng& rng, int g);

// Drops the A_g and B_g coordinates.
HomologyClass prym_projection(const HomologyClass& x);

}  // namespace thetalab
