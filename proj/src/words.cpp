#include "thetalab/words.hpp"

namespace thetalab {

namespace {

std::vector<HomologyClass> subsurface_classes(int g) {
  std::vector<HomologyClass> out;
  for (int i = 1; i < g; ++i) {
    out.push_back(HomologyClass::a(g, i));
    out.push_back(HomologyClass::b(g, i));
    for (int j = 1; j < g; ++j) {
      if (j > i) {
        out.push_back(HomologyClass::a(g, i) + HomologyClass::a(g, j));
        out.push_back(HomologyClass::b(g, i) + HomologyClass::b(g, j));
      }
      out.push_back(HomologyClass::a(g, i) + HomologyClass::b(g, j));
    }
  }
  return out;
}

}  // namespace

std::vector<LabeledMatrix> sp_generators(int g) {
  std::vector<LabeledMatrix> out;
  for (int i = 1; i <= g; ++i) {
    const HomologyClass a = HomologyClass::a(g, i);
    const HomologyClass b = HomologyClass::b(g, i);
    out.push_back({"T(" + a.to_string() + ")", transvection(a, 1)});
    out.push_back({"T(" + b.to_string() + ")", transvection(b, 1)});
    if (i < g) {
      const HomologyClass c = b - HomologyClass::b(g, i + 1);
      out.push_back({"T(" + c.to_string() + ")", transvection(c, 1)});
    }
  }
  return out;
}

std::vector<LabeledMatrix> gamma_p2_generators(int g) {
  std::vector<LabeledMatrix> out = igusa_generators(g);
  for (const auto& x : subsurface_classes(g)) out.push_back({"T(" + x.to_string() + ")", transvection(x, 1)});
  const HomologyClass bg = HomologyClass::b(g, g);
  out.push_back({"T(" + bg.to_string() + ")", transvection(bg, 1)});
  return out;
}

SymplecticMatrix random_word(Rng& rng, const std::vector<LabeledMatrix>& gens, int min_len, int max_len) {
  return WordSampler(gens).sample(rng, min_len, max_len);
}

WordSampler::WordSampler(const std::vector<LabeledMatrix>& gens) : g_(gens.front().matrix.genus()) {
  auto sparse = [](const SymplecticMatrix& m) {
    std::vector<Entry> out;
    for (int i = 0; i < m.dim(); ++i) {
      for (int j = 0; j < m.dim(); ++j) {
        const BigInt v = m(i, j) - (i == j ? 1 : 0);
        if (v != 0) out.push_back({i, j, v});
      }
    }
    return out;
  };
  for (const auto& gen : gens) {
    deltas_.push_back(sparse(gen.matrix));
    deltas_.push_back(sparse(gen.matrix.inverse()));
  }
}

SymplecticMatrix WordSampler::sample(Rng& rng, int min_len, int max_len) const {
  const int n = 2 * g_;
  IntMatrix w = IntMatrix::identity(n);
  const long len = rng.uniform_int(min_len, max_len);
  const long count = static_cast<long>(deltas_.size() / 2);
  for (long k = 0; k < len; ++k) {
    const long gen = rng.uniform_int(0, count - 1);
    const auto& delta = deltas_[static_cast<std::size_t>(2 * gen + (rng.coin() ? 0 : 1))];
    // w (I + E) = w + w E
    IntMatrix add(n, n);
    for (const auto& e : delta) {
      for (int i = 0; i < n; ++i) add(i, e.col) += w(i, e.row) * e.value;
    }
    w = w + add;
  }
  return SymplecticMatrix(std::move(w));
}

HomologyClass prym_projection(const HomologyClass& x) {
  const int g = x.genus();
  std::vector<BigInt> c;
  for (int k : prym_indices(g)) c.push_back(x[k]);
  return HomologyClass(g - 1, std::move(c));
}

std::vector<LabeledPair> pair_generators(int g) {
  std::vector<LabeledPair> out;
  for (const auto& x : subsurface_classes(g)) {
    for (int k : {1, -1}) {
      out.push_back({"T(" + x.to_string() + ")^" + std::to_string(k),
                     CompatiblePair(transvection(prym_projection(x), k), transvection(x, k))});
    }
  }
  out.push_back({"a-hat", CompatiblePair::a_hat(g)});
  out.push_back({"deck", CompatiblePair::deck(g)});
  return out;
}

std::vector<LabeledPair> compatible_pair_generators(int g) {
  std::vector<LabeledPair> out = pair_generators(g);
  const int h = g - 1;
  const HomologyClass bg = HomologyClass::b(g, g);
  for (const auto& y : subsurface_classes(g)) {
    const HomologyClass x = y + bg;
    for (int k : {1, -1}) {
      out.push_back({"T(" + x.to_string() + ")^" + std::to_string(k),
                     CompatiblePair(transvection(prym_projection(x), k), transvection(x, k))});
    }
  }
  for (int i = 1; i <= g; ++i) {
    for (const auto& x : {HomologyClass::a(g, i), HomologyClass::b(g, i), HomologyClass::a(g, i) + HomologyClass::b(g, i)}) {
      out.push_back({"(I, T(" + x.to_string() + ")^2)",
                     CompatiblePair(SymplecticMatrix::identity(h), transvection(x, 2))});
    }
  }
  for (int i = 1; i <= h; ++i) {
    for (const auto& y : {HomologyClass::a(h, i), HomologyClass::b(h, i)}) {
      out.push_back({"(T(" + y.to_string() + ")^2, I)",
                     CompatiblePair(transvection(y, 2), SymplecticMatrix::identity(g))});
    }
  }
  return out;
}

CompatiblePair random_pair(Rng& rng, const std::vector<LabeledPair>& gens, int min_len, int max_len) {
  CompatiblePair p = CompatiblePair::identity(gens.front().pair.genus());
  const long len = rng.uniform_int(min_len, max_len);
  for (long k = 0; k < len; ++k) {
    p = p * gens[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(gens.size()) - 1))].pair;
  }
  return p;
}

ChainTriple random_chain(Rng& rng, int g) {
  const SymplecticMatrix s = random_word(rng, sp_generators(g), 1, 30);
  const HomologyClass x1 = HomologyClass::a(g, 1);
  const HomologyClass x2 = HomologyClass::b(g, 1);
  const HomologyClass x3 = HomologyClass::a(g, 1) + HomologyClass::a(g, 2);
  auto sgn = [&rng]() { return rng.coin() ? 1 : -1; };
  return {apply(s, x1).scaled(sgn()), apply(s, x2).scaled(sgn()), apply(s, x3).scaled(sgn())};
}

}  // namespace thetalab
