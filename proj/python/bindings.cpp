// Python bindings: exact operations take and return plain Python ints and
// strings, theta values are complex numbers, and verification routines return
// their reports as JSON text.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "thetalab/boolean_poly.hpp"
#include "thetalab/checks.hpp"
#include "thetalab/homology.hpp"
#include "thetalab/theta.hpp"
#include "thetalab/words.hpp"

namespace py = pybind11;
using namespace thetalab;

namespace {

using PyMatrix = std::vector<std::vector<py::int_>>;

BigInt to_big(const py::int_& v) { return BigInt(py::str(v).cast<std::string>()); }

py::int_ to_py(const BigInt& v) { return py::int_(py::module_::import("builtins").attr("int")(v.get_str())); }

SymplecticMatrix to_matrix(const PyMatrix& rows) {
  const int n = static_cast<int>(rows.size());
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw Error(ErrorKind::DimensionMismatch, "matrix must be square");
    for (int j = 0; j < n; ++j) m(i, j) = to_big(rows[i][j]);
  }
  return validate_symplectic(m);
}

PyMatrix from_matrix(const SymplecticMatrix& s) {
  PyMatrix out(s.dim());
  for (int i = 0; i < s.dim(); ++i) {
    for (int j = 0; j < s.dim(); ++j) out[i].push_back(to_py(s(i, j)));
  }
  return out;
}

SiegelPoint to_tau(const std::vector<std::vector<std::complex<double>>>& rows) {
  const int g = static_cast<int>(rows.size());
  Eigen::MatrixXcd t(g, g);
  for (int i = 0; i < g; ++i) {
    if (static_cast<int>(rows[i].size()) != g) throw Error(ErrorKind::DimensionMismatch, "tau must be square");
    for (int j = 0; j < g; ++j) t(i, j) = rows[i][j];
  }
  return SiegelPoint(t);
}

IgusaKind to_kind(const std::string& s) {
  if (s == "alpha") return IgusaKind::Alpha;
  if (s == "beta") return IgusaKind::Beta;
  if (s == "gamma") return IgusaKind::Gamma;
  throw std::invalid_argument("kind must be alpha, beta or gamma");
}

std::string dump(const Report& r) { return r.to_json().dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Symplectic level subgroups, boolean-polynomial coinvariants and theta multipliers";

  py::register_exception<Error>(m, "ThetaLabError", PyExc_ValueError);

  m.def("validate_symplectic", [](const PyMatrix& rows) { return from_matrix(to_matrix(rows)); }, py::arg("matrix"));
  m.def("igusa_generator",
        [](const std::string& kind, int i, int j, int g) { return from_matrix(igusa_generator(to_kind(kind), i, j, g)); },
        py::arg("kind"), py::arg("i"), py::arg("j"), py::arg("g"));
  m.def("transvection",
        [](const std::vector<py::int_>& x, const py::int_& k) {
          std::vector<BigInt> c;
          for (const auto& v : x) c.push_back(to_big(v));
          const int g = static_cast<int>(c.size()) / 2;
          return from_matrix(transvection(HomologyClass(g, c), to_big(k)));
        },
        py::arg("x"), py::arg("k"));
  m.def("in_level", [](const PyMatrix& rows, const py::int_& d) { return in_level(to_matrix(rows), to_big(d)); },
        py::arg("matrix"), py::arg("d"));
  m.def("in_gamma_p2", [](const PyMatrix& rows) { return in_gamma_p2(to_matrix(rows)); }, py::arg("matrix"));
  m.def("psi", [](const PyMatrix& rows) { return psi(to_matrix(rows)); }, py::arg("matrix"));
  m.def("char_apply",
        [](const PyMatrix& rows, const std::string& c) {
          return char_apply(to_matrix(rows), Characteristic::parse(c)).to_string();
        },
        py::arg("matrix"), py::arg("characteristic"));
  m.def("char_reduce",
        [](const std::string& c) {
          const ReducedCharacteristic r = char_reduce(Characteristic::parse(c));
          return py::make_tuple(r.canonical.to_string(), r.sign);
        },
        py::arg("characteristic"));
  m.def("orbit_index", [](int g) { return orbit_index(g).orbit_size; }, py::arg("g"));

  m.def("bar_of_class", [](int g, std::uint64_t v) { return bar_of_class(g, v).to_string(); }, py::arg("g"),
        py::arg("mask"));
  m.def("bp_mul",
        [](int g, const std::string& p, const std::string& q) {
          return bp_mul(BooleanPolynomial::parse(g, p), BooleanPolynomial::parse(g, q)).to_string();
        },
        py::arg("g"), py::arg("p"), py::arg("q"));
  m.def("contraction", [](int g, const std::string& p) { return contraction(BooleanPolynomial::parse(g, p)); },
        py::arg("g"), py::arg("p"));
  m.def("coinvariants",
        [](int g, int r) {
          const CoinvariantResult res = coinvariants(b3_space(g, r), stabilizer_generators_mod2(g));
          std::vector<std::string> reps;
          for (const auto& p : res.representatives) reps.push_back(p.to_string());
          return py::make_tuple(res.dimension, reps);
        },
        py::arg("g"), py::arg("r"));

  m.def("theta_eval",
        [](const std::string& c, const std::vector<std::vector<std::complex<double>>>& tau, double tol,
           int radius_cap) {
          const ThetaValue v = theta_eval(Characteristic::parse(c), to_tau(tau), tol, radius_cap);
          return py::make_tuple(v.value, v.radius, v.tail_bound);
        },
        py::arg("characteristic"), py::arg("tau"), py::arg("tol") = kDefaultThetaTol,
        py::arg("radius_cap") = kDefaultRadiusCap);
  m.def("e_value",
        [](const std::string& pair, int g, const std::string& mt, std::uint64_t seed) {
          CompatiblePair p = CompatiblePair::identity(g);
          if (pair == "a-hat") {
            p = CompatiblePair::a_hat(g);
          } else if (pair == "deck") {
            p = CompatiblePair::deck(g);
          } else if (pair != "identity") {
            throw std::invalid_argument("pair must be identity, a-hat or deck");
          }
          Rng rng(seed);
          const EValue e = e_value(p, Characteristic::parse(mt), sample_siegel_for(rng, p.tilde(), 5),
                                   sample_siegel_for(rng, p.full(), 5));
          return py::make_tuple(e.root.exponent() / 2, e.residual);
        },
        py::arg("pair"), py::arg("g"), py::arg("m_tilde"), py::arg("seed") = 7);

  m.def("check_psi", [](std::vector<int> genera, int samples, std::uint64_t seed) {
    return dump(check_psi(genera, samples, seed));
  });
  m.def("check_generators", [](std::vector<int> genera) { return dump(check_generators(genera)); });
  m.def("check_factorizations", [](std::vector<int> genera) { return dump(check_factorizations(genera)); });
  m.def("check_chain", [](std::vector<int> genera, int samples, std::uint64_t seed) {
    return dump(check_chain(genera, samples, seed));
  });
  m.def("check_orbit", [](std::vector<int> genera) { return dump(check_orbit(genera)); });
  m.def("check_coinvariants",
        [](std::vector<std::pair<int, int>> cases) { return dump(check_coinvariants(cases)); });
  m.def("check_contraction", [](std::vector<int> genera) { return dump(check_contraction(genera)); });
  m.def("check_theta_laws", [](std::vector<int> genera, double tol, std::uint64_t seed, int radius_cap) {
    return dump(check_theta_laws(genera, tol, seed, radius_cap));
  });
  m.def("check_multipliers", [](int g, int words, std::uint64_t seed) {
    return dump(check_multipliers(g, words, seed, {}));
  });
  m.def("check_d_sign", [](std::vector<int> genera, int pairs, int points, std::uint64_t seed) {
    return dump(check_d_sign(genera, pairs, points, seed, {}));
  });
  m.def("check_e_hom", [](std::vector<int> genera, const std::string& pair, int random_pairs, std::uint64_t seed) {
    return dump(check_e_hom(genera, pair, random_pairs, seed, {}));
  });
  m.def("acceptance_titles", [](std::uint64_t seed) {
    std::vector<std::pair<int, std::string>> out;
    for (const auto& c : acceptance_criteria(seed)) out.emplace_back(c.id, c.title);
    return out;
  }, py::arg("seed") = 7);
  m.def("run_criterion", [](int id, std::uint64_t seed) {
    for (const auto& c : acceptance_criteria(seed)) {
      if (c.id == id) {
        py::gil_scoped_release release;
        return dump(c.run());
      }
    }
    throw std::invalid_argument("no criterion " + std::to_string(id));
  }, py::arg("id"), py::arg("seed") = 7);
}
