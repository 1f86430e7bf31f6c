// theta-lab: batch verification reports for the thetalab library.

#include <chrono>
#include <cstdlib>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "thetalab/checks.hpp"

using namespace thetalab;

namespace {

struct Options {
  std::optional<int> genus;
  int r = 1;
  std::uint64_t seed = 7;
  std::optional<int> samples;
  std::optional<double> tol;
  std::string format = "json";
  int radius_cap = kDefaultRadiusCap;
  bool timing = false;
  std::string characteristic = "0|0";
  std::string tau = "i";
  std::string pair = "a-hat";
};

// "i", "random", or a JSON matrix whose entries are numbers or [re, im].
SiegelPoint parse_tau(const std::string& text, int g, std::uint64_t seed) {
  if (text == "i") return SiegelPoint::scalar_i(g);
  if (text == "random") {
    Rng rng(seed);
    return sample_siegel(rng, g);
  }
  const Json j = Json::parse(text);
  if (!j.is_array() || static_cast<int>(j.size()) != g) {
    throw std::invalid_argument("--tau must be a " + std::to_string(g) + "x" + std::to_string(g) + " matrix");
  }
  Eigen::MatrixXcd t(g, g);
  for (int a = 0; a < g; ++a) {
    if (!j[a].is_array() || static_cast<int>(j[a].size()) != g) throw std::invalid_argument("--tau row size mismatch");
    for (int b = 0; b < g; ++b) {
      const Json& e = j[a][b];
      t(a, b) = e.is_array() ? std::complex<double>(e.at(0).get<double>(), e.at(1).get<double>())
                             : std::complex<double>(e.get<double>(), 0.0);
    }
  }
  return SiegelPoint(t);
}

ThetaOptions theta_options(const Options& o) {
  ThetaOptions opt;
  opt.radius_cap = o.radius_cap;
  if (o.tol) opt.residual_tol = *o.tol;
  return opt;
}

int thread_count() {
  if (const char* env = std::getenv("THETA_LAB_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

template <class F>
Report timed(F&& f, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  Report r = f();
  if (timing) r.duration_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

int emit(const std::vector<Report>& reports, const Options& o, const Json* wrapper) {
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (o.format == "csv") {
    std::cout << to_csv(reports);
  } else if (wrapper) {
    std::cout << wrapper->dump(2) << "\n";
  } else {
    std::cout << reports.front().to_json().dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

int run_all(const Options& o) {
  const auto criteria = acceptance_criteria(o.seed);
  const int threads = thread_count();
  std::vector<Report> reports(criteria.size());
  std::vector<double> seconds(criteria.size());
  for (std::size_t start = 0; start < criteria.size(); start += threads) {
    std::vector<std::future<void>> batch;
    for (std::size_t k = start; k < std::min(criteria.size(), start + threads); ++k) {
      batch.push_back(std::async(std::launch::async, [&, k] {
        const auto t0 = std::chrono::steady_clock::now();
        reports[k] = criteria[k].run();
        seconds[k] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      }));
    }
    for (auto& f : batch) f.get();
  }
  Json wrapper;
  wrapper["schema"] = "1";
  wrapper["command"] = "all";
  bool ok = true;
  Json arr = Json::array();
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    ok = ok && reports[k].passed();
    Json entry;
    entry["criterion"] = criteria[k].id;
    entry["title"] = criteria[k].title;
    if (o.timing) {
      reports[k].duration_s = seconds[k];
      entry["time_limit_s"] = criteria[k].time_limit_s;
    }
    entry["report"] = reports[k].to_json();
    arr.push_back(std::move(entry));
  }
  wrapper["status"] = ok ? "pass" : "fail";
  wrapper["reports"] = std::move(arr);
  return emit(reports, o, &wrapper);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric checks for symplectic level subgroups, boolean-polynomial coinvariants and theta "
               "multipliers"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--genus", o.genus, "Genus (default 4 for algebraic checks, 2 for theta numerics)")
      ->check(CLI::Range(1, 16));
  app.add_option("--r", o.r, "Boundary components for coinvariants (0 or 1)")->check(CLI::Range(0, 1));
  app.add_option("--seed", o.seed, "Seed for all random choices");
  app.add_option("--samples", o.samples, "Number of random words, triples or pairs");
  app.add_option("--tol", o.tol, "Tolerance: tail/vanishing bound for theta values, snapping residual for multipliers");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--radius-cap", o.radius_cap, "Largest theta truncation radius")->check(CLI::Range(1, 200));
  app.add_flag("--timing", o.timing, "Include wall-clock durations in the report");

  auto* verify = app.add_subcommand("verify", "Run one verification suite");
  verify->require_subcommand(1);
  verify->fallthrough();
  auto* v_psi = verify->add_subcommand("psi", "Psi homomorphism and subgroup closure on random words");
  auto* v_gen = verify->add_subcommand("generators", "Igusa generators are symplectic and level 2");
  auto* v_fac = verify->add_subcommand("factorizations", "Generator factorizations into transvections");
  auto* v_chain = verify->add_subcommand("chain", "Chain relation on homology");
  auto* v_theta = verify->add_subcommand("theta-laws", "Odd vanishing, shift law, reference value");
  auto* v_con = verify->add_subcommand("contraction", "Contraction invariance under the stabilizer");
  auto* coinv = app.add_subcommand("coinvariants", "Coinvariants of B^3 under the stabilizer of B_g mod 2");
  auto* orbit = app.add_subcommand("orbit", "Orbit of B_g mod 2");
  auto* theta = app.add_subcommand("theta", "Theta constants");
  theta->require_subcommand(1);
  theta->fallthrough();
  auto* t_eval = theta->add_subcommand("eval", "Evaluate one theta constant");
  t_eval->add_option("--char", o.characteristic, "Characteristic, e.g. \"0,0|0,1\"");
  t_eval->add_option("--tau", o.tau, "\"i\", \"random\" or a JSON matrix of numbers or [re, im] pairs");
  auto* mult = app.add_subcommand("multiplier", "Theta multipliers on generators and random words");
  auto* dsign = app.add_subcommand("d-sign", "Combinatorial sign d against the Phi ratio");
  auto* ehom = app.add_subcommand("e-hom", "The Z/4-valued invariant e on compatible pairs");
  ehom->add_option("--pair", o.pair, "Pair to evaluate")
      ->check(CLI::IsMember({"a-hat", "deck", "identity", "random", "all"}));
  auto* all = app.add_subcommand("all", "Run the full acceptance suite");
  for (auto* sc : {v_psi, v_gen, v_fac, v_chain, v_theta, v_con, coinv, orbit, t_eval, mult, dsign, ehom, all}) {
    sc->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto single = [&](int default_genus) { return std::vector<int>{o.genus.value_or(default_genus)}; };
  try {
    std::vector<Report> out;
    if (v_psi->parsed()) {
      out.push_back(timed([&] { return check_psi(single(4), o.samples.value_or(10000), o.seed); }, o.timing));
    } else if (v_gen->parsed()) {
      const auto genera = o.genus ? single(4) : std::vector<int>{2, 3, 4, 5};
      out.push_back(timed([&] { return check_generators(genera); }, o.timing));
    } else if (v_fac->parsed()) {
      out.push_back(timed([&] { return check_factorizations(single(4)); }, o.timing));
    } else if (v_chain->parsed()) {
      out.push_back(timed([&] { return check_chain(single(4), o.samples.value_or(100), o.seed); }, o.timing));
    } else if (v_theta->parsed()) {
      out.push_back(timed([&] { return check_theta_laws(single(2), o.tol.value_or(1e-10), o.seed, o.radius_cap); },
                          o.timing));
    } else if (v_con->parsed()) {
      out.push_back(timed([&] { return check_contraction(single(4)); }, o.timing));
    } else if (coinv->parsed()) {
      out.push_back(timed([&] { return check_coinvariants({{o.genus.value_or(4), o.r}}); }, o.timing));
    } else if (orbit->parsed()) {
      out.push_back(timed([&] { return check_orbit(single(4)); }, o.timing));
    } else if (t_eval->parsed()) {
      const Characteristic m = Characteristic::parse(o.characteristic);
      if (o.genus && *o.genus != m.genus()) throw std::invalid_argument("--genus disagrees with --char");
      const SiegelPoint tau = parse_tau(o.tau, m.genus(), o.seed);
      out.push_back(timed([&] { return theta_eval_report(m, tau, o.tol.value_or(kDefaultThetaTol), o.radius_cap); },
                          o.timing));
    } else if (mult->parsed()) {
      out.push_back(timed(
          [&] { return check_multipliers(o.genus.value_or(2), o.samples.value_or(100), o.seed, theta_options(o)); },
          o.timing));
    } else if (dsign->parsed()) {
      out.push_back(timed([&] { return check_d_sign(single(2), o.samples.value_or(50), 5, o.seed, theta_options(o)); },
                          o.timing));
    } else if (ehom->parsed()) {
      out.push_back(timed(
          [&] { return check_e_hom(single(2), o.pair, o.samples.value_or(20), o.seed, theta_options(o)); },
          o.timing));
    } else if (all->parsed()) {
      return run_all(o);
    }
    return emit(out, o, nullptr);
  } catch (const Error& e) {
    std::cerr << "theta-lab: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "theta-lab: " << e.what() << "\n";
    return 2;
  }
}
