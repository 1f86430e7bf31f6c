#pragma once

// Verification routines shared by the command-line tool, the acceptance
// runner and the Python module.  Each returns a Report whose records pass or
// fail individually.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "thetalab/report.hpp"
#include "thetalab/theta.hpp"

namespace thetalab {

Report check_generators(const std::vector<int>& genera);
Report check_psi(const std::vector<int>& genera, int samples, std::uint64_t seed);
Report check_factorizations(const std::vector<int>& genera);
Report check_chain(const std::vector<int>& genera, int samples, std::uint64_t seed);
Report check_orbit(const std::vector<int>& genera);
Report check_coinvariants(const std::vector<std::pair<int, int>>& cases);
Report check_contraction(const std::vector<int>& genera);
Report check_theta_laws(const std::vector<int>& genera, double tol, std::uint64_t seed, int radius_cap);
Report theta_eval_report(const Characteristic& m, const SiegelPoint& tau, double tol, int radius_cap);
// Multipliers for base genus g and Prym genus g - 1.
Report check_multipliers(int g, int words, std::uint64_t seed, const ThetaOptions& opt);
Report check_d_sign(const std::vector<int>& genera, int pairs, int points, std::uint64_t seed,
                    const ThetaOptions& opt);
// pair: "a-hat", "deck", "identity", "random" or "all".
Report check_e_hom(const std::vector<int>& genera, const std::string& pair, int random_pairs, std::uint64_t seed,
                   const ThetaOptions& opt);

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;
  std::function<Report()> run;
};

std::vector<Criterion> acceptance_criteria(std::uint64_t seed = 7);

}  // namespace thetalab
