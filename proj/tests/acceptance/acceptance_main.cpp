// Copyright 2026 The uavalloc Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "uavalloc/aci_solver.hpp"
#include "uavalloc/baselines.hpp"
#include "uavalloc/eig_power.hpp"
#include "uavalloc/harness.hpp"
#include "uavalloc/lap.hpp"
#include "uavalloc/nullaci_solver.hpp"
#include "uavalloc/report_io.hpp"
#include "uavalloc/smoothing.hpp"

using namespace uavalloc;
using namespace uavalloc::testing;

namespace {

namespace fs = std::filesystem;

// Required fraction of random K=3, N=4 slots on which AO reaches the
// exhaustive optimum. First build measured 0.13 (0.53 from the null-ACI
// start), so this criterion currently fails; see README.
constexpr double kAoHitRateFloor = 0.70;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Outcome lap_optimality() {
  const auto t0 = Clock::now();
  Rng rng(1001);
  int cost_mismatch = 0;
  int cover_mismatch = 0;
  for (int t = 0; t < 500; ++t) {
    const int n = 1 + rng.uniform_int(8);
    const int k = 1 + rng.uniform_int(std::min(n, 6));
    const MatrixXd c = random_matrix(rng, n, k, 0.0, 100.0);
    const LapResult r = solve_lap(c);
    const LapResult lc = solve_lap_line_cover(c);
    cost_mismatch += r.total_cost != brute_force_lap(c).cost;
    cover_mismatch += lc.total_cost != r.total_cost || !(lc.assignment == r.assignment);
  }
  const double secs = seconds_since(t0);
  return {cost_mismatch == 0 && cover_mismatch == 0 && secs < 10.0,
          "500 matrices, brute-force mismatches " + std::to_string(cost_mismatch) + ", line-cover mismatches " +
              std::to_string(cover_mismatch) + ", " + fmt("%.2f s", secs)};
}

Outcome nullaci_optimality() {
  const auto t0 = Clock::now();
  Rng rng(1002);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + rng.uniform_int(7);
    const int k = 1 + rng.uniform_int(std::min(n, 5));
    const SlotProblem prob = random_physical_problem(rng, k, n);
    const double a = solve_nullaci_slot(prob).min_weighted();
    const double b = exhaustive_oracle_slot(prob, PowerModel::kNullAci).min_weighted();
    worst = std::max(worst, std::abs(a / b - 1.0));
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-9 && secs < 30.0, "200 instances, max rel. diff " + fmt("%.2e", worst) + ", " +
                                            fmt("%.2f s", secs)};
}

Outcome equal_sinr_invariant() {
  Rng rng(1003);
  double worst_spread = 0.0;
  double worst_budget = 0.0;
  for (int t = 0; t < 500; ++t) {
    const int n = 1 + rng.uniform_int(21);
    const int k = 1 + rng.uniform_int(std::min(n, 12));
    const SlotProblem prob = random_physical_problem(rng, k, n);
    for (const SlotSolution& s : {solve_nullaci_slot(prob), greedy_solve(prob),
                                  baseline1_solve(prob, random_assignment(rng, n, k))}) {
      worst_spread = std::max(worst_spread, (s.weighted_sinr.maxCoeff() - s.weighted_sinr.minCoeff()) / s.common_sinr);
      worst_budget = std::max(worst_budget, std::abs(s.power.sum() / prob.p_max_mw - 1.0));
    }
  }
  return {worst_spread <= 1e-9 && worst_budget <= 1e-12,
          "1500 solutions, max spread/gamma " + fmt("%.2e", worst_spread) + ", max budget rel. err " +
              fmt("%.2e", worst_budget)};
}

Outcome smoothing_sandwich() {
  Rng rng(1004);
  int violations = 0;
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + rng.uniform_int(7);
    const int k = 1 + rng.uniform_int(n);
    const SlotProblem prob = random_aci_problem(rng, k, n);
    const VectorXd p = random_matrix(rng, k, 1, 0.05, 1.0);
    const MatrixXd a = random_relaxed(rng, n, k);
    const auto params = smoothing_params(prob, a, p, SolverKnobs{});
    const VectorXd fhat = surrogate_sinr(a, p, prob.gains, params, prob.ei, prob.weights);
    const double f = smoothed_objective(a, p, prob.gains, params, prob.ei, prob.weights);
    const double lower = -fhat.minCoeff();
    const double upper = lower + params.mu * std::log(static_cast<double>(k));
    violations += !(lower <= f && f <= upper);
  }
  return {violations == 0, "100 relaxed points, violations " + std::to_string(violations)};
}

Outcome gradient_check() {
  Rng rng(1005);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + rng.uniform_int(6);
    const int k = 1 + rng.uniform_int(n);
    const SlotProblem prob = random_aci_problem(rng, k, n);
    const VectorXd p = random_matrix(rng, k, 1, 0.05, 1.0);
    const MatrixXd a = random_relaxed(rng, n, k);
    SolverKnobs knobs;
    knobs.tau = 1 + rng.uniform_int(3);
    const auto params = smoothing_params(prob, a, p, knobs);
    const MatrixXd g = grad_smoothed_objective(a, p, prob.gains, params, prob.ei, prob.weights);
    const MatrixXd fd = finite_difference_gradient(
        [&](const MatrixXd& x) { return smoothed_objective(x, p, prob.gains, params, prob.ei, prob.weights); }, a,
        1e-6);
    const double floor = 1e-6 * fd.cwiseAbs().maxCoeff();
    worst = std::max(worst, ((g - fd).cwiseAbs().array() / fd.cwiseAbs().array().max(floor)).maxCoeff());
  }
  return {worst <= 1e-4, "50 interior points, max rel. error " + fmt("%.2e", worst)};
}

Outcome eig_power() {
  const auto t0 = Clock::now();
  Rng rng(1006);
  double worst_delta = 0.0;
  double worst_spread = 0.0;
  double worst_budget = 0.0;
  for (int t = 0; t < 200; ++t) {
    const int k = 1 + rng.uniform_int(8);
    const int n = k + rng.uniform_int(4);
    const SlotProblem prob = random_aci_problem(rng, k, n);
    const Assignment a = random_assignment(rng, n, k);
    const EigPowerProblem e = EigPowerProblem::from_assignment(prob, a);
    const EigPowerResult r = eig_power_alloc(e);
    const double ref = bisection_delta(e.r(), e.h(), e.p_max);
    worst_delta = std::max(worst_delta, std::abs(r.delta / ref - 1.0));
    const VectorXd s = sinr_aci(a, r.power, prob.gains, prob.aci.w, prob.ei).cwiseProduct(prob.weights);
    worst_spread = std::max(worst_spread, (s.maxCoeff() - s.minCoeff()) / s.minCoeff());
    worst_budget = std::max(worst_budget, std::abs(r.power.sum() / e.p_max - 1.0));
  }
  const double secs = seconds_since(t0);
  return {worst_delta <= 1e-6 && worst_spread <= 1e-8 && worst_budget <= 1e-10 && secs < 30.0,
          "200 instances, delta rel. err " + fmt("%.2e", worst_delta) + ", SINR spread " +
              fmt("%.2e", worst_spread) + ", budget rel. err " + fmt("%.2e", worst_budget) + ", " +
              fmt("%.2f s", secs)};
}

Outcome ao_sandwich() {
  Rng rng(1007);
  int order_violations = 0;
  int hits = 0;
  int default_hits = 0;
  const int trials = 100;
  for (int t = 0; t < trials; ++t) {
    const SlotProblem prob = random_aci_problem(rng, 3, 4);
    const Assignment start = random_assignment(rng, 4, 3);
    const double b3 = baseline3_solve(prob, start).min_weighted();
    const double ao = alternating_optimize_slot(prob, start, SolverKnobs{}).solution.min_weighted();
    const double ex = exhaustive_oracle_slot(prob, PowerModel::kAci).min_weighted();
    const double ub = upper_bound_solve(prob).min_weighted();
    order_violations += !(b3 <= ao && ao <= ex && ex <= ub);
    hits += ao >= ex * (1.0 - 1e-9);
    default_hits += alternating_optimize_slot(prob, SolverKnobs{}).solution.min_weighted() >= ex * (1.0 - 1e-9);
  }
  const double rate = static_cast<double>(hits) / trials;
  return {order_violations == 0 && rate >= kAoHitRateFloor,
          "100 slots, order violations " + std::to_string(order_violations) + ", hit rate " + fmt("%.2f", rate) +
              " (floor " + fmt("%.2f", kAoHitRateFloor) + "), hit rate from the null-ACI start " +
              fmt("%.2f", static_cast<double>(default_hits) / trials)};
}

struct TrendData {
  // [L index][scheme] -> per-slot mean over seeds of the min SINR in dB
  std::vector<std::map<Scheme, std::vector<double>>> per_slot;
  std::vector<double> gap_db;  // [L index], mean over seeds and slots of UB - AO in dB
};

Outcome trend_with_sources() {
  const auto t0 = Clock::now();
  const std::vector<int> ls = {1, 5, 10, 15};
  const int seeds = 10;
  std::vector<Scheme> schemes;
  for (Scheme s : all_schemes())
    if (s != Scheme::kExhaustiveOracle) schemes.push_back(s);
  TrendData data;
  for (int l : ls) {
    std::map<Scheme, std::vector<double>> slot_means;
    double gap = 0.0;
    int gap_count = 0;
    for (int seed = 1; seed <= seeds; ++seed) {
      const ScenarioConfig cfg = default_scenario(static_cast<std::uint64_t>(seed), l);
      std::map<Scheme, FlightReport> reports;
      for (Scheme s : schemes) {
        reports[s] = run_flight(cfg, s);
        auto& v = slot_means[s];
        v.resize(static_cast<std::size_t>(cfg.num_slots), 0.0);
        for (const auto& rec : reports[s].slots) {
          v[static_cast<std::size_t>(rec.slot)] += to_db(rec.solution.min_weighted()) / seeds;
        }
      }
      for (std::size_t i = 0; i < reports[Scheme::kAo].slots.size(); ++i) {
        gap += to_db(reports[Scheme::kUpperBound].slots[i].solution.min_weighted()) -
               to_db(reports[Scheme::kAo].slots[i].solution.min_weighted());
        ++gap_count;
      }
    }
    data.per_slot.push_back(std::move(slot_means));
    data.gap_db.push_back(gap / gap_count);
  }
  int trend_violations = 0;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    for (Scheme s : schemes) {
      const auto& lo = data.per_slot[i - 1][s];
      const auto& hi = data.per_slot[i][s];
      for (std::size_t slot = 0; slot < lo.size(); ++slot) trend_violations += !(hi[slot] < lo[slot]);
    }
  }
  int gap_violations = 0;
  for (std::size_t i = 1; i < ls.size(); ++i) gap_violations += !(data.gap_db[i] <= data.gap_db[i - 1]);
  std::string gaps;
  for (double g : data.gap_db) gaps += (gaps.empty() ? "" : ", ") + fmt("%.3e", g);
  std::string means;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    double m = 0.0;
    for (double v : data.per_slot[i][Scheme::kAo]) m += v;
    means += (means.empty() ? "" : ", ") + fmt("%.2f", m / static_cast<double>(data.per_slot[i][Scheme::kAo].size()));
  }
  const double secs = seconds_since(t0);
  return {trend_violations == 0 && gap_violations == 0 && secs < 300.0,
          "L = 1,5,10,15 over 10 seeds: slot/scheme trend violations " + std::to_string(trend_violations) +
              ", AO mean dB [" + means + "], UB-AO gap dB [" + gaps + "], " + fmt("%.1f s", secs)};
}

Outcome priority_rank_correlation() {
  double worst = 1.0;
  double mean = 0.0;
  const int seeds = 10;
  for (int seed = 1; seed <= seeds; ++seed) {
    const ScenarioConfig cfg = default_scenario(static_cast<std::uint64_t>(100 + seed), 5);
    const FlightReport r = run_flight(cfg, Scheme::kAo);
    std::vector<double> beta;
    std::vector<double> sinr;
    for (int k = 0; k < cfg.num_uavs; ++k) {
      beta.push_back(1.0 / cfg.weights(k));
      sinr.push_back(r.avg_sinr(k));
    }
    const double rho = spearman(beta, sinr);
    worst = std::min(worst, rho);
    mean += rho / seeds;
  }
  return {worst >= 0.9, "10 seeds, Spearman min " + fmt("%.4f", worst) + ", mean " + fmt("%.4f", mean)};
}

SlotProblem single_uav_slot(double e0, double e1) {
  VectorXd freqs(2);
  freqs << 505.0, 510.0;
  MatrixXd ei(1, 2);
  ei << e0, e1;
  return make_slot_problem(VectorXd::Constant(1, gain_coefficient(800.0, 3.0)), freqs, ei, VectorXd::Ones(1), 1000.0,
                           AciProfile::exponential(5.0));
}

Outcome handover_policy() {
  // Slot 0 prefers channel 0. In slot 1 channel 1 becomes better by the
  // injected factor; channel 0 keeps its slot-0 quality.
  const double f0 = 1.0 / (505.0 * 505.0);
  const double f1 = 1.0 / (510.0 * 510.0);
  const double e0 = 0.1;
  auto two_slots = [&](double factor) {
    return std::vector<SlotProblem>{single_uav_slot(e0, 10.0 * e0), single_uav_slot(e0, e0 * (f1 / f0) / factor)};
  };
  SolverKnobs knobs;
  knobs.handover_theta = 0.2;
  std::string detail;
  bool pass = true;
  for (Scheme s : {Scheme::kHungarianNullAci, Scheme::kAo}) {
    const FlightReport big = run_slots(two_slots(1.3), s, knobs);
    const FlightReport small = run_slots(two_slots(1.1), s, knobs);
    const bool ok = big.slots[0].solution.assignment.channel(0) == 0 && big.slots[1].switched &&
                    big.slots[1].solution.assignment.channel(0) == 1 && !small.slots[1].switched &&
                    small.slots[1].solution.assignment.channel(0) == 0;
    pass = pass && ok;
    detail += std::string(detail.empty() ? "" : "; ") + std::string(scheme_name(s)) + ": 30% " +
              (big.slots[1].switched ? "switched" : "kept") + ", 10% " +
              (small.slots[1].switched ? "switched" : "kept");
  }
  return {pass, "theta 0.2, " + detail};
}

std::string read_all(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool same_files(const fs::path& a, const fs::path& b, int& compared) {
  bool same = true;
  for (const auto& entry : fs::directory_iterator(a)) {
    const fs::path other = b / entry.path().filename();
    same = same && fs::exists(other) && read_all(entry.path()) == read_all(other);
    ++compared;
  }
  return same;
}

Outcome determinism() {
  const fs::path root = fs::temp_directory_path() / "uavalloc_acceptance_determinism";
  fs::remove_all(root);
  fs::create_directories(root);
  const fs::path spec = root / "spec.json";
  {
    std::ofstream out(spec);
    out << R"({"scenario": ")" << UAVALLOC_SOURCE_DIR << R"(/scenarios/default.json",)"
        << R"( "schemes": ["ao", "baseline1", "baseline3", "upper_bound"], "sweep": {"L": [1, 5]},)"
        << R"( "seeds": [1, 2], "slots": "0..4"})";
  }
  const std::string tool = UAVALLOC_TOOL_PATH;
  const std::string scenario = std::string(UAVALLOC_SOURCE_DIR) + "/scenarios/default.json";
  bool ok = true;
  for (const char* run : {"a", "b"}) {
    const std::string solve = tool + " solve --scenario " + scenario + " --scheme all --seed 7 --out " +
                              (root / "solve" / run).string() + " > /dev/null";
    const std::string sweep =
        tool + " sweep --spec " + spec.string() + " --seed 7 --out " + (root / "sweep" / run).string() + " > /dev/null";
    ok = ok && std::system(solve.c_str()) == 0 && std::system(sweep.c_str()) == 0;
  }
  int compared = 0;
  ok = ok && same_files(root / "solve" / "a", root / "solve" / "b", compared) &&
       same_files(root / "sweep" / "a", root / "sweep" / "b", compared);
  fs::remove_all(root);
  return {ok && compared == 9, "solve and sweep run twice, " + std::to_string(compared) + " files byte-identical"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"LAP optimality and line-cover agreement", lap_optimality},
      {"null-ACI global optimality", nullaci_optimality},
      {"equal weighted SINR and full budget", equal_sinr_invariant},
      {"smoothing sandwich", smoothing_sandwich},
      {"gradient vs. central differences", gradient_check},
      {"eigen power allocation", eig_power},
      {"AO sandwich and hit rate", ao_sandwich},
      {"SINR trend with radiation sources", trend_with_sources},
      {"priority rank correlation", priority_rank_correlation},
      {"handover threshold", handover_policy},
      {"CLI determinism", determinism},
  };
  int failed = 0;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << index << ": " << name << " (" << o.detail
              << ")" << std::endl;
    failed += !o.pass;
    ++index;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
