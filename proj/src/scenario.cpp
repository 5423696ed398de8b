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

#include "uavalloc/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"
#include "uavalloc/units.hpp"

namespace uavalloc {

using nlohmann::json;

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

void check_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  require(obj.is_object(), where + ": expected an object");
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& item : obj.items()) {
    require(keys.count(item.key()) != 0, where + ": unknown key '" + item.key() + "'");
  }
}

template <typename T>
T get_as(const json& v, const std::string& name) {
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    throw ValidationError("'" + name + "' has the wrong type");
  }
}

template <typename T>
T get_or(const json& obj, const char* key, T fallback) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return fallback;
  return get_as<T>(*it, key);
}

template <typename T>
T get_required(const json& obj, const char* key) {
  auto it = obj.find(key);
  require(it != obj.end(), std::string("missing required key '") + key + "'");
  return get_as<T>(*it, key);
}

Vec3 to_vec3(const json& v, const std::string& name) {
  require(v.is_array() && v.size() == 3, "'" + name + "' must be a 3-element array");
  Vec3 out;
  for (int i = 0; i < 3; ++i) out(i) = get_as<double>(v[static_cast<std::size_t>(i)], name);
  return out;
}

json from_vec3(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

std::optional<double> parse_theta(const json& v) {
  if (v.is_null()) return std::nullopt;
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    require(s == "inf", "handover_theta: only the string \"inf\" is accepted");
    return std::numeric_limits<double>::infinity();
  }
  return get_as<double>(v, "handover_theta");
}

GpInit parse_gp_init(const std::string& s) {
  if (s == "uniform") return GpInit::kUniform;
  if (s == "current") return GpInit::kCurrent;
  if (s == "blend") return GpInit::kBlend;
  throw ValidationError("gp_init: expected uniform, current or blend");
}

const char* gp_init_name(GpInit g) {
  switch (g) {
    case GpInit::kUniform: return "uniform";
    case GpInit::kCurrent: return "current";
    case GpInit::kBlend: return "blend";
  }
  return "uniform";
}

SolverKnobs parse_knobs(const json& j) {
  check_keys(j, "solver_knobs",
             {"tau", "mu_smooth", "w_diag_penalty", "handover_theta", "armijo", "gp_max_iter",
              "ao_max_iter", "gp_tol", "ao_tol", "gp_init", "rerandomize_per_slot", "rng_seed"});
  SolverKnobs k;
  k.tau = get_or<int>(j, "tau", k.tau);
  k.mu_smooth = get_or<double>(j, "mu_smooth", k.mu_smooth);
  if (auto it = j.find("w_diag_penalty"); it != j.end() && !it->is_null()) {
    k.w_diag_penalty = get_as<double>(*it, "w_diag_penalty");
  }
  if (auto it = j.find("handover_theta"); it != j.end()) k.handover_theta = parse_theta(*it);
  if (auto it = j.find("armijo"); it != j.end()) {
    check_keys(*it, "armijo", {"initial_step", "shrink", "slope", "max_backtracks"});
    k.armijo.initial_step = get_or<double>(*it, "initial_step", k.armijo.initial_step);
    k.armijo.shrink = get_or<double>(*it, "shrink", k.armijo.shrink);
    k.armijo.slope = get_or<double>(*it, "slope", k.armijo.slope);
    k.armijo.max_backtracks = get_or<int>(*it, "max_backtracks", k.armijo.max_backtracks);
  }
  k.gp_max_iter = get_or<int>(j, "gp_max_iter", k.gp_max_iter);
  k.ao_max_iter = get_or<int>(j, "ao_max_iter", k.ao_max_iter);
  k.gp_tol = get_or<double>(j, "gp_tol", k.gp_tol);
  k.ao_tol = get_or<double>(j, "ao_tol", k.ao_tol);
  if (auto it = j.find("gp_init"); it != j.end()) k.gp_init = parse_gp_init(get_as<std::string>(*it, "gp_init"));
  k.rerandomize_per_slot = get_or<bool>(j, "rerandomize_per_slot", k.rerandomize_per_slot);
  k.rng_seed = get_or<std::uint64_t>(j, "rng_seed", k.rng_seed);
  return k;
}

EiModel parse_ei_model(const json& j) {
  check_keys(j, "ei_model",
             {"noise_floor_dbm", "attenuation", "reference_distance_m", "spectrum", "peak_width_channels"});
  EiModel m;
  m.noise_floor_dbm = get_or<double>(j, "noise_floor_dbm", m.noise_floor_dbm);
  const auto att = get_or<std::string>(j, "attenuation", "free_space");
  if (att == "none") {
    m.attenuation = EiAttenuation::kNone;
  } else {
    require(att == "free_space", "ei_model.attenuation: expected none or free_space");
  }
  m.reference_distance_m = get_or<double>(j, "reference_distance_m", m.reference_distance_m);
  const auto spec = get_or<std::string>(j, "spectrum", "flat");
  if (spec == "peaked") {
    m.spectrum = EiSpectrum::kPeaked;
  } else {
    require(spec == "flat", "ei_model.spectrum: expected flat or peaked");
  }
  m.peak_width_channels = get_or<double>(j, "peak_width_channels", m.peak_width_channels);
  return m;
}

AciProfile parse_aci_profile(const json& j, double spacing_mhz) {
  check_keys(j, "aci_profile", {"kind", "scale_mhz", "points"});
  const auto kind = get_or<std::string>(j, "kind", "exponential");
  if (kind == "exponential") {
    require(!j.contains("points"), "aci_profile: 'points' only applies to kind=table");
    return AciProfile::exponential(get_or<double>(j, "scale_mhz", spacing_mhz));
  }
  require(kind == "table", "aci_profile.kind: expected exponential or table");
  require(!j.contains("scale_mhz"), "aci_profile: 'scale_mhz' only applies to kind=exponential");
  std::vector<std::pair<double, double>> pts;
  for (const auto& p : get_required<json>(j, "points")) {
    require(p.is_array() && p.size() == 2, "aci_profile.points: expected [separation_mhz, coefficient] pairs");
    pts.emplace_back(get_as<double>(p[0], "points"), get_as<double>(p[1], "points"));
  }
  return AciProfile::from_table(std::move(pts));
}

std::vector<std::vector<Vec3>> parse_trajectories(const json& j, int k_count, int s_count) {
  if (j.is_object()) {
    check_keys(j, "uav_trajectories",
               {"generator", "start", "end", "speed_mps", "slot_duration_s", "spacing_m"});
    require(get_or<std::string>(j, "generator", "formation") == "formation",
            "uav_trajectories.generator: expected formation");
    FormationTrajectory f;
    if (j.contains("start")) f.start = to_vec3(j["start"], "start");
    if (j.contains("end")) f.end = to_vec3(j["end"], "end");
    f.speed_mps = get_or<double>(j, "speed_mps", f.speed_mps);
    f.slot_duration_s = get_or<double>(j, "slot_duration_s", f.slot_duration_s);
    f.spacing_m = get_or<double>(j, "spacing_m", f.spacing_m);
    require(f.speed_mps >= 0.0 && f.slot_duration_s > 0.0 && f.spacing_m >= 0.0,
            "uav_trajectories: speed, slot duration and spacing must be nonnegative");
    return formation_trajectories(k_count, s_count, f);
  }
  require(j.is_array(), "uav_trajectories: expected a generator object or per-UAV position lists");
  std::vector<std::vector<Vec3>> out;
  for (const auto& track : j) {
    require(track.is_array(), "uav_trajectories: each UAV needs a list of positions");
    std::vector<Vec3> pts;
    for (const auto& p : track) pts.push_back(to_vec3(p, "uav_trajectories"));
    out.push_back(std::move(pts));
  }
  return out;
}

std::vector<RadiationSource> parse_sources(const json& j, int n_count, std::uint64_t seed) {
  if (j.is_object()) {
    check_keys(j, "radiation_sources", {"generator", "count", "x_range", "y_range", "z_m", "power_dbm"});
    require(get_or<std::string>(j, "generator", "uniform") == "uniform",
            "radiation_sources.generator: expected uniform");
    SourceField f;
    f.count = get_required<int>(j, "count");
    require(f.count >= 0, "radiation_sources.count must be nonnegative");
    if (auto it = j.find("x_range"); it != j.end()) {
      const auto r = get_as<std::vector<double>>(*it, "x_range");
      require(r.size() == 2 && r[0] <= r[1], "x_range must be [min, max]");
      f.x_min = r[0];
      f.x_max = r[1];
    }
    if (auto it = j.find("y_range"); it != j.end()) {
      const auto r = get_as<std::vector<double>>(*it, "y_range");
      require(r.size() == 2 && r[0] <= r[1], "y_range must be [min, max]");
      f.y_min = r[0];
      f.y_max = r[1];
    }
    f.z_m = get_or<double>(j, "z_m", f.z_m);
    f.power_dbm = get_or<double>(j, "power_dbm", f.power_dbm);
    Rng rng = make_rng(seed, RngStream::kSources);
    return random_sources(f, n_count, rng);
  }
  require(j.is_array(), "radiation_sources: expected a generator object or a list of sources");
  std::vector<RadiationSource> out;
  Rng spectrum_rng = make_rng(seed, RngStream::kSpectrum);
  for (const auto& s : j) {
    check_keys(s, "radiation_sources[]", {"position", "power_dbm", "peak_channel"});
    RadiationSource src;
    src.position = to_vec3(get_required<json>(s, "position"), "position");
    src.power_dbm = get_required<double>(s, "power_dbm");
    // Peak channels are drawn for every source so that toggling the spectrum
    // model does not shift other random draws.
    const int drawn = n_count > 0 ? spectrum_rng.uniform_int(n_count) : 0;
    src.peak_channel = get_or<int>(s, "peak_channel", drawn);
    out.push_back(src);
  }
  return out;
}

VectorXd parse_weights(const json& j, int k_count, std::uint64_t seed) {
  if (j.is_object()) {
    check_keys(j, "weights", {"generator", "min", "max"});
    require(get_or<std::string>(j, "generator", "uniform") == "uniform", "weights.generator: expected uniform");
    const double lo = get_or<double>(j, "min", 0.8);
    const double hi = get_or<double>(j, "max", 1.5);
    require(lo > 0.0 && lo <= hi, "weights: need 0 < min <= max");
    Rng rng = make_rng(seed, RngStream::kWeights);
    VectorXd w(k_count);
    for (int k = 0; k < k_count; ++k) w(k) = rng.uniform(lo, hi);
    return w;
  }
  const auto v = get_as<std::vector<double>>(j, "weights");
  return Eigen::Map<const VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::vector<std::vector<LinkType>> parse_link_types(const json& j, int k_count, int s_count) {
  auto one = [](const json& v) {
    const auto s = get_as<std::string>(v, "link_type");
    if (s == "los") return LinkType::kLos;
    require(s == "nlos", "link_type: expected \"los\" or \"nlos\"");
    return LinkType::kNlos;
  };
  if (j.is_string()) {
    return std::vector<std::vector<LinkType>>(static_cast<std::size_t>(k_count),
                                              std::vector<LinkType>(static_cast<std::size_t>(s_count), one(j)));
  }
  require(j.is_array(), "link_type: expected a string or per-UAV lists");
  std::vector<std::vector<LinkType>> out;
  for (const auto& row : j) {
    require(row.is_array(), "link_type: each UAV needs a list of per-slot flags");
    std::vector<LinkType> r;
    for (const auto& v : row) r.push_back(one(v));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

void ScenarioConfig::validate() const {
  require(num_uavs >= 1, "K ≥ 1 violated");
  require(num_slots >= 1, "S ≥ 1 violated");
  require(num_channels >= num_uavs, "N ≥ K violated");
  require(std::isfinite(p_max_dbm), "p_max_dbm must be finite");
  require(std::isfinite(base_freq_mhz) && base_freq_mhz >= 0.0, "base_freq_mhz must be finite and nonnegative");
  require(channel_spacing_mhz > 0.0 && std::isfinite(channel_spacing_mhz), "channel_spacing_mhz > 0 violated");
  require(std::isfinite(eta_los_db) && std::isfinite(eta_nlos_db), "eta_los_db and eta_nlos_db must be finite");
  require(gcu_position.allFinite(), "gcu_position must be finite");
  require(static_cast<int>(uav_trajectories.size()) == num_uavs, "uav_trajectories must list exactly K UAVs");
  for (const auto& track : uav_trajectories) {
    require(static_cast<int>(track.size()) == num_slots, "each trajectory must have exactly S positions");
    for (const auto& p : track) require(p.allFinite(), "trajectory positions must be finite");
  }
  if (!link_type.empty()) {
    require(static_cast<int>(link_type.size()) == num_uavs, "link_type must list exactly K UAVs");
    for (const auto& row : link_type) {
      require(static_cast<int>(row.size()) == num_slots, "link_type rows must have exactly S entries");
    }
  }
  require(weights.size() == num_uavs, "weights must have exactly K entries");
  require(weights.allFinite() && (weights.array() > 0.0).all(), "all weights alpha_k > 0 violated");
  for (const auto& s : radiation_sources) {
    require(s.position.allFinite() && std::isfinite(s.power_dbm), "radiation source must be finite");
    require(s.peak_channel >= 0 && s.peak_channel < num_channels, "radiation source peak_channel out of range");
  }
  require(std::isfinite(ei_model.noise_floor_dbm), "noise_floor_dbm must be finite");
  require(ei_model.reference_distance_m > 0.0, "reference_distance_m must be positive");
  require(ei_model.peak_width_channels > 0.0, "peak_width_channels must be positive");
  try {
    aci_profile.validate();
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  const auto& k = solver_knobs;
  require(k.tau >= 1, "tau ≥ 1 violated");
  require(k.mu_smooth > 0.0 && std::isfinite(k.mu_smooth), "mu_smooth > 0 violated");
  require(!k.w_diag_penalty || (*k.w_diag_penalty > 0.0 && std::isfinite(*k.w_diag_penalty)),
          "w_diag_penalty must be positive and finite");
  require(!k.handover_theta || *k.handover_theta >= 0.0, "handover_theta must be nonnegative");
  require(k.armijo.initial_step > 0.0 && k.armijo.initial_step <= 1.0, "armijo.initial_step must be in (0, 1]");
  require(k.armijo.shrink > 0.0 && k.armijo.shrink < 1.0, "armijo.shrink must be in (0, 1)");
  require(k.armijo.slope > 0.0 && k.armijo.slope < 1.0, "armijo.slope must be in (0, 1)");
  require(k.armijo.max_backtracks >= 0, "armijo.max_backtracks must be nonnegative");
  require(k.gp_max_iter >= 1 && k.ao_max_iter >= 1, "iteration caps must be at least 1");
  require(k.gp_tol >= 0.0 && k.ao_tol >= 0.0, "tolerances must be nonnegative");
}

double ScenarioConfig::p_max_mw() const { return dbm_to_mw(p_max_dbm); }

VectorXd ScenarioConfig::channel_frequencies() const {
  VectorXd f(num_channels);
  for (int n = 0; n < num_channels; ++n) f(n) = base_freq_mhz + (n + 1) * channel_spacing_mhz;
  return f;
}

LinkType ScenarioConfig::link(int uav, int slot) const {
  if (link_type.empty()) return LinkType::kLos;
  return link_type[static_cast<std::size_t>(uav)][static_cast<std::size_t>(slot)];
}

SlotGeometry slot_geometry(const ScenarioConfig& cfg, int slot) {
  if (slot < 0 || slot >= cfg.num_slots) {
    throw std::out_of_range("slot_geometry: slot " + std::to_string(slot) + " outside [0, " +
                            std::to_string(cfg.num_slots) + ")");
  }
  SlotGeometry g;
  const int k_count = cfg.num_uavs;
  const int n_count = cfg.num_channels;
  g.freqs_mhz = cfg.channel_frequencies();
  g.distances_m.resize(k_count);
  g.ei_mw = MatrixXd::Constant(k_count, n_count, dbm_to_mw(cfg.ei_model.noise_floor_dbm));
  for (int k = 0; k < k_count; ++k) {
    const Vec3& pos = cfg.uav_trajectories[static_cast<std::size_t>(k)][static_cast<std::size_t>(slot)];
    g.distances_m(k) = (pos - cfg.gcu_position).norm();
    if (!(g.distances_m(k) > 0.0)) {
      throw ValidationError("UAV " + std::to_string(k) + " coincides with the GCU at slot " + std::to_string(slot));
    }
    for (const auto& src : cfg.radiation_sources) {
      double received = dbm_to_mw(src.power_dbm);
      if (cfg.ei_model.attenuation == EiAttenuation::kFreeSpace) {
        const double d = std::max((pos - src.position).norm(), 1.0);
        const double ratio = cfg.ei_model.reference_distance_m / d;
        received *= ratio * ratio;
      }
      for (int n = 0; n < n_count; ++n) {
        double spectral = 1.0;
        if (cfg.ei_model.spectrum == EiSpectrum::kPeaked) {
          spectral = std::exp(-std::abs(n - src.peak_channel) / cfg.ei_model.peak_width_channels);
        }
        g.ei_mw(k, n) += received * spectral;
      }
    }
  }
  return g;
}

std::vector<std::vector<Vec3>> formation_trajectories(int num_uavs, int num_slots, const FormationTrajectory& spec) {
  const Vec3 leg = spec.end - spec.start;
  const double length = leg.norm();
  const Vec3 dir = length > 0.0 ? Vec3(leg / length) : Vec3::Zero();
  const int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(std::max(num_uavs, 1)))));
  const int rows = (num_uavs + cols - 1) / cols;
  std::vector<std::vector<Vec3>> out(static_cast<std::size_t>(num_uavs));
  for (int k = 0; k < num_uavs; ++k) {
    const int r = k / cols;
    const int c = k % cols;
    const Vec3 offset((c - 0.5 * (cols - 1)) * spec.spacing_m, (r - 0.5 * (rows - 1)) * spec.spacing_m, 0.0);
    auto& track = out[static_cast<std::size_t>(k)];
    for (int s = 0; s < num_slots; ++s) {
      const double travelled = std::min(spec.speed_mps * spec.slot_duration_s * (s + 1), length);
      track.push_back(spec.start + travelled * dir + offset);
    }
  }
  return out;
}

std::vector<RadiationSource> random_sources(const SourceField& field, int num_channels, Rng& rng) {
  std::vector<RadiationSource> out;
  for (int i = 0; i < field.count; ++i) {
    RadiationSource s;
    const double x = rng.uniform(field.x_min, field.x_max);
    const double y = rng.uniform(field.y_min, field.y_max);
    s.position = Vec3(x, y, field.z_m);
    s.power_dbm = field.power_dbm;
    s.peak_channel = num_channels > 0 ? rng.uniform_int(num_channels) : 0;
    out.push_back(s);
  }
  return out;
}

ScenarioConfig parse_scenario(std::string_view json_text, const ScenarioOverrides& overrides) {
  json j;
  try {
    j = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scenario: ") + e.what());
  }
  check_keys(j, "scenario",
             {"K", "N", "S", "gcu_position", "uav_trajectories", "base_freq_mhz", "channel_spacing_mhz",
              "p_max_dbm", "eta_los_db", "eta_nlos_db", "link_type", "radiation_sources", "weights",
              "ei_model", "aci_profile", "solver_knobs"});
  ScenarioConfig c;
  c.num_uavs = get_required<int>(j, "K");
  c.num_channels = get_required<int>(j, "N");
  c.num_slots = get_required<int>(j, "S");
  require(c.num_uavs >= 1, "K ≥ 1 violated");
  require(c.num_slots >= 1, "S ≥ 1 violated");
  require(c.num_channels >= c.num_uavs, "N ≥ K violated");

  if (auto it = j.find("solver_knobs"); it != j.end()) c.solver_knobs = parse_knobs(*it);
  if (overrides.seed) c.solver_knobs.rng_seed = *overrides.seed;
  if (overrides.theta) c.solver_knobs.handover_theta = *overrides.theta;
  if (overrides.tau) c.solver_knobs.tau = *overrides.tau;
  if (overrides.mu) c.solver_knobs.mu_smooth = *overrides.mu;
  const std::uint64_t seed = c.solver_knobs.rng_seed;

  if (auto it = j.find("gcu_position"); it != j.end()) c.gcu_position = to_vec3(*it, "gcu_position");
  c.uav_trajectories = parse_trajectories(get_required<json>(j, "uav_trajectories"), c.num_uavs, c.num_slots);
  c.base_freq_mhz = get_required<double>(j, "base_freq_mhz");
  c.channel_spacing_mhz = get_required<double>(j, "channel_spacing_mhz");
  c.p_max_dbm = get_required<double>(j, "p_max_dbm");
  c.eta_los_db = get_or<double>(j, "eta_los_db", c.eta_los_db);
  c.eta_nlos_db = get_or<double>(j, "eta_nlos_db", c.eta_nlos_db);
  if (auto it = j.find("link_type"); it != j.end()) c.link_type = parse_link_types(*it, c.num_uavs, c.num_slots);
  if (auto it = j.find("radiation_sources"); it != j.end()) {
    c.radiation_sources = parse_sources(*it, c.num_channels, seed);
  }
  if (auto it = j.find("weights"); it != j.end()) {
    c.weights = parse_weights(*it, c.num_uavs, seed);
  } else {
    c.weights = VectorXd::Ones(c.num_uavs);
  }
  if (auto it = j.find("ei_model"); it != j.end()) c.ei_model = parse_ei_model(*it);
  c.aci_profile = AciProfile::exponential(c.channel_spacing_mhz);
  if (auto it = j.find("aci_profile"); it != j.end()) c.aci_profile = parse_aci_profile(*it, c.channel_spacing_mhz);
  c.validate();
  return c;
}

ScenarioConfig load_scenario(const std::filesystem::path& path, const ScenarioOverrides& overrides) {
  std::ifstream in(path);
  if (!in) throw ParseError("scenario: cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), overrides);
}

std::string scenario_to_json(const ScenarioConfig& c) {
  json j;
  j["K"] = c.num_uavs;
  j["N"] = c.num_channels;
  j["S"] = c.num_slots;
  j["gcu_position"] = from_vec3(c.gcu_position);
  json tracks = json::array();
  for (const auto& t : c.uav_trajectories) {
    json pts = json::array();
    for (const auto& p : t) pts.push_back(from_vec3(p));
    tracks.push_back(pts);
  }
  j["uav_trajectories"] = tracks;
  j["base_freq_mhz"] = c.base_freq_mhz;
  j["channel_spacing_mhz"] = c.channel_spacing_mhz;
  j["p_max_dbm"] = c.p_max_dbm;
  j["eta_los_db"] = c.eta_los_db;
  j["eta_nlos_db"] = c.eta_nlos_db;
  if (!c.link_type.empty()) {
    json rows = json::array();
    for (const auto& r : c.link_type) {
      json row = json::array();
      for (auto l : r) row.push_back(l == LinkType::kLos ? "los" : "nlos");
      rows.push_back(row);
    }
    j["link_type"] = rows;
  }
  json srcs = json::array();
  for (const auto& s : c.radiation_sources) {
    srcs.push_back({{"position", from_vec3(s.position)}, {"power_dbm", s.power_dbm}, {"peak_channel", s.peak_channel}});
  }
  j["radiation_sources"] = srcs;
  j["weights"] = std::vector<double>(c.weights.data(), c.weights.data() + c.weights.size());
  j["ei_model"] = {{"noise_floor_dbm", c.ei_model.noise_floor_dbm},
                   {"attenuation", c.ei_model.attenuation == EiAttenuation::kNone ? "none" : "free_space"},
                   {"reference_distance_m", c.ei_model.reference_distance_m},
                   {"spectrum", c.ei_model.spectrum == EiSpectrum::kFlat ? "flat" : "peaked"},
                   {"peak_width_channels", c.ei_model.peak_width_channels}};
  if (c.aci_profile.kind == AciProfile::Kind::kExponential) {
    j["aci_profile"] = {{"kind", "exponential"}, {"scale_mhz", c.aci_profile.scale_mhz}};
  } else {
    json pts = json::array();
    for (const auto& [s, m] : c.aci_profile.table) pts.push_back({s, m});
    j["aci_profile"] = {{"kind", "table"}, {"points", pts}};
  }
  const auto& k = c.solver_knobs;
  json knobs = {{"tau", k.tau},
                {"mu_smooth", k.mu_smooth},
                {"armijo",
                 {{"initial_step", k.armijo.initial_step},
                  {"shrink", k.armijo.shrink},
                  {"slope", k.armijo.slope},
                  {"max_backtracks", k.armijo.max_backtracks}}},
                {"gp_max_iter", k.gp_max_iter},
                {"ao_max_iter", k.ao_max_iter},
                {"gp_tol", k.gp_tol},
                {"ao_tol", k.ao_tol},
                {"gp_init", gp_init_name(k.gp_init)},
                {"rerandomize_per_slot", k.rerandomize_per_slot},
                {"rng_seed", k.rng_seed}};
  knobs["w_diag_penalty"] = k.w_diag_penalty ? json(*k.w_diag_penalty) : json(nullptr);
  if (!k.handover_theta) {
    knobs["handover_theta"] = nullptr;
  } else if (std::isinf(*k.handover_theta)) {
    knobs["handover_theta"] = "inf";
  } else {
    knobs["handover_theta"] = *k.handover_theta;
  }
  j["solver_knobs"] = knobs;
  return j.dump(2);
}

ScenarioConfig default_scenario(std::uint64_t seed, int num_sources) {
  json j = {
      {"K", 12},
      {"N", 21},
      {"S", 20},
      {"gcu_position", {0.0, 0.0, 0.0}},
      {"uav_trajectories",
       {{"generator", "formation"},
        {"start", {0.0, 0.0, 500.0}},
        {"end", {1000.0, 0.0, 500.0}},
        {"speed_mps", 50.0},
        {"slot_duration_s", 1.0},
        {"spacing_m", 20.0}}},
      {"base_freq_mhz", 500.0},
      {"channel_spacing_mhz", 5.0},
      {"p_max_dbm", 30.0},
      {"eta_los_db", 3.0},
      {"eta_nlos_db", 23.0},
      {"radiation_sources", {{"generator", "uniform"}, {"count", num_sources}, {"power_dbm", -10.0}}},
      {"weights", {{"generator", "uniform"}, {"min", 0.8}, {"max", 1.5}}},
      {"solver_knobs", {{"rng_seed", seed}}},
  };
  return parse_scenario(j.dump());
}

}  // namespace uavalloc
