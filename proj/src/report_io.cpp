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

#include "uavalloc/report_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>
#include <tuple>

namespace uavalloc {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

double to_db(double linear) { return 10.0 * std::log10(linear); }

namespace {

std::ofstream open_out(const std::filesystem::path& dir, const char* name) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path p = dir / name;
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::filesystem::filesystem_error("cannot write output file", p,
                                            std::make_error_code(std::errc::permission_denied));
  }
  return out;
}

void close_checked(std::ofstream& out, const std::filesystem::path& p) {
  out.close();
  if (!out) {
    throw std::filesystem::filesystem_error("failed writing output file", p, std::make_error_code(std::errc::io_error));
  }
}

std::string theta_label(const std::optional<double>& theta) {
  if (!theta) return "none";
  return format_double(*theta);
}

std::string point_columns(int k, int n, int l, const std::optional<double>& theta, int beta_index) {
  std::ostringstream os;
  os << k << ',' << n << ',' << l << ',' << theta_label(theta) << ',' << beta_index;
  return os.str();
}

}  // namespace

void write_solve_outputs(const std::filesystem::path& dir, const ScenarioConfig& cfg,
                         const std::vector<FlightReport>& reports) {
  const int k_count = cfg.num_uavs;
  const int l = static_cast<int>(cfg.radiation_sources.size());
  {
    auto out = open_out(dir, "slots.csv");
    out << "slot,scheme,L,K,N,min_sinr_db,switched";
    for (int k = 0; k < k_count; ++k) out << ",sinr_db_" << k;
    for (int k = 0; k < k_count; ++k) out << ",channel_" << k;
    for (int k = 0; k < k_count; ++k) out << ",power_mw_" << k;
    out << '\n';
    for (const auto& r : reports) {
      for (const auto& rec : r.slots) {
        const auto& s = rec.solution;
        out << rec.slot << ',' << scheme_name(r.scheme) << ',' << l << ',' << k_count << ',' << cfg.num_channels
            << ',' << format_double(to_db(s.min_weighted())) << ',' << (rec.switched ? 1 : 0);
        for (int k = 0; k < k_count; ++k) out << ',' << format_double(to_db(s.per_uav_sinr(k)));
        for (int k = 0; k < k_count; ++k) out << ',' << s.assignment.channel(k);
        for (int k = 0; k < k_count; ++k) out << ',' << format_double(s.power(k));
        out << '\n';
      }
    }
    close_checked(out, dir / "slots.csv");
  }
  {
    auto out = open_out(dir, "uavs.csv");
    out << "scheme,uav,alpha,beta,avg_sinr_db,weighted_avg_sinr_db\n";
    for (const auto& r : reports) {
      for (int k = 0; k < k_count; ++k) {
        const double alpha = r.weights(k);
        out << scheme_name(r.scheme) << ',' << k << ',' << format_double(alpha) << ',' << format_double(1.0 / alpha)
            << ',' << format_double(to_db(r.avg_sinr(k))) << ',' << format_double(to_db(alpha * r.avg_sinr(k)))
            << '\n';
      }
    }
    close_checked(out, dir / "uavs.csv");
  }
  {
    auto out = open_out(dir, "flight.csv");
    out << "scheme,L,K,N,first_slot,last_slot,objective_db,mean_min_sinr_db,switches\n";
    for (const auto& r : reports) {
      double mean = 0.0;
      int switches = 0;
      for (const auto& rec : r.slots) {
        mean += to_db(rec.solution.min_weighted());
        switches += rec.switched ? 1 : 0;
      }
      mean /= static_cast<double>(r.slots.size());
      out << scheme_name(r.scheme) << ',' << l << ',' << k_count << ',' << cfg.num_channels << ','
          << r.slots.front().slot << ',' << r.slots.back().slot << ',' << format_double(to_db(r.objective)) << ','
          << format_double(mean) << ',' << switches << '\n';
    }
    close_checked(out, dir / "flight.csv");
  }
  {
    auto out = open_out(dir, "plot.dat");
    bool first = true;
    for (const auto& r : reports) {
      if (!first) out << "\n\n";
      first = false;
      out << "# scheme " << scheme_name(r.scheme) << "\n# slot min_sinr_db\n";
      for (const auto& rec : r.slots) {
        out << rec.slot << ' ' << format_double(to_db(rec.solution.min_weighted())) << '\n';
      }
    }
    close_checked(out, dir / "plot.dat");
  }
}

std::vector<SlotSummaryRow> summarize_per_slot(const std::vector<SweepRun>& runs) {
  std::vector<SlotSummaryRow> rows;
  // (K, N, L, theta label, beta index, scheme, slot) -> row index
  std::map<std::tuple<int, int, int, std::string, int, int, int>, std::size_t> index;
  for (const auto& run : runs) {
    for (const auto& rec : run.report.slots) {
      const auto key = std::make_tuple(run.num_uavs, run.num_channels, run.num_sources, theta_label(run.theta),
                                       run.point.beta_index, static_cast<int>(run.report.scheme), rec.slot);
      auto it = index.find(key);
      if (it == index.end()) {
        SlotSummaryRow row;
        row.point = run.point;
        row.num_uavs = run.num_uavs;
        row.num_channels = run.num_channels;
        row.num_sources = run.num_sources;
        row.theta = run.theta;
        row.scheme = run.report.scheme;
        row.slot = rec.slot;
        it = index.emplace(key, rows.size()).first;
        rows.push_back(row);
      }
      SlotSummaryRow& row = rows[it->second];
      row.mean_min_sinr_db += to_db(rec.solution.min_weighted());
      ++row.seeds;
    }
  }
  for (auto& row : rows) row.mean_min_sinr_db /= static_cast<double>(row.seeds);
  return rows;
}

void write_sweep_outputs(const std::filesystem::path& dir, const std::vector<SweepRun>& runs) {
  {
    auto out = open_out(dir, "runs.csv");
    out << "K,N,L,theta,beta_id,seed,scheme,slot,min_sinr_db,switched\n";
    for (const auto& run : runs) {
      const std::string pc =
          point_columns(run.num_uavs, run.num_channels, run.num_sources, run.theta, run.point.beta_index);
      for (const auto& rec : run.report.slots) {
        out << pc << ',' << run.seed << ',' << scheme_name(run.report.scheme) << ',' << rec.slot << ','
            << format_double(to_db(rec.solution.min_weighted())) << ',' << (rec.switched ? 1 : 0) << '\n';
      }
    }
    close_checked(out, dir / "runs.csv");
  }
  {
    auto out = open_out(dir, "per_uav.csv");
    out << "K,N,L,theta,beta_id,seed,scheme,uav,alpha,beta,avg_sinr_db\n";
    for (const auto& run : runs) {
      const std::string pc =
          point_columns(run.num_uavs, run.num_channels, run.num_sources, run.theta, run.point.beta_index);
      for (int k = 0; k < run.num_uavs; ++k) {
        const double alpha = run.report.weights(k);
        out << pc << ',' << run.seed << ',' << scheme_name(run.report.scheme) << ',' << k << ','
            << format_double(alpha) << ',' << format_double(1.0 / alpha) << ','
            << format_double(to_db(run.report.avg_sinr(k))) << '\n';
      }
    }
    close_checked(out, dir / "per_uav.csv");
  }
  const std::vector<SlotSummaryRow> rows = summarize_per_slot(runs);
  {
    auto out = open_out(dir, "summary_per_slot.csv");
    out << "K,N,L,theta,beta_id,scheme,slot,seeds,mean_min_sinr_db\n";
    for (const auto& row : rows) {
      out << point_columns(row.num_uavs, row.num_channels, row.num_sources, row.theta, row.point.beta_index) << ','
          << scheme_name(row.scheme) << ',' << row.slot << ',' << row.seeds << ','
          << format_double(row.mean_min_sinr_db) << '\n';
    }
    close_checked(out, dir / "summary_per_slot.csv");
  }
  {
    auto out = open_out(dir, "summary.csv");
    out << "K,N,L,theta,beta_id,scheme,seeds,mean_objective_db,mean_min_sinr_db\n";
    std::map<std::tuple<int, int, int, std::string, int, int>, std::size_t> index;
    struct Acc {
      std::string prefix;
      std::string scheme;
      int seeds = 0;
      double objective = 0.0;
      double min_sinr = 0.0;
      int slot_count = 0;
    };
    std::vector<Acc> acc;
    for (const auto& run : runs) {
      const auto key = std::make_tuple(run.num_uavs, run.num_channels, run.num_sources, theta_label(run.theta),
                                       run.point.beta_index, static_cast<int>(run.report.scheme));
      auto it = index.find(key);
      if (it == index.end()) {
        Acc a;
        a.prefix = point_columns(run.num_uavs, run.num_channels, run.num_sources, run.theta, run.point.beta_index);
        a.scheme = std::string(scheme_name(run.report.scheme));
        it = index.emplace(key, acc.size()).first;
        acc.push_back(a);
      }
      Acc& a = acc[it->second];
      ++a.seeds;
      a.objective += to_db(run.report.objective);
      for (const auto& rec : run.report.slots) {
        a.min_sinr += to_db(rec.solution.min_weighted());
        ++a.slot_count;
      }
    }
    for (const auto& a : acc) {
      out << a.prefix << ',' << a.scheme << ',' << a.seeds << ',' << format_double(a.objective / a.seeds) << ','
          << format_double(a.min_sinr / a.slot_count) << '\n';
    }
    close_checked(out, dir / "summary.csv");
  }
  {
    auto out = open_out(dir, "plot.dat");
    bool first = true;
    std::string current;
    for (const auto& row : rows) {
      const std::string block =
          point_columns(row.num_uavs, row.num_channels, row.num_sources, row.theta, row.point.beta_index) + " " +
          std::string(scheme_name(row.scheme));
      if (block != current) {
        if (!first) out << "\n\n";
        first = false;
        current = block;
        out << "# K,N,L,theta,beta_id " << block << "\n# slot mean_min_sinr_db\n";
      }
      out << row.slot << ' ' << format_double(row.mean_min_sinr_db) << '\n';
    }
    close_checked(out, dir / "plot.dat");
  }
}

}  // namespace uavalloc
