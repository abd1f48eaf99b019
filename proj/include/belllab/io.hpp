// Copyright 2026 The BellLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// File formats: violation grids as CSV / JSON and experiment run reports as
// JSON.

#pragma once

#include <array>
#include <iterator>
#include <ostream>
#include <string>
#include <string_view>

#include <fmt/format.h>
#include <json.hpp>

#include "belllab/agr_sim.hpp"
#include "belllab/region_scan.hpp"

namespace belllab {

inline constexpr std::string_view kVersionTag = "belllab 0.1.0";

inline nlohmann::json to_json(const UnitVector3& v) { return nlohmann::json::array({v.x(), v.y(), v.z()}); }

inline nlohmann::json to_json(const MeasurementSettings& s) {
  return {{"a", to_json(s.a)}, {"b", to_json(s.b)}, {"a_prime", to_json(s.a_prime)}, {"b_prime", to_json(s.b_prime)}};
}

inline nlohmann::json to_json(const TwoQubitState& st) {
  auto arr = nlohmann::json::array();
  for (const auto& a : st.amplitudes()) arr.push_back({a.real(), a.imag()});
  return arr;
}

inline nlohmann::json to_json(const CoincidenceCounts& c) {
  return {{"r_pp", c.r_pp}, {"r_pm", c.r_pm}, {"r_mp", c.r_mp}, {"r_mm", c.r_mm}, {"n_pairs", c.n_pairs}};
}

inline constexpr std::array<std::string_view, 4> kPairLabels{"a,b", "a,b'", "a',b", "a',b'"};

// Run report of a simulated coincidence experiment.
inline nlohmann::json agr_report(const ExperimentConfig& cfg, const SEstimate& s) {
  nlohmann::json counts = nlohmann::json::array();
  nlohmann::json es = nlohmann::json::array();
  for (std::size_t k = 0; k < 4; ++k) {
    nlohmann::json c = to_json(s.counts[k]);
    c["pair"] = kPairLabels[k];
    counts.push_back(c);
    es.push_back({{"pair", kPairLabels[k]},
                  {"value", s.correlations[k].value},
                  {"stderr", s.correlations[k].std_error},
                  {"n", s.correlations[k].n_samples}});
  }
  return {{"version", kVersionTag},
          {"seed", cfg.seed},
          {"config",
           {{"n_pairs", cfg.n_pairs},
            {"efficiency", cfg.efficiency},
            {"misalignment_sigma", cfg.misalignment_sigma},
            {"visibility", cfg.visibility},
            {"state", to_json(cfg.state)}}},
          {"settings", to_json(cfg.settings)},
          {"counts", counts},
          {"E", es},
          {"S", s.s_value},
          {"stderr", s.std_error}};
}

inline nlohmann::json grid_to_json(const ViolationGrid& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(g.value(i, j));
    rows.push_back(std::move(row));
  }
  return {{"version", kVersionTag},
          {"plane", plane_name(g.plane)},
          {"c1", g.c1},
          {"c2", g.c2},
          {"concurrence", 2.0 * std::abs(g.c1 * g.c2)},
          {"grid_n", g.rows()},
          {"threshold", g.threshold},
          {"violating_fraction", g.violating_fraction},
          {"axis1", g.axis1},
          {"axis2", g.axis2},
          {"values", rows}};
}

// One '#' metadata line, a header line, then one line per cell.
inline void write_grid_csv(std::ostream& os, const ViolationGrid& g) {
  os << fmt::format("# {} plane={} c1={:.17g} c2={:.17g} grid_n={} threshold={} violating_fraction={:.17g}\n",
                    kVersionTag, plane_name(g.plane), g.c1, g.c2, g.rows(), g.threshold, g.violating_fraction);
  os << "angle1,angle2,bell_lhs,violated\n";
  fmt::memory_buffer buf;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    buf.clear();
    for (std::size_t j = 0; j < g.cols(); ++j)
      fmt::format_to(std::back_inserter(buf), "{:.17g},{:.17g},{:.17g},{}\n", g.axis1[i], g.axis2[j], g.value(i, j),
                     g.violated(i, j) ? 1 : 0);
    os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  }
}

}  // namespace belllab
