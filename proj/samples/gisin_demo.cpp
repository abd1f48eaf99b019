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

// Sweeps the degree of entanglement and compares the quantum CHSH maximum,
// a local-model estimate and a simulated experiment at the same settings.

#include <cmath>
#include <cstdio>

#include "belllab/belllab.hpp"

int main() {
  using namespace belllab;
  std::printf("%8s %8s %10s %10s %12s\n", "C", "c1", "quantum", "lhv", "experiment");
  for (double c : {1.0, 0.8, 0.6, 0.4, 0.2}) {
    const auto k = coefficients_for_concurrence(c);
    const auto settings = gisin_settings(k[0], k[1]);
    const double quantum = chsh_value(canonical_state(k[0], k[1]), settings);
    const auto lhv = chsh_lhv(BellSignModel{}, settings, 200'000, 11);
    ExperimentConfig cfg{canonical_state(k[0], k[1]), settings, 200'000, 1.0, 0.0, 1.0, 11, 1};
    const auto e = estimate_S(cfg).correlations;
    const ChshCorrelations measured{e[0].value, e[1].value, e[2].value, e[3].value};
    std::printf("%8.3f %8.5f %10.6f %10.4f %12.4f\n", c, k[0], quantum, lhv.value, measured.bell_form());
  }
}
