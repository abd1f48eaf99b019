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

#pragma once

#include "belllab/errors.hpp"
#include "belllab/linalg.hpp"
#include "belllab/core_algebra.hpp"
#include "belllab/chsh_quantum.hpp"
#include "belllab/random.hpp"
#include "belllab/lhv_sim.hpp"
#include "belllab/agr_sim.hpp"
#include "belllab/region_scan.hpp"
#include "belllab/io.hpp"
