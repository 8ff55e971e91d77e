// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The risint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#pragma once

#include "risint/analytic.hpp"
#include "risint/config.hpp"
#include "risint/errors.hpp"
#include "risint/experiments.hpp"
#include "risint/geometry.hpp"
#include "risint/monte_carlo.hpp"
#include "risint/parallel.hpp"
#include "risint/phase_sim.hpp"
#include "risint/random.hpp"
#include "risint/vec3.hpp"
