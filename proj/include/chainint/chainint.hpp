// Copyright 2026 The chainint Authors
//
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

#pragma once

#include "chainint/catalog.hpp"
#include "chainint/charge_solver.hpp"
#include "chainint/coefficient.hpp"
#include "chainint/criteria.hpp"
#include "chainint/dense.hpp"
#include "chainint/frustration.hpp"
#include "chainint/gauss_rational.hpp"
#include "chainint/lattice.hpp"
#include "chainint/linear_solver.hpp"
#include "chainint/local_operator.hpp"
#include "chainint/pauli.hpp"
#include "chainint/polynomial.hpp"
#include "chainint/reproduce.hpp"
#include "chainint/ti_algebra.hpp"
