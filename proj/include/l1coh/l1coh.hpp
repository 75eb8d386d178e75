// Copyright 2026 The l1coh Authors
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

#include "l1coh/coherence.hpp"
#include "l1coh/core.hpp"
#include "l1coh/families.hpp"
#include "l1coh/inequalities.hpp"
#include "l1coh/random.hpp"
#include "l1coh/report.hpp"
#include "l1coh/search.hpp"
#include "l1coh/spectrum.hpp"
#include "l1coh/state.hpp"
#include "l1coh/state_io.hpp"
#include "l1coh/subsets.hpp"
#include "l1coh/tangle.hpp"
