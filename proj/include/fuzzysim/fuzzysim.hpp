// Copyright 2026 The fuzzysim Authors
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

#include "fuzzysim/automaton.hpp"
#include "fuzzysim/degree.hpp"
#include "fuzzysim/dirsim_engine.hpp"
#include "fuzzysim/graph.hpp"
#include "fuzzysim/io.hpp"
#include "fuzzysim/neighbor_index.hpp"
#include "fuzzysim/oracle.hpp"
#include "fuzzysim/random.hpp"
#include "fuzzysim/relation.hpp"
#include "fuzzysim/sim_engine.hpp"
#include "fuzzysim/symbols.hpp"
