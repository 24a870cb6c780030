// Copyright 2026 The schottky-lab Authors
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

#include <cstddef>
#include <functional>

namespace schottky {

/// Worker count: SCHOTTKY_LAB_THREADS if set (>= 1), else hardware
/// concurrency; 1 in deterministic mode.
int worker_threads();

/// Deterministic mode serializes every parallel region.
void set_deterministic(bool on);
bool deterministic();

/// Runs body(i) for i in [0, n). Tasks write to disjoint slots; callers
/// combine results in index order so reductions do not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace schottky
