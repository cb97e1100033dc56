// Copyright 2026 The puqca Authors
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

#include <cstddef>
#include <functional>

namespace puqca {

/// Environment variable that caps worker threads. Unset or invalid means hardware concurrency.
inline constexpr const char *kThreadsEnvVar = "PUQCA_NUM_THREADS";

/// Number of workers parallel_for will use.
unsigned worker_count();

/// Calls body(i) for every i in [0, count). Each index is visited exactly once; bodies must
/// only write to per-index state. The first exception thrown by a body is rethrown. Calls made
/// from inside a body run serially on the calling worker.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &body);

}  // namespace puqca
