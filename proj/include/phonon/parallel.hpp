// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

namespace phonon::par {

/// Execution lane for the assembly/scan kernels. Serial is the reference
/// implementation kept for testing; Parallel runs the same loop under OpenMP.
enum class Exec { Serial, Parallel };

/// Global default used by assembly entry points (set from the CLI).
Exec default_exec();
void set_default_exec(Exec e);

void set_threads(int n);
int max_threads();

/// parallel_for over [0, n) with the selected lane.
void parallel_for(int n, Exec exec, const std::function<void(int)>& body);

}  // namespace phonon::par
