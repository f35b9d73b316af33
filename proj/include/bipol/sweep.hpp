#pragma once

#include <functional>
#include <vector>

#include "bipol/scenario.hpp"

namespace bipol {

// Resolve the worker count: explicit > BIPOL_THREADS > hardware.
int resolve_threads(int requested);

// Run `work(i)` for i in [0, n). threads <= 1 is the serial reference path;
// otherwise the indices are distributed over an OpenMP loop. Results are
// produced per index, so serial and parallel runs yield identical output.
void parallel_for(int n, int threads, const std::function<void(int)>& work);

// Cartesian expansion of the sweep axes into per-point parameter sets,
// in row-major axis order (deterministic).
struct SweepPoint {
  std::vector<double> coords; // one value per axis
  ModelParams params;
};
std::vector<SweepPoint> expand_sweep(const ModelParams& base, const std::vector<SweepAxis>& axes);

} // namespace bipol
