#include "bipol/sweep.hpp"

#include <cstdlib>
#include <exception>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bipol {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BIPOL_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(int n, int threads, const std::function<void(int)>& work) {
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) work(i);
    return;
  }
#ifdef _OPENMP
  std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int i = 0; i < n; ++i) {
    try {
      work(i);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
#else
  for (int i = 0; i < n; ++i) work(i);
#endif
}

std::vector<SweepPoint> expand_sweep(const ModelParams& base, const std::vector<SweepAxis>& axes) {
  std::vector<SweepPoint> points;
  if (axes.empty()) {
    points.push_back({{}, derive_params(base)});
    return points;
  }
  std::vector<size_t> idx(axes.size(), 0);
  while (true) {
    SweepPoint pt;
    ModelParams p = base;
    for (size_t a = 0; a < axes.size(); ++a) {
      const double v = axes[a].values[idx[a]];
      pt.coords.push_back(v);
      p = apply_parameter(p, axes[a].parameter, v);
    }
    pt.params = p;
    points.push_back(std::move(pt));
    size_t a = axes.size();
    while (a > 0) {
      --a;
      if (++idx[a] < axes[a].values.size()) break;
      idx[a] = 0;
      if (a == 0) return points;
    }
  }
}

} // namespace bipol
