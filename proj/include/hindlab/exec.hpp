#pragma once

namespace hindlab {

/// Worker configuration for the parallel kernels. Results never depend on it.
struct ExecConfig {
  int threads = 0;  // 0: HINDLAB_THREADS, else the OpenMP default
};

int resolve_threads(const ExecConfig& exec);

}  // namespace hindlab
