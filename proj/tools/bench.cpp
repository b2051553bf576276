// Benchmark: serial vs. OpenMP action-matrix assembly on growing
// multidegrees, asserting both paths produce identical exact matrices.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "fourlines/multihomog.hpp"
#include "fourlines/product_autos.hpp"

using namespace fourlines;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main() {
  auto gens = builtin_group("z4sz4");
  LiftedAuto g = LiftedAuto::canonical_lift(gens[0]);
  LiftedAuto h = LiftedAuto::canonical_lift(gens[1]);
  const MultiDegree degs[] = {{1, 1, 1, 1}, {2, 2, 2, 2}, {3, 3, 3, 3}, {2, 3, 2, 3}};

  std::printf("%-12s %8s %12s %12s %8s\n", "degree", "dim", "serial(ms)", "openmp(ms)",
              "speedup");
  for (const auto& deg : degs) {
    int dim = MultiPoly(deg).dimension();

    auto t0 = std::chrono::steady_clock::now();
    ExactMatrix serial_g = action_matrix(g, deg);
    ExactMatrix serial_h = action_matrix(h, deg);
    double serial_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    ExactMatrix parallel_g = action_matrix_parallel(g, deg);
    ExactMatrix parallel_h = action_matrix_parallel(h, deg);
    double parallel_ms = ms_since(t0);

    if (!(serial_g == parallel_g) || !(serial_h == parallel_h)) {
      std::fprintf(stderr, "mismatch between serial and parallel results\n");
      return 1;
    }
    char label[32];
    std::snprintf(label, sizeof label, "(%d,%d,%d,%d)", deg[0], deg[1], deg[2], deg[3]);
    std::printf("%-12s %8d %12.2f %12.2f %8.2fx\n", label, dim, serial_ms, parallel_ms,
                serial_ms / (parallel_ms > 0 ? parallel_ms : 1e-9));
  }
  return 0;
}
