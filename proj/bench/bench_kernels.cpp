// Times the serial reference implementations against the OpenMP kernels on
// the heavy inner loops: standard-monomial counting, staircase enumeration,
// lambda reachability, the rewrite search, and the random-trace sweep.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gincalc/cohomology.hpp"
#include "gincalc/enumeration.hpp"
#include "gincalc/hilbert.hpp"

using namespace gincalc;

namespace {

double time_ms(const std::function<void()>& body, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) body();
  auto dt = std::chrono::steady_clock::now() - t0;
  return std::chrono::duration<double, std::milli>(dt).count() / reps;
}

void row(const char* name, int reps, const std::function<void(ExecMode)>& body) {
  double serial = time_ms([&] { body(ExecMode::serial); }, reps);
  double parallel = time_ms([&] { body(ExecMode::parallel); }, reps);
  std::printf("%-36s %10.2f ms %10.2f ms  x%.2f\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run the serial path\n");
#endif
  std::printf("%-36s %13s %13s  %s\n", "kernel", "serial", "parallel", "speedup");

  // a realistic counting batch: every colength-12 staircase at degrees up to 18
  EnumerationFilter batch_filter{12, 0, false, false};
  std::vector<MonomialIdeal> batch;
  for (const MonomialIdeal& ideal : enumerate_staircases(3, batch_filter))
    batch.push_back(ideal.extended(5));
  row("hilbert counting batch, deg <= 18", 3, [&](ExecMode mode) {
    long long sum = 0;
    for (const MonomialIdeal& ideal : batch)
      for (int t = 10; t <= 18; ++t) sum += hilbert_function(ideal, t, mode);
    volatile long long sink = sum;
    (void)sink;
  });

  // a single stress-size count where the first-exponent split engages
  MonomialIdeal sparse(6, {Monomial({3, 2, 0, 0, 0, 0}), Monomial({0, 0, 4, 1, 0, 0}),
                           Monomial({0, 1, 0, 5, 0, 0}), Monomial({0, 0, 0, 0, 6, 1})});
  row("hilbert counting, stress degree 40", 3, [&](ExecMode mode) {
    volatile long long sink = hilbert_function(sparse, 40, mode);
    (void)sink;
  });

  row("staircase enumeration, colength 12", 3, [&](ExecMode mode) {
    EnumerationFilter filter{12, 0, false, false};
    volatile size_t sink = enumerate_staircases(3, filter, mode).size();
    (void)sink;
  });

  row("lambda reachability, degree 10", 3, [&](ExecMode mode) {
    volatile size_t sink =
        lambda_reachable_set(10, Ruleset::nondegenerate_p4, mode).size();
    (void)sink;
  });

  row("rewrite sweep, case 4a", 1, [&](ExecMode mode) {
    volatile size_t sink = case_level_sweep(CaseId::c4a, 8, mode).size();
    (void)sink;
  });

  row("trace identities, 600 walks", 1, [&](ExecMode mode) {
    TraceSweepResult r = random_trace_identity_sweep(
        case_hyperplane_gin(CaseId::c2), Ruleset::nondegenerate_p4, 600, 99, mode);
    if (!r.genus_drop_ok || !r.i_oracle_ok) std::printf("  (identity failure!)\n");
  });

  return 0;
}
