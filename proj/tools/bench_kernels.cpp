// SPDX-License-Identifier: Apache-2.0
//
// Wall-clock comparison of the OpenMP kernels against their serial
// references, with an equality check on every output.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "unclogic/boolean_ops.hpp"
#include "unclogic/pbox.hpp"

using namespace unclogic;

namespace {

double time_of(const std::function<void()>& fn, int reps) {
  using clock = std::chrono::steady_clock;
  double best = 1e30;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = clock::now();
    fn();
    const auto t1 = clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

void report(const char* name, double serial_s, double parallel_s, bool identical) {
  std::printf("%-28s serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx   %s\n",
              name, serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s,
              identical ? "outputs identical" : "OUTPUTS DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel kernels run serially\n");
#endif

  const int n = 400;
  const PBox x = cbox_kn(5, 6, n);
  const PBox y = cbox_kn(16, 20, n);
  const RhoInterval rho{-0.2, 0.4};

  {
    const CopulaSpec g = CopulaSpec::gaussian(0.5);
    PBox a = pbox_point(0.5, n), b = a;
    const double ts = time_of([&] { a = conv_and_serial(x, y, rho, g); }, 3);
    const double tp = time_of([&] { b = conv_and(x, y, rho, g); }, 3);
    report("conv_and gaussian N=400", ts, tp, a == b);
  }
  {
    PBox a = pbox_point(0.5, n), b = a;
    const double ts = time_of([&] { a = conv_and_frechet_serial(x, y, rho); }, 3);
    const double tp = time_of([&] { b = conv_and_frechet(x, y, rho); }, 3);
    report("conv_and_frechet N=400", ts, tp, a == b);
  }
  {
    const std::size_t draws = 20'000'000;
    BitPairSample a, b;
    const double ts =
        time_of([&] { a = sample_pairs_serial(0.3, 0.6, 0.25, draws, 42); }, 3);
    const double tp = time_of([&] { b = sample_pairs(0.3, 0.6, 0.25, draws, 42); }, 3);
    report("sample_pairs n=2e7", ts, tp, a.a == b.a && a.b == b.b);
  }
  return 0;
}
