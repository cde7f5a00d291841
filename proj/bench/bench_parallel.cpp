// Parallel batch kernels against their serial references.
//
//   bench_parallel [geodesics=4000] [points=200] [repeats=3]

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "engel/synthesis.hpp"

using namespace engel;

namespace {

template <class F>
double best_of(int repeats, F&& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void report(const char* name, double serial, double parallel, bool same) {
  std::printf("%-18s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   %s\n", name, serial, parallel,
              serial / parallel, same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int n_geo = argc > 1 ? std::atoi(argv[1]) : 4000;
  const int n_pts = argc > 2 ? std::atoi(argv[2]) : 200;
  const int repeats = argc > 3 ? std::atoi(argv[3]) : 3;
  std::printf("threads %d\n", omp_get_max_threads());

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<Geodesic> gs;
  for (int i = 0; i < n_geo; ++i) gs.push_back({{u(rng), u(rng), u(rng)}, 2.0 + u(rng)});
  std::vector<Point> qs;
  for (int i = 0; i < n_pts; ++i) qs.push_back({u(rng), u(rng), u(rng), u(rng)});

  std::vector<Point> a, b;
  const double s1 = best_of(repeats, [&] { a = exp_map_batch_serial(gs); });
  const double p1 = best_of(repeats, [&] { b = exp_map_batch(gs); });
  report("exp_map_batch", s1, p1, a == b);

  std::vector<std::optional<SynthesisResult>> ra, rb;
  const double s2 = best_of(repeats, [&] { ra = minimizers_batch_serial(qs); });
  const double p2 = best_of(repeats, [&] { rb = minimizers_batch(qs); });
  bool same = ra.size() == rb.size();
  for (std::size_t i = 0; same && i < ra.size(); ++i) {
    same = ra[i].has_value() == rb[i].has_value() &&
           (!ra[i] || (ra[i]->minimizers.size() == rb[i]->minimizers.size() &&
                       ra[i]->minimizers.front().time == rb[i]->minimizers.front().time));
  }
  report("minimizers_batch", s2, p2, same);
  return 0;
}
