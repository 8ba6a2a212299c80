// Timing harness for the two parallel kernels (subgroup enumeration and the
// measure table) against their single-thread runs, plus the one-element-
// extension reference enumerator where it is feasible. Results double as a
// determinism check: digests must agree across thread counts.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cdlat/cd.hpp"
#include "cdlat/spec.hpp"

using namespace cdlat;

namespace {

template <class F>
double best_ms(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best,
                    std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kernel timings: serial vs OpenMP"};
  int threads = omp_get_max_threads();
  int reps = 3;
  std::vector<std::string> specs = {"dic:12", "xsp:2,5,q", "xsp:5,3,p",
                                    "ab:2,2,2,2,2,2"};
  app.add_option("--threads", threads, "parallel thread count")
      ->capture_default_str();
  app.add_option("--reps", reps, "repetitions, best time kept")
      ->capture_default_str();
  app.add_option("spec", specs, "group specs to time");
  CLI11_PARSE(app, argc, argv);

  std::printf("%-18s %-14s %10s %10s %8s\n", "group", "kernel", "serial",
              "omp", "speedup");
  for (const std::string& text : specs) {
    GroupTable g = build_group(parse_spec(text));
    EnumLimits one, par;
    one.threads = 1;
    par.threads = threads;

    SubgroupSet s1 = all_subgroups(g, one);
    SubgroupSet sn = all_subgroups(g, par);
    const bool same_set = subgroup_set_digest(s1) == subgroup_set_digest(sn);
    double t_enum1 = best_ms(reps, [&] { all_subgroups(g, one); });
    double t_enumn = best_ms(reps, [&] { all_subgroups(g, par); });
    std::printf("%-18s %-14s %8.1fms %8.1fms %7.2fx%s\n", text.c_str(),
                "enumerate", t_enum1, t_enumn, t_enum1 / t_enumn,
                same_set ? "" : "  MISMATCH");

    const bool same_meas = measure_table(g, s1, 1) == measure_table(g, s1, threads);
    double t_meas1 = best_ms(reps, [&] { measure_table(g, s1, 1); });
    double t_measn = best_ms(reps, [&] { measure_table(g, s1, threads); });
    std::printf("%-18s %-14s %8.1fms %8.1fms %7.2fx%s\n", text.c_str(),
                "measures", t_meas1, t_measn, t_meas1 / t_measn,
                same_meas ? "" : "  MISMATCH");

    if (g.order() <= 128) {
      const bool same_ref =
          subgroup_set_digest(
              SubgroupSet::from_subgroups(g, reference_subgroups(g))) ==
          subgroup_set_digest(s1);
      double t_ref = best_ms(reps, [&] { reference_subgroups(g); });
      std::printf("%-18s %-14s %8.1fms %10s %7s%s\n", text.c_str(),
                  "reference", t_ref, "-", "-", same_ref ? "" : "  MISMATCH");
    }
  }
  return 0;
}
