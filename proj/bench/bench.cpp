// Serial reference vs OpenMP kernels on a few fixed workloads.
#include <chrono>
#include <cstdio>
#include <string>

#include <omp.h>

#include "knotcol/colouring.hpp"
#include "knotcol/fixtures.hpp"
#include "knotcol/golden.hpp"
#include "knotcol/yang_baxter.hpp"

using namespace knotcol;

namespace {

template <class F> double best_of(int reps, F &&f)
{
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const std::string &name, double serial, double parallel, bool same)
{
  std::printf("%-44s %10.4f %10.4f %7.2fx  %s\n", name.c_str(), serial, parallel, serial / parallel,
              same ? "same" : "DIFFERENT");
}

} // namespace

int main(int argc, char **argv)
{
  const int reps = argc > 1 ? std::stoi(argv[1]) : 3;
  const SearchOptions serial{10'000'000'000ULL, 1};
  const SearchOptions parallel{10'000'000'000ULL, 0};
  GroupCache groups;
  std::printf("threads: %d, best of %d\n", omp_get_max_threads(), reps);
  std::printf("%-44s %10s %10s %8s\n", "workload", "serial s", "omp s", "speedup");

  for (auto [knot, group] : {std::pair{"conway", "M11"}, std::pair{"bretzel_3_5_7", "M11"},
                             std::pair{"kinoshita_terasaka", "A7"}}) {
    const auto g = groups.get(group, "");
    const auto w = load_fixture(knot).source().code;
    RingElement a, b;
    const double s = best_of(reps, [&] { a = colouring_polynomial(w, g, serial).value; });
    const double p = best_of(reps, [&] { b = colouring_polynomial(w, g, parallel).value; });
    row(std::string("colouring polynomial ") + knot + " / " + group, s, p, a == b);
  }

  {
    const auto q = conjugation_quandle(groups.get("M11", "")).quandle;
    const auto w = load_fixture("conway").source().code;
    std::size_t a = 0, b = 0;
    const double s = best_of(reps, [&] {
      a = enumerate_quandle_colourings_serial(w, q, 0, false, serial).size();
    });
    const double p = best_of(reps, [&] {
      b = enumerate_quandle_colourings_parallel(w, q, 0, false, parallel).size();
    });
    row("open quandle colourings conway / M11", s, p, a == b);
  }

  for (auto [knot, group] : {std::pair{"fig8", "PSL2_7"}, std::pair{"trefoil_left", "A7"}}) {
    const auto op = build_yb_operator(groups.get(group, ""), true);
    const auto braid = *load_fixture(knot).source().braid;
    RingElement a, b;
    const double s = best_of(reps, [&] { a = closed_trace_serial(braid, op, serial); });
    const double p = best_of(reps, [&] { b = closed_trace_parallel(braid, op, parallel); });
    row(std::string("closed Yang-Baxter trace ") + knot + " / " + group, s, p, a == b);
  }
  return 0;
}
