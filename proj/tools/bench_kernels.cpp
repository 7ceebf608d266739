// Benchmark of the numeric kernels: serial reference vs OpenMP-parallel
// drivers on identical work. Outputs must agree bit for bit (per-index RNG
// substreams and index-ordered collection); timings are wall-clock.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include <CLI11.hpp>

#include "crgeo/construction.hpp"
#include "crgeo/hypersurface.hpp"
#include "crgeo/verify.hpp"

using namespace crgeo;
namespace cons = crgeo::construction;

namespace {

double now() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <typename Fn>
auto timed(const char* name, ExecMode mode, const Fn& fn, double& seconds) {
  double t0 = now();
  auto result = fn(mode);
  seconds = now() - t0;
  std::printf("  %-22s %-8s %10.3f ms\n", name,
              mode == ExecMode::serial ? "serial" : "parallel", seconds * 1e3);
  return result;
}

bool equal_c2(const std::vector<C2>& a, const std::vector<C2>& b) {
  if (a.size() != b.size()) return false;
  return std::memcmp(a.data(), b.data(), a.size() * sizeof(C2)) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compare serial and parallel numeric kernels on identical work"};
  std::size_t count = 200000;
  uint64_t seed = 1729;
  double pitch = 1e-2;
  app.add_option("--count", count, "points / attempts per kernel");
  app.add_option("--seed", seed, "base seed");
  app.add_option("--pitch", pitch, "trace-grid pitch");
  CLI11_PARSE(app, argc, argv);

  std::printf("threads available to the parallel driver: %d\n",
              thread_count(ExecMode::parallel));
  bool all_equal = true;
  double ts = 0.0, tp = 0.0;
  auto speedup = [&]() { return tp > 0.0 ? ts / tp : 0.0; };

  {
    auto fn = [&](ExecMode m) { return sample_unit_sphere(count, seed, m); };
    auto a = timed("sphere sampler", ExecMode::serial, fn, ts);
    auto b = timed("sphere sampler", ExecMode::parallel, fn, tp);
    bool eq = equal_c2(a, b);
    all_equal &= eq;
    std::printf("  -> outputs %s, speedup %.2fx\n", eq ? "identical" : "DIFFER", speedup());
  }

  BlowupTower tower = cons::origin_tower();
  RealHypersurface m(cons::model_rho(), cons::kRoot);
  auto total = proper_transform(m, tower, cons::kU2p);
  SurfaceEval surf(total.total.rho);

  std::vector<C2> zero_pts;
  {
    ZeroSetOptions zopt;
    zopt.box.v = {Interval{-1.5, 1.5}, Interval{-1.5, 1.5}, Interval{-3.0, 3.0},
                  Interval{-3.0, 3.0}};
    zopt.attempts = count;
    zopt.seed = seed;
    auto fn = [&](ExecMode mode) { return sample_zero_set(surf, zopt, mode); };
    auto a = timed("zero-set sampler", ExecMode::serial, fn, ts);
    auto b = timed("zero-set sampler", ExecMode::parallel, fn, tp);
    bool eq = a.size() == b.size();
    if (eq)
      eq = std::memcmp(a.data(), b.data(), a.size() * sizeof(SurfaceSample)) == 0;
    all_equal &= eq;
    std::printf("  -> %zu samples, outputs %s, speedup %.2fx\n", a.size(),
                eq ? "identical" : "DIFFER", speedup());
    zero_pts.reserve(a.size());
    for (const auto& s : a) zero_pts.push_back(s.z);
  }

  {
    auto fn = [&](ExecMode mode) { return levi_scan(surf, zero_pts, mode); };
    auto a = timed("Levi-form scan", ExecMode::serial, fn, ts);
    auto b = timed("Levi-form scan", ExecMode::parallel, fn, tp);
    bool eq = a.size() == b.size() &&
              std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
    all_equal &= eq;
    std::printf("  -> outputs %s, speedup %.2fx\n", eq ? "identical" : "DIFFER", speedup());
  }

  {
    TraceOptions topt;
    topt.pitch = pitch;
    auto fn = [&](ExecMode mode) {
      topt.mode = mode;
      return exceptional_trace(total.reduced.expr, 0, topt);
    };
    auto a = timed("trace grid scan", ExecMode::serial, fn, ts);
    auto b = timed("trace grid scan", ExecMode::parallel, fn, tp);
    bool eq = a.grid.detected == b.grid.detected;
    all_equal &= eq;
    std::printf("  -> %zu x %zu grid, outputs %s, speedup %.2fx\n", a.grid.n, a.grid.n,
                eq ? "identical" : "DIFFER", speedup());
  }

  std::printf("%s\n", all_equal ? "all kernel outputs identical across modes"
                                : "KERNEL OUTPUT MISMATCH");
  return all_equal ? 0 : 1;
}
