// Compares the serial reference kernels against the OpenMP versions.

#include <chrono>
#include <cstdio>
#include <functional>

#include "suncs/coherent.hpp"
#include "suncs/young.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn) {
  const auto t0 = Clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-36s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP disabled)\n");
#endif
  std::printf("%-36s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  {
    const suncs::AlgebraBasis basis = suncs::gellmann(5);
    const suncs::StructureConstants f = suncs::structure_constants(basis);
    const suncs::WedgeRep rep = suncs::wedge_rep(basis, 2);
    double rs = 0.0, rp = 0.0;
    const double ts = time_ms([&] {
      rs = suncs::closure_residual(rep.matrices, f, suncs::Exec::serial);
    });
    const double tp = time_ms([&] {
      rp = suncs::closure_residual(rep.matrices, f, suncs::Exec::parallel);
    });
    row("closure sweep SU(5) wedge-2", ts, tp);
    if (rs != rp) std::printf("  WARNING: serial/parallel residuals differ\n");
  }

  {
    const suncs::SectorBasis sector(suncs::IrrepLabel{3, {1, 1}});
    constexpr std::uint64_t kSamples = 100000;
    Eigen::MatrixXcd ref, lane_s, lane_p;
    const double tr = time_ms([&] {
      ref = suncs::identity_accumulator_reference(sector, kSamples, 42);
    });
    const double ts = time_ms([&] {
      lane_s = suncs::identity_accumulator(sector, kSamples, 42,
                                           suncs::Exec::serial);
    });
    const double tp = time_ms([&] {
      lane_p = suncs::identity_accumulator(sector, kSamples, 42,
                                           suncs::Exec::parallel);
    });
    row("identity MC SU(3) (1,1), 1e5", ts, tp);
    std::printf("  plain reference loop: %.1f ms\n", tr);
    const double drift = (ref - lane_p).cwiseAbs().maxCoeff();
    const double lane_diff = (lane_s - lane_p).cwiseAbs().maxCoeff();
    std::printf("  lane-vs-reference max diff %.2e, lane serial-vs-parallel %.2e\n",
                drift, lane_diff);
  }

  {
    const suncs::SectorBasis sector(suncs::IrrepLabel{3, {2, 2}});
    int rank_s = 0, rank_p = 0;
    const double ts = time_ms([&] {
      rank_s = suncs::irrep_subspace_dimension(sector, suncs::Exec::serial);
    });
    const double tp = time_ms([&] {
      rank_p = suncs::irrep_subspace_dimension(sector, suncs::Exec::parallel);
    });
    row("irrep span SU(3) (2,2)", ts, tp);
    if (rank_s != rank_p) std::printf("  WARNING: ranks differ\n");
  }

  return 0;
}
