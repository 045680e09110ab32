// Serial reference vs OpenMP kernels.

#include "doctest.h"
#include "suncs/coherent.hpp"
#include "suncs/young.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace suncs;

TEST_CASE("lane accumulator is bit-identical across policies and threads") {
  const SectorBasis sector(IrrepLabel{3, {1, 1}});
  const std::uint64_t samples = 4096;
  const Eigen::MatrixXcd serial =
      identity_accumulator(sector, samples, 7, Exec::serial);
  const Eigen::MatrixXcd parallel =
      identity_accumulator(sector, samples, 7, Exec::parallel);
  CHECK((serial - parallel).cwiseAbs().maxCoeff() == 0.0);

#ifdef _OPENMP
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const Eigen::MatrixXcd one_thread =
      identity_accumulator(sector, samples, 7, Exec::parallel);
  omp_set_num_threads(saved);
  CHECK((one_thread - parallel).cwiseAbs().maxCoeff() == 0.0);
#endif
}

TEST_CASE("lane accumulator tracks the plain reference loop") {
  const SectorBasis sector(IrrepLabel{2, {1}});
  const std::uint64_t samples = 3000;
  const Eigen::MatrixXcd reference =
      identity_accumulator_reference(sector, samples, 11);
  const Eigen::MatrixXcd lanes =
      identity_accumulator(sector, samples, 11, Exec::parallel);
  // same summands, different association order
  CHECK((reference - lanes).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("generator construction is policy independent") {
  const AlgebraBasis basis = gellmann(3);
  std::vector<WedgeRep> reps;
  for (int alpha = 1; alpha <= 2; ++alpha)
    reps.push_back(wedge_rep(basis, alpha));
  const SectorBasis sector(IrrepLabel{3, {2, 1}});
  const auto serial = all_generator_ops(sector, reps, Exec::serial);
  const auto parallel = all_generator_ops(sector, reps, Exec::parallel);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t a = 0; a < serial.size(); ++a)
    CHECK((serial[a] - parallel[a]).entries().empty());
}

TEST_CASE("irrep span rank is policy independent") {
  const SectorBasis sector(IrrepLabel{3, {1, 1}});
  const IrrepSubspace serial = irrep_subspace(sector, Exec::serial);
  const IrrepSubspace parallel = irrep_subspace(sector, Exec::parallel);
  CHECK(serial.rank == parallel.rank);
  CHECK((serial.singular_values - parallel.singular_values)
            .cwiseAbs()
            .maxCoeff() == 0.0);
}

TEST_CASE("identity_mc report is reproducible") {
  const SectorBasis sector(IrrepLabel{2, {2}});
  const MCIdentityReport a = identity_mc(sector, 2000, 123);
  const MCIdentityReport b = identity_mc(sector, 2000, 123);
  CHECK((a.eigenvalues - b.eigenvalues).cwiseAbs().maxCoeff() == 0.0);
  nlohmann::json ja = a.to_json();
  nlohmann::json jb = b.to_json();
  ja.erase("wallTimeMs");
  jb.erase("wallTimeMs");
  CHECK(ja.dump() == jb.dump());
}
