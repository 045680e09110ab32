#include <chrono>

#include "suncs/coherent.hpp"
#include "suncs/report.hpp"
#include "suncs/young.hpp"

namespace suncs {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

Check residual_check(const std::string& name, double value, double tolerance,
                     std::string note = {}) {
  return Check{name, value < tolerance, value, tolerance, std::move(note)};
}

std::vector<WedgeRep> all_wedge_reps(const AlgebraBasis& basis) {
  std::vector<WedgeRep> reps;
  reps.reserve(basis.n - 1);
  for (int alpha = 1; alpha <= basis.n - 1; ++alpha)
    reps.push_back(wedge_rep(basis, alpha));
  return reps;
}

}  // namespace

Report cmd_algebra(const RunConfig& config) {
  config.require_n();
  Timer timer;
  Report report;
  report.command = "algebra";
  report.config = config;

  const double tol_comm = config.tol("commutator", 1e-11);
  const double tol_jacobi = config.tol("jacobi", 1e-10);
  const double tol_trace = config.tol("trace_orthogonality", 1e-10);

  const AlgebraBasis basis = gellmann(config.n);
  const StructureConstants f = structure_constants(basis);

  double worst_closure = closure_residual(basis.generators, f);
  double worst_trace = trace_orthogonality_residual(basis.generators);
  nlohmann::json rep_dims = nlohmann::json::array();
  rep_dims.push_back(config.n);
  for (int alpha = 2; alpha <= config.n - 1; ++alpha) {
    const WedgeRep rep = wedge_rep(basis, alpha);
    worst_closure = std::max(worst_closure, closure_residual(rep.matrices, f));
    worst_trace =
        std::max(worst_trace, trace_orthogonality_residual(rep.matrices));
    rep_dims.push_back(rep.dim());
  }

  report.checks.push_back(
      residual_check("maxCommutatorResidual", worst_closure, tol_comm));
  report.checks.push_back(
      residual_check("jacobiResidual", jacobi_residual(f), tol_jacobi));
  report.checks.push_back(
      residual_check("traceOrthogonalityResidual", worst_trace, tol_trace));

  nlohmann::json fjson = nlohmann::json::array();
  for (const auto& [key, val] : f.canonical)
    fjson.push_back({key[0] + 1, key[1] + 1, key[2] + 1, val});
  report.payload = {{"generatorCount", static_cast<int>(basis.generators.size())},
                    {"wedgeRepDims", rep_dims},
                    {"structureConstants", fjson}};
  report.wall_time_ms = timer.ms();
  return report;
}

Report cmd_irrep(const RunConfig& config) {
  config.require_label();
  Timer timer;
  Report report;
  report.command = "irrep";
  report.config = config;

  const double tol_comm = config.tol("commutator", 1e-11);
  const double tol_herm = config.tol("hermiticity", 1e-13);
  const double tol_invariance = config.tol("invariance", 1e-10);
  const double tol_spread = config.tol("casimir_spread", 1e-9);

  const SectorBasis sector(config.label(), config.sector_cap);
  const AlgebraBasis basis = gellmann(config.n);
  const StructureConstants f = structure_constants(basis);
  const std::vector<WedgeRep> reps = all_wedge_reps(basis);
  const std::vector<SparseOperator> q = all_generator_ops(sector, reps);

  double herm = 0.0;
  for (const SparseOperator& op : q)
    herm = std::max(herm, op.hermiticity_residual());
  report.checks.push_back(
      residual_check("generatorHermiticityResidual", herm, tol_herm));
  report.checks.push_back(residual_check(
      "operatorClosureResidual", operator_closure_residual(q, f), tol_comm));

  // Casimir integrality and exact commutation, both structural
  bool exact_integers = true;
  bool exact_commute = true;
  for (int alpha = 1; alpha <= config.n - 1; ++alpha) {
    const SparseOperator cas = casimir_op(sector, alpha);
    const Complex want(static_cast<double>(config.c[alpha - 1]), 0.0);
    const std::size_t expected_nnz =
        config.c[alpha - 1] == 0 ? 0 : static_cast<std::size_t>(sector.dim());
    if (cas.nnz() != expected_nnz) exact_integers = false;
    for (const auto& [key, value] : cas.entries())
      if (key.first != key.second || value != want) exact_integers = false;
    for (const SparseOperator& op : q)
      if (!((op * cas) - (cas * op)).entries().empty()) exact_commute = false;
  }
  report.checks.push_back(Check{"casimirEigenvaluesExact", exact_integers,
                                exact_integers ? 0.0 : 1.0, 0.0, ""});
  report.checks.push_back(Check{"casimirCommutesExactly", exact_commute,
                                exact_commute ? 0.0 : 1.0, 0.0, ""});

  const std::uint64_t weyl = weyl_dimension(sector.label());
  const IrrepSubspace subspace = irrep_subspace(sector);
  report.checks.push_back(Check{"rankMatchesWeylDimension",
                                static_cast<std::uint64_t>(subspace.rank) == weyl &&
                                    !subspace.flagged,
                                static_cast<double>(subspace.rank),
                                static_cast<double>(weyl), ""});
  report.checks.push_back(residual_check(
      "irrepInvarianceResidual", invariance_residual(subspace, q), tol_invariance));
  const auto [spread, mean] = quadratic_casimir_on_subspace(subspace, q);
  report.checks.push_back(
      residual_check("quadraticCasimirSpread", spread, tol_spread));

  report.payload = {{"sectorDim", sector.dim()},
                    {"weylDim", weyl},
                    {"rankDim", subspace.rank},
                    {"rankFlagged", subspace.flagged},
                    {"quadraticCasimirMean", mean}};
  report.wall_time_ms = timer.ms();
  return report;
}

Report cmd_coherent(const RunConfig& config) {
  config.require_label();
  if (config.samples < 100) throw std::invalid_argument("insufficient samples");
  Timer timer;
  Report report;
  report.command = "coherent";
  report.config = config;

  const double tol_wedge = config.tol("wedge_norm", 1e-12);
  const double tol_dual = config.tol("dual_orthogonality", 1e-12);
  const double tol_unitary = config.tol("unitarity", 1e-12);
  const double tol_cov = config.tol("covariance", 1e-9);
  const double tol_member = config.tol("irrep_membership", 1e-10);
  const double tol_self = config.tol("overlap_self", 1e-12);

  const SectorBasis sector(config.label(), config.sector_cap);
  const AlgebraBasis basis = gellmann(config.n);
  const std::vector<WedgeRep> reps = all_wedge_reps(basis);
  std::vector<Matrix> qdense;
  for (const SparseOperator& op : all_generator_ops(sector, reps))
    qdense.push_back(op.dense());

  double worst_wedge = 0.0;
  double worst_dual = 0.0;
  double worst_unitary = 0.0;
  double worst_cov = 0.0;
  double worst_self = 0.0;
  const int dim_algebra = config.n * config.n - 1;
  // covariance needs a matrix exponential per pair; keep that sweep at 100
  const std::uint64_t cov_sweep = std::min<std::uint64_t>(config.samples, 100);
  for (std::uint64_t i = 0; i < config.samples; ++i) {
    SubstreamRng rng(config.seed, i);
    const Frame frame = haar_frame(config.n, rng);
    const WedgeCoordinates wc = wedge_coordinates(frame);
    for (int beta = 1; beta <= config.n - 1; ++beta)
      worst_wedge = std::max(worst_wedge, std::abs(wc.norm_sum(beta) - 1.0));
    const Eigen::VectorXcd dual = dual_vector(frame);
    for (int row = 0; row < config.n - 1; ++row)
      worst_dual = std::max(
          worst_dual,
          std::abs(frame.rows.row(row).transpose().cwiseProduct(dual).sum()));
    const Eigen::MatrixXcd u = complete_unitary(frame);
    const double unit_res =
        (u * u.adjoint() - Eigen::MatrixXcd::Identity(config.n, config.n))
            .cwiseAbs()
            .maxCoeff();
    const double det_res = std::abs(std::abs(u.determinant()) - 1.0);
    worst_unitary = std::max(worst_unitary, std::max(unit_res, det_res));

    if (i < cov_sweep) {
      Eigen::VectorXd theta(dim_algebra);
      for (int a = 0; a < dim_algebra; ++a)
        theta[a] = 2.0 * rng.uniform01() - 1.0;
      worst_cov = std::max(
          worst_cov, covariance_residual(frame, theta, basis, qdense, sector));

      const FockVector v = coherent_vector(frame, sector);
      const Complex self = overlap(frame, frame, sector);
      worst_self =
          std::max(worst_self,
                   std::abs(self - Complex(v.amplitudes.squaredNorm(), 0.0)) /
                       std::max(1.0, v.amplitudes.squaredNorm()));
    }
  }

  report.checks.push_back(
      residual_check("maxWedgeNormResidual", worst_wedge, tol_wedge));
  report.checks.push_back(
      residual_check("maxDualOrthogonalityResidual", worst_dual, tol_dual));
  report.checks.push_back(
      residual_check("maxUnitarityResidual", worst_unitary, tol_unitary));
  report.checks.push_back(
      residual_check("maxCovarianceResidual", worst_cov, tol_cov));
  report.checks.push_back(
      residual_check("overlapSelfTestResidual", worst_self, tol_self));

  // membership needs the symmetrizer sweep; guard against huge diagrams
  const YoungDiagram diagram = young_diagram(sector.label());
  if (diagram.total_boxes <= 8) {
    const IrrepSubspace subspace = irrep_subspace(sector);
    double worst_member = 0.0;
    for (std::uint64_t i = 0; i < std::min<std::uint64_t>(config.samples, 32); ++i) {
      SubstreamRng rng(config.seed ^ 0x5eedULL, i);
      const Frame frame = haar_frame(config.n, rng);
      const Eigen::VectorXcd v = coherent_vector(frame, sector).amplitudes;
      const Eigen::VectorXcd proj =
          subspace.orthonormal * (subspace.orthonormal.adjoint() * v);
      worst_member = std::max(worst_member, (v - proj).norm() / v.norm());
    }
    report.checks.push_back(residual_check("maxIrrepMembershipResidual",
                                           worst_member, tol_member));
  }

  report.payload = {{"sectorDim", sector.dim()},
                    {"frameSweep", config.samples}};
  report.wall_time_ms = timer.ms();
  return report;
}

Report cmd_identity(const RunConfig& config) {
  config.require_label();
  if (config.samples < 100) throw std::invalid_argument("insufficient samples");
  Timer timer;
  Report report;
  report.command = "identity";
  report.config = config;

  const double tol_psd = config.tol("psd_floor", 1e-10);
  const double tol_spread = config.tol("cluster_spread", 0.02);
  const double zero_fraction = config.tol("zero_cluster_fraction", 0.02);

  const SectorBasis sector(config.label(), config.sector_cap);
  const MCIdentityReport mc = identity_mc(sector, config.samples, config.seed);

  const double min_eig = mc.eigenvalues.size() ? mc.eigenvalues[0] : 0.0;
  report.checks.push_back(Check{"estimatorPositiveSemidefinite",
                                min_eig >= -tol_psd, min_eig, -tol_psd, ""});

  const std::uint64_t weyl = weyl_dimension(sector.label());
  report.checks.push_back(Check{"nonzeroClusterMatchesWeylDimension",
                                static_cast<std::uint64_t>(mc.irrep_dim_estimate) == weyl,
                                static_cast<double>(mc.irrep_dim_estimate),
                                static_cast<double>(weyl), ""});
  report.checks.push_back(Check{"clusterSplitUnambiguous", !mc.split_ambiguous,
                                mc.gap_ratio, 5.0, ""});
  if (mc.irrep_dim_estimate < sector.dim()) {
    report.checks.push_back(residual_check(
        "zeroClusterMaxOverKMean", mc.zero_cluster_max / mc.k_cluster_mean,
        zero_fraction));
  } else {
    report.checks.push_back(residual_check(
        "kClusterSpreadOverMean", mc.k_cluster_spread / mc.k_cluster_mean,
        tol_spread));
  }

  report.payload = mc.to_json();
  report.wall_time_ms = timer.ms();
  return report;
}

}  // namespace suncs
