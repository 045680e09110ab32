#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "json.hpp"
#include "suncs/algebra.hpp"
#include "suncs/exec.hpp"
#include "suncs/fock.hpp"
#include "suncs/rng.hpp"

namespace suncs {

// N-1 orthonormal complex N-vectors coordinatizing the SU(N) manifold.
struct Frame {
  int n = 0;
  Eigen::MatrixXcd rows;  // (n-1) x n
  double gram_residual = 0.0;
};

// Throws "frame not orthonormal" above a Gram residual of 1e-10.
Frame validate_frame(int n, const Eigen::MatrixXcd& rows);

// w_beta(I) = det(rows 1..beta restricted to columns I) / sqrt(beta!),
// aligned with canonical_modes(n, beta).
struct WedgeCoordinates {
  int n = 0;
  std::vector<Eigen::VectorXcd> w;  // index beta-1

  // sum_I beta! |w_beta(I)|^2, equal to 1 for every valid frame
  double norm_sum(int beta) const;
};

WedgeCoordinates wedge_coordinates(const Frame& frame);

// Unit-normalized dual of the top-degree wedge (generalized cross product of
// the frame rows); orthogonal to every row.
Eigen::VectorXcd dual_vector(const Frame& frame);

// Frame rows stacked over the conjugated dual: an N x N special unitary.
Eigen::MatrixXcd complete_unitary(const Frame& frame);

// Sector restriction of exp(sum_beta z[1,beta].adag[beta]) |0>, unnormalized.
FockVector coherent_vector(const Frame& frame, const SectorBasis& sector);

Complex overlap(const Frame& a, const Frame& b, const SectorBasis& sector);

// First N-1 rows of a Haar unitary: QR of a complex Gaussian matrix with the
// R-diagonal phase fix.
Frame haar_frame(int n, SubstreamRng& rng);
Eigen::MatrixXcd haar_unitary(int n, SubstreamRng& rng);

// || |z'> - exp(i theta.Q) |z> || / || |z> ||, z' rows = rows * exp(i theta.t)^T.
// Also checks that the transformed frame is still orthonormal.
double covariance_residual(const Frame& frame, const Eigen::VectorXd& theta,
                           const AlgebraBasis& basis,
                           const std::vector<WedgeRep>& reps,
                           const SectorBasis& sector);

// same, with the sector generators pre-densified by the caller
double covariance_residual(const Frame& frame, const Eigen::VectorXd& theta,
                           const AlgebraBasis& basis,
                           const std::vector<Matrix>& dense_generators,
                           const SectorBasis& sector);

struct MCIdentityReport {
  IrrepLabel label;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  Eigen::VectorXd eigenvalues;  // ascending
  double k_cluster_mean = 0.0;
  double k_cluster_spread = 0.0;  // max - min of the nonzero cluster
  double zero_cluster_max = 0.0;  // 0 when the zero cluster is empty
  int irrep_dim_estimate = 0;
  bool split_ambiguous = false;
  double gap_ratio = 0.0;
  double wall_time_ms = 0.0;

  nlohmann::json to_json() const;
};

// Haar average of |z><z| over `samples` frames, symmetrized; spectrum split
// at the largest gap. Sample i draws from substream (seed, i), accumulation
// runs over fixed lanes merged in lane order, so the result is bit-identical
// for any thread count and matches the serial policy.
MCIdentityReport identity_mc(const SectorBasis& sector, std::uint64_t samples,
                             std::uint64_t seed, Exec exec = Exec::parallel);

// Plain ordered-loop accumulator (the reference the lane version is tested
// against); returns the symmetrized estimator matrix.
Eigen::MatrixXcd identity_accumulator_reference(const SectorBasis& sector,
                                                std::uint64_t samples,
                                                std::uint64_t seed);

// Lane-structured accumulator shared by both execution policies.
Eigen::MatrixXcd identity_accumulator(const SectorBasis& sector,
                                      std::uint64_t samples, std::uint64_t seed,
                                      Exec exec);

}  // namespace suncs
