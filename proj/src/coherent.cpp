#include "suncs/coherent.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "suncs/combinat.hpp"

namespace suncs {

Frame validate_frame(int n, const Eigen::MatrixXcd& rows) {
  if (n < 2) throw std::domain_error("group rank too small");
  if (rows.rows() != n - 1 || rows.cols() != n)
    throw std::domain_error("frame must have N-1 rows of length N");
  const Eigen::MatrixXcd gram = rows * rows.adjoint();
  const double residual =
      (gram - Eigen::MatrixXcd::Identity(n - 1, n - 1)).cwiseAbs().maxCoeff();
  if (residual > 1e-10) throw std::domain_error("frame not orthonormal");
  return Frame{n, rows, residual};
}

namespace {

// determinant of the beta x beta block frame.rows(0..beta-1, cols); direct
// formulas up to 3x3 keep the Monte-Carlo hot path allocation-free
Complex subset_minor(const Eigen::MatrixXcd& rows, const int* cols, int beta) {
  switch (beta) {
    case 1:
      return rows(0, cols[0]);
    case 2:
      return rows(0, cols[0]) * rows(1, cols[1]) -
             rows(0, cols[1]) * rows(1, cols[0]);
    case 3:
      return rows(0, cols[0]) *
                 (rows(1, cols[1]) * rows(2, cols[2]) -
                  rows(1, cols[2]) * rows(2, cols[1])) -
             rows(0, cols[1]) *
                 (rows(1, cols[0]) * rows(2, cols[2]) -
                  rows(1, cols[2]) * rows(2, cols[0])) +
             rows(0, cols[2]) *
                 (rows(1, cols[0]) * rows(2, cols[1]) -
                  rows(1, cols[1]) * rows(2, cols[0]));
    default: {
      Eigen::MatrixXcd minor(beta, beta);
      for (int r = 0; r < beta; ++r)
        for (int c = 0; c < beta; ++c) minor(r, c) = rows(r, cols[c]);
      return minor.determinant();
    }
  }
}

}  // namespace

WedgeCoordinates wedge_coordinates(const Frame& frame) {
  const int n = frame.n;
  if (n > 33)
    throw std::domain_error("group rank too large for wedge coordinates");
  WedgeCoordinates wc;
  wc.n = n;
  wc.w.reserve(n - 1);
  int cols[32];
  for (int beta = 1; beta <= n - 1; ++beta) {
    Eigen::VectorXcd w(static_cast<Eigen::Index>(binomial(n, beta)));
    const double scale = 1.0 / std::sqrt(factorial_d(beta));
    for (int i = 0; i < beta; ++i) cols[i] = i;  // 0-based subset, lex order
    Eigen::Index s = 0;
    while (true) {
      w[s++] = subset_minor(frame.rows, cols, beta) * scale;
      int i = beta - 1;
      while (i >= 0 && cols[i] == n - (beta - i)) --i;
      if (i < 0) break;
      ++cols[i];
      for (int j = i + 1; j < beta; ++j) cols[j] = cols[j - 1] + 1;
    }
    wc.w.push_back(std::move(w));
  }
  return wc;
}

double WedgeCoordinates::norm_sum(int beta) const {
  const double bf = factorial_d(beta);
  return bf * w[beta - 1].squaredNorm();
}

Eigen::VectorXcd dual_vector(const Frame& frame) {
  const int n = frame.n;
  Eigen::VectorXcd dual(n);
  Eigen::MatrixXcd minor(n - 1, n - 1);
  for (int j = 0; j < n; ++j) {
    int cc = 0;
    for (int c = 0; c < n; ++c) {
      if (c == j) continue;
      minor.col(cc++) = frame.rows.col(c);
    }
    const double sign = ((n - 1 + j) % 2 == 0) ? 1.0 : -1.0;
    dual[j] = sign * minor.determinant();
  }
  return dual;
}

Eigen::MatrixXcd complete_unitary(const Frame& frame) {
  const int n = frame.n;
  Eigen::MatrixXcd u(n, n);
  u.topRows(n - 1) = frame.rows;
  u.row(n - 1) = dual_vector(frame).conjugate().transpose();
  return u;
}

FockVector coherent_vector(const Frame& frame, const SectorBasis& sector) {
  if (frame.n != sector.n())
    throw std::domain_error("frame and sector rank mismatch");
  const WedgeCoordinates wc = wedge_coordinates(frame);

  // mode coefficient of the generating exponent: z[1,beta].adag[beta]
  // collapses to beta! * w_beta(I) on canonical modes
  std::vector<Complex> coeff(sector.num_modes());
  for (int m = 0; m < sector.num_modes(); ++m) {
    const Mode& mode = sector.mode(m);
    const double bf = factorial_d(mode.alpha);
    coeff[m] =
        bf * wc.w[mode.alpha - 1][m - sector.family_offset(mode.alpha)];
  }

  FockVector out;
  out.basis = &sector;
  out.amplitudes = Eigen::VectorXcd::Zero(sector.dim());
  for (int s = 0; s < sector.dim(); ++s) {
    const auto& occ = sector.state(s);
    Complex amp(1.0, 0.0);
    for (int m = 0; m < sector.num_modes(); ++m) {
      const int k = occ[m];
      if (k == 0) continue;
      Complex p(1.0, 0.0);
      for (int i = 0; i < k; ++i) p *= coeff[m];
      amp *= p / std::sqrt(factorial_d(k));
    }
    out.amplitudes[s] = amp;
  }
  return out;
}

Complex overlap(const Frame& a, const Frame& b, const SectorBasis& sector) {
  const FockVector va = coherent_vector(a, sector);
  const FockVector vb = coherent_vector(b, sector);
  return va.amplitudes.dot(vb.amplitudes);  // Eigen dot conjugates the left
}

Eigen::MatrixXcd haar_unitary(int n, SubstreamRng& rng) {
  Eigen::MatrixXcd g(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g(r, c) = rng.complex_gaussian();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    const double m = std::abs(d);
    const Complex phase = (m == 0.0) ? Complex(1.0, 0.0) : d / m;
    q.col(i) *= phase;
  }
  return q;
}

Frame haar_frame(int n, SubstreamRng& rng) {
  if (n < 2) throw std::domain_error("group rank too small");
  const Eigen::MatrixXcd u = haar_unitary(n, rng);
  return validate_frame(n, u.topRows(n - 1));
}

double covariance_residual(const Frame& frame, const Eigen::VectorXd& theta,
                           const AlgebraBasis& basis,
                           const std::vector<Matrix>& dense_generators,
                           const SectorBasis& sector) {
  const Eigen::MatrixXcd u = group_element(basis.generators, theta);
  const Frame rotated = validate_frame(frame.n, frame.rows * u.transpose());

  const FockVector before = coherent_vector(frame, sector);
  const FockVector after = coherent_vector(rotated, sector);
  const Eigen::MatrixXcd uq = group_element(dense_generators, theta);

  const Eigen::VectorXcd pushed = uq * before.amplitudes;
  return (after.amplitudes - pushed).norm() / before.amplitudes.norm();
}

double covariance_residual(const Frame& frame, const Eigen::VectorXd& theta,
                           const AlgebraBasis& basis,
                           const std::vector<WedgeRep>& reps,
                           const SectorBasis& sector) {
  std::vector<Matrix> qdense;
  qdense.reserve(basis.generators.size());
  for (const SparseOperator& op : all_generator_ops(sector, reps))
    qdense.push_back(op.dense());
  return covariance_residual(frame, theta, basis, qdense, sector);
}

Eigen::MatrixXcd identity_accumulator_reference(const SectorBasis& sector,
                                                std::uint64_t samples,
                                                std::uint64_t seed) {
  const int dim = sector.dim();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::uint64_t i = 0; i < samples; ++i) {
    SubstreamRng rng(seed, i);
    const Frame frame = haar_frame(sector.n(), rng);
    const Eigen::VectorXcd v = coherent_vector(frame, sector).amplitudes;
    acc.noalias() += v * v.adjoint();
  }
  acc /= static_cast<double>(samples);
  return 0.5 * (acc + Eigen::MatrixXcd(acc.adjoint()));
}

namespace {
constexpr std::uint64_t kMcBlock = 1024;
constexpr int kMcLanes = 32;
}  // namespace

Eigen::MatrixXcd identity_accumulator(const SectorBasis& sector,
                                      std::uint64_t samples, std::uint64_t seed,
                                      Exec exec) {
  const int dim = sector.dim();
  const std::uint64_t blocks = (samples + kMcBlock - 1) / kMcBlock;
  std::vector<Eigen::MatrixXcd> lanes(
      kMcLanes, Eigen::MatrixXcd::Zero(dim, dim));

  const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic) if (par)
  for (int lane = 0; lane < kMcLanes; ++lane) {
    Eigen::MatrixXcd& acc = lanes[lane];
    for (std::uint64_t b = lane; b < blocks; b += kMcLanes) {
      const std::uint64_t lo = b * kMcBlock;
      const std::uint64_t hi = std::min(samples, lo + kMcBlock);
      for (std::uint64_t i = lo; i < hi; ++i) {
        SubstreamRng rng(seed, i);
        const Frame frame = haar_frame(sector.n(), rng);
        const Eigen::VectorXcd v = coherent_vector(frame, sector).amplitudes;
        acc.noalias() += v * v.adjoint();
      }
    }
  }

  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
  for (int lane = 0; lane < kMcLanes; ++lane) acc += lanes[lane];
  acc /= static_cast<double>(samples);
  return 0.5 * (acc + Eigen::MatrixXcd(acc.adjoint()));
}

MCIdentityReport identity_mc(const SectorBasis& sector, std::uint64_t samples,
                             std::uint64_t seed, Exec exec) {
  if (samples < 100) throw std::invalid_argument("insufficient samples");
  if (sector.dim() > 500)
    throw std::runtime_error("sector too large for dense eigendecomposition");

  const auto t0 = std::chrono::steady_clock::now();
  const Eigen::MatrixXcd estimator =
      identity_accumulator(sector, samples, seed, exec);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(estimator);
  const Eigen::VectorXd ev = es.eigenvalues();  // ascending
  const int dim = static_cast<int>(ev.size());

  MCIdentityReport report;
  report.label = sector.label();
  report.samples = samples;
  report.seed = seed;
  report.eigenvalues = ev;

  // split at the largest spectral gap; the lower group is a zero cluster
  // only when it is negligible against the upper one
  int split = -1;  // last index of the lower group
  double max_gap = -1.0;
  for (int i = 0; i + 1 < dim; ++i) {
    const double gap = ev[i + 1] - ev[i];
    if (gap > max_gap) {
      max_gap = gap;
      split = i;
    }
  }
  bool have_zero_cluster = false;
  if (split >= 0) {
    const double lower_mean = ev.head(split + 1).mean();
    const double upper_mean = ev.tail(dim - split - 1).mean();
    have_zero_cluster = lower_mean < upper_mean / 10.0;
  }
  const int k_begin = have_zero_cluster ? split + 1 : 0;
  report.irrep_dim_estimate = dim - k_begin;
  report.k_cluster_mean = ev.tail(dim - k_begin).mean();
  report.k_cluster_spread = ev[dim - 1] - ev[k_begin];
  report.zero_cluster_max = have_zero_cluster ? ev[split] : 0.0;

  if (have_zero_cluster) {
    double intra = 0.0;
    for (int i = 0; i + 1 < dim; ++i) {
      if (i == split) continue;
      intra = std::max(intra, ev[i + 1] - ev[i]);
    }
    report.gap_ratio = intra > 0.0 ? max_gap / intra
                                   : std::numeric_limits<double>::infinity();
    report.split_ambiguous = report.gap_ratio < 5.0;
  } else {
    report.gap_ratio = 0.0;
    report.split_ambiguous = false;
  }

  const auto t1 = std::chrono::steady_clock::now();
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  return report;
}

nlohmann::json MCIdentityReport::to_json() const {
  nlohmann::json ev = nlohmann::json::array();
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
    ev.push_back(eigenvalues[i]);
  return {{"n", label.n},
          {"c", label.c},
          {"samples", samples},
          {"seed", seed},
          {"eigenvalues", ev},
          {"kClusterMean", k_cluster_mean},
          {"kClusterSpread", k_cluster_spread},
          {"zeroClusterMax", zero_cluster_max},
          {"irrepDimEstimate", irrep_dim_estimate},
          {"splitAmbiguous", split_ambiguous},
          {"gapRatio", gap_ratio},
          {"wallTimeMs", wall_time_ms}};
}

}  // namespace suncs
