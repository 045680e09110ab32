#include "suncs/young.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "suncs/combinat.hpp"

namespace suncs {

YoungDiagram young_diagram(const IrrepLabel& label) {
  label.validate();
  YoungDiagram d;
  d.label = label;
  const int n = label.n;
  for (int h = 1; h <= n - 1; ++h) {
    int len = 0;
    for (int beta = h; beta <= n - 1; ++beta) len += label.c[beta - 1];
    if (len == 0) break;  // rows are nonincreasing, so all later rows vanish
    d.row_lengths.push_back(len);
  }
  for (int beta = n - 1; beta >= 1; --beta)
    for (int copy = 0; copy < label.c[beta - 1]; ++copy)
      d.col_heights.push_back(beta);
  d.total_boxes = label.total_boxes();
  long long check = 0;
  for (int len : d.row_lengths) check += len;
  if (check != d.total_boxes)
    throw std::runtime_error("young diagram bookkeeping failed");
  return d;
}

MonomialTerms monomial_terms(const YoungDiagram& diagram,
                             const LabeledMonomial& monomial) {
  if (static_cast<int>(monomial.labels.size()) != diagram.rows())
    throw std::domain_error("monomial row count does not match diagram");
  std::vector<int> flat;
  flat.reserve(diagram.total_boxes);
  for (int h = 0; h < diagram.rows(); ++h) {
    if (static_cast<int>(monomial.labels[h].size()) != diagram.row_lengths[h])
      throw std::domain_error("monomial row length does not match diagram");
    for (int v : monomial.labels[h]) {
      if (v < 1 || v > diagram.label.n)
        throw std::domain_error("box value out of range");
      flat.push_back(v);
    }
  }
  return {{flat, 1}};
}

MonomialTerms symmetrize_rows(const YoungDiagram& diagram,
                              const MonomialTerms& terms) {
  MonomialTerms current = terms;
  int offset = 0;
  for (int h = 0; h < diagram.rows(); ++h) {
    const int len = diagram.row_lengths[h];
    MonomialTerms next;
    for_each_permutation_with_sign(
        len, [&](const std::vector<int>& p, int /*sign*/) {
          for (const auto& [assignment, coeff] : current) {
            std::vector<int> permuted = assignment;
            for (int v = 0; v < len; ++v)
              permuted[offset + v] = assignment[offset + p[v]];
            next[permuted] += coeff;
          }
        });
    current = std::move(next);
    offset += len;
  }
  return current;
}

FockVector terms_to_vector(const YoungDiagram& diagram,
                           const MonomialTerms& terms,
                           const SectorBasis& sector) {
  if (!(diagram.label.n == sector.label().n && diagram.label.c == sector.label().c))
    throw std::domain_error("diagram label does not match sector");
  // row-major offsets of each row
  std::vector<int> row_offset(diagram.rows(), 0);
  for (int h = 1; h < diagram.rows(); ++h)
    row_offset[h] = row_offset[h - 1] + diagram.row_lengths[h - 1];

  FockVector out;
  out.basis = &sector;
  out.amplitudes = Eigen::VectorXcd::Zero(sector.dim());

  std::vector<std::uint16_t> occ(sector.num_modes());
  for (const auto& [assignment, coeff] : terms) {
    if (coeff == 0) continue;
    std::fill(occ.begin(), occ.end(), 0);
    int sign = 1;
    bool zero = false;
    for (int v = 0; v < diagram.cols() && !zero; ++v) {
      const int height = diagram.col_heights[v];
      std::vector<int> column(height);
      for (int h = 0; h < height; ++h)
        column[h] = assignment[row_offset[h] + v];
      const int s = sort_with_sign(column);
      if (s == 0) {
        zero = true;  // repeated value within a column
        break;
      }
      sign *= s;
      ++occ[sector.mode_index(height, column)];
    }
    if (zero) continue;
    const int idx = sector.index_of(occ);
    if (idx < 0) throw std::runtime_error("monomial left the sector");
    double amp = static_cast<double>(coeff) * sign;
    for (std::uint16_t k : occ)
      if (k > 1) amp *= std::sqrt(factorial_d(k));
    out.amplitudes[idx] += amp;
  }
  return out;
}

FockVector irrep_basis_vector(const LabeledMonomial& monomial,
                              const SectorBasis& sector) {
  const YoungDiagram diagram = young_diagram(sector.label());
  return terms_to_vector(diagram,
                         symmetrize_rows(diagram, monomial_terms(diagram, monomial)),
                         sector);
}

std::uint64_t weyl_dimension(const IrrepLabel& label) {
  const YoungDiagram d = young_diagram(label);
  if (d.rows() == 0) return 1;  // trivial representation
  // prime-exponent bookkeeping keeps the hook-content quotient exact even
  // when the raw products overflow
  std::map<int, long long> exponents;
  auto accumulate = [&](int value, long long direction) {
    for (int p = 2; p * p <= value; ++p)
      while (value % p == 0) {
        exponents[p] += direction;
        value /= p;
      }
    if (value > 1) exponents[value] += direction;
  };
  for (int h = 0; h < d.rows(); ++h) {
    for (int v = 0; v < d.row_lengths[h]; ++v) {
      const int content = label.n + v - h;
      int below = 0;
      for (int h2 = h + 1; h2 < d.rows(); ++h2)
        if (d.row_lengths[h2] > v) ++below;
      const int hook = (d.row_lengths[h] - v - 1) + below + 1;
      accumulate(content, +1);
      accumulate(hook, -1);
    }
  }
  unsigned __int128 dim = 1;
  for (const auto& [p, e] : exponents) {
    if (e < 0) throw std::runtime_error("hook-content product is not integral");
    for (long long i = 0; i < e; ++i) {
      dim *= static_cast<unsigned>(p);
      if (dim > static_cast<unsigned __int128>(UINT64_MAX))
        throw std::runtime_error("representation dimension overflows");
    }
  }
  return static_cast<std::uint64_t>(dim);
}

IrrepSubspace irrep_subspace(const SectorBasis& sector, Exec exec) {
  const IrrepLabel& label = sector.label();
  const YoungDiagram diagram = young_diagram(label);
  const long long boxes = diagram.total_boxes;
  if (boxes > 16) throw std::runtime_error("too many boxes for assignment sweep");
  long long assignments = 1;
  for (long long b = 0; b < boxes; ++b) {
    assignments *= label.n;
    if (assignments > 2'000'000)
      throw std::runtime_error("too many label assignments");
  }
  double sweep_cost = static_cast<double>(assignments);
  for (int len : diagram.row_lengths) sweep_cost *= factorial_d(len);
  if (sweep_cost > 2e8)
    throw std::runtime_error("irrep subspace sweep too large");

  Eigen::MatrixXcd span(sector.dim(), std::max<long long>(assignments, 1));
  span.setZero();

  const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic, 16) if (par)
  for (long long k = 0; k < assignments; ++k) {
    LabeledMonomial monomial;
    monomial.labels.resize(diagram.rows());
    long long rem = k;
    for (int h = 0; h < diagram.rows(); ++h) {
      monomial.labels[h].resize(diagram.row_lengths[h]);
      for (int v = 0; v < diagram.row_lengths[h]; ++v) {
        monomial.labels[h][v] = static_cast<int>(rem % label.n) + 1;
        rem /= label.n;
      }
    }
    span.col(k) = irrep_basis_vector(monomial, sector).amplitudes;
  }

  IrrepSubspace out;
  // tall orientation so the QR preconditioner reduces the work to rank^3
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      span.adjoint(), Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv[0] : 0.0;
  const double tol = 1e-8;
  const double cut = tol * smax;
  int rank = 0;
  bool flagged = false;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > cut) ++rank;
    if (sv[i] > cut / 10.0 && sv[i] < cut * 10.0) flagged = true;
  }
  out.rank = rank;
  out.flagged = flagged;
  out.singular_values = sv;
  out.orthonormal = svd.matrixV().leftCols(rank);
  return out;
}

int irrep_subspace_dimension(const SectorBasis& sector, Exec exec) {
  return irrep_subspace(sector, exec).rank;
}

double invariance_residual(const IrrepSubspace& subspace,
                           const std::vector<SparseOperator>& ops) {
  const Eigen::MatrixXcd& u = subspace.orthonormal;
  double worst = 0.0;
  for (const SparseOperator& q : ops) {
    Eigen::MatrixXcd qu(u.rows(), u.cols());
    for (Eigen::Index c = 0; c < u.cols(); ++c) qu.col(c) = q.apply(u.col(c));
    const Eigen::MatrixXcd residual = qu - u * (u.adjoint() * qu);
    worst = std::max(worst, residual.cwiseAbs().maxCoeff());
  }
  return worst;
}

std::pair<double, double> quadratic_casimir_on_subspace(
    const IrrepSubspace& subspace, const std::vector<SparseOperator>& ops) {
  const Eigen::MatrixXcd& u = subspace.orthonormal;
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(u.cols(), u.cols());
  for (const SparseOperator& q : ops) {
    Eigen::MatrixXcd qu(u.rows(), u.cols());
    for (Eigen::Index c = 0; c < u.cols(); ++c) qu.col(c) = q.apply(u.col(c));
    acc += qu.adjoint() * qu;  // u' Q Q u with Q Hermitian
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(acc);
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double spread = ev.size() ? ev[ev.size() - 1] - ev[0] : 0.0;
  const double mean = ev.size() ? ev.mean() : 0.0;
  return {spread, mean};
}

}  // namespace suncs
