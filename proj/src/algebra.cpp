#include "suncs/algebra.hpp"

#include <cmath>
#include <stdexcept>

#include "suncs/combinat.hpp"

namespace suncs {

AlgebraBasis gellmann(int n) {
  if (n < 2) throw std::domain_error("group rank too small");
  AlgebraBasis basis;
  basis.n = n;
  basis.generators.reserve(static_cast<std::size_t>(n) * n - 1);
  const Complex I(0.0, 1.0);
  for (int k = 2; k <= n; ++k) {
    for (int i = 1; i < k; ++i) {
      Matrix sym = Matrix::Zero(n, n);
      sym(i - 1, k - 1) = 0.5;
      sym(k - 1, i - 1) = 0.5;
      basis.generators.push_back(sym);
      Matrix asym = Matrix::Zero(n, n);
      asym(i - 1, k - 1) = -0.5 * I;
      asym(k - 1, i - 1) = 0.5 * I;
      basis.generators.push_back(asym);
    }
    const int l = k - 1;
    Matrix diag = Matrix::Zero(n, n);
    const double scale = 1.0 / std::sqrt(2.0 * l * (l + 1));
    for (int j = 0; j < l; ++j) diag(j, j) = scale;
    diag(l, l) = -scale * l;
    basis.generators.push_back(diag);
  }
  return basis;
}

StructureConstants structure_constants(const AlgebraBasis& basis) {
  const int dim = static_cast<int>(basis.generators.size());
  StructureConstants f;
  f.dim = dim;

  // f^{abc} = -2i tr([t^a, t^b] t^c); the full tensor is computed so total
  // antisymmetry can be checked, then only a < b < c is stored.
  std::vector<Matrix> comms(static_cast<std::size_t>(dim) * dim);
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b)
      comms[static_cast<std::size_t>(a) * dim + b] =
          basis.generators[a] * basis.generators[b] -
          basis.generators[b] * basis.generators[a];

  auto raw = [&](int a, int b, int c) -> Complex {
    if (a == b) return 0.0;
    const Matrix& k = (a < b) ? comms[static_cast<std::size_t>(a) * dim + b]
                              : comms[static_cast<std::size_t>(b) * dim + a];
    Complex tr = (k * basis.generators[c]).trace();
    if (a > b) tr = -tr;
    return Complex(0.0, -2.0) * tr;
  };

  double max_imag = 0.0;
  double max_asym = 0.0;
  for (int a = 0; a < dim; ++a) {
    for (int b = a + 1; b < dim; ++b) {
      for (int c = 0; c < dim; ++c) {
        const Complex v = raw(a, b, c);
        max_imag = std::max(max_imag, std::abs(v.imag()));
        if (c == a || c == b) {
          max_asym = std::max(max_asym, std::abs(v.real()));
          continue;
        }
        if (c < b) continue;  // store canonical a < b < c only
        const double val = v.real();
        // check antisymmetry against an independently computed swap
        const Complex swapped = raw(a, c, b);
        max_asym = std::max(max_asym, std::abs(val + swapped.real()));
        if (std::abs(val) > 1e-12)
          f.canonical[{a, b, c}] = val;
      }
    }
  }
  if (max_imag > 1e-10)
    throw std::runtime_error("structure constants: imaginary residue exceeds 1e-10");
  if (max_asym > 1e-12)
    throw std::runtime_error("structure constants: antisymmetry violated");

  f.pair_rows.assign(static_cast<std::size_t>(dim) * dim, {});
  for (const auto& [key, val] : f.canonical) {
    const auto [a, b, c] = key;
    auto push = [&](int x, int y, int z, double v) {
      f.pair_rows[static_cast<std::size_t>(x) * dim + y].emplace_back(z, v);
    };
    push(a, b, c, val);
    push(b, a, c, -val);
    push(b, c, a, val);
    push(c, b, a, -val);
    push(c, a, b, val);
    push(a, c, b, -val);
  }
  return f;
}

double StructureConstants::at(int a, int b, int c) const {
  int p[3] = {a, b, c};
  int sign = 1;
  for (int i = 1; i < 3; ++i) {  // sort three indices, track parity
    int j = i;
    while (j > 0 && p[j - 1] > p[j]) {
      std::swap(p[j - 1], p[j]);
      sign = -sign;
      --j;
    }
  }
  if (p[0] == p[1] || p[1] == p[2]) return 0.0;
  auto it = canonical.find({p[0], p[1], p[2]});
  return it == canonical.end() ? 0.0 : sign * it->second;
}

WedgeRep wedge_rep(const AlgebraBasis& basis, int alpha) {
  const int n = basis.n;
  if (alpha < 1 || alpha > n - 1)
    throw std::domain_error("wedge representation index out of range");
  WedgeRep rep;
  rep.n = n;
  rep.alpha = alpha;
  rep.basis_sets = sorted_subsets(n, alpha);
  const int dim = rep.dim();

  std::map<std::vector<int>, int> index;
  for (int i = 0; i < dim; ++i) index[rep.basis_sets[i]] = i;

  rep.matrices.reserve(basis.generators.size());
  for (const Matrix& t : basis.generators) {
    Matrix m = Matrix::Zero(dim, dim);
    for (int col = 0; col < dim; ++col) {
      const std::vector<int>& J = rep.basis_sets[col];
      for (int k = 0; k < alpha; ++k) {
        const int j = J[k];
        for (int i = 1; i <= n; ++i) {
          const Complex tij = t(i - 1, j - 1);
          if (tij == Complex(0.0, 0.0)) continue;
          std::vector<int> target = J;
          target[k] = i;
          const int sign = sort_with_sign(target);
          if (sign == 0) continue;  // repeated index annihilates the wedge
          m(index.at(target), col) += static_cast<double>(sign) * tij;
        }
      }
    }
    rep.matrices.push_back(std::move(m));
  }
  return rep;
}

Matrix group_element(const std::vector<Matrix>& generators,
                     const Eigen::VectorXd& theta) {
  if (generators.empty()) throw std::domain_error("no generators");
  if (theta.size() != static_cast<Eigen::Index>(generators.size()))
    throw std::domain_error("parameter vector length mismatch");
  const Eigen::Index d = generators.front().rows();
  Matrix h = Matrix::Zero(d, d);
  for (std::size_t a = 0; a < generators.size(); ++a)
    h += theta[static_cast<Eigen::Index>(a)] * generators[a];
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const Eigen::VectorXd& ev = es.eigenvalues();
  Matrix phases = Matrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    phases(i, i) = std::polar(1.0, ev[i]);
  return es.eigenvectors() * phases * es.eigenvectors().adjoint();
}

double closure_residual(const std::vector<Matrix>& generators,
                        const StructureConstants& f, Exec exec) {
  const int dim = static_cast<int>(generators.size());
  const Complex I(0.0, 1.0);
  double worst = 0.0;
  const bool par = exec == Exec::parallel;
#pragma omp parallel for collapse(2) schedule(dynamic) reduction(max : worst) if (par)
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      if (a >= b) continue;
      Matrix r = generators[a] * generators[b] - generators[b] * generators[a];
      for (const auto& [c, val] : f.row(a, b)) r -= I * val * generators[c];
      worst = std::max(worst, r.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double jacobi_residual(const StructureConstants& f) {
  const int dim = f.dim;
  double worst = 0.0;
  for (int a = 0; a < dim; ++a) {
    for (int b = a + 1; b < dim; ++b) {
      for (int c = b + 1; c < dim; ++c) {
        for (int e = 0; e < dim; ++e) {
          double s = 0.0;
          for (const auto& [d, v] : f.row(a, b)) s += v * f.at(d, c, e);
          for (const auto& [d, v] : f.row(b, c)) s += v * f.at(d, a, e);
          for (const auto& [d, v] : f.row(c, a)) s += v * f.at(d, b, e);
          worst = std::max(worst, std::abs(s));
        }
      }
    }
  }
  return worst;
}

double trace_orthogonality_residual(const std::vector<Matrix>& generators) {
  const int dim = static_cast<int>(generators.size());
  double kappa = 0.0;
  for (int a = 0; a < dim; ++a)
    kappa += (generators[a] * generators[a]).trace().real();
  kappa /= dim;
  double worst = 0.0;
  for (int a = 0; a < dim; ++a) {
    for (int b = a; b < dim; ++b) {
      const Complex tr = (generators[a] * generators[b]).trace();
      const double target = (a == b) ? kappa : 0.0;
      worst = std::max(worst, std::abs(tr - Complex(target, 0.0)));
    }
  }
  return worst;
}

}  // namespace suncs
