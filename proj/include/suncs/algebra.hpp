#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <map>
#include <vector>

#include "suncs/exec.hpp"

namespace suncs {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Fundamental generators t^a of su(N), normalized tr(t^a t^b) = delta/2.
//
// Ordering is the nested one: for k = 2..N, the pairs (i,k) for i < k each
// contribute the symmetric then the antisymmetric generator, followed by the
// k-th diagonal generator. For N=2 this gives sigma^a/2, for N=3 the
// conventional Gell-Mann lambda^a/2 (so f^123 = 1, f^458 = sqrt(3)/2).
struct AlgebraBasis {
  int n = 0;
  std::vector<Matrix> generators;  // N^2-1 Hermitian traceless N x N
};

// Totally antisymmetric structure constants, stored on canonical triples
// a < b < c; everything else is reconstituted by antisymmetry.
struct StructureConstants {
  int dim = 0;  // N^2 - 1
  std::map<std::array<int, 3>, double> canonical;
  // nonzeros of f^{ab.} per ordered pair (a,b), for contractions
  std::vector<std::vector<std::pair<int, double>>> pair_rows;

  double at(int a, int b, int c) const;
  const std::vector<std::pair<int, double>>& row(int a, int b) const {
    return pair_rows[static_cast<std::size_t>(a) * dim + b];
  }
};

// Generators of su(N) on the alpha-th antisymmetric power of the defining
// representation, acting on sorted alpha-subsets of {1..N} in lex order.
struct WedgeRep {
  int n = 0;
  int alpha = 0;
  std::vector<std::vector<int>> basis_sets;
  std::vector<Matrix> matrices;  // D x D, D = binomial(n, alpha)

  int dim() const { return static_cast<int>(basis_sets.size()); }
};

AlgebraBasis gellmann(int n);

StructureConstants structure_constants(const AlgebraBasis& basis);

WedgeRep wedge_rep(const AlgebraBasis& basis, int alpha);

// exp(i sum_a theta[a] G[a]) for Hermitian G; unitary by construction.
Matrix group_element(const std::vector<Matrix>& generators,
                     const Eigen::VectorXd& theta);

// max over (a,b) of || [G_a, G_b] - i f^{abc} G_c ||_max
double closure_residual(const std::vector<Matrix>& generators,
                        const StructureConstants& f,
                        Exec exec = Exec::parallel);

// max |sum_d (f^{abd}f^{dce} + f^{bcd}f^{dae} + f^{cad}f^{dbe})|
double jacobi_residual(const StructureConstants& f);

// max deviation of tr(G_a G_b) from kappa * delta_ab, kappa fitted per rep
double trace_orthogonality_residual(const std::vector<Matrix>& generators);

}  // namespace suncs
