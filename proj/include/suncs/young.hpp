#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <vector>

#include "suncs/exec.hpp"
#include "suncs/fock.hpp"

namespace suncs {

// Row h (1-based) has length sum_{beta >= h} C_beta; columns of height beta
// correspond to creation operators of family beta, tallest columns leftmost.
struct YoungDiagram {
  IrrepLabel label;
  std::vector<int> row_lengths;  // nonincreasing, no trailing zeros
  std::vector<int> col_heights;  // per column, nonincreasing
  long long total_boxes = 0;

  int rows() const { return static_cast<int>(row_lengths.size()); }
  int cols() const { return static_cast<int>(col_heights.size()); }
};

YoungDiagram young_diagram(const IrrepLabel& label);

// Box values: labels[h][v] in 1..N for row h, column v (0-based, v ranging
// over that row's length).
struct LabeledMonomial {
  std::vector<std::vector<int>> labels;
};

// Terms of a permutation-group-algebra element applied to a monomial:
// flattened row-major assignment -> integer coefficient.
using MonomialTerms = std::map<std::vector<int>, long long>;

MonomialTerms monomial_terms(const YoungDiagram& diagram,
                             const LabeledMonomial& monomial);

// Applies the product of unnormalized row symmetrizers S_h = sum_{p in S_Lh} p
// to every term. Applying twice scales the result by prod_h (L_h!).
MonomialTerms symmetrize_rows(const YoungDiagram& diagram,
                              const MonomialTerms& terms);

// Maps symmetrized terms to the occupation basis: column of height beta at
// position v becomes adag[beta] with that column's box values (zero on
// repeated values in a column).
FockVector terms_to_vector(const YoungDiagram& diagram,
                           const MonomialTerms& terms,
                           const SectorBasis& sector);

// Row-symmetrized image of a labeled monomial, unnormalized (the su(3)
// adjoint example comes out as two terms with unit coefficients).
FockVector irrep_basis_vector(const LabeledMonomial& monomial,
                              const SectorBasis& sector);

// Hook-content formula, exact integer arithmetic.
std::uint64_t weyl_dimension(const IrrepLabel& label);

struct IrrepSubspace {
  int rank = 0;
  bool flagged = false;  // singular value within 10x of the rank threshold
  Eigen::MatrixXcd orthonormal;   // sector dim x rank
  Eigen::VectorXd singular_values;
};

// Span of irrep_basis_vector over all N^boxes label assignments; rank at
// relative tolerance 1e-8 must equal weyl_dimension.
IrrepSubspace irrep_subspace(const SectorBasis& sector,
                             Exec exec = Exec::parallel);

int irrep_subspace_dimension(const SectorBasis& sector,
                             Exec exec = Exec::parallel);

// max entry of (1 - P) Q P over the given operators, P projecting onto the
// subspace.
double invariance_residual(const IrrepSubspace& subspace,
                           const std::vector<SparseOperator>& ops);

// Eigenvalue spread (max - min) of sum_a Q_a Q_a restricted to the subspace,
// together with the mean eigenvalue.
std::pair<double, double> quadratic_casimir_on_subspace(
    const IrrepSubspace& subspace, const std::vector<SparseOperator>& ops);

}  // namespace suncs
