#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <vector>

#include "json.hpp"
#include "suncs/algebra.hpp"
#include "suncs/sparse.hpp"

namespace suncs {

constexpr std::uint64_t kDefaultSectorCap = 5'000'000;

// (C_1, ..., C_{N-1}): eigenvalues of the N-1 number-operator Casimirs.
struct IrrepLabel {
  int n = 0;
  std::vector<int> c;

  void validate() const;
  long long total_boxes() const;  // sum_alpha alpha * C_alpha
};

// Canonical oscillator mode: family alpha together with a sorted alpha-subset
// of {1..N}. Ordered-index components of the antisymmetric oscillators are
// (sign of sorting permutation) x the canonical mode, zero on repeats; the
// canonical modes then satisfy plain independent-boson commutators.
struct Mode {
  int alpha = 0;
  std::vector<int> indices;
};

// All sorted alpha-subsets of {1..N} in lexicographic order.
std::vector<std::vector<int>> canonical_modes(int n, int alpha);

// Occupation basis of the fixed-Casimir subspace: per family alpha the mode
// occupancies sum to C_alpha. States are enumerated in descending
// lexicographic order of the concatenated occupation tuple (family 1 most
// significant), which puts the all-weight-on-first-mode state first.
class SectorBasis {
 public:
  explicit SectorBasis(IrrepLabel label, std::uint64_t cap = kDefaultSectorCap);

  const IrrepLabel& label() const { return label_; }
  int n() const { return label_.n; }
  int dim() const { return static_cast<int>(states_.size()); }

  int num_modes() const { return static_cast<int>(modes_.size()); }
  const Mode& mode(int m) const { return modes_[m]; }
  int family_offset(int alpha) const { return family_offset_[alpha - 1]; }
  int family_size(int alpha) const { return family_size_[alpha - 1]; }
  int mode_index(int alpha, const std::vector<int>& subset) const;

  const std::vector<std::uint16_t>& state(int s) const { return states_[s]; }
  // -1 when the occupation tuple is not in the sector
  int index_of(const std::vector<std::uint16_t>& occ) const;

  // Product-of-multichoose dimension; throws "sector too large" above cap.
  static std::uint64_t dimension_of(const IrrepLabel& label,
                                    std::uint64_t cap = kDefaultSectorCap);

  nlohmann::json to_json() const;

 private:
  IrrepLabel label_;
  std::vector<Mode> modes_;
  std::vector<int> family_offset_;
  std::vector<int> family_size_;
  std::map<std::vector<int>, int> mode_lookup_;  // key: {alpha, i1, i2, ...}
  std::vector<std::vector<std::uint16_t>> states_;
  std::map<std::vector<std::uint16_t>, int> index_;
};

// Complex vector over a SectorBasis.
struct FockVector {
  const SectorBasis* basis = nullptr;
  Eigen::VectorXcd amplitudes;

  double norm() const { return amplitudes.norm(); }
  nlohmann::json to_json() const;
};

// Matrix of adag_I a_J on the sector (both modes in family alpha).
SparseOperator bilinear(const SectorBasis& sector, int alpha,
                        const std::vector<int>& I, const std::vector<int>& J);

// Q^a = sum_alpha sum_{I,J} (Lambda^a[alpha])_{I,J} adag_I a_J.
SparseOperator generator_op(const SectorBasis& sector,
                            const std::vector<WedgeRep>& reps, int a);

std::vector<SparseOperator> all_generator_ops(const SectorBasis& sector,
                                              const std::vector<WedgeRep>& reps,
                                              Exec exec = Exec::parallel);

// Number operator of family alpha; C_alpha x identity on the sector, exact.
SparseOperator casimir_op(const SectorBasis& sector, int alpha);

// max over (a,b) of || [Q_a, Q_b] - i f^{abc} Q_c ||_max
double operator_closure_residual(const std::vector<SparseOperator>& q,
                                 const StructureConstants& f,
                                 Exec exec = Exec::parallel);

}  // namespace suncs
