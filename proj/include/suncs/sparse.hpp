#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <utility>

#include "json.hpp"

namespace suncs {

using Complex = std::complex<double>;

// Entries with magnitude below this are dropped, so cancellations that are
// exact in structure leave no stored zeros behind.
constexpr double kMagnitudeFloor = 1e-15;

// Complex sparse matrix over a sector basis. Row-major ordered storage so
// iteration and serialization are deterministic.
class SparseOperator {
 public:
  using EntryMap = std::map<std::pair<int, int>, Complex>;

  explicit SparseOperator(int dim) : dim_(dim) {}

  static SparseOperator identity(int dim, Complex scale = Complex(1.0, 0.0));

  int dim() const { return dim_; }
  const EntryMap& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }

  void add(int row, int col, Complex v);

  SparseOperator operator+(const SparseOperator& o) const;
  SparseOperator operator-(const SparseOperator& o) const;
  SparseOperator operator*(const SparseOperator& o) const;  // composition
  SparseOperator scaled(Complex s) const;
  SparseOperator adjoint() const;

  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;
  Eigen::MatrixXcd dense() const;

  double max_abs() const;
  double hermiticity_residual() const;

  nlohmann::json to_json() const;
  static SparseOperator from_json(const nlohmann::json& j);

 private:
  int dim_;
  EntryMap entries_;
};

}  // namespace suncs
