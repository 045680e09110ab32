#include "suncs/sparse.hpp"

#include <stdexcept>

namespace suncs {

SparseOperator SparseOperator::identity(int dim, Complex scale) {
  SparseOperator op(dim);
  for (int i = 0; i < dim; ++i) op.add(i, i, scale);
  return op;
}

void SparseOperator::add(int row, int col, Complex v) {
  if (row < 0 || row >= dim_ || col < 0 || col >= dim_)
    throw std::domain_error("sparse entry out of range");
  auto key = std::make_pair(row, col);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    if (std::abs(v) >= kMagnitudeFloor) entries_.emplace(key, v);
    return;
  }
  it->second += v;
  if (std::abs(it->second) < kMagnitudeFloor) entries_.erase(it);
}

SparseOperator SparseOperator::operator+(const SparseOperator& o) const {
  if (dim_ != o.dim_) throw std::domain_error("dimension mismatch");
  SparseOperator out = *this;
  for (const auto& [k, v] : o.entries_) out.add(k.first, k.second, v);
  return out;
}

SparseOperator SparseOperator::operator-(const SparseOperator& o) const {
  if (dim_ != o.dim_) throw std::domain_error("dimension mismatch");
  SparseOperator out = *this;
  for (const auto& [k, v] : o.entries_) out.add(k.first, k.second, -v);
  return out;
}

SparseOperator SparseOperator::operator*(const SparseOperator& o) const {
  if (dim_ != o.dim_) throw std::domain_error("dimension mismatch");
  SparseOperator out(dim_);
  for (const auto& [ka, va] : entries_) {
    const int r = ka.first;
    const int k = ka.second;
    auto lo = o.entries_.lower_bound({k, 0});
    auto hi = o.entries_.upper_bound({k, dim_});
    for (auto it = lo; it != hi; ++it)
      out.add(r, it->first.second, va * it->second);
  }
  return out;
}

SparseOperator SparseOperator::scaled(Complex s) const {
  SparseOperator out(dim_);
  for (const auto& [k, v] : entries_) out.add(k.first, k.second, s * v);
  return out;
}

SparseOperator SparseOperator::adjoint() const {
  SparseOperator out(dim_);
  for (const auto& [k, v] : entries_) out.add(k.second, k.first, std::conj(v));
  return out;
}

Eigen::VectorXcd SparseOperator::apply(const Eigen::VectorXcd& v) const {
  if (v.size() != dim_) throw std::domain_error("vector length mismatch");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim_);
  for (const auto& [k, val] : entries_) out[k.first] += val * v[k.second];
  return out;
}

Eigen::MatrixXcd SparseOperator::dense() const {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (const auto& [k, v] : entries_) out(k.first, k.second) = v;
  return out;
}

double SparseOperator::max_abs() const {
  double m = 0.0;
  for (const auto& [k, v] : entries_) m = std::max(m, std::abs(v));
  return m;
}

double SparseOperator::hermiticity_residual() const {
  return (*this - adjoint()).max_abs();
}

nlohmann::json SparseOperator::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [k, v] : entries_)
    entries.push_back({k.first, k.second, v.real(), v.imag()});
  return {{"dim", dim_}, {"entries", entries}};
}

SparseOperator SparseOperator::from_json(const nlohmann::json& j) {
  SparseOperator op(j.at("dim").get<int>());
  for (const auto& e : j.at("entries"))
    op.add(e.at(0).get<int>(), e.at(1).get<int>(),
           Complex(e.at(2).get<double>(), e.at(3).get<double>()));
  return op;
}

}  // namespace suncs
