#include "suncs/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "suncs/combinat.hpp"

namespace suncs {

void IrrepLabel::validate() const {
  if (n < 2) throw std::domain_error("group rank too small");
  if (static_cast<int>(c.size()) != n - 1)
    throw std::domain_error("label length must be N-1");
  for (int v : c)
    if (v < 0) throw std::domain_error("label entries must be nonnegative");
}

long long IrrepLabel::total_boxes() const {
  long long total = 0;
  for (int alpha = 1; alpha <= static_cast<int>(c.size()); ++alpha)
    total += static_cast<long long>(alpha) * c[alpha - 1];
  return total;
}

std::vector<std::vector<int>> canonical_modes(int n, int alpha) {
  if (alpha < 1 || alpha > n - 1)
    throw std::domain_error("oscillator family index out of range");
  return sorted_subsets(n, alpha);
}

std::uint64_t SectorBasis::dimension_of(const IrrepLabel& label,
                                        std::uint64_t cap) {
  label.validate();
  unsigned __int128 dim = 1;
  for (int alpha = 1; alpha < label.n; ++alpha) {
    const int count = label.c[alpha - 1];
    if (count == 0) continue;
    if (count > 65535) throw std::runtime_error("sector too large");
    const std::uint64_t modes = binomial(label.n, alpha);
    // multichoose(modes, count), exact stepwise, with an early cap check
    // (each partial product is itself a binomial, so it grows monotonically)
    unsigned __int128 factor = 1;
    for (int i = 1; i <= count; ++i) {
      factor = factor * (modes - 1 + static_cast<std::uint64_t>(i)) /
               static_cast<unsigned>(i);
      if (dim * factor > cap) throw std::runtime_error("sector too large");
    }
    dim *= factor;
  }
  return static_cast<std::uint64_t>(dim);
}

namespace {

// Compositions of total into parts slots, descending lexicographic order:
// (total,0,...,0) first, (0,...,0,total) last.
std::vector<std::vector<std::uint16_t>> compositions_desc(int total, int parts) {
  std::vector<std::vector<std::uint16_t>> out;
  std::vector<std::uint16_t> cur(parts, 0);
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return out;
  }
  cur[0] = static_cast<std::uint16_t>(total);
  while (true) {
    out.push_back(cur);
    const int last = parts - 1;
    const int t = cur[last];
    int i = last - 1;
    while (i >= 0 && cur[i] == 0) --i;
    if (i < 0) break;
    --cur[i];
    std::fill(cur.begin() + i + 1, cur.end(), std::uint16_t{0});
    cur[i + 1] = static_cast<std::uint16_t>(t + 1);
  }
  return out;
}

}  // namespace

SectorBasis::SectorBasis(IrrepLabel label, std::uint64_t cap)
    : label_(std::move(label)) {
  const std::uint64_t dim = dimension_of(label_, cap);

  const int n = label_.n;
  family_offset_.resize(n - 1);
  family_size_.resize(n - 1);
  for (int alpha = 1; alpha < n; ++alpha) {
    family_offset_[alpha - 1] = static_cast<int>(modes_.size());
    for (auto& subset : canonical_modes(n, alpha)) {
      std::vector<int> key;
      key.reserve(subset.size() + 1);
      key.push_back(alpha);
      key.insert(key.end(), subset.begin(), subset.end());
      mode_lookup_[key] = static_cast<int>(modes_.size());
      modes_.push_back(Mode{alpha, std::move(subset)});
    }
    family_size_[alpha - 1] =
        static_cast<int>(modes_.size()) - family_offset_[alpha - 1];
  }

  std::vector<std::vector<std::vector<std::uint16_t>>> per_family;
  per_family.reserve(n - 1);
  for (int alpha = 1; alpha < n; ++alpha)
    per_family.push_back(
        compositions_desc(label_.c[alpha - 1], family_size_[alpha - 1]));

  states_.reserve(dim);
  std::vector<std::uint16_t> occ(modes_.size(), 0);
  std::vector<std::size_t> pick(n - 1, 0);
  while (true) {
    std::size_t pos = 0;
    for (int fam = 0; fam < n - 1; ++fam) {
      const auto& comp = per_family[fam][pick[fam]];
      std::copy(comp.begin(), comp.end(), occ.begin() + pos);
      pos += comp.size();
    }
    index_[occ] = static_cast<int>(states_.size());
    states_.push_back(occ);
    int fam = n - 2;
    while (fam >= 0 && pick[fam] + 1 == per_family[fam].size()) {
      pick[fam] = 0;
      --fam;
    }
    if (fam < 0) break;
    ++pick[fam];
  }
  if (states_.size() != dim)
    throw std::runtime_error("sector enumeration does not match dimension formula");
}

int SectorBasis::mode_index(int alpha, const std::vector<int>& subset) const {
  std::vector<int> key;
  key.reserve(subset.size() + 1);
  key.push_back(alpha);
  key.insert(key.end(), subset.begin(), subset.end());
  auto it = mode_lookup_.find(key);
  if (it == mode_lookup_.end())
    throw std::domain_error("unknown oscillator mode");
  return it->second;
}

int SectorBasis::index_of(const std::vector<std::uint16_t>& occ) const {
  auto it = index_.find(occ);
  return it == index_.end() ? -1 : it->second;
}

nlohmann::json SectorBasis::to_json() const {
  nlohmann::json modes = nlohmann::json::array();
  for (const Mode& m : modes_)
    modes.push_back({{"family", m.alpha}, {"set", m.indices}});
  nlohmann::json states = nlohmann::json::array();
  for (const auto& s : states_) states.push_back(s);
  return {{"n", label_.n},
          {"c", label_.c},
          {"dim", dim()},
          {"modes", modes},
          {"states", states}};
}

nlohmann::json FockVector::to_json() const {
  nlohmann::json amps = nlohmann::json::array();
  for (Eigen::Index i = 0; i < amplitudes.size(); ++i)
    amps.push_back({amplitudes[i].real(), amplitudes[i].imag()});
  nlohmann::json sector;
  if (basis) sector = {{"n", basis->label().n}, {"c", basis->label().c}};
  return {{"sector", sector}, {"amplitudes", amps}};
}

SparseOperator bilinear(const SectorBasis& sector, int alpha,
                        const std::vector<int>& I, const std::vector<int>& J) {
  if (I.size() != J.size())
    throw std::domain_error("bilinear subsets must have equal size");
  if (static_cast<int>(I.size()) != alpha)
    throw std::domain_error("subset size does not match family");
  const int mi = sector.mode_index(alpha, I);
  const int mj = sector.mode_index(alpha, J);
  SparseOperator op(sector.dim());
  for (int s = 0; s < sector.dim(); ++s) {
    const auto& occ = sector.state(s);
    const int nj = occ[mj];
    if (nj == 0) continue;
    if (mi == mj) {
      op.add(s, s, Complex(static_cast<double>(nj), 0.0));
      continue;
    }
    std::vector<std::uint16_t> target = occ;
    --target[mj];
    ++target[mi];
    const int t = sector.index_of(target);
    if (t < 0) throw std::runtime_error("bilinear left the sector");
    const double amp =
        std::sqrt(static_cast<double>(nj)) *
        std::sqrt(static_cast<double>(occ[mi] + 1));
    op.add(t, s, Complex(amp, 0.0));
  }
  return op;
}

SparseOperator generator_op(const SectorBasis& sector,
                            const std::vector<WedgeRep>& reps, int a) {
  const int n = sector.n();
  if (static_cast<int>(reps.size()) != n - 1)
    throw std::domain_error("need one wedge representation per family");
  for (int alpha = 1; alpha < n; ++alpha)
    if (reps[alpha - 1].alpha != alpha)
      throw std::domain_error("representation order mismatch");
  SparseOperator op(sector.dim());
  for (int s = 0; s < sector.dim(); ++s) {
    const auto& occ = sector.state(s);
    for (int alpha = 1; alpha < n; ++alpha) {
      const Matrix& lam = reps[alpha - 1].matrices[a];
      const int off = sector.family_offset(alpha);
      const int fs = sector.family_size(alpha);
      for (int j = 0; j < fs; ++j) {
        const int nj = occ[off + j];
        if (nj == 0) continue;
        for (int i = 0; i < fs; ++i) {
          const Complex lij = lam(i, j);
          if (lij == Complex(0.0, 0.0)) continue;
          if (i == j) {
            op.add(s, s, lij * static_cast<double>(nj));
            continue;
          }
          std::vector<std::uint16_t> target = occ;
          --target[off + j];
          ++target[off + i];
          const int t = sector.index_of(target);
          if (t < 0) throw std::runtime_error("generator left the sector");
          const double amp = std::sqrt(static_cast<double>(nj)) *
                             std::sqrt(static_cast<double>(occ[off + i] + 1));
          op.add(t, s, lij * amp);
        }
      }
    }
  }
  return op;
}

std::vector<SparseOperator> all_generator_ops(const SectorBasis& sector,
                                              const std::vector<WedgeRep>& reps,
                                              Exec exec) {
  const int count = sector.n() * sector.n() - 1;
  std::vector<SparseOperator> out(count, SparseOperator(sector.dim()));
  const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic) if (par)
  for (int a = 0; a < count; ++a) out[a] = generator_op(sector, reps, a);
  return out;
}

SparseOperator casimir_op(const SectorBasis& sector, int alpha) {
  const int n = sector.n();
  if (alpha < 1 || alpha > n - 1)
    throw std::domain_error("oscillator family index out of range");
  SparseOperator op(sector.dim());
  const int off = sector.family_offset(alpha);
  const int fs = sector.family_size(alpha);
  for (int s = 0; s < sector.dim(); ++s) {
    const auto& occ = sector.state(s);
    long long total = 0;  // integer arithmetic so eigenvalues are exact
    for (int m = 0; m < fs; ++m) total += occ[off + m];
    if (total != sector.label().c[alpha - 1])
      throw std::runtime_error("sector state violates its Casimir label");
    if (total != 0) op.add(s, s, Complex(static_cast<double>(total), 0.0));
  }
  return op;
}

double operator_closure_residual(const std::vector<SparseOperator>& q,
                                 const StructureConstants& f, Exec exec) {
  const int dim = static_cast<int>(q.size());
  const Complex I(0.0, 1.0);
  double worst = 0.0;
  const bool par = exec == Exec::parallel;
#pragma omp parallel for collapse(2) schedule(dynamic) reduction(max : worst) if (par)
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      if (a >= b) continue;
      SparseOperator r = q[a] * q[b] - q[b] * q[a];
      for (const auto& [c, val] : f.row(a, b)) r = r - q[c].scaled(I * val);
      worst = std::max(worst, r.max_abs());
    }
  }
  return worst;
}

}  // namespace suncs
