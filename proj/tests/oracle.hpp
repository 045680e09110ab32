#pragma once

// Test-only oracles, kept independent of the implementation paths they check.

#include <functional>
#include <map>
#include <vector>

#include "suncs/coherent.hpp"
#include "suncs/combinat.hpp"
#include "suncs/fock.hpp"

namespace suncs::testing {

// Expands exp(sum_beta z[1,beta].adag[beta]) |0> by Taylor steps over
// ordered-index tuples and projects onto the sector. The ordered-index
// components are antisymmetrized products of the frame rows summed
// permutation by permutation (no determinants), and the exponential is
// truncated at the total box count, so nothing is shared with
// wedge_coordinates or the multinomial form used by coherent_vector.
inline FockVector coherent_expansion_oracle(const Frame& frame,
                                            const SectorBasis& sector) {
  const int n = frame.n;

  struct Term {
    int mode;
    Complex coeff;  // includes the tuple sign and the z[1,beta] component
  };
  std::vector<Term> exponent;
  for (int beta = 1; beta <= n - 1; ++beta) {
    const double scale = 1.0 / std::sqrt(factorial_d(beta));
    // every ordered tuple of distinct indices from {1..N}
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    std::function<void()> build = [&] {
      if (static_cast<int>(cur.size()) == beta) {
        tuples.push_back(cur);
        return;
      }
      for (int i = 1; i <= n; ++i) {
        bool used = false;
        for (int v : cur) used |= (v == i);
        if (used) continue;
        cur.push_back(i);
        build();
        cur.pop_back();
      }
    };
    build();
    for (const auto& tuple : tuples) {
      Complex z(0.0, 0.0);
      for_each_permutation_with_sign(
          beta, [&](const std::vector<int>& p, int sign) {
            Complex prod(1.0, 0.0);
            for (int k = 0; k < beta; ++k)
              prod *= frame.rows(k, tuple[p[k]] - 1);
            z += static_cast<double>(sign) * prod;
          });
      z *= scale;
      std::vector<int> sorted = tuple;
      const int tuple_sign = sort_with_sign(sorted);
      exponent.push_back(
          Term{sector.mode_index(beta, sorted),
               static_cast<double>(tuple_sign) * z});
    }
  }

  const IrrepLabel& label = sector.label();
  using State = std::vector<std::uint16_t>;
  std::map<State, Complex> psi;
  std::map<State, Complex> total;
  const State vacuum(sector.num_modes(), 0);
  psi[vacuum] = 1.0;
  total[vacuum] = 1.0;

  const long long boxes = label.total_boxes();
  for (long long k = 1; k <= boxes; ++k) {
    std::map<State, Complex> next;
    for (const auto& [state, amp] : psi) {
      for (const Term& term : exponent) {
        const Mode& mode = sector.mode(term.mode);
        // prune states that already exhausted this family's quota
        int family_total = 0;
        const int off = sector.family_offset(mode.alpha);
        for (int m = 0; m < sector.family_size(mode.alpha); ++m)
          family_total += state[off + m];
        if (family_total + 1 > label.c[mode.alpha - 1]) continue;
        State raised = state;
        ++raised[term.mode];
        const double factor = std::sqrt(static_cast<double>(raised[term.mode]));
        next[raised] += amp * term.coeff * factor / static_cast<double>(k);
      }
    }
    psi = std::move(next);
    for (const auto& [state, amp] : psi) total[state] += amp;
  }

  FockVector out;
  out.basis = &sector;
  out.amplitudes = Eigen::VectorXcd::Zero(sector.dim());
  for (const auto& [state, amp] : total) {
    const int idx = sector.index_of(state);
    if (idx >= 0) out.amplitudes[idx] += amp;
  }
  return out;
}

// Dense matrix of a lowering operator a_I between neighbouring sectors.
inline Eigen::MatrixXcd lowering_between(const SectorBasis& from,
                                         const SectorBasis& to, int alpha,
                                         const std::vector<int>& subset) {
  // mode tables depend on N only, so occupation vectors carry across sectors
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(to.dim(), from.dim());
  const int mode_from = from.mode_index(alpha, subset);
  for (int s = 0; s < from.dim(); ++s) {
    std::vector<std::uint16_t> occ = from.state(s);
    if (occ[mode_from] == 0) continue;
    const double amp = std::sqrt(static_cast<double>(occ[mode_from]));
    --occ[mode_from];
    const int t = to.index_of(occ);
    if (t >= 0) m(t, s) = amp;
  }
  return m;
}

inline Eigen::MatrixXcd raising_between(const SectorBasis& from,
                                        const SectorBasis& to, int alpha,
                                        const std::vector<int>& subset) {
  return lowering_between(to, from, alpha, subset).adjoint();
}

}  // namespace suncs::testing
