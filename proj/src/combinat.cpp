#include "suncs/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace suncs {

std::uint64_t factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative argument");
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

double factorial_d(int n) {
  if (n < 0) throw std::domain_error("factorial of negative argument");
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= static_cast<double>(i);
  return r;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    // exact at every step: r * (n-k+i) is divisible by i
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > UINT64_MAX) throw std::overflow_error("binomial overflows");
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t multichoose(int n, int k) {
  if (k == 0) return 1;
  return binomial(n + k - 1, k);
}

std::vector<std::vector<int>> sorted_subsets(int n, int k) {
  if (k < 0 || k > n) throw std::domain_error("subset size out of range");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 1);
  if (k == 0) {
    out.push_back({});
    return out;
  }
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p[i] > p[j]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace

void for_each_permutation_with_sign(
    int n, const std::function<void(const std::vector<int>&, int)>& visit) {
  if (n < 0) throw std::domain_error("permutation size negative");
  if (n > 10) throw std::runtime_error("permutation group too large");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  if (n == 0) {
    visit(p, 1);
    return;
  }
  do {
    visit(p, permutation_sign(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

std::vector<std::pair<std::vector<int>, int>> permutations_with_sign(int n) {
  std::vector<std::pair<std::vector<int>, int>> out;
  for_each_permutation_with_sign(
      n, [&](const std::vector<int>& p, int s) { out.emplace_back(p, s); });
  return out;
}

int sort_with_sign(std::vector<int>& v) {
  int sign = 1;
  const int n = static_cast<int>(v.size());
  for (int i = 1; i < n; ++i) {  // insertion sort, counts transpositions
    int j = i;
    while (j > 0 && v[j - 1] > v[j]) {
      std::swap(v[j - 1], v[j]);
      sign = -sign;
      --j;
    }
  }
  for (int i = 1; i < n; ++i)
    if (v[i] == v[i - 1]) return 0;
  return sign;
}

}  // namespace suncs
