#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace suncs {

std::uint64_t factorial(int n);

// n! as a double; exact up to n = 18, usable well past the uint64 range.
double factorial_d(int n);

std::uint64_t binomial(int n, int k);

// Number of multisets of size k drawn from n symbols: binomial(n+k-1, k).
std::uint64_t multichoose(int n, int k);

// All sorted k-element subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> sorted_subsets(int n, int k);

// Visits every permutation of {0..n-1} in lexicographic order together with
// its parity sign (+1 even, -1 odd). Guarded at n <= 10.
void for_each_permutation_with_sign(
    int n, const std::function<void(const std::vector<int>&, int)>& visit);

std::vector<std::pair<std::vector<int>, int>> permutations_with_sign(int n);

// Sorts v ascending in place. Returns the sign of the sorting permutation,
// or 0 if v contains a repeated entry.
int sort_with_sign(std::vector<int>& v);

}  // namespace suncs
