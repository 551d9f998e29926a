#pragma once

#include <span>
#include <vector>

#include "esc/exact.hpp"

namespace esc {

// Partial exponential Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}), exact.
// Evaluated by the recurrence
//   B_{n,k} = sum_{j=1}^{n-k+1} C(n-1, j-1) x_j B_{n-j,k-1},   B_{0,0} = 1,
// which is O(n^2 k) instead of the exponential multi-index sum.
// Requires 1 <= k <= n and x.size() >= n-k+1.
Rational bell_exponential(int n, int k, std::span<const Rational> x);

// Ordinary Bell polynomial, via the exact relation
//   Bhat_{n,k}(x) = (k!/n!) B_{n,k}(1! x_1, 2! x_2, ...).
Rational bell_ordinary(int n, int k, std::span<const Rational> x);

// Enumerates all ordered k-tuples of positive integers summing to n, in
// lexicographic order. Used as the brute-force oracle for the Bell routes.
class CompositionGenerator {
 public:
  CompositionGenerator(int n, int k);  // requires 1 <= k <= n

  // Writes the next composition into `out` (resized to k). Returns false
  // once all C(n-1, k-1) tuples have been produced.
  bool next(std::vector<int>& out);

  static Integer count(int n, int k);  // C(n-1, k-1)

 private:
  int n_;
  int k_;
  std::vector<int> cur_;
  bool done_ = false;
  bool first_ = true;
};

template <typename F>
void for_each_composition(int n, int k, F&& f) {
  CompositionGenerator gen(n, k);
  std::vector<int> parts;
  while (gen.next(parts)) f(parts);
}

}  // namespace esc
