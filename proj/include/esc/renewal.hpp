#pragma once

#include <vector>

#include "esc/distributions.hpp"
#include "esc/exact.hpp"

namespace esc {

// The sequence log u_0 .. log u_n where u_m is the probability that some
// prefix of i.i.d. sizes drawn from mu sums exactly to m (u_0 = 1).
// Immutable; safe for shared read-only use.
class RenewalTable {
 public:
  RenewalTable(ClusterSizeSpec spec, std::vector<double> log_u);

  const ClusterSizeSpec& spec() const { return spec_; }
  int n() const { return static_cast<int>(log_u_.size()) - 1; }
  double log_u(int m) const { return log_u_.at(static_cast<std::size_t>(m)); }
  double u(int m) const;
  const std::vector<double>& log_u_all() const { return log_u_; }

 private:
  ClusterSizeSpec spec_;
  std::vector<double> log_u_;
};

// Builds the table by the O(n^2) convolution recurrence (log-space).
// Unreachable m yields -inf, never an error. n >= 0.
RenewalTable renewal_table(const ClusterSizeSpec& spec, int n);

// Exact-arithmetic bound for the Bell-sum oracle below; the factorial
// growth of the scaled arguments keeps exact evaluation tractable only at
// small n.
inline constexpr int kExactOracleBound = 30;

// u_n as the exact Bell sum  sum_k (k!/n!) B_{n,k}(1! mu_1, 2! mu_2, ...).
// The pmf values are converted to exact rationals (every double is one), so
// the summation itself is exact. Oracle only; n above `bound` throws
// capability_error.
Rational prob_en_exact(const ClusterSizeSpec& spec, int n, int bound = kExactOracleBound);

// Closed-form log u_n for the shifted Poisson, shifted negative binomial
// and geometric families; capability_error for other kinds. n >= 0
// (u_0 = 1 by convention).
double log_prob_en_closed(const ClusterSizeSpec& spec, int n);

// lim_{n->inf} u_n = 1 / E[S_1 | mu]; 0 when the mean is infinite.
double renewal_limit(const ClusterSizeSpec& spec);

}  // namespace esc
