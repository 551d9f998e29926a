#pragma once

#include <span>
#include <vector>

namespace esc::kernels {

inline constexpr double kNegInf = -__builtin_huge_val();

// Terms more than this far below a row maximum are dropped from log-space
// accumulations. exp(-50) ~ 2e-22, so the induced relative error is below
// e-50 * n for every table built here, orders of magnitude under the
// tightest tolerance used anywhere (1e-12).
inline constexpr double kLogPruneCut = 50.0;

double log_add(double a, double b);

// Suffix mass of a log-pmf: result[s] = log sum_{j >= s} mu_j for s in
// [1, n], result[n+1] = -inf. result[0] is unused. Size n+2.
std::vector<double> suffix_log_mass(std::span<const double> log_mu);

// Renewal probabilities log u_m for m = 0..n under the convolution
//   u_m = sum_{s=1}^{m} mu_s u_{m-s},   u_0 = 1,
// accumulated as a pruned two-pass log-sum-exp (max extraction per row,
// compensated summation). Rows of length >= kBlockedRowMin are evaluated in
// fixed-size blocks combined in block order, so results are identical for
// any OpenMP thread count.
std::vector<double> renewal_log_table(std::span<const double> log_mu, int n);

// Textbook serial implementation (full scans, no pruning, no compensation).
// Kept as the reference the production kernel is tested against.
std::vector<double> renewal_log_table_reference(std::span<const double> log_mu, int n);

inline constexpr int kBlockedRowMin = 8192;

// Lower-triangular table log w(m,k) = log Pr[S_1 + ... + S_k = m | mu] for
// 0 <= k <= m <= n, packed row-major: entry(m,k) = m*(m+1)/2 + k. Column k
// depends only on column k-1, so rows are computed in parallel within each
// column; every entry is produced by one serial scan, keeping the table
// bitwise reproducible for any thread count.
std::vector<double> composition_log_table(std::span<const double> log_mu, int n);

std::vector<double> composition_log_table_reference(std::span<const double> log_mu, int n);

// Row n only (log w(n,k) for k = 1..n at index k-1), O(n) memory.
std::vector<double> composition_log_row(std::span<const double> log_mu, int n);

inline std::size_t tri_index(int m, int k) {
  return static_cast<std::size_t>(m) * (m + 1) / 2 + static_cast<std::size_t>(k);
}

// Per-state cumulative inverse-CDF rows for the conditional size draw
//   Pr[X = s; m] = mu_s u_{m-s} / u_m,   s = 1..m.
// Row m is truncated once the remaining mu tail is negligible relative to
// u_m and is built by one plain left-to-right scan; the on-demand sampling
// path replays the identical scan, which makes the two table modes produce
// bitwise-identical decisions.
struct CumulativeRows {
  std::vector<double> values;        // concatenated rows
  std::vector<int> offsets;          // size n+2; row m = [offsets[m], offsets[m+1])
  std::vector<int> last_admissible;  // per m: largest s with positive mass (0 if none)
};

CumulativeRows cumulative_rows(std::span<const double> log_mu, std::span<const double> log_u,
                               std::span<const double> tail);

// Untruncated serial version, for tests.
CumulativeRows cumulative_rows_reference(std::span<const double> log_mu,
                                         std::span<const double> log_u);

// log sum exp of a contiguous range (full scan, two passes).
double log_sum_exp(std::span<const double> v);

}  // namespace esc::kernels
