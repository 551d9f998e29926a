#pragma once

#include <span>
#include <vector>

#include "esc/distributions.hpp"
#include "esc/renewal.hpp"

namespace esc {

// Above this n the full lower-triangular table (O(n^2) numbers) is not
// stored; only row n is computed with a two-column sweep.
inline constexpr int kFullTableMaxN = 5000;

// log w(m,k) where w(m,k) = Pr[S_1 + ... + S_k = m | mu]. The full triangle
// is kept by default so intermediate rows can serve row-sum checks and
// repeated queries at smaller m.
class CompositionTable {
 public:
  CompositionTable(ClusterSizeSpec spec, int n, std::vector<double> packed_full);
  CompositionTable(ClusterSizeSpec spec, int n, std::vector<double> row_n, bool row_only_tag);

  const ClusterSizeSpec& spec() const { return spec_; }
  int n() const { return n_; }
  bool full() const { return full_; }

  // log w(m,k); any 0 <= k <= m <= n when full, m == n otherwise.
  double log_w(int m, int k) const;

  // log w(n,k) for k = 1..n at index k-1.
  std::span<const double> row_n() const;

  // log sum_k w(m,k); equals log u_m (disjoint union over {K_m = k}).
  double log_row_sum(int m) const;

 private:
  ClusterSizeSpec spec_;
  int n_;
  bool full_;
  std::vector<double> data_;  // packed triangle, or row n only (k=1..n)
};

CompositionTable composition_table(const ClusterSizeSpec& spec, int n,
                                   int full_table_max_n = kFullTableMaxN);

// Pr[K_n = k | E_n, mu] at index k-1. Entries with w(n,k) = 0 are exactly 0.
struct KDistribution {
  int n = 0;
  std::vector<double> probs;
};

// Conditional law of the number of clusters at the table's n:
// probs[k-1] = exp(log w(n,k) - log u_n). The table and renewal table must
// come from the same spec and n; u_n = 0 raises unreachable_n_error.
KDistribution k_distribution(const CompositionTable& table, const RenewalTable& renewal);

// Same at an intermediate row m <= n (full tables only).
KDistribution k_distribution_at(const CompositionTable& table, const RenewalTable& renewal,
                                int m);

// Closed forms for the shifted Poisson / shifted NB / geometric families,
// self-normalized in log space (the normalizer is the same family's
// closed-form u_n). capability_error for other kinds.
KDistribution k_distribution_closed(const ClusterSizeSpec& spec, int n);

}  // namespace esc
