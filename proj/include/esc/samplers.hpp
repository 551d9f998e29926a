#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "esc/distributions.hpp"
#include "esc/kernels.hpp"
#include "esc/renewal.hpp"
#include "esc/rng.hpp"

namespace esc {

enum class TableMode { on_demand, precomputed };

// Cluster sizes S_1..S_K with sum exactly n.
struct SizeSequence {
  std::vector<int> sizes;
  int total() const;
};

// A labelled partition of [n]: label k occurs sizes[k-1] times.
struct Partition {
  int n = 0;
  std::vector<int> sizes;
  std::vector<int> labels;  // values in 1..K
};

// Immutable state consumed by the conditional sampler. on_demand keeps only
// the pmf prefix and the renewal table (O(n) memory, O(m) per draw);
// precomputed additionally stores the cumulative rows of Pr[X = s; m]
// (O(n^2) memory, O(log m) per draw by binary search). Both modes consume
// one uniform per cluster size and make identical inverse-CDF decisions.
class SamplerTables {
 public:
  const ClusterSizeSpec& spec() const { return spec_; }
  int n() const { return n_; }
  TableMode mode() const { return mode_; }
  const RenewalTable& renewal() const { return renewal_; }
  const std::vector<double>& log_mu() const { return log_mu_; }

  // Inverse-CDF draw of the next size at remaining mass m, from one uniform.
  int draw_size(int m, double u) const;

 private:
  friend SamplerTables prepare(const ClusterSizeSpec&, int, TableMode);
  SamplerTables(ClusterSizeSpec spec, int n, TableMode mode, std::vector<double> log_mu,
                RenewalTable renewal, std::vector<double> tail);

  ClusterSizeSpec spec_;
  int n_;
  TableMode mode_;
  std::vector<double> log_mu_;
  RenewalTable renewal_;
  std::vector<double> tail_;  // suffix log mass of mu
  kernels::CumulativeRows rows_;
};

// Builds sampler state; throws unreachable_n_error when u_n = 0.
SamplerTables prepare(const ClusterSizeSpec& spec, int n,
                      TableMode mode = TableMode::on_demand);

// The conditional sequential sampler: while m > 0, draw the next size with
// probability mu_s u_{m-s} / u_m and subtract. The law of the output is
// prod_j mu_{s_j} / u_n. Deterministic given the rng stream.
SizeSequence sample_sizes(const SamplerTables& tables, CounterRng& rng);

struct NaiveDraw {
  std::optional<SizeSequence> sizes;  // empty on exhaustion
  std::int64_t attempts = 0;          // sequences started, including the accepted one
};

inline constexpr std::int64_t kDefaultMaxAttempts = 1'000'000;

// Rejection baseline: draw sizes i.i.d. from mu until the running sum hits n
// exactly (accept) or overshoots (restart). Expected attempts are 1/u_n;
// max_attempts guards distributions where that explodes.
NaiveDraw sample_sizes_naive(const ClusterSizeSpec& spec, int n, CounterRng& rng,
                             std::int64_t max_attempts = kDefaultMaxAttempts);

// Assigns the n observations to clusters by a uniformly random permutation
// (Fisher-Yates) of the block label vector.
Partition assemble_partition(const SizeSequence& sizes, CounterRng& rng);

// count draws using substream(i) of `seed` for draw i; parallelized over
// draws, output independent of thread count.
std::vector<SizeSequence> sample_sizes_many(const SamplerTables& tables, std::uint64_t seed,
                                            int count);

}  // namespace esc
