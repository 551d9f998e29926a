#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace esc {

enum class Kind { shifted_poisson, shifted_nb, geometric, zipf, explicit_weights };

const char* kind_name(Kind k);

// A cluster size distribution mu on the positive integers (mu_0 = 0 always).
// Immutable after construction; all operations are pure and the object is
// safe to share between threads.
class ClusterSizeSpec {
 public:
  static ClusterSizeSpec shifted_poisson(double lambda);
  static ClusterSizeSpec shifted_nb(double r, double p);
  static ClusterSizeSpec geometric(double p);
  static ClusterSizeSpec zipf(double alpha);
  // weights[i] is the mass of size i+1. The sum must be within 1e-9 of 1;
  // it is then normalized exactly. Larger deviations are rejected rather
  // than silently rescaled.
  static ClusterSizeSpec explicit_weights(std::vector<double> weights);

  Kind kind() const { return kind_; }
  double lambda() const { return a_; }
  double r() const { return a_; }
  double p() const { return b_; }
  double alpha() const { return a_; }
  const std::vector<double>& weights() const { return weights_; }

  /// log mu_k for k >= 1; -inf where mu_k = 0.
  double log_pmf(std::int64_t k) const;

  // First n log-pmf values; entry k-1 holds log mu_k. n >= 1.
  std::vector<double> pmf_prefix(std::int64_t n) const;

  // E[S_1 | mu]; +inf for Zipf with alpha <= 2.
  double mean() const;

  // Compact "name=value" list, ';'-separated (CSV-safe).
  std::string param_string() const;

  friend bool operator==(const ClusterSizeSpec&, const ClusterSizeSpec&) = default;

 private:
  ClusterSizeSpec(Kind kind, double a, double b) : kind_(kind), a_(a), b_(b) {}

  Kind kind_;
  double a_ = 0.0;  // lambda / r / p / alpha
  double b_ = 0.0;  // p (shifted_nb)
  std::vector<double> weights_;
  double log_zeta_ = 0.0;  // cached at construction (zipf)
};

// Riemann zeta for alpha > 1, via direct summation with an Euler-Maclaurin
// tail correction.
double zeta(double alpha);

}  // namespace esc
