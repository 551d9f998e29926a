#include "esc/distributions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "esc/format.hpp"

namespace esc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::shifted_poisson: return "shifted_poisson";
    case Kind::shifted_nb: return "shifted_nb";
    case Kind::geometric: return "geometric";
    case Kind::zipf: return "zipf";
    case Kind::explicit_weights: return "explicit";
  }
  return "?";
}

ClusterSizeSpec ClusterSizeSpec::shifted_poisson(double lambda) {
  require(std::isfinite(lambda) && lambda > 0.0, "shifted_poisson: lambda must be positive");
  return ClusterSizeSpec(Kind::shifted_poisson, lambda, 0.0);
}

ClusterSizeSpec ClusterSizeSpec::shifted_nb(double r, double p) {
  require(std::isfinite(r) && r > 0.0, "shifted_nb: r must be positive");
  require(std::isfinite(p) && p >= 0.0 && p <= 1.0, "shifted_nb: p must be in [0,1]");
  return ClusterSizeSpec(Kind::shifted_nb, r, p);
}

ClusterSizeSpec ClusterSizeSpec::geometric(double p) {
  require(std::isfinite(p) && p > 0.0 && p <= 1.0, "geometric: p must be in (0,1]");
  return ClusterSizeSpec(Kind::geometric, 0.0, p);
}

ClusterSizeSpec ClusterSizeSpec::zipf(double alpha) {
  require(std::isfinite(alpha) && alpha > 1.0, "zipf: alpha must be > 1");
  ClusterSizeSpec spec(Kind::zipf, alpha, 0.0);
  spec.log_zeta_ = std::log(zeta(alpha));
  return spec;
}

ClusterSizeSpec ClusterSizeSpec::explicit_weights(std::vector<double> weights) {
  require(!weights.empty(), "explicit: weights must be nonempty");
  double sum = 0.0;
  for (double w : weights) {
    require(std::isfinite(w) && w >= 0.0, "explicit: weights must be finite and nonnegative");
    sum += w;
  }
  // Tolerate serialization round-off, reject anything larger.
  require(std::abs(sum - 1.0) <= 1e-9, "explicit: weights must sum to 1 within 1e-9");
  for (double& w : weights) w /= sum;
  ClusterSizeSpec spec(Kind::explicit_weights, 0.0, 0.0);
  spec.weights_ = std::move(weights);
  return spec;
}

double ClusterSizeSpec::log_pmf(std::int64_t k) const {
  if (k < 1) return kNegInf;  // mu_0 = 0 for every kind
  switch (kind_) {
    case Kind::shifted_poisson: {
      const double lambda = a_;
      double v = -lambda - std::lgamma(static_cast<double>(k));
      if (k > 1) v += static_cast<double>(k - 1) * std::log(lambda);
      return v;
    }
    case Kind::shifted_nb: {
      // mu_k = C(k+r-2, k-1) (1-p)^r p^(k-1); falling-factorial binomial via
      // log-gamma so non-integer r is exact in the same sense.
      const double r = a_, p = b_;
      if (p == 0.0) return k == 1 ? 0.0 : kNegInf;
      double v = std::lgamma(static_cast<double>(k) + r - 1.0) -
                 std::lgamma(static_cast<double>(k)) - std::lgamma(r) + r * std::log1p(-p);
      if (k > 1) v += static_cast<double>(k - 1) * std::log(p);
      return v;
    }
    case Kind::geometric: {
      const double p = b_;
      double v = std::log(p);
      if (k > 1) v += static_cast<double>(k - 1) * std::log1p(-p);
      return v;
    }
    case Kind::zipf:
      return -a_ * std::log(static_cast<double>(k)) - log_zeta_;
    case Kind::explicit_weights: {
      if (k > static_cast<std::int64_t>(weights_.size())) return kNegInf;
      double w = weights_[static_cast<std::size_t>(k - 1)];
      return w > 0.0 ? std::log(w) : kNegInf;
    }
  }
  return kNegInf;
}

std::vector<double> ClusterSizeSpec::pmf_prefix(std::int64_t n) const {
  require(n >= 1, "pmf_prefix: n must be >= 1");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (std::int64_t k = 1; k <= n; ++k) out[static_cast<std::size_t>(k - 1)] = log_pmf(k);
  return out;
}

double ClusterSizeSpec::mean() const {
  switch (kind_) {
    case Kind::shifted_poisson: return a_ + 1.0;
    case Kind::shifted_nb: {
      const double r = a_, p = b_;
      if (p == 0.0) return 1.0;
      if (p == 1.0) return kInf;
      return 1.0 + r * p / (1.0 - p);
    }
    case Kind::geometric: return 1.0 / b_;
    case Kind::zipf: return a_ > 2.0 ? zeta(a_ - 1.0) / zeta(a_) : kInf;
    case Kind::explicit_weights: {
      double m = 0.0;
      for (std::size_t i = 0; i < weights_.size(); ++i)
        m += static_cast<double>(i + 1) * weights_[i];
      return m;
    }
  }
  return kInf;
}

std::string ClusterSizeSpec::param_string() const {
  switch (kind_) {
    case Kind::shifted_poisson: return "lambda=" + format_double(a_);
    case Kind::shifted_nb: return "r=" + format_double(a_) + ";p=" + format_double(b_);
    case Kind::geometric: return "p=" + format_double(b_);
    case Kind::zipf: return "alpha=" + format_double(a_);
    case Kind::explicit_weights: {
      std::string s = "weights=";
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i) s += '|';
        s += format_double(weights_[i]);
      }
      return s;
    }
  }
  return "";
}

double zeta(double alpha) {
  if (!(std::isfinite(alpha) && alpha > 1.0))
    throw std::invalid_argument("zeta: alpha must be > 1");
  // B_{2j} / (2j)!
  static constexpr double kBern[] = {
      1.0 / 12.0,
      -1.0 / 720.0,
      1.0 / 30240.0,
      -1.0 / 1209600.0,
      1.0 / 47900160.0,
      -691.0 / 1307674368000.0,
      1.0 / 74724249600.0,
      -3617.0 / 10670622842880000.0,
      43867.0 / 5109094217170944000.0,
      -174611.0 / 802857662698291200000.0,
      854513.0 / 14101100039391805440000.0,
      -236364091.0 / 1693824136731743669452800000.0,
  };
  constexpr int kN = 64;
  double sum = 0.0, comp = 0.0;  // compensated direct part
  for (int k = kN - 1; k >= 1; --k) {
    double term = std::pow(static_cast<double>(k), -alpha);
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  const double nks = std::pow(static_cast<double>(kN), -alpha);
  double total = sum + 0.5 * nks + nks * kN / (alpha - 1.0);
  double rising = alpha;  // alpha (alpha+1) ... (alpha+2j-2)
  double npow = nks / kN; // kN^(-alpha-2j+1)
  for (std::size_t j = 0; j < std::size(kBern); ++j) {
    double term = kBern[j] * rising * npow;
    total += term;
    if (std::abs(term) < 1e-18) break;
    rising *= (alpha + 2.0 * j + 1.0) * (alpha + 2.0 * j + 2.0);
    npow /= static_cast<double>(kN) * kN;
  }
  return total;
}

}  // namespace esc
