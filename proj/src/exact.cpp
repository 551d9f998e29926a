#include "esc/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace esc {

Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be nonnegative");
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer num = 1;
  for (long long i = 0; i < k; ++i) {
    num *= n - i;
    num /= i + 1;  // exact: any i+1 consecutive integers contain a multiple
  }
  return num;
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite value");
  if (x == 0.0) return Rational(0);
  int exp2 = 0;
  double mant = std::frexp(x, &exp2);  // x = mant * 2^exp2, |mant| in [0.5, 1)
  auto mant_int = static_cast<long long>(std::ldexp(mant, 53));
  exp2 -= 53;
  Rational q(mant_int);
  if (exp2 >= 0) {
    q *= Rational(Integer(1) << exp2);
  } else {
    q /= Rational(Integer(1) << -exp2);
  }
  return q;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace esc
