#ifndef VNDN_STATS_SHAPIRO_HPP
#define VNDN_STATS_SHAPIRO_HPP

#include "../util/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace vndn::stats {

struct ShapiroWilkResult {
  double w = 0.0;
  double pValue = 0.0;
};

namespace detail {

/// Wichura's double-precision inverse of the standard normal CDF (PPND16,
/// algorithm AS 241). Accurate to about 1e-16 over (0, 1).
inline double
normalQuantile(double p)
{
  if (!(p > 0.0 && p < 1.0))
    throw ValidationError("normal quantile needs p in (0, 1)");
  const double q = p - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q *
           (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                 6.7265770927008700853e4) *
                   r +
                 4.5921953931549871457e4) *
                  r +
                1.3731693765509461125e4) *
                 r +
               1.9715909503065514427e3) *
                r +
              1.3314166789178437745e2) *
               r +
             3.3871328727963666080e0) /
           (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                 3.9307895800092710610e4) *
                   r +
                 2.1213794301586595867e4) *
                  r +
                5.3941960214247511077e3) *
                 r +
               6.8718700749205790830e2) *
                r +
              4.2313330701600911252e1) *
               r +
             1.0);
  }
  double r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    value = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) *
                    r +
                  1.27045825245236838258e0) *
                   r +
                 3.64784832476320460504e0) *
                  r +
                5.76949722146069140550e0) *
                 r +
               4.63033784615654529590e0) *
                r +
              1.42343711074968357734e0) /
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) *
                    r +
                  1.48103976427480074590e-1) *
                   r +
                 6.89767334985100004550e-1) *
                  r +
                1.67638483018380384940e0) *
                 r +
               2.05319162663775882187e0) *
                r +
              1.0);
  }
  else {
    r -= 5.0;
    value = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) *
                    r +
                  2.65321895265761230930e-2) *
                   r +
                 2.96560571828504891230e-1) *
                  r +
                1.78482653991729133580e0) *
                 r +
               5.46378491116411436990e0) *
                r +
              6.65790464350110377720e0) /
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-9) * r +
                  1.84631831751005468180e-6) *
                    r +
                  7.86869131145613259100e-4) *
                   r +
                 1.48753612908506148525e-2) *
                  r +
                1.36929880922735805310e-1) *
                 r +
               5.99832206555887937690e-1) *
                r +
              1.0);
  }
  return q < 0.0 ? -value : value;
}

inline double
poly(const double* c, int order, double x)
{
  double value = c[0];
  double p = 1.0;
  for (int i = 1; i < order; ++i) {
    p *= x;
    value += c[i] * p;
  }
  return value;
}

} // namespace detail

/// W test of composite normality with Royston's 1995 extension (valid for
/// 3 <= n <= 5000). The p-value is the upper tail of a normalizing
/// transformation of W; a constant sample is rejected as input.
inline ShapiroWilkResult
shapiroWilk(std::vector<double> x)
{
  const std::size_t n = x.size();
  if (n < 3)
    throw ValidationError("normality test needs at least 3 observations");
  if (n > 5000)
    throw ValidationError("normality test supports at most 5000 observations");
  std::sort(x.begin(), x.end());
  if (x.front() == x.back())
    throw ValidationError("normality test undefined for a constant sample");

  const std::size_t half = n / 2;
  const auto an = static_cast<double>(n);

  // Approximate normalized best linear unbiased weights for the lower half.
  std::vector<double> a(half);
  if (n == 3) {
    a[0] = std::sqrt(0.5);
  }
  else {
    double sumSq = 0.0;
    for (std::size_t i = 0; i < half; ++i) {
      a[i] = detail::normalQuantile((static_cast<double>(i + 1) - 0.375) / (an + 0.25));
      sumSq += a[i] * a[i];
    }
    sumSq *= 2.0;
    const double rootSumSq = std::sqrt(sumSq);
    const double rsn = 1.0 / std::sqrt(an);
    static constexpr double kC1[6] = {0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056};
    static constexpr double kC2[6] = {0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633};
    const double a1 = detail::poly(kC1, 6, rsn) - a[0] / rootSumSq;
    std::size_t firstUncorrected;
    double fac;
    if (n > 5) {
      firstUncorrected = 2;
      const double a2 = detail::poly(kC2, 6, rsn) - a[1] / rootSumSq;
      fac = std::sqrt((sumSq - 2.0 * a[0] * a[0] - 2.0 * a[1] * a[1]) /
                      (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2));
      a[1] = a2;
    }
    else {
      firstUncorrected = 1;
      fac = std::sqrt((sumSq - 2.0 * a[0] * a[0]) / (1.0 - 2.0 * a1 * a1));
    }
    a[0] = a1;
    for (std::size_t i = firstUncorrected; i < half; ++i)
      a[i] = -a[i] / fac;
  }

  // W as the squared correlation between the ordered data and the full
  // antisymmetric weight vector.
  double meanX = 0.0;
  for (double v : x)
    meanX += v;
  meanX /= an;
  auto weight = [&](std::size_t i) -> double {
    std::size_t mirror = n - 1 - i;
    if (i < mirror)
      return -a[i];
    if (i > mirror)
      return a[mirror];
    return 0.0;
  };
  double meanC = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    meanC += weight(i);
  meanC /= an;
  double ssc = 0.0, ssx = 0.0, sxc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dc = weight(i) - meanC;
    const double dx = x[i] - meanX;
    ssc += dc * dc;
    ssx += dx * dx;
    sxc += dc * dx;
  }
  const double norm = std::sqrt(ssc * ssx);
  const double oneMinusW = (norm - sxc) * (norm + sxc) / (ssc * ssx);
  double w = 1.0 - oneMinusW;
  w = std::clamp(w, 0.0, 1.0);

  ShapiroWilkResult res;
  res.w = w;
  if (n == 3) {
    constexpr double kPi6 = 1.90985931710274;  // 6/pi
    constexpr double kStqr = 1.04719755119660; // asin(sqrt(3/4))
    res.pValue = std::clamp(kPi6 * (std::asin(std::sqrt(w)) - kStqr), 0.0, 1.0);
    return res;
  }

  double y, m, s;
  if (n <= 11) {
    static constexpr double kG[2] = {-2.273, 0.459};
    static constexpr double kC3[4] = {0.5440, -0.39978, 0.025054, -6.714e-4};
    static constexpr double kC4[4] = {1.3822, -0.77857, 0.062767, -0.0020322};
    const double gamma = detail::poly(kG, 2, an);
    const double arg = gamma - std::log1p(-w);
    if (arg <= 0.0) {
      res.pValue = 0.0;
      return res;
    }
    y = -std::log(arg);
    m = detail::poly(kC3, 4, an);
    s = std::exp(detail::poly(kC4, 4, an));
  }
  else {
    static constexpr double kC5[4] = {-1.5861, -0.31082, -0.083751, 0.0038915};
    static constexpr double kC6[3] = {-0.4803, -0.082676, 0.0030302};
    const double logN = std::log(an);
    y = std::log1p(-w);
    m = detail::poly(kC5, 4, logN);
    s = std::exp(detail::poly(kC6, 3, logN));
  }
  res.pValue = 0.5 * std::erfc((y - m) / s / std::sqrt(2.0));
  return res;
}

} // namespace vndn::stats

#endif // VNDN_STATS_SHAPIRO_HPP
