#ifndef VNDN_STATS_STATS_HPP
#define VNDN_STATS_STATS_HPP

#include "../util/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace vndn::stats {

/// Largest combined sample size for which the exact Mann-Whitney null
/// distribution is enumerated; larger (or tied) inputs use the normal
/// approximation with tie correction and continuity correction.
inline constexpr std::size_t kExactLimit = 16;

struct MannWhitneyResult {
  double u1 = 0.0;     ///< U statistic of the first sample
  double pValue = 1.0; ///< two-sided
  bool exact = false;  ///< exact enumeration (true) or normal approximation
};

namespace detail {

/// Midranks of the combined sample plus the tie-group sizes.
struct RankedSamples {
  std::vector<double> ranksA;
  std::vector<std::size_t> tieGroups;
  bool hasTies = false;
};

inline RankedSamples
rankCombined(const std::vector<double>& a, const std::vector<double>& b)
{
  struct Item {
    double value;
    bool fromA;
  };
  std::vector<Item> items;
  items.reserve(a.size() + b.size());
  for (double v : a)
    items.push_back({v, true});
  for (double v : b)
    items.push_back({v, false});
  std::stable_sort(items.begin(), items.end(),
                   [](const Item& x, const Item& y) { return x.value < y.value; });

  RankedSamples out;
  out.ranksA.reserve(a.size());
  std::size_t i = 0;
  while (i < items.size()) {
    std::size_t j = i;
    while (j < items.size() && items[j].value == items[i].value)
      ++j;
    double midrank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j));
    for (std::size_t k = i; k < j; ++k) {
      if (items[k].fromA)
        out.ranksA.push_back(midrank);
    }
    out.tieGroups.push_back(j - i);
    if (j - i > 1)
      out.hasTies = true;
    i = j;
  }
  return out;
}

/// Null distribution counts of the U statistic for sample sizes (m, n):
/// f(u; m, n) = f(u - n; m - 1, n) + f(u; m, n - 1).
inline std::vector<double>
exactNullCounts(std::size_t n1, std::size_t n2)
{
  std::vector<std::vector<double>> prev(n1 + 1, std::vector<double>{1.0});
  for (std::size_t n = 1; n <= n2; ++n) {
    std::vector<std::vector<double>> cur(n1 + 1);
    cur[0] = {1.0};
    for (std::size_t m = 1; m <= n1; ++m) {
      cur[m].assign(m * n + 1, 0.0);
      for (std::size_t u = 0; u <= m * n; ++u) {
        double v = 0.0;
        if (u >= n && u - n <= (m - 1) * n)
          v += cur[m - 1][u - n];
        if (u <= m * (n - 1))
          v += prev[m][u];
        cur[m][u] = v;
      }
    }
    prev = std::move(cur);
  }
  return prev[n1];
}

inline double
normalUpperTail(double z)
{
  return 0.5 * std::erfc(z / std::sqrt(2.0));
}

} // namespace detail

/// Two-sided Mann-Whitney U test. Exact when the combined sample is small and
/// tie-free; otherwise normal approximation with tie and continuity
/// corrections. Two identical samples yield p = 1. `exactLimit` exists so
/// callers can force the approximation (0) for cross-validation.
inline MannWhitneyResult
mannWhitney(const std::vector<double>& a, const std::vector<double>& b,
            std::size_t exactLimit = kExactLimit)
{
  if (a.empty() || b.empty())
    throw ValidationError("mann-whitney needs two non-empty samples");
  const auto n1 = static_cast<double>(a.size());
  const auto n2 = static_cast<double>(b.size());

  detail::RankedSamples ranked = detail::rankCombined(a, b);
  double r1 = 0.0;
  for (double r : ranked.ranksA)
    r1 += r;
  double u1 = r1 - n1 * (n1 + 1.0) / 2.0;
  double u2 = n1 * n2 - u1;

  MannWhitneyResult res;
  res.u1 = u1;

  if (a.size() + b.size() <= exactLimit && !ranked.hasTies) {
    std::vector<double> counts = detail::exactNullCounts(a.size(), b.size());
    double total = 0.0;
    for (double c : counts)
      total += c;
    auto uMin = static_cast<std::size_t>(std::llround(std::min(u1, u2)));
    double tail = 0.0;
    for (std::size_t u = 0; u <= uMin && u < counts.size(); ++u)
      tail += counts[u];
    res.pValue = std::min(1.0, 2.0 * tail / total);
    res.exact = true;
    return res;
  }

  const double nTotal = n1 + n2;
  double tieSum = 0.0;
  for (std::size_t t : ranked.tieGroups) {
    auto td = static_cast<double>(t);
    tieSum += td * td * td - td;
  }
  double mu = n1 * n2 / 2.0;
  double sigma2 =
    n1 * n2 / 12.0 * ((nTotal + 1.0) - tieSum / (nTotal * (nTotal - 1.0)));
  if (sigma2 <= 0.0) {
    res.pValue = 1.0; // every observation tied: no evidence of a difference
    return res;
  }
  double diff = u1 - mu;
  double continuity = diff > 0.0 ? 0.5 : (diff < 0.0 ? -0.5 : 0.0);
  double z = (diff - continuity) / std::sqrt(sigma2);
  res.pValue = std::min(1.0, 2.0 * detail::normalUpperTail(std::fabs(z)));
  return res;
}

/// Vargha-Delaney effect size: probability that a random draw from `a`
/// exceeds one from `b`, counting ties as half.
inline double
varghaDelaneyA12(const std::vector<double>& a, const std::vector<double>& b)
{
  if (a.empty() || b.empty())
    throw ValidationError("effect size needs two non-empty samples");
  double wins = 0.0;
  for (double x : a) {
    for (double y : b) {
      if (x > y)
        wins += 1.0;
      else if (x == y)
        wins += 0.5;
    }
  }
  return wins / (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

/// Interest satisfaction ratio. Undefined (and rejected) when nothing was sent.
inline double
satisfaction(std::uint64_t interestsSent, std::uint64_t dataReceived)
{
  if (interestsSent == 0)
    throw ValidationError("satisfaction undefined: no interests sent");
  return static_cast<double>(dataReceived) / static_cast<double>(interestsSent);
}

} // namespace vndn::stats

#endif // VNDN_STATS_STATS_HPP
