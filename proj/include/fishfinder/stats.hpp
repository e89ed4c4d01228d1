#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace fishfinder::stats {

inline double mean(std::span<const double> v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double sum(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

// population variance (divide by n)
inline double variance(std::span<const double> v) {
  if (v.empty()) return 0.0;
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size());
}

inline double sd(std::span<const double> v) { return std::sqrt(variance(v)); }

// sample standard deviation (divide by n-1); 0 when n < 2
inline double sample_sd(std::span<const double> v) {
  const std::size_t n = v.size();
  if (n < 2) return 0.0;
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(n - 1));
}

inline double median(std::span<const double> v) {
  if (v.empty()) return 0.0;
  std::vector<double> tmp(v.begin(), v.end());
  std::sort(tmp.begin(), tmp.end());
  const std::size_t n = tmp.size();
  if (n % 2 == 1) return tmp[n / 2];
  return 0.5 * (tmp[n / 2 - 1] + tmp[n / 2]);
}

// adjusted Fisher-Pearson sample skewness; 0 when sd == 0 or n < 3
inline double skewness(std::span<const double> v) {
  const std::size_t n = v.size();
  if (n < 3) return 0.0;
  const double m = mean(v);
  double s2 = 0.0;
  for (double x : v) s2 += (x - m) * (x - m);
  const double s = std::sqrt(s2 / static_cast<double>(n - 1));
  if (s == 0.0) return 0.0;
  double cube = 0.0;
  for (double x : v) {
    const double z = (x - m) / s;
    cube += z * z * z;
  }
  const double dn = static_cast<double>(n);
  return dn / ((dn - 1.0) * (dn - 2.0)) * cube;
}

// Pearson r; defined as 0 when either side has zero variance
inline double pearson(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = std::min(a.size(), b.size());
  if (n < 2) return 0.0;
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= static_cast<double>(n);
  mb /= static_cast<double>(n);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double da = a[i] - ma;
    const double db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

inline double min_value(std::span<const double> v) {
  return v.empty() ? 0.0 : *std::min_element(v.begin(), v.end());
}

inline double max_value(std::span<const double> v) {
  return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

}  // namespace fishfinder::stats
