#include "fishfinder/scaling.hpp"

#include <algorithm>

#include "fishfinder/errors.hpp"

namespace fishfinder {

ScalerParams fit_minmax(const Matrix& X) {
  if (X.empty()) throw DataError("fit_minmax: empty matrix");
  const std::size_t d = X[0].size();
  ScalerParams p;
  p.min.assign(d, 0.0);
  p.max.assign(d, 0.0);
  for (std::size_t j = 0; j < d; ++j) {
    double lo = X[0][j], hi = X[0][j];
    for (const auto& row : X) {
      lo = std::min(lo, row[j]);
      hi = std::max(hi, row[j]);
    }
    p.min[j] = lo;
    p.max[j] = hi;
  }
  return p;
}

Matrix apply_minmax(const ScalerParams& params, const Matrix& X) {
  Matrix out(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) {
    const auto& row = X[i];
    if (row.size() != params.min.size()) {
      throw DimensionMismatchError("apply_minmax: row has " + std::to_string(row.size()) +
                                   " features, scaler has " +
                                   std::to_string(params.min.size()));
    }
    out[i].resize(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      const double range = params.max[j] - params.min[j];
      const double v = range == 0.0 ? 0.0 : (row[j] - params.min[j]) / range;
      out[i][j] = std::clamp(v, 0.0, 1.0);
    }
  }
  return out;
}

}  // namespace fishfinder
