#pragma once

#include <vector>

namespace fishfinder {

using Matrix = std::vector<std::vector<double>>;

// Min-max scaler: x' = (x - min) / (max - min) per feature, fit on one set
// and applied to another. Zero-range features map to 0; unseen values are
// clamped to [0,1].
struct ScalerParams {
  std::vector<double> min;
  std::vector<double> max;
};

ScalerParams fit_minmax(const Matrix& X);
Matrix apply_minmax(const ScalerParams& params, const Matrix& X);

}  // namespace fishfinder
