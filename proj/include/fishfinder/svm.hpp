#pragma once

#include <vector>

#include "fishfinder/scaling.hpp"
#include "fishfinder/types.hpp"

namespace fishfinder {

// Linear soft-margin SVM: minimize 0.5*||w||^2 + C * sum hinge(y_i, f(x_i))
// with f(x) = w.x + b, trained by SMO on the dual with maximal-violating-
// pair selection. Deterministic: fixed scan order, ties to the lower index,
// KKT tolerance 1e-8, hard iteration cap.
struct SvmModel {
  std::vector<double> weights;
  double bias = 0.0;
  double C = 1.0;
  std::vector<int> selected_indices;  // manifest indices behind each weight
  ScalerParams scaler;

  double decision_value(const std::vector<double>& x) const;
};

inline constexpr double kSvmKktTolerance = 1e-8;
inline constexpr long kSvmMaxIterations = 20'000'000;

// labels must be +1/-1 with both classes present (DegenerateLabelsError
// otherwise). Rows of X are expected already scaled and restricted to the
// selected features.
SvmModel train_svm(const Matrix& X, const std::vector<int>& y, double C = 1.0);

double svm_primal_objective(const SvmModel& model, const Matrix& X, const std::vector<int>& y);

// sign of the decision value; a tie (f == 0) goes to Control
Label predict(const SvmModel& model, const std::vector<double>& x);

EvalReport evaluate(const SvmModel& model, const Matrix& X, const std::vector<Label>& y);

}  // namespace fishfinder
