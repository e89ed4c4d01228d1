#include "fishfinder/svm.hpp"

#include <algorithm>
#include <cmath>

#include "fishfinder/errors.hpp"

namespace fishfinder {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

double SvmModel::decision_value(const std::vector<double>& x) const {
  if (x.size() != weights.size()) {
    throw DimensionMismatchError("decision_value: got " + std::to_string(x.size()) +
                                 " features, model has " + std::to_string(weights.size()));
  }
  return dot(weights, x) + bias;
}

SvmModel train_svm(const Matrix& X, const std::vector<int>& y, double C) {
  const std::size_t n = X.size();
  if (n == 0 || y.size() != n) throw DimensionMismatchError("train_svm: bad input sizes");
  if (C <= 0.0) throw NumericError("train_svm: C must be > 0");

  bool has_pos = false, has_neg = false;
  for (int label : y) {
    if (label == +1) has_pos = true;
    else if (label == -1) has_neg = true;
    else throw NumericError("train_svm: labels must be +1/-1");
  }
  if (!has_pos || !has_neg) {
    throw DegenerateLabelsError("train_svm: one class absent from the training labels");
  }

  const std::size_t d = X[0].size();
  std::vector<double> kernel(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const double k = dot(X[i], X[j]);
      kernel[i * n + j] = k;
      kernel[j * n + i] = k;
    }
  }

  std::vector<double> alpha(n, 0.0);
  // grad_i of the dual objective; v_i = -y_i * grad_i drives both the
  // working-set choice and the stopping rule
  std::vector<double> grad(n, -1.0);
  const auto v_of = [&](std::size_t i) {
    return -static_cast<double>(y[i]) * grad[i];
  };

  long iterations = 0;
  while (iterations++ < kSvmMaxIterations) {
    std::size_t i_up = n, i_low = n;
    double m_up = -1e300, m_low = 1e300;
    for (std::size_t k = 0; k < n; ++k) {
      const bool in_up = (y[k] == +1 && alpha[k] < C) || (y[k] == -1 && alpha[k] > 0.0);
      const bool in_low = (y[k] == -1 && alpha[k] < C) || (y[k] == +1 && alpha[k] > 0.0);
      const double v = v_of(k);
      if (in_up && v > m_up) {
        m_up = v;
        i_up = k;
      }
      if (in_low && v < m_low) {
        m_low = v;
        i_low = k;
      }
    }
    if (i_up == n || i_low == n || m_up - m_low <= kSvmKktTolerance) break;

    const std::size_t i = i_up, j = i_low;
    const double yi = y[i], yj = y[j];
    double eta = kernel[i * n + i] + kernel[j * n + j] - 2.0 * kernel[i * n + j];
    eta = std::max(eta, 1e-12);

    double lo, hi;
    if (yi != yj) {
      lo = std::max(0.0, alpha[j] - alpha[i]);
      hi = std::min(C, C + alpha[j] - alpha[i]);
    } else {
      lo = std::max(0.0, alpha[i] + alpha[j] - C);
      hi = std::min(C, alpha[i] + alpha[j]);
    }

    const double aj_old = alpha[j];
    const double ai_old = alpha[i];
    double aj = aj_old + yj * (v_of(j) - v_of(i)) / eta;
    aj = std::clamp(aj, lo, hi);
    const double ai = ai_old + yi * yj * (aj_old - aj);

    const double dai = ai - ai_old;
    const double daj = aj - aj_old;
    if (std::abs(dai) < 1e-16 && std::abs(daj) < 1e-16) break;
    alpha[i] = ai;
    alpha[j] = aj;
    for (std::size_t k = 0; k < n; ++k) {
      grad[k] += static_cast<double>(y[k]) *
                 (yi * dai * kernel[i * n + k] + yj * daj * kernel[j * n + k]);
    }
  }

  SvmModel model;
  model.C = C;
  model.weights.assign(d, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (alpha[i] == 0.0) continue;
    const double coef = alpha[i] * static_cast<double>(y[i]);
    for (std::size_t f = 0; f < d; ++f) model.weights[f] += coef * X[i][f];
  }

  // bias from free support vectors, else the midpoint of the KKT interval
  double free_sum = 0.0;
  std::size_t free_count = 0;
  double m_up = -1e300, m_low = 1e300;
  for (std::size_t k = 0; k < n; ++k) {
    const double v = v_of(k);
    if (alpha[k] > 0.0 && alpha[k] < C) {
      free_sum += v;
      ++free_count;
    }
    const bool in_up = (y[k] == +1 && alpha[k] < C) || (y[k] == -1 && alpha[k] > 0.0);
    const bool in_low = (y[k] == -1 && alpha[k] < C) || (y[k] == +1 && alpha[k] > 0.0);
    if (in_up) m_up = std::max(m_up, v);
    if (in_low) m_low = std::min(m_low, v);
  }
  model.bias = free_count > 0 ? free_sum / static_cast<double>(free_count)
                              : 0.5 * (m_up + m_low);
  return model;
}

double svm_primal_objective(const SvmModel& model, const Matrix& X,
                            const std::vector<int>& y) {
  double obj = 0.5 * dot(model.weights, model.weights);
  for (std::size_t i = 0; i < X.size(); ++i) {
    const double margin = static_cast<double>(y[i]) * model.decision_value(X[i]);
    obj += model.C * std::max(0.0, 1.0 - margin);
  }
  return obj;
}

Label predict(const SvmModel& model, const std::vector<double>& x) {
  return model.decision_value(x) > 0.0 ? Label::ADHD : Label::Control;
}

EvalReport evaluate(const SvmModel& model, const Matrix& X, const std::vector<Label>& y) {
  if (X.size() != y.size()) throw DimensionMismatchError("evaluate: X and y sizes differ");
  std::int64_t tp = 0, fp = 0, tn = 0, fn = 0;
  for (std::size_t i = 0; i < X.size(); ++i) {
    const Label predicted = predict(model, X[i]);
    if (y[i] == Label::ADHD) {
      predicted == Label::ADHD ? ++tp : ++fn;
    } else {
      predicted == Label::Control ? ++tn : ++fp;
    }
  }
  return EvalReport::from_counts(tp, fp, tn, fn);
}

}  // namespace fishfinder
