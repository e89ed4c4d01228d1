#include "fishfinder/selection.hpp"

#include <algorithm>
#include <map>

#include "fishfinder/errors.hpp"
#include "fishfinder/rng.hpp"
#include "fishfinder/stats.hpp"
#include "fishfinder/svm.hpp"

namespace fishfinder {

namespace {

constexpr double kImprovementEps = 1e-6;

std::vector<double> column(const Matrix& X, std::size_t j) {
  std::vector<double> col(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) col[i] = X[i][j];
  return col;
}

bool is_constant(const std::vector<double>& col) {
  for (double v : col) {
    if (v != col[0]) return false;
  }
  return true;
}

Matrix project(const Matrix& X, const std::vector<int>& features,
               const std::vector<std::size_t>& rows) {
  Matrix out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out[r].reserve(features.size());
    for (int f : features) out[r].push_back(X[rows[r]][static_cast<std::size_t>(f)]);
  }
  return out;
}

}  // namespace

const char* to_string(SelectionMethod m) {
  switch (m) {
    case SelectionMethod::Correlation: return "correlation";
    case SelectionMethod::Forward: return "forward";
    case SelectionMethod::Backward: return "backward";
  }
  return "?";
}

SelectionResult correlation_filter(const Matrix& X, double threshold) {
  SelectionResult result;
  result.method = SelectionMethod::Correlation;
  if (X.empty()) return result;
  const std::size_t d = X[0].size();

  std::vector<std::vector<double>> cols(d);
  std::vector<bool> constant(d);
  for (std::size_t j = 0; j < d; ++j) {
    cols[j] = column(X, j);
    constant[j] = is_constant(cols[j]);
  }

  std::vector<bool> dropped(d, false);
  for (std::size_t i = 0; i < d; ++i) {
    if (dropped[i]) continue;
    for (std::size_t j = i + 1; j < d; ++j) {
      if (dropped[j]) continue;
      double r;
      if (constant[i] && constant[j]) r = 1.0;
      else if (constant[i] || constant[j]) r = 0.0;
      else r = stats::pearson(cols[i], cols[j]);
      if (std::abs(r) >= threshold) dropped[j] = true;
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    if (!dropped[j]) result.indices.push_back(static_cast<int>(j));
  }
  return result;
}

double cv_accuracy(const Matrix& X, const std::vector<int>& y,
                   const std::vector<int>& feature_subset, double C, std::uint64_t seed,
                   int folds) {
  const std::size_t n = X.size();
  if (feature_subset.empty() || n == 0) return 0.0;

  // stratified fold assignment: per-class seeded shuffle, then round-robin
  std::vector<int> fold_of(n, 0);
  Rng rng(seed);
  for (int cls : {+1, -1}) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (y[i] == cls) members.push_back(i);
    }
    rng.shuffle(members);
    for (std::size_t k = 0; k < members.size(); ++k) {
      fold_of[members[k]] = static_cast<int>(k % static_cast<std::size_t>(folds));
    }
  }

  std::size_t correct = 0, total = 0;
  for (int f = 0; f < folds; ++f) {
    std::vector<std::size_t> train_rows, test_rows;
    for (std::size_t i = 0; i < n; ++i) {
      (fold_of[i] == f ? test_rows : train_rows).push_back(i);
    }
    if (test_rows.empty()) continue;

    const Matrix Xtr = project(X, feature_subset, train_rows);
    std::vector<int> ytr;
    ytr.reserve(train_rows.size());
    for (std::size_t i : train_rows) ytr.push_back(y[i]);

    const SvmModel model = train_svm(Xtr, ytr, C);
    for (std::size_t i : test_rows) {
      std::vector<double> row;
      row.reserve(feature_subset.size());
      for (int ft : feature_subset) row.push_back(X[i][static_cast<std::size_t>(ft)]);
      const int predicted = predict(model, row) == Label::ADHD ? +1 : -1;
      if (predicted == y[i]) ++correct;
      ++total;
    }
  }
  return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
}

SelectionResult forward_select(const Matrix& X, const std::vector<int>& y, int max_k,
                               std::uint64_t seed, double C) {
  SelectionResult result;
  result.method = SelectionMethod::Forward;
  if (X.empty() || max_k == 0) return result;
  const int d = static_cast<int>(X[0].size());
  const int limit = max_k < 0 ? d : std::min(max_k, d);

  std::vector<bool> chosen(static_cast<std::size_t>(d), false);
  double best_acc = 0.0;
  while (static_cast<int>(result.indices.size()) < limit) {
    int best_f = -1;
    double best_candidate = best_acc;
    for (int f = 0; f < d; ++f) {
      if (chosen[static_cast<std::size_t>(f)]) continue;
      std::vector<int> trial = result.indices;
      trial.push_back(f);
      const double acc = cv_accuracy(X, y, trial, C, seed);
      if (acc > best_candidate + kImprovementEps) {
        best_candidate = acc;
        best_f = f;
      }
    }
    if (best_f < 0) break;
    chosen[static_cast<std::size_t>(best_f)] = true;
    result.indices.push_back(best_f);
    std::sort(result.indices.begin(), result.indices.end());
    best_acc = best_candidate;
  }
  std::sort(result.indices.begin(), result.indices.end());
  return result;
}

SelectionResult backward_eliminate(const Matrix& X, const std::vector<int>& y,
                                   std::uint64_t seed, double C) {
  SelectionResult result;
  result.method = SelectionMethod::Backward;
  if (X.empty()) return result;
  const int d = static_cast<int>(X[0].size());
  for (int f = 0; f < d; ++f) result.indices.push_back(f);
  if (d <= 1) return result;

  double current_acc = cv_accuracy(X, y, result.indices, C, seed);
  while (result.indices.size() > 1) {
    // best removal wins; among equals the first position (lowest manifest
    // index) is dropped; stop once every removal strictly hurts
    int best_pos = -1;
    double best_acc = -1.0;
    for (std::size_t p = 0; p < result.indices.size(); ++p) {
      std::vector<int> trial = result.indices;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(p));
      const double acc = cv_accuracy(X, y, trial, C, seed);
      if (acc > best_acc) {
        best_acc = acc;
        best_pos = static_cast<int>(p);
      }
    }
    if (best_pos < 0 || best_acc < current_acc) break;
    result.indices.erase(result.indices.begin() + best_pos);
    current_acc = best_acc;
  }
  return result;
}

ConsensusResult consensus_select(const std::vector<SelectionResult>& results, int min_votes) {
  std::map<int, int> votes;
  for (const SelectionResult& r : results) {
    for (int f : r.indices) ++votes[f];
  }
  ConsensusResult out;
  for (const auto& [f, v] : votes) {
    if (v >= min_votes) out.indices.push_back(f);
  }
  out.empty_consensus = out.indices.empty();
  return out;
}

SplitIndices stratified_split(const std::vector<int>& y, double ratio, std::uint64_t seed) {
  SplitIndices out;
  Rng rng(seed);
  for (int cls : {+1, -1}) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] == cls) members.push_back(i);
    }
    if (members.size() < 2) {
      throw InsufficientClassError("stratified_split: class " + std::to_string(cls) +
                                   " has " + std::to_string(members.size()) + " member(s)");
    }
    rng.shuffle(members);
    const double exact = ratio * static_cast<double>(members.size());
    std::size_t take = static_cast<std::size_t>(exact);
    if (static_cast<double>(take) != exact && rng.coin()) ++take;  // floor/ceil per seeded coin
    for (std::size_t k = 0; k < members.size(); ++k) {
      (k < take ? out.train : out.test).push_back(members[k]);
    }
  }
  std::sort(out.train.begin(), out.train.end());
  std::sort(out.test.begin(), out.test.end());
  return out;
}

}  // namespace fishfinder
