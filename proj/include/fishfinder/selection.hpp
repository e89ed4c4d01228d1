#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fishfinder/scaling.hpp"

namespace fishfinder {

enum class SelectionMethod { Correlation, Forward, Backward };

const char* to_string(SelectionMethod m);

struct SelectionResult {
  SelectionMethod method = SelectionMethod::Correlation;
  std::vector<int> indices;  // unique, within manifest range
};

// Greedy scan in manifest order: when |pearson(fi, fj)| >= threshold for a
// surviving i < j, feature j is dropped. Two constant features count as
// perfectly correlated; a constant against a non-constant does not.
SelectionResult correlation_filter(const Matrix& X, double threshold = 0.9);

// Wrapper selection scored by 5-fold cross-validated accuracy of the same
// linear SVM. Folds are seeded and stratified per class so every training
// fold keeps both labels. Ties break toward the lower manifest index.
double cv_accuracy(const Matrix& X, const std::vector<int>& y,
                   const std::vector<int>& feature_subset, double C, std::uint64_t seed,
                   int folds = 5);

// max_k <= 0 means unbounded; stops when no candidate improves by > 1e-6
SelectionResult forward_select(const Matrix& X, const std::vector<int>& y, int max_k,
                               std::uint64_t seed, double C = 1.0);

// Mirror of forward_select: drops features while accuracy does not decrease,
// never below one remaining feature.
SelectionResult backward_eliminate(const Matrix& X, const std::vector<int>& y,
                                   std::uint64_t seed, double C = 1.0);

struct ConsensusResult {
  std::vector<int> indices;  // ordered by manifest index
  bool empty_consensus = false;
};

// Features voted for by >= min_votes of the given methods.
ConsensusResult consensus_select(const std::vector<SelectionResult>& results,
                                 int min_votes = 2);

// Deterministic 50% stratified split over labels (+1/-1): per-class seeded
// shuffle, train takes floor or ceil of ratio*n per a seeded coin when
// fractional. Throws InsufficientClassError when a class has < 2 members.
struct SplitIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};
SplitIndices stratified_split(const std::vector<int>& y, double ratio, std::uint64_t seed);

}  // namespace fishfinder
