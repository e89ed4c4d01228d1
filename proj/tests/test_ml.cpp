#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "fishfinder/errors.hpp"
#include "fishfinder/rng.hpp"
#include "fishfinder/scaling.hpp"
#include "fishfinder/selection.hpp"
#include "fishfinder/svm.hpp"
#include "oracles.hpp"

using namespace fishfinder;

namespace {

// 2-D labeled blob data that a linear separator mostly handles
void make_blobs(std::size_t n_per_class, std::uint64_t seed, double gap, Matrix& X,
                std::vector<int>& y) {
  Rng rng(seed);
  X.clear();
  y.clear();
  for (std::size_t i = 0; i < n_per_class; ++i) {
    X.push_back({rng.normal(gap, 1.0), rng.normal(gap, 1.0)});
    y.push_back(+1);
    X.push_back({rng.normal(-gap, 1.0), rng.normal(-gap, 1.0)});
    y.push_back(-1);
  }
}

}  // namespace

TEST_CASE("min-max maps a column onto [0,1]") {
  const Matrix X = {{2.0}, {4.0}, {6.0}};
  const ScalerParams p = fit_minmax(X);
  const Matrix out = apply_minmax(p, X);
  CHECK(out[0][0] == 0.0);
  CHECK(out[1][0] == 0.5);
  CHECK(out[2][0] == 1.0);
}

TEST_CASE("min-max sends constant columns to zero") {
  const Matrix X = {{5.0}, {5.0}};
  const Matrix out = apply_minmax(fit_minmax(X), X);
  CHECK(out[0][0] == 0.0);
  CHECK(out[1][0] == 0.0);
}

TEST_CASE("min-max clamps unseen values") {
  const ScalerParams p = fit_minmax({{0.0}, {4.0}});
  const Matrix out = apply_minmax(p, {{10.0}, {-3.0}});
  CHECK(out[0][0] == 1.0);
  CHECK(out[1][0] == 0.0);
}

TEST_CASE("stratified split halves a 26/26 cohort into 13/13/13/13") {
  std::vector<int> y;
  for (int i = 0; i < 26; ++i) y.push_back(+1);
  for (int i = 0; i < 26; ++i) y.push_back(-1);
  const SplitIndices s = stratified_split(y, 0.5, 11);
  CHECK(s.train.size() == 26);
  CHECK(s.test.size() == 26);
  int train_pos = 0, test_pos = 0;
  for (std::size_t i : s.train) train_pos += y[i] > 0;
  for (std::size_t i : s.test) test_pos += y[i] > 0;
  CHECK(train_pos == 13);
  CHECK(test_pos == 13);

  // disjoint and exhaustive
  std::vector<std::size_t> all = s.train;
  all.insert(all.end(), s.test.begin(), s.test.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i] == i);

  const SplitIndices again = stratified_split(y, 0.5, 11);
  CHECK(again.train == s.train);
  CHECK(again.test == s.test);
}

TEST_CASE("fractional per-class counts round by a seeded coin") {
  std::vector<int> y;
  for (int i = 0; i < 3; ++i) y.push_back(+1);
  for (int i = 0; i < 26; ++i) y.push_back(-1);
  const SplitIndices s = stratified_split(y, 0.5, 3);
  std::size_t train_pos = 0;
  for (std::size_t i : s.train) train_pos += y[i] > 0;
  CHECK(train_pos >= 1);  // floor(1.5) or ceil(1.5)
  CHECK(train_pos <= 2);
  CHECK(s.train.size() + s.test.size() == 29);
}

TEST_CASE("split refuses classes with fewer than two members") {
  std::vector<int> y = {+1, -1, -1, -1};
  CHECK_THROWS_AS(stratified_split(y, 0.5, 1), InsufficientClassError);
}

TEST_CASE("correlation filter keeps one of a duplicated column") {
  Rng rng(5);
  Matrix X;
  for (int i = 0; i < 30; ++i) {
    const double v = rng.normal(0.0, 1.0);
    X.push_back({v, rng.normal(0.0, 1.0), v});
  }
  const SelectionResult r = correlation_filter(X, 0.9);
  CHECK(r.indices == std::vector<int>{0, 1});
}

TEST_CASE("correlation filter keeps orthogonal features") {
  const Matrix X = {{1.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
  const SelectionResult r = correlation_filter(X, 0.9);
  CHECK(r.indices == std::vector<int>{0, 1});
}

TEST_CASE("correlation filter drops the later of an r=0.95 pair") {
  // f3 = 0.95-correlated copy of f1 by construction
  Rng rng(8);
  Matrix X;
  for (int i = 0; i < 400; ++i) {
    const double a = rng.normal(0.0, 1.0);
    const double noise = rng.normal(0.0, std::sqrt(1.0 / (0.95 * 0.95) - 1.0));
    X.push_back({a, rng.normal(0.0, 1.0), a + noise});
  }
  const SelectionResult r = correlation_filter(X, 0.9);
  CHECK(std::find(r.indices.begin(), r.indices.end(), 0) != r.indices.end());
  CHECK(std::find(r.indices.begin(), r.indices.end(), 2) == r.indices.end());
}

TEST_CASE("forward selection finds the separating feature first") {
  Rng rng(9);
  Matrix X;
  std::vector<int> y;
  for (int i = 0; i < 24; ++i) {
    const int label = i % 2 == 0 ? +1 : -1;
    // feature 1 separates perfectly, features 0 and 2 are noise
    X.push_back({rng.normal(0.0, 1.0), label * 2.0 + rng.normal(0.0, 0.1),
                 rng.normal(0.0, 1.0)});
    y.push_back(label);
  }
  const SelectionResult r = forward_select(X, y, -1, 4);
  REQUIRE_FALSE(r.indices.empty());
  CHECK(std::find(r.indices.begin(), r.indices.end(), 1) != r.indices.end());

  CHECK(forward_select(X, y, 0, 4).indices.empty());
  CHECK(forward_select(X, y, -1, 4).indices == r.indices);  // seeded determinism
}

TEST_CASE("backward elimination sheds a pure-noise feature") {
  Rng rng(10);
  Matrix X;
  std::vector<int> y;
  for (int i = 0; i < 24; ++i) {
    const int label = i % 2 == 0 ? +1 : -1;
    X.push_back({label * 2.0 + rng.normal(0.0, 0.1), rng.normal(0.0, 1.0)});
    y.push_back(label);
  }
  const SelectionResult r = backward_eliminate(X, y, 4);
  CHECK(r.indices == std::vector<int>{0});
  CHECK(backward_eliminate(X, y, 4).indices == r.indices);
}

TEST_CASE("backward elimination keeps a single-feature input") {
  Matrix X = {{1.0}, {-1.0}, {0.8}, {-0.7}};
  std::vector<int> y = {+1, -1, +1, -1};
  CHECK(backward_eliminate(X, y, 2).indices == std::vector<int>{0});
}

TEST_CASE("consensus voting") {
  SelectionResult a{SelectionMethod::Correlation, {1, 2}};
  SelectionResult b{SelectionMethod::Forward, {2, 3}};
  SelectionResult c{SelectionMethod::Backward, {3}};
  const ConsensusResult r = consensus_select({a, b, c}, 2);
  CHECK(r.indices == std::vector<int>{2, 3});
  CHECK_FALSE(r.empty_consensus);

  const ConsensusResult all3 = consensus_select({a, b, c}, 1);
  CHECK(all3.indices == std::vector<int>{1, 2, 3});

  SelectionResult d{SelectionMethod::Correlation, {1}};
  SelectionResult e{SelectionMethod::Forward, {2}};
  SelectionResult f{SelectionMethod::Backward, {3}};
  const ConsensusResult none = consensus_select({d, e, f}, 2);
  CHECK(none.empty_consensus);
  CHECK(none.indices.empty());
}

TEST_CASE("hard-margin pair recovers the analytic separator") {
  const Matrix X = {{0.0, 0.0}, {2.0, 2.0}};
  const std::vector<int> y = {-1, +1};
  const SvmModel m = train_svm(X, y, 1e6);
  CHECK(m.weights[0] == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(m.weights[1] == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(m.bias == doctest::Approx(-1.0).epsilon(1e-3));
}

TEST_CASE("duplicating every point leaves the boundary unchanged") {
  Matrix X;
  std::vector<int> y;
  make_blobs(8, 21, 1.5, X, y);
  const SvmModel base = train_svm(X, y, 1.0);

  Matrix X2 = X;
  std::vector<int> y2 = y;
  X2.insert(X2.end(), X.begin(), X.end());
  y2.insert(y2.end(), y.begin(), y.end());
  const SvmModel doubled = train_svm(X2, y2, 1.0);

  // same argmin up to solver tolerance, though the objective scale differs
  CHECK(doubled.weights[0] == doctest::Approx(base.weights[0]).epsilon(1e-4));
  CHECK(doubled.weights[1] == doctest::Approx(base.weights[1]).epsilon(1e-4));
  CHECK(doubled.bias == doctest::Approx(base.bias).epsilon(1e-4));
}

TEST_CASE("six-point objective matches the exhaustive oracle") {
  Rng rng(100);
  Matrix X;
  std::vector<int> y;
  for (int i = 0; i < 6; ++i) {
    X.push_back({rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)});
    y.push_back(i % 2 == 0 ? +1 : -1);
  }
  const SvmModel m = train_svm(X, y, 1.0);
  const double smo_obj = svm_primal_objective(m, X, y);
  const double oracle_obj = oracles::svm_bruteforce_objective(X, y, 1.0);
  CHECK(std::abs(smo_obj - oracle_obj) <= 1e-6);
}

TEST_CASE("training refuses single-class labels") {
  const Matrix X = {{0.0}, {1.0}};
  CHECK_THROWS_AS(train_svm(X, {1, 1}, 1.0), DegenerateLabelsError);
}

TEST_CASE("prediction ties go to Control and dimensions are enforced") {
  SvmModel m;
  m.weights = {1.0};
  m.bias = 0.0;
  CHECK(predict(m, {0.0}) == Label::Control);
  CHECK(predict(m, {0.5}) == Label::ADHD);
  CHECK_THROWS_AS(m.decision_value({1.0, 2.0}), DimensionMismatchError);
}

TEST_CASE("evaluation reproduces the published-style confusion metrics") {
  // one synthetic test set engineered to the (9,1,15,1) confusion counts
  SvmModel m;
  m.weights = {1.0};
  m.bias = 0.0;
  Matrix X;
  std::vector<Label> y;
  for (int i = 0; i < 9; ++i) { X.push_back({+1.0}); y.push_back(Label::ADHD); }
  X.push_back({-1.0}); y.push_back(Label::ADHD);            // fn
  for (int i = 0; i < 15; ++i) { X.push_back({-1.0}); y.push_back(Label::Control); }
  X.push_back({+1.0}); y.push_back(Label::Control);         // fp
  const EvalReport r = evaluate(m, X, y);
  CHECK(r.tp == 9);
  CHECK(r.fn == 1);
  CHECK(r.tn == 15);
  CHECK(r.fp == 1);
  CHECK(*r.accuracy == doctest::Approx(0.9231).epsilon(1e-4));
  CHECK(*r.sensitivity == doctest::Approx(0.9000).epsilon(1e-4));
  CHECK(*r.specificity == doctest::Approx(0.9375).epsilon(1e-4));
  CHECK(*r.precision == doctest::Approx(0.9000).epsilon(1e-4));
  CHECK(*r.f1 == doctest::Approx(0.9000).epsilon(1e-4));
}

TEST_CASE("all-correct predictions score 1.0 across the board") {
  SvmModel m;
  m.weights = {1.0};
  m.bias = 0.0;
  const Matrix X = {{1.0}, {2.0}, {-1.0}, {-2.0}};
  const std::vector<Label> y = {Label::ADHD, Label::ADHD, Label::Control, Label::Control};
  const EvalReport r = evaluate(m, X, y);
  CHECK(*r.accuracy == 1.0);
  CHECK(*r.sensitivity == 1.0);
  CHECK(*r.specificity == 1.0);
  CHECK(*r.precision == 1.0);
  CHECK(*r.f1 == 1.0);
}

TEST_CASE("selection is invariant to positive rescaling of a raw column") {
  Matrix X;
  std::vector<int> y;
  make_blobs(10, 33, 1.0, X, y);

  struct Picks {
    std::vector<int> corr, fwd, bwd;
  };
  const auto run = [&](const Matrix& raw) {
    const ScalerParams p = fit_minmax(raw);
    const Matrix scaled = apply_minmax(p, raw);
    Picks out;
    out.corr = correlation_filter(scaled, 0.9).indices;
    out.fwd = forward_select(scaled, y, -1, 7).indices;
    out.bwd = backward_eliminate(scaled, y, 7).indices;
    return out;
  };

  Matrix X_scaled_col = X;
  for (auto& row : X_scaled_col) row[1] *= 32.0;

  const Picks a = run(X);
  const Picks b = run(X_scaled_col);
  CHECK(a.corr == b.corr);
  CHECK(a.fwd == b.fwd);
  CHECK(a.bwd == b.bwd);
}
