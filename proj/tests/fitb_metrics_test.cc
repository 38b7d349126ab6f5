#include "idcap/fitb_metrics.h"

#include <random>

#include <gtest/gtest.h>

#include "idcap/error.h"
#include "oracles.h"

namespace idcap {
namespace {

std::vector<IdentityLabel> L(const std::vector<int>& indices) {
  std::vector<IdentityLabel> out;
  for (int i : indices) out.push_back({i});
  return out;
}

FitbInstance Instance(const std::vector<int>& gt, const std::vector<int>& pred) {
  std::string text;
  for (int label : gt) text += "P" + std::to_string(label) + " waits. ";
  FitbInstance fitb = MakeFitb(MakeCaptionset("v", {text}));
  fitb.pred_labels = L(pred);
  return fitb;
}

TEST(PairwiseScoresTest, HandExample) {
  std::vector<FitbInstance> in = {Instance({1, 1, 2}, {1, 2, 2})};
  PairwiseScores s = ScorePairwise(in);
  EXPECT_EQ(s.same_pairs, 1u);
  EXPECT_EQ(s.correct_same, 0u);
  EXPECT_EQ(s.diff_pairs, 2u);
  EXPECT_EQ(s.correct_diff, 1u);
  EXPECT_EQ(s.same_acc, 0.0);
  EXPECT_EQ(s.diff_acc, 0.5);
  EXPECT_DOUBLE_EQ(s.inst_acc, 1.0 / 3.0);
  EXPECT_EQ(s.class_acc, 0.0);
}

TEST(PairwiseScoresTest, PerfectPredictions) {
  std::vector<FitbInstance> in = {Instance({1, 2, 1, 3}, {1, 2, 1, 3}),
                                  Instance({1, 1}, {1, 1})};
  PairwiseScores s = ScorePairwise(in);
  EXPECT_EQ(s.same_acc, 1.0);
  EXPECT_EQ(s.diff_acc, 1.0);
  EXPECT_EQ(s.inst_acc, 1.0);
  EXPECT_EQ(s.class_acc, 1.0);
  EXPECT_EQ(s.per_blank_acc, 1.0);
}

TEST(PairwiseScoresTest, ConstantPredictionAnnihilatesClassAcc) {
  std::vector<FitbInstance> in = {Instance({1, 2, 1, 2}, {1, 1, 1, 1})};
  PairwiseScores s = ScorePairwise(in);
  EXPECT_EQ(s.diff_acc, 0.0);
  EXPECT_EQ(s.same_acc, 1.0);
  EXPECT_EQ(s.class_acc, 0.0);
}

TEST(PairwiseScoresTest, SingleBlankInstancesContributeNoPairs) {
  std::vector<FitbInstance> in = {Instance({1}, {4})};
  PairwiseScores s = ScorePairwise(in);
  EXPECT_EQ(s.single_blank_instances, 1u);
  EXPECT_EQ(s.same_pairs + s.diff_pairs, 0u);
  EXPECT_EQ(s.inst_acc, 0.0);
  EXPECT_EQ(s.instances, 1u);
}

TEST(PairwiseScoresTest, RelabeledPredictionsScoreTheSame) {
  std::vector<FitbInstance> a = {Instance({1, 2, 1, 3, 2}, {2, 2, 1, 3, 1})};
  std::vector<FitbInstance> b = {Instance({1, 2, 1, 3, 2}, {7, 7, 5, 1, 5})};
  PairwiseScores sa = ScorePairwise(a);
  PairwiseScores sb = ScorePairwise(b);
  EXPECT_EQ(sa.inst_acc, sb.inst_acc);
  EXPECT_EQ(sa.class_acc, sb.class_acc);
}

TEST(PairwiseScoresTest, Errors) {
  FitbInstance missing = Instance({1, 2}, {1, 2});
  missing.pred_labels.reset();
  std::vector<FitbInstance> in = {missing};
  try {
    ScorePairwise(in);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingPredictions);
  }
  in = {Instance({1, 2}, {1})};
  try {
    ScorePairwise(in);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
  }
}

TEST(PairwiseScoresTest, MatchesDoubleLoopOracle) {
  std::mt19937 gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<FitbInstance> in;
    testing::OraclePairCounts expected;
    for (int k = 0; k < 5; ++k) {
      std::size_t blanks = 1 + gen() % 10;
      std::vector<int> gt(blanks), pred(blanks);
      for (auto& g : gt) g = 1 + gen() % 5;
      for (auto& p : pred) p = 1 + gen() % 5;
      in.push_back(Instance(gt, pred));
      testing::OracleAccumulatePairs(gt, pred, expected);
    }
    PairwiseScores s = ScorePairwise(in);
    ASSERT_EQ(s.same_pairs, expected.same_pairs);
    ASSERT_EQ(s.diff_pairs, expected.diff_pairs);
    ASSERT_EQ(s.correct_same, expected.correct_same);
    ASSERT_EQ(s.correct_diff, expected.correct_diff);
    EXPECT_LE(s.class_acc, (s.same_acc + s.diff_acc) / 2.0 + 1e-15);
  }
}

}  // namespace
}  // namespace idcap
