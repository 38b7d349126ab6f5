#include "idcap/fitb_metrics.h"

#include "idcap/error.h"

namespace idcap {

PairwiseScores ScorePairwise(std::span<const FitbInstance> instances) {
  PairwiseScores s;
  std::size_t correct_blanks = 0;

  for (const FitbInstance& inst : instances) {
    const std::string& id = inst.captionset_with_blanks.videoset_id;
    if (!inst.pred_labels) {
      throw Error(ErrorCode::kMissingPredictions, "no predictions for '" + id + "'");
    }
    const auto& gt = inst.gt_labels;
    const auto& pred = *inst.pred_labels;
    if (pred.size() != gt.size()) {
      throw Error(ErrorCode::kLengthMismatch,
                  "'" + id + "' has " + std::to_string(gt.size()) + " blanks but " +
                      std::to_string(pred.size()) + " predictions");
    }
    ++s.instances;
    s.blanks += gt.size();
    for (std::size_t k = 0; k < gt.size(); ++k) correct_blanks += gt[k] == pred[k];
    if (gt.size() < 2) {
      ++s.single_blank_instances;
      continue;
    }

    for (std::size_t a = 0; a < gt.size(); ++a) {
      for (std::size_t b = a + 1; b < gt.size(); ++b) {
        bool predicted_same = pred[a] == pred[b];
        if (gt[a] == gt[b]) {
          ++s.same_pairs;
          s.correct_same += predicted_same;
        } else {
          ++s.diff_pairs;
          s.correct_diff += !predicted_same;
        }
      }
    }
  }

  auto ratio = [](std::size_t num, std::size_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  };
  s.same_acc = ratio(s.correct_same, s.same_pairs);
  s.diff_acc = ratio(s.correct_diff, s.diff_pairs);
  s.inst_acc = ratio(s.correct_same + s.correct_diff, s.same_pairs + s.diff_pairs);
  s.class_acc = (s.same_acc == 0.0 || s.diff_acc == 0.0)
                    ? 0.0
                    : 2.0 * s.same_acc * s.diff_acc / (s.same_acc + s.diff_acc);
  s.per_blank_acc = ratio(correct_blanks, s.blanks);
  return s;
}

}  // namespace idcap
