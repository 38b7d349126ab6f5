#ifndef IDCAP_FITB_METRICS_H_
#define IDCAP_FITB_METRICS_H_

#include <cstddef>
#include <span>

#include "idcap/caption.h"

namespace idcap {

// Pairwise fill-in-the-blanks accuracies, micro-averaged over every blank
// pair formed inside a captionset. Accuracies over zero pairs are 0.
struct PairwiseScores {
  double same_acc = 0.0;
  double diff_acc = 0.0;
  double inst_acc = 0.0;
  double class_acc = 0.0;  // harmonic mean of same_acc and diff_acc

  std::size_t same_pairs = 0;
  std::size_t diff_pairs = 0;
  std::size_t correct_same = 0;
  std::size_t correct_diff = 0;

  std::size_t instances = 0;
  std::size_t single_blank_instances = 0;  // contribute no pairs

  // Fraction of blanks whose predicted label equals the ground truth.
  // Not invariant to relabeling; reported for reference only.
  double per_blank_acc = 0.0;
  std::size_t blanks = 0;
};

// Throws Error(kMissingPredictions) if an instance has no predictions, and
// Error(kLengthMismatch) if prediction and blank counts differ.
PairwiseScores ScorePairwise(std::span<const FitbInstance> instances);

}  // namespace idcap

#endif  // IDCAP_FITB_METRICS_H_
