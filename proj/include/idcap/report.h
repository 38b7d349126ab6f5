#ifndef IDCAP_REPORT_H_
#define IDCAP_REPORT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idcap/corpus.h"
#include "idcap/fitb_metrics.h"
#include "idcap/lexicon.h"
#include "idcap/perturbation.h"
#include "idcap/spice.h"

namespace idcap {

inline constexpr const char* kToolkitVersion = "0.1.0";

struct EntryScores {
  std::string videoset_id;
  SpiceScore spice;
  double bleu4 = 0.0;
  double rouge_l = 0.0;
  double cider = 0.0;
  double meteor_lite = 0.0;
};

struct AggregateScores {
  double spice = 0.0;
  std::optional<double> ispice;       // mean over defined entries
  std::optional<double> term_p2plus;  // over the same entries as ispice
  std::optional<double> term_p1;
  double bleu4 = 0.0;
  double rouge_l = 0.0;
  double cider = 0.0;
  double meteor_lite = 0.0;
};

struct MetricReport {
  std::vector<EntryScores> entries;  // sorted by videoset_id
  AggregateScores aggregate;
  std::size_t ispice_undefined = 0;
  std::string toolkit_version = kToolkitVersion;
  std::string lexicon_hash;
  std::uint64_t seed = 0;
};

// Scores every entry's reference against its candidate. CIDEr idf comes from
// the corpus references. Throws Error(kParseError) if a candidate is missing.
MetricReport Evaluate(const Corpus& corpus, const Lexicon& lex,
                      const SpiceOptions& options = {}, std::uint64_t seed = 0);

// Recomputes the aggregates from per-entry scores.
AggregateScores Aggregate(const std::vector<EntryScores>& entries);

std::string RenderJson(const MetricReport& report);
std::string RenderText(const MetricReport& report);

struct SensitivityReport {
  std::vector<SensitivityRow> rows;
  std::size_t captionsets = 0;
  int samples_per_kind = 0;
  std::uint64_t seed = 0;
  std::string lexicon_hash;
  std::string toolkit_version = kToolkitVersion;
};

std::string RenderJson(const SensitivityReport& report);
std::string RenderText(const SensitivityReport& report);

struct FitbReport {
  PairwiseScores scores;
  std::string toolkit_version = kToolkitVersion;
};

std::string RenderJson(const FitbReport& report);
std::string RenderText(const FitbReport& report);

}  // namespace idcap

#endif  // IDCAP_REPORT_H_
