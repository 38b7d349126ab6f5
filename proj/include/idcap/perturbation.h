#ifndef IDCAP_PERTURBATION_H_
#define IDCAP_PERTURBATION_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idcap/caption.h"
#include "idcap/lexicon.h"
#include "idcap/ngram_metrics.h"
#include "idcap/spice.h"

namespace idcap {

// kIdentity is the unperturbed control: it never edits anything.
enum class PerturbationKind { kIdentity = 0, kSwap = 1, kAdd = 2, kRemove = 3 };

const char* PerturbationKindName(PerturbationKind kind);
std::optional<PerturbationKind> ParsePerturbationKind(std::string_view name);

struct IdentityEdit {
  TokenPosition position;
  int old_label = 0;
  int new_label = 0;

  friend bool operator==(const IdentityEdit&, const IdentityEdit&) = default;
};

struct PerturbationRecord {
  PerturbationKind kind = PerturbationKind::kIdentity;
  std::uint64_t seed = 0;
  std::vector<IdentityEdit> edits;  // sorted by position
  Captionset result;
};

// Rewrites the identity tokens at each edit position. Throws
// Error(kInvariantViolation) if a position does not hold `old_label`.
Captionset ApplyEdits(const Captionset& source, std::span<const IdentityEdit> edits);

// Identity tokens whose label occurs at least twice, when the captionset
// has at least two distinct identities; empty otherwise.
std::vector<TokenPosition> EligibleSwapPositions(const Captionset& cs);

// Replaces a uniformly sized random subset of the eligible positions, each
// with a different label drawn uniformly from the labels present.
std::optional<PerturbationRecord> PerturbSwap(const Captionset& cs, std::uint64_t seed);

// Replaces one random token of a multi-occurrence label with the smallest
// label index absent from the captionset.
std::optional<PerturbationRecord> PerturbAdd(const Captionset& cs, std::uint64_t seed);

// Replaces the token of a random single-occurrence label with a different
// label already present, removing that identity.
std::optional<PerturbationRecord> PerturbRemove(const Captionset& cs, std::uint64_t seed);

std::optional<PerturbationRecord> Perturb(PerturbationKind kind, const Captionset& cs,
                                          std::uint64_t seed);

// A named captionset-level metric. nullopt means undefined for this pair.
struct Metric {
  std::string name;
  std::function<std::optional<double>(const Captionset& reference,
                                      const Captionset& candidate)>
      score;
};

using MetricSuite = std::vector<Metric>;

// iSPICE, SPICE, BLEU-4, CIDEr, METEOR-lite and ROUGE-L. The lexicon and
// the synonym table referenced by `options` must outlive the suite.
MetricSuite DefaultMetricSuite(const Lexicon& lex, std::shared_ptr<const IdfTable> idf,
                               const SpiceOptions& options = {});

struct SensitivityRow {
  PerturbationKind kind = PerturbationKind::kIdentity;
  std::string metric;
  double mean_ratio = 0.0;  // mean of perturbed / self score
  std::size_t samples = 0;
  // Draws without a ratio: infeasible perturbation, zero or undefined
  // self score, or undefined perturbed score.
  std::size_t skipped = 0;
};

// For every captionset, kind and sample, draws a perturbation from its own
// derived stream, re-normalizes it and accumulates perturbed/self ratios.
// Rows are ordered by kind (as given) then by metric (suite order).
// Throws Error(kEmptyCorpus) on an empty corpus.
std::vector<SensitivityRow> RunSensitivity(std::span<const Captionset> corpus,
                                           const MetricSuite& suite,
                                           std::span<const PerturbationKind> kinds,
                                           int samples_per_kind, std::uint64_t seed);

}  // namespace idcap

#endif  // IDCAP_PERTURBATION_H_
