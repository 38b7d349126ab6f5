#include "idcap/perturbation.h"

#include <algorithm>
#include <map>

#include "idcap/error.h"
#include "idcap/random.h"

namespace idcap {

namespace {

std::vector<int> PresentLabels(const std::map<int, int>& counts) {
  std::vector<int> labels;
  for (const auto& [label, count] : counts) labels.push_back(label);
  return labels;
}

int LabelAt(const Captionset& cs, const TokenPosition& pos) {
  return *cs.captions[pos.caption][pos.token].identity_index;
}

int DrawOtherLabel(Rng& rng, const std::vector<int>& labels, int exclude) {
  std::vector<int> others;
  for (int l : labels) {
    if (l != exclude) others.push_back(l);
  }
  return others[rng.UniformIndex(others.size())];
}

PerturbationRecord MakeRecord(PerturbationKind kind, std::uint64_t seed,
                              const Captionset& source, std::vector<IdentityEdit> edits) {
  std::sort(edits.begin(), edits.end(),
            [](const IdentityEdit& a, const IdentityEdit& b) { return a.position < b.position; });
  PerturbationRecord record{kind, seed, std::move(edits), {}};
  record.result = ApplyEdits(source, record.edits);
  return record;
}

}  // namespace

const char* PerturbationKindName(PerturbationKind kind) {
  switch (kind) {
    case PerturbationKind::kIdentity: return "identity";
    case PerturbationKind::kSwap: return "swap";
    case PerturbationKind::kAdd: return "add";
    case PerturbationKind::kRemove: return "remove";
  }
  return "?";
}

std::optional<PerturbationKind> ParsePerturbationKind(std::string_view name) {
  for (auto kind : {PerturbationKind::kIdentity, PerturbationKind::kSwap,
                    PerturbationKind::kAdd, PerturbationKind::kRemove}) {
    if (name == PerturbationKindName(kind)) return kind;
  }
  return std::nullopt;
}

Captionset ApplyEdits(const Captionset& source, std::span<const IdentityEdit> edits) {
  Captionset out = source;
  for (const IdentityEdit& e : edits) {
    if (e.position.caption >= out.captions.size() ||
        e.position.token >= out.captions[e.position.caption].size()) {
      throw Error(ErrorCode::kInvariantViolation, "edit position out of range");
    }
    Token& token = out.captions[e.position.caption][e.position.token];
    if (!token.is_identity() || *token.identity_index != e.old_label) {
      throw Error(ErrorCode::kInvariantViolation,
                  "edit expects P" + std::to_string(e.old_label) + " at caption " +
                      std::to_string(e.position.caption) + ", token " +
                      std::to_string(e.position.token));
    }
    token = Token::Identity(e.new_label);
  }
  return out;
}

std::vector<TokenPosition> EligibleSwapPositions(const Captionset& cs) {
  std::map<int, int> counts = IdentityMultiset(cs);
  std::vector<TokenPosition> eligible;
  if (counts.size() < 2) return eligible;
  for (const TokenPosition& pos : IdentityPositions(cs)) {
    if (counts[LabelAt(cs, pos)] >= 2) eligible.push_back(pos);
  }
  return eligible;
}

std::optional<PerturbationRecord> PerturbSwap(const Captionset& cs, std::uint64_t seed) {
  std::vector<TokenPosition> eligible = EligibleSwapPositions(cs);
  if (eligible.empty()) return std::nullopt;
  std::vector<int> labels = PresentLabels(IdentityMultiset(cs));

  Rng rng(seed);
  std::size_t subset_size = 1 + rng.UniformIndex(eligible.size());
  // Partial Fisher-Yates: the first subset_size entries become the sample.
  for (std::size_t i = 0; i < subset_size; ++i) {
    std::size_t j = i + rng.UniformIndex(eligible.size() - i);
    std::swap(eligible[i], eligible[j]);
  }

  std::vector<IdentityEdit> edits;
  for (std::size_t i = 0; i < subset_size; ++i) {
    int old_label = LabelAt(cs, eligible[i]);
    edits.push_back({eligible[i], old_label, DrawOtherLabel(rng, labels, old_label)});
  }
  return MakeRecord(PerturbationKind::kSwap, seed, cs, std::move(edits));
}

std::optional<PerturbationRecord> PerturbAdd(const Captionset& cs, std::uint64_t seed) {
  std::map<int, int> counts = IdentityMultiset(cs);
  std::vector<TokenPosition> candidates;
  for (const TokenPosition& pos : IdentityPositions(cs)) {
    if (counts[LabelAt(cs, pos)] >= 2) candidates.push_back(pos);
  }
  if (candidates.empty()) return std::nullopt;

  int fresh = 1;
  while (counts.contains(fresh)) ++fresh;

  Rng rng(seed);
  const TokenPosition& pos = candidates[rng.UniformIndex(candidates.size())];
  return MakeRecord(PerturbationKind::kAdd, seed, cs, {{pos, LabelAt(cs, pos), fresh}});
}

std::optional<PerturbationRecord> PerturbRemove(const Captionset& cs, std::uint64_t seed) {
  std::map<int, int> counts = IdentityMultiset(cs);
  if (counts.size() < 2) return std::nullopt;
  std::vector<TokenPosition> singles;
  for (const TokenPosition& pos : IdentityPositions(cs)) {
    if (counts[LabelAt(cs, pos)] == 1) singles.push_back(pos);
  }
  if (singles.empty()) return std::nullopt;

  Rng rng(seed);
  const TokenPosition& pos = singles[rng.UniformIndex(singles.size())];
  int old_label = LabelAt(cs, pos);
  int new_label = DrawOtherLabel(rng, PresentLabels(counts), old_label);
  return MakeRecord(PerturbationKind::kRemove, seed, cs, {{pos, old_label, new_label}});
}

std::optional<PerturbationRecord> Perturb(PerturbationKind kind, const Captionset& cs,
                                          std::uint64_t seed) {
  switch (kind) {
    case PerturbationKind::kIdentity:
      return PerturbationRecord{kind, seed, {}, cs};
    case PerturbationKind::kSwap: return PerturbSwap(cs, seed);
    case PerturbationKind::kAdd: return PerturbAdd(cs, seed);
    case PerturbationKind::kRemove: return PerturbRemove(cs, seed);
  }
  return std::nullopt;
}

MetricSuite DefaultMetricSuite(const Lexicon& lex, std::shared_ptr<const IdfTable> idf,
                               const SpiceOptions& options) {
  MetricSuite suite;
  suite.push_back({"iSPICE", [&lex, options](const Captionset& r, const Captionset& c) {
                     return ISpice(r, c, lex, options);
                   }});
  suite.push_back({"SPICE", [&lex, options](const Captionset& r, const Captionset& c) {
                     return std::optional<double>(Spice(r, c, lex, options));
                   }});
  suite.push_back({"BLEU-4", [](const Captionset& r, const Captionset& c) {
                     return std::optional<double>(Bleu4(r, c));
                   }});
  suite.push_back({"CIDEr", [idf](const Captionset& r, const Captionset& c) {
                     return std::optional<double>(Cider(r, c, *idf));
                   }});
  suite.push_back({"METEOR-lite", [](const Captionset& r, const Captionset& c) {
                     return std::optional<double>(MeteorLite(r, c));
                   }});
  suite.push_back({"ROUGE-L", [](const Captionset& r, const Captionset& c) {
                     return std::optional<double>(RougeL(r, c));
                   }});
  return suite;
}

std::vector<SensitivityRow> RunSensitivity(std::span<const Captionset> corpus,
                                           const MetricSuite& suite,
                                           std::span<const PerturbationKind> kinds,
                                           int samples_per_kind, std::uint64_t seed) {
  if (corpus.empty()) throw Error(ErrorCode::kEmptyCorpus, "sensitivity corpus is empty");

  struct Accumulator {
    double ratio_sum = 0.0;
    std::size_t samples = 0;
    std::size_t skipped = 0;
  };
  std::vector<std::vector<Accumulator>> acc(kinds.size(),
                                            std::vector<Accumulator>(suite.size()));

  for (const Captionset& source : corpus) {
    Captionset reference = NormalizeIdentities(source);
    std::vector<std::optional<double>> self(suite.size());
    for (std::size_t m = 0; m < suite.size(); ++m) {
      self[m] = suite[m].score(reference, reference);
    }

    for (std::size_t k = 0; k < kinds.size(); ++k) {
      for (int sample = 0; sample < samples_per_kind; ++sample) {
        std::uint64_t stream = DeriveStreamSeed(seed, reference.videoset_id,
                                                static_cast<int>(kinds[k]), sample);
        std::optional<PerturbationRecord> record = Perturb(kinds[k], reference, stream);
        if (!record) {
          for (Accumulator& a : acc[k]) ++a.skipped;
          continue;
        }
        Captionset candidate = NormalizeIdentities(record->result);
        for (std::size_t m = 0; m < suite.size(); ++m) {
          Accumulator& a = acc[k][m];
          if (!self[m] || *self[m] == 0.0) {
            ++a.skipped;
            continue;
          }
          std::optional<double> perturbed = suite[m].score(reference, candidate);
          if (!perturbed) {
            ++a.skipped;
            continue;
          }
          a.ratio_sum += *perturbed / *self[m];
          ++a.samples;
        }
      }
    }
  }

  std::vector<SensitivityRow> rows;
  for (std::size_t k = 0; k < kinds.size(); ++k) {
    for (std::size_t m = 0; m < suite.size(); ++m) {
      const Accumulator& a = acc[k][m];
      rows.push_back({kinds[k], suite[m].name,
                      a.samples == 0 ? 0.0 : a.ratio_sum / static_cast<double>(a.samples),
                      a.samples, a.skipped});
    }
  }
  return rows;
}

}  // namespace idcap
