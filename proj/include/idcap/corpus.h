#ifndef IDCAP_CORPUS_H_
#define IDCAP_CORPUS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idcap/caption.h"
#include "idcap/lexicon.h"
#include "idcap/tuples.h"

namespace idcap {

struct CorpusEntry {
  Captionset reference;                 // tokenized and identity-normalized
  IdentityMapping reference_mapping;    // original -> normalized index
  std::optional<Captionset> candidate;  // normalized independently
  IdentityMapping candidate_mapping;
  std::optional<TupleSet> reference_tuples;  // external parses, relabeled
  std::optional<TupleSet> candidate_tuples;
  std::optional<FitbInstance> fitb;     // present when the reference has ids
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  std::vector<std::string> diagnostics;

  std::vector<Captionset> References() const;
};

// Line-delimited JSON, one videoset per line:
//   {"videoset_id": "...", "captions": ["P1 carries P2.", ...]}
// A record may instead hold FITB text with "[...]" blanks plus
// "gt_labels": ["P1", ...]; the blanks are filled to form the reference.
// Throws Error(kParseError) with the 1-based line number,
// Error(kDuplicateVideosetId) or Error(kEmptyCorpus).
Corpus ParseCorpus(std::string_view text);

// Reads a corpus file. Files ending in ".tsv" go through ConvertTsv first.
Corpus LoadCorpus(const std::string& path);

// Two-column TSV (videoset_id <TAB> caption). Consecutive rows are grouped
// into videosets of `group_size` captions, keyed by the first row's id.
// Returns the equivalent line-delimited JSON text.
std::string ConvertTsv(std::string_view text, std::size_t group_size = 5);

// Canonical line-delimited JSON of the references.
std::string SerializeCorpus(const Corpus& corpus);

// Joins candidate captionsets by videoset_id. Every reference needs exactly
// one candidate with the same number of captions.
void AttachCandidates(Corpus& corpus, std::string_view candidates_text);

// Joins {"videoset_id", "pred_labels": ["P1", ...]} records to FITB
// instances.
void AttachPredictions(Corpus& corpus, std::string_view predictions_text);

// Joins external tuple records {"videoset_id", "tuples": [[...], ...]} with
// an optional "candidate_tuples" field. Identity slots are relabeled with
// the entry's normalization mapping.
void AttachExternalTuples(Corpus& corpus, std::string_view tuples_text);

// One {"videoset_id", "tuples"} line per entry, in corpus order, using the
// external reference tuples when attached and the extractor otherwise.
// Labels are written in the corpus file's original numbering, so the dump
// can be fed back through AttachExternalTuples.
std::string DumpTuples(const Corpus& corpus, const Lexicon& lex);

std::string ReadFile(const std::string& path);

}  // namespace idcap

#endif  // IDCAP_CORPUS_H_
