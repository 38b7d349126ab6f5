#ifndef IDCAP_NGRAM_METRICS_H_
#define IDCAP_NGRAM_METRICS_H_

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "idcap/caption.h"

namespace idcap {

inline constexpr int kMaxNgramOrder = 4;

// n-grams are stored as their words joined by single spaces; tokens never
// contain whitespace, so the key is unambiguous.
struct NgramProfile {
  std::array<std::map<std::string, int>, kMaxNgramOrder> counts;

  int Total(int n) const;  // number of n-gram occurrences of order n
};

// Non-punctuation surfaces of a caption.
std::vector<std::string> ContentWords(const TokenSequence& tokens);

NgramProfile BuildProfile(const std::vector<std::string>& words);

class IdfTable {
 public:
  double Idf(const std::string& ngram) const;
  std::size_t document_count() const { return documents_; }
  int DocumentFrequency(const std::string& ngram) const;

 private:
  friend IdfTable BuildIdf(std::span<const Captionset> references);
  std::map<std::string, int> df_;
  std::size_t documents_ = 0;
};

// One document per reference caption. idf(g) = log(D / max(df(g), 1)).
// Throws Error(kEmptyCorpus) when there are no captions.
IdfTable BuildIdf(std::span<const Captionset> references);

// All metrics align caption i of the reference with caption i of the
// candidate and throw Error(kLengthMismatch) when the counts differ.

// Corpus BLEU-4 over the aligned pairs: micro-aggregated clipped precisions,
// add-one smoothing of orders 2..4 when any of them has zero matches,
// brevity penalty exp(1 - r/c) for c < r.
double Bleu4(const Captionset& reference, const Captionset& candidate);

// Mean per-pair LCS F-measure with recall weight beta = 1.2.
double RougeL(const Captionset& reference, const Captionset& candidate);

// Mean per-pair CIDEr: average over n = 1..4 of TF-IDF cosine similarity,
// scaled by 10. Orders with no n-grams on either side are left out of the
// average; two empty captions score 10.
double Cider(const Captionset& reference, const Captionset& candidate,
             const IdfTable& idf);

// Mean per-pair METEOR with exact then stem matching (no synonyms).
double MeteorLite(const Captionset& reference, const Captionset& candidate);

// Pair-level building blocks, exposed for testing.
std::size_t LcsLength(const std::vector<std::string>& a,
                      const std::vector<std::string>& b);
double RougeLPair(const std::vector<std::string>& reference,
                  const std::vector<std::string>& candidate);
double CiderPair(const std::vector<std::string>& reference,
                 const std::vector<std::string>& candidate, const IdfTable& idf);
double MeteorPair(const std::vector<std::string>& reference,
                  const std::vector<std::string>& candidate);

}  // namespace idcap

#endif  // IDCAP_NGRAM_METRICS_H_
