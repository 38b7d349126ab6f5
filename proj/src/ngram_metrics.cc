#include "idcap/ngram_metrics.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "idcap/error.h"
#include "idcap/lemmatizer.h"

namespace idcap {

namespace {

constexpr double kRougeBeta = 1.2;
constexpr double kMeteorAlpha = 0.9;
constexpr double kMeteorBeta = 3.0;
constexpr double kMeteorGamma = 0.5;
constexpr double kCiderScale = 10.0;

void CheckAligned(const Captionset& reference, const Captionset& candidate) {
  if (reference.captions.size() != candidate.captions.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "reference has " + std::to_string(reference.captions.size()) +
                    " captions, candidate has " +
                    std::to_string(candidate.captions.size()));
  }
}

template <typename PairScore>
double MeanOverPairs(const Captionset& reference, const Captionset& candidate,
                     PairScore score) {
  CheckAligned(reference, candidate);
  if (reference.captions.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < reference.captions.size(); ++i) {
    sum += score(ContentWords(reference.captions[i]),
                 ContentWords(candidate.captions[i]));
  }
  return sum / static_cast<double>(reference.captions.size());
}

}  // namespace

int NgramProfile::Total(int n) const {
  int total = 0;
  for (const auto& [gram, count] : counts[n - 1]) total += count;
  return total;
}

std::vector<std::string> ContentWords(const TokenSequence& tokens) {
  std::vector<std::string> words;
  for (const Token& t : tokens) {
    if (!t.is_punctuation()) words.push_back(t.surface);
  }
  return words;
}

NgramProfile BuildProfile(const std::vector<std::string>& words) {
  NgramProfile profile;
  for (int n = 1; n <= kMaxNgramOrder; ++n) {
    for (std::size_t i = 0; i + n <= words.size(); ++i) {
      std::string gram = words[i];
      for (int k = 1; k < n; ++k) gram += ' ' + words[i + k];
      ++profile.counts[n - 1][gram];
    }
  }
  return profile;
}

double IdfTable::Idf(const std::string& ngram) const {
  int df = std::max(DocumentFrequency(ngram), 1);
  return std::log(static_cast<double>(documents_) / df);
}

int IdfTable::DocumentFrequency(const std::string& ngram) const {
  auto it = df_.find(ngram);
  return it == df_.end() ? 0 : it->second;
}

IdfTable BuildIdf(std::span<const Captionset> references) {
  IdfTable table;
  for (const Captionset& cs : references) {
    for (const TokenSequence& caption : cs.captions) {
      ++table.documents_;
      NgramProfile profile = BuildProfile(ContentWords(caption));
      for (const auto& order : profile.counts) {
        for (const auto& [gram, count] : order) ++table.df_[gram];
      }
    }
  }
  if (table.documents_ == 0) {
    throw Error(ErrorCode::kEmptyCorpus, "no reference captions to build idf from");
  }
  return table;
}

double Bleu4(const Captionset& reference, const Captionset& candidate) {
  CheckAligned(reference, candidate);
  std::array<long, kMaxNgramOrder> matched{};
  std::array<long, kMaxNgramOrder> total{};
  long ref_length = 0;
  long cand_length = 0;

  for (std::size_t i = 0; i < reference.captions.size(); ++i) {
    std::vector<std::string> ref_words = ContentWords(reference.captions[i]);
    std::vector<std::string> cand_words = ContentWords(candidate.captions[i]);
    ref_length += static_cast<long>(ref_words.size());
    cand_length += static_cast<long>(cand_words.size());
    NgramProfile ref = BuildProfile(ref_words);
    NgramProfile cand = BuildProfile(cand_words);
    for (int n = 0; n < kMaxNgramOrder; ++n) {
      for (const auto& [gram, count] : cand.counts[n]) {
        total[n] += count;
        auto it = ref.counts[n].find(gram);
        if (it != ref.counts[n].end()) matched[n] += std::min(count, it->second);
      }
    }
  }

  if (cand_length == 0) return ref_length == 0 ? 1.0 : 0.0;
  if (matched[0] == 0) return 0.0;

  bool smooth = false;
  for (int n = 1; n < kMaxNgramOrder; ++n) smooth = smooth || matched[n] == 0;

  double log_sum = std::log(static_cast<double>(matched[0]) / total[0]);
  for (int n = 1; n < kMaxNgramOrder; ++n) {
    double p = smooth ? (matched[n] + 1.0) / (total[n] + 1.0)
                      : static_cast<double>(matched[n]) / total[n];
    log_sum += std::log(p);
  }
  double brevity = cand_length < ref_length
                       ? std::exp(1.0 - static_cast<double>(ref_length) / cand_length)
                       : 1.0;
  return brevity * std::exp(log_sum / kMaxNgramOrder);
}

std::size_t LcsLength(const std::vector<std::string>& a,
                      const std::vector<std::string>& b) {
  std::vector<std::size_t> row(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = 0;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t above = row[j];
      row[j] = a[i - 1] == b[j - 1] ? diagonal + 1 : std::max(row[j], row[j - 1]);
      diagonal = above;
    }
  }
  return row[b.size()];
}

double RougeLPair(const std::vector<std::string>& reference,
                  const std::vector<std::string>& candidate) {
  if (reference.empty() && candidate.empty()) return 1.0;
  std::size_t lcs = LcsLength(reference, candidate);
  if (lcs == 0) return 0.0;
  double precision = static_cast<double>(lcs) / candidate.size();
  double recall = static_cast<double>(lcs) / reference.size();
  double beta2 = kRougeBeta * kRougeBeta;
  return (1.0 + beta2) * precision * recall / (recall + beta2 * precision);
}

double RougeL(const Captionset& reference, const Captionset& candidate) {
  return MeanOverPairs(reference, candidate, RougeLPair);
}

double CiderPair(const std::vector<std::string>& reference,
                 const std::vector<std::string>& candidate, const IdfTable& idf) {
  NgramProfile ref = BuildProfile(reference);
  NgramProfile cand = BuildProfile(candidate);
  double sum = 0.0;
  int orders = 0;
  for (int n = 0; n < kMaxNgramOrder; ++n) {
    // Orders longer than both captions carry no evidence either way.
    if (ref.counts[n].empty() && cand.counts[n].empty()) continue;
    ++orders;
    double dot = 0.0, ref_norm = 0.0, cand_norm = 0.0;
    for (const auto& [gram, count] : ref.counts[n]) {
      double w = count * idf.Idf(gram);
      ref_norm += w * w;
    }
    for (const auto& [gram, count] : cand.counts[n]) {
      double weight = idf.Idf(gram);
      double w = count * weight;
      cand_norm += w * w;
      auto it = ref.counts[n].find(gram);
      if (it != ref.counts[n].end()) dot += w * it->second * weight;
    }
    if (ref_norm == 0.0 || cand_norm == 0.0) {
      // Every n-gram has idf 0 on both sides: fall back to raw equality.
      if (ref_norm == 0.0 && cand_norm == 0.0 && ref.counts[n] == cand.counts[n]) {
        sum += 1.0;
      }
      continue;
    }
    sum += dot / (std::sqrt(ref_norm) * std::sqrt(cand_norm));
  }
  if (orders == 0) return kCiderScale;  // both captions empty
  return kCiderScale * sum / orders;
}

double Cider(const Captionset& reference, const Captionset& candidate,
             const IdfTable& idf) {
  return MeanOverPairs(reference, candidate,
                       [&idf](const auto& r, const auto& c) { return CiderPair(r, c, idf); });
}

double MeteorPair(const std::vector<std::string>& reference,
                  const std::vector<std::string>& candidate) {
  if (reference.empty() && candidate.empty()) return 1.0;
  if (reference.empty() || candidate.empty()) return 0.0;

  // alignment[i] = matched reference position of candidate word i, or -1.
  std::vector<long> alignment(candidate.size(), -1);
  std::vector<bool> ref_used(reference.size(), false);
  auto align_stage = [&](auto&& equal) {
    for (std::size_t i = 0; i < candidate.size(); ++i) {
      if (alignment[i] >= 0) continue;
      for (std::size_t j = 0; j < reference.size(); ++j) {
        if (!ref_used[j] && equal(candidate[i], reference[j])) {
          alignment[i] = static_cast<long>(j);
          ref_used[j] = true;
          break;
        }
      }
    }
  };
  align_stage([](const std::string& a, const std::string& b) { return a == b; });
  align_stage([](const std::string& a, const std::string& b) { return Stem(a) == Stem(b); });

  std::size_t matches = 0;
  std::size_t chunks = 0;
  long previous = -2;
  for (long j : alignment) {
    if (j < 0) {
      previous = -2;
      continue;
    }
    ++matches;
    if (j != previous + 1) ++chunks;
    previous = j;
  }
  if (matches == 0) return 0.0;

  double precision = static_cast<double>(matches) / candidate.size();
  double recall = static_cast<double>(matches) / reference.size();
  double f_mean = precision * recall /
                  (kMeteorAlpha * precision + (1.0 - kMeteorAlpha) * recall);
  double penalty = kMeteorGamma *
                   std::pow(static_cast<double>(chunks) / matches, kMeteorBeta);
  return f_mean * (1.0 - penalty);
}

double MeteorLite(const Captionset& reference, const Captionset& candidate) {
  return MeanOverPairs(reference, candidate, MeteorPair);
}

}  // namespace idcap
