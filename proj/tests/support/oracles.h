#ifndef IDCAP_TESTS_SUPPORT_ORACLES_H_
#define IDCAP_TESTS_SUPPORT_ORACLES_H_

// Brute-force reference implementations. They deliberately share no code
// with the library: tuples are plain string vectors, sets are deduplicated
// by linear scans, and pairs are enumerated over all ordered index pairs.

#include <cstddef>
#include <string>
#include <vector>

namespace idcap::testing {

using RawTuple = std::vector<std::string>;

struct OracleMatch {
  std::size_t matched = 0;
  std::size_t reference_size = 0;
  std::size_t candidate_size = 0;
};

inline std::vector<RawTuple> Dedupe(const std::vector<RawTuple>& tuples) {
  std::vector<RawTuple> out;
  for (const RawTuple& t : tuples) {
    bool seen = false;
    for (const RawTuple& u : out) seen = seen || u == t;
    if (!seen) out.push_back(t);
  }
  return out;
}

inline OracleMatch OracleMatchTuples(const std::vector<RawTuple>& reference,
                                     const std::vector<RawTuple>& candidate) {
  std::vector<RawTuple> r = Dedupe(reference);
  std::vector<RawTuple> c = Dedupe(candidate);
  OracleMatch m{0, r.size(), c.size()};
  for (const RawTuple& a : r) {
    for (const RawTuple& b : c) {
      if (a.size() != b.size()) continue;
      bool equal = true;
      for (std::size_t i = 0; i < a.size(); ++i) equal = equal && a[i] == b[i];
      if (equal) ++m.matched;
    }
  }
  return m;
}

inline double OracleF1(const OracleMatch& m) {
  if (m.reference_size == 0 && m.candidate_size == 0) return 1.0;
  if (m.reference_size == 0 || m.candidate_size == 0) return 0.0;
  double p = static_cast<double>(m.matched) / m.candidate_size;
  double r = static_cast<double>(m.matched) / m.reference_size;
  if (p + r == 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

struct OraclePairCounts {
  std::size_t same_pairs = 0, diff_pairs = 0, correct_same = 0, correct_diff = 0;
};

// Visits every ordered pair (i, j), i != j, and halves the totals.
inline void OracleAccumulatePairs(const std::vector<int>& gt, const std::vector<int>& pred,
                                  OraclePairCounts& acc) {
  std::size_t same = 0, diff = 0, ok_same = 0, ok_diff = 0;
  for (std::size_t i = 0; i < gt.size(); ++i) {
    for (std::size_t j = 0; j < gt.size(); ++j) {
      if (i == j) continue;
      if (gt[i] == gt[j]) {
        ++same;
        if (pred[i] == pred[j]) ++ok_same;
      } else {
        ++diff;
        if (pred[i] != pred[j]) ++ok_diff;
      }
    }
  }
  acc.same_pairs += same / 2;
  acc.diff_pairs += diff / 2;
  acc.correct_same += ok_same / 2;
  acc.correct_diff += ok_diff / 2;
}

}  // namespace idcap::testing

#endif  // IDCAP_TESTS_SUPPORT_ORACLES_H_
