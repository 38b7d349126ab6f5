#ifndef IDCAP_SPICE_H_
#define IDCAP_SPICE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "idcap/caption.h"
#include "idcap/lexicon.h"
#include "idcap/tuples.h"

namespace idcap {

struct MatchResult {
  std::size_t matched = 0;
  std::size_t reference_size = 0;
  std::size_t candidate_size = 0;

  friend bool operator==(const MatchResult&, const MatchResult&) = default;
};

// Harmonic mean of precision and recall. Both sizes zero scores 1.0; one
// size zero, or no matches, scores 0.0.
double F1(const MatchResult& m);

MatchResult MatchTuples(const TupleSet& reference, const TupleSet& candidate);
MatchResult MatchLabels(const std::set<int>& reference, const std::set<int>& candidate);
// Multiset overlap: matched = sum over labels of min(count_ref, count_cand).
MatchResult MatchLabelCounts(const std::map<int, int>& reference,
                             const std::map<int, int>& candidate);

// Lemma equivalence classes, one class per line, members tab-separated.
// Classes that share a member are merged. Each lemma maps to the
// lexicographically smallest member of its class. In a folded relation
// such as "walk_towards" the verb part is canonicalized.
class SynonymTable {
 public:
  static SynonymTable Parse(std::string_view text);
  static SynonymTable LoadFile(const std::string& path);

  const std::string& Canonical(const std::string& lemma) const;
  TupleSet Canonicalize(const TupleSet& tuples) const;
  bool empty() const { return canonical_.empty(); }

 private:
  std::map<std::string, std::string> canonical_;
};

struct SpiceOptions {
  const SynonymTable* synonyms = nullptr;
  // Score the identity term over label occurrence counts instead of sets.
  bool multiset_identities = false;
};

struct SpiceScore {
  double spice = 0.0;
  std::optional<double> ispice;  // undefined when the reference has no ids
  double term_p2plus = 0.0;
  double term_p1 = 0.0;
};

// Scores pre-extracted tuple sets. The captionsets supply the identity
// label sets for the second iSPICE term.
SpiceScore ScoreTuples(const TupleSet& reference_tuples, const Captionset& reference,
                       const TupleSet& candidate_tuples, const Captionset& candidate,
                       const SpiceOptions& options = {});

// Extracts tuples with the rule-based parser and scores them. Both
// captionsets are expected to be identity-normalized.
SpiceScore ScoreCaptionsets(const Captionset& reference, const Captionset& candidate,
                            const Lexicon& lex, const SpiceOptions& options = {});

double Spice(const Captionset& reference, const Captionset& candidate,
             const Lexicon& lex, const SpiceOptions& options = {});

std::optional<double> ISpice(const Captionset& reference, const Captionset& candidate,
                             const Lexicon& lex, const SpiceOptions& options = {});

}  // namespace idcap

#endif  // IDCAP_SPICE_H_
