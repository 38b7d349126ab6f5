#ifndef IDCAP_TUPLES_H_
#define IDCAP_TUPLES_H_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "idcap/caption.h"
#include "idcap/lexicon.h"

namespace idcap {

enum class TupleArity { kObject = 1, kAttribute = 2, kRelation = 3 };

// A scene-graph tuple: (object), (object, attribute) or
// (subject, relation, object). Slots are lowercase lemmas; identity slots
// are those spelled "p<index>".
class SceneGraphTuple {
 public:
  // Throws Error(kMalformedTuple) on 0 or >3 slots or an empty slot.
  explicit SceneGraphTuple(std::vector<std::string> slots);

  const std::vector<std::string>& slots() const { return slots_; }
  TupleArity arity() const { return static_cast<TupleArity>(slots_.size()); }
  std::size_t size() const { return slots_.size(); }

  const std::vector<std::size_t>& identity_slots() const { return identity_slots_; }
  bool has_identity() const { return !identity_slots_.empty(); }

  std::string ToString() const;  // "(p1, carry, p2)"

  friend bool operator==(const SceneGraphTuple& a, const SceneGraphTuple& b) {
    return a.slots_ == b.slots_;
  }
  friend auto operator<=>(const SceneGraphTuple& a, const SceneGraphTuple& b) {
    return a.slots_ <=> b.slots_;
  }

 private:
  std::vector<std::string> slots_;
  std::vector<std::size_t> identity_slots_;
};

// Duplicate-free, deterministically ordered tuple collection.
using TupleSet = std::set<SceneGraphTuple>;

struct FilteredTuples {
  TupleSet p2plus;          // >= 2 slots and >= 1 identity slot
  std::set<int> p1;         // distinct identity indices of the captionset
  std::map<int, int> p1_counts;  // identity occurrences, for multiset scoring
};

// Splits each caption into sentences at . ! ? ; and applies the pattern
// grammar: object tuples for noun/identity heads, attribute tuples for
// adjectives (copula or linking-verb predicate, else the nearest following
// head, else the nearest preceding head) and relation tuples
// (subject, verb[_prep][, object]) for each main verb with a subject.
TupleSet ExtractTuples(const Captionset& cs, const Lexicon& lex);
TupleSet ExtractTuples(const TokenSequence& caption, const Lexicon& lex);

// Builds a TupleSet from string records. Slots are lowercased and identity
// spellings canonicalized ("P01" -> "p1"). Throws Error(kMalformedTuple)
// naming the offending record index.
TupleSet LoadTuples(const std::vector<std::vector<std::string>>& records);

std::vector<std::vector<std::string>> TupleRecords(const TupleSet& tuples);

FilteredTuples FilterIdentityTuples(const TupleSet& tuples, const Captionset& cs);

// Applies an identity relabeling to every identity slot.
TupleSet RelabelTuples(const TupleSet& tuples, const IdentityMapping& mapping);

}  // namespace idcap

#endif  // IDCAP_TUPLES_H_
