#include "idcap/spice.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include "idcap/error.h"

namespace idcap {

double F1(const MatchResult& m) {
  if (m.reference_size == 0 && m.candidate_size == 0) return 1.0;
  if (m.reference_size == 0 || m.candidate_size == 0 || m.matched == 0) return 0.0;
  double precision = static_cast<double>(m.matched) / m.candidate_size;
  double recall = static_cast<double>(m.matched) / m.reference_size;
  return 2.0 * precision * recall / (precision + recall);
}

MatchResult MatchTuples(const TupleSet& reference, const TupleSet& candidate) {
  MatchResult m{0, reference.size(), candidate.size()};
  // Both sets are sorted, so a merge walk counts the intersection.
  auto r = reference.begin();
  auto c = candidate.begin();
  while (r != reference.end() && c != candidate.end()) {
    if (*r < *c) {
      ++r;
    } else if (*c < *r) {
      ++c;
    } else {
      ++m.matched;
      ++r;
      ++c;
    }
  }
  return m;
}

MatchResult MatchLabels(const std::set<int>& reference, const std::set<int>& candidate) {
  std::vector<int> common;
  std::set_intersection(reference.begin(), reference.end(), candidate.begin(),
                        candidate.end(), std::back_inserter(common));
  return {common.size(), reference.size(), candidate.size()};
}

MatchResult MatchLabelCounts(const std::map<int, int>& reference,
                             const std::map<int, int>& candidate) {
  MatchResult m;
  for (const auto& [label, count] : reference) {
    m.reference_size += count;
    if (auto it = candidate.find(label); it != candidate.end()) {
      m.matched += std::min(count, it->second);
    }
  }
  for (const auto& [label, count] : candidate) m.candidate_size += count;
  return m;
}

SynonymTable SynonymTable::Parse(std::string_view text) {
  // Union-find over lemmas; the root of each class is its smallest member.
  std::map<std::string, std::string> parent;
  std::function<std::string(const std::string&)> find = [&](const std::string& x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent.emplace(x, x);
      return x;
    }
    if (it->second == x) return x;
    std::string root = find(it->second);
    parent[x] = root;
    return root;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> members;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, '\t')) {
      std::transform(field.begin(), field.end(), field.begin(),
                     [](unsigned char c) { return std::tolower(c); });
      if (!field.empty()) members.push_back(field);
    }
    for (std::size_t i = 1; i < members.size(); ++i) {
      std::string a = find(members[0]);
      std::string b = find(members[i]);
      if (a == b) continue;
      if (b < a) std::swap(a, b);
      parent[b] = a;
    }
  }

  SynonymTable table;
  for (const auto& [lemma, unused] : parent) {
    std::string root = find(lemma);
    if (root != lemma) table.canonical_.emplace(lemma, root);
  }
  return table;
}

SynonymTable SynonymTable::LoadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open synonym file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

const std::string& SynonymTable::Canonical(const std::string& lemma) const {
  auto it = canonical_.find(lemma);
  return it == canonical_.end() ? lemma : it->second;
}

TupleSet SynonymTable::Canonicalize(const TupleSet& tuples) const {
  if (canonical_.empty()) return tuples;
  TupleSet out;
  for (const SceneGraphTuple& t : tuples) {
    std::vector<std::string> slots = t.slots();
    for (std::size_t i = 0; i < slots.size(); ++i) {
      bool is_identity = std::find(t.identity_slots().begin(), t.identity_slots().end(),
                                   i) != t.identity_slots().end();
      if (is_identity) continue;
      // "walk_towards": the verb before a folded preposition is looked up too.
      std::size_t cut = slots[i].find('_');
      if (canonical_.count(slots[i]) == 0 && cut != std::string::npos) {
        slots[i] = Canonical(slots[i].substr(0, cut)) + slots[i].substr(cut);
      } else {
        slots[i] = Canonical(slots[i]);
      }
    }
    out.insert(SceneGraphTuple(std::move(slots)));
  }
  return out;
}

SpiceScore ScoreTuples(const TupleSet& reference_tuples, const Captionset& reference,
                       const TupleSet& candidate_tuples, const Captionset& candidate,
                       const SpiceOptions& options) {
  TupleSet ref = reference_tuples;
  TupleSet cand = candidate_tuples;
  if (options.synonyms != nullptr) {
    ref = options.synonyms->Canonicalize(ref);
    cand = options.synonyms->Canonicalize(cand);
  }

  SpiceScore score;
  score.spice = F1(MatchTuples(ref, cand));

  FilteredTuples ref_ids = FilterIdentityTuples(ref, reference);
  FilteredTuples cand_ids = FilterIdentityTuples(cand, candidate);
  score.term_p2plus = F1(MatchTuples(ref_ids.p2plus, cand_ids.p2plus));
  score.term_p1 = options.multiset_identities
                      ? F1(MatchLabelCounts(ref_ids.p1_counts, cand_ids.p1_counts))
                      : F1(MatchLabels(ref_ids.p1, cand_ids.p1));
  if (!ref_ids.p1.empty()) score.ispice = score.term_p2plus * score.term_p1;
  return score;
}

SpiceScore ScoreCaptionsets(const Captionset& reference, const Captionset& candidate,
                            const Lexicon& lex, const SpiceOptions& options) {
  return ScoreTuples(ExtractTuples(reference, lex), reference,
                     ExtractTuples(candidate, lex), candidate, options);
}

double Spice(const Captionset& reference, const Captionset& candidate,
             const Lexicon& lex, const SpiceOptions& options) {
  return ScoreCaptionsets(reference, candidate, lex, options).spice;
}

std::optional<double> ISpice(const Captionset& reference, const Captionset& candidate,
                             const Lexicon& lex, const SpiceOptions& options) {
  return ScoreCaptionsets(reference, candidate, lex, options).ispice;
}

}  // namespace idcap
