#include "idcap/tuples.h"

#include <algorithm>
#include <cctype>
#include <optional>
#include <utility>

#include "idcap/error.h"
#include "idcap/tagger.h"

namespace idcap {

namespace {

bool IsHead(const TaggedToken& t) {
  return t.cls == WordClass::kNoun || t.cls == WordClass::kIdentity;
}

bool IsSentenceEnd(const Token& token) {
  return token.is_punctuation() &&
         (token.surface == "." || token.surface == "!" || token.surface == "?" ||
          token.surface == ";");
}

bool IsCopula(std::string_view w) {
  return w == "is" || w == "are" || w == "was" || w == "were" || w == "am" ||
         w == "be" || w == "been" || w == "being";
}

bool IsLinkingVerb(std::string_view lemma) {
  return lemma == "look" || lemma == "become" || lemma == "feel" ||
         lemma == "grow" || lemma == "stay" || lemma == "turn";
}

bool IsAdverbLike(const TaggedToken& t, const Lexicon& lex) {
  if (t.cls != WordClass::kFunction) return false;
  const std::string& w = t.token.surface;
  return lex.IsAdverb(w) || (w.size() > 3 && w.ends_with("ly"));
}

bool IsObjectPronoun(std::string_view w) {
  return w == "him" || w == "them" || w == "it" || w == "me" || w == "us" ||
         w == "you" || w == "himself" || w == "herself" || w == "themselves" ||
         w == "itself" || w == "someone" || w == "something";
}

// Index of the head of the noun run starting at `start` (its last noun).
std::size_t RunHead(const std::vector<TaggedToken>& s, std::size_t start) {
  std::size_t i = start;
  while (s[i].cls == WordClass::kNoun && i + 1 < s.size() &&
         s[i + 1].cls == WordClass::kNoun) {
    ++i;
  }
  return i;
}

std::optional<std::size_t> PrecedingHead(const std::vector<TaggedToken>& s,
                                         std::size_t before) {
  for (std::size_t j = before; j-- > 0;) {
    if (IsHead(s[j])) return j;
  }
  return std::nullopt;
}

std::optional<std::size_t> FollowingHead(const std::vector<TaggedToken>& s,
                                         std::size_t after) {
  for (std::size_t j = after + 1; j < s.size(); ++j) {
    if (s[j].cls == WordClass::kVerb) return std::nullopt;
    if (IsHead(s[j])) return RunHead(s, j);
  }
  return std::nullopt;
}

void ExtractSentence(const std::vector<TaggedToken>& s, const Lexicon& lex,
                     TupleSet& out) {
  auto emit = [&out](std::vector<std::string> slots) {
    out.insert(SceneGraphTuple(std::move(slots)));
  };

  for (const TaggedToken& t : s) {
    if (IsHead(t)) emit({t.lemma});
  }

  for (std::size_t i = 0; i < s.size(); ++i) {
    const TaggedToken& t = s[i];

    if (t.cls == WordClass::kAdjective) {
      std::size_t j = i;
      while (j > 0 && IsAdverbLike(s[j - 1], lex)) --j;
      bool predicative =
          j > 0 && ((s[j - 1].cls == WordClass::kFunction &&
                     IsCopula(s[j - 1].token.surface)) ||
                    (s[j - 1].cls == WordClass::kVerb && IsLinkingVerb(s[j - 1].lemma)));
      std::optional<std::size_t> head;
      if (predicative) {
        head = PrecedingHead(s, j - 1);
      } else {
        head = FollowingHead(s, i);
        if (!head) head = PrecedingHead(s, i);
      }
      if (head) emit({s[*head].lemma, t.lemma});
      continue;
    }

    if (t.cls != WordClass::kVerb) continue;

    // A linking verb with an adjective complement contributes the attribute
    // tuple only.
    if (IsLinkingVerb(t.lemma)) {
      std::size_t k = i + 1;
      while (k < s.size() && IsAdverbLike(s[k], lex)) ++k;
      if (k < s.size() && s[k].cls == WordClass::kAdjective) continue;
    }

    std::optional<std::size_t> subject = PrecedingHead(s, i);
    if (!subject) continue;

    std::string relation = t.lemma;
    std::optional<std::size_t> object;
    std::string preposition;
    for (std::size_t k = i + 1; k < s.size(); ++k) {
      const TaggedToken& next = s[k];
      if (next.cls == WordClass::kVerb) break;
      if (next.cls == WordClass::kFunction) {
        const std::string& w = next.token.surface;
        if (lex.IsConjunction(w) || lex.IsAuxiliary(w) || IsObjectPronoun(w)) break;
        if (lex.IsPreposition(w)) preposition = w;
        continue;
      }
      if (IsHead(next)) {
        object = RunHead(s, k);
        break;
      }
    }
    if (object) {
      if (!preposition.empty()) relation += "_" + preposition;
      emit({s[*subject].lemma, relation, s[*object].lemma});
    } else {
      emit({s[*subject].lemma, relation});
    }
  }
}

std::string Lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

SceneGraphTuple::SceneGraphTuple(std::vector<std::string> slots)
    : slots_(std::move(slots)) {
  if (slots_.empty() || slots_.size() > 3) {
    throw Error(ErrorCode::kMalformedTuple,
                "tuple has " + std::to_string(slots_.size()) + " slots");
  }
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (slots_[i].empty()) {
      throw Error(ErrorCode::kMalformedTuple, "empty slot " + std::to_string(i));
    }
    if (auto label = ParseIdentityLabel(slots_[i])) {
      slots_[i] = "p" + std::to_string(label->index);
      identity_slots_.push_back(i);
    }
  }
}

std::string SceneGraphTuple::ToString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (i > 0) out += ", ";
    out += slots_[i];
  }
  return out + ")";
}

TupleSet ExtractTuples(const TokenSequence& caption, const Lexicon& lex) {
  TupleSet out;
  std::vector<TaggedToken> tagged = TagTokens(caption, lex);
  std::vector<TaggedToken> sentence;
  auto flush = [&] {
    if (!sentence.empty()) ExtractSentence(sentence, lex, out);
    sentence.clear();
  };
  for (TaggedToken& t : tagged) {
    if (IsSentenceEnd(t.token)) {
      flush();
    } else if (t.cls != WordClass::kPunct) {
      sentence.push_back(std::move(t));
    }
  }
  flush();
  return out;
}

TupleSet ExtractTuples(const Captionset& cs, const Lexicon& lex) {
  TupleSet out;
  for (const TokenSequence& caption : cs.captions) {
    out.merge(ExtractTuples(caption, lex));
  }
  return out;
}

TupleSet LoadTuples(const std::vector<std::vector<std::string>>& records) {
  TupleSet out;
  for (std::size_t r = 0; r < records.size(); ++r) {
    std::vector<std::string> slots;
    slots.reserve(records[r].size());
    for (const std::string& slot : records[r]) slots.push_back(Lowercase(slot));
    try {
      out.insert(SceneGraphTuple(std::move(slots)));
    } catch (const Error& e) {
      throw Error(ErrorCode::kMalformedTuple,
                  "record " + std::to_string(r) + ": " + e.what());
    }
  }
  return out;
}

std::vector<std::vector<std::string>> TupleRecords(const TupleSet& tuples) {
  std::vector<std::vector<std::string>> out;
  out.reserve(tuples.size());
  for (const SceneGraphTuple& t : tuples) out.push_back(t.slots());
  return out;
}

FilteredTuples FilterIdentityTuples(const TupleSet& tuples, const Captionset& cs) {
  FilteredTuples out;
  for (const SceneGraphTuple& t : tuples) {
    if (t.size() >= 2 && t.has_identity()) out.p2plus.insert(t);
  }
  out.p1_counts = IdentityMultiset(cs);
  for (const auto& [index, count] : out.p1_counts) out.p1.insert(index);
  return out;
}

TupleSet RelabelTuples(const TupleSet& tuples, const IdentityMapping& mapping) {
  TupleSet out;
  for (const SceneGraphTuple& t : tuples) {
    std::vector<std::string> slots = t.slots();
    for (std::size_t i : t.identity_slots()) {
      int index = ParseIdentityLabel(slots[i])->index;
      if (auto it = mapping.find(index); it != mapping.end()) {
        slots[i] = "p" + std::to_string(it->second);
      }
    }
    out.insert(SceneGraphTuple(std::move(slots)));
  }
  return out;
}

}  // namespace idcap
