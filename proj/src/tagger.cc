#include "idcap/tagger.h"

#include "idcap/lemmatizer.h"

namespace idcap {

namespace {

bool IsPossessive(std::string_view w) {
  return w == "'s" || w == "my" || w == "your" || w == "his" || w == "her" ||
         w == "its" || w == "our" || w == "their";
}

bool IsClosedClass(std::string_view w, const Lexicon& lex) {
  return w == "'s" || lex.IsDeterminer(w) || lex.IsPreposition(w) ||
         lex.IsPronoun(w) || lex.IsAuxiliary(w) || lex.IsConjunction(w) ||
         lex.IsAdverb(w);
}

}  // namespace

const char* WordClassName(WordClass cls) {
  switch (cls) {
    case WordClass::kNoun: return "noun";
    case WordClass::kVerb: return "verb";
    case WordClass::kAdjective: return "adjective";
    case WordClass::kIdentity: return "identity";
    case WordClass::kFunction: return "function";
    case WordClass::kPunct: return "punct";
  }
  return "?";
}

std::vector<TaggedToken> TagTokens(const TokenSequence& tokens, const Lexicon& lex) {
  std::vector<TaggedToken> tagged;
  tagged.reserve(tokens.size());
  std::ptrdiff_t previous_index = -1;  // last non-punctuation token

  for (const Token& token : tokens) {
    TaggedToken t{token, WordClass::kNoun, token.surface};
    const TaggedToken* previous =
        previous_index >= 0 ? &tagged[previous_index] : nullptr;
    const std::string& w = token.surface;

    if (token.is_identity() || IsBlank(token)) {
      t.cls = WordClass::kIdentity;
    } else if (token.is_punctuation()) {
      t.cls = WordClass::kPunct;
    } else if (IsClosedClass(w, lex)) {
      t.cls = WordClass::kFunction;
    } else if (lex.IsAdjective(w)) {
      t.cls = WordClass::kAdjective;
    } else if (auto lemma = ResolveVerbLemma(w, lex)) {
      bool nominal = previous != nullptr &&
                     (lex.IsDeterminer(previous->lemma) ||
                      IsPossessive(previous->token.surface) ||
                      previous->cls == WordClass::kAdjective);
      if (nominal) {
        t.lemma = SingularizeNoun(w);
      } else {
        t.cls = WordClass::kVerb;
        t.lemma = std::move(*lemma);
      }
    } else if (w.size() > 3 && w.ends_with("ly")) {
      t.cls = WordClass::kFunction;
    } else {
      t.lemma = SingularizeNoun(w);
    }

    tagged.push_back(std::move(t));
    if (tagged.back().cls != WordClass::kPunct) {
      previous_index = static_cast<std::ptrdiff_t>(tagged.size()) - 1;
    }
  }
  return tagged;
}

}  // namespace idcap
