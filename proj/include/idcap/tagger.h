#ifndef IDCAP_TAGGER_H_
#define IDCAP_TAGGER_H_

#include <string>
#include <vector>

#include "idcap/caption.h"
#include "idcap/lexicon.h"

namespace idcap {

enum class WordClass { kNoun, kVerb, kAdjective, kIdentity, kFunction, kPunct };

const char* WordClassName(WordClass cls);

struct TaggedToken {
  Token token;
  WordClass cls = WordClass::kNoun;
  // Verb lemma for verbs, singular form for nouns, surface otherwise.
  std::string lemma;
};

// Coarse lexicon-driven tagging. Precedence: identity, punctuation, closed
// class (function), adjective list, known verb (unless directly preceded by
// a determiner, possessive or adjective, which makes it a noun), "-ly"
// adverb (function), and noun as the default.
std::vector<TaggedToken> TagTokens(const TokenSequence& tokens, const Lexicon& lex);

}  // namespace idcap

#endif  // IDCAP_TAGGER_H_
