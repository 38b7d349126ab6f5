#ifndef IDCAP_LEMMATIZER_H_
#define IDCAP_LEMMATIZER_H_

#include <optional>
#include <string>
#include <string_view>

#include "idcap/lexicon.h"

namespace idcap {

// Maps an inflected verb form to a lemma listed in the lexicon's [verbs]
// section. Irregular forms come from a fixed exception table; regular forms
// are reduced by stripping -s/-es/-ies/-ed/-ied/-ing, trying the bare stem,
// silent-e restoration and consonant undoubling in that order. Returns
// nullopt when no candidate is a known verb.
std::optional<std::string> ResolveVerbLemma(std::string_view word,
                                            const Lexicon& lex);

// Reduces a plural noun to its singular form (exception table, then
// -ies -> -y, -sses/-xes/-zes/-ches/-shes -> drop -es, -s -> drop -s,
// leaving -ss/-us/-is endings alone).
std::string SingularizeNoun(std::string_view word);

// Lexicon-free suffix stemmer used for the stem-match stage of METEOR-lite.
// Both sides of a comparison go through the same function, so only
// consistency matters.
std::string Stem(std::string_view word);

}  // namespace idcap

#endif  // IDCAP_LEMMATIZER_H_
