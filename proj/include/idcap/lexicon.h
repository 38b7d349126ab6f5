#ifndef IDCAP_LEXICON_H_
#define IDCAP_LEXICON_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>

namespace idcap {

// Closed-class word lists plus common verb lemmas and adjectives used by the
// rule-based tagger. Immutable after loading.
//
// File format: sectioned plain text, one lowercase word per line under
// headers such as [determiners]. Blank lines and lines starting with '#'
// are ignored. Sections must be pairwise disjoint.
class Lexicon {
 public:
  enum class Section {
    kDeterminers,
    kPrepositions,
    kPronouns,
    kAuxiliaries,
    kConjunctions,
    kAdverbs,
    kVerbs,
    kAdjectives,
  };

  // Throws Error(kParseError) on unknown headers, words outside a section,
  // or words listed in two sections.
  static Lexicon Parse(std::string_view text);
  static Lexicon LoadFile(const std::string& path);

  bool Contains(Section section, std::string_view word) const;

  bool IsDeterminer(std::string_view w) const { return Contains(Section::kDeterminers, w); }
  bool IsPreposition(std::string_view w) const { return Contains(Section::kPrepositions, w); }
  bool IsPronoun(std::string_view w) const { return Contains(Section::kPronouns, w); }
  bool IsAuxiliary(std::string_view w) const { return Contains(Section::kAuxiliaries, w); }
  bool IsConjunction(std::string_view w) const { return Contains(Section::kConjunctions, w); }
  bool IsAdverb(std::string_view w) const { return Contains(Section::kAdverbs, w); }
  bool IsVerbLemma(std::string_view w) const { return Contains(Section::kVerbs, w); }
  bool IsAdjective(std::string_view w) const { return Contains(Section::kAdjectives, w); }

  std::size_t size(Section section) const;

  // FNV-1a 64 of the source text, as 16 lowercase hex digits.
  const std::string& hash() const { return hash_; }

 private:
  static constexpr int kSectionCount = 8;
  std::unordered_set<std::string> sections_[kSectionCount];
  std::string hash_;
};

// The lexicon compiled into the library from data/lexicon.txt.
const Lexicon& BundledLexicon();
std::string_view BundledLexiconText();

std::uint64_t Fnv1a64(std::string_view bytes);

}  // namespace idcap

#endif  // IDCAP_LEXICON_H_
