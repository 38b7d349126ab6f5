#include "idcap/lexicon.h"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "idcap/error.h"

namespace idcap {

namespace {

const std::map<std::string, Lexicon::Section, std::less<>>& SectionNames() {
  static const auto* names = new std::map<std::string, Lexicon::Section, std::less<>>{
      {"determiners", Lexicon::Section::kDeterminers},
      {"prepositions", Lexicon::Section::kPrepositions},
      {"pronouns", Lexicon::Section::kPronouns},
      {"auxiliaries", Lexicon::Section::kAuxiliaries},
      {"conjunctions", Lexicon::Section::kConjunctions},
      {"adverbs", Lexicon::Section::kAdverbs},
      {"verbs", Lexicon::Section::kVerbs},
      {"adjectives", Lexicon::Section::kAdjectives},
  };
  return *names;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Lexicon Lexicon::Parse(std::string_view text) {
  Lexicon lex;
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(Fnv1a64(text)));
  lex.hash_ = hex;

  std::map<std::string, std::string> owner;  // word -> section name
  int current = -1;
  std::string current_name;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = Trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '[' && line.back() == ']') {
      std::string_view name = line.substr(1, line.size() - 2);
      auto it = SectionNames().find(name);
      if (it == SectionNames().end()) {
        throw Error(ErrorCode::kParseError, "lexicon line " + std::to_string(line_no) +
                                                ": unknown section [" + std::string(name) + "]");
      }
      current = static_cast<int>(it->second);
      current_name = it->first;
      continue;
    }
    if (current < 0) {
      throw Error(ErrorCode::kParseError,
                  "lexicon line " + std::to_string(line_no) + ": word before any section");
    }
    std::string word(line);
    auto [it, inserted] = owner.emplace(word, current_name);
    if (!inserted && it->second != current_name) {
      throw Error(ErrorCode::kParseError, "lexicon line " + std::to_string(line_no) + ": '" +
                                              word + "' listed in both [" + it->second +
                                              "] and [" + current_name + "]");
    }
    lex.sections_[current].insert(std::move(word));
  }
  return lex;
}

Lexicon Lexicon::LoadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open lexicon file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

bool Lexicon::Contains(Section section, std::string_view word) const {
  const auto& set = sections_[static_cast<int>(section)];
  return set.find(std::string(word)) != set.end();
}

std::size_t Lexicon::size(Section section) const {
  return sections_[static_cast<int>(section)].size();
}

const Lexicon& BundledLexicon() {
  static const Lexicon* lexicon = new Lexicon(Lexicon::Parse(BundledLexiconText()));
  return *lexicon;
}

}  // namespace idcap
