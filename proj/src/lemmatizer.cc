#include "idcap/lemmatizer.h"

#include <array>
#include <unordered_map>
#include <vector>

namespace idcap {

namespace {

const std::unordered_map<std::string_view, std::string_view>& IrregularVerbs() {
  static const auto* table = new std::unordered_map<std::string_view, std::string_view>{
      {"ate", "eat"}, {"eaten", "eat"}, {"began", "begin"}, {"begun", "begin"},
      {"bent", "bend"}, {"bit", "bite"}, {"bitten", "bite"}, {"blew", "blow"},
      {"blown", "blow"}, {"broke", "break"}, {"broken", "break"},
      {"brought", "bring"}, {"built", "build"}, {"bought", "buy"},
      {"caught", "catch"}, {"chose", "choose"}, {"chosen", "choose"},
      {"came", "come"}, {"dug", "dig"}, {"drew", "draw"}, {"drawn", "draw"},
      {"drank", "drink"}, {"drove", "drive"}, {"driven", "drive"},
      {"died", "die"}, {"dying", "die"}, {"fell", "fall"}, {"fallen", "fall"},
      {"fed", "feed"}, {"felt", "feel"}, {"fought", "fight"}, {"found", "find"},
      {"fled", "flee"}, {"flew", "fly"}, {"flown", "fly"}, {"got", "get"},
      {"gotten", "get"}, {"gave", "give"}, {"given", "give"}, {"went", "go"},
      {"gone", "go"}, {"grew", "grow"}, {"grown", "grow"}, {"hung", "hang"},
      {"has", "have"}, {"had", "have"}, {"heard", "hear"}, {"hid", "hide"},
      {"hidden", "hide"}, {"held", "hold"}, {"kept", "keep"}, {"knelt", "kneel"},
      {"knew", "know"}, {"known", "know"}, {"laid", "lay"}, {"led", "lead"},
      {"leapt", "leap"}, {"left", "leave"}, {"lay", "lie"}, {"lain", "lie"},
      {"lying", "lie"}, {"lit", "light"}, {"lost", "lose"}, {"made", "make"},
      {"met", "meet"}, {"rode", "ride"}, {"ridden", "ride"}, {"rang", "ring"},
      {"rung", "ring"}, {"rose", "rise"}, {"risen", "rise"}, {"ran", "run"},
      {"said", "say"}, {"saw", "see"}, {"seen", "see"}, {"sent", "send"},
      {"shook", "shake"}, {"shaken", "shake"}, {"shot", "shoot"},
      {"sang", "sing"}, {"sung", "sing"}, {"sank", "sink"}, {"sunk", "sink"},
      {"sat", "sit"}, {"slept", "sleep"}, {"slid", "slide"}, {"spoke", "speak"},
      {"spoken", "speak"}, {"spun", "spin"}, {"stood", "stand"},
      {"stuck", "stick"}, {"strode", "stride"}, {"struck", "strike"},
      {"swam", "swim"}, {"swung", "swing"}, {"took", "take"}, {"taken", "take"},
      {"tore", "tear"}, {"torn", "tear"}, {"told", "tell"}, {"threw", "throw"},
      {"thrown", "throw"}, {"tying", "tie"}, {"woke", "wake"}, {"woken", "wake"},
      {"wore", "wear"}, {"worn", "wear"}, {"won", "win"}, {"wrote", "write"},
      {"written", "write"},
  };
  return *table;
}

const std::unordered_map<std::string_view, std::string_view>& IrregularNouns() {
  static const auto* table = new std::unordered_map<std::string_view, std::string_view>{
      {"men", "man"}, {"women", "woman"}, {"children", "child"},
      {"people", "person"}, {"feet", "foot"}, {"teeth", "tooth"},
      {"mice", "mouse"}, {"geese", "goose"}, {"wives", "wife"},
      {"knives", "knife"}, {"lives", "life"}, {"shelves", "shelf"},
      {"wolves", "wolf"}, {"halves", "half"}, {"leaves", "leaf"},
      {"police", "police"}, {"clothes", "clothes"}, {"glasses", "glasses"},
  };
  return *table;
}

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// "runn" -> "run"; returns empty when the stem does not end in a double
// consonant.
std::string Undouble(std::string_view stem) {
  std::size_t n = stem.size();
  if (n >= 3 && stem[n - 1] == stem[n - 2] && !IsVowel(stem[n - 1])) {
    return std::string(stem.substr(0, n - 1));
  }
  return {};
}

std::vector<std::string> RegularCandidates(std::string_view w) {
  std::vector<std::string> out;
  auto add = [&out](std::string s) {
    if (s.size() >= 2) out.push_back(std::move(s));
  };
  auto cut = [w](std::size_t n) { return std::string(w.substr(0, w.size() - n)); };

  if (w.ends_with("ing") && w.size() > 4) {
    std::string stem = cut(3);
    add(stem);
    add(stem + "e");
    add(Undouble(stem));
  } else if (w.ends_with("ied") && w.size() > 4) {
    add(cut(3) + "y");
  } else if (w.ends_with("ed") && w.size() > 3) {
    std::string stem = cut(2);
    add(stem);
    add(cut(1));
    add(Undouble(stem));
  } else if (w.ends_with("ies") && w.size() > 4) {
    add(cut(3) + "y");
  } else if (w.ends_with("es") && w.size() > 3) {
    add(cut(2));
    add(cut(1));
  } else if (w.ends_with("s") && !w.ends_with("ss") && w.size() > 2) {
    add(cut(1));
  }
  return out;
}

}  // namespace

std::optional<std::string> ResolveVerbLemma(std::string_view word,
                                            const Lexicon& lex) {
  if (lex.IsVerbLemma(word)) return std::string(word);
  const auto& irregular = IrregularVerbs();
  if (auto it = irregular.find(word); it != irregular.end()) {
    if (lex.IsVerbLemma(it->second)) return std::string(it->second);
  }
  for (std::string& candidate : RegularCandidates(word)) {
    if (lex.IsVerbLemma(candidate)) return std::move(candidate);
  }
  return std::nullopt;
}

std::string SingularizeNoun(std::string_view word) {
  const auto& irregular = IrregularNouns();
  if (auto it = irregular.find(word); it != irregular.end()) {
    return std::string(it->second);
  }
  std::size_t n = word.size();
  if (n > 4 && word.ends_with("ies")) {
    return std::string(word.substr(0, n - 3)) + "y";
  }
  for (std::string_view suffix : {"sses", "xes", "zes", "ches", "shes"}) {
    if (n > suffix.size() + 1 && word.ends_with(suffix)) {
      return std::string(word.substr(0, n - 2));
    }
  }
  if (n > 3 && word.ends_with("s") && !word.ends_with("ss") &&
      !word.ends_with("us") && !word.ends_with("is")) {
    return std::string(word.substr(0, n - 1));
  }
  return std::string(word);
}

std::string Stem(std::string_view word) {
  static constexpr std::array<std::string_view, 8> kSuffixes = {
      "ingly", "edly", "ing", "ies", "ied", "ed", "es", "s"};
  std::string stem(word);
  for (std::string_view suffix : kSuffixes) {
    if (suffix == "s" && (stem.ends_with("ss") || stem.ends_with("us") ||
                          stem.ends_with("is"))) {
      continue;
    }
    if (stem.size() >= suffix.size() + 3 && stem.ends_with(suffix)) {
      stem.resize(stem.size() - suffix.size());
      if (suffix == "ies" || suffix == "ied") stem += 'y';
      break;
    }
  }
  if (std::string undoubled = Undouble(stem); !undoubled.empty() &&
      stem.back() != 'l' && stem.back() != 's' && stem.back() != 'z') {
    stem = std::move(undoubled);
  }
  if (stem.size() > 3 && stem.back() == 'e') stem.pop_back();
  return stem;
}

}  // namespace idcap
