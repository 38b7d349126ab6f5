#include "idcap/caption.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <utility>

#include "idcap/error.h"

namespace idcap {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDuplicateVideosetId: return "DuplicateVideosetId";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kMalformedTuple: return "MalformedTuple";
    case ErrorCode::kNoIdentities: return "NoIdentities";
    case ErrorCode::kMissingPredictions: return "MissingPredictions";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

namespace {

// Upper bound on parsed identity indices; larger numbers stay plain words.
constexpr int kMaxIdentityIndex = 1000000;

bool IsEdgePunctuation(char c) {
  switch (c) {
    case '.': case ',': case ';': case ':': case '!': case '?':
    case '"': case '\'': case '`': case '(': case ')': case '[':
    case ']': case '{': case '}': case '-':
      return true;
    default:
      return false;
  }
}

std::optional<int> ParseIdentityIndex(std::string_view word) {
  if (word.size() < 2 || (word[0] != 'p' && word[0] != 'P')) return std::nullopt;
  std::string_view digits = word.substr(1);
  if (!std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c); })) {
    return std::nullopt;
  }
  // Long digit strings would overflow; they cannot be valid indices anyway.
  if (digits.size() > 7) return std::nullopt;
  int value = 0;
  std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (value < 1 || value > kMaxIdentityIndex) return std::nullopt;
  return value;
}

Token ClassifyWord(std::string word) {
  if (auto index = ParseIdentityIndex(word)) return Token::Identity(*index);
  return Token::Word(std::move(word));
}

bool IsUnderscoreBlank(std::string_view chunk) {
  return chunk.size() >= 3 &&
         std::all_of(chunk.begin(), chunk.end(), [](char c) { return c == '_'; });
}

void TokenizeChunk(std::string_view chunk, bool allow_blanks,
                   TokenSequence& out) {
  if (chunk == "'s") {
    out.push_back(Token::Word("'s"));
    return;
  }
  if (allow_blanks) {
    if (chunk.starts_with(kFitbBlankText)) {
      out.push_back(Token::Word(std::string(kBlankMarker)));
      chunk.remove_prefix(kFitbBlankText.size());
      if (!chunk.empty()) TokenizeChunk(chunk, /*allow_blanks=*/false, out);
      return;
    } else if (IsUnderscoreBlank(chunk)) {
      out.push_back(Token::Word(std::string(kBlankMarker)));
      return;
    }
  }

  std::size_t begin = 0;
  while (begin < chunk.size() && IsEdgePunctuation(chunk[begin])) {
    out.push_back(Token::Punctuation(std::string(1, chunk[begin])));
    ++begin;
  }
  std::size_t end = chunk.size();
  while (end > begin && IsEdgePunctuation(chunk[end - 1])) --end;

  std::string_view core = chunk.substr(begin, end - begin);
  if (!core.empty()) {
    if (core.size() > 2 && core.ends_with("'s")) {
      out.push_back(ClassifyWord(std::string(core.substr(0, core.size() - 2))));
      out.push_back(Token::Word("'s"));
    } else {
      out.push_back(ClassifyWord(std::string(core)));
    }
  }
  for (std::size_t i = end; i < chunk.size(); ++i) {
    out.push_back(Token::Punctuation(std::string(1, chunk[i])));
  }
}

TokenSequence TokenizeImpl(std::string_view text, bool allow_blanks) {
  std::string lowered(text);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  TokenSequence tokens;
  std::size_t i = 0;
  while (i < lowered.size()) {
    while (i < lowered.size() &&
           std::isspace(static_cast<unsigned char>(lowered[i]))) {
      ++i;
    }
    std::size_t start = i;
    while (i < lowered.size() &&
           !std::isspace(static_cast<unsigned char>(lowered[i]))) {
      ++i;
    }
    if (i > start) {
      TokenizeChunk(std::string_view(lowered).substr(start, i - start),
                    allow_blanks, tokens);
    }
  }
  return tokens;
}

}  // namespace

Token Token::Word(std::string surface) {
  return Token{std::move(surface), TokenKind::kWord, std::nullopt};
}

Token Token::Identity(int index) {
  return Token{"p" + std::to_string(index), TokenKind::kIdentity, index};
}

Token Token::Punctuation(std::string surface) {
  return Token{std::move(surface), TokenKind::kPunctuation, std::nullopt};
}

bool IsBlank(const Token& token) {
  return token.kind == TokenKind::kWord && token.surface == kBlankMarker;
}

std::string IdentityLabel::ToString() const {
  return "P" + std::to_string(index);
}

std::optional<IdentityLabel> ParseIdentityLabel(std::string_view text) {
  if (auto index = ParseIdentityIndex(text)) return IdentityLabel{*index};
  return std::nullopt;
}

TokenSequence Tokenize(std::string_view caption_text) {
  return TokenizeImpl(caption_text, /*allow_blanks=*/false);
}

TokenSequence TokenizeWithBlanks(std::string_view caption_text) {
  return TokenizeImpl(caption_text, /*allow_blanks=*/true);
}

std::string Detokenize(const TokenSequence& tokens) {
  std::string out;
  for (const Token& token : tokens) {
    if (!out.empty()) out += ' ';
    if (token.is_identity()) {
      out += IdentityLabel{*token.identity_index}.ToString();
    } else if (IsBlank(token)) {
      out += kFitbBlankText;
    } else {
      out += token.surface;
    }
  }
  return out;
}

Captionset MakeCaptionset(std::string videoset_id,
                          const std::vector<std::string>& captions) {
  Captionset cs;
  cs.videoset_id = std::move(videoset_id);
  cs.captions.reserve(captions.size());
  for (const std::string& caption : captions) {
    cs.captions.push_back(Tokenize(caption));
  }
  return cs;
}

Captionset NormalizeIdentities(const Captionset& cs) {
  return NormalizeIdentities(cs, nullptr);
}

Captionset NormalizeIdentities(const Captionset& cs, IdentityMapping* mapping) {
  IdentityMapping local;
  for (const TokenSequence& caption : cs.captions) {
    for (const Token& token : caption) {
      if (!token.is_identity()) continue;
      int next = static_cast<int>(local.size()) + 1;
      local.try_emplace(*token.identity_index, next);
    }
  }
  Captionset out = RelabelIdentities(cs, local);
  if (mapping != nullptr) *mapping = std::move(local);
  return out;
}

Captionset RelabelIdentities(const Captionset& cs,
                             const IdentityMapping& mapping) {
  Captionset out = cs;
  for (TokenSequence& caption : out.captions) {
    for (Token& token : caption) {
      if (!token.is_identity()) continue;
      auto it = mapping.find(*token.identity_index);
      if (it != mapping.end()) token = Token::Identity(it->second);
    }
  }
  return out;
}

FitbInstance MakeFitb(const Captionset& cs) {
  FitbInstance fitb;
  fitb.captionset_with_blanks = cs;
  auto& captions = fitb.captionset_with_blanks.captions;
  for (std::size_t c = 0; c < captions.size(); ++c) {
    for (std::size_t t = 0; t < captions[c].size(); ++t) {
      Token& token = captions[c][t];
      if (!token.is_identity()) continue;
      fitb.blanks.push_back({c, t});
      fitb.gt_labels.push_back({*token.identity_index});
      token = Token::Word(std::string(kBlankMarker));
    }
  }
  if (fitb.blanks.empty()) {
    throw Error(ErrorCode::kNoIdentities,
                "captionset '" + cs.videoset_id + "' has no identity tokens");
  }
  return fitb;
}

Captionset FillBlanks(const FitbInstance& fitb,
                      const std::vector<IdentityLabel>& labels) {
  if (labels.size() != fitb.blanks.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "expected " + std::to_string(fitb.blanks.size()) +
                    " labels, got " + std::to_string(labels.size()));
  }
  Captionset out = fitb.captionset_with_blanks;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const TokenPosition& pos = fitb.blanks[k];
    out.captions.at(pos.caption).at(pos.token) = Token::Identity(labels[k].index);
  }
  return out;
}

std::map<int, int> IdentityMultiset(const Captionset& cs) {
  std::map<int, int> counts;
  for (const TokenSequence& caption : cs.captions) {
    for (const Token& token : caption) {
      if (token.is_identity()) ++counts[*token.identity_index];
    }
  }
  return counts;
}

std::size_t DistinctIdentityCount(const Captionset& cs) {
  return IdentityMultiset(cs).size();
}

std::vector<TokenPosition> IdentityPositions(const Captionset& cs) {
  std::vector<TokenPosition> positions;
  for (std::size_t c = 0; c < cs.captions.size(); ++c) {
    for (std::size_t t = 0; t < cs.captions[c].size(); ++t) {
      if (cs.captions[c][t].is_identity()) positions.push_back({c, t});
    }
  }
  return positions;
}

}  // namespace idcap
