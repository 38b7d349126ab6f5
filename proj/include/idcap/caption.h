#ifndef IDCAP_CAPTION_H_
#define IDCAP_CAPTION_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace idcap {

enum class TokenKind { kWord, kIdentity, kPunctuation };

// A single caption token. Identity tokens ("p1", "p2", ...) carry their
// person-id index; their surface is always the canonical "p<index>".
struct Token {
  std::string surface;
  TokenKind kind = TokenKind::kWord;
  std::optional<int> identity_index;

  static Token Word(std::string surface);
  static Token Identity(int index);
  static Token Punctuation(std::string surface);

  bool is_identity() const { return kind == TokenKind::kIdentity; }
  bool is_punctuation() const { return kind == TokenKind::kPunctuation; }

  friend bool operator==(const Token&, const Token&) = default;
};

using TokenSequence = std::vector<Token>;

// Reserved surface used for blanked identity mentions. tokenize() splits
// brackets off as punctuation, so it can never produce this token.
inline constexpr std::string_view kBlankMarker = "[blank]";
// Spelling of a blank inside FITB text files.
inline constexpr std::string_view kFitbBlankText = "[...]";

bool IsBlank(const Token& token);

// Position of a token inside a captionset.
struct TokenPosition {
  std::size_t caption = 0;
  std::size_t token = 0;

  friend auto operator<=>(const TokenPosition&, const TokenPosition&) = default;
};

struct Captionset {
  std::string videoset_id;
  std::vector<TokenSequence> captions;

  friend bool operator==(const Captionset&, const Captionset&) = default;
};

// Person-id label P<index>.
struct IdentityLabel {
  int index = 0;

  std::string ToString() const;  // "P<index>"
  friend auto operator<=>(const IdentityLabel&, const IdentityLabel&) = default;
};

// Parses "P3" / "p3". Returns nullopt for anything else.
std::optional<IdentityLabel> ParseIdentityLabel(std::string_view text);

struct FitbInstance {
  Captionset captionset_with_blanks;
  std::vector<TokenPosition> blanks;
  std::vector<IdentityLabel> gt_labels;
  std::optional<std::vector<IdentityLabel>> pred_labels;
};

// Lowercases, splits on whitespace and peels punctuation off word edges.
// Words matching p<digits> (index >= 1) become identity tokens.
TokenSequence Tokenize(std::string_view caption_text);

// Like Tokenize, but the FITB spelling "[...]" becomes a blank token.
TokenSequence TokenizeWithBlanks(std::string_view caption_text);

// Canonical detokenizer: surfaces joined by single spaces. Identity tokens
// are written as "P<index>" and blanks as "[...]".
std::string Detokenize(const TokenSequence& tokens);

Captionset MakeCaptionset(std::string videoset_id,
                          const std::vector<std::string>& captions);

// Mapping from original identity index to canonical index.
using IdentityMapping = std::map<int, int>;

// Renumbers identities by first occurrence in reading order.
Captionset NormalizeIdentities(const Captionset& cs);
Captionset NormalizeIdentities(const Captionset& cs, IdentityMapping* mapping);

// Applies an index mapping to every identity token; unmapped ids are kept.
Captionset RelabelIdentities(const Captionset& cs,
                             const IdentityMapping& mapping);

// Throws Error(kNoIdentities) when cs contains no identity token.
FitbInstance MakeFitb(const Captionset& cs);

// Inverse of MakeFitb: writes `labels` into the blank positions.
Captionset FillBlanks(const FitbInstance& fitb,
                      const std::vector<IdentityLabel>& labels);

// Identity index -> number of occurrences across all captions.
std::map<int, int> IdentityMultiset(const Captionset& cs);

std::size_t DistinctIdentityCount(const Captionset& cs);

std::vector<TokenPosition> IdentityPositions(const Captionset& cs);

}  // namespace idcap

#endif  // IDCAP_CAPTION_H_
