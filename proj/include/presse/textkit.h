#ifndef PRESSE_TEXTKIT_H_
#define PRESSE_TEXTKIT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "presse/lexicon.h"

namespace presse {

// A token is a byte span of the source text. text == source[start, end).
struct Token {
  std::string text;
  size_t start = 0;
  size_t end = 0;
  bool is_capitalized = false;
  bool is_sentence_initial = false;
};

// Half-open token index range [begin, end).
struct TokenRange {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  bool empty() const { return end <= begin; }
  bool contains(size_t i) const { return i >= begin && i < end; }
  bool operator==(const TokenRange &) const = default;
};

// Splits UTF-8 text into words and punctuation. Hyphenated compounds stay
// whole ("Jean-Michel") except for inverted clitic pronouns ("dit-elle" gives
// "dit", "-elle"); an elided word keeps its apostrophe ("l'élue" gives "l'",
// "élue"); a single capital followed by a period keeps it ("M.").
std::vector<Token> Tokenize(std::string_view text);

// Sentence ranges partitioning the tokens. Terminators (. ! ? …) inside a
// matched quotation-mark pair do not end a sentence.
std::vector<TokenRange> SplitSentences(const std::vector<Token> &tokens);

enum class QuoteMarkRole { kNone, kOpen, kClose, kToggle };

QuoteMarkRole ClassifyQuoteMark(std::string_view token);

struct QuotePairs {
  // Outermost matched pairs as (opener index, closer index), ordered.
  std::vector<std::pair<size_t, size_t>> outer;
  // Openers left unmatched plus closers with nothing to close.
  size_t unbalanced = 0;
};

// Matches quotation marks. « » “ ” " are one family and ‹ › ‘ ’ ' another;
// a closer pairs with the nearest open mark of its family.
QuotePairs MatchQuotePairs(const std::vector<Token> &tokens);

bool IsSentenceTerminator(std::string_view token);
bool IsWordToken(const Token &token);

// Source text covered by a token range.
std::string_view SpanText(std::string_view source,
                          const std::vector<Token> &tokens, TokenRange range);

// One occurrence of a lexicon first name.
struct PersonMention {
  size_t first_name_token_index = 0;
  TokenRange full_span;
  double masculinity = 0.0;
};

// Every capitalized token found in the name lexicon yields a mention; the
// span grows over the capitalized words that follow (the surname).
std::vector<PersonMention> FindPersonMentions(const std::vector<Token> &tokens,
                                              const NameLexicon &lexicon);

}  // namespace presse

#endif  // PRESSE_TEXTKIT_H_
