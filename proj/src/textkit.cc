#include "presse/textkit.h"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <array>
#include <optional>
#include <span>

#include "presse/unicode.h"

namespace presse {

namespace {

constexpr std::array<std::string_view, 19> kClitics = {
    "je",  "tu",  "il",  "elle", "on",  "nous", "vous", "ils", "elles", "ce",
    "moi", "toi", "lui", "leur", "le",  "la",   "les",  "y",   "en"};

constexpr std::array<std::string_view, 7> kSubjectClitics = {
    "il", "elle", "on", "ils", "elles", "ce", "je"};

struct Cursor {
  std::string_view text;

  // Code point at byte offset i and its encoded length; -1 at the end.
  UChar32 At(size_t i, size_t *len) const {
    if (i >= text.size()) {
      *len = 0;
      return -1;
    }
    int32_t next = static_cast<int32_t>(i);
    UChar32 c;
    U8_NEXT(text.data(), next, static_cast<int32_t>(text.size()), c);
    *len = static_cast<size_t>(next) - i;
    return c;
  }
};

bool IsWordChar(UChar32 c) {
  if (c < 0) return false;
  return u_isalnum(c) || (U_GET_GC_MASK(c) & U_GC_M_MASK) != 0;
}

bool IsHyphen(UChar32 c) { return c == '-' || c == 0x2010 || c == 0x2011; }

bool IsApostrophe(UChar32 c) { return c == '\'' || c == 0x2019; }

bool IsSpace(UChar32 c) {
  return c >= 0 && (u_isUWhiteSpace(c) || c == 0xFEFF || c == 0x200B);
}

std::string AsciiLower(std::string_view s) {
  std::string out(s);
  for (char &ch : out) {
    if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
  }
  return out;
}

// Byte end of the run of word characters starting at i.
size_t WordRunEnd(const Cursor &cur, size_t i) {
  size_t len;
  while (IsWordChar(cur.At(i, &len))) i += len;
  return i;
}

bool Contains(std::span<const std::string_view> set, std::string_view s) {
  return std::find(set.begin(), set.end(), s) != set.end();
}

// If the hyphen at byte offset p starts an inverted clitic ("-elle",
// "-t-il"), returns its byte length; otherwise 0.
size_t CliticLength(const Cursor &cur, size_t p) {
  size_t len;
  if (!IsHyphen(cur.At(p, &len))) return 0;
  size_t q = p + len;
  size_t q1 = WordRunEnd(cur, q);
  if (q1 == q) return 0;
  std::string first = AsciiLower(cur.text.substr(q, q1 - q));

  auto ends_cleanly = [&](size_t at) {
    size_t l1;
    UChar32 c = cur.At(at, &l1);
    if (IsWordChar(c) || IsApostrophe(c)) return false;
    if (IsHyphen(c)) {
      size_t l2;
      return !IsWordChar(cur.At(at + l1, &l2));
    }
    return true;
  };

  if (first == "t") {
    size_t h2;
    if (IsHyphen(cur.At(q1, &h2))) {
      size_t r = q1 + h2;
      size_t r1 = WordRunEnd(cur, r);
      std::string second = AsciiLower(cur.text.substr(r, r1 - r));
      if (Contains(kSubjectClitics, second) && ends_cleanly(r1)) return r1 - p;
    }
    return 0;
  }
  if (Contains(kClitics, first) && ends_cleanly(q1)) return q1 - p;
  return 0;
}

bool IsSingleCapital(std::string_view word) {
  return CodePointLength(word) == 1 && StartsUppercase(word);
}

}  // namespace

bool IsSentenceTerminator(std::string_view token) {
  return token == "." || token == "!" || token == "?" || token == "…";
}

bool IsWordToken(const Token &token) {
  if (token.text.empty()) return false;
  if (StartsAlphanumeric(token.text)) return true;
  return token.text.size() > 1 && token.text.front() == '-';
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  Cursor cur{text};
  bool sentence_start = true;
  size_t i = 0;

  auto emit = [&](size_t start, size_t end) {
    Token t;
    t.text = std::string(text.substr(start, end - start));
    t.start = start;
    t.end = end;
    t.is_capitalized = StartsUppercase(t.text);
    if (IsWordToken(t)) {
      t.is_sentence_initial = sentence_start && StartsAlphanumeric(t.text);
      if (StartsAlphanumeric(t.text)) sentence_start = false;
    } else if (IsSentenceTerminator(t.text)) {
      sentence_start = true;
    }
    tokens.push_back(std::move(t));
  };

  while (i < text.size()) {
    size_t len;
    UChar32 c = cur.At(i, &len);
    if (len == 0) break;
    if (c < 0) {  // invalid byte: keep it as its own token
      emit(i, i + len);
      i += len;
      continue;
    }
    if (IsSpace(c)) {
      i += len;
      continue;
    }
    if (IsWordChar(c)) {
      size_t j = i;
      while (j < text.size()) {
        size_t l;
        UChar32 d = cur.At(j, &l);
        if (IsWordChar(d)) {
          j += l;
          continue;
        }
        size_t l2;
        UChar32 after = cur.At(j + l, &l2);
        if (IsHyphen(d) && IsWordChar(after)) {
          if (CliticLength(cur, j) > 0) break;
          j += l;
          continue;
        }
        if (IsApostrophe(d) && u_isalpha(after)) {
          j += l;  // elision: split after the apostrophe
        }
        break;
      }
      if (j < text.size() && text[j] == '.' &&
          IsSingleCapital(text.substr(i, j - i))) {
        ++j;
      }
      emit(i, j);
      i = j;
      continue;
    }
    if (IsHyphen(c) && !tokens.empty() && tokens.back().end == i) {
      size_t clitic = CliticLength(cur, i);
      if (clitic > 0) {
        emit(i, i + clitic);
        i += clitic;
        continue;
      }
    }
    emit(i, i + len);
    i += len;
  }
  return tokens;
}

QuoteMarkRole ClassifyQuoteMark(std::string_view t) {
  if (t == "«" || t == "“" || t == "„" || t == "‹" ||
      t == "‘") {
    return QuoteMarkRole::kOpen;
  }
  if (t == "»" || t == "”" || t == "›" || t == "’") {
    return QuoteMarkRole::kClose;
  }
  if (t == "\"" || t == "'") return QuoteMarkRole::kToggle;
  return QuoteMarkRole::kNone;
}

namespace {

int QuoteFamily(std::string_view t) {
  if (t == "‹" || t == "›" || t == "‘" || t == "’" ||
      t == "'") {
    return 1;
  }
  return 0;
}

}  // namespace

QuotePairs MatchQuotePairs(const std::vector<Token> &tokens) {
  QuotePairs result;
  std::vector<size_t> stack;
  std::vector<std::pair<size_t, size_t>> pairs;

  auto close_family = [&](int family) -> std::optional<size_t> {
    for (size_t k = stack.size(); k-- > 0;) {
      if (QuoteFamily(tokens[stack[k]].text) == family) {
        size_t opener = stack[k];
        result.unbalanced += stack.size() - k - 1;
        stack.resize(k);
        return opener;
      }
    }
    return std::nullopt;
  };

  for (size_t i = 0; i < tokens.size(); ++i) {
    const std::string &t = tokens[i].text;
    switch (ClassifyQuoteMark(t)) {
      case QuoteMarkRole::kNone:
        break;
      case QuoteMarkRole::kOpen:
        stack.push_back(i);
        break;
      case QuoteMarkRole::kClose:
        if (auto opener = close_family(QuoteFamily(t))) {
          pairs.emplace_back(*opener, i);
        } else {
          ++result.unbalanced;
        }
        break;
      case QuoteMarkRole::kToggle: {
        // A straight mark closes only the same mark; otherwise it opens.
        auto same = std::find_if(stack.rbegin(), stack.rend(), [&](size_t k) {
          return tokens[k].text == t;
        });
        if (same != stack.rend()) {
          const size_t depth = static_cast<size_t>(stack.rend() - same) - 1;
          result.unbalanced += stack.size() - depth - 1;
          pairs.emplace_back(stack[depth], i);
          stack.resize(depth);
        } else {
          stack.push_back(i);
        }
        break;
      }
    }
  }
  result.unbalanced += stack.size();

  std::sort(pairs.begin(), pairs.end());
  size_t covered_until = 0;
  bool any = false;
  for (const auto &p : pairs) {
    if (any && p.first < covered_until) continue;  // nested
    result.outer.push_back(p);
    covered_until = p.second;
    any = true;
  }
  return result;
}

std::vector<TokenRange> SplitSentences(const std::vector<Token> &tokens) {
  std::vector<TokenRange> sentences;
  if (tokens.empty()) return sentences;

  const QuotePairs quotes = MatchQuotePairs(tokens);
  std::vector<bool> inside(tokens.size(), false);
  std::vector<bool> breaks_after(tokens.size(), false);
  for (const auto &[open, close] : quotes.outer) {
    for (size_t k = open + 1; k < close; ++k) inside[k] = true;
    // « Je pars. » Elle rit.  -- the closer ends the sentence.
    bool content_terminated =
        close > open + 1 && IsSentenceTerminator(tokens[close - 1].text);
    if (content_terminated && close + 1 < tokens.size()) {
      const Token &next = tokens[close + 1];
      if ((IsWordToken(next) && next.is_capitalized) ||
          ClassifyQuoteMark(next.text) == QuoteMarkRole::kOpen) {
        breaks_after[close] = true;
      }
    }
  }

  size_t begin = 0;
  for (size_t i = 0; i < tokens.size(); ++i) {
    bool boundary = breaks_after[i];
    if (!inside[i] && IsSentenceTerminator(tokens[i].text)) {
      while (i + 1 < tokens.size() && IsSentenceTerminator(tokens[i + 1].text)) {
        ++i;
      }
      boundary = true;
    }
    if (boundary) {
      sentences.push_back({begin, i + 1});
      begin = i + 1;
    }
  }
  if (begin < tokens.size()) sentences.push_back({begin, tokens.size()});
  return sentences;
}

std::string_view SpanText(std::string_view source,
                          const std::vector<Token> &tokens, TokenRange range) {
  if (range.empty() || range.end > tokens.size()) return {};
  size_t from = tokens[range.begin].start;
  size_t to = tokens[range.end - 1].end;
  return source.substr(from, to - from);
}

std::vector<PersonMention> FindPersonMentions(const std::vector<Token> &tokens,
                                              const NameLexicon &lexicon) {
  constexpr size_t kMaxNameLength = 4;
  std::vector<PersonMention> mentions;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const Token &t = tokens[i];
    if (!t.is_capitalized || !StartsAlphanumeric(t.text)) continue;
    const NameEntry *entry = lexicon.Find(t.text);
    if (entry == nullptr) continue;
    size_t end = i + 1;
    while (end < tokens.size() && end - i < kMaxNameLength &&
           tokens[end].is_capitalized && StartsAlphanumeric(tokens[end].text)) {
      ++end;
    }
    mentions.push_back({i, {i, end}, entry->masculinity});
  }
  return mentions;
}

}  // namespace presse
