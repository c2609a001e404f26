#include "presse/unicode.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "presse/errors.h"

namespace presse {

namespace {

const icu::Normalizer2 &Nfc() {
  static const icu::Normalizer2 *nfc = [] {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2 *n = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");
    return n;
  }();
  return *nfc;
}

UChar32 FirstCodePoint(std::string_view text) {
  if (text.empty()) return U_SENTINEL;
  int32_t i = 0;
  UChar32 c;
  U8_NEXT(text.data(), i, static_cast<int32_t>(text.size()), c);
  return c;
}

}  // namespace

std::string NormalizeWord(std::string_view text) {
  bool ascii = true;
  for (unsigned char c : text) ascii = ascii && c < 0x80;
  if (ascii) {
    std::string out(text);
    for (char &c : out) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
  }
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString composed = Nfc().normalize(u, status);
  if (U_FAILURE(status)) return std::string(text);
  composed.toLower(icu::Locale::getRoot());
  // Lowercasing can decompose a few characters; recompose.
  icu::UnicodeString result = Nfc().normalize(composed, status);
  if (U_FAILURE(status)) return std::string(text);
  result.findAndReplace(icu::UnicodeString(static_cast<UChar32>(0x2019)),
                        icu::UnicodeString(static_cast<UChar32>('\'')));
  std::string out;
  result.toUTF8String(out);
  return out;
}

size_t CodePointLength(std::string_view text) {
  size_t n = 0;
  int32_t i = 0;
  const auto len = static_cast<int32_t>(text.size());
  while (i < len) {
    UChar32 c;
    U8_NEXT(text.data(), i, len, c);
    ++n;
  }
  return n;
}

bool StartsUppercase(std::string_view text) {
  UChar32 c = FirstCodePoint(text);
  return c >= 0 && (u_isupper(c) || u_istitle(c));
}

bool StartsAlphanumeric(std::string_view text) {
  UChar32 c = FirstCodePoint(text);
  return c >= 0 && u_isalnum(c);
}

std::string CollapseWhitespace(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\f' ||
        ch == '\v') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(ch);
  }
  return out;
}

std::string_view Trim(std::string_view text) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  return text;
}

}  // namespace presse
