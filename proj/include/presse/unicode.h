#ifndef PRESSE_UNICODE_H_
#define PRESSE_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace presse {

// Lowercase fold followed by canonical composition (NFC). Diacritics and
// hyphens are kept, so "Maëva" and "Maeva" stay distinct keys. The
// typographic apostrophe folds to the ASCII one.
std::string NormalizeWord(std::string_view text);

// Number of Unicode code points in a UTF-8 string.
size_t CodePointLength(std::string_view text);

// True if the first code point is an uppercase or titlecase letter.
bool StartsUppercase(std::string_view text);

// True if the first code point is a letter or digit.
bool StartsAlphanumeric(std::string_view text);

// Collapses runs of whitespace into one space and trims both ends.
std::string CollapseWhitespace(std::string_view text);

// Trims ASCII whitespace (and a UTF-8 BOM at the front).
std::string_view Trim(std::string_view text);

}  // namespace presse

#endif  // PRESSE_UNICODE_H_
