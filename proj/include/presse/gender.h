#ifndef PRESSE_GENDER_H_
#define PRESSE_GENDER_H_

#include <optional>
#include <string_view>

namespace presse {

enum class Gender { kFemale, kMale, kUnknown };

inline std::string_view GenderCode(Gender g) {
  switch (g) {
    case Gender::kFemale: return "F";
    case Gender::kMale: return "M";
    case Gender::kUnknown: return "U";
  }
  return "U";
}

// Parses the two lexicon labels "F" and "M". Anything else is absent.
inline std::optional<Gender> ParseBinaryGender(std::string_view label) {
  if (label == "F") return Gender::kFemale;
  if (label == "M") return Gender::kMale;
  return std::nullopt;
}

inline Gender Opposite(Gender g) {
  if (g == Gender::kFemale) return Gender::kMale;
  if (g == Gender::kMale) return Gender::kFemale;
  return g;
}

}  // namespace presse

#endif  // PRESSE_GENDER_H_
