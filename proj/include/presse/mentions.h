#ifndef PRESSE_MENTIONS_H_
#define PRESSE_MENTIONS_H_

#include <optional>
#include <string_view>
#include <vector>

#include "presse/lexicon.h"
#include "presse/textkit.h"

namespace presse {

// Per-article masculinity rate of first-name mentions: the mean masculinity
// over every name occurrence. Absent when the article mentions no name.
struct MentionScore {
  std::optional<double> rate;
  size_t n_mentions = 0;
  double masculinity_sum = 0.0;
};

MentionScore ScoreMentions(const std::vector<PersonMention> &mentions);

MentionScore MasculinityRate(std::string_view text, const NameLexicon &lexicon);

}  // namespace presse

#endif  // PRESSE_MENTIONS_H_
