#include "presse/mentions.h"

namespace presse {

MentionScore ScoreMentions(const std::vector<PersonMention> &mentions) {
  MentionScore score;
  score.n_mentions = mentions.size();
  for (const auto &m : mentions) score.masculinity_sum += m.masculinity;
  if (score.n_mentions > 0) {
    score.rate = score.masculinity_sum / static_cast<double>(score.n_mentions);
  }
  return score;
}

MentionScore MasculinityRate(std::string_view text, const NameLexicon &lexicon) {
  return ScoreMentions(FindPersonMentions(Tokenize(text), lexicon));
}

}  // namespace presse
