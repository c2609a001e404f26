#include "presse/quotes.h"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <span>

#include "presse/unicode.h"

namespace presse {

namespace {

// Bounded window around the speech verb used for subject detection.
constexpr size_t kSubjectWindow = 6;
// How far past the verb R2 looks for its "que".
constexpr size_t kComplementWindow = 6;

using Words = std::span<const std::string_view>;

constexpr std::array<std::string_view, 22> kAuxiliaries = {
    "a",      "ont",     "avait",  "avaient", "aura",    "auront",
    "aurait", "auraient", "avoir",  "eu",      "va",      "vont",
    "allait", "est",     "sont",   "était",   "étaient", "fut",
    "doit",   "devait",  "peut",   "pouvait"};

constexpr std::array<std::string_view, 22> kObjectClitics = {
    "lui", "leur", "l'", "le", "la", "les", "me", "m'", "te", "t'", "se",
    "s'",  "y",    "en", "ne", "n'", "pas", "jamais", "plus", "nous",
    "vous", "point"};

constexpr std::array<std::string_view, 26> kAdverbs = {
    "aussi",    "encore",  "déjà",     "notamment", "également", "ainsi",
    "alors",    "toutefois", "pourtant", "bien",     "enfin",     "ensuite",
    "même",     "souvent", "toujours", "hier",      "récemment", "aujourd'",
    "hui",      "simplement", "clairement", "immédiatement", "volontiers",
    "vivement", "sobrement", "d'ailleurs"};

constexpr std::array<std::string_view, 21> kDeterminers = {
    "le",  "la",    "l'",   "les",  "un",   "une",   "des",
    "du",  "ce",    "cette", "ces", "son",  "sa",    "ses",
    "leur", "leurs", "mon", "ma",   "mes",  "au",    "aux"};

// Words that end a subject noun phrase when walking away from the verb.
constexpr std::array<std::string_view, 30> kPhraseBoundaries = {
    "que",   "qu'",    "qui",    "et",     "mais",  "car",   "où",
    "dont",  "lorsque", "lorsqu'", "quand", "si",    "comme", "selon",
    "puis",  "à",      "au",     "aux",    "en",    "dans",  "sur",
    "pour",  "lors",   "devant", "avant",  "après", "avec",  "par",
    "or",    "donc"};

constexpr std::array<std::string_view, 2> kComplementizers = {"que", "qu'"};

struct IrregularForm {
  std::string_view form;
  std::string_view lemma;
};

constexpr std::array<IrregularForm, 52> kIrregularForms = {{
    {"dit", "dire"},          {"dis", "dire"},
    {"disent", "dire"},       {"disait", "dire"},
    {"disaient", "dire"},     {"dira", "dire"},
    {"diront", "dire"},       {"dirait", "dire"},
    {"disant", "dire"},       {"dite", "dire"},
    {"écrit", "écrire"},      {"écrivent", "écrire"},
    {"écrivait", "écrire"},   {"reconnaît", "reconnaître"},
    {"reconnait", "reconnaître"}, {"reconnu", "reconnaître"},
    {"reconnaissent", "reconnaître"}, {"reconnaissait", "reconnaître"},
    {"admet", "admettre"},    {"admis", "admettre"},
    {"admettent", "admettre"}, {"promet", "promettre"},
    {"promis", "promettre"},  {"prévient", "prévenir"},
    {"prévenu", "prévenir"},  {"préviennent", "prévenir"},
    {"soutient", "soutenir"}, {"soutenu", "soutenir"},
    {"soutiennent", "soutenir"}, {"maintient", "maintenir"},
    {"maintenu", "maintenir"}, {"conclut", "conclure"},
    {"conclu", "conclure"},   {"répond", "répondre"},
    {"répondu", "répondre"},  {"répondent", "répondre"},
    {"répondait", "répondre"}, {"poursuit", "poursuivre"},
    {"poursuivi", "poursuivre"}, {"poursuivent", "poursuivre"},
    {"rappelle", "rappeler"}, {"rappellent", "rappeler"},
    {"martèle", "marteler"},  {"martèlent", "marteler"},
    {"lance", "lancer"},      {"lançait", "lancer"},
    {"lança", "lancer"},      {"interrompt", "interrompre"},
    {"s'exclame", "exclamer"}, {"relève", "relever"},
    {"relèvent", "relever"},  {"soupire", "soupirer"},
}};

struct SuffixRule {
  std::string_view suffix;
  std::string_view lemma_ending;
};

// Longest suffixes first.
constexpr std::array<SuffixRule, 31> kSuffixRules = {{
    {"eraient", "er"}, {"issaient", "ir"}, {"erait", "er"}, {"eront", "er"},
    {"èrent", "er"},   {"issent", "ir"},   {"issait", "ir"}, {"aient", "er"},
    {"ement", "er"},   {"era", "er"},      {"ait", "er"},    {"ant", "er"},
    {"ées", "er"},     {"ent", "er"},      {"ons", "er"},    {"ira", "ir"},
    {"ais", "er"},     {"ée", "er"},       {"és", "er"},     {"es", "er"},
    {"ez", "er"},      {"ie", "ir"},       {"it", "ir"},     {"é", "er"},
    {"e", "er"},       {"a", "er"},        {"i", "ir"},      {"er", "er"},
    {"ir", "ir"},      {"re", "re"},       {"u", "re"},
}};

bool In(Words set, std::string_view word) {
  return std::find(set.begin(), set.end(), word) != set.end();
}

std::string Key(const Token &t) { return NormalizeWord(t.text); }

// "-t-elle" -> "elle", "-il" -> "il".
std::string StripClitic(std::string word) {
  if (word.rfind("-t-", 0) == 0) return word.substr(3);
  if (!word.empty() && word.front() == '-') return word.substr(1);
  return word;
}

bool IsClitic(const Token &t) {
  return t.text.size() > 1 && t.text.front() == '-';
}

bool IsPunctuation(const Token &t) { return !IsWordToken(t); }

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::string_view QuoteKindName(QuoteKind kind) {
  return kind == QuoteKind::kDirect ? "direct" : "indirect";
}

std::string_view GenderCueName(GenderCue cue) {
  switch (cue) {
    case GenderCue::kTitle: return "title";
    case GenderCue::kProfession: return "profession";
    case GenderCue::kPronoun: return "pronoun";
    case GenderCue::kFirstName: return "first_name";
    case GenderCue::kNone: return "none";
  }
  return "none";
}

std::optional<std::string> SpeechVerbMatcher::Lemma(
    std::string_view token) const {
  std::string word = NormalizeWord(token);
  if (word.empty()) return std::nullopt;
  for (const auto &[form, lemma] : kIrregularForms) {
    if (form == word && lemmas_->count(lemma) > 0) return std::string(lemma);
  }
  if (lemmas_->count(word) > 0) return word;
  for (const auto &[suffix, ending] : kSuffixRules) {
    if (!EndsWith(word, suffix)) continue;
    std::string stem = word.substr(0, word.size() - suffix.size());
    if (CodePointLength(stem) < 2) continue;
    std::string lemma = stem + std::string(ending);
    if (lemmas_->count(lemma) > 0) return lemma;
  }
  return std::nullopt;
}

QuoteExtractor::QuoteExtractor(const GenderCueLexicons &cues,
                               const NameLexicon &names)
    : cues_(cues), names_(names), verbs_(cues.speech_verbs) {}

bool QuoteExtractor::IsSpeechVerb(const std::vector<Token> &tokens,
                                  size_t i) const {
  const Token &t = tokens[i];
  if (!StartsAlphanumeric(t.text)) return false;
  if (Key(t) == "selon") return true;
  if (!verbs_.Lemma(t.text)) return false;
  // "l'annonce", "une déclaration": a determiner makes it a noun.
  if (i > 0 && In(kDeterminers, Key(tokens[i - 1]))) return false;
  return true;
}

std::vector<Quotation> QuoteExtractor::Extract(
    const std::vector<Token> &tokens, const std::vector<TokenRange> &sentences,
    const QuotePairs &pairs) const {
  const size_t n = tokens.size();
  std::vector<size_t> sentence_of(n, 0);
  for (size_t s = 0; s < sentences.size(); ++s) {
    for (size_t i = sentences[s].begin; i < sentences[s].end; ++i) {
      sentence_of[i] = s;
    }
  }
  std::vector<bool> quoted(n, false);
  for (const auto &[open, close] : pairs.outer) {
    for (size_t i = open; i <= close; ++i) quoted[i] = true;
  }
  std::vector<bool> verb(n, false);
  for (size_t i = 0; i < n; ++i) {
    verb[i] = !quoted[i] && IsSpeechVerb(tokens, i);
  }

  auto is_filler = [&](size_t i) {
    const std::string k = Key(tokens[i]);
    return IsPunctuation(tokens[i]) || IsClitic(tokens[i]) ||
           In(kAuxiliaries, k) || In(kObjectClitics, k) || In(kAdverbs, k);
  };

  std::vector<Quotation> direct;
  for (const auto &[open, close] : pairs.outer) {
    if (close <= open + 1) continue;
    size_t words = 0;
    for (size_t i = open + 1; i < close; ++i) {
      if (IsWordToken(tokens[i])) ++words;
    }
    if (words == 0) continue;

    const TokenRange sentence = sentences[sentence_of[open]];
    const TokenRange closing_sentence = sentences[sentence_of[close]];
    std::optional<size_t> chosen;

    // Inverted order right after the closer: « ... », dit-elle.
    for (size_t i = close + 1;
         i < closing_sentence.end && i <= close + 4 && !chosen; ++i) {
      if (verb[i]) {
        chosen = i;
      } else if (!is_filler(i)) {
        break;
      }
    }
    // Verb introducing the quote earlier in the sentence.
    for (size_t i = open; i-- > sentence.begin && !chosen;) {
      if (verb[i]) chosen = i;
    }
    // Any later verb in the sentence.
    for (size_t i = close + 1; i < closing_sentence.end && !chosen; ++i) {
      if (verb[i]) chosen = i;
    }
    // Neighboring sentences: previous first, then next.
    const size_t s_open = sentence_of[open];
    const size_t s_close = sentence_of[close];
    if (!chosen && s_open > 0) {
      const TokenRange prev = sentences[s_open - 1];
      for (size_t i = prev.end; i-- > prev.begin && !chosen;) {
        if (verb[i]) chosen = i;
      }
    }
    if (!chosen && s_close + 1 < sentences.size()) {
      const TokenRange next = sentences[s_close + 1];
      for (size_t i = next.begin; i < next.end && !chosen; ++i) {
        if (verb[i]) chosen = i;
      }
    }
    if (!chosen) continue;

    // Short quoted fragments are usually titles or terms, not speech,
    // unless the punctuation marks them as reported words.
    const bool colon_intro = open > 0 && tokens[open - 1].text == ":";
    const bool inverted = *chosen > close && *chosen <= close + 4;
    if (words < 3 && !colon_intro && !inverted) continue;

    Quotation q;
    q.kind = QuoteKind::kDirect;
    q.content_span = {open + 1, close};
    q.verb_index = *chosen;
    direct.push_back(q);
  }

  std::vector<Quotation> indirect;
  for (size_t v = 0; v < n; ++v) {
    if (!verb[v] || Key(tokens[v]) == "selon") continue;
    const TokenRange sentence = sentences[sentence_of[v]];
    std::optional<size_t> complementizer;
    for (size_t i = v + 1; i < sentence.end && i <= v + kComplementWindow;
         ++i) {
      const std::string k = Key(tokens[i]);
      if (In(kComplementizers, k)) {
        complementizer = i;
        break;
      }
      if (verb[i] || quoted[i] || IsSentenceTerminator(tokens[i].text) ||
          tokens[i].text == ":" || tokens[i].text == ";") {
        break;
      }
    }
    if (!complementizer) continue;
    size_t begin = *complementizer + 1;
    size_t end = sentence.end;
    while (end > begin && IsPunctuation(tokens[end - 1]) &&
           ClassifyQuoteMark(tokens[end - 1].text) == QuoteMarkRole::kNone) {
      --end;
    }
    if (end <= begin) continue;
    Quotation q;
    q.kind = QuoteKind::kIndirect;
    q.content_span = {begin, end};
    q.verb_index = v;
    indirect.push_back(q);
  }

  auto overlaps = [](const TokenRange &a, const TokenRange &b) {
    return a.begin < b.end && b.begin < a.end;
  };
  std::vector<Quotation> result = direct;
  for (const auto &q : indirect) {
    bool clash = std::any_of(result.begin(), result.end(), [&](const auto &r) {
      return overlaps(r.content_span, q.content_span);
    });
    if (!clash) result.push_back(q);
  }
  std::sort(result.begin(), result.end(), [](const auto &a, const auto &b) {
    return a.content_span.begin < b.content_span.begin;
  });
  return result;
}

std::optional<TokenRange> QuoteExtractor::NounPhraseLeft(
    const std::vector<Token> &tokens, size_t last, size_t left_limit) const {
  // Collects word tokens leftwards from `last` (inclusive).
  size_t begin = last + 1;
  size_t i = last + 1;
  while (i-- > left_limit) {
    const Token &t = tokens[i];
    if (!IsWordToken(t) || IsClitic(t)) break;
    const std::string k = Key(t);
    if (In(kPhraseBoundaries, k) || verbs_.Lemma(t.text)) break;
    if (last + 1 - i > kSubjectWindow) break;
    begin = i;
  }
  if (begin > last) return std::nullopt;
  return TokenRange{begin, last + 1};
}

std::optional<TokenRange> QuoteExtractor::SubjectBefore(
    const std::vector<Token> &tokens, size_t verb, size_t left_limit) const {
  size_t i = verb;
  size_t skipped = 0;
  while (i > left_limit && skipped < kSubjectWindow) {
    const Token &t = tokens[i - 1];
    if (IsClitic(t)) return TokenRange{i - 1, i};  // a-t-il dit
    const std::string k = Key(t);
    if (In(kAuxiliaries, k) || In(kObjectClitics, k) || In(kAdverbs, k)) {
      --i;
      ++skipped;
      continue;
    }
    break;
  }
  if (i <= left_limit) return std::nullopt;
  const size_t last = i - 1;
  if (IsWordToken(tokens[last])) {
    return NounPhraseLeft(tokens, last, left_limit);
  }
  // Apposition: "Doanna Joe, la championne du monde, a dit".
  if (tokens[last].text == "," && last > left_limit) {
    auto inner = NounPhraseLeft(tokens, last - 1, left_limit);
    if (!inner || inner->begin <= left_limit + 1) return std::nullopt;
    if (!In(kDeterminers, Key(tokens[inner->begin]))) return std::nullopt;
    const size_t comma = inner->begin - 1;
    if (tokens[comma].text != "," || comma == 0) return std::nullopt;
    auto head = NounPhraseLeft(tokens, comma - 1, left_limit);
    if (!head) return std::nullopt;
    return TokenRange{head->begin, inner->end};
  }
  return std::nullopt;
}

std::optional<TokenRange> QuoteExtractor::SubjectAfter(
    const std::vector<Token> &tokens, size_t verb, size_t right_limit) const {
  size_t i = verb + 1;
  if (i < right_limit && IsClitic(tokens[i])) return TokenRange{i, i + 1};
  while (i < right_limit && i <= verb + kSubjectWindow &&
         In(kAdverbs, Key(tokens[i]))) {
    ++i;
  }
  const size_t begin = i;
  while (i < right_limit && i - begin < kSubjectWindow) {
    const Token &t = tokens[i];
    if (!IsWordToken(t) || IsClitic(t)) break;
    const std::string k = Key(t);
    if (i > begin && In(kPhraseBoundaries, k)) break;
    if (i == begin && (In(kPhraseBoundaries, k) || In(kComplementizers, k))) {
      break;
    }
    if (verbs_.Lemma(t.text) && i > begin) break;
    ++i;
  }
  if (i == begin) return std::nullopt;
  return TokenRange{begin, i};
}

std::optional<TokenRange> QuoteExtractor::AttributeSpeaker(
    const std::vector<Token> &tokens, const Quotation &quotation,
    TokenRange sentence, const std::optional<TokenRange> &previous_speaker,
    bool *by_proximity) const {
  if (by_proximity != nullptr) *by_proximity = false;
  const size_t v = quotation.verb_index;
  std::optional<TokenRange> subject;
  const bool verb_after = v >= quotation.content_span.end;
  const bool in_sentence = sentence.contains(v);
  const size_t begin = in_sentence ? sentence.begin : 0;
  const size_t end = in_sentence ? sentence.end : tokens.size();

  if (Key(tokens[v]) == "selon") {
    subject = SubjectAfter(tokens, v, end);
  } else if (verb_after) {
    // Closing mark plus one so the quote content is never the subject.
    const size_t floor =
        std::max(begin, std::min(quotation.content_span.end + 1, v));
    // « ... », a-t-elle expliqué: the clitic sits between closer and verb.
    for (size_t i = floor; i < v && !subject; ++i) {
      if (IsClitic(tokens[i])) subject = TokenRange{i, i + 1};
    }
    if (!subject) subject = SubjectAfter(tokens, v, end);
    if (!subject) subject = SubjectBefore(tokens, v, floor);
  } else {
    subject = SubjectBefore(tokens, v, begin);
    if (!subject) {
      size_t limit = quotation.kind == QuoteKind::kDirect &&
                             quotation.content_span.begin > v
                         ? quotation.content_span.begin - 1
                         : end;
      subject = SubjectAfter(tokens, v, std::min(limit, end));
    }
  }
  if (subject) return subject;
  if (previous_speaker) {
    if (by_proximity != nullptr) *by_proximity = true;
    return previous_speaker;
  }
  return std::nullopt;
}

std::optional<TokenRange> QuoteExtractor::DetectPersonName(
    const std::vector<Token> &tokens, TokenRange span) const {
  for (size_t i = span.begin; i < span.end; ++i) {
    const Token &t = tokens[i];
    if (!t.is_capitalized || !StartsAlphanumeric(t.text)) continue;
    if (cues_.titles.count(Key(t)) > 0) continue;
    size_t j = i + 1;
    while (j < span.end && tokens[j].is_capitalized &&
           StartsAlphanumeric(tokens[j].text)) {
      ++j;
    }
    return TokenRange{i, j};
  }
  return std::nullopt;
}

GenderResolution QuoteExtractor::ResolveGender(const std::vector<Token> &tokens,
                                               TokenRange span) const {
  auto scan = [&](const GenderMap &map, GenderCue cue,
                  bool strip) -> std::optional<GenderResolution> {
    for (size_t i = span.begin; i < span.end; ++i) {
      std::string k = Key(tokens[i]);
      if (strip) k = StripClitic(k);
      auto it = map.find(k);
      if (it != map.end()) return GenderResolution{it->second, cue};
    }
    return std::nullopt;
  };
  if (auto r = scan(cues_.titles, GenderCue::kTitle, false)) return *r;
  if (auto r = scan(cues_.professions, GenderCue::kProfession, false)) {
    return *r;
  }
  if (auto r = scan(cues_.pronouns, GenderCue::kPronoun, true)) return *r;

  // First name of each capitalized run; the name lexicon takes precedence
  // over the secondary dictionary.
  for (size_t i = span.begin; i < span.end; ++i) {
    const Token &t = tokens[i];
    if (!t.is_capitalized || !StartsAlphanumeric(t.text)) continue;
    if (i > span.begin && tokens[i - 1].is_capitalized &&
        StartsAlphanumeric(tokens[i - 1].text) &&
        cues_.titles.count(Key(tokens[i - 1])) == 0) {
      continue;  // not the first word of a name
    }
    if (const NameEntry *entry = names_.Find(t.text)) {
      if (entry->masculinity > 0.5) {
        return {Gender::kMale, GenderCue::kFirstName};
      }
      if (entry->masculinity < 0.5) {
        return {Gender::kFemale, GenderCue::kFirstName};
      }
      continue;  // epicene
    }
    auto it = cues_.first_names.find(Key(t));
    if (it != cues_.first_names.end()) {
      return {it->second, GenderCue::kFirstName};
    }
  }
  return {};
}

QuoteAnalysis QuoteExtractor::Analyze(const std::vector<Token> &tokens) const {
  QuoteAnalysis analysis;
  const std::vector<TokenRange> sentences = SplitSentences(tokens);
  const QuotePairs pairs = MatchQuotePairs(tokens);
  analysis.diagnostics.unbalanced_quotes = pairs.unbalanced;
  analysis.quotations = Extract(tokens, sentences, pairs);

  std::optional<TokenRange> previous;
  for (auto &q : analysis.quotations) {
    TokenRange sentence{0, tokens.size()};
    for (const auto &s : sentences) {
      if (s.contains(q.verb_index)) sentence = s;
    }
    bool by_proximity = false;
    q.speaker_span =
        AttributeSpeaker(tokens, q, sentence, previous, &by_proximity);
    q.attributed_by_proximity = by_proximity;
    if (!q.speaker_span) {
      ++analysis.diagnostics.unresolved_speakers;
      continue;
    }
    previous = q.speaker_span;
    GenderResolution g = ResolveGender(tokens, *q.speaker_span);
    q.speaker_gender = g.gender;
    q.cue = g.cue;
  }
  return analysis;
}

std::string SpeakerKey(std::string_view speaker_text) {
  return StripClitic(NormalizeWord(CollapseWhitespace(speaker_text)));
}

QuoteTally QuoteExtractor::Tally(std::string_view text,
                                 const std::vector<Token> &tokens,
                                 const std::vector<Quotation> &quotations) const {
  std::map<std::string, Gender> speakers;
  for (const auto &q : quotations) {
    if (!q.speaker_span) continue;
    std::string key = SpeakerKey(SpanText(text, tokens, *q.speaker_span));
    speakers.emplace(key, q.speaker_gender);  // first occurrence wins
  }
  QuoteTally tally;
  for (const auto &[key, gender] : speakers) {
    switch (gender) {
      case Gender::kMale: ++tally.men; break;
      case Gender::kFemale: ++tally.women; break;
      case Gender::kUnknown: ++tally.unknown; break;
    }
  }
  if (tally.men + tally.women > 0) {
    tally.share = static_cast<double>(tally.men) /
                  static_cast<double>(tally.men + tally.women);
  }
  return tally;
}

std::vector<Quotation> ExtractQuotations(std::string_view text,
                                         const GenderCueLexicons &cues,
                                         const NameLexicon &names) {
  QuoteExtractor extractor(cues, names);
  return extractor.Analyze(Tokenize(text)).quotations;
}

GenderResolution ResolveGender(std::string_view speaker_text,
                               const GenderCueLexicons &cues,
                               const NameLexicon &names) {
  QuoteExtractor extractor(cues, names);
  const std::vector<Token> tokens = Tokenize(speaker_text);
  return extractor.ResolveGender(tokens, {0, tokens.size()});
}

QuoteTally MaleQuoteShare(std::string_view text, const GenderCueLexicons &cues,
                          const NameLexicon &names) {
  QuoteExtractor extractor(cues, names);
  const std::vector<Token> tokens = Tokenize(text);
  QuoteAnalysis analysis = extractor.Analyze(tokens);
  return extractor.Tally(text, tokens, analysis.quotations);
}

}  // namespace presse
