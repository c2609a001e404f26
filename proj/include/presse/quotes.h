#ifndef PRESSE_QUOTES_H_
#define PRESSE_QUOTES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "presse/gender.h"
#include "presse/lexicon.h"
#include "presse/textkit.h"

namespace presse {

enum class QuoteKind { kDirect, kIndirect };

// Which stage of the gender cascade decided a speaker's gender.
enum class GenderCue { kTitle, kProfession, kPronoun, kFirstName, kNone };

std::string_view QuoteKindName(QuoteKind kind);
std::string_view GenderCueName(GenderCue cue);

struct Quotation {
  TokenRange content_span;
  QuoteKind kind = QuoteKind::kDirect;
  std::optional<TokenRange> speaker_span;
  Gender speaker_gender = Gender::kUnknown;
  GenderCue cue = GenderCue::kNone;
  size_t verb_index = 0;
  bool attributed_by_proximity = false;
};

struct QuoteDiagnostics {
  size_t unbalanced_quotes = 0;
  size_t unresolved_speakers = 0;
};

struct QuoteAnalysis {
  std::vector<Quotation> quotations;
  QuoteDiagnostics diagnostics;
};

struct GenderResolution {
  Gender gender = Gender::kUnknown;
  GenderCue cue = GenderCue::kNone;
};

// Distinct quoted speakers by gender in one article. share is
// men / (men + women), absent when no speaker has a known gender.
struct QuoteTally {
  size_t men = 0;
  size_t women = 0;
  size_t unknown = 0;
  std::optional<double> share;
};

// Maps inflected forms to speech-verb lemmas: an irregular-form table first,
// then suffix stripping for regular -er and -ir verbs.
class SpeechVerbMatcher {
 public:
  explicit SpeechVerbMatcher(const WordSet &lemmas) : lemmas_(&lemmas) {}

  // Lemma of a token if it is a form of a listed speech verb.
  std::optional<std::string> Lemma(std::string_view token) const;

 private:
  const WordSet *lemmas_;
};

// Rule-based quotation extractor. Holds references to the lexicons, which
// must outlive it; const methods are safe to call from many threads.
class QuoteExtractor {
 public:
  QuoteExtractor(const GenderCueLexicons &cues, const NameLexicon &names);

  // Extracts quotations, attributes speakers and resolves their gender.
  QuoteAnalysis Analyze(const std::vector<Token> &tokens) const;

  // Direct (R1) and indirect (R2) quotations without speakers.
  std::vector<Quotation> Extract(const std::vector<Token> &tokens,
                                 const std::vector<TokenRange> &sentences,
                                 const QuotePairs &pairs) const;

  // Subject of the quotation's speech verb (S1) or, failing that, the most
  // recent previously attributed speaker (S2).
  std::optional<TokenRange> AttributeSpeaker(
      const std::vector<Token> &tokens, const Quotation &quotation,
      TokenRange sentence, const std::optional<TokenRange> &previous_speaker,
      bool *by_proximity = nullptr) const;

  // Title, then profession, then pronoun, then first name.
  GenderResolution ResolveGender(const std::vector<Token> &tokens,
                                 TokenRange span) const;

  // The first capitalized word run in the span (a person name candidate).
  std::optional<TokenRange> DetectPersonName(const std::vector<Token> &tokens,
                                             TokenRange span) const;

  QuoteTally Tally(std::string_view text, const std::vector<Token> &tokens,
                   const std::vector<Quotation> &quotations) const;

  bool IsSpeechVerb(const std::vector<Token> &tokens, size_t i) const;

 private:
  std::optional<TokenRange> SubjectBefore(const std::vector<Token> &tokens,
                                          size_t verb, size_t left_limit) const;
  std::optional<TokenRange> SubjectAfter(const std::vector<Token> &tokens,
                                         size_t verb, size_t right_limit) const;
  std::optional<TokenRange> NounPhraseLeft(const std::vector<Token> &tokens,
                                           size_t last,
                                           size_t left_limit) const;

  const GenderCueLexicons &cues_;
  const NameLexicon &names_;
  SpeechVerbMatcher verbs_;
};

// Convenience wrappers that tokenize the text themselves.
std::vector<Quotation> ExtractQuotations(std::string_view text,
                                         const GenderCueLexicons &cues,
                                         const NameLexicon &names);

GenderResolution ResolveGender(std::string_view speaker_text,
                               const GenderCueLexicons &cues,
                               const NameLexicon &names);

QuoteTally MaleQuoteShare(std::string_view text, const GenderCueLexicons &cues,
                          const NameLexicon &names);

// Dedup key for a speaker span: normalized text with inverted-clitic hyphens
// removed ("-t-elle" and "Elle" share a key).
std::string SpeakerKey(std::string_view speaker_text);

}  // namespace presse

#endif  // PRESSE_QUOTES_H_
