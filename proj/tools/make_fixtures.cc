// Writes the synthetic fixture corpora under data/fixtures:
//
//   eval_corpus.jsonl  annotated articles for the evaluation protocols
//   html/<source>/     article pages for the ingest pipeline
//
// Gold quotation spans and mention labels come from how each article is
// assembled, never from the extractor. Output is a pure function of the seed.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "presse/textkit.h"

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

struct Person {
  std::string first;  // empty when only the surname is used
  std::string last;
  char gender;       // M or F
  char name_label;   // annotation of the first name: M, F or N
  std::string role;  // gendered description, may be empty
  std::string title;
};

const std::vector<Person> kPeople = {
    {"Nathalie", "Roy", 'F', 'F', "présidente de l'association", "Mme"},
    {"Sophie", "Marchand", 'F', 'F', "directrice de l'hôpital", "Mme"},
    {"Isabelle", "Garnier", 'F', 'F', "avocate de la famille", "Mme"},
    {"Claire", "Fabre", 'F', 'F', "sénatrice du Gard", "Mme"},
    {"Anne", "Vidal", 'F', 'F', "chercheuse au CNRS", "Mme"},
    {"Jeanne", "Morel", 'F', 'F', "conseillère municipale", "Mme"},
    {"Maëva", "Costa", 'F', 'F', "championne de France", "Mme"},
    {"Hélène", "Duval", 'F', 'F', "infirmière du service", "Mme"},
    {"Camille", "Leroy", 'F', 'N', "enseignante au lycée", "Mme"},
    {"Dominique", "Faure", 'F', 'N', "", "Mme"},
    {"Georges", "Martin", 'M', 'M', "président du club", "M."},
    {"Pierre", "Lambert", 'M', 'M', "directeur de l'usine", "M."},
    {"Jean-Michel", "Rey", 'M', 'M', "maire de la commune", "M."},
    {"Thomas", "Girard", 'M', 'M', "entraîneur de l'équipe", "M."},
    {"Nicolas", "Perrin", 'M', 'M', "député de la Somme", "M."},
    {"Julien", "Caron", 'M', 'M', "agriculteur installé près de Rennes", "M."},
    {"Olivier", "Blanc", 'M', 'M', "chercheur à l'Inserm", "M."},
    {"François", "Mercier", 'M', 'M', "avocat du syndicat", "M."},
    {"Claude", "Dumas", 'M', 'N', "", "M."},
    {"Kylian", "Bertin", 'M', 'M', "joueur du club", "M."},
    {"Ursula", "Koch", 'F', 'F', "ambassadrice d'Allemagne", "Mme"},
    {"Sacha", "Petit", 'M', 'N', "étudiant en droit", "M."},
};

// "le avocat" elides to "l'avocat".
std::string Definite(const std::string &noun, char gender) {
  static const std::vector<std::string> kVowels = {"a", "e", "i", "o", "u", "é", "h"};
  for (const auto &v : kVowels) {
    if (noun.rfind(v, 0) == 0) return "l'" + noun;
  }
  return (gender == 'F' ? "la " : "le ") + noun;
}

// Roles whose holders have no recoverable gender.
const std::vector<std::string> kAnonymous = {
    "le porte-parole du ministère", "un responsable syndical",
    "la préfecture", "un témoin", "le parquet", "un proche du dossier"};

const std::vector<std::string> kContents = {
    "Nous avons tout fait pour éviter cette situation",
    "Le calendrier sera tenu malgré les difficultés",
    "Personne ne pouvait prévoir une telle affluence",
    "Il faudra du temps pour reconstruire la confiance",
    "Cette décision arrive beaucoup trop tard",
    "Nous attendons des réponses précises de l'État",
    "Les familles ont besoin d'être accompagnées",
    "Je ne regrette absolument rien de ce choix",
    "Le projet a été validé après de longues discussions",
    "Les chiffres montrent une amélioration nette",
    "Nous n'avons jamais été consultés sur ce dossier",
    "La saison a été difficile pour tout le monde",
    "Il reste beaucoup de travail avant l'ouverture",
    "Les habitants méritent mieux que ces promesses",
    "Je suis fière du travail accompli par l'équipe",
    "Ce texte ne règle pas le fond du problème",
    "Nous allons saisir la justice dans les prochains jours",
    "Le budget a été construit avec prudence",
    "Rien ne justifie un tel retard dans les travaux",
    "On ne peut pas laisser les élèves sans solution",
    "La recherche avance plus vite que prévu",
    "Les salariés ont fait preuve d'un grand courage",
    "Ce match restera dans les mémoires du club",
    "Nous étions prêts à discuter depuis des mois",
    "Les résultats de l'enquête seront publiés en janvier",
    "Il n'y a aucune raison de céder à la panique",
    "Le service fonctionne à flux tendu depuis l'été",
    "Les négociations reprendront dès la semaine prochaine",
    "Je souhaite que chacun prenne ses responsabilités",
    "Cette victoire appartient à tous les bénévoles",
};

const std::vector<std::string> kIndirect = {
    "la situation restait sous contrôle",
    "les travaux reprendraient au printemps",
    "le dossier serait examiné en priorité",
    "aucune fermeture n'était envisagée pour le moment",
    "les effectifs seraient renforcés dès janvier",
    "la réforme devait être entièrement revue",
    "le club ne changerait pas d'entraîneur",
    "les familles seraient reçues à la mairie",
    "l'enquête progressait rapidement",
    "le budget serait voté avant la fin du mois",
};

const std::vector<std::string> kFillers = {
    "La réunion s'est tenue dans la salle du conseil.",
    "Plusieurs dizaines de personnes étaient présentes.",
    "Le dossier est suivi de près par les services de l'État.",
    "Les premières mesures doivent entrer en vigueur en janvier.",
    "La séance a duré près de trois heures.",
    "Le texte sera examiné au Sénat au début de l'année.",
    "Les associations locales suivent le dossier depuis deux ans.",
    "Le quartier accueille environ quatre mille habitants.",
    "Une nouvelle rencontre est prévue le mois prochain.",
    "Les résultats complets seront présentés au printemps.",
    "Le site a été fermé au public pendant la durée des travaux.",
    "La salle était comble pour l'occasion.",
};

const std::vector<std::string> kTitles = {"Grand Froid", "Bleu Nuit",
                                          "Les Voisins", "Dernier Train"};

struct Verb {
  std::string past;      // "a déclaré"
  std::string inverted;  // "déclare"
};

const std::vector<Verb> kVerbs = {
    {"a déclaré", "déclare"}, {"a expliqué", "explique"},
    {"a affirmé", "affirme"}, {"a ajouté", "ajoute"},
    {"a indiqué", "indique"}, {"a souligné", "souligne"},
    {"a précisé", "précise"}, {"a assuré", "assure"},
    {"a confié", "confie"},   {"a estimé", "estime"},
    {"a reconnu", "reconnaît"}, {"a rappelé", "rappelle"},
};

class Rng {
 public:
  explicit Rng(uint32_t seed) : engine_(seed) {}
  // mt19937 output is fully specified, unlike the standard distributions.
  size_t Pick(size_t n) { return engine_() % n; }
  bool Chance(unsigned percent) { return engine_() % 100 < percent; }
  template <typename T>
  const T &From(const std::vector<T> &v) { return v[Pick(v.size())]; }

 private:
  std::mt19937 engine_;
};

struct GoldQuote {
  size_t char_begin;
  size_t char_end;
  std::string speaker;
  char gender;  // M, F or U
};

struct Article {
  std::vector<std::string> paragraphs;
  std::string text;  // paragraphs joined with newlines
  std::vector<std::pair<std::string, char>> mentions;
  std::vector<GoldQuote> quotes;
};

// Assembles sentences into paragraphs, tracking the character offsets of
// planted quotations in the final article text.
class ArticleBuilder {
 public:
  void Add(const std::string &s) { sentence_ += s; }

  void Quote(const std::string &content, const std::string &speaker, char gender) {
    pending_.push_back({sentence_.size(), sentence_.size() + content.size(),
                        speaker, gender});
    sentence_ += content;
  }

  void Mention(const Person &p) {
    if (!p.first.empty()) article_.mentions.emplace_back(p.first, p.name_label);
  }

  void Sentence(const std::string &s) {
    Add(s);
    EndSentence();
  }

  void EndSentence() {
    if (sentence_.empty()) return;
    if (!paragraph_.empty()) paragraph_ += ' ';
    const size_t base = ParagraphBase() + paragraph_.size();
    for (GoldQuote q : pending_) {
      q.char_begin += base;
      q.char_end += base;
      article_.quotes.push_back(q);
    }
    pending_.clear();
    paragraph_ += sentence_;
    sentence_.clear();
  }

  void EndParagraph() {
    EndSentence();
    if (paragraph_.empty()) return;
    if (!article_.text.empty()) article_.text += '\n';
    article_.text += paragraph_;
    article_.paragraphs.push_back(std::move(paragraph_));
    paragraph_.clear();
  }

  Article Finish() {
    EndParagraph();
    return std::move(article_);
  }

 private:
  size_t ParagraphBase() const {
    return article_.text.empty() ? 0 : article_.text.size() + 1;
  }

  Article article_;
  std::string paragraph_;
  std::string sentence_;
  std::vector<GoldQuote> pending_;
};

std::string FullName(const Person &p) {
  return p.first.empty() ? p.last : p.first + " " + p.last;
}

// Introduces the person, then plants `n_quotes` quotations in varied forms.
void PlantPerson(ArticleBuilder &b, Rng &rng, const Person &p, int n_quotes) {
  const char g = p.gender;
  const std::string pronoun = g == 'F' ? "elle" : "il";
  // Introduction sentence.
  b.Mention(p);
  if (!p.role.empty() && rng.Chance(60)) {
    b.Sentence(FullName(p) + ", " + p.role + ", était présent" +
               (g == 'F' ? "e" : "") + " lors de la rencontre.");
  } else {
    b.Sentence(FullName(p) + " a suivi le dossier depuis le début.");
  }
  for (int q = 0; q < n_quotes; ++q) {
    const Verb &v = rng.From(kVerbs);
    const std::string &content = rng.From(kContents);
    switch (rng.Pick(10)) {
      case 0:
      case 1:  // « ... », a déclaré Prénom Nom.
        b.Mention(p);
        b.Add("« ");
        b.Quote(content, FullName(p), g);
        b.Add(" », " + v.past + " " + FullName(p) + ".");
        b.EndSentence();
        break;
      case 2:  // « ... », estime-t-elle.
        b.Add("« ");
        b.Quote(content, pronoun, g);
        b.Add(" », " + v.inverted + "-t-" + pronoun + ".");
        b.EndSentence();
        break;
      case 3:  // Prénom Nom a déclaré : « ... ».
        b.Mention(p);
        b.Add(FullName(p) + " " + v.past + " : « ");
        b.Quote(content, FullName(p), g);
        b.Add(" ».");
        b.EndSentence();
        break;
      case 4:  // Indirect speech.
        b.Add(std::string(g == 'F' ? "Elle" : "Il") + " " + v.past + " que ");
        b.Quote(rng.From(kIndirect), pronoun, g);
        b.Add(".");
        b.EndSentence();
        break;
      case 5:  // Title and surname.
        b.Add("« ");
        b.Quote(content, p.title + " " + p.last, g);
        b.Add(" », " + v.past + " " + p.title + " " + p.last + ".");
        b.EndSentence();
        break;
      case 6:  // Gendered role.
        if (!p.role.empty()) {
          b.Add("« ");
          b.Quote(content, p.role, g);
          b.Add(" », " + v.past + " " + Definite(p.role, g) + ".");
          b.EndSentence();
          break;
        }
        [[fallthrough]];
      case 7:  // Surname only: no gender cue.
        b.Add("« ");
        b.Quote(content, p.last, 'U');
        b.Add(" », " + v.past + " " + p.last + ".");
        b.EndSentence();
        break;
      case 8:  // No speech verb: the quotation follows an action.
        b.Mention(p);
        b.Sentence(FullName(p) + " hausse les épaules.");
        b.Add("« ");
        b.Quote(content, FullName(p), g);
        b.Add(". »");
        b.EndSentence();
        b.EndParagraph();
        break;
      default:  // Reported without a complementizer.
        b.Mention(p);
        b.Add("Pour " + FullName(p) + ", ");
        b.Quote(rng.From(kIndirect), FullName(p), g);
        b.Add(".");
        b.EndSentence();
        break;
    }
    if (rng.Chance(40)) b.Sentence(rng.From(kFillers));
  }
}

Article MakeArticle(Rng &rng) {
  ArticleBuilder b;
  b.Sentence(rng.From(kFillers));
  const int n_people = 1 + static_cast<int>(rng.Pick(3));
  std::vector<size_t> chosen;
  while (chosen.size() < static_cast<size_t>(n_people)) {
    size_t k = rng.Pick(kPeople.size());
    if (std::find(chosen.begin(), chosen.end(), k) == chosen.end()) chosen.push_back(k);
  }
  for (size_t k : chosen) {
    PlantPerson(b, rng, kPeople[k], 1 + static_cast<int>(rng.Pick(2)));
    b.EndParagraph();
    if (rng.Chance(30)) {
      // An anonymous source.
      const std::string &who = rng.From(kAnonymous);
      const Verb &v = rng.From(kVerbs);
      b.Add("« ");
      b.Quote(rng.From(kContents), who, 'U');
      b.Add(" », " + v.past + " " + who + ".");
      b.EndSentence();
    }
    if (rng.Chance(25)) {
      // Quotation marks around a title are not speech.
      b.Sentence("Le film « " + rng.From(kTitles) + " » sort en salle mercredi.");
    }
  }
  b.Sentence(rng.From(kFillers));
  return b.Finish();
}

std::string Date(int day_offset) {
  // 2021-11-22 plus an offset of at most 31 days.
  static const int month_days[] = {30, 31};
  int day = 22 + day_offset;
  int month = 11;
  if (day > month_days[0]) {
    day -= month_days[0];
    month = 12;
  }
  char buf[16];
  std::snprintf(buf, sizeof(buf), "2021-%02d-%02d", month, day);
  return buf;
}

ordered_json AnnotationLine(const Article &a, size_t index, const std::string &date) {
  const std::vector<presse::Token> tokens = presse::Tokenize(a.text);
  ordered_json j;
  j["url"] = "https://fixtures.invalid/eval/" + std::to_string(index);
  j["published_date"] = date;
  j["source"] = "eval";
  j["text"] = a.text;
  j["manual_mentions"] = ordered_json::array();
  for (const auto &[name, label] : a.mentions) {
    j["manual_mentions"].push_back({{"name", name}, {"gender", std::string(1, label)}});
  }
  j["manual_quotes"] = ordered_json::array();
  for (const auto &q : a.quotes) {
    size_t begin = tokens.size(), end = 0;
    for (size_t t = 0; t < tokens.size(); ++t) {
      if (tokens[t].start >= q.char_begin && tokens[t].end <= q.char_end) {
        begin = std::min(begin, t);
        end = t + 1;
      }
    }
    if (begin >= end) throw std::runtime_error("empty gold span");
    j["manual_quotes"].push_back({{"tokens", {begin, end}},
                                  {"speaker", q.speaker},
                                  {"gender", std::string(1, q.gender)}});
  }
  return j;
}

std::string Escape(const std::string &s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Site {
  std::string id;
  std::string host;
  std::vector<std::string> rubrics;
};

const std::vector<Site> kSites = {
    {"lemonde", "www.lemonde.fr", {"Culture", "Sciences", "Politique", "Société"}},
    {"lefigaro", "www.lefigaro.fr", {"Cinéma", "Musique", "Politique", "Conjoncture"}},
    {"lequipe", "www.lequipe.fr", {"Football", "Rugby", "Tennis"}},
};

struct Page {
  std::string url;
  std::string date;  // YYYY-MM-DD or empty
  std::string rubric;
  std::string title;
  std::vector<std::string> authors;
  std::vector<std::string> paragraphs;
  bool paywalled = false;
};

std::string FrenchDate(const std::string &iso) {
  static const char *months[] = {"janvier", "février", "mars",      "avril",
                                 "mai",     "juin",    "juillet",   "août",
                                 "septembre", "octobre", "novembre", "décembre"};
  int m = std::stoi(iso.substr(5, 2));
  int d = std::stoi(iso.substr(8, 2));
  return std::to_string(d) + " " + months[m - 1] + " " + iso.substr(0, 4);
}

// Each outlet gets its own markup conventions.
std::string RenderPage(const Site &site, const Page &p) {
  std::string h = "<!DOCTYPE html>\n<html lang=\"fr\">\n<head>\n<meta charset=\"utf-8\">\n";
  h += "<title>" + Escape(p.title) + " | " + site.id + "</title>\n";
  h += "<link rel=\"canonical\" href=\"" + p.url + "\">\n";
  h += "<meta property=\"og:title\" content=\"" + Escape(p.title) + "\">\n";
  h += "<meta property=\"og:image\" content=\"https://" + site.host + "/img/une.jpg\">\n";
  if (site.id == "lemonde") {
    if (!p.date.empty()) {
      h += "<meta property=\"article:published_time\" content=\"" + p.date +
           "T07:30:00+01:00\">\n";
    }
    h += "<meta property=\"article:section\" content=\"" + Escape(p.rubric) + "\">\n";
    for (const auto &a : p.authors) {
      h += "<meta name=\"author\" content=\"" + Escape(a) + "\">\n";
    }
  }
  h += "<script>window.dataLayer = [{\"page\": \"article\"}];</script>\n";
  h += "<style>p { margin: 0 }</style>\n</head>\n<body>\n";
  h += "<header><nav><ul><li><a href=\"/\">Accueil</a></li><li><a href=\"/"
       "international\">International</a></li></ul>"
       "<p>Édition du jour, mise à jour en continu</p></nav></header>\n";
  if (site.id == "lemonde") {
    h += "<main><article>\n<h1>" + Escape(p.title) + "</h1>\n";
    if (p.paywalled) {
      h += "<p class=\"article__status\">Article réservé aux abonnés</p>\n";
    }
    h += "<section class=\"article__content\">\n";
    for (const auto &para : p.paragraphs) h += "<p>" + Escape(para) + "</p>\n";
    h += "<aside><p>Lire aussi : notre dossier complet sur le sujet et toutes "
         "les réactions</p></aside>\n";
    h += "</section>\n</article></main>\n";
  } else if (site.id == "lefigaro") {
    h += "<div class=\"fig-main\">\n<span class=\"fig-rubric\">" + Escape(p.rubric) +
         "</span>\n<h1>" + Escape(p.title) + "</h1>\n";
    if (!p.authors.empty()) {
      h += "<p class=\"fig-byline\">Par <a class=\"fig-author\">" + Escape(p.authors[0]) +
           "</a></p>\n";
    }
    if (!p.date.empty()) {
      h += "<time datetime=\"" + p.date + "T06:00:00Z\">Publié le " +
           FrenchDate(p.date) + "</time>\n";
    }
    h += "<div class=\"fig-body\">\n";
    for (size_t i = 0; i < p.paragraphs.size(); ++i) {
      // Unclosed paragraphs, as some templates emit them.
      h += "<p class=\"fig-paragraph\">" + Escape(p.paragraphs[i]) + "\n";
      if (p.paywalled && i == 0) {
        h += "<div class=\"fig-premium-paywall\">La suite est réservée aux abonnés."
             "</div>\n";
        break;
      }
    }
    h += "</div>\n</div>\n";
  } else {
    h += "<div id=\"article\">\n<div class=\"Article__rubric\">" + Escape(p.rubric) +
         "</div>\n<h1>" + Escape(p.title) + "</h1>\n";
    if (!p.date.empty()) {
      h += "<div class=\"Article__date\">Publié le " + FrenchDate(p.date) +
           " à 08h15</div>\n";
    }
    if (!p.authors.empty()) {
      h += "<div class=\"Author__name\">" + Escape(p.authors[0]) + "</div>\n";
    }
    for (const auto &para : p.paragraphs) {
      h += "<div class=\"Paragraph\"><p>" + Escape(para) + "</p></div>\n";
    }
    h += "</div>\n";
  }
  h += "<footer><p>© Tous droits réservés. Reproduction interdite sans "
       "autorisation écrite de la rédaction.</p></footer>\n</body>\n</html>\n";
  return h;
}

const std::vector<std::string> kAuthors = {"Anne Dupont", "Marc Lefèvre",
                                           "Léa Bonnet", "Paul Rivière",
                                           "Inès Moreau"};

void WriteFile(const fs::path &path, const std::string &content) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string HundredWords(Rng &rng) {
  static const std::vector<std::string> words = {
      "le",     "conseil", "a",       "voté",     "une",     "mesure",
      "pour",   "les",     "écoles",  "du",       "quartier", "et",
      "la",     "ville",   "prévoit", "des",      "travaux", "importants",
      "dans",   "plusieurs", "rues",  "avant",    "l'été",   "prochain"};
  std::string out = "Dans";
  for (int i = 1; i < 100; ++i) out += " " + rng.From(words);
  return out + ".";
}

void WriteHtmlCorpus(const fs::path &dir, Rng &rng) {
  fs::remove_all(dir);
  int serial = 0;
  auto slug = [&](const Site &s) {
    return s.id + "/article-" + std::to_string(100 + serial++) + ".html";
  };
  auto url_of = [](const Site &s, const std::string &file) {
    return "https://" + s.host + "/" + file.substr(file.find('/') + 1, std::string::npos);
  };
  // Regular articles over five weeks, ending on Thursday 2021-12-23.
  for (int i = 0; i < 36; ++i) {
    const Site &site = kSites[i % kSites.size()];
    Article a = MakeArticle(rng);
    Page p;
    p.date = Date(static_cast<int>(rng.Pick(32)));
    p.rubric = rng.From(site.rubrics);
    p.title = "Article " + std::to_string(i) + " : " + rng.From(kContents);
    p.authors = {rng.From(kAuthors)};
    p.paragraphs = a.paragraphs;
    p.paywalled = i % 9 == 4;
    const std::string file = slug(site);
    p.url = url_of(site, file);
    WriteFile(dir / file, RenderPage(site, p));
  }

  // Pages with a known expected outcome.
  const Site &lemonde = kSites[0];
  const Site &lefigaro = kSites[1];
  const Site &lequipe = kSites[2];
  Page names;
  names.url = "https://www.lemonde.fr/culture/prenoms.html";
  names.date = "2021-12-22";
  names.rubric = "Culture";
  names.title = "Trois invités";
  names.authors = {"Anne Dupont"};
  names.paragraphs = {"Jean-Michel a reçu Camille au théâtre.",
                      "Le lendemain, Camille a repris la route."};
  WriteFile(dir / "lemonde/prenoms.html", RenderPage(lemonde, names));

  Page council;
  council.url = "https://www.lefigaro.fr/politique/conseil.html";
  council.date = "2021-12-21";
  council.rubric = "Politique";
  council.title = "Démission au conseil";
  council.authors = {"Marc Lefèvre"};
  council.paragraphs = {"Jeanne D et Georges E sont membres du conseil. Jeanne D "
                        "dit: 'Je souhaite démissionner'"};
  WriteFile(dir / "lefigaro/conseil.html", RenderPage(lefigaro, council));

  Page words;
  words.url = "https://www.lemonde.fr/societe/trois-paragraphes.html";
  words.date = "2021-12-20";
  words.rubric = "Société";
  words.title = "Trois paragraphes";
  words.authors = {"Léa Bonnet"};
  words.paragraphs = {HundredWords(rng), HundredWords(rng), HundredWords(rng)};
  WriteFile(dir / "lemonde/trois-paragraphes.html", RenderPage(lemonde, words));

  Page anonymous = council;
  anonymous.url = "https://www.lefigaro.fr/cinema/sans-auteur.html";
  anonymous.rubric = "Cinéma";
  anonymous.title = "Sortie de la semaine";
  anonymous.authors.clear();
  anonymous.paragraphs = {"Le film « Grand Froid » sort mercredi dans 300 salles."};
  WriteFile(dir / "lefigaro/sans-auteur.html", RenderPage(lefigaro, anonymous));

  Page undated;
  undated.url = "https://www.lequipe.fr/football/sans-date.html";
  undated.rubric = "Football";
  undated.title = "Match nul";
  undated.authors = {"Paul Rivière"};
  undated.paragraphs = {"« Nous méritions mieux ce soir », a déclaré Thomas Girard."};
  WriteFile(dir / "lequipe/sans-date.html", RenderPage(lequipe, undated));

  Page paywalled = names;
  paywalled.url = "https://www.lemonde.fr/sciences/abonnes.html";
  paywalled.rubric = "Sciences";
  paywalled.title = "Une découverte";
  paywalled.paywalled = true;
  paywalled.paragraphs = {"« La recherche avance plus vite que prévu », a affirmé "
                          "Anne Vidal."};
  WriteFile(dir / "lemonde/abonnes.html", RenderPage(lemonde, paywalled));

  // Same canonical url as prenoms.html.
  WriteFile(dir / "lemonde/prenoms-copie.html", RenderPage(lemonde, names));

  WriteFile(dir / "lemonde/vide.html",
            "<!DOCTYPE html><html><head><title>Vidéo</title></head><body>"
            "<div class=\"video\"><iframe src=\"https://player.invalid/1\">"
            "</iframe></div></body></html>\n");
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Regenerates the synthetic fixture corpora."};
  std::string out_dir = "data/fixtures";
  uint32_t seed = 20211223;
  size_t n_eval = 60;
  app.add_option("--out", out_dir, "Fixture directory");
  app.add_option("--seed", seed, "Generator seed");
  app.add_option("--eval-articles", n_eval, "Annotated articles to write");
  CLI11_PARSE(app, argc, argv);

  try {
    Rng rng(seed);
    std::string lines;
    for (size_t i = 0; i < n_eval; ++i) {
      Article a = MakeArticle(rng);
      lines += AnnotationLine(a, i, Date(static_cast<int>(rng.Pick(32)))).dump() + "\n";
    }
    WriteFile(fs::path(out_dir) / "eval_corpus.jsonl", lines);
    WriteHtmlCorpus(fs::path(out_dir) / "html", rng);
  } catch (const std::exception &e) {
    std::cerr << "make_fixtures: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
