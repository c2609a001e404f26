#include "presse/html.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstring>
#include <optional>
#include <functional>

#include "presse/unicode.h"

namespace presse {

namespace {

constexpr std::array<std::string_view, 14> kVoidTags = {
    "area", "base", "br",   "col",   "embed",  "hr",    "img",
    "input", "link", "meta", "param", "source", "track", "wbr"};

// Opening one of these closes an open <p>.
constexpr std::array<std::string_view, 22> kClosesParagraph = {
    "address", "article", "aside", "blockquote", "div",    "dl",
    "fieldset", "figure", "footer", "form",      "h1",     "h2",
    "h3",       "h4",     "h5",     "h6",        "header", "hr",
    "nav",      "ol",     "p",      "section"};

template <size_t N>
bool In(const std::array<std::string_view, N> &set, std::string_view s) {
  return std::find(set.begin(), set.end(), s) != set.end();
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

bool IsSpaceChar(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
}

void AppendUtf8(std::string &out, uint32_t cp) {
  if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

struct NamedEntity {
  std::string_view name;
  uint32_t code_point;
};

constexpr NamedEntity kEntities[] = {
    {"amp", '&'},       {"lt", '<'},         {"gt", '>'},
    {"quot", '"'},      {"apos", '\''},      {"nbsp", 0xA0},
    {"laquo", 0xAB},    {"raquo", 0xBB},     {"lsquo", 0x2018},
    {"rsquo", 0x2019},  {"ldquo", 0x201C},   {"rdquo", 0x201D},
    {"bdquo", 0x201E},  {"hellip", 0x2026},  {"ndash", 0x2013},
    {"mdash", 0x2014},  {"euro", 0x20AC},    {"copy", 0xA9},
    {"deg", 0xB0},      {"middot", 0xB7},    {"agrave", 0xE0},
    {"acirc", 0xE2},    {"auml", 0xE4},      {"ccedil", 0xE7},
    {"egrave", 0xE8},   {"eacute", 0xE9},    {"ecirc", 0xEA},
    {"euml", 0xEB},     {"icirc", 0xEE},     {"iuml", 0xEF},
    {"ocirc", 0xF4},    {"ouml", 0xF6},      {"ugrave", 0xF9},
    {"ucirc", 0xFB},    {"uuml", 0xFC},      {"yuml", 0xFF},
    {"oelig", 0x153},   {"aelig", 0xE6},     {"Agrave", 0xC0},
    {"Acirc", 0xC2},    {"Ccedil", 0xC7},    {"Egrave", 0xC8},
    {"Eacute", 0xC9},   {"Ecirc", 0xCA},     {"Icirc", 0xCE},
    {"Ocirc", 0xD4},    {"Ucirc", 0xDB},     {"OElig", 0x152},
    {"thinsp", 0x2009}, {"nnbsp", 0x202F},
};

}  // namespace

std::string DecodeEntities(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '&') {
      out += text[i++];
      continue;
    }
    const size_t semi = text.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 12) {
      out += text[i++];
      continue;
    }
    std::string_view name = text.substr(i + 1, semi - i - 1);
    bool decoded = false;
    if (name.size() > 1 && name[0] == '#') {
      uint32_t cp = 0;
      bool hex = name[1] == 'x' || name[1] == 'X';
      std::string_view digits = name.substr(hex ? 2 : 1);
      bool ok = !digits.empty();
      for (char c : digits) {
        int v = -1;
        if (c >= '0' && c <= '9') v = c - '0';
        if (hex && c >= 'a' && c <= 'f') v = c - 'a' + 10;
        if (hex && c >= 'A' && c <= 'F') v = c - 'A' + 10;
        if (v < 0 || cp > 0x10FFFF) {
          ok = false;
          break;
        }
        cp = cp * (hex ? 16 : 10) + static_cast<uint32_t>(v);
      }
      if (ok) {
        AppendUtf8(out, cp);
        decoded = true;
      }
    } else {
      for (const auto &e : kEntities) {
        if (e.name == name) {
          AppendUtf8(out, e.code_point);
          decoded = true;
          break;
        }
      }
    }
    if (decoded) {
      i = semi + 1;
    } else {
      out += text[i++];
    }
  }
  return out;
}

std::string_view HtmlNode::Attribute(std::string_view name) const {
  for (const auto &[k, v] : attributes) {
    if (k == name) return v;
  }
  return {};
}

bool HtmlNode::HasAttribute(std::string_view name) const {
  for (const auto &[k, v] : attributes) {
    if (k == name) return true;
  }
  return false;
}

bool HtmlNode::HasClass(std::string_view cls) const {
  std::string_view classes = Attribute("class");
  size_t i = 0;
  while (i < classes.size()) {
    while (i < classes.size() && IsSpaceChar(classes[i])) ++i;
    size_t j = i;
    while (j < classes.size() && !IsSpaceChar(classes[j])) ++j;
    if (j > i && classes.substr(i, j - i) == cls) return true;
    i = j;
  }
  return false;
}

HtmlDocument HtmlDocument::Parse(std::string_view html) {
  HtmlDocument doc;
  doc.root_ = std::make_unique<HtmlNode>();
  doc.root_->tag = "#document";
  HtmlNode *current = doc.root_.get();

  auto add_child = [&](std::unique_ptr<HtmlNode> node) {
    node->parent = current;
    HtmlNode *raw = node.get();
    current->children.push_back(std::move(node));
    return raw;
  };
  auto add_text = [&](std::string_view raw) {
    if (raw.empty()) return;
    auto node = std::make_unique<HtmlNode>();
    node->text = DecodeEntities(raw);
    add_child(std::move(node));
  };
  auto close = [&](std::string_view tag) {
    for (HtmlNode *n = current; n != nullptr && n != doc.root_.get(); n = n->parent) {
      if (n->tag == tag) {
        current = n->parent;
        return;
      }
    }
  };

  size_t i = 0;
  const size_t n = html.size();
  while (i < n) {
    if (html[i] != '<') {
      size_t next = html.find('<', i);
      if (next == std::string_view::npos) next = n;
      add_text(html.substr(i, next - i));
      i = next;
      continue;
    }
    if (html.substr(i, 4) == "<!--") {
      size_t end = html.find("-->", i + 4);
      i = end == std::string_view::npos ? n : end + 3;
      continue;
    }
    if (i + 1 < n && (html[i + 1] == '!' || html[i + 1] == '?')) {
      size_t end = html.find('>', i);
      i = end == std::string_view::npos ? n : end + 1;
      continue;
    }
    const bool closing = i + 1 < n && html[i + 1] == '/';
    size_t j = i + (closing ? 2 : 1);
    size_t name_start = j;
    while (j < n && (std::isalnum(static_cast<unsigned char>(html[j])) ||
                     html[j] == '-' || html[j] == ':')) {
      ++j;
    }
    if (j == name_start) {
      // A lone '<' is text.
      add_text(html.substr(i, 1));
      ++i;
      continue;
    }
    const std::string tag = Lower(html.substr(name_start, j - name_start));
    if (closing) {
      size_t end = html.find('>', j);
      i = end == std::string_view::npos ? n : end + 1;
      close(tag);
      continue;
    }

    auto node = std::make_unique<HtmlNode>();
    node->tag = tag;
    bool self_closing = false;
    // Attributes.
    while (j < n && html[j] != '>') {
      if (IsSpaceChar(html[j])) {
        ++j;
        continue;
      }
      if (html[j] == '/') {
        self_closing = true;
        ++j;
        continue;
      }
      size_t k = j;
      while (k < n && !IsSpaceChar(html[k]) && html[k] != '=' && html[k] != '>' &&
             html[k] != '/') {
        ++k;
      }
      std::string name = Lower(html.substr(j, k - j));
      if (k == j) {
        ++j;
        continue;
      }
      j = k;
      std::string value;
      while (j < n && IsSpaceChar(html[j])) ++j;
      if (j < n && html[j] == '=') {
        ++j;
        while (j < n && IsSpaceChar(html[j])) ++j;
        if (j < n && (html[j] == '"' || html[j] == '\'')) {
          const char q = html[j];
          size_t end = html.find(q, j + 1);
          if (end == std::string_view::npos) end = n;
          value = DecodeEntities(html.substr(j + 1, end - j - 1));
          j = std::min(n, end + 1);
        } else {
          size_t end = j;
          while (end < n && !IsSpaceChar(html[end]) && html[end] != '>') ++end;
          value = DecodeEntities(html.substr(j, end - j));
          j = end;
        }
      }
      self_closing = false;
      node->attributes.emplace_back(std::move(name), std::move(value));
    }
    i = std::min(n, j + 1);

    if (tag == "script" || tag == "style" || tag == "noscript" ||
        tag == "template") {
      const std::string end_tag = "</" + tag;
      size_t pos = i;
      while (true) {
        pos = html.find("</", pos);
        if (pos == std::string_view::npos) break;
        if (Lower(html.substr(pos, end_tag.size())) == end_tag) break;
        pos += 2;
      }
      if (pos == std::string_view::npos) {
        i = n;
      } else {
        size_t end = html.find('>', pos);
        i = end == std::string_view::npos ? n : end + 1;
      }
      continue;  // contents and the element itself are dropped
    }

    if (In(kClosesParagraph, tag)) {
      for (HtmlNode *p = current; p != nullptr && p != doc.root_.get();
           p = p->parent) {
        if (p->tag == "p") {
          current = p->parent;
          break;
        }
        if (p->tag != "span" && p->tag != "em" && p->tag != "strong" &&
            p->tag != "a" && p->tag != "b" && p->tag != "i") {
          break;
        }
      }
    }
    if (tag == "li" && current->tag == "li") current = current->parent;

    HtmlNode *added = add_child(std::move(node));
    if (!self_closing && !In(kVoidTags, tag)) current = added;
  }
  return doc;
}

namespace {

struct Compound {
  std::string tag;
  std::vector<std::string> classes;
  std::string id;
  std::vector<std::pair<std::string, std::optional<std::string>>> attributes;
};

// Parses "div.a#b[x=y]"; returns false on unsupported syntax.
bool ParseCompound(std::string_view s, Compound &out) {
  size_t i = 0;
  auto ident = [&]() {
    size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) ||
                            s[i] == '-' || s[i] == '_' || s[i] == ':' ||
                            static_cast<unsigned char>(s[i]) >= 0x80)) {
      ++i;
    }
    return std::string(s.substr(start, i - start));
  };
  if (i < s.size() && s[i] == '*') ++i;
  out.tag = Lower(ident());
  while (i < s.size()) {
    const char c = s[i++];
    if (c == '.') {
      out.classes.push_back(ident());
    } else if (c == '#') {
      out.id = ident();
    } else if (c == '[') {
      size_t end = s.find(']', i);
      if (end == std::string_view::npos) return false;
      std::string_view body = s.substr(i, end - i);
      size_t eq = body.find('=');
      if (eq == std::string_view::npos) {
        out.attributes.emplace_back(Lower(Trim(body)), std::nullopt);
      } else {
        std::string_view value = Trim(body.substr(eq + 1));
        if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') &&
            value.back() == value.front()) {
          value = value.substr(1, value.size() - 2);
        }
        out.attributes.emplace_back(Lower(Trim(body.substr(0, eq))),
                                    std::string(value));
      }
      i = end + 1;
    } else {
      return false;
    }
  }
  return true;
}

bool Matches(const HtmlNode &node, const Compound &c) {
  if (node.is_text() || node.tag == "#document") return false;
  if (!c.tag.empty() && node.tag != c.tag) return false;
  if (!c.id.empty() && node.Attribute("id") != c.id) return false;
  for (const auto &cls : c.classes) {
    if (!node.HasClass(cls)) return false;
  }
  for (const auto &[name, value] : c.attributes) {
    if (!node.HasAttribute(name)) return false;
    if (value && node.Attribute(name) != *value) return false;
  }
  return true;
}

// The last compound must match `node`; earlier ones match ancestors in order.
bool MatchesChain(const HtmlNode &node, const std::vector<Compound> &chain) {
  if (chain.empty() || !Matches(node, chain.back())) return false;
  size_t k = chain.size() - 1;
  for (const HtmlNode *a = node.parent; a != nullptr && k > 0; a = a->parent) {
    if (Matches(*a, chain[k - 1])) --k;
  }
  return k == 0;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  int depth = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '[') ++depth;
    if (i < s.size() && s[i] == ']') --depth;
    if (i == s.size() || (s[i] == sep && depth == 0)) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

std::vector<const HtmlNode *> HtmlDocument::Select(std::string_view selector) const {
  std::vector<std::vector<Compound>> alternatives;
  for (std::string_view alt : Split(selector, ',')) {
    std::vector<Compound> chain;
    for (std::string_view part : Split(Trim(alt), ' ')) {
      part = Trim(part);
      if (part.empty()) continue;
      Compound c;
      if (!ParseCompound(part, c)) return {};
      chain.push_back(std::move(c));
    }
    if (!chain.empty()) alternatives.push_back(std::move(chain));
  }
  std::vector<const HtmlNode *> out;
  std::function<void(const HtmlNode &)> walk = [&](const HtmlNode &node) {
    for (const auto &chain : alternatives) {
      if (MatchesChain(node, chain)) {
        out.push_back(&node);
        break;
      }
    }
    for (const auto &child : node.children) walk(*child);
  };
  walk(*root_);
  return out;
}

const HtmlNode *HtmlDocument::SelectFirst(std::string_view selector) const {
  auto all = Select(selector);
  return all.empty() ? nullptr : all.front();
}

std::string InnerText(const HtmlNode &node) {
  std::string raw;
  std::function<void(const HtmlNode &)> walk = [&](const HtmlNode &n) {
    if (n.is_text()) {
      raw += n.text;
      return;
    }
    if (n.tag == "br") raw += ' ';
    for (const auto &child : n.children) walk(*child);
  };
  walk(node);
  // No-break spaces count as spaces for word counting.
  std::string spaced;
  for (size_t i = 0; i < raw.size(); ++i) {
    if (raw.compare(i, 2, "\xC2\xA0") == 0) {
      spaced += ' ';
      ++i;
    } else if (raw.compare(i, 3, "\xE2\x80\xAF") == 0 ||
               raw.compare(i, 3, "\xE2\x80\x89") == 0) {
      spaced += ' ';
      i += 2;
    } else {
      spaced += raw[i];
    }
  }
  return CollapseWhitespace(spaced);
}

}  // namespace presse
