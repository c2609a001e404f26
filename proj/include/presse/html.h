#ifndef PRESSE_HTML_H_
#define PRESSE_HTML_H_

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace presse {

// A lenient HTML tree: enough structure to locate an article's paragraphs
// and metadata. Text nodes have an empty tag.
struct HtmlNode {
  std::string tag;  // lowercase
  std::vector<std::pair<std::string, std::string>> attributes;
  std::string text;
  HtmlNode *parent = nullptr;
  std::vector<std::unique_ptr<HtmlNode>> children;

  bool is_text() const { return tag.empty(); }
  // Empty when the attribute is missing.
  std::string_view Attribute(std::string_view name) const;
  bool HasAttribute(std::string_view name) const;
  bool HasClass(std::string_view cls) const;
};

class HtmlDocument {
 public:
  // Never fails: unclosed and stray tags are tolerated, script and style
  // contents and comments are dropped, entities are decoded.
  static HtmlDocument Parse(std::string_view html);

  const HtmlNode &root() const { return *root_; }

  // Elements matching a selector in document order. Supported: tag, .class,
  // #id, [attr] and [attr=value] compounds, descendant combinators, and
  // comma-separated alternatives.
  std::vector<const HtmlNode *> Select(std::string_view selector) const;
  const HtmlNode *SelectFirst(std::string_view selector) const;

 private:
  std::unique_ptr<HtmlNode> root_;
};

// Concatenated descendant text with whitespace collapsed.
std::string InnerText(const HtmlNode &node);

// Decodes named and numeric character references.
std::string DecodeEntities(std::string_view text);

}  // namespace presse

#endif  // PRESSE_HTML_H_
