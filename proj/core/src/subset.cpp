#include "qset/subset.hpp"

#include <unordered_set>

#include "qset/errors.hpp"
#include "text_util.hpp"

namespace qset {

Subset::Subset(Group group, std::vector<Element> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
  if (elements_.empty()) throw InvalidArgument("a subset needs at least one element");
  std::unordered_set<ElementKey, ElementKeyHash> keys;
  keys.reserve(elements_.size());
  for (const Element& e : elements_) {
    // canonical_key rejects foreign elements with ContextMismatch
    if (!keys.insert(group_.canonical_key(e)).second)
      throw InvalidArgument("duplicate element " + group_.format(e) + " in subset");
  }
}

Subset Subset::inverse() const {
  std::vector<Element> inv;
  inv.reserve(elements_.size());
  for (const Element& e : elements_) inv.push_back(group_.inverse(e));
  return Subset(group_, std::move(inv));
}

bool Subset::is_symmetric() const {
  std::unordered_set<ElementKey, ElementKeyHash> keys;
  for (const Element& e : elements_) keys.insert(group_.canonical_key(e));
  for (const Element& e : elements_)
    if (!keys.contains(group_.canonical_key(group_.inverse(e)))) return false;
  return true;
}

Subset parse_subset(const Group& group, std::string_view text) {
  std::vector<Element> elements;
  int depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    const auto item = detail::trim(text.substr(start, end - start));
    if (item.empty())
      throw ParseError("empty element in set `" + std::string(text) + "`");
    elements.push_back(group.parse(item));
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (c == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in set `" + std::string(text) + "`");
  flush(text.size());
  return Subset(group, std::move(elements));
}

std::string format_subset(const Subset& subset) {
  std::string out;
  for (const Element& e : subset.elements()) {
    if (!out.empty()) out += ", ";
    out += subset.group().format(e);
  }
  return out;
}

} // namespace qset
