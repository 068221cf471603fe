#include "qset/group.hpp"

#include <algorithm>
#include <numeric>

#include "qset/errors.hpp"
#include "text_util.hpp"

namespace qset {

namespace detail {
struct GroupData {
  GroupKind kind;
  std::string name;
  std::uint32_t parameter = 0;
  std::optional<CayleyTable> table;
};
} // namespace detail

namespace {

const char* kind_name(const Element& a) {
  switch (a.index()) {
  case 0: return "free-group word";
  case 1: return "D_inf element";
  case 2: return "permutation";
  default: return "Cayley element";
  }
}

} // namespace

Group::Group(std::shared_ptr<const detail::GroupData> data) : data_(std::move(data)) {}

Group Group::free(std::uint32_t rank) {
  if (rank == 0) throw InvalidArgument("free group rank must be at least 1");
  return Group(std::make_shared<const detail::GroupData>(
      detail::GroupData{GroupKind::free, "f:" + std::to_string(rank), rank, std::nullopt}));
}

Group Group::infinite_dihedral() {
  return Group(std::make_shared<const detail::GroupData>(
      detail::GroupData{GroupKind::infinite_dihedral, "dinf", 0, std::nullopt}));
}

Group Group::symmetric(std::uint32_t degree) {
  if (degree == 0) throw InvalidArgument("permutation degree must be at least 1");
  return Group(std::make_shared<const detail::GroupData>(detail::GroupData{
      GroupKind::permutation, "s:" + std::to_string(degree), degree, std::nullopt}));
}

Group Group::cayley(CayleyTable table, std::string name) {
  const auto order = table.order();
  return Group(std::make_shared<const detail::GroupData>(
      detail::GroupData{GroupKind::cayley, std::move(name), order, std::move(table)}));
}

GroupKind Group::kind() const noexcept { return data_->kind; }
const std::string& Group::name() const noexcept { return data_->name; }
std::uint32_t Group::parameter() const noexcept { return data_->parameter; }

const CayleyTable& Group::table() const {
  if (!data_->table) throw InvalidArgument(data_->name + " is not a Cayley-table group");
  return *data_->table;
}

bool Group::contains(const Element& a) const noexcept {
  switch (data_->kind) {
  case GroupKind::free: {
    auto* w = std::get_if<Word>(&a);
    return w && w->rank() == data_->parameter;
  }
  case GroupKind::infinite_dihedral: return std::holds_alternative<DihedralElement>(a);
  case GroupKind::permutation: {
    auto* p = std::get_if<Permutation>(&a);
    return p && p->degree() == data_->parameter;
  }
  case GroupKind::cayley: {
    auto* c = std::get_if<CayleyElement>(&a);
    return c && c->index < data_->parameter;
  }
  }
  return false;
}

void Group::require(const Element& a) const {
  if (!contains(a))
    throw ContextMismatch(std::string(kind_name(a)) + " does not belong to group " +
                          data_->name);
}

Element Group::identity() const {
  switch (data_->kind) {
  case GroupKind::free: return Word(data_->parameter);
  case GroupKind::infinite_dihedral: return DihedralElement{};
  case GroupKind::permutation: return Permutation(data_->parameter);
  case GroupKind::cayley: return CayleyElement{data_->table->identity()};
  }
  return Word(1);
}

Element Group::multiply(const Element& a, const Element& b) const {
  require(a);
  require(b);
  switch (data_->kind) {
  case GroupKind::free: return std::get<Word>(a) * std::get<Word>(b);
  case GroupKind::infinite_dihedral:
    return std::get<DihedralElement>(a) * std::get<DihedralElement>(b);
  case GroupKind::permutation: return std::get<Permutation>(a) * std::get<Permutation>(b);
  case GroupKind::cayley:
    return CayleyElement{data_->table->multiply(std::get<CayleyElement>(a).index,
                                                std::get<CayleyElement>(b).index)};
  }
  return a;
}

Element Group::inverse(const Element& a) const {
  require(a);
  switch (data_->kind) {
  case GroupKind::free: return std::get<Word>(a).inverse();
  case GroupKind::infinite_dihedral: return qset::inverse(std::get<DihedralElement>(a));
  case GroupKind::permutation: return std::get<Permutation>(a).inverse();
  case GroupKind::cayley:
    return CayleyElement{data_->table->inverse(std::get<CayleyElement>(a).index)};
  }
  return a;
}

ElementKey Group::canonical_key(const Element& a) const {
  require(a);
  std::string bytes;
  switch (data_->kind) {
  case GroupKind::free:
    for (const Syllable& s : std::get<Word>(a).syllables()) {
      detail::append_bytes(bytes, s.generator);
      detail::append_bytes(bytes, static_cast<std::uint64_t>(s.exponent));
    }
    break;
  case GroupKind::infinite_dihedral: {
    const auto& d = std::get<DihedralElement>(a);
    detail::append_bytes(bytes, static_cast<std::uint64_t>(d.shift));
    bytes.push_back(d.flip ? 1 : 0);
    break;
  }
  case GroupKind::permutation:
    for (std::uint32_t v : std::get<Permutation>(a).images())
      detail::append_bytes(bytes, v);
    break;
  case GroupKind::cayley:
    detail::append_bytes(bytes, std::get<CayleyElement>(a).index);
    break;
  }
  return ElementKey(std::move(bytes));
}

bool Group::has_order_two() const {
  switch (data_->kind) {
  case GroupKind::free: return false;
  case GroupKind::infinite_dihedral: return true;
  case GroupKind::permutation: return data_->parameter >= 2;
  case GroupKind::cayley: return data_->table->has_order_two();
  }
  return false;
}

bool Group::is_abelian() const {
  switch (data_->kind) {
  case GroupKind::free: return data_->parameter == 1;
  case GroupKind::infinite_dihedral: return false;
  case GroupKind::permutation: return data_->parameter <= 2;
  case GroupKind::cayley: return data_->table->is_abelian();
  }
  return false;
}

std::optional<std::uint64_t> Group::order() const {
  switch (data_->kind) {
  case GroupKind::free:
  case GroupKind::infinite_dihedral: return std::nullopt;
  case GroupKind::permutation: {
    std::uint64_t f = 1;
    for (std::uint64_t k = 2; k <= data_->parameter; ++k) {
      if (f > UINT64_MAX / k) return UINT64_MAX;
      f *= k;
    }
    return f;
  }
  case GroupKind::cayley: return data_->parameter;
  }
  return std::nullopt;
}

std::vector<Element> Group::elements(std::uint64_t limit) const {
  const auto n = order();
  if (!n) throw InvalidArgument("cannot enumerate the infinite group " + data_->name);
  if (*n > limit)
    throw InvalidArgument("group " + data_->name + " has order " + std::to_string(*n) +
                          ", above the enumeration limit " + std::to_string(limit));
  std::vector<Element> out;
  out.reserve(*n);
  if (data_->kind == GroupKind::cayley) {
    for (std::uint32_t i = 0; i < data_->parameter; ++i) out.emplace_back(CayleyElement{i});
    return out;
  }
  std::vector<std::uint32_t> images(data_->parameter);
  std::iota(images.begin(), images.end(), 0U);
  do {
    out.emplace_back(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::string Group::format(const Element& a) const {
  require(a);
  switch (data_->kind) {
  case GroupKind::free: return format_word(std::get<Word>(a));
  case GroupKind::infinite_dihedral: return format_dihedral(std::get<DihedralElement>(a));
  case GroupKind::permutation: return format_permutation(std::get<Permutation>(a));
  case GroupKind::cayley: return data_->table->name(std::get<CayleyElement>(a).index);
  }
  return {};
}

Element Group::parse(std::string_view text) const {
  switch (data_->kind) {
  case GroupKind::free: return parse_word(text, data_->parameter);
  case GroupKind::infinite_dihedral: return parse_dihedral(text);
  case GroupKind::permutation: return parse_permutation(text, data_->parameter);
  case GroupKind::cayley: return CayleyElement{data_->table->parse_element(text)};
  }
  throw ParseError("unsupported group kind");
}

} // namespace qset
