#include "qset/quotient.hpp"

#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "qset/errors.hpp"

namespace qset {

const char* to_string(Side side) noexcept { return side == Side::left ? "left" : "right"; }

void to_json(nlohmann::json& j, const GapReport& r) {
  j = nlohmann::json{{"right_card", r.right_card},     {"left_card", r.left_card},
                     {"product_card", r.product_card}, {"gap", r.gap},
                     {"right_energy", r.right_energy}, {"left_energy", r.left_energy},
                     {"subset_size", r.subset_size}};
}

void from_json(const nlohmann::json& j, GapReport& r) {
  j.at("right_card").get_to(r.right_card);
  j.at("left_card").get_to(r.left_card);
  j.at("product_card").get_to(r.product_card);
  j.at("gap").get_to(r.gap);
  j.at("right_energy").get_to(r.right_energy);
  j.at("left_energy").get_to(r.left_energy);
  j.at("subset_size").get_to(r.subset_size);
}

Element quotient(const Subset& a, Side side, std::size_t i, std::size_t j) {
  const Group& g = a.group();
  return side == Side::right ? g.multiply(a[i], g.inverse(a[j]))
                             : g.multiply(g.inverse(a[i]), a[j]);
}

namespace {

enum class Product { right, left, plain };

/// Multiplicity of each distinct product, in first-appearance order.
struct Tally {
  std::vector<Element> values;
  std::vector<std::uint64_t> counts;
};

Tally tally(const Subset& a, Product kind) {
  const Group& g = a.group();
  const std::size_t n = a.size();
  std::vector<Element> inverses;
  if (kind != Product::plain) {
    inverses.reserve(n);
    for (const Element& e : a.elements()) inverses.push_back(g.inverse(e));
  }
  Tally t;
  std::unordered_map<ElementKey, std::size_t, ElementKeyHash> slot;
  slot.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Element p = kind == Product::right  ? g.multiply(a[i], inverses[j])
                  : kind == Product::left ? g.multiply(inverses[i], a[j])
                                          : g.multiply(a[i], a[j]);
      auto [it, fresh] = slot.try_emplace(g.canonical_key(p), t.values.size());
      if (fresh) {
        t.values.push_back(std::move(p));
        t.counts.push_back(1);
      } else {
        ++t.counts[it->second];
      }
    }
  }
  return t;
}

std::uint64_t energy_of(const Tally& t) {
  std::uint64_t sum = 0;
  for (auto c : t.counts) sum += c * c;
  return sum;
}

} // namespace

std::vector<Element> right_quotient_set(const Subset& a) {
  return tally(a, Product::right).values;
}

std::vector<Element> left_quotient_set(const Subset& a) {
  return tally(a, Product::left).values;
}

std::vector<Element> product_set(const Subset& a) {
  return tally(a, Product::plain).values;
}

GapReport gap_report(const Subset& a) {
  const Tally right = tally(a, Product::right);
  const Tally left = tally(a, Product::left);
  GapReport r;
  r.right_card = right.values.size();
  r.left_card = left.values.size();
  r.product_card = tally(a, Product::plain).values.size();
  r.gap = static_cast<std::int64_t>(r.right_card) - static_cast<std::int64_t>(r.left_card);
  r.right_energy = energy_of(right);
  r.left_energy = energy_of(left);
  r.subset_size = a.size();
  return r;
}

std::uint64_t additive_energy(const Subset& a, Side side) {
  return energy_of(tally(a, side == Side::right ? Product::right : Product::left));
}

bool small_product_criterion(const Subset& a) {
  const auto product = product_set(a).size();
  if (product >= 2 * a.size()) return false;
  const GapReport r = gap_report(a);
  if (r.gap != 0)
    throw InvariantViolation("|AA| = " + std::to_string(product) + " < 2|A| but gap is " +
                             std::to_string(r.gap));
  return true;
}

} // namespace qset
