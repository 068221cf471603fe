#include "qset/constructions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <tuple>

#include "qset/errors.hpp"
#include "qset/quotient.hpp"

namespace qset {

Subset dinfty_set(const IntSet& b) {
  if (b.empty()) throw InvalidArgument("dinfty_set needs a nonempty integer set");
  std::vector<Element> elems;
  elems.reserve(2 * b.size());
  for (auto v : b.elements()) elems.emplace_back(DihedralElement{v, false});
  // s r^b = r^-b s
  for (auto v : b.elements()) {
    if (v == INT64_MIN) throw ArithmeticOverflow("D_inf shift overflow");
    elems.emplace_back(DihedralElement{-v, true});
  }
  Subset a(Group::infinite_dihedral(), std::move(elems));
  const auto expected = difference_excess(b);
  const auto gap = gap_report(a).gap;
  if (gap != expected)
    throw InvariantViolation("D_inf gap " + std::to_string(gap) + " differs from |B-B|-|B+B| = " +
                             std::to_string(expected) + " for " + format_intset(b));
  return a;
}

Subset f3_base_set() {
  return parse_subset(Group::free(3), "x, x z, y^-1, y^-1 x^-1 y^-1, y^-1 z");
}

namespace {

Word power(const Word& w, std::int64_t k) {
  Word base = k < 0 ? w.inverse() : w;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Word acc(w.rank());
  while (e != 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return acc;
}

} // namespace

Word FreeHomomorphism::apply(const Word& w) const {
  if (w.rank() != source_rank)
    throw ContextMismatch("homomorphism from F_" + std::to_string(source_rank) +
                          " applied to a word of F_" + std::to_string(w.rank()));
  Word out(2);
  for (const Syllable& s : w.syllables()) out = out * power(images[s.generator], s.exponent);
  return out;
}

FreeHomomorphism embed_free(std::uint32_t m) {
  if (m == 0) throw InvalidArgument("embed_free needs m >= 1");
  FreeHomomorphism h;
  h.source_rank = m;
  const Word x = Word::generator(2, 0);
  const Word y = Word::generator(2, 1);
  if (m == 3) {
    h.images = {x * x, x * y, x * y.inverse()};
    return h;
  }
  for (std::uint32_t i = 0; i < m; ++i) {
    const Word xi = power(x, i);
    h.images.push_back(xi * y * xi.inverse());
  }
  return h;
}

Subset apply_hom(const FreeHomomorphism& h, const Subset& a) {
  const Group& g = a.group();
  if (g.kind() != GroupKind::free || g.parameter() != h.source_rank)
    throw ContextMismatch("apply_hom expects a subset of F_" + std::to_string(h.source_rank) +
                          ", got " + g.name());
  std::vector<Element> images;
  images.reserve(a.size());
  for (const Element& e : a.elements()) images.emplace_back(h.apply(std::get<Word>(e)));
  std::optional<Subset> image;
  try {
    image.emplace(Group::free(2), std::move(images));
  } catch (const InvalidArgument&) {
    throw InvariantViolation("homomorphism identified two elements of the subset");
  }
  const GapReport before = gap_report(a);
  const GapReport after = gap_report(*image);
  if (before.right_card != after.right_card || before.left_card != after.left_card)
    throw InvariantViolation("homomorphism changed quotient-set sizes (" +
                             std::to_string(before.right_card) + "/" +
                             std::to_string(before.left_card) + " -> " +
                             std::to_string(after.right_card) + "/" +
                             std::to_string(after.left_card) + ")");
  return std::move(*image);
}

Subset construct_an(std::uint32_t n) {
  if (n == 0) throw InvalidArgument("construct_an needs n >= 1");
  const std::uint32_t rank = 3 * n;
  std::vector<Element> elems;
  elems.reserve(5 * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t x = 3 * i, y = x + 1, z = x + 2;
    auto word = [rank](std::initializer_list<Syllable> s) {
      return Word::reduce(std::span<const Syllable>(s.begin(), s.size()), rank);
    };
    elems.emplace_back(word({{x, 1}}));
    elems.emplace_back(word({{x, 1}, {z, 1}}));
    elems.emplace_back(word({{y, -1}}));
    elems.emplace_back(word({{y, -1}, {x, -1}, {y, -1}}));
    elems.emplace_back(word({{y, -1}, {z, 1}}));
  }
  return Subset(Group::free(rank), std::move(elems));
}

Subset construct_ck(std::uint32_t k) {
  if (k == 0) throw InvalidArgument("construct_ck needs k >= 1");
  const Word y = Word::generator(2, 1);
  std::vector<Element> elems;
  elems.reserve(2 * k);
  for (std::uint32_t i = 1; i <= k; ++i) elems.emplace_back(Word::generator(2, 0, i));
  for (std::uint32_t i = 1; i <= k; ++i) elems.emplace_back(Word::generator(2, 0, i) * y);
  return Subset(Group::free(2), std::move(elems));
}

namespace {

std::vector<ClosedFormCheck> checks_against(const GapReport& r, std::int64_t right,
                                            const char* right_formula, std::int64_t left,
                                            const char* left_formula, std::int64_t gap,
                                            const char* gap_formula) {
  return {
      {"right_card", right_formula, right, static_cast<std::int64_t>(r.right_card)},
      {"left_card", left_formula, left, static_cast<std::int64_t>(r.left_card)},
      {"gap", gap_formula, gap, r.gap},
  };
}

} // namespace

std::vector<ClosedFormCheck> an_published_checks(std::uint32_t n) {
  const auto r = gap_report(construct_an(n));
  const std::int64_t m = n;
  return checks_against(r, 17 * m + 25 * m * (m - 1), "17n + 25n(n-1)",
                        15 * m + 25 * m * (m - 1), "15n + 25n(n-1)", 2 * m, "2n");
}

std::vector<ClosedFormCheck> an_exact_checks(std::uint32_t n) {
  const auto r = gap_report(construct_an(n));
  const std::int64_t m = n;
  return checks_against(r, 16 * m + 1 + 25 * m * (m - 1), "16n + 1 + 25n(n-1)",
                        14 * m + 1 + 25 * m * (m - 1), "14n + 1 + 25n(n-1)", 2 * m, "2n");
}

std::vector<ClosedFormCheck> ck_published_checks(std::uint32_t k) {
  const auto r = gap_report(construct_ck(k));
  const std::int64_t c = k;
  return checks_against(r, 2 * c * c + 2 * c - 1, "2k^2 + 2k - 1", 8 * c - 4, "8k - 4",
                        2 * c * c - 6 * c + 1, "2k^2 - 6k + 1");
}

std::vector<ClosedFormCheck> ck_exact_checks(std::uint32_t k) {
  const auto r = gap_report(construct_ck(k));
  const std::int64_t c = k;
  return checks_against(r, 2 * c * c + 2 * c - 1, "2k^2 + 2k - 1", 8 * c - 5, "8k - 5",
                        2 * (c - 1) * (c - 2), "2(k-1)(k-2)");
}

const char* to_string(GapRoute r) noexcept {
  switch (r) {
  case GapRoute::direct: return "direct";
  case GapRoute::composed: return "composed";
  case GapRoute::widened: return "widened";
  }
  return "unknown";
}

namespace {

struct CountPair {
  std::int64_t diffs;
  std::int64_t sums;
  auto operator<=>(const CountPair&) const = default;
};

/// First set (by size, then lexicographically) for every reachable
/// (|B-B|, |B+B|) pair among subsets of [0, window] containing 0.
std::map<CountPair, IntSet> witnesses_by_counts(int window) {
  std::map<CountPair, IntSet> best;
  const std::uint32_t limit = 1U << window;
  for (std::uint32_t upper = 0; upper < limit; ++upper) {
    const std::uint32_t mask = (upper << 1) | 1U;
    std::vector<std::int64_t> elems;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1)
      elems.push_back(std::countr_zero(rest));
    IntSet b(std::move(elems));
    const CountPair key{static_cast<std::int64_t>(difference_set(b).size()),
                        static_cast<std::int64_t>(sumset(b).size())};
    auto it = best.find(key);
    if (it == best.end()) {
      best.emplace(key, std::move(b));
    } else if (b.size() < it->second.size() ||
               (b.size() == it->second.size() && b < it->second)) {
      it->second = std::move(b);
    }
  }
  return best;
}

} // namespace

std::optional<GapRealization> realize_gap(std::int64_t target, int window,
                                          const GapSetOptions& options) {
  if (auto b = find_gap_set(target, window, options))
    return GapRealization{std::move(*b), GapRoute::direct, window, {}};

  // Sum and difference counts multiply under compose_base.
  const auto table = witnesses_by_counts(window);
  std::optional<std::pair<IntSet, IntSet>> pick;
  for (const auto& [c1, b1] : table) {
    for (const auto& [c2, b2] : table) {
      if (c1.diffs * c2.diffs - c1.sums * c2.sums != target) continue;
      const auto better = [&] {
        if (!pick) return true;
        const auto size = b1.size() * b2.size();
        const auto best = pick->first.size() * pick->second.size();
        if (size != best) return size < best;
        return std::tie(b1, b2) < std::tie(pick->first, pick->second);
      }();
      if (better) pick.emplace(b1, b2);
    }
  }
  if (pick) {
    IntSet composed = compose_base(pick->first, pick->second);
    return GapRealization{std::move(composed), GapRoute::composed, window,
                          {pick->first, pick->second}};
  }

  for (int w = window + 1; w <= kMaxGapWindow; ++w)
    if (auto b = find_gap_set(target, w, options))
      return GapRealization{std::move(*b), GapRoute::widened, w, {}};
  return std::nullopt;
}

} // namespace qset
