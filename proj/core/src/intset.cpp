#include "qset/intset.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <thread>

#include "qset/errors.hpp"
#include "text_util.hpp"

namespace qset {

IntSet::IntSet(std::initializer_list<std::int64_t> values)
    : IntSet(std::vector<std::int64_t>(values)) {}

IntSet::IntSet(std::vector<std::int64_t> values) : elements_(std::move(values)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool IntSet::contains(std::int64_t v) const {
  return std::binary_search(elements_.begin(), elements_.end(), v);
}

IntSet parse_intset(std::string_view text) {
  auto body = detail::trim(text);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}')
    throw ParseError("integer set must look like {0,2,3}: `" + std::string(text) + "`");
  body = detail::trim(body.substr(1, body.size() - 2));
  std::vector<std::int64_t> values;
  if (body.empty()) return IntSet{};
  std::size_t start = 0;
  while (start <= body.size()) {
    auto comma = body.find(',', start);
    if (comma == std::string_view::npos) comma = body.size();
    const auto tok = detail::trim(body.substr(start, comma - start));
    auto v = detail::parse_int<std::int64_t>(tok);
    if (!v) throw ParseError("bad integer `" + std::string(tok) + "` in `" + std::string(text) + "`");
    values.push_back(*v);
    start = comma + 1;
  }
  return IntSet(std::move(values));
}

std::string format_intset(const IntSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.elements()[i]);
  }
  return out + "}";
}

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer set overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("integer set overflow");
  return r;
}

} // namespace

IntSet sumset(const IntSet& b) {
  std::vector<std::int64_t> out;
  out.reserve(b.size() * (b.size() + 1) / 2);
  const auto e = b.elements();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i; j < e.size(); ++j) out.push_back(checked_add(e[i], e[j]));
  return IntSet(std::move(out));
}

IntSet difference_set(const IntSet& b) {
  std::vector<std::int64_t> out;
  out.reserve(b.size() * b.size());
  for (auto x : b.elements())
    for (auto y : b.elements()) out.push_back(checked_sub(x, y));
  return IntSet(std::move(out));
}

std::int64_t difference_excess(const IntSet& b) {
  return static_cast<std::int64_t>(difference_set(b).size()) -
         static_cast<std::int64_t>(sumset(b).size());
}

namespace {

/// |B - B| - |B + B| for B a bitmask over [0, window], window <= 24.
int mask_excess(std::uint32_t mask, int window) {
  const auto wide = static_cast<std::uint64_t>(mask);
  std::uint64_t sums = 0;
  std::uint64_t diffs = 0;
  for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
    const int b = std::countr_zero(rest);
    sums |= wide << b;
    diffs |= (wide << window) >> b;
  }
  return std::popcount(diffs) - std::popcount(sums);
}

/// First size-k set containing 0 (lexicographic) with the target excess.
std::optional<std::uint32_t> scan_stratum(std::int64_t target, int window, int k) {
  if (k == 1) return target == 0 ? std::optional<std::uint32_t>(1U) : std::nullopt;
  // choose k-1 points of {1..window} in lexicographic order
  const int r = k - 1;
  if (r > window) return std::nullopt;
  std::vector<int> pick(r);
  for (int i = 0; i < r; ++i) pick[i] = i + 1;
  while (true) {
    std::uint32_t mask = 1;
    for (int p : pick) mask |= 1U << p;
    if (mask_excess(mask, window) == target) return mask;
    int i = r - 1;
    while (i >= 0 && pick[i] == window - (r - 1 - i)) --i;
    if (i < 0) return std::nullopt;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
}

IntSet from_mask(std::uint32_t mask) {
  std::vector<std::int64_t> v;
  for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) v.push_back(std::countr_zero(rest));
  return IntSet(std::move(v));
}

} // namespace

std::optional<IntSet> find_gap_set(std::int64_t target, int window,
                                   const GapSetOptions& options) {
  if (window < 0 || window > kMaxGapWindow)
    throw InvalidArgument("search window must be in [0, " + std::to_string(kMaxGapWindow) +
                          "], got " + std::to_string(window));
  // Translating B does not change its sum and difference counts, so the first
  // hit of each size contains 0.
  const int max_size = window + 1;
  const int cap = options.size_cap == 0 ? max_size
                                        : std::min<int>(max_size, static_cast<int>(options.size_cap));
  std::uint32_t threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency())
                                               : options.threads;

  for (int k = 1; k <= cap;) {
    const int batch_end = std::min<int>(cap, k + static_cast<int>(threads) - 1);
    std::vector<std::future<std::optional<std::uint32_t>>> jobs;
    for (int size = k; size <= batch_end; ++size)
      jobs.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                                scan_stratum, target, window, size));
    std::optional<std::uint32_t> hit;
    for (auto& job : jobs) {
      auto r = job.get();
      if (r && !hit) hit = r; // smallest size wins
    }
    if (hit) return from_mask(*hit);
    k = batch_end + 1;
  }
  return std::nullopt;
}

IntSet compose_base(const IntSet& b1, const IntSet& b2) {
  if (b1.empty() || b2.empty()) throw InvalidArgument("compose_base needs nonempty sets");
  std::int64_t base = 0;
  if (__builtin_mul_overflow(b1.span(), 2, &base) || __builtin_add_overflow(base, 1, &base))
    throw ArithmeticOverflow("compose_base base overflow");
  std::vector<std::int64_t> out;
  out.reserve(b1.size() * b2.size());
  for (auto y : b2.elements()) {
    std::int64_t shifted = 0;
    if (__builtin_mul_overflow(base, y, &shifted)) throw ArithmeticOverflow("compose_base overflow");
    for (auto x : b1.elements()) out.push_back(checked_add(x, shifted));
  }
  IntSet s(std::move(out));
  const auto sums = sumset(s).size();
  const auto diffs = difference_set(s).size();
  if (sums != sumset(b1).size() * sumset(b2).size() ||
      diffs != difference_set(b1).size() * difference_set(b2).size())
    throw InvariantViolation("compose_base lost multiplicativity for " + format_intset(b1) +
                             " and " + format_intset(b2));
  return s;
}

} // namespace qset
