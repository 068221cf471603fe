#include "qset/stats.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <numeric>
#include <thread>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "qset/errors.hpp"

namespace qset {

namespace {

__extension__ using i128 = __int128;

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// letters: 0 = x, 1 = x^-1, 2 = y, 3 = y^-1
Word letter_word(int letter) {
  return Word::generator(2, static_cast<std::uint32_t>(letter / 2), letter % 2 ? -1 : 1);
}

std::uint32_t resolve_threads(std::uint32_t t) {
  if (t != 0) return t;
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Ids of the right and left quotients of every ordered pair of ball words.
struct QuotientTables {
  std::size_t n = 0;
  std::uint32_t ids = 0;
  std::vector<std::uint32_t> right; ///< right[i * n + j] = id(w_i w_j^-1)
  std::vector<std::uint32_t> left;  ///< left[i * n + j] = id(w_i^-1 w_j)
};

QuotientTables quotient_tables(const Ball& b) {
  QuotientTables t;
  t.n = b.size();
  t.right.resize(t.n * t.n);
  t.left.resize(t.n * t.n);
  std::unordered_map<ElementKey, std::uint32_t, ElementKeyHash> ids;
  auto id_of = [&](const Word& w) {
    auto [it, inserted] = ids.try_emplace(b.group.canonical_key(w), t.ids);
    if (inserted) ++t.ids;
    return it->second;
  };
  std::vector<Word> inv;
  inv.reserve(t.n);
  for (const auto& w : b.words) inv.push_back(w.inverse());
  for (std::size_t i = 0; i < t.n; ++i) {
    for (std::size_t j = 0; j < t.n; ++j) {
      t.right[i * t.n + j] = id_of(b.words[i] * inv[j]);
      t.left[i * t.n + j] = id_of(inv[i] * b.words[j]);
    }
  }
  return t;
}

struct Tally {
  std::uint64_t count = 0;
  std::int64_t sum = 0;
  std::uint64_t square_sum = 0;
  std::map<std::int64_t, std::uint64_t> histogram;

  void add(std::int64_t gap) {
    ++count;
    sum += gap;
    square_sum += static_cast<std::uint64_t>(gap * gap);
    ++histogram[gap];
  }
  void merge(const Tally& o) {
    count += o.count;
    sum += o.sum;
    square_sum += o.square_sum;
    for (const auto& [g, c] : o.histogram) histogram[g] += c;
  }
};

/// Multiplicity counts of AA^-1 and A^-1 A, updated one element at a time.
class IncrementalGap {
public:
  explicit IncrementalGap(const QuotientTables& t)
      : t_(t), right_(t.ids, 0), left_(t.ids, 0) {}

  void toggle(std::size_t i) {
    const bool adding = !(members_ >> i & 1U);
    if (adding) members_ |= std::uint64_t{1} << i;
    const int d = adding ? 1 : -1;
    bump(right_, distinct_right_, t_.right[i * t_.n + i], d);
    bump(left_, distinct_left_, t_.left[i * t_.n + i], d);
    for (std::uint64_t rest = members_ & ~(std::uint64_t{1} << i); rest != 0; rest &= rest - 1) {
      const auto j = static_cast<std::size_t>(std::countr_zero(rest));
      bump(right_, distinct_right_, t_.right[i * t_.n + j], d);
      bump(right_, distinct_right_, t_.right[j * t_.n + i], d);
      bump(left_, distinct_left_, t_.left[i * t_.n + j], d);
      bump(left_, distinct_left_, t_.left[j * t_.n + i], d);
    }
    if (!adding) members_ &= ~(std::uint64_t{1} << i);
  }

  /// |A^-1 A| - |AA^-1|
  std::int64_t gap() const {
    return static_cast<std::int64_t>(distinct_left_) - static_cast<std::int64_t>(distinct_right_);
  }

private:
  static void bump(std::vector<std::uint32_t>& counts, std::uint32_t& distinct, std::uint32_t id,
                   int d) {
    if (d > 0) {
      if (counts[id]++ == 0) ++distinct;
    } else {
      if (--counts[id] == 0) --distinct;
    }
  }

  const QuotientTables& t_;
  std::vector<std::uint32_t> right_;
  std::vector<std::uint32_t> left_;
  std::uint32_t distinct_right_ = 0;
  std::uint32_t distinct_left_ = 0;
  std::uint64_t members_ = 0;
};

Tally exact_chunk(const QuotientTables& t, std::uint64_t begin, std::uint64_t end) {
  Tally tally;
  IncrementalGap state(t);
  const std::uint64_t start_code = begin ^ (begin >> 1);
  for (std::uint64_t rest = start_code; rest != 0; rest &= rest - 1)
    state.toggle(static_cast<std::size_t>(std::countr_zero(rest)));
  tally.add(state.gap());
  for (std::uint64_t k = begin + 1; k < end; ++k) {
    // Gray code k differs from k-1 in the lowest set bit of k
    state.toggle(static_cast<std::size_t>(std::countr_zero(k)));
    tally.add(state.gap());
  }
  return tally;
}

Tally montecarlo_chunk(const QuotientTables& t, const MonteCarloMode& m, std::uint64_t begin,
                       std::uint64_t end) {
  Tally tally;
  std::vector<std::uint64_t> seen_right(t.ids, UINT64_MAX), seen_left(t.ids, UINT64_MAX);
  std::vector<std::size_t> members;
  members.reserve(t.n);
  for (std::uint64_t trial = begin; trial < end; ++trial) {
    members.clear();
    for (std::size_t i = 0; i < t.n; ++i)
      if (include_with_probability(inclusion_draw(m.seed, i, trial), m.probability))
        members.push_back(i);
    std::int64_t right = 0, left = 0;
    for (auto i : members) {
      for (auto j : members) {
        const auto r = t.right[i * t.n + j];
        if (seen_right[r] != trial) {
          seen_right[r] = trial;
          ++right;
        }
        const auto l = t.left[i * t.n + j];
        if (seen_left[l] != trial) {
          seen_left[l] = trial;
          ++left;
        }
      }
    }
    tally.add(left - right);
  }
  return tally;
}

template <typename Fn>
Tally run_chunks(std::uint64_t total, std::uint32_t threads, Fn&& chunk) {
  const std::uint64_t workers = std::min<std::uint64_t>(resolve_threads(threads), std::max<std::uint64_t>(total, 1));
  if (workers <= 1) return chunk(0, total);
  std::vector<std::future<Tally>> futs;
  const std::uint64_t step = total / workers, extra = total % workers;
  std::uint64_t begin = 0;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t end = begin + step + (w < extra ? 1 : 0);
    futs.push_back(std::async(std::launch::async, chunk, begin, end));
    begin = end;
  }
  Tally out;
  for (auto& f : futs) out.merge(f.get());
  return out;
}

std::string fraction(i128 num, i128 den) {
  auto abs128 = [](i128 v) { return v < 0 ? -v : v; };
  i128 a = abs128(num), b = den;
  while (b != 0) {
    const i128 r = a % b;
    a = b;
    b = r;
  }
  if (a == 0) a = 1;
  num /= a;
  den /= a;
  auto to_str = [&](i128 v) {
    if (v == 0) return std::string("0");
    const bool neg = v < 0;
    if (neg) v = -v;
    std::string s;
    while (v > 0) {
      s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
      v /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
  };
  return to_str(num) + "/" + to_str(den);
}

GapStats finish(std::uint32_t radius, std::string mode, const Tally& t) {
  GapStats s;
  s.radius = radius;
  s.mode = std::move(mode);
  s.trials_or_total = t.count;
  s.gap_sum = t.sum;
  s.gap_square_sum = t.square_sum;
  s.histogram = t.histogram;
  const i128 n = t.count;
  const i128 var_num = static_cast<i128>(t.square_sum) * n -
                           static_cast<i128>(t.sum) * t.sum;
  s.mean_fraction = fraction(t.sum, n);
  s.variance_fraction = fraction(var_num, n * n);
  s.mean = static_cast<double>(t.sum) / static_cast<double>(t.count);
  s.variance = static_cast<double>(var_num) / (static_cast<double>(t.count) * static_cast<double>(t.count));
  return s;
}

} // namespace

Ball ball(std::uint32_t radius) {
  if (radius > kMaxBallRadius)
    throw InvalidArgument("ball radius " + std::to_string(radius) + " above the limit " +
                          std::to_string(kMaxBallRadius));
  Ball b;
  b.radius = radius;
  std::vector<std::vector<int>> layer{{}};
  b.words.emplace_back(2);
  for (std::uint32_t len = 1; len <= radius; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer) {
      for (int letter = 0; letter < 4; ++letter) {
        if (!w.empty() && (w.back() ^ 1) == letter) continue;
        auto v = w;
        v.push_back(letter);
        next.push_back(std::move(v));
      }
    }
    for (const auto& w : next) {
      Word word(2);
      for (int letter : w) word = word * letter_word(letter);
      b.words.push_back(std::move(word));
    }
    layer = std::move(next);
  }
  return b;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t inclusion_draw(std::uint64_t seed, std::uint64_t element,
                             std::uint64_t trial) noexcept {
  const std::uint64_t stream = splitmix64(seed + (element + 1) * kGolden);
  return splitmix64(stream + (trial + 1) * kGolden);
}

bool include_with_probability(std::uint64_t draw, double p) noexcept {
  if (p >= 1.0) return true;
  return static_cast<double>(draw >> 11) * 0x1.0p-53 < p;
}

std::optional<Subset> sample_subset(const Ball& b, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("inclusion probability must be in [0, 1]");
  std::vector<Element> elems;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (include_with_probability(inclusion_draw(seed, i, 0), p)) elems.emplace_back(b.words[i]);
  if (elems.empty()) return std::nullopt;
  return Subset(b.group, std::move(elems));
}

GapStats gap_distribution(std::uint32_t radius, const SamplingMode& mode) {
  const Ball b = ball(radius);
  if (const auto* exact = std::get_if<ExactMode>(&mode)) {
    const std::uint64_t limit = exact->allow_large ? kExactOverrideLimit : kExactDefaultLimit;
    if (b.size() >= 64 || (std::uint64_t{1} << b.size()) > limit)
      throw BudgetExceeded("exact enumeration of radius " + std::to_string(radius) +
                               " needs 2^" + std::to_string(b.size()) +
                               " subsets, above the limit of " + std::to_string(limit) +
                               (exact->allow_large ? "" : " (allow_large raises it to 2^25)"),
                           0, 0);
    const auto tables = quotient_tables(b);
    const std::uint64_t total = std::uint64_t{1} << b.size();
    const Tally t = run_chunks(total, exact->threads, [&](std::uint64_t lo, std::uint64_t hi) {
      return exact_chunk(tables, lo, hi);
    });
    return finish(radius, "exact", t);
  }
  const auto& mc = std::get<MonteCarloMode>(mode);
  if (mc.trials == 0) throw InvalidArgument("Monte Carlo needs at least one trial");
  if (!(mc.probability >= 0.0 && mc.probability <= 1.0))
    throw InvalidArgument("inclusion probability must be in [0, 1]");
  const auto tables = quotient_tables(b);
  const Tally t = run_chunks(mc.trials, mc.threads, [&](std::uint64_t lo, std::uint64_t hi) {
    return montecarlo_chunk(tables, mc, lo, hi);
  });
  GapStats s = finish(radius, "montecarlo", t);
  s.seed = mc.seed;
  return s;
}

void to_json(nlohmann::json& j, const GapStats& s) {
  auto hist = nlohmann::json::object();
  for (const auto& [g, c] : s.histogram) hist[std::to_string(g)] = c;
  j = nlohmann::json{{"radius", s.radius},
                     {"mode", s.mode},
                     {"trials_or_total", s.trials_or_total},
                     {"gap_sum", s.gap_sum},
                     {"gap_square_sum", s.gap_square_sum},
                     {"mean", s.mean},
                     {"variance", s.variance},
                     {"mean_fraction", s.mean_fraction},
                     {"variance_fraction", s.variance_fraction},
                     {"histogram", std::move(hist)}};
  j["seed"] = s.seed ? nlohmann::json(*s.seed) : nlohmann::json(nullptr);
}

} // namespace qset
