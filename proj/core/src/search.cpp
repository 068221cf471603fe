#include "qset/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <future>
#include <limits>
#include <thread>

#include <nlohmann/json.hpp>

#include "qset/errors.hpp"

namespace qset {

IndexedGroup::IndexedGroup(const Group& g) : group_(g) {
  const auto n = g.order();
  if (!n) throw InvalidArgument("subset scans need a finite group, got " + g.name());
  if (*n > 64) throw InvalidArgument("subset scans support order <= 64, " + g.name() +
                                     " has order " + std::to_string(*n));
  elements_ = g.elements(64);
  order_ = static_cast<std::uint32_t>(elements_.size());
  mul_.resize(static_cast<std::size_t>(order_) * order_);
  inv_.resize(order_);
  for (std::uint32_t a = 0; a < order_; ++a) {
    inv_[a] = index_of(g.inverse(elements_[a]));
    for (std::uint32_t b = 0; b < order_; ++b)
      mul_[a * order_ + b] = index_of(g.multiply(elements_[a], elements_[b]));
  }
}

std::uint32_t IndexedGroup::index_of(const Element& e) const {
  if (!group_.contains(e)) throw ContextMismatch("element is foreign to " + group_.name());
  for (std::uint32_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == e) return i;
  throw ContextMismatch("element not found in " + group_.name());
}

std::uint64_t IndexedGroup::quotient_mask(std::span<const std::uint32_t> subset,
                                          Side side) const {
  std::uint64_t mask = 0;
  for (auto a : subset)
    for (auto b : subset)
      mask |= std::uint64_t{1}
              << (side == Side::right ? multiply(a, inverse(b)) : multiply(inverse(a), b));
  return mask;
}

std::int64_t IndexedGroup::gap(std::span<const std::uint32_t> subset) const {
  return std::popcount(quotient_mask(subset, Side::right)) -
         std::popcount(quotient_mask(subset, Side::left));
}

Subset IndexedGroup::to_subset(std::span<const std::uint32_t> indices) const {
  std::vector<Element> elems;
  elems.reserve(indices.size());
  for (auto i : indices) elems.push_back(elements_.at(i));
  return Subset(group_, std::move(elems));
}

namespace {

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __extension__ unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

/// Next k-combination of {lo, ..., n-1} in lexicographic order, positions [from, k).
bool next_combination(std::vector<std::uint32_t>& c, std::size_t from, std::uint32_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > from;) {
    if (c[i] < n - (k - i)) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct BlockResult {
  std::uint64_t examined = 0;
  std::uint64_t skipped = 0;
  std::optional<std::vector<std::uint32_t>> witness;
  bool complete = false; ///< scanned to the end or to its witness
};

class Scanner {
public:
  Scanner(const IndexedGroup& ig, const SearchOptions& opts) : ig_(ig), opts_(opts) {}

  /// Scans all subsets of size k whose smallest index is `first`.
  BlockResult scan_block(std::uint32_t k, std::uint32_t first,
                         const std::atomic<std::uint32_t>& best_first) {
    BlockResult r;
    const std::uint32_t n = ig_.order();
    std::vector<std::uint32_t> c(k);
    for (std::uint32_t i = 0; i < k; ++i) c[i] = first + i;
    std::vector<std::uint32_t> inv(k);
    do {
      if (best_first.load(std::memory_order_relaxed) < first) return r; // an earlier block won
      if (opts_.use_inverse_symmetry) {
        for (std::uint32_t i = 0; i < k; ++i) inv[i] = ig_.inverse(c[i]);
        std::sort(inv.begin(), inv.end());
        // gap(A^-1) = -gap(A), and symmetric sets are balanced
        if (!std::lexicographical_compare(c.begin(), c.end(), inv.begin(), inv.end())) {
          ++r.skipped;
          continue;
        }
      }
      if (used_.fetch_add(1, std::memory_order_relaxed) >= opts_.budget) {
        exhausted_.store(true);
        return r;
      }
      ++r.examined;
      if (ig_.gap(c) != 0) {
        r.witness = c;
        r.complete = true;
        return r;
      }
    } while (next_combination(c, 1, n));
    r.complete = true;
    return r;
  }

  bool exhausted() const { return exhausted_.load(); }

private:
  const IndexedGroup& ig_;
  const SearchOptions& opts_;
  std::atomic<std::uint64_t> used_{0};
  std::atomic<bool> exhausted_{false};
};

std::uint32_t resolve_threads(std::uint32_t t) {
  if (t != 0) return t;
  return std::max(1U, std::thread::hardware_concurrency());
}

} // namespace

SearchVerdict exhaustive_balance_check(const Group& g, std::uint32_t max_size,
                                       const SearchOptions& options) {
  IndexedGroup ig(g);
  const std::uint32_t n = ig.order();
  if (max_size > n)
    throw InvalidArgument("max size " + std::to_string(max_size) + " exceeds the order " +
                          std::to_string(n) + " of " + g.name());
  std::uint64_t total = 0;
  for (std::uint32_t k = 1; k <= max_size; ++k) {
    const auto c = binomial_saturating(n, k);
    total = c > kMaxScanSubsets - total ? kMaxScanSubsets + 1 : total + c;
    if (total > kMaxScanSubsets)
      throw InvalidArgument("scan of " + g.name() + " up to size " + std::to_string(max_size) +
                            " exceeds 2^32 subsets");
  }

  SearchVerdict v;
  v.group = g.name();
  Scanner scanner(ig, options);
  const std::uint32_t threads = resolve_threads(options.threads);

  for (std::uint32_t k = 1; k <= max_size; ++k) {
    const std::uint32_t blocks = n - k + 1;
    std::vector<BlockResult> results(blocks);
    std::atomic<std::uint32_t> next{0};
    std::atomic<std::uint32_t> best_first{std::numeric_limits<std::uint32_t>::max()};
    auto worker = [&] {
      for (std::uint32_t f; (f = next.fetch_add(1)) < blocks;) {
        if (best_first.load() < f || scanner.exhausted()) return;
        results[f] = scanner.scan_block(k, f, best_first);
        if (results[f].witness) {
          auto cur = best_first.load();
          while (f < cur && !best_first.compare_exchange_weak(cur, f)) {}
        }
      }
    };
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::future<void>> futs;
      for (std::uint32_t t = 0; t < std::min(threads, blocks); ++t)
        futs.push_back(std::async(std::launch::async, worker));
      for (auto& f : futs) f.get();
    }

    // Blocks before the winner are complete; count them and the winner itself.
    const std::uint32_t win = best_first.load();
    bool complete = true;
    for (std::uint32_t f = 0; f < blocks && f <= win; ++f) {
      if (!results[f].complete) {
        complete = false;
        break;
      }
      v.subsets_examined += results[f].examined;
      v.subsets_skipped += results[f].skipped;
    }
    if (!complete || (scanner.exhausted() && win == std::numeric_limits<std::uint32_t>::max())) {
      std::uint64_t partial = v.subsets_examined;
      throw BudgetExceeded("evaluation budget of " + std::to_string(options.budget) +
                               " subsets exhausted while scanning size " + std::to_string(k) +
                               " subsets of " + g.name(),
                           partial, k - 1);
    }
    v.max_size_checked = k;
    if (win != std::numeric_limits<std::uint32_t>::max()) {
      v.min_asymmetric_size = k;
      v.witness = ig.to_subset(*results[win].witness);
      v.witness_report = gap_report(*v.witness);
      return v;
    }
  }
  return v;
}

SmallSetReport verify_small_sets_balanced(const Group& g, const SearchOptions& options) {
  const auto order = g.order();
  if (!order) throw InvalidArgument("small-set sweep needs a finite group");
  if (*order > kSize3SweepMaxOrder)
    throw InvalidArgument("size-3 sweep supports order <= " +
                          std::to_string(kSize3SweepMaxOrder) + ", " + g.name() + " has " +
                          std::to_string(*order));
  SmallSetReport r;
  r.group = g.name();
  r.order2free = !g.has_order_two();
  if (r.order2free && *order > kSize4SweepMaxOrder)
    throw InvalidArgument("size-4 sweep supports order <= " +
                          std::to_string(kSize4SweepMaxOrder) + ", " + g.name() + " has " +
                          std::to_string(*order));
  r.size4_checked = r.order2free;
  const auto limit = static_cast<std::uint32_t>(std::min<std::uint64_t>(*order, r.order2free ? 4 : 3));
  const SearchVerdict v = exhaustive_balance_check(g, limit, options);
  r.subsets_examined = v.subsets_examined;
  const std::uint32_t first_bad = v.min_asymmetric_size.value_or(UINT32_MAX);
  r.size3_balanced = first_bad > 3;
  r.size4_balanced = r.size4_checked && first_bad > 4;
  if (v.witness) r.counterexample = v.witness;
  return r;
}

Subset quasidihedral_witness() {
  return parse_subset(Group::symmetric(8), "(1 5)(2 6)(3 7)(4 8), (1 2 5 6)(3 8 7 4), "
                                           "(1 7)(3 5)(4 8), (1 8 7 6 5 4 3 2)");
}

void to_json(nlohmann::json& j, const SearchVerdict& v) {
  j = nlohmann::json{{"group", v.group},
                     {"max_size_checked", v.max_size_checked},
                     {"subsets_examined", v.subsets_examined},
                     {"subsets_skipped", v.subsets_skipped}};
  j["min_asymmetric_size"] = v.min_asymmetric_size ? nlohmann::json(*v.min_asymmetric_size)
                                                   : nlohmann::json(nullptr);
  if (v.witness) {
    auto arr = nlohmann::json::array();
    for (const auto& e : v.witness->elements()) arr.push_back(v.witness->group().format(e));
    j["witness"] = std::move(arr);
  } else {
    j["witness"] = nullptr;
  }
  j["witness_report"] = v.witness_report ? nlohmann::json(*v.witness_report) : nlohmann::json(nullptr);
}

} // namespace qset
