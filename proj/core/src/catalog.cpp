#include "qset/catalog.hpp"

#include <functional>
#include <map>
#include <unordered_map>

#include "qset/errors.hpp"
#include "text_util.hpp"

namespace qset {

namespace {

std::uint32_t parse_parameter(std::string_view text, std::string_view whole) {
  auto v = detail::parse_int<std::uint32_t>(text);
  if (!v) throw ParseError("bad parameter in group spec `" + std::string(whole) + "`");
  return *v;
}

std::vector<std::string_view> split_top_level(std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == ',' && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

} // namespace

GroupSpec GroupSpec::parse(std::string_view text) {
  const std::string_view t = detail::trim(text);
  if (t.empty()) throw ParseError("empty group spec");
  GroupSpec spec;
  if (t.starts_with("prod(")) {
    if (t.back() != ')') throw ParseError("unbalanced parentheses in `" + std::string(t) + "`");
    const auto inner = t.substr(5, t.size() - 6);
    int depth = 0;
    for (char c : inner) {
      depth += c == '(' ? 1 : c == ')' ? -1 : 0;
      if (depth < 0) throw ParseError("unbalanced parentheses in `" + std::string(t) + "`");
    }
    if (depth != 0) throw ParseError("unbalanced parentheses in `" + std::string(t) + "`");
    spec.family = Family::direct_product;
    for (auto part : split_top_level(inner)) {
      GroupSpec f = parse(part);
      if (f.family == Family::direct_product) {
        for (auto& g : f.factors) spec.factors.push_back(std::move(g));
      } else {
        spec.factors.push_back(std::move(f));
      }
    }
    if (spec.factors.size() < 2) throw ParseError("prod(...) needs at least two factors");
    return spec;
  }
  if (t == "q8") { spec.family = Family::quaternion8; return spec; }
  if (t == "sd16") { spec.family = Family::quasidihedral16; return spec; }
  if (t == "f21") { spec.family = Family::frobenius21; return spec; }
  if (t == "dinf") { spec.family = Family::infinite_dihedral; return spec; }

  const auto colon = t.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("unknown group spec `" + std::string(t) + "`");
  const auto head = t.substr(0, colon);
  spec.parameter = parse_parameter(t.substr(colon + 1), t);
  if (head == "c") {
    spec.family = Family::cyclic;
    if (spec.parameter == 0) throw ParseError("c:n needs n >= 1");
  } else if (head == "d") {
    spec.family = Family::dihedral;
    if (spec.parameter < 2 || spec.parameter % 2 != 0)
      throw ParseError("d:N takes the order N, which must be even and >= 2");
  } else if (head == "s") {
    spec.family = Family::symmetric;
    if (spec.parameter == 0) throw ParseError("s:n needs n >= 1");
  } else if (head == "ham") {
    spec.family = Family::hamiltonian;
  } else if (head == "f") {
    spec.family = Family::free;
    if (spec.parameter == 0) throw ParseError("f:m needs m >= 1");
  } else {
    throw ParseError("unknown group family `" + std::string(head) + "`");
  }
  return spec;
}

std::string GroupSpec::to_string() const {
  switch (family) {
  case Family::cyclic: return "c:" + std::to_string(parameter);
  case Family::dihedral: return "d:" + std::to_string(parameter);
  case Family::symmetric: return "s:" + std::to_string(parameter);
  case Family::quaternion8: return "q8";
  case Family::quasidihedral16: return "sd16";
  case Family::frobenius21: return "f21";
  case Family::hamiltonian: return "ham:" + std::to_string(parameter);
  case Family::free: return "f:" + std::to_string(parameter);
  case Family::infinite_dihedral: return "dinf";
  case Family::direct_product: {
    std::string s = "prod(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) s += ',';
      s += factors[i].to_string();
    }
    return s + ")";
  }
  }
  return "?";
}

std::optional<std::uint64_t> GroupSpec::expected_order() const {
  switch (family) {
  case Family::cyclic:
  case Family::dihedral: return parameter;
  case Family::symmetric: {
    std::uint64_t f = 1;
    for (std::uint32_t i = 2; i <= parameter; ++i) {
      if (f > UINT64_MAX / i) return UINT64_MAX;
      f *= i;
    }
    return f;
  }
  case Family::quaternion8: return 8;
  case Family::quasidihedral16: return 16;
  case Family::frobenius21: return 21;
  case Family::hamiltonian:
    if (parameter > 60) return UINT64_MAX;
    return std::uint64_t{8} << parameter;
  case Family::direct_product: {
    std::uint64_t o = 1;
    for (const auto& f : factors) {
      auto fo = f.expected_order();
      if (!fo) return std::nullopt;
      if (*fo != 0 && o > UINT64_MAX / *fo) return UINT64_MAX;
      o *= *fo;
    }
    return o;
  }
  case Family::free:
  case Family::infinite_dihedral: return std::nullopt;
  }
  return std::nullopt;
}

namespace {

struct Token {
  std::string generator;
  std::int64_t exponent;
};

/// A finite group under construction: table plus each element as a product of
/// generator powers.
struct Factor {
  std::uint32_t order = 1;
  std::vector<std::uint32_t> mul{0};
  std::vector<std::vector<Token>> tokens{{}};
  std::vector<std::pair<std::string, std::uint32_t>> generators;
};

/// Groups a^i b^j with i mod m, j mod q; `mult` gives the exponents of a product.
Factor two_generator(std::uint32_t m, std::uint32_t q, const std::string& an,
                     const std::string& bn,
                     const std::function<std::pair<std::int64_t, std::int64_t>(
                         std::int64_t, std::int64_t, std::int64_t, std::int64_t)>& mult) {
  Factor f;
  f.order = m * q;
  f.mul.assign(static_cast<std::size_t>(f.order) * f.order, 0);
  f.tokens.assign(f.order, {});
  auto index = [m, q](std::int64_t i, std::int64_t j) {
    i %= m;
    if (i < 0) i += m;
    j %= q;
    if (j < 0) j += q;
    return static_cast<std::uint32_t>(i + m * j);
  };
  for (std::uint32_t x = 0; x < f.order; ++x) {
    const std::int64_t i = x % m, j = x / m;
    if (i) f.tokens[x].push_back({an, i});
    if (j) f.tokens[x].push_back({bn, j});
    for (std::uint32_t y = 0; y < f.order; ++y) {
      const auto [a, b] = mult(i, j, y % m, y / m);
      f.mul[static_cast<std::size_t>(x) * f.order + y] = index(a, b);
    }
  }
  if (m > 1) f.generators.emplace_back(an, index(1, 0));
  if (q > 1) f.generators.emplace_back(bn, index(0, 1));
  return f;
}

std::int64_t ipow(std::int64_t base, std::int64_t e, std::int64_t mod) {
  std::int64_t r = 1 % mod;
  for (std::int64_t k = 0; k < e; ++k) r = r * base % mod;
  return r;
}

Factor product(const std::vector<Factor>& fs) {
  Factor out;
  out.order = 1;
  for (const auto& f : fs) out.order *= f.order;
  out.mul.assign(static_cast<std::size_t>(out.order) * out.order, 0);
  out.tokens.assign(out.order, {});
  // first factor is the most significant digit
  auto digits = [&](std::uint32_t x) {
    std::vector<std::uint32_t> d(fs.size());
    for (std::size_t k = fs.size(); k-- > 0;) {
      d[k] = x % fs[k].order;
      x /= fs[k].order;
    }
    return d;
  };
  auto compose = [&](const std::vector<std::uint32_t>& d) {
    std::uint32_t x = 0;
    for (std::size_t k = 0; k < fs.size(); ++k) x = x * fs[k].order + d[k];
    return x;
  };
  for (std::uint32_t x = 0; x < out.order; ++x) {
    const auto dx = digits(x);
    for (std::size_t k = 0; k < fs.size(); ++k)
      for (const auto& tok : fs[k].tokens[dx[k]])
        out.tokens[x].push_back({tok.generator + std::to_string(k + 1), tok.exponent});
    for (std::uint32_t y = 0; y < out.order; ++y) {
      const auto dy = digits(y);
      std::vector<std::uint32_t> dz(fs.size());
      for (std::size_t k = 0; k < fs.size(); ++k)
        dz[k] = fs[k].mul[static_cast<std::size_t>(dx[k]) * fs[k].order + dy[k]];
      out.mul[static_cast<std::size_t>(x) * out.order + y] = compose(dz);
    }
  }
  for (std::size_t k = 0; k < fs.size(); ++k) {
    for (const auto& [name, idx] : fs[k].generators) {
      std::vector<std::uint32_t> d(fs.size(), 0);
      d[k] = idx;
      out.generators.emplace_back(name + std::to_string(k + 1), compose(d));
    }
  }
  return out;
}

Factor build_factor(const GroupSpec& spec) {
  using P = std::pair<std::int64_t, std::int64_t>;
  switch (spec.family) {
  case Family::cyclic:
    return two_generator(spec.parameter, 1, "a", "b",
                         [](auto i, auto, auto k, auto) { return P{i + k, 0}; });
  case Family::dihedral:
    // s r = r^-1 s
    return two_generator(spec.parameter / 2, 2, "r", "s", [](auto i, auto j, auto k, auto l) {
      return P{i + (j ? -k : k), (j + l) % 2};
    });
  case Family::quaternion8:
    // b a b^-1 = a^-1, b^2 = a^2
    return two_generator(4, 2, "a", "b", [](auto i, auto j, auto k, auto l) {
      return P{i + (j ? -k : k) + 2 * j * l, (j + l) % 2};
    });
  case Family::quasidihedral16:
    // b a b = a^3
    return two_generator(8, 2, "a", "b", [](auto i, auto j, auto k, auto l) {
      return P{i + (j ? 3 * k : k), (j + l) % 2};
    });
  case Family::frobenius21:
    // b^-1 a b = a^2, so b a b^-1 = a^4
    return two_generator(7, 3, "a", "b", [](auto i, auto j, auto k, auto l) {
      return P{i + ipow(4, j, 7) * k, j + l};
    });
  case Family::hamiltonian: {
    std::vector<Factor> fs{build_factor(GroupSpec{Family::quaternion8, 0, {}})};
    for (std::uint32_t i = 0; i < spec.parameter; ++i)
      fs.push_back(build_factor(GroupSpec{Family::cyclic, 2, {}}));
    return fs.size() == 1 ? fs.front() : product(fs);
  }
  case Family::direct_product: {
    std::vector<Factor> fs;
    for (const auto& f : spec.factors) {
      if (f.family == Family::hamiltonian) {
        // flatten so generator suffixes count every cyclic factor
        fs.push_back(build_factor(GroupSpec{Family::quaternion8, 0, {}}));
        for (std::uint32_t i = 0; i < f.parameter; ++i)
          fs.push_back(build_factor(GroupSpec{Family::cyclic, 2, {}}));
      } else {
        fs.push_back(build_factor(f));
      }
    }
    return product(fs);
  }
  case Family::symmetric:
  case Family::free:
  case Family::infinite_dihedral: break;
  }
  throw UnsupportedSpec(spec.to_string() + " cannot be a factor of a Cayley-table product");
}

std::string element_name(const std::vector<Token>& tokens) {
  if (tokens.empty()) return "e";
  std::string s;
  for (const auto& t : tokens) {
    if (!s.empty()) s += ' ';
    s += t.generator;
    if (t.exponent != 1) s += '^' + std::to_string(t.exponent);
  }
  return s;
}

} // namespace

Group make_group(const GroupSpec& spec) {
  switch (spec.family) {
  case Family::free:
    if (spec.parameter == 0) throw UnsupportedSpec("f:0 is not a free group");
    return Group::free(spec.parameter);
  case Family::infinite_dihedral: return Group::infinite_dihedral();
  case Family::symmetric:
    if (spec.parameter == 0 || spec.parameter > 64)
      throw UnsupportedSpec("symmetric degree must be in [1, 64]");
    return Group::symmetric(spec.parameter);
  default: break;
  }
  const auto order = spec.expected_order();
  if (!order || *order == 0 || *order > kMaxCayleyOrder)
    throw UnsupportedSpec(spec.to_string() + " has order above " +
                          std::to_string(kMaxCayleyOrder));
  if (spec.family == Family::cyclic && spec.parameter == 0)
    throw UnsupportedSpec("c:0 is not a group");
  if (spec.family == Family::dihedral && (spec.parameter < 2 || spec.parameter % 2))
    throw UnsupportedSpec("dihedral order must be even and >= 2");
  Factor f = build_factor(spec);
  if (f.order != *order)
    throw InvariantViolation("realized order " + std::to_string(f.order) + " of " +
                             spec.to_string() + " differs from " + std::to_string(*order));
  std::vector<std::string> names;
  names.reserve(f.order);
  for (const auto& t : f.tokens) names.push_back(element_name(t));
  std::vector<CayleyTable::Generator> gens;
  for (auto& [name, idx] : f.generators) gens.push_back({name, idx});
  CayleyTable table(f.order, std::move(f.mul), std::move(names), std::move(gens));
  if (spec.family == Family::quasidihedral16 && !is_quasidihedral16(table))
    throw InvariantViolation("sd16 table does not satisfy its presentation");
  return Group::cayley(std::move(table), spec.to_string());
}

Group make_group(std::string_view spec) { return make_group(GroupSpec::parse(spec)); }

std::vector<GroupSpec> catalog_specs() {
  std::vector<GroupSpec> out;
  for (const char* s : {"c:5", "c:12", "d:6", "d:8", "s:3", "s:4", "q8", "sd16", "f21",
                        "ham:1", "ham:2", "prod(q8,c:2)"})
    out.push_back(GroupSpec::parse(s));
  return out;
}

Group subgroup_closure(const Group& ambient, std::span<const Element> generators,
                       std::string name, std::uint64_t limit) {
  for (const auto& g : generators)
    if (!ambient.contains(g)) throw ContextMismatch("generator is foreign to " + ambient.name());
  std::vector<Element> elems{ambient.identity()};
  std::unordered_map<ElementKey, std::uint32_t, ElementKeyHash> index;
  index.emplace(ambient.canonical_key(elems[0]), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      Element p = ambient.multiply(elems[i], g);
      auto key = ambient.canonical_key(p);
      if (index.contains(key)) continue;
      if (elems.size() >= limit)
        throw InvalidArgument("subgroup closure exceeds " + std::to_string(limit) + " elements");
      index.emplace(std::move(key), static_cast<std::uint32_t>(elems.size()));
      elems.push_back(std::move(p));
    }
  }
  const auto n = static_cast<std::uint32_t>(elems.size());
  std::vector<std::uint32_t> table(static_cast<std::size_t>(n) * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i) * n + j] =
          index.at(ambient.canonical_key(ambient.multiply(elems[i], elems[j])));
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& e : elems) names.push_back(ambient.format(e));
  std::vector<CayleyTable::Generator> gens;
  for (const auto& g : generators) gens.push_back({ambient.format(g), index.at(ambient.canonical_key(g))});
  return Group::cayley(CayleyTable(n, std::move(table), std::move(names), std::move(gens)),
                       std::move(name));
}

bool is_quasidihedral16(const CayleyTable& t) {
  if (t.order() != 16) return false;
  for (std::uint32_t a = 0; a < 16; ++a) {
    if (t.element_order(a) != 8) continue;
    std::vector<bool> in_a(16, false);
    for (std::uint32_t x = t.identity(), k = 0; k < 8; ++k, x = t.multiply(x, a)) in_a[x] = true;
    const std::uint32_t a3 = t.multiply(t.multiply(a, a), a);
    for (std::uint32_t b = 0; b < 16; ++b) {
      if (in_a[b] || t.element_order(b) != 2) continue;
      if (t.multiply(t.multiply(b, a), b) == a3) return true;
    }
  }
  return false;
}

} // namespace qset
