#pragma once

// Small tokenizing helpers shared by the element parsers.

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qset::detail {

inline bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline std::string_view trim(std::string_view s) noexcept {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class Int>
std::optional<Int> parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Int value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

/// A token `base` or `base^k`.
struct PowerToken {
  std::string_view base;
  std::int64_t exponent = 1;
};

/// Splits `g^k`; nullopt when the exponent part is not an integer.
inline std::optional<PowerToken> split_power(std::string_view token) {
  auto caret = token.find('^');
  if (caret == std::string_view::npos) return PowerToken{token, 1};
  auto exp = token.substr(caret + 1);
  if (exp.size() >= 2 && exp.front() == '{' && exp.back() == '}')
    exp = exp.substr(1, exp.size() - 2);
  auto k = parse_int<std::int64_t>(exp);
  if (!k) return std::nullopt;
  return PowerToken{token.substr(0, caret), *k};
}

inline void append_bytes(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

} // namespace qset::detail
