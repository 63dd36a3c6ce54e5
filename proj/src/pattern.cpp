#include "classlaw/pattern.hpp"

#include <charconv>

#include "classlaw/error.hpp"

namespace classlaw {

namespace {

constexpr std::string_view kSeparator = "\xC2\xB7";  // U+00B7 MIDDLE DOT

std::uint64_t parse_positive(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0)
    throw ValidationError("malformed splitting pattern: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

void SplittingPattern::add(std::uint64_t degree, std::uint64_t count) {
  if (degree == 0 || count == 0)
    throw DomainError("splitting pattern entries must have positive degree and count");
  entries_[degree] += count;
}

std::uint64_t SplittingPattern::count_of(std::uint64_t degree) const {
  auto it = entries_.find(degree);
  return it == entries_.end() ? 0 : it->second;
}

std::uint64_t SplittingPattern::total_degree() const {
  std::uint64_t total = 0;
  for (const auto& [d, k] : entries_) total += d * k;
  return total;
}

std::string SplittingPattern::to_string() const {
  std::string out;
  for (const auto& [d, k] : entries_) {
    if (!out.empty()) out += kSeparator;
    out += std::to_string(d) + "^" + std::to_string(k);
  }
  return out;
}

SplittingPattern SplittingPattern::parse(std::string_view text) {
  SplittingPattern out;
  if (text.empty()) return out;
  std::uint64_t last_degree = 0;
  std::string_view rest = text;
  while (true) {
    const auto sep = rest.find(kSeparator);
    const std::string_view term = rest.substr(0, sep);
    const auto caret = term.find('^');
    if (caret == std::string_view::npos)
      throw ValidationError("malformed splitting pattern: '" + std::string(text) + "'");
    const std::uint64_t d = parse_positive(term.substr(0, caret), text);
    const std::uint64_t k = parse_positive(term.substr(caret + 1), text);
    if (d <= last_degree)
      throw ValidationError("splitting pattern degrees must ascend: '" + std::string(text) + "'");
    last_degree = d;
    out.add(d, k);
    if (sep == std::string_view::npos) break;
    rest = rest.substr(sep + kSeparator.size());
  }
  return out;
}

}  // namespace classlaw
