#include "adolg/ring/text.hpp"

#include <charconv>
#include <stdexcept>

namespace adolg::text {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string> split_terms(std::string_view text) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') {
      if (--depth < 0) throw std::invalid_argument("unbalanced ')' in polynomial: " + std::string(text));
    }
    if (c == '+' && depth == 0) {
      auto piece = trim(text.substr(start, i - start));
      if (piece.empty()) throw std::invalid_argument("empty term in polynomial: " + std::string(text));
      out.emplace_back(piece);
      start = i + 1;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced '(' in polynomial: " + std::string(text));
  auto piece = trim(text.substr(start));
  if (piece.empty()) throw std::invalid_argument("empty term in polynomial: " + std::string(text));
  out.emplace_back(piece);
  return out;
}

std::pair<std::string, std::vector<std::pair<std::string, int>>> split_coefficient(std::string_view term) {
  term = trim(term);
  if (term.empty() || term.front() != '(') {
    throw std::invalid_argument("term must start with a parenthesized coefficient: " + std::string(term));
  }
  auto close = term.find(')');
  if (close == std::string_view::npos) throw std::invalid_argument("missing ')' in term: " + std::string(term));
  std::string coef(trim(term.substr(1, close - 1)));
  std::vector<std::pair<std::string, int>> powers;
  std::string_view rest = trim(term.substr(close + 1));
  while (!rest.empty()) {
    if (rest.front() != '*') throw std::invalid_argument("expected '*' in term: " + std::string(term));
    rest = trim(rest.substr(1));
    std::size_t n = 0;
    while (n < rest.size() && rest[n] != '^' && rest[n] != '*' && rest[n] != ' ') ++n;
    std::string var(rest.substr(0, n));
    if (var.empty()) throw std::invalid_argument("missing variable in term: " + std::string(term));
    rest = trim(rest.substr(n));
    int exp = 1;
    if (!rest.empty() && rest.front() == '^') {
      rest = trim(rest.substr(1));
      const char* first = rest.data();
      const char* last = rest.data() + rest.size();
      auto [ptr, ec] = std::from_chars(first, last, exp);
      if (ec != std::errc() || ptr == first) {
        throw std::invalid_argument("malformed exponent in term: " + std::string(term));
      }
      rest = trim(rest.substr(static_cast<std::size_t>(ptr - first)));
    }
    powers.emplace_back(std::move(var), exp);
  }
  return {std::move(coef), std::move(powers)};
}

}  // namespace adolg::text
