#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Tokenizing helpers shared by the polynomial parsers.
namespace adolg::text {

// Split "term + term + ..." at top-level '+' signs (outside parentheses).
std::vector<std::string> split_terms(std::string_view text);

// "(coef)*x^2*y^-1" -> {"coef", {{"x", 2}, {"y", -1}}}. A bare variable
// means exponent 1.
std::pair<std::string, std::vector<std::pair<std::string, int>>> split_coefficient(std::string_view term);

std::string_view trim(std::string_view s);

}  // namespace adolg::text
