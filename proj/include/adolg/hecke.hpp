#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "adolg/braid.hpp"

namespace adolg {

// Generating sets of the cubic Hecke algebra quotients A_2..A_4 as braid
// words, and the ten families of five-strand words whose closures cover A_5.
//
// All ± expansions run + before -, left to right, and products iterate the
// left factor in the outer loop, so the lists are reproducible.

enum class Family { S4, Type1, Type2, Type3, Type4, Type5, Type6, Type7, Type8, Type9, Type10 };

inline constexpr std::array<Family, 10> kFiveStrandFamilies = {Family::Type1, Family::Type2, Family::Type3,
                                                               Family::Type4, Family::Type5, Family::Type6,
                                                               Family::Type7, Family::Type8, Family::Type9,
                                                               Family::Type10};

std::string family_tag(Family f);   // "S4", "type1", ...
Family family_from_tag(const std::string& tag);  // throws std::invalid_argument
Family five_strand_family(int type);  // 1..10

struct CheckWord {
  Family family;
  BraidWord prefix;  // the family's fixed word
  BraidWord suffix;  // the S_4 element (letters |k| <= 3)
  BraidWord full;    // prefix * suffix; the fixed word acts first
  std::size_t index; // position of the S_4 element in enumerate_s4()
};

std::vector<BraidWord> enumerate_s2();
std::vector<BraidWord> enumerate_s3();
// The 27 coset representatives U with S_4 = U * S_3.
std::vector<BraidWord> enumerate_u();
std::vector<BraidWord> enumerate_s4();

// w+ = s3 s2^-1 s1 s2^-1 s3 and w- = s3^-1 s2 s1^-1 s2 s3^-1 on five strands.
BraidWord w_plus();
BraidWord w_minus();

// The fixed word of a five-strand family, rotated to the front of the braid.
BraidWord family_prefix(Family f);

// The 648 S_4 words as a family of 4-strand check words (empty prefix).
std::vector<CheckWord> s4_check_words();
std::vector<CheckWord> family_check_words(Family f);
// All ten families, 6480 words, in family then enumeration order.
std::vector<CheckWord> enumerate_s5_check_words();

// Writes <dir>/<tag>.braids for S4 and the ten families; returns the paths.
std::vector<std::filesystem::path> write_family_files(const std::filesystem::path& dir);

}  // namespace adolg
