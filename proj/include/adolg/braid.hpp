#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace adolg {

class BraidParseError : public std::invalid_argument {
public:
  BraidParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// A braid on `strands` strands as a word in the Artin generators, read
// bottom-up: letter k > 0 is s_k, k < 0 is s_|k|^-1, and the first letter
// is the first crossing encountered.
class BraidWord {
public:
  BraidWord() = default;
  // Throws std::invalid_argument if strands < 1 or a letter is out of range.
  BraidWord(int strands, std::vector<int> word);

  int strands() const { return strands_; }
  const std::vector<int>& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool empty() const { return word_.empty(); }

  // Concatenation: this word first, then `rhs`.
  BraidWord operator*(const BraidWord& rhs) const;
  BraidWord inverse() const;
  // The same word on `strands` >= strands() strands.
  BraidWord embedded(int strands) const;

  // "{n,{k1,k2,...}}"
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  int strands_ = 1;
  std::vector<int> word_;
};

std::ostream& operator<<(std::ostream& os, const BraidWord& b);

// Parses "{n,{k1,k2,...}}" with optional whitespace.
BraidWord parse_braid(std::string_view text);

struct ClosureInfo {
  int components = 1;
  int writhe = 0;
  friend bool operator==(const ClosureInfo&, const ClosureInfo&) = default;
};

ClosureInfo closure_info(const BraidWord& b);

// g * b * g^-1; the closure is isotopic to that of b.
BraidWord conjugate(const BraidWord& b, const BraidWord& g);
// Adds a strand and appends s_n^sign; the closure is isotopic to that of b.
BraidWord stabilize(const BraidWord& b, int sign);

// Braid-list files: one braid per line, '#' starts a comment line, blank
// lines are skipped. Parse errors report the 1-based line number.
std::vector<BraidWord> read_braid_list(std::istream& in);
std::vector<BraidWord> read_braid_list(const std::filesystem::path& path);
void write_braid_list(std::ostream& out, const std::vector<BraidWord>& braids, std::string_view header = {});

}  // namespace adolg
