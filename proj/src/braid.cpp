#include "adolg/braid.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace adolg {

BraidWord::BraidWord(int strands, std::vector<int> word) : strands_(strands), word_(std::move(word)) {
  if (strands_ < 1) throw std::invalid_argument("braid needs at least one strand");
  for (int k : word_) {
    if (k == 0 || k >= strands_ || -k >= strands_) {
      throw std::invalid_argument("letter " + std::to_string(k) + " out of range for " + std::to_string(strands_) +
                                  " strands");
    }
  }
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (strands_ != rhs.strands_) throw std::invalid_argument("strand count mismatch in braid product");
  std::vector<int> w = word_;
  w.insert(w.end(), rhs.word_.begin(), rhs.word_.end());
  return {strands_, std::move(w)};
}

BraidWord BraidWord::inverse() const {
  std::vector<int> w(word_.rbegin(), word_.rend());
  for (int& k : w) k = -k;
  return {strands_, std::move(w)};
}

BraidWord BraidWord::embedded(int strands) const {
  if (strands < strands_) throw std::invalid_argument("cannot embed into fewer strands");
  return {strands, word_};
}

std::string BraidWord::to_string() const {
  std::string s = "{" + std::to_string(strands_) + ",{";
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(word_[i]);
  }
  s += "}}";
  return s;
}

std::ostream& operator<<(std::ostream& os, const BraidWord& b) { return os << b.to_string(); }

namespace {

class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw BraidParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }
  long integer() {
    skip_ws();
    long v = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr == first) throw BraidParseError("expected integer", pos_);
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }
  void finish() {
    skip_ws();
    if (pos_ != text_.size()) throw BraidParseError("trailing characters", pos_);
  }
  std::size_t pos() const { return pos_; }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BraidWord parse_braid(std::string_view text) {
  Cursor cur(text);
  cur.expect('{');
  std::size_t n_pos = cur.pos();
  long n = cur.integer();
  if (n < 1) throw BraidParseError("strand count must be positive", n_pos);
  if (n > 64) throw BraidParseError("strand count too large", n_pos);
  cur.expect(',');
  cur.expect('{');
  std::vector<int> word;
  if (!cur.peek('}')) {
    while (true) {
      cur.skip_ws();
      std::size_t at = cur.pos();
      long k = cur.integer();
      if (k == 0 || k >= n || -k >= n) {
        throw BraidParseError("letter " + std::to_string(k) + " outside 1 <= |k| <= " + std::to_string(n - 1), at);
      }
      word.push_back(static_cast<int>(k));
      if (cur.peek('}')) break;
      cur.expect(',');
    }
  }
  cur.expect('}');
  cur.expect('}');
  cur.finish();
  return {static_cast<int>(n), std::move(word)};
}

ClosureInfo closure_info(const BraidWord& b) {
  // perm[p] = strand that ends at position p after applying the word.
  std::vector<int> perm(static_cast<std::size_t>(b.strands()));
  std::iota(perm.begin(), perm.end(), 0);
  ClosureInfo info;
  info.writhe = 0;
  for (int k : b.word()) {
    std::size_t i = static_cast<std::size_t>(k > 0 ? k : -k) - 1;
    std::swap(perm[i], perm[i + 1]);
    info.writhe += k > 0 ? 1 : -1;
  }
  std::vector<bool> seen(perm.size(), false);
  info.components = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++info.components;
    for (std::size_t c = s; !seen[c]; c = static_cast<std::size_t>(perm[c])) seen[c] = true;
  }
  return info;
}

BraidWord conjugate(const BraidWord& b, const BraidWord& g) { return g * b * g.inverse(); }

BraidWord stabilize(const BraidWord& b, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("stabilization sign must be +1 or -1");
  std::vector<int> w = b.word();
  w.push_back(sign * b.strands());
  return {b.strands() + 1, std::move(w)};
}

std::vector<BraidWord> read_braid_list(std::istream& in) {
  std::vector<BraidWord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_braid(line));
    } catch (const BraidParseError& e) {
      throw BraidParseError("line " + std::to_string(line_no) + ": " + e.what(), e.position());
    }
  }
  return out;
}

std::vector<BraidWord> read_braid_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open braid list " + path.string());
  return read_braid_list(in);
}

void write_braid_list(std::ostream& out, const std::vector<BraidWord>& braids, std::string_view header) {
  if (!header.empty()) {
    std::istringstream lines{std::string(header)};
    std::string line;
    while (std::getline(lines, line)) out << "# " << line << '\n';
  }
  for (const auto& b : braids) out << b.to_string() << '\n';
}

}  // namespace adolg
