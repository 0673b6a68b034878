#include "adolg/hecke.hpp"

#include <fstream>
#include <stdexcept>

namespace adolg {

namespace {

using Letters = std::vector<int>;

BraidWord word(int strands, Letters letters) { return {strands, std::move(letters)}; }

Letters cat(const Letters& a, const Letters& b) {
  Letters out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Expands a pattern whose entries are either a fixed letter or a +-letter
// (encoded as {k, true}); signs run + before -, leftmost varying slowest.
struct Slot {
  int generator;
  bool either_sign;
};

std::vector<Letters> expand(const std::vector<Slot>& pattern) {
  std::vector<Letters> out{{}};
  for (const auto& slot : pattern) {
    std::vector<Letters> next;
    for (const auto& prefix : out) {
      if (slot.either_sign) {
        next.push_back(cat(prefix, {slot.generator}));
        next.push_back(cat(prefix, {-slot.generator}));
      } else {
        next.push_back(cat(prefix, {slot.generator}));
      }
    }
    out = std::move(next);
  }
  return out;
}

Slot pm(int k) { return {k, true}; }
Slot fix(int k) { return {k, false}; }

}  // namespace

std::string family_tag(Family f) {
  if (f == Family::S4) return "S4";
  return "type" + std::to_string(static_cast<int>(f));
}

Family family_from_tag(const std::string& tag) {
  if (tag == "S4" || tag == "s4") return Family::S4;
  if (tag.rfind("type", 0) == 0) {
    int k = std::stoi(tag.substr(4));
    return five_strand_family(k);
  }
  throw std::invalid_argument("unknown family tag: " + tag);
}

Family five_strand_family(int type) {
  if (type < 1 || type > 10) throw std::invalid_argument("family type must be in 1..10");
  return static_cast<Family>(type);
}

std::vector<BraidWord> enumerate_s2() { return {word(2, {}), word(2, {1}), word(2, {-1})}; }

std::vector<BraidWord> enumerate_s3() {
  // S3 = S2  ⊔  S2 s2^{±1} S2  ⊔  S2 s2^-1 s1 s2^-1
  std::vector<BraidWord> out;
  const auto s2 = enumerate_s2();
  for (const auto& a : s2) out.push_back(a.embedded(3));
  for (const auto& left : s2) {
    for (int sign : {1, -1}) {
      for (const auto& right : s2) out.push_back(word(3, cat(cat(left.word(), {2 * sign}), right.word())));
    }
  }
  for (const auto& left : s2) out.push_back(word(3, cat(left.word(), {-2, 1, -2})));
  return out;
}

std::vector<BraidWord> enumerate_u() {
  const std::vector<std::vector<Slot>> patterns = {
      {},
      {fix(-3), fix(2), fix(-1), fix(2), fix(-3)},
      {fix(3), fix(-2), fix(1), fix(-2), fix(3)},
      {pm(3)},
      {pm(3), pm(2)},
      {pm(3), pm(2), pm(1)},
      {pm(3), fix(-2), fix(1), fix(-2)},
      {fix(3), fix(-2), fix(3)},
      {fix(3), fix(-2), fix(3), pm(1)},
      {fix(3), fix(-2), fix(3), fix(1), fix(-2), fix(1)},
      {fix(3), fix(-2), fix(3), pm(1), pm(2)},
  };
  std::vector<BraidWord> out;
  for (const auto& p : patterns) {
    for (auto& letters : expand(p)) out.push_back(word(4, std::move(letters)));
  }
  return out;
}

std::vector<BraidWord> enumerate_s4() {
  std::vector<BraidWord> out;
  const auto s3 = enumerate_s3();
  for (const auto& u : enumerate_u()) {
    for (const auto& w : s3) out.push_back(u * w.embedded(4));
  }
  return out;
}

BraidWord w_plus() { return word(5, {3, -2, 1, -2, 3}); }
BraidWord w_minus() { return word(5, {-3, 2, -1, 2, -3}); }

BraidWord family_prefix(Family f) {
  const BraidWord s4p = word(5, {4}), s4m = word(5, {-4});
  switch (f) {
    case Family::S4: return word(4, {});
    case Family::Type1: return word(5, {4, -3, 4});
    case Family::Type2: return word(5, {-4, 3, -2, 3, -4});
    case Family::Type3: return word(5, {4, -3, 2, -3, 4});
    case Family::Type4: return s4m * w_plus() * s4m;
    case Family::Type5: return s4p * w_minus() * s4p;
    case Family::Type6: return s4m * w_minus() * s4m;
    case Family::Type7: return s4p * w_plus() * s4p;
    case Family::Type8: return s4p * w_minus() * s4p * w_minus() * s4p;
    case Family::Type9: return s4p * w_plus() * s4m * w_plus() * s4p;
    case Family::Type10: return s4m * w_minus() * s4p * w_minus() * s4m;
  }
  throw std::invalid_argument("unknown family");
}

std::vector<CheckWord> s4_check_words() {
  std::vector<CheckWord> out;
  const auto s4 = enumerate_s4();
  const BraidWord empty = word(4, {});
  for (std::size_t i = 0; i < s4.size(); ++i) out.push_back({Family::S4, empty, s4[i], s4[i], i});
  return out;
}

std::vector<CheckWord> family_check_words(Family f) {
  if (f == Family::S4) return s4_check_words();
  std::vector<CheckWord> out;
  const BraidWord prefix = family_prefix(f);
  const auto s4 = enumerate_s4();
  for (std::size_t i = 0; i < s4.size(); ++i) {
    BraidWord suffix = s4[i];
    BraidWord full = prefix * suffix.embedded(5);
    out.push_back({f, prefix, std::move(suffix), std::move(full), i});
  }
  return out;
}

std::vector<CheckWord> enumerate_s5_check_words() {
  std::vector<CheckWord> out;
  for (Family f : kFiveStrandFamilies) {
    auto words = family_check_words(f);
    out.insert(out.end(), std::make_move_iterator(words.begin()), std::make_move_iterator(words.end()));
  }
  return out;
}

std::vector<std::filesystem::path> write_family_files(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> paths;
  std::vector<Family> families{Family::S4};
  families.insert(families.end(), kFiveStrandFamilies.begin(), kFiveStrandFamilies.end());
  for (Family f : families) {
    std::vector<BraidWord> braids;
    for (const auto& cw : family_check_words(f)) braids.push_back(cw.full);
    auto path = dir / (family_tag(f) + ".braids");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    std::string header = "family " + family_tag(f) + ", " + std::to_string(braids.size()) + " words";
    if (f != Family::S4) header += ", fixed word " + family_prefix(f).to_string();
    write_braid_list(out, braids, header);
    paths.push_back(path);
  }
  return paths;
}

}  // namespace adolg
