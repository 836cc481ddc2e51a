#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ou/diagram.hpp"
#include "ou/layout.hpp"
#include "ou/rewrite.hpp"

namespace ou {

/// sigma_{ij}^{sign}: strand i crosses over strand j. Strand labels are 1-based.
struct Generator {
  int i = 1;
  int j = 2;
  int sign = 1;

  Generator inverse() const { return {i, j, -sign}; }
  /// True iff the two generators involve four distinct strands.
  bool disjoint(const Generator& o) const { return i != o.i && i != o.j && j != o.i && j != o.j; }

  /// `s<i>,<j>` or `s<i>,<j>'`.
  std::string token() const;

  friend bool operator==(const Generator&, const Generator&) = default;
  /// Lexicographic on (i, j, sign) with +1 before -1.
  friend std::strong_ordering operator<=>(const Generator& a, const Generator& b) {
    if (auto c = a.i <=> b.i; c != 0) return c;
    if (auto c = a.j <=> b.j; c != 0) return c;
    return b.sign <=> a.sign;
  }
};

struct VirtualBraidWord {
  int n = 2;
  std::vector<Generator> letters;

  /// Throws InvalidWord if a letter is out of range.
  void validate() const;
  VirtualBraidWord operator*(const VirtualBraidWord& rhs) const;
  /// `vpb <n>: tok tok ...`
  std::string to_string() const;

  friend bool operator==(const VirtualBraidWord&, const VirtualBraidWord&) = default;
};

/// Classical braid word: letter k > 0 means the strand at position k crosses
/// over the one at position k + 1 positively; -k is the negative crossing.
struct ClassicalBraidWord {
  int n = 2;
  std::vector<int> letters;

  void validate() const;
  /// `br <n>: 1 -2 ...`
  std::string to_string() const;

  friend bool operator==(const ClassicalBraidWord&, const ClassicalBraidWord&) = default;
};

/// image[p] is the (1-based) strand occupying position p + 1.
struct Permutation {
  std::vector<int> image;

  static Permutation identity(int n);
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// Parses `vpb <n>: s2,1' s1,3 ...`. Diagnostics name the offending token index.
VirtualBraidWord parse_vpb(std::string_view text);
/// Parses `br <n>: 1 -2 1`.
ClassicalBraidWord parse_br(std::string_view text);

Layout iota_layout(const VirtualBraidWord& w);
/// One crossing per letter, stacked in word order (first letter nearest the tails).
Diagram iota(const VirtualBraidWord& w);

Layout ch_layout(const VirtualBraidWord& w, const NormalFormOptions& opts = {});
/// Reduced OU form of iota(w); a complete invariant of virtual pure braids.
Diagram ch(const VirtualBraidWord& w, const NormalFormOptions& opts = {});

/// Throws StrandCountMismatch.
bool braids_equal(const VirtualBraidWord& a, const VirtualBraidWord& b);

VirtualBraidWord inverse(const VirtualBraidWord& w);

std::pair<VirtualBraidWord, Permutation> classical_to_vpb(const ClassicalBraidWord& b);

/// Dedup key of a classical braid: final permutation plus canonical key of Ch.
std::string classical_key(const ClassicalBraidWord& b);

}  // namespace ou
