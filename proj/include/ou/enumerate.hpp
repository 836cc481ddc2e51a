#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ou/braid.hpp"

namespace ou {

enum class BraidKind { Virtual, Classical };

std::string to_string(BraidKind k);
/// "virtual" or "classical"; throws std::invalid_argument otherwise.
BraidKind parse_kind(std::string_view s);

/// The ordered generator set for words of one kind on n strands. Letters are
/// referred to by index, so index order is the lexicographic generator order:
/// (i, j, sign) with + before - for virtual, (|k|, sign) for classical.
class Alphabet {
public:
  Alphabet(int n, BraidKind kind);

  int n() const { return n_; }
  BraidKind kind() const { return kind_; }
  std::size_t size() const { return size_; }

  std::string token(std::size_t letter) const;
  std::size_t inverse(std::size_t letter) const { return letter ^ 1; }
  /// Letters with disjoint support (virtual) or |k - l| >= 2 (classical).
  bool commutes(std::size_t a, std::size_t b) const;

  const Generator& virtual_letter(std::size_t letter) const { return virt_[letter]; }
  int classical_letter(std::size_t letter) const { return classical_[letter]; }

  /// Letters that may follow g in a proud word, ascending.
  const std::vector<std::size_t>& proud_followers(std::size_t g) const { return followers_[g]; }

  std::string format_word(const std::vector<std::uint16_t>& word) const;

private:
  int n_;
  BraidKind kind_;
  std::size_t size_;
  std::vector<Generator> virt_;
  std::vector<int> classical_;
  std::vector<std::vector<std::size_t>> followers_;
};

/// Tokens of all generators in order.
std::vector<std::string> generators(int n, BraidKind kind);

/// True iff the word has no letter followed by its inverse and no adjacent
/// commuting pair out of order.
bool is_proud(const Alphabet& a, const std::vector<std::uint16_t>& word);

struct TabulateOptions {
  int workers = 1;
  /// Abort with ResourceLimit once more distinct braids than this are stored.
  std::size_t max_keys = 50'000'000;
};

struct Representative {
  std::size_t length = 0;
  std::vector<std::uint16_t> word;
  std::string key_hash;
};

struct TabulationReport {
  int n = 0;
  int m = 0;
  BraidKind kind = BraidKind::Virtual;
  /// count_exactly[k]: braids whose shortest proud word has length k.
  std::vector<std::uint64_t> count_exactly;
  /// One per braid, sorted by (length, word).
  std::vector<Representative> representatives;

  /// `<kind> <n> <m-first-seen> <word tokens> <key-hash>` per braid.
  std::string representatives_text() const;
  /// Aligned table with exact and cumulative counts.
  std::string table_text() const;
  /// `n m kind exact-count` for m = 0..M.
  std::string structured_text() const;
};

/// Dedup key of a word: canonical text of Ch, prefixed by the final
/// permutation for classical words.
std::string braid_key(const Alphabet& a, const std::vector<std::uint16_t>& word);

/// Counts distinct braids reached by proud words of length <= m.
/// Throws ResourceLimit.
TabulationReport tabulate(int n, int m, BraidKind kind, const TabulateOptions& opts = {});

struct WorstBraid {
  std::vector<std::uint16_t> word;
  std::string text;
  std::size_t xi = 0;
};

/// A proud word of length exactly m maximising xi(Ch); the lexicographically
/// first among maximisers.
WorstBraid worst_braid(int n, int m, BraidKind kind, int workers = 1);

/// 6 * 2^m - 2 F_{m+3} - 2 with F_1 = F_2 = 1.
std::uint64_t fibonacci_formula(int m);

/// Classical 3-strand exact counts agree with fibonacci_formula for m = 1..m_max.
bool fibonacci_check(int m_max, int workers = 1);

}  // namespace ou
