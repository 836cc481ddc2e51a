#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ou/rational.hpp"

namespace ou {

/// Position of a mark along a strand. Strands are 0-based here; the ordering of
/// keys along one strand is the strand's orientation.
struct MarkPosition {
  int strand = 0;
  Rational key;

  friend bool operator==(const MarkPosition&, const MarkPosition&) = default;
};

/// A real crossing of a Gauss diagram. Virtual crossings carry no data and are
/// never represented.
struct Crossing {
  int sign = 1;  // +1 or -1
  MarkPosition over;
  MarkPosition under;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Gauss diagram of a virtual tangle on n oriented interval strands.
///
/// Every strand carries its crossing marks and an end-of-strand (EOS) mark whose
/// key is strictly larger than every other key on that strand. Crossing ids are
/// the indices into crossings(); they are not part of the diagram's identity.
class Diagram {
public:
  Diagram() = default;

  /// Validates the key invariants; throws InvalidDiagram.
  Diagram(int n, std::vector<Crossing> crossings, std::vector<Rational> eos_keys);

  static Diagram identity(int n);

  int strand_count() const { return n_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Rational>& eos_keys() const { return eos_; }

  /// Exact structural equality, crossing order included. Compare canonical
  /// keys for equality as Gauss diagrams.
  friend bool operator==(const Diagram&, const Diagram&) = default;

private:
  int n_ = 0;
  std::vector<Crossing> crossings_;
  std::vector<Rational> eos_;
};

/// Bytes of the canonical text emission of a tidied diagram.
class CanonicalKey {
public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }

  /// 16 hex digits of the 64-bit FNV-1a hash of the bytes.
  std::string hash_hex() const;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend std::strong_ordering operator<=>(const CanonicalKey& a, const CanonicalKey& b) {
    return a.bytes_ <=> b.bytes_;
  }

private:
  std::string bytes_;
};

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);

/// Renumbers all marks to 1..(2c+n) in traversal order (strand 1 then its EOS,
/// strand 2, ...) and sorts crossings by over-mark.
Diagram tidy(const Diagram& d);

/// Stacks d2 after d1 strand by strand. Throws StrandCountMismatch.
Diagram compose(const Diagram& d1, const Diagram& d2);

std::size_t crossing_number(const Diagram& d);

CanonicalKey canonical_key(const Diagram& d);

/// Parses the line format
///
///     vd <n>
///     x <+|-> <o> <u>      (zero or more; keys are integers or p/q)
///     eos <m1> ... <mn>
///
/// Keys are global: a mark belongs to the first strand whose EOS key exceeds it.
/// Throws SyntaxError or InvalidDiagram.
Diagram parse_diagram(std::string_view text);

/// Canonical emission of tidy(d); newline terminated.
std::string serialize(const Diagram& d);

}  // namespace ou

template <>
struct std::hash<ou::CanonicalKey> {
  std::size_t operator()(const ou::CanonicalKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes());
  }
};
