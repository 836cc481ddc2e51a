#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ou/diagram.hpp"

namespace ou {

/// One mark on a strand: which crossing it belongs to and on which side.
struct Mark {
  std::uint32_t crossing = 0;
  bool over = false;

  friend bool operator==(const Mark&, const Mark&) = default;
};

/// Address of a mark: strand and index along that strand.
struct Slot {
  std::int32_t strand = -1;
  std::int32_t index = -1;

  friend bool operator==(const Slot&, const Slot&) = default;
};

/// Working form of a Diagram used by the rewriting engine.
///
/// Each strand is the ordered sequence of its crossing marks; the EOS is
/// implicit. Because only the order of marks matters, a Layout is always
/// "tidy": the tidied key of the mark at (s, t) is the number of marks and EOS
/// symbols on strands before s, plus t + 1.
///
/// Crossings are addressed by stable ids; removed crossings leave a tombstone
/// (sign 0) until compact() is called.
class Layout {
public:
  Layout() = default;
  explicit Layout(int n) : strands_(n) {}

  /// Crossing ids follow the order of d.crossings().
  static Layout from_diagram(const Diagram& d);
  Diagram to_diagram() const;

  int strand_count() const { return static_cast<int>(strands_.size()); }
  std::size_t crossing_count() const { return live_; }
  std::size_t id_capacity() const { return sign_.size(); }

  const std::vector<Mark>& strand(int s) const { return strands_[s]; }
  int sign(std::uint32_t c) const { return sign_[c]; }
  bool alive(std::uint32_t c) const { return sign_[c] != 0; }
  Slot over_slot(std::uint32_t c) const { return over_[c]; }
  Slot under_slot(std::uint32_t c) const { return under_[c]; }
  Slot slot(Mark m) const { return m.over ? over_[m.crossing] : under_[m.crossing]; }

  /// Appends a crossing whose over-mark goes at the end of over_strand and
  /// under-mark at the end of under_strand (over first if they coincide).
  std::uint32_t append_crossing(int sign, int over_strand, int under_strand);

  /// Stacks other after this layout, strand by strand.
  void append(const Layout& other);

  void remove_crossing(std::uint32_t c);

  /// Swaps the two adjacent marks (s, t) and (s, t + 1).
  void swap_adjacent(int s, int t);

  /// Adds a crossing with no marks yet; place its marks with insert_marks().
  std::uint32_t new_crossing(int sign);

  /// A mark to be inserted on `strand` between existing marks. `position3`
  /// is measured in thirds of an index: existing mark t sits at 3t, so 3t - 1
  /// is immediately before it and 3t + 1 immediately after.
  struct Insertion {
    int strand;
    std::int64_t position3;
    Mark mark;
  };
  void insert_marks(const std::vector<Insertion>& ins);

  /// Renumbers live crossings 0..c-1 in order of their over-mark.
  void compact();

  /// Canonical text; identical to serialize(to_diagram()).
  std::string canonical_text() const;

  /// Global tidied position (0-based, EOS symbols included) of a slot.
  std::vector<std::int32_t> strand_offsets() const;

private:
  void reindex(int s, int from = 0);

  std::vector<std::vector<Mark>> strands_;
  std::vector<std::int8_t> sign_;
  std::vector<Slot> over_;
  std::vector<Slot> under_;
  std::size_t live_ = 0;
};

}  // namespace ou
