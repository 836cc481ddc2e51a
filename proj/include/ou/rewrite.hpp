#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ou/diagram.hpp"
#include "ou/layout.hpp"

namespace ou {

inline constexpr std::uint64_t kDefaultMaxIters = std::uint64_t{1} << 24;

/// An under-mark immediately followed by an over-mark on one strand. Crossing
/// ids index into the Diagram's crossings().
struct UoInterval {
  int strand = 0;
  std::size_t under_crossing = 0;
  std::size_t over_crossing = 0;

  friend bool operator==(const UoInterval&, const UoInterval&) = default;
};

struct NormalFormOptions {
  std::uint64_t max_iters = kDefaultMaxIters;
  /// Picks which UO interval to glide, given how many there are. Unset means
  /// the first one in mark order.
  std::function<std::size_t(std::size_t)> choose;
};

bool is_ou(const Diagram& d);
bool is_acyclic(const Diagram& d);
/// True iff no R1 and no R2 pattern is present.
bool is_reduced(const Diagram& d);
Diagram reduce_r12(const Diagram& d);
/// UO intervals in mark order.
std::vector<UoInterval> uo_intervals(const Diagram& d);
/// Throws SameCrossing, or std::invalid_argument if iv is not a UO interval of d.
Diagram glide_once(const Diagram& d, const UoInterval& iv);
/// Reduced OU form. Throws Cyclic or CapExceeded.
Diagram ou_normal_form(const Diagram& d, const NormalFormOptions& opts = {});
std::size_t xi(const Diagram& d, const NormalFormOptions& opts = {});

// Layout-level entry points used by the braid, division and enumeration code.

bool is_ou(const Layout& l);
bool is_acyclic(const Layout& l);

/// A Reidemeister 1 or 2 pattern: one crossing (R1) or two (R2).
struct R12Pattern {
  std::uint32_t first = 0;
  std::optional<std::uint32_t> second;
};

/// The pattern whose smallest participating mark is least, if any.
std::optional<R12Pattern> find_r12(const Layout& l);
void reduce_r12(Layout& l);
/// Slots of the under-marks opening each UO interval, in mark order.
std::vector<Slot> uo_slots(const Layout& l);
std::optional<Slot> first_uo_slot(const Layout& l);
/// Glides the UO interval opening at `under`. Throws SameCrossing.
void glide(Layout& l, Slot under);
/// In-place reduced OU form; result is compacted.
void normalize(Layout& l, const NormalFormOptions& opts = {});

}  // namespace ou
