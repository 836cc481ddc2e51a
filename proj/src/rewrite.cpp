#include "ou/rewrite.hpp"

#include <stdexcept>

#include "ou/errors.hpp"

namespace ou {

bool is_ou(const Layout& l) {
  for (int s = 0; s < l.strand_count(); ++s) {
    bool seen_under = false;
    for (const Mark& m : l.strand(s)) {
      if (!m.over)
        seen_under = true;
      else if (seen_under)
        return false;
    }
  }
  return true;
}

bool is_acyclic(const Layout& l) {
  // Cascade graph on marks: strand-successor edges plus over -> under drops.
  // Every mark has at most two out-edges, so Kahn's algorithm is linear.
  std::vector<std::int32_t> base(l.strand_count() + 1, 0);
  for (int s = 0; s < l.strand_count(); ++s)
    base[s + 1] = base[s] + static_cast<std::int32_t>(l.strand(s).size());
  const auto total = static_cast<std::size_t>(base.back());
  auto node = [&](Slot x) { return static_cast<std::size_t>(base[x.strand] + x.index); };

  std::vector<std::int32_t> indeg(total, 0);
  for (int s = 0; s < l.strand_count(); ++s) {
    const auto& v = l.strand(s);
    for (std::size_t t = 0; t < v.size(); ++t) {
      if (t + 1 < v.size()) ++indeg[base[s] + t + 1];
      if (v[t].over) ++indeg[node(l.under_slot(v[t].crossing))];
    }
  }
  std::vector<Slot> stack;
  for (int s = 0; s < l.strand_count(); ++s)
    for (std::size_t t = 0; t < l.strand(s).size(); ++t)
      if (indeg[base[s] + t] == 0) stack.push_back({s, static_cast<std::int32_t>(t)});
  std::size_t visited = 0;
  auto release = [&](Slot x) {
    if (--indeg[node(x)] == 0) stack.push_back(x);
  };
  while (!stack.empty()) {
    const Slot x = stack.back();
    stack.pop_back();
    ++visited;
    const auto& v = l.strand(x.strand);
    if (static_cast<std::size_t>(x.index) + 1 < v.size()) release({x.strand, x.index + 1});
    const Mark m = v[x.index];
    if (m.over) release(l.under_slot(m.crossing));
  }
  return visited == total;
}

std::optional<R12Pattern> find_r12(const Layout& l) {
  // Scanning adjacent pairs in mark order finds the least pattern first: the
  // smallest mark of a pattern is always the left end of one of its adjacent
  // same-role pairs.
  for (int s = 0; s < l.strand_count(); ++s) {
    const auto& v = l.strand(s);
    for (std::size_t t = 0; t + 1 < v.size(); ++t) {
      const Mark a = v[t];
      const Mark b = v[t + 1];
      if (a.crossing == b.crossing) return R12Pattern{a.crossing, std::nullopt};
      if (a.over != b.over || l.sign(a.crossing) != -l.sign(b.crossing)) continue;
      const Slot pa = a.over ? l.under_slot(a.crossing) : l.over_slot(a.crossing);
      const Slot pb = b.over ? l.under_slot(b.crossing) : l.over_slot(b.crossing);
      if (pa.strand == pb.strand && (pa.index - pb.index == 1 || pb.index - pa.index == 1))
        return R12Pattern{a.crossing, b.crossing};
    }
  }
  return std::nullopt;
}

void reduce_r12(Layout& l) {
  while (auto p = find_r12(l)) {
    l.remove_crossing(p->first);
    if (p->second) l.remove_crossing(*p->second);
  }
}

std::vector<Slot> uo_slots(const Layout& l) {
  std::vector<Slot> out;
  for (int s = 0; s < l.strand_count(); ++s) {
    const auto& v = l.strand(s);
    for (std::size_t t = 0; t + 1 < v.size(); ++t)
      if (!v[t].over && v[t + 1].over) out.push_back({s, static_cast<std::int32_t>(t)});
  }
  return out;
}

std::optional<Slot> first_uo_slot(const Layout& l) {
  for (int s = 0; s < l.strand_count(); ++s) {
    const auto& v = l.strand(s);
    for (std::size_t t = 0; t + 1 < v.size(); ++t)
      if (!v[t].over && v[t + 1].over) return Slot{s, static_cast<std::int32_t>(t)};
  }
  return std::nullopt;
}

void glide(Layout& l, Slot under) {
  const auto& v = l.strand(under.strand);
  const Mark mu = v[under.index];
  const Mark mo = v[under.index + 1];
  if (mu.over || !mo.over) throw std::invalid_argument("glide requires an under-mark followed by an over-mark");
  if (mu.crossing == mo.crossing) throw SameCrossing("UO interval is a single crossing (a kink); glide undefined");

  // a = X_{s1}[i1, j1] (j1 opens the interval), b = X_{s2}[i2, j2] (i2 closes it).
  // Afterwards b passes over at j1 and a passes under at i2, and two new
  // crossings X_{s1 s2}[i1 - s1/3, j2 + s2/3] and X_{-s1 s2}[i1 + s1/3, j2 - s2/3]
  // appear between the over-strand of a and the under-strand of b.
  const std::uint32_t a = mu.crossing;
  const std::uint32_t b = mo.crossing;
  const int s1 = l.sign(a);
  const int s2 = l.sign(b);
  const Slot i1 = l.over_slot(a);
  const Slot j2 = l.under_slot(b);
  l.swap_adjacent(under.strand, under.index);

  const std::uint32_t c = l.new_crossing(s1 * s2);
  const std::uint32_t d = l.new_crossing(-s1 * s2);
  const std::int64_t o3 = 3 * static_cast<std::int64_t>(i1.index);
  const std::int64_t u3 = 3 * static_cast<std::int64_t>(j2.index);
  l.insert_marks({
      {i1.strand, o3 - s1, Mark{c, true}},
      {i1.strand, o3 + s1, Mark{d, true}},
      {j2.strand, u3 + s2, Mark{c, false}},
      {j2.strand, u3 - s2, Mark{d, false}},
  });
}

void normalize(Layout& l, const NormalFormOptions& opts) {
  reduce_r12(l);
  if (!is_ou(l)) {
    // Glides and R1/R2 removals preserve acyclicity, so one check suffices.
    if (!is_acyclic(l)) throw Cyclic();
    std::uint64_t iters = 0;
    do {
      if (iters == opts.max_iters) throw CapExceeded(opts.max_iters);
      Slot at;
      if (opts.choose) {
        const auto all = uo_slots(l);
        at = all.at(opts.choose(all.size()));
      } else {
        at = *first_uo_slot(l);
      }
      glide(l, at);
      ++iters;
      reduce_r12(l);
    } while (!is_ou(l));
  }
  l.compact();
}

bool is_ou(const Diagram& d) { return is_ou(Layout::from_diagram(d)); }

bool is_acyclic(const Diagram& d) { return is_acyclic(Layout::from_diagram(d)); }

bool is_reduced(const Diagram& d) { return !find_r12(Layout::from_diagram(d)).has_value(); }

Diagram reduce_r12(const Diagram& d) {
  Layout l = Layout::from_diagram(d);
  reduce_r12(l);
  return l.to_diagram();
}

std::vector<UoInterval> uo_intervals(const Diagram& d) {
  const Layout l = Layout::from_diagram(d);
  std::vector<UoInterval> out;
  for (Slot x : uo_slots(l)) {
    const auto& v = l.strand(x.strand);
    out.push_back({x.strand, v[x.index].crossing, v[x.index + 1].crossing});
  }
  return out;
}

Diagram glide_once(const Diagram& d, const UoInterval& iv) {
  if (iv.under_crossing == iv.over_crossing)
    throw SameCrossing("UO interval is a single crossing (a kink); glide undefined");
  const auto count = d.crossings().size();
  if (iv.under_crossing >= count || iv.over_crossing >= count)
    throw std::invalid_argument("UO interval refers to a missing crossing");
  Layout l = Layout::from_diagram(d);
  const Slot u = l.under_slot(static_cast<std::uint32_t>(iv.under_crossing));
  const Slot o = l.over_slot(static_cast<std::uint32_t>(iv.over_crossing));
  if (u.strand != iv.strand || o.strand != iv.strand || o.index != u.index + 1)
    throw std::invalid_argument("not a UO interval of the diagram");
  glide(l, u);
  return l.to_diagram();
}

Diagram ou_normal_form(const Diagram& d, const NormalFormOptions& opts) {
  Layout l = Layout::from_diagram(d);
  normalize(l, opts);
  return l.to_diagram();
}

std::size_t xi(const Diagram& d, const NormalFormOptions& opts) {
  Layout l = Layout::from_diagram(d);
  normalize(l, opts);
  return l.crossing_count();
}

}  // namespace ou
