#include "ou/layout.hpp"

#include <algorithm>
#include <stdexcept>

namespace ou {

Layout Layout::from_diagram(const Diagram& d) {
  Layout out(d.strand_count());
  const auto& xs = d.crossings();
  struct Keyed {
    Rational key;
    Mark mark;
  };
  std::vector<std::vector<Keyed>> tmp(d.strand_count());
  for (std::size_t c = 0; c < xs.size(); ++c) {
    out.new_crossing(xs[c].sign);
    tmp[xs[c].over.strand].push_back({xs[c].over.key, {static_cast<std::uint32_t>(c), true}});
    tmp[xs[c].under.strand].push_back({xs[c].under.key, {static_cast<std::uint32_t>(c), false}});
  }
  for (int s = 0; s < d.strand_count(); ++s) {
    auto& v = tmp[s];
    std::sort(v.begin(), v.end(), [](const Keyed& a, const Keyed& b) { return a.key < b.key; });
    out.strands_[s].reserve(v.size());
    for (const auto& k : v) out.strands_[s].push_back(k.mark);
    out.reindex(s);
  }
  return out;
}

std::vector<std::int32_t> Layout::strand_offsets() const {
  std::vector<std::int32_t> off(strands_.size());
  std::int32_t acc = 0;
  for (std::size_t s = 0; s < strands_.size(); ++s) {
    off[s] = acc;
    acc += static_cast<std::int32_t>(strands_[s].size()) + 1;
  }
  return off;
}

Diagram Layout::to_diagram() const {
  const auto off = strand_offsets();
  std::vector<Crossing> xs;
  xs.reserve(live_);
  for (int s = 0; s < strand_count(); ++s)
    for (std::size_t t = 0; t < strands_[s].size(); ++t) {
      const Mark m = strands_[s][t];
      if (!m.over) continue;
      const Slot u = under_[m.crossing];
      xs.push_back(Crossing{sign_[m.crossing],
                            MarkPosition{s, Rational(off[s] + static_cast<std::int64_t>(t) + 1)},
                            MarkPosition{u.strand, Rational(off[u.strand] + u.index + 1)}});
    }
  std::vector<Rational> eos;
  for (int s = 0; s < strand_count(); ++s)
    eos.emplace_back(off[s] + static_cast<std::int64_t>(strands_[s].size()) + 1);
  return Diagram(strand_count(), std::move(xs), std::move(eos));
}

std::string Layout::canonical_text() const {
  const auto off = strand_offsets();
  std::string out = "vd " + std::to_string(strand_count()) + "\n";
  for (int s = 0; s < strand_count(); ++s)
    for (std::size_t t = 0; t < strands_[s].size(); ++t) {
      const Mark m = strands_[s][t];
      if (!m.over) continue;
      const Slot u = under_[m.crossing];
      out += sign_[m.crossing] > 0 ? "x + " : "x - ";
      out += std::to_string(off[s] + static_cast<std::int64_t>(t) + 1);
      out += ' ';
      out += std::to_string(off[u.strand] + u.index + 1);
      out += '\n';
    }
  out += "eos";
  for (int s = 0; s < strand_count(); ++s) {
    out += ' ';
    out += std::to_string(off[s] + strands_[s].size() + 1);
  }
  out += '\n';
  return out;
}

std::uint32_t Layout::new_crossing(int sign) {
  sign_.push_back(static_cast<std::int8_t>(sign));
  over_.push_back({});
  under_.push_back({});
  ++live_;
  return static_cast<std::uint32_t>(sign_.size() - 1);
}

std::uint32_t Layout::append_crossing(int sign, int over_strand, int under_strand) {
  const auto c = new_crossing(sign);
  auto& os = strands_[over_strand];
  os.push_back({c, true});
  over_[c] = {over_strand, static_cast<std::int32_t>(os.size() - 1)};
  auto& us = strands_[under_strand];
  us.push_back({c, false});
  under_[c] = {under_strand, static_cast<std::int32_t>(us.size() - 1)};
  return c;
}

void Layout::append(const Layout& other) {
  if (other.strand_count() != strand_count()) throw std::invalid_argument("layout strand count mismatch");
  const auto base = static_cast<std::uint32_t>(sign_.size());
  for (std::size_t c = 0; c < other.sign_.size(); ++c) {
    sign_.push_back(other.sign_[c]);
    over_.push_back({});
    under_.push_back({});
  }
  live_ += other.live_;
  for (int s = 0; s < strand_count(); ++s) {
    const auto from = static_cast<int>(strands_[s].size());
    for (Mark m : other.strands_[s]) strands_[s].push_back({m.crossing + base, m.over});
    reindex(s, from);
  }
}

void Layout::reindex(int s, int from) {
  auto& v = strands_[s];
  for (int t = from; t < static_cast<int>(v.size()); ++t) (v[t].over ? over_ : under_)[v[t].crossing] = {s, t};
}

void Layout::remove_crossing(std::uint32_t c) {
  Slot a = over_[c];
  Slot b = under_[c];
  // Erase the later index first when both marks share a strand.
  if (a.strand == b.strand && a.index < b.index) std::swap(a, b);
  strands_[a.strand].erase(strands_[a.strand].begin() + a.index);
  strands_[b.strand].erase(strands_[b.strand].begin() + b.index);
  if (a.strand == b.strand) {
    reindex(a.strand, b.index);
  } else {
    reindex(a.strand, a.index);
    reindex(b.strand, b.index);
  }
  sign_[c] = 0;
  over_[c] = under_[c] = {};
  --live_;
}

void Layout::swap_adjacent(int s, int t) {
  auto& v = strands_[s];
  std::swap(v[t], v[t + 1]);
  (v[t].over ? over_ : under_)[v[t].crossing] = {s, t};
  (v[t + 1].over ? over_ : under_)[v[t + 1].crossing] = {s, t + 1};
}

void Layout::insert_marks(const std::vector<Insertion>& ins) {
  struct Keyed {
    std::int64_t pos3;
    int order;  // stable tie-break: existing marks never tie with insertions
    Mark mark;
  };
  std::vector<int> touched;
  for (const auto& i : ins)
    if (std::find(touched.begin(), touched.end(), i.strand) == touched.end()) touched.push_back(i.strand);
  for (int s : touched) {
    std::vector<Keyed> v;
    v.reserve(strands_[s].size() + ins.size());
    for (std::size_t t = 0; t < strands_[s].size(); ++t)
      v.push_back({3 * static_cast<std::int64_t>(t), 0, strands_[s][t]});
    int order = 1;
    for (const auto& i : ins)
      if (i.strand == s) v.push_back({i.position3, order++, i.mark});
    std::sort(v.begin(), v.end(), [](const Keyed& a, const Keyed& b) {
      return a.pos3 != b.pos3 ? a.pos3 < b.pos3 : a.order < b.order;
    });
    auto& dst = strands_[s];
    dst.clear();
    for (const auto& k : v) dst.push_back(k.mark);
    reindex(s);
  }
}

void Layout::compact() {
  std::vector<std::uint32_t> remap(sign_.size(), UINT32_MAX);
  std::uint32_t next = 0;
  for (int s = 0; s < strand_count(); ++s)
    for (const Mark& m : strands_[s])
      if (m.over) remap[m.crossing] = next++;
  std::vector<std::int8_t> sign(next);
  for (std::size_t c = 0; c < sign_.size(); ++c)
    if (remap[c] != UINT32_MAX) sign[remap[c]] = sign_[c];
  sign_ = std::move(sign);
  over_.assign(next, {});
  under_.assign(next, {});
  for (int s = 0; s < strand_count(); ++s) {
    for (Mark& m : strands_[s]) m.crossing = remap[m.crossing];
    reindex(s);
  }
  live_ = next;
}

}  // namespace ou
