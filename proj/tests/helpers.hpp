#pragma once

// Test-only generators and brute-force oracles. Nothing here calls into the
// rewriting engine; the oracles work from Diagram keys directly.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "ou/braid.hpp"
#include "ou/diagram.hpp"

namespace ou::testing {

inline VirtualBraidWord random_word(std::mt19937_64& rng, int n, int len) {
  VirtualBraidWord w{n, {}};
  std::uniform_int_distribution<int> strand(1, n);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int t = 0; t < len; ++t) {
    int i = strand(rng);
    int j = strand(rng);
    while (j == i) j = strand(rng);
    w.letters.push_back({i, j, coin(rng) ? 1 : -1});
  }
  return w;
}

inline VirtualBraidWord word(std::initializer_list<Generator> gs, int n) { return {n, std::vector<Generator>(gs)}; }

/// k-twist braid: (s12 s21)^{k/2} for even k, s21 (s12 s21)^{(k-1)/2} for odd k.
inline VirtualBraidWord twist(int k) {
  VirtualBraidWord w{2, {}};
  if (k % 2 == 1) w.letters.push_back({2, 1, 1});
  for (int t = 0; t < k / 2; ++t) {
    w.letters.push_back({1, 2, 1});
    w.letters.push_back({2, 1, 1});
  }
  return w;
}

// One random rewrite of w that preserves the braid: insert g g^-1, insert a
// trivial relator, or rewrite an existing s_ij s_ik s_jk / s_jk s_ik s_ij
// triple or an adjacent disjoint pair in place.
inline VirtualBraidWord relate(std::mt19937_64& rng, VirtualBraidWord w) {
  const int n = w.n;
  auto& ls = w.letters;
  std::uniform_int_distribution<int> strand(1, n);
  auto distinct = [&](std::size_t count) {
    std::vector<int> s;
    while (s.size() < count) {
      int v = strand(rng);
      if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
    }
    return s;
  };
  auto sign = [&] { return rng() % 2 ? 1 : -1; };
  const auto at = static_cast<long>(rng() % (ls.size() + 1));
  switch (rng() % (n >= 4 ? 5 : 3)) {
    case 0: {
      auto s = distinct(2);
      Generator g{s[0], s[1], sign()};
      ls.insert(ls.begin() + at, {g, g.inverse()});
      return w;
    }
    case 1: {
      // In-place triple rewrite wherever one exists, from a random start.
      for (std::size_t k = 0; k + 3 <= ls.size(); ++k) {
        const std::size_t p = (k + static_cast<std::size_t>(at)) % (ls.size() - 2);
        const Generator a = ls[p], b = ls[p + 1], c = ls[p + 2];
        if (a.sign != 1 || b.sign != 1 || c.sign != 1) continue;
        if (a.i == b.i && a.j == c.i && b.j == c.j) {  // s_ij s_ik s_jk
          ls[p] = c, ls[p + 2] = a;
          return w;
        }
        if (c.i == b.i && c.j == a.i && b.j == a.j) {  // s_jk s_ik s_ij
          ls[p] = c, ls[p + 2] = a;
          return w;
        }
      }
      [[fallthrough]];
    }
    case 2: {
      auto s = distinct(3);
      const int i = s[0], j = s[1], k = s[2];
      std::vector<Generator> lhs{{i, j, 1}, {i, k, 1}, {j, k, 1}};
      std::vector<Generator> rhs{{j, k, 1}, {i, k, 1}, {i, j, 1}};
      if (rng() % 2) std::swap(lhs, rhs);
      // lhs * rhs^-1 is trivial.
      for (auto it = rhs.rbegin(); it != rhs.rend(); ++it) lhs.push_back(it->inverse());
      ls.insert(ls.begin() + at, lhs.begin(), lhs.end());
      return w;
    }
    case 3: {
      for (std::size_t k = 0; k + 2 <= ls.size(); ++k) {
        const std::size_t p = (k + static_cast<std::size_t>(at)) % (ls.size() - 1);
        if (ls[p].disjoint(ls[p + 1])) {
          std::swap(ls[p], ls[p + 1]);
          return w;
        }
      }
      [[fallthrough]];
    }
    default: {
      auto s = distinct(4);
      Generator a{s[0], s[1], sign()}, b{s[2], s[3], sign()};
      ls.insert(ls.begin() + at, {a, b, a.inverse(), b.inverse()});
      return w;
    }
  }
}

/// Random diagram with c crossings on n strands and arbitrary rational keys.
inline Diagram random_diagram(std::mt19937_64& rng, int n, int c) {
  std::uniform_int_distribution<int> strand(0, n - 1), num(-200, 200), den(1, 7), coin(0, 1);
  std::vector<std::set<Rational>> used(n);
  auto place = [&] {
    const int s = strand(rng);
    Rational k(num(rng), den(rng));
    while (used[s].count(k)) k = Rational(num(rng), den(rng));
    used[s].insert(k);
    return MarkPosition{s, k};
  };
  std::vector<Crossing> xs;
  for (int t = 0; t < c; ++t) {
    Crossing x;
    x.sign = coin(rng) ? 1 : -1;
    x.over = place();
    x.under = place();
    xs.push_back(x);
  }
  std::vector<Rational> eos;
  for (int s = 0; s < n; ++s) eos.push_back(used[s].empty() ? Rational(num(rng)) : *used[s].rbegin() + Rational(1, 2));
  return Diagram(n, xs, eos);
}

/// One mark as seen by the oracles.
struct OracleMark {
  int strand;
  Rational key;
  int crossing;  // -1 for EOS
  bool over;
};

/// All marks, EOS included, sorted by (strand, key).
inline std::vector<OracleMark> oracle_marks(const Diagram& d) {
  std::vector<OracleMark> ms;
  for (std::size_t c = 0; c < d.crossings().size(); ++c) {
    const auto& x = d.crossings()[c];
    ms.push_back({x.over.strand, x.over.key, static_cast<int>(c), true});
    ms.push_back({x.under.strand, x.under.key, static_cast<int>(c), false});
  }
  for (int s = 0; s < d.strand_count(); ++s) ms.push_back({s, d.eos_keys()[s], -1, false});
  std::sort(ms.begin(), ms.end(), [](const OracleMark& a, const OracleMark& b) {
    return std::tie(a.strand, a.key) < std::tie(b.strand, b.key);
  });
  return ms;
}

/// Sort-and-renumber: (sign, over key, under key) triples plus EOS keys.
struct OracleTidy {
  std::multiset<std::tuple<int, std::int64_t, std::int64_t>> crossings;
  std::vector<std::int64_t> eos;
  friend bool operator==(const OracleTidy&, const OracleTidy&) = default;
};

inline OracleTidy oracle_tidy(const Diagram& d) {
  auto ms = oracle_marks(d);
  std::vector<std::int64_t> over(d.crossings().size()), under(d.crossings().size());
  OracleTidy out;
  for (std::size_t k = 0; k < ms.size(); ++k) {
    const auto id = static_cast<std::int64_t>(k + 1);
    if (ms[k].crossing < 0)
      out.eos.push_back(id);
    else
      (ms[k].over ? over : under)[ms[k].crossing] = id;
  }
  for (std::size_t c = 0; c < d.crossings().size(); ++c)
    out.crossings.insert({d.crossings()[c].sign, over[c], under[c]});
  return out;
}

/// Position (index in the (strand, key) order) of each crossing's marks.
struct OraclePositions {
  std::vector<OracleMark> marks;
  std::vector<std::size_t> over;
  std::vector<std::size_t> under;
};

inline OraclePositions oracle_positions(const Diagram& d) {
  OraclePositions p{oracle_marks(d), std::vector<std::size_t>(d.crossings().size()),
                    std::vector<std::size_t>(d.crossings().size())};
  for (std::size_t k = 0; k < p.marks.size(); ++k)
    if (p.marks[k].crossing >= 0) (p.marks[k].over ? p.over : p.under)[p.marks[k].crossing] = k;
  return p;
}

inline bool adjacent(const OraclePositions& p, std::size_t a, std::size_t b) {
  const std::size_t lo = std::min(a, b), hi = std::max(a, b);
  return hi == lo + 1 && p.marks[lo].strand == p.marks[hi].strand;
}

/// Exhaustive R1/R2 scan over all crossings and pairs.
inline bool oracle_has_r12(const Diagram& d) {
  const auto p = oracle_positions(d);
  const auto& xs = d.crossings();
  for (std::size_t a = 0; a < xs.size(); ++a) {
    if (adjacent(p, p.over[a], p.under[a])) return true;
    for (std::size_t b = a + 1; b < xs.size(); ++b)
      if (xs[a].sign == -xs[b].sign && adjacent(p, p.over[a], p.over[b]) && adjacent(p, p.under[a], p.under[b]))
        return true;
  }
  return false;
}

inline bool oracle_is_ou(const Diagram& d) {
  const auto p = oracle_positions(d);
  for (std::size_t k = 0; k + 1 < p.marks.size(); ++k)
    for (std::size_t l = k + 1; l < p.marks.size() && p.marks[l].strand == p.marks[k].strand; ++l)
      if (p.marks[k].crossing >= 0 && !p.marks[k].over && p.marks[l].crossing >= 0 && p.marks[l].over)
        return false;
  return true;
}

/// Closed cascade path exists iff some mark reaches itself (transitive closure).
inline bool oracle_is_acyclic(const Diagram& d) {
  const auto p = oracle_positions(d);
  const std::size_t n = p.marks.size();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (std::size_t k = 0; k + 1 < n; ++k)
    if (p.marks[k].strand == p.marks[k + 1].strand) reach[k][k + 1] = 1;
  for (std::size_t c = 0; c < d.crossings().size(); ++c) reach[p.over[c]][p.under[c]] = 1;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t a = 0; a < n; ++a)
      if (reach[a][m])
        for (std::size_t b = 0; b < n; ++b)
          if (reach[m][b]) reach[a][b] = 1;
  for (std::size_t a = 0; a < n; ++a)
    if (reach[a][a]) return false;
  return true;
}

/// Stacking by concatenating per-strand mark sequences, then renumbering.
inline OracleTidy oracle_compose(const Diagram& d1, const Diagram& d2) {
  struct Tok {
    int crossing;
    bool over;
  };
  const int n = d1.strand_count();
  std::vector<std::vector<Tok>> strands(n);
  std::vector<int> sign;
  int base = 0;
  for (const Diagram* d : {&d1, &d2}) {
    for (const auto& m : oracle_marks(*d))
      if (m.crossing >= 0) strands[m.strand].push_back({base + m.crossing, m.over});
    for (const auto& x : d->crossings()) sign.push_back(x.sign);
    base += static_cast<int>(d->crossings().size());
  }
  std::vector<std::int64_t> over(sign.size()), under(sign.size());
  OracleTidy out;
  std::int64_t next = 1;
  for (int s = 0; s < n; ++s) {
    for (const auto& t : strands[s]) (t.over ? over : under)[t.crossing] = next++;
    out.eos.push_back(next++);
  }
  for (std::size_t c = 0; c < sign.size(); ++c) out.crossings.insert({sign[c], over[c], under[c]});
  return out;
}

/// Every Gauss diagram with c crossings on n strands, up to key choice: each
/// crossing picks a sign and the 2c marks are distributed over the strands in
/// every order. Duplicates (relabelled crossings) are removed by canonical key.
inline std::vector<Diagram> all_diagrams(int n, int c) {
  std::map<CanonicalKey, Diagram> out;
  const int marks = 2 * c;
  std::vector<int> perm(marks);
  for (int k = 0; k < marks; ++k) perm[k] = k;  // perm[k]: mark id at global position k
  // Strand assignment: a weak composition of 2c into n parts.
  std::vector<int> sizes(n, 0);
  std::function<void(int, int)> rec = [&](int s, int left) {
    if (s == n - 1) {
      sizes[s] = left;
      std::vector<int> p = perm;
      std::sort(p.begin(), p.end());
      do {
        for (int signs = 0; signs < (1 << c); ++signs) {
          std::vector<Crossing> xs(c);
          std::vector<Rational> eos;
          int pos = 0;
          for (int t = 0; t < n; ++t) {
            for (int k = 0; k < sizes[t]; ++k, ++pos) {
              const int id = p[pos];
              MarkPosition mp{t, Rational(pos + t + 1)};
              (id % 2 == 0 ? xs[id / 2].over : xs[id / 2].under) = mp;
            }
            eos.emplace_back(pos + t + 1);
          }
          for (int k = 0; k < c; ++k) xs[k].sign = (signs >> k) & 1 ? -1 : 1;
          Diagram d(n, xs, eos);
          out.emplace(canonical_key(d), d);
        }
      } while (std::next_permutation(p.begin(), p.end()));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      sizes[s] = k;
      rec(s + 1, left - k);
    }
  };
  rec(0, marks);
  std::vector<Diagram> v;
  for (auto& [k, d] : out) v.push_back(d);
  return v;
}

}  // namespace ou::testing
