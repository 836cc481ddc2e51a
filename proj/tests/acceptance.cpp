// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "helpers.hpp"
#include "ou/braid.hpp"
#include "ou/division.hpp"
#include "ou/enumerate.hpp"
#include "ou/rewrite.hpp"

using namespace ou;
using namespace ou::testing;

namespace {

using Counts = std::vector<std::uint64_t>;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects mismatches; the first few are reported.
class Findings {
public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  Outcome result(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " mismatch(es): " + notes_};
  }

private:
  std::size_t failures_ = 0;
  std::string notes_;
};

int workers() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

std::string show(const Counts& c) {
  std::string s;
  for (auto v : c) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s;
}

void table(Findings& f, int n, int m, BraidKind kind, const Counts& want_from_1) {
  TabulateOptions o;
  o.workers = workers();
  const auto r = tabulate(n, m, kind, o);
  const Counts got(r.count_exactly.begin() + 1, r.count_exactly.end());
  f.expect(got == want_from_1, to_string(kind) + " n=" + std::to_string(n) + " got [" + show(got) + "] want [" +
                                   show(want_from_1) + "]");
}

Outcome ac1() {
  Findings f;
  TabulateOptions o;
  o.workers = workers();
  const auto two = tabulate(2, 6, BraidKind::Virtual, o).count_exactly;
  f.expect(two == Counts{1, 4, 12, 36, 108, 324, 972}, "virtual n=2 got [" + show(two) + "]");
  table(f, 3, 4, BraidKind::Virtual, {12, 132, 1416, 15156});
  table(f, 4, 3, BraidKind::Virtual, {24, 504, 10344});
  table(f, 5, 2, BraidKind::Virtual, {40, 1320});
  return f.result("n=2 m<=6, n=3 m<=4, n=4 m<=3, n=5 m<=2 exact");
}

Outcome ac2() {
  Findings f;
  table(f, 2, 9, BraidKind::Classical, {2, 2, 2, 2, 2, 2, 2, 2, 2});
  table(f, 3, 9, BraidKind::Classical, {4, 12, 30, 68, 148, 314, 656, 1356, 2782});
  table(f, 4, 5, BraidKind::Classical, {6, 26, 98, 338, 1110});
  table(f, 5, 4, BraidKind::Classical, {8, 44, 206, 884});
  return f.result("n=2 m<=9, n=3 m<=9, n=4 m<=5, n=5 m<=4 exact");
}

Outcome ac3() {
  Findings f;
  f.expect(fibonacci_check(9, workers()), "fibonacci_check(9) is false");
  return f.result("6*2^m-2F(m+3)-2 matches m=1..9");
}

Outcome ac4() {
  Findings f;
  const auto scr = parse_vpb("vpb 3: s2,1' s1,3 s3,1 s1,3 s3,1 s1,3 s2,3 s2,1");
  const auto rhs = parse_vpb("vpb 3: s2,3 s1,3 s3,1 s1,3 s3,1 s1,3");
  f.expect(braids_equal(scr, rhs), "SCR words distinct");
  const auto x = crossing_number(ch(scr));
  f.expect(x == 18, "Ch(SCR) has " + std::to_string(x) + " crossings");
  // u (lhs) v against u (rhs) v for random u, v and random strand labels.
  std::mt19937_64 rng(4);
  int trials = 0;
  for (; trials < 1000; ++trials) {
    const int n = 4 + trials % 2;
    std::vector<int> s(static_cast<std::size_t>(n));
    std::iota(s.begin(), s.end(), 1);
    std::shuffle(s.begin(), s.end(), rng);
    const int i = s[0], j = s[1], k = s[2], l = s[3];
    VirtualBraidWord lhs{n, {}}, rhs{n, {}};
    if (trials % 2 == 0) {
      lhs.letters = {{i, j, 1}, {i, k, 1}, {j, k, 1}};
      rhs.letters = {{j, k, 1}, {i, k, 1}, {i, j, 1}};
    } else {
      const Generator a{i, j, rng() % 2 ? 1 : -1}, b{k, l, rng() % 2 ? 1 : -1};
      lhs.letters = {a, b};
      rhs.letters = {b, a};
    }
    const auto u = random_word(rng, n, static_cast<int>(rng() % 4));
    const auto v = random_word(rng, n, static_cast<int>(rng() % 4));
    f.expect(braids_equal(u * lhs * v, u * rhs * v), "relation fails in " + (u * lhs * v).to_string());
  }
  return f.result("SCR equal, 18 crossings, " + std::to_string(trials) + " relation instances (500 of each relation)");
}

Outcome ac5() {
  Findings f;
  for (int k = 1; k <= 6; ++k) {
    const auto x = xi(iota(twist(k)));
    f.expect(x == static_cast<std::size_t>(2 * k - 1), "xi(twist " + std::to_string(k) + ") = " + std::to_string(x));
  }
  const Generator s12{1, 2, 1}, s21{2, 1, 1};
  Diagram t = ch(twist(4));
  for (const auto& g : {s12, s21, s12, s21}) {
    const auto ds = divisors(t);
    f.expect(ds == std::vector<Generator>{g}, "divisor of CR" + std::to_string((crossing_number(t) + 1) / 2) +
                                                  " is not exactly " + g.token());
    if (!std::binary_search(ds.begin(), ds.end(), g)) break;
    const Diagram q = quotient(t, g);
    f.expect(q == ch(twist(static_cast<int>(crossing_number(t) + 1) / 2 - 1)), "quotient is not the next roll");
    t = q;
  }
  f.expect(t == Diagram::identity(2), "chain does not end at CR0");
  return f.result("xi = 2k-1 for k=1..6; CR4 -s1,2-> CR3 -s2,1-> CR2 -s1,2-> CR1 -s2,1-> CR0");
}

Outcome ac6() {
  Findings f;
  auto shape = [&](const ExtractionGraph& g, const std::string& name, std::size_t nodes, std::size_t edges) {
    f.expect(g.nodes.size() == nodes && g.edges.size() == edges,
             name + " has " + std::to_string(g.nodes.size()) + " nodes, " + std::to_string(g.edges.size()) + " edges");
  };
  const auto tess = extraction_graph(ch(classical_to_vpb(ClassicalBraidWord{8, {1, 3, 5, 7}}).first));
  shape(tess, "tesseract", 16, 32);
  std::map<CanonicalKey, int> degree;
  for (const auto& e : tess.edges) ++degree[e.from], ++degree[e.to];
  for (const auto& [k, node] : tess.nodes) f.expect(degree[k] == 4, "tesseract node of degree " + std::to_string(degree[k]));

  const auto hex = extraction_graph(ch(parse_vpb("vpb 3: s1,2 s1,3 s2,3")));
  shape(hex, "hexagon", 6, 6);
  std::size_t out = 0;
  for (const auto& e : hex.edges) out += e.from == hex.source;
  f.expect(out == 2, "hexagon source out-degree " + std::to_string(out));

  const auto perm = extraction_graph(ch(classical_to_vpb(ClassicalBraidWord{4, {1, 2, 1, 3, 2, 1}}).first));
  shape(perm, "permutahedron", 24, 36);
  return f.result("tesseract 16/32 degree 4, hexagon 6/6 source out 2, n=4 Garside 24/36");
}

Outcome ac7() {
  Findings f;
  std::size_t candidates = 0, witnesses = 0;
  for (const auto& d : all_diagrams(2, 2)) {
    if (!oracle_is_ou(d) || oracle_has_r12(d)) continue;
    ++candidates;
    if (divisors(d).empty()) ++witnesses;
  }
  f.expect(witnesses > 0, "no indivisible 2-crossing reduced OU diagram among " + std::to_string(candidates));
  return f.result(std::to_string(witnesses) + " of " + std::to_string(candidates) +
                  " reduced OU 2-crossing diagrams on 2 strands have no divisor");
}

Outcome ac8() {
  Findings f;
  struct Case {
    VirtualBraidWord word;
  };
  std::vector<Case> corpus;
  for (int n = 2; n <= 3; ++n) {
    for (auto kind : {BraidKind::Virtual, BraidKind::Classical}) {
      TabulateOptions one, eight;
      eight.workers = 8;
      const auto a = tabulate(n, 3, kind, one);
      const auto b = tabulate(n, 3, kind, eight);
      f.expect(a.count_exactly == b.count_exactly && a.representatives_text() == b.representatives_text(),
               "1 vs 8 workers differ for " + to_string(kind) + " n=" + std::to_string(n));
      const Alphabet alpha(n, kind);
      for (const auto& rep : a.representatives) {
        VirtualBraidWord w{n, {}};
        if (kind == BraidKind::Virtual) {
          for (auto l : rep.word) w.letters.push_back(alpha.virtual_letter(l));
        } else {
          ClassicalBraidWord c{n, {}};
          for (auto l : rep.word) c.letters.push_back(alpha.classical_letter(l));
          w = classical_to_vpb(c).first;
        }
        corpus.push_back({w});
      }
    }
  }

  DivisionCache cache;
  std::size_t dichotomy_checks = 0;
  for (std::size_t c = 0; c < corpus.size(); ++c) {
    const auto& w = corpus[c].word;
    const Diagram d = iota(w);
    const Diagram t = ou_normal_form(d);
    const CanonicalKey key = canonical_key(t);
    const auto det = peel(t, nullptr, &cache);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      std::mt19937_64 pick(seed * 7919 + c);
      NormalFormOptions o;
      o.choose = [&](std::size_t count) { return static_cast<std::size_t>(pick() % count); };
      f.expect(canonical_key(ou_normal_form(d, o)) == key, "normal form depends on glide order for " + w.to_string());
      const auto p = peel(t, &pick, &cache);
      f.expect(canonical_key(p.core) == canonical_key(det.core) && braids_equal(p.braid, det.braid),
               "peel depends on divisor order for " + w.to_string());
    }
    const auto x = crossing_number(t);
    const auto ds = divisors(t);
    for (const auto& g : all_generators(w.n)) {
      ++dichotomy_checks;
      const auto after = xi(compose(iota(VirtualBraidWord{w.n, {g.inverse()}}), t));
      f.expect(after != x, "xi unchanged by " + g.inverse().token() + " on " + w.to_string());
    }
    for (const auto& g : ds) {
      const Diagram back = ou_normal_form(compose(iota(VirtualBraidWord{w.n, {g}}), quotient(t, g)));
      f.expect(canonical_key(back) == key, "multiply-back fails for " + g.token() + " on " + w.to_string());
    }
  }
  return f.result(std::to_string(corpus.size()) + " tangles x 100 orderings; " + std::to_string(dichotomy_checks) +
                  " dichotomy checks; 1 vs 8 workers identical");
}

Outcome ac9() {
  std::mt19937_64 rng(9);
  std::size_t samples = 0, violations = 0, max_after = 0;
  double worst_ratio = 0;
  std::string first;
  for (; samples < 10000; ++samples) {
    const int n = 2 + static_cast<int>(samples % 3);
    const Diagram t = ch(random_word(rng, n, static_cast<int>(rng() % 7)));
    const auto g = random_word(rng, n, 1);
    const auto p = crossing_number(t);
    const auto after = xi(compose(iota(g), t));
    max_after = std::max(max_after, after);
    worst_ratio = std::max(worst_ratio, static_cast<double>(after) / static_cast<double>(3 * p + 1));
    if (after > 3 * p + 1) {
      if (violations++ == 0) first = g.to_string() + " on xi " + std::to_string(p) + " gives " + std::to_string(after);
    }
  }
  char ratio[32];
  std::snprintf(ratio, sizeof ratio, "%.3f", worst_ratio);
  if (violations) return {false, std::to_string(violations) + " violations of 3p+1 (first: " + first + ")"};
  return {true, std::to_string(samples) + " samples, 0 violations, max xi/(3p+1) = " + ratio};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 virtual table", ac1},
      {"AC2 classical table", ac2},
      {"AC3 fibonacci fit", ac3},
      {"AC4 complete-invariant identities", ac4},
      {"AC5 cinnamon rolls", ac5},
      {"AC6 extraction-graph shapes", ac6},
      {"AC7 non-surjectivity witness", ac7},
      {"AC8 schedule and order independence", ac8},
      {"AC9 growth bound 3p+1", ac9},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char took[32];
    std::snprintf(took, sizeof took, "%.2fs", secs);
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << " (" << took << ")" << std::endl;
    failed += !o.pass;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
