#include "ou/division.hpp"

#include <algorithm>
#include <deque>

#include "ou/errors.hpp"
#include "ou/rewrite.hpp"

namespace ou {

std::vector<Generator> all_generators(int n) {
  std::vector<Generator> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) {
        out.push_back({i, j, 1});
        out.push_back({i, j, -1});
      }
  return out;
}

Layout left_multiply(const Generator& g, const Layout& t) {
  Layout l(t.strand_count());
  l.append_crossing(g.sign, g.i - 1, g.j - 1);
  l.append(t);
  normalize(l);
  return l;
}

bool is_reduced_ou(const Layout& t) { return is_ou(t) && !find_r12(t); }

namespace {

Layout checked(const Diagram& t) {
  Layout l = Layout::from_diagram(t);
  if (!is_reduced_ou(l)) throw NotReducedOU();
  l.compact();
  return l;
}

std::shared_ptr<DivisionCache::Entry> compute_entry(const Layout& t) {
  auto e = std::make_shared<DivisionCache::Entry>();
  e->tangle = t;
  for (const auto& g : all_generators(t.strand_count())) {
    Layout q = left_multiply(g.inverse(), t);
    if (q.crossing_count() < t.crossing_count()) {
      e->divisors.push_back(g);
      e->quotients.push_back(std::move(q));
    }
  }
  return e;
}

}  // namespace

std::shared_ptr<const DivisionCache::Entry> DivisionCache::lookup(const Layout& t) {
  std::string key = t.canonical_text();
  {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  auto e = compute_entry(t);
  std::lock_guard lock(mu_);
  // A concurrent duplicate computes the same entry; keep whichever landed first.
  return memo_.emplace(std::move(key), std::move(e)).first->second;
}

std::shared_ptr<const DivisionCache::Entry> DivisionCache::lookup_key(const std::string& key) const {
  std::lock_guard lock(mu_);
  auto it = memo_.find(key);
  return it == memo_.end() ? nullptr : it->second;
}

std::size_t DivisionCache::size() const {
  std::lock_guard lock(mu_);
  return memo_.size();
}

std::vector<Generator> divisors(const Diagram& t) { return compute_entry(checked(t))->divisors; }

Diagram quotient(const Diagram& t, const Generator& g) {
  const Layout l = checked(t);
  if (g.i < 1 || g.j < 1 || g.i > l.strand_count() || g.j > l.strand_count() || g.i == g.j)
    throw InvalidWord(g.token() + " is not a generator on " + std::to_string(l.strand_count()) + " strands");
  Layout q = left_multiply(g.inverse(), l);
  if (q.crossing_count() >= l.crossing_count()) throw NotADivisor(g.token());
  return q.to_diagram();
}

PeelResult peel(const Diagram& t, std::mt19937_64* rng, DivisionCache* cache) {
  DivisionCache local;
  DivisionCache& memo = cache ? *cache : local;
  Layout cur = checked(t);
  VirtualBraidWord braid{cur.strand_count(), {}};
  for (;;) {
    auto e = memo.lookup(cur);
    if (e->divisors.empty()) break;
    std::size_t pick = 0;
    if (rng) pick = std::uniform_int_distribution<std::size_t>(0, e->divisors.size() - 1)(*rng);
    braid.letters.push_back(e->divisors[pick]);
    cur = e->quotients[pick];
  }
  return {std::move(braid), cur.to_diagram()};
}

ExtractionGraph extraction_graph(const Diagram& t, DivisionCache* cache) {
  DivisionCache local;
  DivisionCache& memo = cache ? *cache : local;
  ExtractionGraph g;
  const Layout start = checked(t);
  g.source = CanonicalKey(start.canonical_text());

  std::deque<Layout> frontier{start};
  g.nodes.emplace(g.source, ExtractionGraph::Node{start.to_diagram(), start.crossing_count()});
  while (!frontier.empty()) {
    Layout cur = std::move(frontier.front());
    frontier.pop_front();
    auto e = memo.lookup(cur);
    const CanonicalKey from(cur.canonical_text());
    for (std::size_t k = 0; k < e->divisors.size(); ++k) {
      const Layout& q = e->quotients[k];
      CanonicalKey to(q.canonical_text());
      g.edges.push_back({from, e->divisors[k], to});
      if (g.nodes.emplace(to, ExtractionGraph::Node{q.to_diagram(), q.crossing_count()}).second)
        frontier.push_back(q);
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
    if (a.from != b.from) return a.from < b.from;
    return a.label < b.label;
  });

  Layout core = start;
  for (;;) {
    auto e = memo.lookup(core);
    if (e->divisors.empty()) break;
    core = e->quotients.front();
  }
  g.sink = CanonicalKey(core.canonical_text());
  return g;
}

namespace {

std::string dot_label(const Generator& g) {
  std::string s = "s(" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
  if (g.sign < 0) s += '\'';
  return s;
}

}  // namespace

std::string to_dot(const ExtractionGraph& g) {
  std::map<CanonicalKey, std::size_t> id;
  for (const auto& [k, _] : g.nodes) id.emplace(k, id.size());
  std::string out = "digraph {\n";
  for (const auto& [k, node] : g.nodes)
    out += "  \"k" + std::to_string(id.at(k)) + "\" [label=\"" + std::to_string(node.xi) + "\"];\n";
  for (const auto& e : g.edges)
    out += "  \"k" + std::to_string(id.at(e.from)) + "\" -> \"k" + std::to_string(id.at(e.to)) + "\" [label=\"" +
           dot_label(e.label) + "\"];\n";
  out += "}\n";
  return out;
}

std::string to_structured(const ExtractionGraph& g) {
  std::string out;
  for (const auto& [k, node] : g.nodes) out += k.hash_hex() + " " + std::to_string(node.xi) + "\n";
  for (const auto& e : g.edges) out += e.from.hash_hex() + " " + e.label.token() + " " + e.to.hash_hex() + "\n";
  return out;
}

}  // namespace ou
