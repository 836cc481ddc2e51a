#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "ou/braid.hpp"
#include "ou/diagram.hpp"
#include "ou/layout.hpp"

namespace ou {

/// All 2n(n-1) generators on n strands in (i, j, sign) order.
std::vector<Generator> all_generators(int n);

/// Generators g with xi(g^-1 T) < xi(T), sorted. Throws NotReducedOU.
std::vector<Generator> divisors(const Diagram& t);

/// Reduced OU form of g^-1 T. Throws NotADivisor or NotReducedOU.
Diagram quotient(const Diagram& t, const Generator& g);

struct PeelResult {
  VirtualBraidWord braid;
  Diagram core;
};

/// Memo of divisor sets and quotients keyed by canonical text. Safe to share
/// between threads.
class DivisionCache {
public:
  struct Entry {
    Layout tangle;
    std::vector<Generator> divisors;
    std::vector<Layout> quotients;  // parallel to divisors
  };

  /// Divisors and quotients of a reduced OU layout (compacted).
  std::shared_ptr<const Entry> lookup(const Layout& t);
  std::shared_ptr<const Entry> lookup_key(const std::string& key) const;
  std::size_t size() const;

private:
  mutable std::mutex mu_;
  std::unordered_map<std::string, std::shared_ptr<const Entry>> memo_;
};

/// Extracts divisors until none remain, smallest first, or uniformly at random
/// when rng is given. Throws NotReducedOU.
PeelResult peel(const Diagram& t, std::mt19937_64* rng = nullptr, DivisionCache* cache = nullptr);

struct ExtractionGraph {
  struct Node {
    Diagram tangle;
    std::size_t xi = 0;
  };
  struct Edge {
    CanonicalKey from;
    Generator label;
    CanonicalKey to;
  };
  std::map<CanonicalKey, Node> nodes;
  std::vector<Edge> edges;  // sorted by (from, label)
  CanonicalKey source;
  CanonicalKey sink;
};

/// Closure of divisor edges from T. Throws NotReducedOU.
ExtractionGraph extraction_graph(const Diagram& t, DivisionCache* cache = nullptr);

std::string to_dot(const ExtractionGraph& g);

/// Node table `<key-hash> <xi>` then edge lines `<from-hash> <token> <to-hash>`.
std::string to_structured(const ExtractionGraph& g);

// Layout-level helpers.

/// Reduced OU form of iota(g) * t.
Layout left_multiply(const Generator& g, const Layout& t);
bool is_reduced_ou(const Layout& t);

}  // namespace ou
