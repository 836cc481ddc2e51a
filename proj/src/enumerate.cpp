#include "ou/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "ou/division.hpp"
#include "ou/errors.hpp"
#include "ou/rewrite.hpp"

namespace ou {

using Word = std::vector<std::uint16_t>;

std::string to_string(BraidKind k) { return k == BraidKind::Virtual ? "virtual" : "classical"; }

BraidKind parse_kind(std::string_view s) {
  if (s == "virtual") return BraidKind::Virtual;
  if (s == "classical") return BraidKind::Classical;
  throw std::invalid_argument("unknown braid kind '" + std::string(s) + "'");
}

Alphabet::Alphabet(int n, BraidKind kind) : n_(n), kind_(kind) {
  if (n < 2) throw std::invalid_argument("need at least 2 strands");
  if (kind == BraidKind::Virtual) {
    virt_ = all_generators(n);
    size_ = virt_.size();
  } else {
    for (int k = 1; k < n; ++k) {
      classical_.push_back(k);
      classical_.push_back(-k);
    }
    size_ = classical_.size();
  }
  followers_.resize(size_);
  for (std::size_t g = 0; g < size_; ++g)
    for (std::size_t h = 0; h < size_; ++h)
      if (h != inverse(g) && !(commutes(g, h) && h < g)) followers_[g].push_back(h);
}

std::string Alphabet::token(std::size_t letter) const {
  return kind_ == BraidKind::Virtual ? virt_[letter].token() : std::to_string(classical_[letter]);
}

bool Alphabet::commutes(std::size_t a, std::size_t b) const {
  if (kind_ == BraidKind::Virtual) return virt_[a].disjoint(virt_[b]);
  return std::abs(std::abs(classical_[a]) - std::abs(classical_[b])) >= 2;
}

std::string Alphabet::format_word(const Word& word) const {
  std::string out = (kind_ == BraidKind::Virtual ? "vpb " : "br ") + std::to_string(n_) + ":";
  for (auto l : word) out += " " + token(l);
  return out;
}

std::vector<std::string> generators(int n, BraidKind kind) {
  Alphabet a(n, kind);
  std::vector<std::string> out;
  for (std::size_t g = 0; g < a.size(); ++g) out.push_back(a.token(g));
  return out;
}

bool is_proud(const Alphabet& a, const Word& word) {
  for (std::size_t t = 0; t + 1 < word.size(); ++t) {
    if (word[t + 1] == a.inverse(word[t])) return false;
    if (a.commutes(word[t], word[t + 1]) && word[t + 1] < word[t]) return false;
  }
  return true;
}

namespace {

// Ch of the word so far, plus the strand permutation for classical words.
struct WalkState {
  Layout ch;
  Permutation perm;
};

WalkState root_state(const Alphabet& a) { return {Layout(a.n()), Permutation::identity(a.n())}; }

WalkState extend(const Alphabet& a, const WalkState& s, std::size_t letter) {
  WalkState out = s;
  Generator g;
  if (a.kind() == BraidKind::Virtual) {
    g = a.virtual_letter(letter);
  } else {
    const int k = a.classical_letter(letter);
    const int p = std::abs(k) - 1;
    const int left = out.perm.image[p];
    const int right = out.perm.image[p + 1];
    g = k > 0 ? Generator{left, right, 1} : Generator{right, left, -1};
    std::swap(out.perm.image[p], out.perm.image[p + 1]);
  }
  out.ch.append_crossing(g.sign, g.i - 1, g.j - 1);
  normalize(out.ch);
  return out;
}

std::string state_key(const Alphabet& a, const WalkState& s) {
  if (a.kind() == BraidKind::Virtual) return s.ch.canonical_text();
  return s.perm.to_string() + "\n" + s.ch.canonical_text();
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

using Visitor = std::function<void(const Word&, const WalkState&)>;

// Depth-first over proud extensions of `word` up to length max_len, visiting
// `word` itself first. Children are visited in ascending letter order.
void walk(const Alphabet& a, Word& word, const WalkState& state, std::size_t max_len, const Visitor& visit) {
  visit(word, state);
  if (word.size() >= max_len) return;
  auto step = [&](std::size_t l) {
    word.push_back(static_cast<std::uint16_t>(l));
    walk(a, word, extend(a, state, l), max_len, visit);
    word.pop_back();
  };
  if (word.empty()) {
    for (std::size_t l = 0; l < a.size(); ++l) step(l);
  } else {
    for (auto l : a.proud_followers(word.back())) step(l);
  }
}

// Proud words of exactly `len` letters, in lexicographic order.
std::vector<Word> proud_prefixes(const Alphabet& a, std::size_t len) {
  std::vector<Word> out{Word{}};
  for (std::size_t d = 0; d < len; ++d) {
    std::vector<Word> grown;
    for (const auto& w : out) {
      if (w.empty()) {
        for (std::size_t l = 0; l < a.size(); ++l) grown.push_back({static_cast<std::uint16_t>(l)});
      } else {
        for (auto l : a.proud_followers(w.back())) {
          Word x = w;
          x.push_back(static_cast<std::uint16_t>(l));
          grown.push_back(std::move(x));
        }
      }
    }
    out = std::move(grown);
  }
  return out;
}

// Runs one walk per task prefix on a pool of workers. Each worker gets its own
// context object built by make_ctx; the visitor receives it.
template <typename Ctx, typename MakeCtx, typename Visit>
std::vector<Ctx> run_partitioned(const Alphabet& a, std::size_t max_len, std::size_t prefix_len, int workers,
                                 MakeCtx make_ctx, Visit visit) {
  const auto tasks = proud_prefixes(a, prefix_len);
  const int nw = std::max(1, std::min<int>(workers, static_cast<int>(tasks.size())));
  std::vector<Ctx> ctx;
  for (int w = 0; w < nw; ++w) ctx.push_back(make_ctx());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(nw);

  auto body = [&](int w) {
    try {
      for (std::size_t t = next++; t < tasks.size(); t = next++) {
        Word word;
        WalkState s = root_state(a);
        for (auto l : tasks[t]) {
          s = extend(a, s, l);
          word.push_back(l);
        }
        walk(a, word, s, max_len, [&](const Word& wd, const WalkState& st) { visit(ctx[w], wd, st); });
      }
    } catch (...) {
      errors[w] = std::current_exception();
      next = tasks.size();
    }
  };
  if (nw == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < nw; ++w) pool.emplace_back(body, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return ctx;
}

struct Best {
  Word word;
};

using KeyIndex = std::unordered_map<std::string, Best>;

void offer(KeyIndex& idx, std::string key, const Word& word) {
  auto [it, fresh] = idx.try_emplace(std::move(key), Best{word});
  if (!fresh && shortlex_less(word, it->second.word)) it->second.word = word;
}

}  // namespace

std::string braid_key(const Alphabet& a, const Word& word) {
  WalkState s = root_state(a);
  for (auto l : word) s = extend(a, s, l);
  return state_key(a, s);
}

TabulationReport tabulate(int n, int m, BraidKind kind, const TabulateOptions& opts) {
  if (m < 0) throw std::invalid_argument("crossing bound must be non-negative");
  const Alphabet a(n, kind);
  const auto max_len = static_cast<std::size_t>(m);
  const std::size_t prefix_len = std::min<std::size_t>(max_len, 2);

  KeyIndex merged;
  // Words shorter than the task prefixes are visited here directly.
  for (std::size_t d = 0; d < prefix_len; ++d)
    for (const auto& w : proud_prefixes(a, d)) offer(merged, braid_key(a, w), w);

  const std::size_t cap = opts.max_keys;
  auto locals = run_partitioned<KeyIndex>(
      a, max_len, prefix_len, opts.workers, [] { return KeyIndex{}; },
      [&](KeyIndex& idx, const Word& w, const WalkState& s) {
        offer(idx, state_key(a, s), w);
        if (idx.size() > cap)
          throw ResourceLimit("more than " + std::to_string(cap) + " distinct braids; raise the key cap");
      });
  for (auto& local : locals)
    for (auto& [k, b] : local) offer(merged, k, b.word);
  if (merged.size() > cap)
    throw ResourceLimit("more than " + std::to_string(cap) + " distinct braids; raise the key cap");

  TabulationReport r;
  r.n = n;
  r.m = m;
  r.kind = kind;
  r.count_exactly.assign(max_len + 1, 0);
  r.representatives.reserve(merged.size());
  for (auto& [k, b] : merged) {
    ++r.count_exactly[b.word.size()];
    r.representatives.push_back({b.word.size(), b.word, hex64(fnv1a64(k))});
  }
  std::sort(r.representatives.begin(), r.representatives.end(),
            [](const Representative& x, const Representative& y) { return shortlex_less(x.word, y.word); });
  return r;
}

std::string TabulationReport::representatives_text() const {
  const Alphabet a(n, kind);
  std::string out;
  for (const auto& rep : representatives) {
    out += to_string(kind) + " " + std::to_string(n) + " " + std::to_string(rep.length);
    for (auto l : rep.word) out += " " + a.token(l);
    out += " " + rep.key_hash + "\n";
  }
  return out;
}

std::string TabulationReport::table_text() const {
  std::ostringstream os;
  os << to_string(kind) << " braids on " << n << " strands\n";
  os << std::setw(4) << "m" << std::setw(14) << "exact" << std::setw(14) << "cumulative" << "\n";
  std::uint64_t cum = 0;
  for (std::size_t k = 0; k < count_exactly.size(); ++k) {
    cum += count_exactly[k];
    os << std::setw(4) << k << std::setw(14) << count_exactly[k] << std::setw(14) << cum << "\n";
  }
  return os.str();
}

std::string TabulationReport::structured_text() const {
  std::string out;
  for (std::size_t k = 0; k < count_exactly.size(); ++k)
    out += std::to_string(n) + " " + std::to_string(k) + " " + to_string(kind) + " " +
           std::to_string(count_exactly[k]) + "\n";
  return out;
}

WorstBraid worst_braid(int n, int m, BraidKind kind, int workers) {
  if (m < 1) throw std::invalid_argument("word length must be positive");
  const Alphabet a(n, kind);
  const auto len = static_cast<std::size_t>(m);
  struct Ctx {
    bool any = false;
    std::size_t xi = 0;
    Word word;
  };
  auto better = [](std::size_t xi, const Word& w, const Ctx& c) {
    return !c.any || xi > c.xi || (xi == c.xi && w < c.word);
  };
  auto locals = run_partitioned<Ctx>(
      a, len, std::min<std::size_t>(len, 2), workers, [] { return Ctx{}; },
      [&](Ctx& c, const Word& w, const WalkState& s) {
        if (w.size() != len) return;
        const std::size_t x = s.ch.crossing_count();
        if (better(x, w, c)) c = {true, x, w};
      });
  Ctx best;
  for (const auto& c : locals)
    if (c.any && better(c.xi, c.word, best)) best = c;
  return {best.word, a.format_word(best.word), best.xi};
}

std::uint64_t fibonacci_formula(int m) {
  std::uint64_t f1 = 1, f2 = 1;  // F_1, F_2
  for (int k = 3; k <= m + 3; ++k) {
    const std::uint64_t f = f1 + f2;
    f1 = f2;
    f2 = f;
  }
  return 6 * (std::uint64_t{1} << m) - 2 * f2 - 2;
}

bool fibonacci_check(int m_max, int workers) {
  if (m_max < 1) throw std::invalid_argument("fibonacci_check needs m_max >= 1");
  TabulateOptions opts;
  opts.workers = workers;
  const auto r = tabulate(3, m_max, BraidKind::Classical, opts);
  for (int m = 1; m <= m_max; ++m)
    if (r.count_exactly[m] != fibonacci_formula(m)) return false;
  return true;
}

}  // namespace ou
