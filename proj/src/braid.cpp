#include "ou/braid.hpp"

#include <cctype>
#include <cstdlib>

#include "ou/errors.hpp"

namespace ou {

std::string Generator::token() const {
  std::string out = "s" + std::to_string(i) + "," + std::to_string(j);
  if (sign < 0) out += '\'';
  return out;
}

void VirtualBraidWord::validate() const {
  if (n < 1) throw InvalidWord("strand count must be positive");
  for (std::size_t t = 0; t < letters.size(); ++t) {
    const auto& g = letters[t];
    if (g.i < 1 || g.i > n || g.j < 1 || g.j > n || g.i == g.j || (g.sign != 1 && g.sign != -1))
      throw InvalidWord("letter " + std::to_string(t + 1) + " (" + g.token() + ") is not a generator on " +
                        std::to_string(n) + " strands");
  }
}

VirtualBraidWord VirtualBraidWord::operator*(const VirtualBraidWord& rhs) const {
  if (n != rhs.n) throw StrandCountMismatch(n, rhs.n);
  VirtualBraidWord out = *this;
  out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return out;
}

std::string VirtualBraidWord::to_string() const {
  std::string out = "vpb " + std::to_string(n) + ":";
  for (const auto& g : letters) out += " " + g.token();
  return out;
}

void ClassicalBraidWord::validate() const {
  if (n < 1) throw InvalidWord("strand count must be positive");
  for (std::size_t t = 0; t < letters.size(); ++t) {
    const int k = letters[t];
    if (k == 0 || std::abs(k) > n - 1)
      throw InvalidWord("letter " + std::to_string(t + 1) + " (" + std::to_string(k) +
                        ") is not a classical generator on " + std::to_string(n) + " strands");
  }
}

std::string ClassicalBraidWord::to_string() const {
  std::string out = "br " + std::to_string(n) + ":";
  for (int k : letters) out += " " + std::to_string(k);
  return out;
}

Permutation Permutation::identity(int n) {
  Permutation p;
  for (int s = 1; s <= n; ++s) p.image.push_back(s);
  return p;
}

std::string Permutation::to_string() const {
  std::string out = "perm";
  for (int s : image) out += " " + std::to_string(s);
  return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty() || s.size() > 9) return false;
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
    if (s.size() == 1) return false;
  }
  int v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    v = v * 10 + (s[i] - '0');
  }
  out = neg ? -v : v;
  return true;
}

// Splits "<tag> <n>: rest" and returns n and the body.
std::pair<int, std::string_view> parse_header(std::string_view text, std::string_view tag) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw InvalidWord("expected '" + std::string(tag) + " <n>:' header");
  auto head = split_ws(text.substr(0, colon));
  int n = 0;
  if (head.size() != 2 || head[0] != tag || !parse_int(head[1], n) || n < 1)
    throw InvalidWord("expected '" + std::string(tag) + " <n>:' header");
  return {n, text.substr(colon + 1)};
}

}  // namespace

VirtualBraidWord parse_vpb(std::string_view text) {
  auto [n, body] = parse_header(text, "vpb");
  VirtualBraidWord w{n, {}};
  auto toks = split_ws(body);
  for (std::size_t t = 0; t < toks.size(); ++t) {
    std::string_view tok = toks[t];
    auto bad = [&] {
      return InvalidWord("token " + std::to_string(t + 1) + " ('" + std::string(tok) + "') is not a generator");
    };
    Generator g;
    std::string_view rest = tok;
    if (rest.empty() || rest[0] != 's') throw bad();
    rest.remove_prefix(1);
    if (!rest.empty() && rest.back() == '\'') {
      g.sign = -1;
      rest.remove_suffix(1);
    }
    auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw bad();
    if (!parse_int(rest.substr(0, comma), g.i) || !parse_int(rest.substr(comma + 1), g.j)) throw bad();
    if (g.i < 1 || g.j < 1 || g.i > n || g.j > n || g.i == g.j)
      throw InvalidWord("token " + std::to_string(t + 1) + " ('" + std::string(tok) +
                        "') is not a generator on " + std::to_string(n) + " strands");
    w.letters.push_back(g);
  }
  return w;
}

ClassicalBraidWord parse_br(std::string_view text) {
  auto [n, body] = parse_header(text, "br");
  ClassicalBraidWord b{n, {}};
  auto toks = split_ws(body);
  for (std::size_t t = 0; t < toks.size(); ++t) {
    int k = 0;
    if (!parse_int(toks[t], k) || k == 0 || std::abs(k) > n - 1)
      throw InvalidWord("token " + std::to_string(t + 1) + " ('" + std::string(toks[t]) +
                        "') is not a classical generator on " + std::to_string(n) + " strands");
    b.letters.push_back(k);
  }
  return b;
}

Layout iota_layout(const VirtualBraidWord& w) {
  w.validate();
  Layout l(w.n);
  for (const auto& g : w.letters) l.append_crossing(g.sign, g.i - 1, g.j - 1);
  return l;
}

Diagram iota(const VirtualBraidWord& w) { return iota_layout(w).to_diagram(); }

Layout ch_layout(const VirtualBraidWord& w, const NormalFormOptions& opts) {
  Layout l = iota_layout(w);
  normalize(l, opts);
  return l;
}

Diagram ch(const VirtualBraidWord& w, const NormalFormOptions& opts) { return ch_layout(w, opts).to_diagram(); }

bool braids_equal(const VirtualBraidWord& a, const VirtualBraidWord& b) {
  if (a.n != b.n) throw StrandCountMismatch(a.n, b.n);
  return ch_layout(a).canonical_text() == ch_layout(b).canonical_text();
}

VirtualBraidWord inverse(const VirtualBraidWord& w) {
  VirtualBraidWord out{w.n, {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(it->inverse());
  return out;
}

std::pair<VirtualBraidWord, Permutation> classical_to_vpb(const ClassicalBraidWord& b) {
  b.validate();
  Permutation pi = Permutation::identity(b.n);
  VirtualBraidWord w{b.n, {}};
  for (int k : b.letters) {
    const int p = std::abs(k) - 1;
    const int left = pi.image[p];
    const int right = pi.image[p + 1];
    w.letters.push_back(k > 0 ? Generator{left, right, 1} : Generator{right, left, -1});
    std::swap(pi.image[p], pi.image[p + 1]);
  }
  return {std::move(w), std::move(pi)};
}

std::string classical_key(const ClassicalBraidWord& b) {
  auto [w, pi] = classical_to_vpb(b);
  return pi.to_string() + "\n" + ch_layout(w).canonical_text();
}

}  // namespace ou
