#include "ou/diagram.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>

#include "ou/errors.hpp"

namespace ou {

namespace {

struct StrandMark {
  Rational key;
  std::size_t crossing;
  bool over;
};

// Marks of every strand, sorted by key.
std::vector<std::vector<StrandMark>> marks_by_strand(const Diagram& d) {
  std::vector<std::vector<StrandMark>> out(d.strand_count());
  const auto& xs = d.crossings();
  for (std::size_t c = 0; c < xs.size(); ++c) {
    out[xs[c].over.strand].push_back({xs[c].over.key, c, true});
    out[xs[c].under.strand].push_back({xs[c].under.key, c, false});
  }
  for (auto& s : out)
    std::sort(s.begin(), s.end(), [](const StrandMark& a, const StrandMark& b) { return a.key < b.key; });
  return out;
}

}  // namespace

Diagram::Diagram(int n, std::vector<Crossing> crossings, std::vector<Rational> eos_keys)
    : n_(n), crossings_(std::move(crossings)), eos_(std::move(eos_keys)) {
  if (n_ < 1) throw InvalidDiagram("strand count must be positive");
  if (eos_.size() != static_cast<std::size_t>(n_))
    throw InvalidDiagram("expected " + std::to_string(n_) + " EOS keys, got " + std::to_string(eos_.size()));
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    const auto& x = crossings_[c];
    if (x.sign != 1 && x.sign != -1) throw InvalidDiagram("crossing " + std::to_string(c) + " has invalid sign");
    for (const auto* m : {&x.over, &x.under})
      if (m->strand < 0 || m->strand >= n_)
        throw InvalidDiagram("crossing " + std::to_string(c) + " refers to a strand out of range");
  }
  auto strands = marks_by_strand(*this);
  for (int s = 0; s < n_; ++s) {
    const auto& ms = strands[s];
    for (std::size_t t = 0; t + 1 < ms.size(); ++t)
      if (ms[t].key == ms[t + 1].key)
        throw InvalidDiagram("duplicate key " + ms[t].key.to_string() + " on strand " + std::to_string(s + 1));
    if (!ms.empty() && !(ms.back().key < eos_[s]))
      throw InvalidDiagram("EOS key " + eos_[s].to_string() + " is not the largest on strand " +
                           std::to_string(s + 1));
  }
}

Diagram Diagram::identity(int n) {
  std::vector<Rational> eos;
  for (int s = 1; s <= n; ++s) eos.emplace_back(s);
  return Diagram(n, {}, std::move(eos));
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string CanonicalKey::hash_hex() const { return hex64(fnv1a64(bytes_)); }

Diagram tidy(const Diagram& d) {
  auto strands = marks_by_strand(d);
  std::vector<Crossing> xs(d.crossings().size());
  std::vector<Rational> eos(d.strand_count());
  std::int64_t next = 1;
  for (int s = 0; s < d.strand_count(); ++s) {
    for (const auto& m : strands[s]) {
      auto& x = xs[m.crossing];
      x.sign = d.crossings()[m.crossing].sign;
      (m.over ? x.over : x.under) = MarkPosition{s, Rational(next++)};
    }
    eos[s] = Rational(next++);
  }
  std::sort(xs.begin(), xs.end(), [](const Crossing& a, const Crossing& b) { return a.over.key < b.over.key; });
  return Diagram(d.strand_count(), std::move(xs), std::move(eos));
}

Diagram compose(const Diagram& d1, const Diagram& d2) {
  if (d1.strand_count() != d2.strand_count()) throw StrandCountMismatch(d1.strand_count(), d2.strand_count());
  const int n = d1.strand_count();
  auto s1 = marks_by_strand(d1);
  auto s2 = marks_by_strand(d2);

  // Strand a of d2 is squeezed into the open interval (lo, eos1[a]), where lo
  // is d1's last crossing mark on a; crossing marks are spaced by rank.
  std::vector<std::map<std::pair<std::size_t, bool>, Rational>> placed(n);
  for (int a = 0; a < n; ++a) {
    const Rational hi = d1.eos_keys()[a];
    const Rational lo = s1[a].empty() ? hi - Rational(1) : s1[a].back().key;
    const std::int64_t slots = static_cast<std::int64_t>(s2[a].size()) + 1;
    const Rational step = (hi - lo) / Rational(slots);
    for (std::size_t t = 0; t < s2[a].size(); ++t) {
      const auto& m = s2[a][t];
      placed[a][{m.crossing, m.over}] = lo + step * Rational(static_cast<std::int64_t>(t + 1));
    }
  }

  std::vector<Crossing> xs = d1.crossings();
  const auto& x2 = d2.crossings();
  for (std::size_t c = 0; c < x2.size(); ++c) {
    Crossing x = x2[c];
    x.over.key = placed[x.over.strand].at({c, true});
    x.under.key = placed[x.under.strand].at({c, false});
    xs.push_back(x);
  }
  return tidy(Diagram(n, std::move(xs), d1.eos_keys()));
}

std::size_t crossing_number(const Diagram& d) { return d.crossings().size(); }

std::string serialize(const Diagram& d) {
  const Diagram t = tidy(d);
  std::string out = "vd " + std::to_string(t.strand_count()) + "\n";
  for (const auto& x : t.crossings()) {
    out += x.sign > 0 ? "x + " : "x - ";
    out += x.over.key.to_string();
    out += ' ';
    out += x.under.key.to_string();
    out += '\n';
  }
  out += "eos";
  for (const auto& k : t.eos_keys()) {
    out += ' ';
    out += k.to_string();
  }
  out += '\n';
  return out;
}

CanonicalKey canonical_key(const Diagram& d) { return CanonicalKey(serialize(d)); }

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

// Column of the first surplus token, or just past the line when tokens are missing.
std::size_t arity_column(const std::vector<Token>& toks, std::size_t want, std::string_view line) {
  return toks.size() > want ? toks[want].column : line.size() + 1;
}

Rational parse_key(const Token& tok, std::size_t line) {
  try {
    return Rational::parse(tok.text);
  } catch (const std::exception& e) {
    throw SyntaxError(line, tok.column, e.what());
  }
}

struct RawCrossing {
  int sign;
  Rational over;
  Rational under;
  std::size_t line;
};

}  // namespace

Diagram parse_diagram(std::string_view text) {
  std::optional<int> n;
  std::vector<RawCrossing> raw;
  std::optional<std::vector<Rational>> eos;
  std::size_t eos_line = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    auto toks = split_tokens(line);
    if (toks.empty()) continue;
    const auto& head = toks[0];
    if (eos) throw SyntaxError(line_no, head.column, "content after the eos line");
    if (!n) {
      if (head.text != "vd") throw SyntaxError(line_no, head.column, "expected 'vd <n>'");
      if (toks.size() != 2) throw SyntaxError(line_no, arity_column(toks, 2, line), "expected 'vd <n>'");
      Rational v = parse_key(toks[1], line_no);
      if (!v.is_integer() || v.num() < 1 || v.num() > 1 << 20)
        throw SyntaxError(line_no, toks[1].column, "strand count must be a positive integer");
      n = static_cast<int>(v.num());
    } else if (head.text == "x") {
      if (toks.size() != 4)
        throw SyntaxError(line_no, arity_column(toks, 4, line), "expected 'x <+|-> <o> <u>'");
      int sign;
      if (toks[1].text == "+")
        sign = 1;
      else if (toks[1].text == "-")
        sign = -1;
      else
        throw SyntaxError(line_no, toks[1].column, "crossing sign must be '+' or '-'");
      raw.push_back({sign, parse_key(toks[2], line_no), parse_key(toks[3], line_no), line_no});
    } else if (head.text == "eos") {
      std::vector<Rational> keys;
      for (std::size_t t = 1; t < toks.size(); ++t) keys.push_back(parse_key(toks[t], line_no));
      if (keys.size() != static_cast<std::size_t>(*n))
        throw SyntaxError(line_no, head.column,
                          "expected " + std::to_string(*n) + " EOS keys, got " + std::to_string(keys.size()));
      eos = std::move(keys);
      eos_line = line_no;
    } else {
      throw SyntaxError(line_no, head.column, "unknown record '" + std::string(head.text) + "'");
    }
  }
  if (!n) throw SyntaxError(line_no, 1, "missing 'vd <n>' header");
  if (!eos) throw SyntaxError(line_no, 1, "missing eos line");

  const auto& e = *eos;
  for (std::size_t s = 1; s < e.size(); ++s)
    if (!(e[s - 1] < e[s]))
      throw InvalidDiagram("line " + std::to_string(eos_line) + ": EOS keys must be strictly increasing");

  auto locate = [&](const Rational& key, std::size_t line) -> MarkPosition {
    auto it = std::lower_bound(e.begin(), e.end(), key);
    if (it == e.end())
      throw InvalidDiagram("line " + std::to_string(line) + ": key " + key.to_string() + " lies past the last EOS");
    if (*it == key)
      throw InvalidDiagram("line " + std::to_string(line) + ": key " + key.to_string() + " coincides with an EOS");
    return MarkPosition{static_cast<int>(it - e.begin()), key};
  };

  std::vector<Crossing> xs;
  xs.reserve(raw.size());
  for (const auto& r : raw) xs.push_back(Crossing{r.sign, locate(r.over, r.line), locate(r.under, r.line)});
  return Diagram(*n, std::move(xs), e);
}

}  // namespace ou
