#include "ou/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "ou/braid.hpp"
#include "ou/division.hpp"
#include "ou/enumerate.hpp"
#include "ou/errors.hpp"
#include "ou/rewrite.hpp"

namespace ou::cli {

namespace {

// Input and usage problems; mapped to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_max_iters() {
  if (const char* env = std::getenv("OU_MAX_ITERS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw UsageError("OU_MAX_ITERS must be a positive integer");
    return v;
  }
  return kDefaultMaxIters;
}

bool looks_like_word(const std::string& s) { return s.rfind("vpb ", 0) == 0 || s.rfind("br ", 0) == 0; }

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open '" + path + "'");
    buf << f.rdbuf();
  }
  return buf.str();
}

Diagram read_diagram(const std::string& path, std::istream& in) {
  const std::string text = read_source(path, in);
  try {
    return parse_diagram(text);
  } catch (const SyntaxError& e) {
    throw UsageError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  } catch (const InvalidDiagram& e) {
    throw UsageError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

struct ParsedWord {
  VirtualBraidWord vpb;
  std::optional<Permutation> perm;  // set for classical input
};

ParsedWord read_word(const std::string& text) {
  try {
    if (text.rfind("br ", 0) == 0) {
      auto [w, pi] = classical_to_vpb(parse_br(text));
      return {std::move(w), std::move(pi)};
    }
    return {parse_vpb(text), std::nullopt};
  } catch (const InvalidWord& e) {
    throw UsageError("'" + text + "': " + e.what());
  }
}

// A reduced OU tangle given either inline as a braid word (via Ch) or as a
// diagram file.
Diagram read_tangle(const std::string& src, std::istream& in) {
  if (looks_like_word(src)) return ch(read_word(src).vpb);
  return read_diagram(src, in);
}

}  // namespace

int run(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"OU normal forms of virtual tangles and braids", "ou"};
  app.require_subcommand(1);

  std::uint64_t max_iters = 0;
  std::string input = "-";
  std::string word_a;
  std::string word_b;
  bool dot = false;
  std::string kind_name = "virtual";
  int n = 0;
  int m = 0;
  int workers = 0;
  std::string out_path;
  std::size_t max_keys = TabulateOptions{}.max_keys;

  auto add_max_iters = [&](CLI::App* sub) {
    sub->add_option("--max-iters", max_iters, "glide cap (default 16777216, env OU_MAX_ITERS)")
        ->check(CLI::PositiveNumber);
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "inline word ('vpb <n>: ...' or 'br <n>: ...'), diagram file, or - for stdin");
  };

  auto* normalize_cmd = app.add_subcommand("normalize", "reduced OU form of a diagram");
  normalize_cmd->add_option("diagram", input, "diagram file, or - for stdin");
  add_max_iters(normalize_cmd);

  auto* ch_cmd = app.add_subcommand("ch", "canonical reduced OU diagram of a braid word");
  ch_cmd->add_option("word", word_a, "braid word")->required();
  add_max_iters(ch_cmd);

  auto* eq_cmd = app.add_subcommand("eq", "decide whether two braid words are equal");
  eq_cmd->add_option("first", word_a, "braid word")->required();
  eq_cmd->add_option("second", word_b, "braid word")->required();
  add_max_iters(eq_cmd);

  auto* div_cmd = app.add_subcommand("divisors", "generators dividing a reduced OU tangle");
  add_input(div_cmd);
  auto* core_cmd = app.add_subcommand("core", "extract the maximal braid and the core tangle");
  add_input(core_cmd);
  auto* eg_cmd = app.add_subcommand("eg", "extraction graph (structured lines, or DOT with --dot)");
  add_input(eg_cmd);
  eg_cmd->add_flag("--dot", dot, "emit Graphviz DOT");

  auto add_enum = [&](CLI::App* sub) {
    sub->add_option("--kind", kind_name, "virtual or classical")
        ->check(CLI::IsMember({"virtual", "classical"}));
    sub->add_option("-n", n, "strand count")->required()->check(CLI::Range(2, 64));
    sub->add_option("--workers", workers, "worker threads (default: available parallelism)")
        ->check(CLI::PositiveNumber);
  };
  auto* tab_cmd = app.add_subcommand("tabulate", "count braids by crossing number");
  add_enum(tab_cmd);
  tab_cmd->add_option("-m", m, "maximal crossing number")->required()->check(CLI::NonNegativeNumber);
  tab_cmd->add_option("--out", out_path, "write one representative per braid to this file");
  tab_cmd->add_option("--max-keys", max_keys, "abort beyond this many distinct braids")
      ->check(CLI::PositiveNumber);
  auto* worst_cmd = app.add_subcommand("worst", "proud word of length m with the largest OU form");
  add_enum(worst_cmd);
  worst_cmd->add_option("-m", m, "word length")->required()->check(CLI::PositiveNumber);

  auto* fib_cmd = app.add_subcommand("fibcheck", "compare 3-strand classical counts with 6*2^m-2F(m+3)-2");
  fib_cmd->add_option("-m", m, "largest m to check")->required()->check(CLI::PositiveNumber);
  fib_cmd->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return 2;
  }

  if (workers == 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  try {
    NormalFormOptions nf;
    nf.max_iters = max_iters ? max_iters : default_max_iters();

    if (*normalize_cmd) {
      out << serialize(ou_normal_form(read_diagram(input, in), nf));
    } else if (*ch_cmd) {
      auto w = read_word(word_a);
      out << serialize(ch(w.vpb, nf));
    } else if (*eq_cmd) {
      auto a = read_word(word_a);
      auto b = read_word(word_b);
      if (a.vpb.n != b.vpb.n) throw StrandCountMismatch(a.vpb.n, b.vpb.n);
      if (a.perm.has_value() != b.perm.has_value())
        throw UsageError("cannot compare a classical word with a virtual one");
      bool same = a.perm == b.perm && canonical_key(ch(a.vpb, nf)) == canonical_key(ch(b.vpb, nf));
      out << (same ? "equal" : "distinct") << "\n";
    } else if (*div_cmd) {
      for (const auto& g : divisors(read_tangle(input, in))) out << g.token() << "\n";
    } else if (*core_cmd) {
      auto r = peel(read_tangle(input, in));
      out << r.braid.to_string() << "\n" << serialize(r.core);
    } else if (*eg_cmd) {
      auto g = extraction_graph(read_tangle(input, in));
      out << (dot ? to_dot(g) : to_structured(g));
    } else if (*tab_cmd) {
      TabulateOptions opts;
      opts.workers = workers;
      opts.max_keys = max_keys;
      auto r = tabulate(n, m, parse_kind(kind_name), opts);
      if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw UsageError("cannot write '" + out_path + "'");
        f << r.representatives_text();
      }
      out << r.table_text() << r.structured_text();
    } else if (*worst_cmd) {
      auto r = worst_braid(n, m, parse_kind(kind_name), workers);
      out << r.text << "\nxi " << r.xi << "\n";
    } else if (*fib_cmd) {
      TabulateOptions opts;
      opts.workers = workers;
      auto r = tabulate(3, m, BraidKind::Classical, opts);
      bool ok = true;
      for (int k = 1; k <= m; ++k) {
        const auto want = fibonacci_formula(k);
        const bool hit = r.count_exactly[k] == want;
        ok = ok && hit;
        out << k << " " << r.count_exactly[k] << " " << want << (hit ? " ok" : " MISMATCH") << "\n";
      }
      out << (ok ? "fit holds" : "fit fails") << "\n";
      return ok ? 0 : 1;
    }
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Cyclic&) {
    err << "error: cyclic: " << (*normalize_cmd ? (input == "-" ? "<stdin>" : input) : word_a)
        << " has a closed cascade path\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) { return run(argc, argv, std::cin, out, err); }

}  // namespace ou::cli
