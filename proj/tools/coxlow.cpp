// coxlow: command-line front end for the coxlow library.
//
//   coxlow [--tolerance E] [--backend float|rational] [--out PATH] <command> ...
//
// Exit codes: 0 success, 1 internal failure, 2 invalid input,
// 3 verification left unresolved.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "coxlow/conjecture.hpp"
#include "coxlow/error.hpp"
#include "coxlow/group.hpp"
#include "coxlow/render.hpp"
#include "coxlow/report.hpp"

namespace {

using namespace coxlow;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitUnresolved = 3;

struct Globals {
  std::optional<double> tolerance;
  std::string backend;
  std::string out;
};

struct Settings {
  GroupSpec spec;
  double eps = kDefaultTolerance;
};

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ValidationError, "cannot open group file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double tolerance_from(Globals const& g) {
  if (g.tolerance) return *g.tolerance;
  if (char const* env = std::getenv("COXLOW_TOLERANCE")) {
    try {
      std::size_t used = 0;
      double eps = std::stod(env, &used);
      if (used != std::string(env).size() || !(eps > 0)) throw std::invalid_argument(env);
      return eps;
    } catch (std::exception const&) {
      throw Error(ErrorCode::ValidationError,
                  fmt::format("COXLOW_TOLERANCE: not a positive number: '{}'", env));
    }
  }
  return kDefaultTolerance;
}

Settings load(Globals const& g, std::string const& path) {
  Settings s{parse_group_file(read_file(path)), kDefaultTolerance};
  if (s.spec.name.empty()) s.spec.name = path;
  if (g.backend == "float") {
    s.spec.backend = Backend::Float;
  } else if (g.backend == "rational") {
    s.spec.backend = Backend::Rational;
  }
  s.eps = tolerance_from(g);
  return s;
}

// JSON goes to --out when given, otherwise to stdout after the table.
void emit_json(Globals const& g, nlohmann::ordered_json const& doc) {
  std::string text = doc.dump(2) + "\n";
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.out, std::ios::binary);
  if (!out) throw Error(ErrorCode::ValidationError, "cannot write " + g.out);
  out << text;
}

void write_text(std::string const& path, std::string const& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ValidationError, "cannot write " + path);
  out << text;
}

template <class T>
std::string coords_text(Vec<T> const& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += ScalarTraits<T>::to_string(v[i]);
  }
  return s + ")";
}

std::string mask_text(RootMask const& m) {
  std::string s = "{";
  bool first = true;
  for (auto i : m.indices()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

void print_header(Settings const& s) {
  std::cout << fmt::format("group {}  rank {}  backend {}  eps {:g}\n", s.spec.name,
                           s.spec.matrix.rank(), backend_name(s.spec.backend), s.eps);
}

// ---------------------------------------------------------------------------

struct SmallRootsCmd {
  std::string file;
};

template <class T>
int small_roots_cmd(Globals const& g, Settings const& s, SmallRootsCmd const&) {
  Group<T> grp(s.spec, s.eps);
  print_header(s);
  std::cout << fmt::format("{:>5}  {:>5}  {}\n", "index", "depth", "coordinates");
  for (std::size_t i = 0; i < grp.sigma.size(); ++i) {
    std::cout << fmt::format("{:>5}  {:>5}  {}\n", i, grp.sigma[i].depth,
                             coords_text(grp.sigma[i].coords));
  }
  std::cout << fmt::format("|Sigma| = {}\n", grp.sigma.size());
  emit_json(g, small_roots_json(s.spec, grp.sigma));
  return kExitOk;
}

struct LowCmd {
  std::string file;
  std::size_t max_length = 25;
};

template <class T>
int low_cmd(Globals const& g, Settings const& s, LowCmd const& c) {
  Group<T> grp(s.spec, s.eps);
  auto lows = enumerate_low(grp.rs, grp.sigma, grp.aut, c.max_length);
  print_header(s);
  std::cout << fmt::format("{:>6}  {:<16}  {}\n", "length", "element", "lambda");
  for (std::size_t i = 0; i < lows.elements.size(); ++i) {
    std::cout << fmt::format("{:>6}  {:<16}  {}\n", lows.elements[i].length(),
                             format_element(lows.elements[i]), mask_text(lows.lambdas[i]));
  }
  std::cout << fmt::format("low elements: {}  (|Lambda| = {})\n", lows.elements.size(),
                           grp.aut.size());
  std::cout << fmt::format("search exhausted before length {}: {}\n", c.max_length,
                           lows.exhausted ? "yes" : "no");
  std::cout << fmt::format("every lambda realized: {}\n",
                           lows.all_lambdas_realized() ? "yes" : "no");
  emit_json(g, low_elements_json(s.spec, grp.sigma, lows));
  return lows.complete() ? kExitOk : kExitUnresolved;
}

struct AutomatonCmd {
  std::string file;
  std::string dot;
};

template <class T>
int automaton_cmd(Globals const& g, Settings const& s, AutomatonCmd const& c) {
  Group<T> grp(s.spec, s.eps);
  print_header(s);
  std::cout << fmt::format("{:>5}  {:<12}  {:<24}  {}\n", "state", "access", "lambda",
                           "transitions");
  for (std::size_t q = 0; q < grp.aut.size(); ++q) {
    std::string next;
    for (Generator a = 0; a < grp.aut.rank(); ++a) {
      if (auto to = grp.aut.next(q, a)) next += fmt::format(" {}->{}", a, *to);
    }
    std::cout << fmt::format("{:>5}  {:<12}  {:<24} {}\n", q,
                             format_word(grp.aut.access_word(q)),
                             mask_text(grp.aut.state(q)), next);
  }
  std::cout << fmt::format("|Lambda| = {}\n", grp.aut.size());
  if (!c.dot.empty()) write_text(c.dot, export_dot(grp.aut, root_labels(grp.sigma)));
  emit_json(g, automaton_json(s.spec, grp.sigma, grp.aut));
  return kExitOk;
}

struct GrowthCmd {
  std::string file;
  std::size_t terms = 10;
  bool elements = false;
};

template <class T>
int growth_cmd(Globals const& g, Settings const& s, GrowthCmd const& c) {
  Group<T> grp(s.spec, s.eps);
  auto words = growth_series(grp.aut, c.terms);
  std::optional<std::vector<std::uint64_t>> elems;
  if (c.elements) elems = count_elements(grp.rs, c.terms);
  print_header(s);
  std::cout << fmt::format("{:>6}  {:>20}{}\n", "length", "reduced words",
                           c.elements ? fmt::format("  {:>12}", "elements") : "");
  for (std::size_t j = 0; j <= c.terms; ++j) {
    std::cout << fmt::format("{:>6}  {:>20}{}\n", j, words[j].str(),
                             elems ? fmt::format("  {:>12}", (*elems)[j]) : "");
  }
  emit_json(g, growth_json(s.spec, words, elems));
  return kExitOk;
}

struct VerifyCmd {
  std::string file;
  std::size_t max_length = 25;
  std::size_t gbip_length = 12;
  bool polytopes = false;
};

template <class T>
int verify_cmd(Globals const& g, Settings const& s, VerifyCmd const& c) {
  Group<T> grp(s.spec, s.eps);
  bool const rank3 = grp.rs.rank() == 3;
  VerifyArtifacts a{verify_bijection(grp.rs, grp.sigma, grp.aut, c.max_length), {}, {}, {}};
  bool resolved = a.bijection.status() == BijectionStatus::Bijective;

  std::size_t built = 0;
  if (rank3) {
    a.gbip = check_gbip_up_to(grp.rs, grp.sigma, c.gbip_length);
    resolved = resolved && a.gbip->clean();
    a.constructed.resize(grp.aut.size());
    for (std::size_t q = 0; q < grp.aut.size(); ++q) {
      try {
        a.constructed[q] = construct_low_from_lambda(grp.rs, grp.sigma, grp.aut, q).element;
        ++built;
      } catch (Error const& e) {
        if (e.code() != ErrorCode::ConstructionFailed) throw;
        std::cerr << "construction failed for state " << q << ": " << e.what() << "\n";
      }
    }
    resolved = resolved && built == grp.aut.size();
  }
  if (c.polytopes) {
    a.polytopes = verify_inversion_polytopes(grp.rs, grp.sigma, grp.aut,
                                             a.bijection.enumeration);
    if (a.polytopes->hypothesis_holds) resolved = resolved && a.polytopes->all_matched();
  }

  auto const& b = a.bijection;
  print_header(s);
  std::cout << fmt::format("|Sigma| = {}  |Lambda| = {}  low elements = {}\n",
                           grp.sigma.size(), b.lambda_count, b.low_count);
  std::cout << fmt::format("bijection: {} (injective {}, surjective {}, search {} at length {})\n",
                           to_string(b.status()), b.injective ? "yes" : "no",
                           b.surjective ? "yes" : "no",
                           b.enumeration.exhausted ? "exhausted" : "truncated", c.max_length);
  for (auto q : b.unmatched_states) {
    std::cout << fmt::format("  unmatched lambda {} {}\n", q, mask_text(grp.aut.state(q)));
  }
  if (a.gbip) {
    std::cout << fmt::format("G_bip up to length {}: {} elements, {} cyclic, {} source violations\n",
                             a.gbip->max_length, a.gbip->elements_checked, a.gbip->cyclic,
                             a.gbip->source_violations);
    std::cout << fmt::format("descent peeling: {}/{} states built\n", built, grp.aut.size());
  } else {
    std::cout << "G_bip checks skipped (rank is not 3)\n";
  }
  if (a.polytopes) {
    std::size_t matched = 0;
    for (auto const& m : a.polytopes->matches) matched += m.witness.has_value();
    if (!a.polytopes->hypothesis_holds) {
      std::cout << "note: some small root lies off the simplex edges; "
                   "the polytope statement is not asserted for this group\n";
    }
    std::cout << fmt::format("inversion polytopes: {}/{} matched\n", matched,
                             a.polytopes->matches.size());
  }
  emit_json(g, verify_json(s.spec, grp.sigma, grp.aut, a));
  return resolved ? kExitOk : kExitUnresolved;
}

struct RenderCmd {
  std::string file;
  RenderOptions opts;
};

template <class T>
int render_cmd(Globals const& g, Settings const& s, RenderCmd const& c) {
  validate(c.opts);
  Group<T> grp(s.spec, s.eps);
  std::string svg = render_svg(grp.rs, grp.sigma, grp.aut, c.opts);
  if (g.out.empty()) {
    std::cout << svg;
  } else {
    write_text(g.out, svg);
  }
  return kExitOk;
}

template <class Cmd, class Run>
int dispatch(Globals const& g, Cmd const& cmd, Run run) {
  Settings s = load(g, cmd.file);
  if (s.spec.backend == Backend::Rational) return run.template operator()<Rational>(g, s, cmd);
  return run.template operator()<double>(g, s, cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Small roots, low elements and reduced-word automata of Coxeter groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--tolerance", g.tolerance, "comparison tolerance (default 1e-9)")
      ->check(CLI::PositiveNumber);
  app.add_option("--backend", g.backend, "override the file's backend")
      ->check(CLI::IsMember({"float", "rational"}));
  app.add_option("--out", g.out, "write the JSON report (or SVG) to this file");

  SmallRootsCmd sr;
  auto* sub_sr = app.add_subcommand("small-roots", "list the small roots");
  sub_sr->add_option("group", sr.file, "group JSON file")->required();

  LowCmd lc;
  auto* sub_low = app.add_subcommand("low-elements", "enumerate low elements");
  sub_low->add_option("group", lc.file, "group JSON file")->required();
  sub_low->add_option("--max-length", lc.max_length, "search length bound")->capture_default_str();

  AutomatonCmd ac;
  auto* sub_aut = app.add_subcommand("automaton", "build the small-root automaton");
  sub_aut->add_option("group", ac.file, "group JSON file")->required();
  sub_aut->add_option("--dot", ac.dot, "write a DOT graph to this file");

  GrowthCmd gc;
  auto* sub_gr = app.add_subcommand("growth", "count reduced words by length");
  sub_gr->add_option("group", gc.file, "group JSON file")->required();
  sub_gr->add_option("--terms", gc.terms, "largest length")->capture_default_str();
  sub_gr->add_flag("--elements", gc.elements, "also count distinct elements");

  VerifyCmd vc;
  auto* sub_ver = app.add_subcommand("verify", "check low elements against small inversion sets");
  sub_ver->add_option("group", vc.file, "group JSON file")->required();
  sub_ver->add_option("--max-length", vc.max_length, "low-element search bound")->capture_default_str();
  sub_ver->add_option("--gbip-length", vc.gbip_length, "G_bip check bound")->capture_default_str();
  sub_ver->add_flag("--polytopes", vc.polytopes, "compare inversion polytopes");

  RenderCmd rc;
  auto* sub_ren = app.add_subcommand("render", "draw the projective picture as SVG");
  sub_ren->add_option("group", rc.file, "group JSON file")->required();
  sub_ren->add_option("--depth", rc.opts.max_depth, "deepest roots drawn")->capture_default_str();
  sub_ren->add_option("--canvas", rc.opts.canvas, "canvas size in pixels")->capture_default_str();
  sub_ren->add_flag("--lambda", rc.opts.show_lambda_polytopes, "draw conv(lambda) polygons");
  sub_ren->add_flag("--labels", rc.opts.show_labels, "label roots with coordinates");
  bool hide_small = false;
  sub_ren->add_flag("--no-small", hide_small, "do not highlight small roots");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }
  rc.opts.show_small_roots = !hide_small;

  try {
    if (sub_sr->parsed()) {
      return dispatch(g, sr, []<class T>(Globals const& g, Settings const& s,
                                         SmallRootsCmd const& c) { return small_roots_cmd<T>(g, s, c); });
    }
    if (sub_low->parsed()) {
      return dispatch(g, lc, []<class T>(Globals const& g, Settings const& s, LowCmd const& c) {
        return low_cmd<T>(g, s, c);
      });
    }
    if (sub_aut->parsed()) {
      return dispatch(g, ac, []<class T>(Globals const& g, Settings const& s,
                                         AutomatonCmd const& c) { return automaton_cmd<T>(g, s, c); });
    }
    if (sub_gr->parsed()) {
      return dispatch(g, gc, []<class T>(Globals const& g, Settings const& s, GrowthCmd const& c) {
        return growth_cmd<T>(g, s, c);
      });
    }
    if (sub_ver->parsed()) {
      return dispatch(g, vc, []<class T>(Globals const& g, Settings const& s, VerifyCmd const& c) {
        return verify_cmd<T>(g, s, c);
      });
    }
    if (sub_ren->parsed()) {
      return dispatch(g, rc, []<class T>(Globals const& g, Settings const& s, RenderCmd const& c) {
        return render_cmd<T>(g, s, c);
      });
    }
  } catch (Error const& e) {
    std::cerr << "coxlow: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::NumericallyAmbiguous:
      case ErrorCode::ClosureCapExceeded:
        return kExitUnresolved;
      case ErrorCode::ConstructionFailed:
      case ErrorCode::CyclicGraph:
      case ErrorCode::NonReducedInput:
        return kExitFailure;
      default:
        return kExitInvalid;
    }
  } catch (std::exception const& e) {
    std::cerr << "coxlow: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
