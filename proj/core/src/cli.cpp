#include "gacalc/cli.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gacalc/errors.hpp"
#include "gacalc/expr.hpp"
#include "gacalc/pga3.hpp"
#include "gacalc/playfair.hpp"
#include "gacalc/structure.hpp"
#include "gacalc/verify.hpp"

namespace gacalc::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string algebra;  // "pga3" or "p,q,r"
  std::string gram_path;
  bool rational = false;
  bool want_float = false;
  bool as_json = false;
  std::uint64_t seed = 20250811;

  std::string expr;        // eval, decompose, inv
  std::string expr2;       // cmt rhs
  std::string point;       // "x,y,z"
  std::string plane;       // parallel
  std::string plane1, plane2;  // angle
  std::string suite = "all";
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

template <ScalarField S>
S parse_scalar(const std::string& text, const std::string& what) {
  auto v = scalar_traits<S>::parse(text);
  if (!v)
    throw Error("bad " + what + " '" + text + "' for " +
                std::string(scalar_traits<S>::name()) + " mode");
  return *v;
}

template <ScalarField S>
typename Algebra<S>::Ptr make_algebra(const Options& opt) {
  if (!opt.gram_path.empty()) {
    std::ifstream in(opt.gram_path);
    if (!in) throw Error("cannot open gram file '" + opt.gram_path + "'");
    std::vector<S> entries;
    std::string token;
    while (in >> token) entries.push_back(parse_scalar<S>(token, "gram entry"));
    std::size_t n = 0;
    while (n * n < entries.size()) ++n;
    if (n == 0 || n * n != entries.size())
      throw Error("gram file must hold a square matrix");
    Mat<S> g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g.at(i, j) = entries[i * n + j];
    return Algebra<S>::from_form(QuadraticForm<S>::from_gram(std::move(g)));
  }
  const std::string spec = opt.algebra.empty() ? "pga3" : opt.algebra;
  if (spec == "pga3") return Algebra<S>::pga3();
  const auto parts = split_commas(spec);
  if (parts.size() != 3) throw Error("algebra must be 'pga3' or 'p,q,r'");
  std::size_t pqr[3];
  for (int i = 0; i < 3; ++i) {
    try {
      pqr[i] = std::stoul(parts[i]);
    } catch (const std::exception&) {
      throw Error("algebra must be 'pga3' or 'p,q,r'");
    }
  }
  return Algebra<S>::from_signature(pqr[0], pqr[1], pqr[2]);
}

template <ScalarField S>
pga3::Point<S> parse_point(const std::string& text) {
  const auto parts = split_commas(text);
  if (parts.size() != 3) throw Error("point must be 'x,y,z'");
  return {parse_scalar<S>(parts[0], "point coordinate"),
          parse_scalar<S>(parts[1], "point coordinate"),
          parse_scalar<S>(parts[2], "point coordinate")};
}

template <ScalarField S>
pga3::Plane<S> parse_plane(const std::string& text) {
  const auto parts = split_commas(text);
  if (parts.size() != 4) throw Error("plane must be 'v0,v1,v2,v3'");
  return {{parse_scalar<S>(parts[0], "plane coordinate"),
           parse_scalar<S>(parts[1], "plane coordinate"),
           parse_scalar<S>(parts[2], "plane coordinate"),
           parse_scalar<S>(parts[3], "plane coordinate")}};
}

template <ScalarField S>
void require_pga3(const typename Algebra<S>::Ptr& alg, const char* verb) {
  if (!(alg->form() == pga3::form<S>()))
    throw Error(std::string(verb) + " needs the pga3 algebra");
}

template <ScalarField S>
json terms_json(const Multivector<S>& m) {
  json t = json::object();
  for (const auto& [mask, c] : m.terms())
    t[m.algebra()->blade_name(mask)] = scalar_traits<S>::str(c);
  return t;
}

template <ScalarField S>
void emit_multivector(const Options& opt, const Multivector<S>& m, std::ostream& out) {
  if (opt.as_json) {
    json j{{"terms", terms_json(m)}, {"algebra", m.algebra()->signature_string()}};
    out << j.dump() << "\n";
  } else {
    out << m.str() << "\n";
  }
}

template <ScalarField S>
std::string plane_text(const pga3::Plane<S>& p) {
  std::string s;
  for (int i = 0; i < 4; ++i) {
    if (i) s += ",";
    s += scalar_traits<S>::str(p.v[i]);
  }
  return s;
}

template <ScalarField S>
Multivector<S> eval_arg(const typename Algebra<S>::Ptr& alg, const std::string& src) {
  ParseOptions popt;
  popt.dim = alg->dim();
  popt.float_literals = !scalar_traits<S>::exact;
  return eval<S>(*parse(src, popt), alg);
}

template <ScalarField S>
int cmd_eval(const Options& opt, std::ostream& out) {
  const auto alg = make_algebra<S>(opt);
  emit_multivector(opt, eval_arg<S>(alg, opt.expr), out);
  return 0;
}

template <ScalarField S>
int cmd_decompose(const Options& opt, std::ostream& out) {
  const auto alg = make_algebra<S>(opt);
  require_pga3<S>(alg, "decompose");
  const auto comp = pga3::point_complement(parse_point<S>(opt.point));
  const auto x = eval_arg<S>(alg, opt.expr);
  const auto split = decompose(x, comp);
  const auto at_infinity = x - split.at_w;
  if (opt.as_json) {
    json j{{"algebra", alg->signature_string()},
           {"at_point", terms_json(split.at_w)},
           {"at_infinity", terms_json(at_infinity)},
           {"cofactor", terms_json(split.ideal_cofactor)}};
    out << j.dump() << "\n";
  } else {
    out << "at_point: " << split.at_w.str() << "\n";
    out << "at_infinity: " << at_infinity.str() << "\n";
    out << "cofactor: " << split.ideal_cofactor.str() << "\n";
  }
  return 0;
}

template <ScalarField S>
int cmd_parallel(const Options& opt, std::ostream& out) {
  const auto alg = make_algebra<S>(opt);
  require_pga3<S>(alg, "parallel");
  const auto result =
      pga3::parallel_through(parse_point<S>(opt.point), parse_plane<S>(opt.plane));
  if (opt.as_json) {
    json j{{"plane", json::array()}};
    for (int i = 0; i < 4; ++i) j["plane"].push_back(scalar_traits<S>::str(result.v[i]));
    out << j.dump() << "\n";
  } else {
    out << "plane: " << plane_text(result) << "\n";
  }
  return 0;
}

template <ScalarField S>
int cmd_angle(const Options& opt, std::ostream& out) {
  const auto alg = make_algebra<S>(opt);
  require_pga3<S>(alg, "angle");
  const double theta =
      pga3::dihedral_angle(parse_plane<S>(opt.plane1), parse_plane<S>(opt.plane2));
  if (opt.as_json) {
    out << json{{"angle", theta}}.dump() << "\n";
  } else {
    out << "angle: " << scalar_traits<double>::str(theta) << "\n";
  }
  return 0;
}

template <ScalarField S>
int cmd_inv(const Options& opt, std::ostream& out) {
  const auto alg = make_algebra<S>(opt);
  emit_multivector(opt, inverse(eval_arg<S>(alg, opt.expr)), out);
  return 0;
}

template <ScalarField S>
int cmd_cmt(const Options& opt, std::ostream& out) {
  const auto alg = make_algebra<S>(opt);
  emit_multivector(
      opt, commutator(eval_arg<S>(alg, opt.expr), eval_arg<S>(alg, opt.expr2)),
      out);
  return 0;
}

template <ScalarField S>
int cmd_units(const Options& opt, std::ostream& out) {
  const auto alg = make_algebra<S>(opt);
  require_pga3<S>(alg, "units");
  const auto comp = pga3::point_complement(parse_point<S>(opt.point));
  const auto ud = unit_decompose(eval_arg<S>(alg, opt.expr), comp);
  if (opt.as_json) {
    json j{{"algebra", alg->signature_string()},
           {"r", terms_json(ud.r)},
           {"tail", terms_json(ud.tail)}};
    out << j.dump() << "\n";
  } else {
    out << "r: " << ud.r.str() << "\n";
    out << "tail: " << ud.tail.str() << "\n";
  }
  return 0;
}

template <ScalarField S>
int cmd_lie_table(const Options& opt, std::ostream& out) {
  const auto alg = make_algebra<S>(opt);
  std::vector<Multivector<S>> basis;
  std::vector<std::string> names;
  for (BladeMask m = 0; m < alg->blade_count(); ++m)
    if (std::popcount(m) == 2) {
      basis.push_back(Multivector<S>::blade(alg, m));
      names.push_back(alg->blade_name(m));
    }
  const auto table = lie_structure_table(basis);
  if (opt.as_json) {
    json brackets = json::array();
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        json coords = json::array();
        for (const auto& c : table[i][j]) coords.push_back(scalar_traits<S>::str(c));
        brackets.push_back(json{{"left", names[i]}, {"right", names[j]},
                                {"coords", coords}});
      }
    out << json{{"algebra", alg->signature_string()}, {"basis", names},
                {"brackets", brackets}}.dump()
        << "\n";
  } else {
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        out << names[i] << " x " << names[j] << " = "
            << commutator(basis[i], basis[j]).str() << "\n";
  }
  return 0;
}

int cmd_check(const Options& opt, std::ostream& out) {
  std::vector<verify::CheckResult> results;
  if (opt.suite == "all") {
    results = verify::run_all(opt.seed);
  } else {
    results.push_back(verify::run_check(opt.suite, opt.seed));
  }
  int fails = 0;
  for (const auto& r : results) {
    if (r.pass) {
      out << "PASS " << r.name << " (" << r.detail << ")\n";
    } else {
      out << "FAIL " << r.name << ": " << r.detail << "\n";
      ++fails;
    }
  }
  return fails == 0 ? 0 : 1;
}

template <ScalarField S>
int dispatch(const std::string& cmd, const Options& opt, std::ostream& out) {
  if (cmd == "eval") return cmd_eval<S>(opt, out);
  if (cmd == "decompose") return cmd_decompose<S>(opt, out);
  if (cmd == "parallel") return cmd_parallel<S>(opt, out);
  if (cmd == "angle") return cmd_angle<S>(opt, out);
  if (cmd == "inv") return cmd_inv<S>(opt, out);
  if (cmd == "cmt") return cmd_cmt<S>(opt, out);
  if (cmd == "units") return cmd_units<S>(opt, out);
  if (cmd == "lie-table") return cmd_lie_table<S>(opt, out);
  throw Error("unknown command '" + cmd + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Calculator for Clifford algebras with degenerate metrics"};
  app.name("gacalc");
  app.require_subcommand(1);
  Options opt;

  auto* algebra_opt =
      app.add_option("--algebra", opt.algebra, "Algebra: 'pga3' or signature 'p,q,r'")
          ->envname("GACALC_ALGEBRA");
  app.add_option("--signature", opt.algebra,
                 "Diagonal signature p,q,r (alias for --algebra)")
      ->excludes(algebra_opt);
  app.add_option("--gram", opt.gram_path,
                 "Path to a whitespace-separated symmetric gram matrix");
  app.add_flag("--rational", opt.rational, "Exact rational scalars");
  app.add_flag("--float", opt.want_float, "64-bit float scalars (default)");
  app.add_flag("--json", opt.as_json, "Structured JSON output");

  auto add_sub = [&app](const char* name, const char* desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
  };

  CLI::App* c_eval = add_sub("eval", "Evaluate a multivector expression");
  c_eval->add_option("expr", opt.expr, "Expression")->required();

  CLI::App* c_dec = add_sub("decompose", "Split an element at a point");
  c_dec->add_option("--point", opt.point, "Point x,y,z")->required();
  c_dec->add_option("expr", opt.expr, "Expression")->required();

  CLI::App* c_par = add_sub("parallel", "Plane through a point parallel to a plane");
  c_par->add_option("--point", opt.point, "Point x,y,z")->required();
  c_par->add_option("--plane", opt.plane, "Plane v0,v1,v2,v3")->required();

  CLI::App* c_ang = add_sub("angle", "Dihedral angle between two planes");
  c_ang->add_option("--plane1", opt.plane1, "Plane v0,v1,v2,v3")->required();
  c_ang->add_option("--plane2", opt.plane2, "Plane v0,v1,v2,v3")->required();

  CLI::App* c_inv = add_sub("inv", "Invert an element");
  c_inv->add_option("expr", opt.expr, "Expression")->required();

  CLI::App* c_cmt = add_sub("cmt", "Commutator of two elements");
  c_cmt->add_option("b", opt.expr, "Left operand")->required();
  c_cmt->add_option("x", opt.expr2, "Right operand")->required();

  CLI::App* c_units = add_sub("units", "Decompose a unit at a point");
  c_units->add_option("--decompose", opt.expr, "Unit expression")->required();
  c_units->add_option("--point", opt.point, "Point x,y,z")->required();

  add_sub("lie-table", "Pairwise commutators of the bivector blade basis");

  CLI::App* c_check = add_sub("check", "Run the verification suites");
  c_check->add_option("--suite", opt.suite, "Suite name or 'all'");
  c_check->add_option("--seed", opt.seed, "Random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    const auto subs = app.get_subcommands();
    const std::string cmd = subs.front()->get_name();
    if (cmd == "check") return cmd_check(opt, out);
    if (opt.rational && opt.want_float) throw Error("choose one of --rational, --float");
    if (opt.rational) return dispatch<Rational>(cmd, opt, out);
    return dispatch<double>(cmd, opt, out);
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << " at offset " << e.offset;
    if (!e.expected.empty()) {
      err << " (expected";
      for (const auto& t : e.expected) err << " " << t;
      err << ")";
    }
    err << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace gacalc::cli
