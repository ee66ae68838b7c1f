// Command-line front end: partial trace computation, axiom suites, worked
// counterexample reproductions, Intp path evaluation, completion queries, and
// DOT diagram emission.
//
// Exit codes: 0 on success, 1 when a violation / negative result was found,
// 2 on usage errors.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ptcat/axioms.hpp"
#include "ptcat/dot.hpp"
#include "ptcat/json_io.hpp"

namespace {

using namespace ptcat;

Matrix load_matrix(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open matrix file '" + file + "'");
  return parse_matrix(in);
}

nlohmann::json load_json(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open file '" + file + "'");
  return nlohmann::json::parse(in);
}

void write_file(const std::string& file, const std::string& text) {
  std::ofstream out(file);
  if (!out) throw std::invalid_argument("cannot write file '" + file + "'");
  out << text;
}

// --split A,U[,B]
struct Split {
  int a = 0, u = 0, b = -1;
};

Split parse_split(const std::string& s) {
  Split sp;
  char c1 = 0, c2 = 0;
  std::istringstream is(s);
  if (!(is >> sp.a >> c1 >> sp.u) || c1 != ',') 
    throw CLI::ValidationError("--split", "expected A,U[,B]");
  if (is >> c2) {
    if (c2 != ',' || !(is >> sp.b))
      throw CLI::ValidationError("--split", "expected A,U[,B]");
  }
  if (sp.a < 0 || sp.u < 0)
    throw CLI::ValidationError("--split", "dimensions must be nonnegative");
  return sp;
}

int run_trace(const std::string& impl_name, const std::string& split_str,
              const std::string& file, int horizon, double tol) {
  auto impl = parse_impl(impl_name);
  if (!impl) throw CLI::ValidationError("--impl", "unknown implementation");
  Matrix f = load_matrix(file);
  Split sp = parse_split(split_str);

  bool kron_style = *impl == TraceImpl::kron || *impl == TraceImpl::substoch;
  int dim_b;
  if (kron_style) {
    if (sp.u == 0 || f.rows() % sp.u != 0)
      throw CLI::ValidationError("--split", "U must divide the row count");
    dim_b = sp.b >= 0 ? sp.b : f.rows() / sp.u;
    if (f.cols() != sp.a * sp.u || f.rows() != dim_b * sp.u)
      throw CLI::ValidationError("--split", "split does not match matrix shape");
  } else {
    dim_b = sp.b >= 0 ? sp.b : f.rows() - sp.u;
    if (dim_b < 0 || f.cols() != sp.a + sp.u || f.rows() != dim_b + sp.u)
      throw CLI::ValidationError("--split", "split does not match matrix shape");
  }

  if (*impl == TraceImpl::sum_float) {
    FloatOpts opts{horizon, tol};
    auto r = trace_sum_float(to_float(f), sp.a, sp.u, dim_b, opts);
    if (r.value.is_defined()) {
      std::cout << "DEFINED\n" << format_fmatrix(r.value.value());
    } else {
      std::cout << "UNDEFINED\n" << reason_code(r.reason) << "\n";
    }
    return 0;
  }
  TraceResult r = trace_exact(*impl, f, sp.a, sp.u, dim_b);
  if (r.value.is_defined()) {
    std::cout << "DEFINED\n" << format_matrix(r.value.value());
  } else {
    std::cout << "UNDEFINED\n" << reason_code(r.reason) << "\n";
  }
  return 0;
}

int run_axiom_suite(const std::string& impl_name, int cases, uint64_t seed,
                    bool as_json) {
  auto impl = parse_impl(impl_name);
  if (!impl || *impl == TraceImpl::kron || *impl == TraceImpl::substoch)
    throw CLI::ValidationError("--impl",
                               "axiom suites run on hs|ki|sum-exact|sum-float|kleene");
  std::vector<AxiomReport> reports;
  if (*impl == TraceImpl::sum_float) {
    reports = run_suite_float(FloatOps{}, cases, seed);
  } else {
    reports = run_suite(ExactOps{*impl}, cases, seed);
  }
  int violations = count_violations(reports);
  if (as_json) {
    std::cout << reports_to_json("axioms", impl_name, cases, seed, reports).dump(2)
              << "\n";
  } else {
    std::cout << "axiom suite: impl " << impl_name << ", cases " << cases
              << ", seed " << seed << "\n";
    std::map<std::string, std::pair<int, int>> by_law;
    for (const auto& r : reports) {
      auto& [checks, bad] = by_law[r.axiom];
      ++checks;
      if (!r.pass) ++bad;
    }
    for (const auto& [law, counts] : by_law)
      std::cout << "  " << law << ": " << counts.first << " checks, "
                << counts.second << " violations\n";
    std::cout << "total violations: " << violations << "\n";
    for (const auto& r : reports)
      if (!r.pass)
        std::cout << "VIOLATION " << r.axiom << " @ " << r.instance << "\n  left "
                  << r.relation << " right failed\nleft:\n"
                  << r.left << "\nright:\n" << r.right << "\n";
  }
  return violations == 0 ? 0 : 1;
}

int run_repro(const std::string& which) {
  ReproResult r;
  if (which == "paradox") r = repro_trace_paradox();
  else if (which == "vanishing2") r = repro_vanishing2();
  else if (which == "yanking") r = repro_yanking();
  else if (which == "hs-vs-ki") r = repro_hs_vs_ki();
  else if (which == "sum-vs-ki") r = repro_sum_vs_ki();
  else throw CLI::ValidationError("repro", "unknown reproduction '" + which + "'");
  std::cout << r.transcript;
  return r.ok ? 0 : 1;
}

TraceImpl parse_base(const std::string& name) {
  auto impl = parse_impl(name);
  if (!impl || *impl == TraceImpl::sum_float || *impl == TraceImpl::kron ||
      *impl == TraceImpl::substoch)
    throw CLI::ValidationError("--base", "base trace must be hs|ki|sum-exact|kleene");
  return *impl;
}

int run_intp_compose(const std::string& base_name, const std::string& path_file,
                     const std::string& dot_file) {
  TraceImpl base = parse_base(base_name);
  IPath p = ipath_from_json(load_json(path_file));
  if (!dot_file.empty())
    write_file(dot_file, render_intp_path_dot(p.start, p.arrows));
  UndefReason reason = UndefReason::none;
  auto r = intp::pcompose_path(base, p.start, p.arrows, &reason);
  if (r.is_defined()) {
    std::cout << "DEFINED\n"
              << intp::show_iobj(r.value().src) << " -> "
              << intp::show_iobj(r.value().dst) << "\n"
              << format_matrix(r.value().under);
  } else {
    std::cout << "UNDEFINED\n" << reason_code(reason) << "\n";
  }
  return 0;
}

int run_complete_equiv(const std::string& base_name, const std::string& lhs_file,
                       const std::string& rhs_file, int depth,
                       const std::string& cert_file) {
  intp::IntpInstance inst{parse_base(base_name)};
  IPath lhs = ipath_from_json(load_json(lhs_file));
  IPath rhs = ipath_from_json(load_json(rhs_file));
  auto cert = pathcomp::search_equiv(inst, lhs, rhs, depth);
  if (!cert.is_defined()) {
    std::cout << "NOT-FOUND within depth " << depth << "\n";
    return 1;
  }
  std::string why;
  if (!pathcomp::check_certificate(inst, cert.value(), &why))
    throw std::logic_error("search produced an invalid certificate: " + why);
  std::cout << "FOUND certificate with " << cert.value().steps.size()
            << " steps\n";
  for (const auto& s : cert.value().steps)
    std::cout << "  " << pathcomp::rule_name(s.rule) << (s.reversed ? " (rev)" : "")
              << " [" << s.begin << "," << s.end << ")\n";
  if (!cert_file.empty())
    write_file(cert_file, icert_to_json(cert.value()).dump(2) + "\n");
  return 0;
}

int run_complete_check(const std::string& base_name, const std::string& cert_file) {
  intp::IntpInstance inst{parse_base(base_name)};
  ICert cert = icert_from_json(load_json(cert_file));
  std::string why;
  if (pathcomp::check_certificate(inst, cert, &why)) {
    std::cout << "VALID (" << cert.steps.size() << " steps)\n";
    return 0;
  }
  std::cout << "INVALID: " << why << "\n";
  return 1;
}

int run_render(const std::string& path_file, const std::string& out_file) {
  IPath p = ipath_from_json(load_json(path_file));
  std::string dot = render_intp_path_dot(p.start, p.arrows);
  if (out_file.empty())
    std::cout << dot;
  else
    write_file(out_file, dot);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partial traces on exact rational matrix categories"};
  app.require_subcommand(1);

  std::string impl = "ki", split, matrix_file;
  int horizon = 64;
  double tol = 1e-9;
  auto* trace = app.add_subcommand("trace", "compute one partial trace");
  trace->add_option("--impl", impl, "hs|ki|sum-exact|sum-float|kleene|kron|substoch")
      ->required();
  trace->add_option("--split", split, "dims A,U[,B]")->required();
  trace->add_option("--horizon", horizon, "float mode: number of partial sums")
      ->check(CLI::PositiveNumber);
  trace->add_option("--tol", tol, "float mode: tolerance");
  trace->add_option("file", matrix_file, "matrix in the text format")->required();

  std::string ax_impl = "ki", repro_name;
  int cases = 100;
  uint64_t seed = 1;
  bool as_json = false;
  auto* axioms = app.add_subcommand("axioms", "axiom suites and reproductions");
  axioms->require_subcommand(1);
  auto* ax_run = axioms->add_subcommand("run", "run the seeded axiom suite");
  ax_run->add_option("--impl", ax_impl, "hs|ki|sum-exact|sum-float|kleene")
      ->required();
  ax_run->add_option("--cases", cases, "generated instances")
      ->required()
      ->check(CLI::PositiveNumber);
  ax_run->add_option("--seed", seed, "PRNG seed")->required();
  ax_run->add_flag("--json", as_json, "emit the JSON report");
  auto* ax_repro =
      axioms->add_subcommand("repro", "reproduce a worked counterexample");
  ax_repro->add_option("name", repro_name,
                       "paradox|vanishing2|yanking|hs-vs-ki|sum-vs-ki")
      ->required();

  std::string repro2_name;
  auto* repro = app.add_subcommand("repro", "alias for 'axioms repro'");
  repro->add_option("name", repro2_name,
                    "paradox|vanishing2|yanking|hs-vs-ki|sum-vs-ki")
      ->required();

  std::string base = "ki", path_file, dot_file;
  auto* intp_cmd = app.add_subcommand("intp", "partial Int-construction");
  intp_cmd->require_subcommand(1);
  auto* compose = intp_cmd->add_subcommand("compose", "compose an Intp path");
  compose->add_option("--base", base, "base trace: hs|ki|sum-exact|kleene");
  compose->add_option("--path", path_file, "path JSON file")->required();
  compose->add_option("--dot", dot_file, "also write the diagram as DOT");

  std::string c_base = "ki", lhs_file, rhs_file, cert_out, cert_file;
  int depth = 8;
  auto* complete = app.add_subcommand("complete", "path-category completion");
  complete->require_subcommand(1);
  auto* equiv =
      complete->add_subcommand("equiv", "search for a rewrite certificate");
  equiv->add_option("--base", c_base, "base trace");
  equiv->add_option("--lhs", lhs_file, "left path JSON")->required();
  equiv->add_option("--rhs", rhs_file, "right path JSON")->required();
  equiv->add_option("--depth", depth, "search depth bound")
      ->check(CLI::PositiveNumber);
  equiv->add_option("--emit-cert", cert_out, "write the found certificate");
  auto* check = complete->add_subcommand("check-cert", "validate a certificate");
  check->add_option("--base", c_base, "base trace");
  check->add_option("cert", cert_file, "certificate JSON")->required();

  std::string render_path, render_out;
  auto* render = app.add_subcommand("render", "emit a DOT diagram for a path");
  render->add_option("--path", render_path, "path JSON file")->required();
  render->add_option("--out", render_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (trace->parsed()) return run_trace(impl, split, matrix_file, horizon, tol);
    if (ax_run->parsed()) return run_axiom_suite(ax_impl, cases, seed, as_json);
    if (ax_repro->parsed()) return run_repro(repro_name);
    if (repro->parsed()) return run_repro(repro2_name);
    if (compose->parsed()) return run_intp_compose(base, path_file, dot_file);
    if (equiv->parsed())
      return run_complete_equiv(c_base, lhs_file, rhs_file, depth, cert_out);
    if (check->parsed()) return run_complete_check(c_base, cert_file);
    if (render->parsed()) return run_render(render_path, render_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
