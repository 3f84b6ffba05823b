#include "cohk/dsl/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cohk/dsl/builder.hpp"
#include "cohk/dsl/io.hpp"
#include "cohk/dsl/parser.hpp"
#include "cohk/errors.hpp"
#include "cohk/format.hpp"
#include "cohk/log_kernel.hpp"
#include "cohk/positivity.hpp"
#include "cohk/quantum_space.hpp"
#include "cohk/structure.hpp"

namespace cohk::cli {

namespace {

Tolerance tolerance_from_env() {
  const char* s = std::getenv("COHK_TOL");
  if (!s || !*s) return {};
  const std::string_view text(s);
  double rel = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), rel);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !std::isfinite(rel) || rel <= 0.0)
    throw InputError("COHK_TOL must be a positive decimal, got '" + std::string(text) + "'");
  return Tolerance(rel, Tolerance().abs());
}

void write_matrix(std::ostream& o, const Matrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) o << (c ? " " : "") << format_complex(m(r, c));
    o << '\n';
  }
}

void write_real_rows(std::ostream& o, const Eigen::MatrixXd& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) o << (c ? " " : "") << format_real(m(r, c));
    o << '\n';
  }
}

std::string index_list(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

/// Options shared by the subcommands; each subcommand registers the ones it
/// reads.
struct Options {
  std::string kernel;
  std::string points;
  std::string out;
  std::string mode = "psd";
  std::string matrix;
  std::string kernel2;
  std::string points2;
  std::string f = "log";
  std::vector<std::string> vec_files;
  std::string stencils;
  std::vector<double> betas;
  bool closure = false;
};

struct Context {
  Options opt;
  Tolerance tol;

  Kernel kernel() const { return dsl::compile(opt.kernel); }
  PointSet points() const { return io::parse_point_set(io::read_file(opt.points)); }
  ExtendedLogKernel log_kernel(const Kernel& k) const {
    return opt.f == "log" ? ExtendedLogKernel::log_of(k) : ExtendedLogKernel::values_of(k);
  }
};

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw InputError(std::string("missing required option ") + flag);
}

int cmd_gram(const Context& cx, std::ostream& o) {
  require(cx.opt.kernel, "--kernel");
  require(cx.opt.points, "--points");
  const Kernel k = cx.kernel();
  const GramMatrix g = gram(k, cx.points());
  o << "kernel: " << k.trace() << '\n';
  o << "size: " << g.size() << '\n';
  o << "hermitization_correction: " << format_real(g.hermitization_correction()) << '\n';
  o << "non_hermitian: " << (g.numerically_non_hermitian() ? "true" : "false") << '\n';
  o << "gram:\n";
  write_matrix(o, g.entries());
  return exit_ok;
}

void write_verdict(std::ostream& o, const PositivityVerdict& v) {
  o << "lambda_min: " << format_real(v.min_eigenvalue) << '\n';
  o << "threshold: " << format_real(v.threshold) << '\n';
  std::string viol;
  for (Eigen::Index i = 0; i < v.eigenvalues.size(); ++i)
    if (v.eigenvalues(i) < -v.threshold) viol += (viol.empty() ? "" : " ") + format_real(v.eigenvalues(i));
  o << "violators: " << (viol.empty() ? "none" : viol) << '\n';
}

int cmd_check(const Context& cx, std::ostream& o) {
  const std::string& mode = cx.opt.mode;
  o << "mode: " << mode << '\n';
  if (!cx.opt.matrix.empty()) {
    if (mode != "psd" && mode != "cond-psd") throw InputError("--matrix supports --mode psd or cond-psd only");
    const GramMatrix g = GramMatrix::from_entries(io::parse_matrix(io::read_file(cx.opt.matrix)));
    const PositivityVerdict v = mode == "psd" ? is_psd(g, cx.tol) : is_conditionally_psd(g, cx.tol);
    o << "source: matrix\n";
    o << "non_hermitian: " << (g.numerically_non_hermitian() ? "true" : "false") << '\n';
    o << "verdict: " << (v.psd ? "pass" : "fail") << '\n';
    write_verdict(o, v);
    return v.psd ? exit_ok : exit_violated;
  }
  require(cx.opt.kernel, "--kernel");
  require(cx.opt.points, "--points");
  const Kernel k = cx.kernel();
  const PointSet pts = cx.points();
  o << "kernel: " << k.trace() << '\n';
  if (mode == "psd") {
    const GramMatrix g = gram(k, pts);
    const PositivityVerdict v = is_psd(g, cx.tol);
    o << "non_hermitian: " << (g.numerically_non_hermitian() ? "true" : "false") << '\n';
    o << "verdict: " << (v.psd ? "pass" : "fail") << '\n';
    write_verdict(o, v);
    return v.psd ? exit_ok : exit_violated;
  }
  if (mode == "cond-psd") {
    const ExtendedLogKernel f = cx.log_kernel(k);
    const ConditionalPositivityReport r = is_conditionally_positive(f, pts, cx.tol);
    o << "f: " << f.trace() << '\n';
    o << "verdict: " << (r.conditionally_positive ? "pass" : "fail") << '\n';
    o << "lambda_min: " << format_real(r.min_eigenvalue) << '\n';
    o << "classes: " << r.classes.size() << '\n';
    std::vector<std::size_t> bad;
    for (std::size_t c = 0; c < r.classes.size(); ++c) {
      o << "class " << c << ": " << index_list(r.classes[c]) << " lambda_min "
        << format_real(r.class_verdicts[c].min_eigenvalue) << '\n';
      if (!r.class_verdicts[c].psd) bad.push_back(c);
    }
    o << "violators: " << (bad.empty() ? "none" : "classes " + index_list(bad)) << '\n';
    return r.conditionally_positive ? exit_ok : exit_violated;
  }
  if (mode == "normal") {
    const NormalityReport r = is_normal(k, pts, cx.tol);
    o << "verdict: " << (r.normal ? "pass" : "fail") << '\n';
    o << "max_diagonal_deviation: " << format_real(r.max_diagonal_deviation) << '\n';
    o << "max_offdiagonal_modulus: " << format_real(r.max_offdiagonal_modulus) << '\n';
    std::string viol;
    for (const std::size_t j : r.bad_diagonal) viol += (viol.empty() ? "" : " ") + ("diag " + std::to_string(j));
    for (const auto& [j, l] : r.bad_pairs)
      viol += (viol.empty() ? "" : " ") + ("pair " + std::to_string(j) + "," + std::to_string(l));
    o << "violators: " << (viol.empty() ? "none" : viol) << '\n';
    return r.normal ? exit_ok : exit_violated;
  }
  if (mode == "morphism") {
    const Kernel k2 = cx.opt.kernel2.empty() ? k : dsl::compile(cx.opt.kernel2);
    const PointSet images =
        cx.opt.points2.empty() ? pts : io::parse_point_set(io::read_file(cx.opt.points2));
    if (images.size() != pts.size()) throw InputError("--points2 must list one image per point");
    const PointMap rho = [&pts, &images](const Point& z) {
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (pts[i].coords() == z.coords()) return images[i];
      throw DomainError("point outside the sample has no image");
    };
    const MorphismReport r = check_morphism(k, k2, rho, pts, cx.tol);
    o << "kernel2: " << k2.trace() << '\n';
    o << "verdict: " << (r.is_morphism ? "pass" : "fail") << '\n';
    o << "max_deviation: " << format_real(r.max_deviation) << '\n';
    o << "threshold: " << format_real(r.threshold) << '\n';
    return r.is_morphism ? exit_ok : exit_violated;
  }
  throw InputError("unknown --mode '" + mode + "'");
}

int cmd_geom(const Context& cx, std::ostream& o) {
  require(cx.opt.kernel, "--kernel");
  require(cx.opt.points, "--points");
  const Kernel k = cx.kernel();
  const PointSet pts = cx.points();
  const auto n = static_cast<Eigen::Index>(pts.size());
  Eigen::MatrixXd dist(n, n), ang(n, n);
  Eigen::MatrixXd len(1, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    len(0, j) = length(k, pts[j], cx.tol);
    for (Eigen::Index l = 0; l < n; ++l) {
      dist(j, l) = distance(k, pts[j], pts[l], cx.tol);
      try {
        ang(j, l) = angle(k, pts[j], pts[l], cx.tol);
      } catch (const DomainError&) {
        ang(j, l) = std::numeric_limits<double>::quiet_NaN();
      }
    }
  }
  o << "kernel: " << k.trace() << '\n';
  o << "size: " << pts.size() << '\n';
  o << "length:\n";
  write_real_rows(o, len);
  o << "distance:\n";
  write_real_rows(o, dist);
  o << "angle:\n";
  write_real_rows(o, ang);
  return exit_ok;
}

int cmd_inner(const Context& cx, std::ostream& o) {
  require(cx.opt.kernel, "--kernel");
  if (cx.opt.vec_files.empty()) throw InputError("missing required option --vec");
  const Kernel k = cx.kernel();
  std::vector<CoherentVector> vs;
  for (const std::string& path : cx.opt.vec_files)
    for (io::VectorLiteral& lit : io::parse_vectors(io::read_file(path))) vs.emplace_back(k, std::move(lit.terms));
  const auto m = static_cast<Eigen::Index>(vs.size());
  Matrix g(m, m);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b) g(a, b) = inner(vs[a], vs[b]);
  o << "kernel: " << k.trace() << '\n';
  o << "vectors: " << vs.size() << '\n';
  o << "inner:\n";
  write_matrix(o, g);
  return exit_ok;
}

int cmd_diff_state(const Context& cx, std::ostream& o) {
  require(cx.opt.kernel, "--kernel");
  require(cx.opt.stencils, "--stencils");
  const Kernel k = cx.kernel();
  const io::StencilFile file = io::parse_stencils(io::read_file(cx.opt.stencils));
  std::vector<CoherentVector> states;
  for (const Stencil& s : file.states)
    states.push_back(diff_state({identity_parameter_map(), s, file.base, file.domain_radius}, k));
  const auto m = static_cast<Eigen::Index>(states.size());
  o << "kernel: " << k.trace() << '\n';
  o << "states: " << states.size() << '\n';
  if (!cx.opt.points.empty()) {
    const PointSet pts = cx.points();
    Matrix ev(static_cast<Eigen::Index>(pts.size()), m);
    for (std::size_t j = 0; j < pts.size(); ++j)
      for (Eigen::Index s = 0; s < m; ++s) ev(static_cast<Eigen::Index>(j), s) = evaluate_function(states[s], pts[j]);
    o << "evaluations:\n";
    write_matrix(o, ev);
  }
  Matrix g(m, m);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b) g(a, b) = inner(states[a], states[b]);
  o << "inner:\n";
  write_matrix(o, g);
  return exit_ok;
}

int cmd_embed(const Context& cx, std::ostream& o) {
  require(cx.opt.kernel, "--kernel");
  require(cx.opt.points, "--points");
  const ExtendedLogKernel f = cx.log_kernel(cx.kernel());
  const MengerEmbedding e = menger_embed(f, cx.points(), cx.tol);
  o << "f: " << f.trace() << '\n';
  o << "dimension: " << e.dimension() << '\n';
  o << "coordinates:\n";
  write_real_rows(o, e.coordinates);
  o << "g:\n";
  write_real_rows(o, e.g.transpose());
  o << "residual: " << format_real(e.residual) << '\n';
  return exit_ok;
}

int cmd_bw_probe(const Context& cx, std::ostream& o) {
  require(cx.opt.kernel, "--kernel");
  require(cx.opt.points, "--points");
  if (cx.opt.betas.empty()) throw InputError("missing required option --betas");
  const ExtendedLogKernel f = cx.log_kernel(cx.kernel());
  const PointSet pts = cx.points();
  const BwProbeReport r = bw_probe(f, pts, cx.opt.betas, cx.tol);
  o << "f: " << f.trace() << '\n';
  o << "beta lambda_min verdict\n";
  for (const BwRow& row : r.rows)
    o << format_number(row.beta) << ' ' << format_real(row.min_eigenvalue) << ' ' << (row.psd ? "pass" : "fail")
      << '\n';
  if (cx.opt.closure) {
    const std::vector<double> pass = r.admissible_betas();
    for (std::size_t a = 0; a < pass.size(); ++a) {
      for (std::size_t b = a; b < pass.size(); ++b) {
        const BwClosureReport c = bw_closure_check(f, pts, pass[a], pass[b], cx.tol);
        o << "closure " << format_number(pass[a]) << " + " << format_number(pass[b]) << ": "
          << (c.closed ? "holds" : "fails") << " product_deviation " << format_real(c.product_identity_deviation)
          << " lambda_min " << format_real(c.sum_verdict.min_eigenvalue) << '\n';
      }
    }
  }
  o << "note: a pass on a finite sample is necessary, not sufficient\n";
  return exit_ok;
}

int cmd_quotient(const Context& cx, std::ostream& o) {
  require(cx.opt.kernel, "--kernel");
  require(cx.opt.points, "--points");
  const Kernel k = cx.kernel();
  const QuotientPartition q = nondegenerate_quotient(k, cx.points(), cx.tol);
  o << "kernel: " << k.trace() << '\n';
  o << "classes: " << q.classes.size() << '\n';
  for (std::size_t c = 0; c < q.classes.size(); ++c)
    o << "class " << c << ": " << index_list(q.classes[c]) << " representative " << q.representatives[c] << '\n';
  o << "note: sample-necessary; classes are merged only by evidence on this sample\n";
  return exit_ok;
}

int cmd_explain(const Context& cx, std::ostream& o) {
  require(cx.opt.kernel, "--kernel");
  const dsl::ExprPtr e = dsl::parse(cx.opt.kernel);
  const Kernel k = dsl::build(*e);
  o << "expression: " << dsl::print(*e) << '\n';
  o << "depth: " << dsl::depth(*e) << '\n';
  o << "dimension: " << (k.dimension() ? std::to_string(*k.dimension()) : std::string("any")) << '\n';
  o << "tree:\n" << dsl::pretty(*e);
  o << "trace: " << k.trace() << '\n';
  return exit_ok;
}

int exit_for_kind(const std::string& kind) {
  return kind == "not_positive" || kind == "non_coherent" ? exit_violated : exit_input;
}

void report(std::ostream& err, const std::string& kind, const std::string& message) {
  err << nlohmann::json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context cx;
  Options& opt = cx.opt;
  CLI::App app{"Coherent product kernels: verification and reports", "cohk"};
  app.require_subcommand(1);

  std::map<std::string, std::function<int(const Context&, std::ostream&)>> handlers;
  auto sub = [&](const char* name, const char* help, auto handler) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("--out", opt.out, "Write the report to this file instead of stdout");
    handlers[name] = handler;
    return s;
  };
  auto kernel_opt = [&opt](CLI::App* s) { s->add_option("--kernel", opt.kernel, "Kernel expression"); };
  auto points_opt = [&opt](CLI::App* s) { s->add_option("--points", opt.points, "Point-set JSON file"); };
  auto f_opt = [&opt](CLI::App* s) {
    s->add_option("--f", opt.f, "Log-kernel: log (principal log of K) or values (K itself)")
        ->check(CLI::IsMember({"log", "values"}));
  };

  for (auto [name, help, handler] :
       {std::tuple{"gram", "Dump the hermitized gram matrix", &cmd_gram},
        std::tuple{"geom", "Length, distance and angle matrices", &cmd_geom},
        std::tuple{"quotient", "Nondegenerate quotient partition of the sample", &cmd_quotient}}) {
    CLI::App* s = sub(name, help, handler);
    kernel_opt(s);
    points_opt(s);
  }
  {
    CLI::App* s = sub("check", "Verify psd, conditional psd, normality or a morphism", &cmd_check);
    kernel_opt(s);
    points_opt(s);
    s->add_option("--mode", opt.mode, "psd | cond-psd | normal | morphism")
        ->check(CLI::IsMember({"psd", "cond-psd", "normal", "morphism"}));
    s->add_option("--matrix", opt.matrix, "Matrix JSON file (psd and cond-psd modes)");
    s->add_option("--kernel2", opt.kernel2, "Target kernel for --mode morphism");
    s->add_option("--points2", opt.points2, "Images of --points under the map for --mode morphism");
    f_opt(s);
  }
  {
    CLI::App* s = sub("inner", "Inner products of vector literals", &cmd_inner);
    kernel_opt(s);
    s->add_option("--vec", opt.vec_files, "Vector-literal JSON file (repeatable)");
  }
  {
    CLI::App* s = sub("diff-state", "Differential states from a stencil file", &cmd_diff_state);
    kernel_opt(s);
    points_opt(s);
    s->add_option("--stencils", opt.stencils, "Stencil JSON file");
  }
  {
    CLI::App* s = sub("embed", "Menger embedding of a conditionally positive log-kernel", &cmd_embed);
    kernel_opt(s);
    points_opt(s);
    f_opt(s);
  }
  {
    CLI::App* s = sub("bw-probe", "Positivity of exp(beta F) over a beta grid", &cmd_bw_probe);
    kernel_opt(s);
    points_opt(s);
    f_opt(s);
    s->add_option("--betas", opt.betas, "Comma-separated beta values")->delimiter(',');
    s->add_flag("--closure", opt.closure, "Check sum closure on every passing pair");
  }
  {
    CLI::App* s = sub("explain", "Pretty-print the expression tree and construction trace", &cmd_explain);
    kernel_opt(s);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return exit_ok;
    }
    report(err, "usage", e.what());
    return exit_input;
  }

  try {
    cx.tol = tolerance_from_env();
    const std::string name = app.get_subcommands().front()->get_name();
    std::ostringstream report_text;
    const int code = handlers.at(name)(cx, report_text);
    if (opt.out.empty()) {
      out << report_text.str();
    } else {
      std::ofstream f(opt.out, std::ios::binary);
      if (!f) throw InputError("cannot write " + opt.out);
      f << report_text.str();
    }
    // A failed verdict is a complete report on stdout plus the same
    // structured diagnostic every nonzero exit carries.
    if (code == exit_violated) report(err, "violated", name + " --mode " + opt.mode + ": property does not hold");
    return code;
  } catch (const Error& e) {
    report(err, e.kind(), e.what());
    return exit_for_kind(e.kind());
  } catch (const std::exception& e) {
    report(err, "input", e.what());
    return exit_input;
  }
}

}  // namespace cohk::cli
