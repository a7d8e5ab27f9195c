#include "gqs_cli/app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "gqs/gqs.hpp"
#include "gqs_cli/csv.hpp"
#include "gqs_cli/document.hpp"
#include "gqs_cli/svg.hpp"

namespace gqs::cli {
namespace {

using nlohmann::json;

std::string fmt(double v, int digits = 6) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

BetaSequence betas_for(const std::string& flag, std::size_t intervals) {
  const std::vector<double> values = parse_list(flag);
  if (values.size() == 1) return BetaSequence::constant(values.front(), intervals);
  if (values.size() != intervals) {
    std::ostringstream os;
    os << "--beta lists " << values.size() << " values for " << intervals << " intervals";
    throw ValidationError(os.str());
  }
  return BetaSequence(values);
}

json shape_json(const ShapeReport& r) {
  return {{"increasing", r.monotone_increasing},
          {"decreasing", r.monotone_decreasing},
          {"convex", r.convex},
          {"concave", r.concave}};
}

void print_shape(std::ostream& out, const ShapeReport& r) {
  out << "shape: increasing=" << yes_no(r.monotone_increasing)
      << " decreasing=" << yes_no(r.monotone_decreasing) << " convex=" << yes_no(r.convex)
      << " concave=" << yes_no(r.concave);
  if (r.first_violation) out << " first_violation=" << *r.first_violation;
  out << '\n';
}

void print_parameters(std::ostream& out, const GqsSpace& space) {
  out << "interval  theta  beta\n";
  for (std::size_t i = 1; i <= space.intervals(); ++i) {
    out << i << "  " << fmt(space.theta(i), 10) << "  " << fmt(space.beta(i), 10) << '\n';
  }
}

// fit -----------------------------------------------------------------------

struct FitOptions {
  std::string kind;
  std::string input;
  std::string out;
  std::optional<std::string> beta;
  std::vector<std::string> senses;
};

int cmd_fit(const FitOptions& o, std::ostream& out) {
  const HermiteInput input = read_hermite_csv(o.input);
  const Partition partition(input.x);

  std::optional<Monotonicity> monotone;
  std::optional<Curvature> curvature;
  for (const std::string& s : o.senses) {
    if (s == "increasing" || s == "decreasing") {
      if (monotone) throw ValidationError("--sense names two monotonicity senses");
      monotone = s == "increasing" ? Monotonicity::increasing : Monotonicity::decreasing;
    } else {
      if (curvature) throw ValidationError("--sense names two curvature senses");
      curvature = s == "convex" ? Curvature::convex : Curvature::concave;
    }
  }
  if (o.kind != "hermite" && o.beta) {
    throw ValidationError("--beta applies to 'fit hermite' only; shape fits choose beta");
  }
  if ((o.kind == "hermite" && !o.senses.empty()) || (o.kind == "monotone" && curvature) ||
      (o.kind == "convex" && monotone)) {
    throw ValidationError("--sense does not apply to 'fit " + o.kind + "' as given");
  }

  std::optional<GqsSpline> spline;
  if (o.kind == "hermite") {
    GqsSpace space(partition, betas_for(o.beta.value_or("-1"), partition.intervals()));
    spline = hermite_to_spline(space, input.data);
  } else {
    const Monotonicity m = monotone.value_or(Monotonicity::increasing);
    const Curvature c = curvature.value_or(Curvature::convex);
    ShapeFit fit = o.kind == "monotone" ? fit_monotone(partition, input.data, m)
                   : o.kind == "convex" ? fit_convex(partition, input.data, c)
                                        : fit_monotone_convex(partition, input.data, m, c);
    spline = std::move(fit.spline);
  }

  const ShapeReport report = diagnose(*spline);
  print_parameters(out, spline->space());
  print_shape(out, report);
  save(o.out, SplineDocument::from_spline(
                  *spline, {{"command", "fit " + o.kind}, {"shape", shape_json(report)}}));
  out << "wrote " << o.out << '\n';
  return kSuccess;
}

// sample --------------------------------------------------------------------

struct SampleOptions {
  std::string input;
  int resolution = 6;
  std::string format = "csv";
  std::optional<std::string> out;
};

int cmd_sample(const SampleOptions& o, std::ostream& out) {
  const GqsSpline spline = load(o.input).spline();
  std::string text;
  if (o.format == "csv") {
    std::ostringstream os;
    os << "x,value,derivative\n";
    for (const DyadicRow& r : spline.sample(o.resolution)) {
      os << format_number(r.x) << ',' << format_number(r.value) << ','
         << format_number(r.derivative) << '\n';
    }
    text = os.str();
  } else {
    text = render_svg(spline, o.resolution);
  }
  if (o.out) {
    write_file(*o.out, text);
    out << "wrote " << *o.out << '\n';
  } else {
    out << text;
  }
  return kSuccess;
}

// refine --------------------------------------------------------------------

struct RefineOptions {
  std::string input;
  int levels = 1;
  std::string out;
};

int cmd_refine(const RefineOptions& o, std::ostream& out) {
  const GqsSpline spline = load(o.input).spline();
  const PolygonSequence seq = polygon_sequence(spline, o.levels);

  out << "level  intervals  delta  2^-level*delta_0\n";
  std::size_t intervals = spline.intervals();
  for (std::size_t m = 0; m < seq.gaps.size(); ++m) {
    out << m << "  " << intervals << "  " << fmt(seq.gaps[m], 10) << "  "
        << fmt(std::ldexp(seq.gaps.front(), -static_cast<int>(m)), 10) << '\n';
    intervals *= 2;
  }
  out << "halving bound delta_m <= 2^-m delta_0: "
      << (seq.halving_bound_holds() ? "holds" : "violated") << '\n';
  out << "stepwise delta_(m+1) <= delta_m / 2: "
      << (seq.stepwise_halving_holds() ? "holds" : "violated") << '\n';
  const double distance = polygon_distance(spline, seq.polygons.back());
  out << "max |P_m - S| = " << fmt(distance, 10) << ", 2 delta_m = "
      << fmt(2.0 * seq.gaps.back(), 10) << '\n';

  GqsSpline fine = spline;
  for (int m = 0; m < o.levels; ++m) fine = corner_cut(fine);
  save(o.out, SplineDocument::from_spline(
                  fine, {{"command", "refine"}, {"levels", o.levels}}));
  out << "wrote " << o.out << '\n';
  return kSuccess;
}

// approx --------------------------------------------------------------------

struct ApproxOptions {
  std::string op;
  std::optional<std::string> builtin;
  std::optional<std::string> table;
  std::optional<std::string> knots;
  std::optional<std::size_t> intervals;
  std::optional<std::string> domain;
  std::string beta = "-1";
  bool order_study = false;
  double tol = kDefaultTolerance;
  double table_tol = 1e-9;
  std::optional<std::string> out;
};

struct Builtin {
  SampleFunction f;
  double a;
  double b;
};

Builtin builtin_function(const std::string& name) {
  if (name == "sin") return {[](double x) { return std::sin(x); }, 0.0, std::numbers::pi};
  if (name == "exp") return {[](double x) { return std::exp(x); }, 0.0, 1.0};
  if (name == "runge") return {[](double x) { return 1.0 / (1.0 + 25.0 * x * x); }, -1.0, 1.0};
  return {[](double x) { return std::abs(x - 1.0 / 3.0); }, -1.0, 1.0};
}

// Nearest-abscissa lookup into a sorted x,y table.
SampleFunction table_function(std::vector<double> xs, std::vector<double> ys, double tol) {
  std::vector<std::size_t> order(xs.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return xs[l] < xs[r]; });
  std::vector<double> sx, sy;
  for (std::size_t k : order) {
    sx.push_back(xs[k]);
    sy.push_back(ys[k]);
  }
  return [sx = std::move(sx), sy = std::move(sy), tol](double x) {
    auto it = std::lower_bound(sx.begin(), sx.end(), x);
    std::size_t k = static_cast<std::size_t>(it - sx.begin());
    if (k == sx.size() || (k > 0 && x - sx[k - 1] < sx[k] - x)) --k;
    if (std::abs(sx[k] - x) > tol) {
      std::ostringstream os;
      os << "table has no row within " << tol << " of required node x = " << format_number(x);
      throw ValidationError(os.str());
    }
    return sy[k];
  };
}

int cmd_approx(const ApproxOptions& o, std::ostream& out) {
  SampleFunction f;
  double a = 0.0, b = 1.0;
  Table table;
  if (o.builtin) {
    Builtin fn = builtin_function(*o.builtin);
    f = std::move(fn.f);
    a = fn.a;
    b = fn.b;
  } else {
    table = parse_table(read_file(*o.table), {"x", "y"});
    if (table.rows() < 2) throw ValidationError("function table needs at least two rows");
    const auto [lo, hi] = std::minmax_element(table.columns[0].begin(), table.columns[0].end());
    a = *lo;
    b = *hi;
    f = table_function(table.columns[0], table.columns[1], o.table_tol);
  }
  if (o.domain) {
    const auto d = parse_list(*o.domain);
    if (d.size() != 2 || !(d[0] < d[1])) throw ValidationError("--domain must be 'a,b' with a < b");
    a = d[0];
    b = d[1];
  }

  const Partition partition =
      o.knots ? Partition(parse_list(*o.knots)) : Partition::uniform(a, b, o.intervals.value_or(8));
  const GqsSpace space(partition, betas_for(o.beta, partition.intervals()));
  const bool lagrange = o.op == "lagrange";
  const GqsSpline spline = lagrange ? lagrange_interpolant(space, f) : quasi_interpolant(space, f);

  double error = 0.0;
  if (o.builtin) {
    error = max_error(spline, f, 6);
    out << "max error (64 samples per interval): " << fmt(error, 10) << '\n';
  } else {
    for (std::size_t k = 0; k < table.rows(); ++k) {
      const double x = table.columns[0][k];
      if (x < space.a() || x > space.b()) continue;
      error = std::max(error, std::abs(spline.eval(x, o.tol).value - table.columns[1][k]));
    }
    out << "max error at table rows: " << fmt(error, 10) << '\n';
  }
  if (lagrange) {
    out << "norm bound: " << fmt(lagrange_norm_bound(space.betas()), 10) << '\n';
  }

  if (o.order_study) {
    if (!o.builtin) throw ValidationError("--order-study needs --builtin");
    const auto betas = space.betas().values();
    if (std::adjacent_find(betas.begin(), betas.end(), std::not_equal_to<>()) != betas.end()) {
      throw ValidationError("--order-study needs a single beta");
    }
    const OrderStudy study =
        empirical_order(f, a, b, betas.front(),
                        lagrange ? ApproximationOperator::lagrange
                                 : ApproximationOperator::quasi_interpolant,
                        4, 9);
    out << "h  error\n";
    for (std::size_t k = 0; k < study.widths.size(); ++k) {
      out << fmt(study.widths[k], 10) << "  " << fmt(study.errors[k], 10) << '\n';
    }
    out << "fitted slope: " << fmt(study.slope, 6) << '\n';
  }

  if (o.out) {
    json meta = {{"command", "approx " + o.op},
                 {"function", o.builtin ? *o.builtin : *o.table},
                 {"max_error", error}};
    save(*o.out, SplineDocument::from_spline(spline, std::move(meta)));
    out << "wrote " << *o.out << '\n';
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized quadratic splines: fitting, sampling, refinement, approximation",
               "gqs"};
  app.require_subcommand(1);

  FitOptions fit;
  auto* fit_cmd = app.add_subcommand("fit", "Interpolate Hermite data from an x,y,p CSV");
  fit_cmd->add_option("kind", fit.kind, "hermite | monotone | convex | monotone-convex")
      ->required()
      ->check(CLI::IsMember({"hermite", "monotone", "convex", "monotone-convex"}));
  fit_cmd->add_option("input", fit.input, "CSV file with header x,y,p")->required();
  fit_cmd->add_option("--out", fit.out, "Output spline document")->required();
  fit_cmd->add_option("--beta", fit.beta, "Scalar or comma-separated list (hermite only)");
  fit_cmd->add_option("--sense", fit.senses, "increasing | decreasing | convex | concave")
      ->check(CLI::IsMember({"increasing", "decreasing", "convex", "concave"}));

  SampleOptions sample;
  auto* sample_cmd = app.add_subcommand("sample", "Evaluate a spline document at dyadic points");
  sample_cmd->add_option("input", sample.input, "Spline document")->required();
  sample_cmd->add_option("--resolution", sample.resolution, "Dyadic level per interval")
      ->check(CLI::Range(0, 16));
  sample_cmd->add_option("--format", sample.format, "csv | svg")
      ->check(CLI::IsMember({"csv", "svg"}));
  sample_cmd->add_option("--out", sample.out, "Output file (default stdout)");

  RefineOptions refine;
  auto* refine_cmd = app.add_subcommand("refine", "Corner-cut a spline document");
  refine_cmd->add_option("input", refine.input, "Spline document")->required();
  refine_cmd->add_option("--levels", refine.levels, "Number of midpoint refinements")
      ->check(CLI::Range(0, kMaxRefineLevels));
  refine_cmd->add_option("--out", refine.out, "Output spline document")->required();

  ApproxOptions approx;
  auto* approx_cmd = app.add_subcommand("approx", "Quasi-interpolant or Lagrange interpolant");
  approx_cmd->add_option("operator", approx.op, "q | lagrange")
      ->required()
      ->check(CLI::IsMember({"q", "lagrange"}));
  auto* builtin_opt = approx_cmd->add_option("--builtin", approx.builtin,
                                             "sin | exp | runge | abs-shifted")
                          ->check(CLI::IsMember({"sin", "exp", "runge", "abs-shifted"}));
  auto* table_opt = approx_cmd->add_option("--table", approx.table, "CSV file with header x,y");
  builtin_opt->excludes(table_opt);
  auto* knots_opt = approx_cmd->add_option("--knots", approx.knots, "Comma-separated knots");
  auto* intervals_opt = approx_cmd->add_option("--intervals", approx.intervals,
                                               "Uniform partition size (default 8)")
                            ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
  knots_opt->excludes(intervals_opt);
  approx_cmd->add_option("--domain", approx.domain, "a,b");
  approx_cmd->add_option("--beta", approx.beta, "Scalar or comma-separated list");
  approx_cmd->add_flag("--order-study", approx.order_study, "Fit the convergence slope");
  approx_cmd->add_option("--tol", approx.tol, "Point evaluation tolerance")
      ->check(CLI::PositiveNumber);
  approx_cmd->add_option("--table-tol", approx.table_tol, "Node lookup tolerance")
      ->check(CLI::PositiveNumber);
  approx_cmd->add_option("--out", approx.out, "Output spline document");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (approx_cmd->parsed() && !approx.builtin && !approx.table) {
      throw CLI::RequiredError("--builtin or --table");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kValidation;
  }

  try {
    if (fit_cmd->parsed()) return cmd_fit(fit, out);
    if (sample_cmd->parsed()) return cmd_sample(sample, out);
    if (refine_cmd->parsed()) return cmd_refine(refine, out);
    return cmd_approx(approx, out);
  } catch (const ShapePreconditionError& e) {
    err << "error: shape precondition failed at " << e.what() << '\n';
    return kShapePrecondition;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }
}

}  // namespace gqs::cli
