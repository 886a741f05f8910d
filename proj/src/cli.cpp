#include "arad/cli.hpp"

#include <algorithm>
#include <iostream>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "arad/error.hpp"
#include "arad/frame.hpp"
#include "arad/matrix_io.hpp"
#include "arad/rng.hpp"
#include "arad/suite.hpp"

namespace arad {

using nlohmann::json;

namespace {

json matrix_value(const ComplexMatrix& m) { return json::parse(matrix_to_json(m)); }

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty())
    out << text << '\n';
  else
    write_text_file(path, text + "\n");
}

bool wants(const std::set<std::string>& q, const char* name) {
  return q.empty() ? std::string_view(name) != "sampled" : q.contains(name);
}

}  // namespace

int cmd_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err) {
  static const std::set<std::string> known{"seminorm", "sharp",   "w",       "sampled",
                                           "r",        "classify", "reduced", "membership"};
  const std::set<std::string> q(opt.quantities.begin(), opt.quantities.end());
  for (const std::string& name : q)
    if (!known.contains(name)) {
      err << "unknown quantity '" << name << "'\n";
      return kExitUsage;
    }

  json rep;
  try {
    const FrameRef frame = make_frame(read_matrix_file(opt.metric_file));
    const ComplexMatrix t = read_matrix_file(opt.operator_file);
    if (!t.square() || t.rows() != frame->dim())
      throw Error(ErrorCode::DimensionMismatch, "operator is " + std::to_string(t.rows()) + "x" +
                                                    std::to_string(t.cols()) +
                                                    ", metric is " + std::to_string(frame->dim()));
    const FramedOperator op(frame, t);
    rep["dim"] = frame->dim();
    rep["rank"] = frame->rank();
    rep["in_LA"] = op.in_LA();
    rep["in_LA_half"] = op.in_LA_half();
    rep["not_A_bounded"] = !op.in_LA_half();
    if (wants(q, "membership"))
      rep["membership"] = {{"bounded_defect", op.bounded_defect()},
                           {"adjoint_defect", op.adjoint_defect()},
                           {"tolerance", op.member_tolerance()}};
    if (op.in_LA_half()) {
      if (wants(q, "seminorm")) rep["seminorm"] = op_seminorm(op);
      if (wants(q, "w")) {
        const Enclosure e = a_numerical_radius(op, opt.radius);
        rep["w_A"] = {{"lower", e.lower},
                      {"upper", e.upper},
                      {"evaluations", e.evaluations},
                      {"grid_size", e.grid_size},
                      {"converged", e.converged}};
      }
      if (wants(q, "r")) rep["r_A"] = a_spectral_radius(op, opt.radius);
      if (wants(q, "reduced")) rep["reduced"] = matrix_value(op.reduced());
    }
    if (wants(q, "sampled")) rep["w_A_sampled"] = a_numerical_radius_sampled(op, opt.radius);
    if (op.in_LA() && wants(q, "sharp")) rep["sharp_adjoint"] = matrix_value(sharp_adjoint(op));
    if (wants(q, "classify")) {
      const Classification c = classify(op);
      rep["classification"] = {{"A_selfadjoint", c.A_selfadjoint},
                               {"A_positive", c.A_positive},
                               {"A_unitary", c.A_unitary}};
    }
    emit(opt.out, rep.dump(2), out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  SuiteReport rep;
  try {
    SuiteConfig cfg =
        opt.config_file ? parse_suite_config(read_text_file(*opt.config_file)) : SuiteConfig{};
    if (opt.dims) cfg.dims = *opt.dims;
    if (opt.trials) cfg.trials = *opt.trials;
    if (opt.seed) cfg.seed = *opt.seed;
    if (opt.rank_profile) cfg.rank_profile = parse_rank_profile(*opt.rank_profile);
    if (opt.workers) cfg.workers = *opt.workers;
    if (opt.inject_check) cfg.inject = FaultInjection{*opt.inject_check, opt.inject_offset};
    rep = run_suite(cfg);
    emit(opt.out, report_to_json(rep), out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << (rep.passed() ? "PASS" : "FAIL") << ": " << rep.total_trials << " results, "
      << rep.total_failures << " failures, " << rep.checks.size() << " checks, "
      << rep.wall_seconds << " s\n";
  for (const CheckAggregate& a : rep.checks)
    if (a.failures > 0)
      err << "  " << a.name << ": " << a.failures << "/" << a.trials
          << " failing, min slack " << a.min_slack << '\n';
  return rep.passed() ? kExitOk : kExitFailure;
}

int cmd_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const std::size_t rank = opt.rank.value_or(opt.dim);
    const FrameRef frame = random_psd(opt.dim, rank, derive_seed(opt.seed, {0}));
    std::optional<ComplexMatrix> t;
    if (opt.kind == "A_unitary") {
      t = generate_A_unitary(frame, derive_seed(opt.seed, {1})).matrix();
    } else if (opt.kind != "psd") {
      t = generate(parse_operator_kind(opt.kind), frame, derive_seed(opt.seed, {1})).matrix();
    }
    const std::string metric_path = opt.out_prefix + ".metric.json";
    write_matrix_file(metric_path, frame->metric());
    out << metric_path << '\n';
    if (t) {
      const std::string op_path = opt.out_prefix + ".operator.json";
      write_matrix_file(op_path, *t);
      out << op_path << '\n';
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Operator radii and inequality checks under a positive semidefinite metric"};
  app.require_subcommand(1);

  ComputeOptions copt;
  auto* compute = app.add_subcommand("compute", "Compute A-quantities of one operator");
  compute->add_option("--metric", copt.metric_file, "Metric A (matrix JSON)")->required();
  compute->add_option("--operator", copt.operator_file, "Operator T (matrix JSON)")->required();
  compute->add_option("--quantities", copt.quantities,
                      "seminorm sharp w sampled r classify reduced membership");
  compute->add_option("--out", copt.out, "Report path (default stdout)");
  compute->add_option("--width", copt.radius.rel_width, "Relative enclosure width target");
  compute->add_option("--samples", copt.radius.samples, "Samples for the sampled radius");

  CheckOptions kopt;
  auto* check = app.add_subcommand("check", "Run the inequality suite");
  check->add_option("--config", kopt.config_file, "Suite config (JSON)");
  check->add_option("--dims", kopt.dims, "Dimensions");
  check->add_option("--trials", kopt.trials, "Trials per check and dimension");
  check->add_option("--seed", kopt.seed, "Master seed");
  check->add_option("--rank-profile", kopt.rank_profile, "full | deficient | mixed");
  check->add_option("--workers", kopt.workers, "Worker threads (0 = all cores)");
  check->add_option("--inject-failure", kopt.inject_check,
                    "Lower the rhs of this check to force a failure");
  check->add_option("--inject-offset", kopt.inject_offset, "Amount subtracted from the rhs");
  check->add_option("--out", kopt.out, "Report path (default stdout)");

  GenerateOptions gopt;
  auto* gen = app.add_subcommand("generate", "Write a random metric and operator");
  gen->add_option("--kind", gopt.kind,
                  "psd | arbitrary | in_LA | A_selfadjoint | A_positive | nilpotent_AT2zero | "
                  "A_unitary")
      ->required();
  gen->add_option("--dim", gopt.dim, "Dimension")->required();
  gen->add_option("--rank", gopt.rank, "Rank of the metric (default dim)");
  gen->add_option("--seed", gopt.seed, "Seed")->required();
  gen->add_option("--out", gopt.out_prefix, "Output prefix")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (compute->parsed()) return cmd_compute(copt, out, err);
  if (check->parsed()) return cmd_check(kopt, out, err);
  return cmd_generate(gopt, out, err);
}

}  // namespace arad
