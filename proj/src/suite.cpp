#include "arad/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <thread>

#include <json.hpp>

#include "arad/error.hpp"
#include "arad/rng.hpp"

namespace arad {

using nlohmann::json;

std::string_view to_string(RankProfile p) {
  switch (p) {
    case RankProfile::full: return "full";
    case RankProfile::deficient: return "deficient";
    case RankProfile::mixed: return "mixed";
  }
  return "?";
}

RankProfile parse_rank_profile(std::string_view name) {
  for (RankProfile p : {RankProfile::full, RankProfile::deficient, RankProfile::mixed})
    if (to_string(p) == name) return p;
  throw Error(ErrorCode::ConfigInvalid, "unknown rank profile '" + std::string(name) + "'");
}

RadiusConfig SuiteConfig::default_radius() {
  // Disk-shaped numerical ranges (square-zero operators) need a grid of about
  // π / sqrt(8 · width) angles; the cap keeps them affordable and leaves them
  // reported as unconverged, still certified.
  RadiusConfig r;
  r.rel_width = 1e-8;
  r.max_evaluations = 4096;
  r.samples = 2000;
  return r;
}

void SuiteConfig::validate() const {
  for (std::size_t d : dims)
    if (d < 1) throw Error(ErrorCode::ConfigInvalid, "dimensions must be at least 1");
  if (dims.empty() && trials > 0) throw Error(ErrorCode::ConfigInvalid, "no dimensions given");
  for (double t : {tol.inequality, tol.identity, tol.algebra, tol.spectral})
    if (!(t >= 0.0) || !std::isfinite(t))
      throw Error(ErrorCode::ConfigInvalid, "tolerances must be finite and non-negative");
  radius.validate();
  if (inject && !std::isfinite(inject->rhs_offset))
    throw Error(ErrorCode::ConfigInvalid, "injected offset must be finite");
}

const std::vector<double>& tightness_edges() {
  static const std::vector<double> edges{0.0, 1e-12, 1e-9, 1e-6, 1e-3, 1e-1};
  return edges;
}

namespace {

std::size_t pick_rank(RankProfile profile, std::size_t dim, Rng& rng) {
  const bool deficient =
      profile == RankProfile::deficient ||
      (profile == RankProfile::mixed && std::uniform_int_distribution<int>(0, 1)(rng) == 1);
  if (!deficient || dim == 1) return dim;
  return std::uniform_int_distribution<std::size_t>(1, dim - 1)(rng);
}

std::size_t histogram_bin(const CheckResult& r) {
  const double s = r.slack / std::max({1.0, std::abs(r.lhs), std::abs(r.rhs)});
  const auto& edges = tightness_edges();
  if (s < 0.0) return 0;
  return static_cast<std::size_t>(std::upper_bound(edges.begin(), edges.end(), s) -
                                  edges.begin());
}

std::size_t worker_count(std::size_t requested, std::size_t units) {
  std::size_t n = requested > 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ARAD_MAX_WORKERS")) {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && cap > 0) n = std::min<std::size_t>(n, cap);
  }
  return std::max<std::size_t>(1, std::min(n, units));
}

json result_json(const CheckResult& r) {
  return {{"name", r.name},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"slack", r.slack},
          {"tol_used", r.tol_used},
          {"pass", r.pass},
          {"vacuous", r.vacuous},
          {"error", r.error},
          {"inputs",
           {{"seed", r.inputs.seed},
            {"dim", r.inputs.dim},
            {"rank", r.inputs.rank},
            {"trial", r.inputs.trial}}}};
}

json config_json(const SuiteConfig& c) {
  json j = {{"dims", c.dims},
            {"trials", c.trials},
            {"rank_profile", to_string(c.rank_profile)},
            {"seed", c.seed},
            {"tolerances",
             {{"inequality", c.tol.inequality},
              {"identity", c.tol.identity},
              {"algebra", c.tol.algebra},
              {"spectral", c.tol.spectral}}},
            {"radius",
             {{"rel_width", c.radius.rel_width},
              {"initial_grid", c.radius.initial_grid},
              {"refinement_rounds", c.radius.refinement_rounds},
              {"max_evaluations", c.radius.max_evaluations},
              {"samples", c.radius.samples},
              {"gelfand_depth", c.radius.gelfand_depth}}}};
  if (c.inject)
    j["inject_failure"] = {{"check", c.inject->check}, {"rhs_offset", c.inject->rhs_offset}};
  else
    j["inject_failure"] = nullptr;
  return j;
}

}  // namespace

UnitOutcome run_unit(const SuiteConfig& cfg, std::size_t dim, std::size_t trial) {
  const std::uint64_t unit_seed = derive_seed(cfg.seed, {dim, trial});
  Rng rng(derive_seed(unit_seed, {0}));
  const std::size_t rank = pick_rank(cfg.rank_profile, dim, rng);
  const Instance inst{unit_seed, dim, rank, trial};
  auto sub = [&](std::uint64_t k) { return derive_seed(unit_seed, {k}); };

  CheckContext ctx{Quantities(cfg.radius), cfg.tol};
  UnitOutcome out;

  auto run = [&](std::string_view label, const std::function<CheckResult()>& fn) {
    CheckResult r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r = CheckResult{};
      r.name = std::string(label);
      r.error = e.what();
      r.slack = -std::numeric_limits<double>::infinity();
    }
    if (r.name.empty()) r.name = std::string(label);
    if (cfg.inject && r.name == cfg.inject->check && r.error.empty()) {
      r.rhs -= cfg.inject->rhs_offset;
      r.slack = r.rhs - r.lhs;
      r.pass = r.slack >= -r.tol_used;
    }
    if (!r.error.empty()) r.pass = false;
    r.inputs = inst;
    out.results.push_back(std::move(r));
  };

  FrameRef frame;
  try {
    frame = random_psd(dim, rank, sub(1));
  } catch (const std::exception& e) {
    CheckResult r;
    r.name = "instance_generation";
    r.error = e.what();
    r.slack = -std::numeric_limits<double>::infinity();
    r.inputs = inst;
    out.results.push_back(std::move(r));
    return out;
  }
  const BlockFrame bf = lift(frame);
  const FramedOperator op1 = generate(OperatorKind::in_LA, frame, sub(2));
  const FramedOperator op2 = generate(OperatorKind::in_LA, frame, sub(3));
  const FramedOperator op3 = generate(OperatorKind::in_LA, frame, sub(4));
  const FramedOperator op4 = generate(OperatorKind::in_LA, frame, sub(5));
  const ComplexMatrix& t1 = op1.matrix();
  const ComplexMatrix& t2 = op2.matrix();
  const ComplexMatrix& t3 = op3.matrix();
  const ComplexMatrix& t4 = op4.matrix();

  // Catalog.
  run("offdiag_upper", [&] { return check_offdiag_upper(bf, t2, t3, ctx); });
  run("offdiag_lower_a", [&] { return check_offdiag_lower_a(bf, t2, t3, ctx); });
  run("offdiag_lower_b", [&] { return check_offdiag_lower_b(bf, t2, t3, ctx); });
  run("offdiag_product_lower", [&] { return check_offdiag_product_lower(bf, t2, t3, ctx); });
  run("fullblock_lower", [&] { return check_fullblock_lower(bf, t1, t2, t3, t4, ctx); });
  for (unsigned n : {1u, 2u, 3u})
    run("offdiag_power_lower_n" + std::to_string(n),
        [&] { return check_offdiag_power_lower(bf, t2, t3, n, ctx); });
  for (unsigned n : {1u, 2u})
    run("pm_lower_n" + std::to_string(n), [&] { return check_pm_lower(bf, t1, t2, n, ctx); });
  run("pm_upper", [&] { return check_pm_upper(bf, t1, t2, ctx); });
  run("pm_norm", [&] { return check_pm_norm(bf, t1, t2, ctx); });
  run("pm_square_norm", [&] { return check_pm_square_norm(bf, t1, t2, ctx); });
  run("product_upper", [&] { return check_product_upper(frame, t1, t2, ctx); });

  // Frame and adjoint properties.
  const CVector x = gaussian_vector(dim, rng);
  const CVector y = gaussian_vector(dim, rng);
  run("reduction_homomorphism", [&] { return prop_reduction_homomorphism(op1, op2, ctx); });
  run("double_sharp", [&] { return prop_double_sharp(op1, ctx); });
  run("sharp_norm_chain", [&] { return prop_sharp_norm_chain(op1, ctx); });
  run("sharp_algebra", [&] { return prop_sharp_algebra(op1, op2, ctx); });
  run("submultiplicative", [&] { return prop_submultiplicative(op1, op2, ctx); });
  run("vector_bound", [&] { return prop_vector_bound(op1, x, ctx); });
  run("cauchy_schwarz", [&] { return prop_cauchy_schwarz(*frame, x, y, ctx); });
  run("conjugate_symmetry", [&] { return prop_conjugate_symmetry(*frame, x, y, ctx); });
  run("reduced_sharp", [&] { return prop_reduced_sharp(op1, ctx); });

  // Radius properties.
  const FramedOperator sa = generate(OperatorKind::A_selfadjoint, frame, sub(6));
  const FramedOperator u = generate_A_unitary(frame, sub(7));
  run("sandwich_lower", [&] { return prop_sandwich_lower(op1, ctx); });
  run("sandwich_upper", [&] { return prop_sandwich_upper(op1, ctx); });
  run("selfadjoint_norm", [&] { return prop_selfadjoint_norm(sa, ctx); });
  run("selfadjoint_spectral", [&] { return prop_selfadjoint_spectral(sa, ctx); });
  for (unsigned n : {2u, 3u, 4u})
    run("power_inequality_n" + std::to_string(n),
        [&] { return prop_power_inequality(op1, n, ctx); });
  run("adjoint_invariance", [&] { return prop_adjoint_invariance(op1, ctx); });
  run("weak_unitary_invariance", [&] { return prop_weak_unitary_invariance(op1, u, ctx); });
  run("spectral_commutativity", [&] { return prop_spectral_commutativity(op1, op2, ctx); });
  if (rank >= 2) {
    const FramedOperator nil = generate(OperatorKind::nilpotent_AT2zero, frame, sub(8));
    run("square_zero_radius", [&] { return prop_square_zero_radius(nil, ctx); });
  }
  run("square_root_bound", [&] { return prop_square_root_bound(op1, ctx); });
  run("spectral_below_numerical", [&] { return prop_spectral_below_numerical(op1, ctx); });
  run("sampled_below_enclosure", [&] { return prop_sampled_below_enclosure(op1, ctx); });
  run("cartesian_parts", [&] { return prop_cartesian_parts(op1, ctx); });

  // Block properties.
  const double theta = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  run("diag_block_radius", [&] { return prop_diag_block_radius(bf, t1, t2, ctx); });
  run("offdiag_swap", [&] { return prop_offdiag_swap(bf, t2, t3, ctx); });
  run("offdiag_phase", [&] { return prop_offdiag_phase(bf, t2, t3, theta, ctx); });
  run("circulant_radius", [&] { return prop_circulant_radius(bf, t1, t2, ctx); });
  run("offdiag_equal_radius", [&] { return prop_offdiag_equal_radius(bf, t1, ctx); });
  run("pinching_diag", [&] { return prop_pinching_diag(bf, t1, t2, t3, t4, ctx); });
  run("pinching_offdiag", [&] { return prop_pinching_offdiag(bf, t1, t2, t3, t4, ctx); });
  run("square_zero_block_radius", [&] { return prop_square_zero_block_radius(bf, t1, ctx); });
  run("square_zero_block_square", [&] { return prop_square_zero_block_square(bf, t1, ctx); });
  run("block_spectral_domination",
      [&] { return prop_block_spectral_domination(bf, t1, t2, t3, t4, ctx); });
  run("block_norm_diag", [&] { return prop_block_norm_diag(bf, t1, t4, ctx); });
  run("block_norm_offdiag", [&] { return prop_block_norm_offdiag(bf, t2, t3, ctx); });
  run("block_sharp", [&] { return prop_block_sharp(bf, t1, t2, t3, t4, ctx); });
  run("special_unitaries", [&] { return prop_special_unitaries(bf, ctx); });
  run("circulant_power", [&] { return prop_circulant_power(t1, t2, 4, ctx); });
  const FramedOperator full(bf.lifted, assemble2x2(t1, t2, t3, t4));
  for (SpecialUnitary kind : {SpecialUnitary::hadamard, SpecialUnitary::swap}) {
    const std::string name = "weak_unitary_invariance_" + std::string(to_string(kind));
    run(name, [&] {
      CheckResult r = prop_weak_unitary_invariance(full, special_unitary(bf, kind), ctx);
      r.name = name;
      return r;
    });
  }

  out.worst_relative_width = ctx.q.worst_width();
  out.unconverged = ctx.q.unconverged();
  return out;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();

  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t d : cfg.dims)
    for (std::size_t t = 0; t < cfg.trials; ++t) units.emplace_back(d, t);

  std::vector<UnitOutcome> outcomes(units.size());
  const std::size_t workers = worker_count(cfg.workers, units.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < units.size(); i = next++)
      outcomes[i] = run_unit(cfg, units[i].first, units[i].second);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  SuiteReport rep;
  rep.config = cfg;
  rep.units = units.size();
  rep.workers_used = workers;
  std::map<std::string, std::size_t> index;
  const std::size_t bins = tightness_edges().size() + 1;
  for (const UnitOutcome& u : outcomes) {
    rep.worst_relative_width = std::max(rep.worst_relative_width, u.worst_relative_width);
    rep.unconverged_enclosures += u.unconverged;
    for (const CheckResult& r : u.results) {
      auto [it, fresh] = index.try_emplace(r.name, rep.checks.size());
      if (fresh) {
        CheckAggregate a;
        a.name = r.name;
        a.min_slack = std::numeric_limits<double>::infinity();
        a.histogram.assign(bins, 0);
        a.worst = r;
        rep.checks.push_back(std::move(a));
      }
      CheckAggregate& a = rep.checks[it->second];
      ++a.trials;
      ++rep.total_trials;
      if (r.vacuous) ++a.vacuous;
      if (!r.error.empty()) ++a.errors;
      if (!r.pass) {
        ++a.failures;
        ++rep.total_failures;
        if (a.failing.size() < cfg.max_failures_kept) a.failing.push_back(r);
      }
      a.min_slack = std::min(a.min_slack, r.slack);
      if (r.slack + r.tol_used < a.worst.slack + a.worst.tol_used) a.worst = r;
      ++a.histogram[histogram_bin(r)];
    }
  }
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::string report_to_json(const SuiteReport& rep, bool include_timing) {
  json checks = json::array();
  for (const CheckAggregate& a : rep.checks) {
    json failing = json::array();
    for (const CheckResult& r : a.failing) failing.push_back(result_json(r));
    checks.push_back({{"name", a.name},
                      {"trials", a.trials},
                      {"failures", a.failures},
                      {"vacuous", a.vacuous},
                      {"errors", a.errors},
                      {"min_slack", a.min_slack},
                      {"worst", result_json(a.worst)},
                      {"failing", failing},
                      {"tightness_histogram",
                       {{"edges", tightness_edges()}, {"counts", a.histogram}}}});
  }
  json doc = {{"summary",
               {{"passed", rep.passed()},
                {"units", rep.units},
                {"checks", rep.checks.size()},
                {"trials", rep.total_trials},
                {"failures", rep.total_failures},
                {"worst_relative_width", rep.worst_relative_width},
                {"unconverged_enclosures", rep.unconverged_enclosures}}},
              {"config", config_json(rep.config)},
              {"checks", checks}};
  if (include_timing)
    doc["timing"] = {{"wall_seconds", rep.wall_seconds}, {"workers", rep.workers_used}};
  return doc.dump(2);
}

namespace {

// nlohmann converts -1 to a huge size_t without complaint.
template <class T>
T count(const json& j) {
  if (!j.is_number_unsigned())
    throw Error(ErrorCode::ConfigInvalid, "expected a count, got " + j.dump());
  return j.get<T>();
}

}  // namespace

SuiteConfig parse_suite_config(std::string_view text) {
  SuiteConfig c;
  try {
    const json j = json::parse(text);
    if (!j.is_object()) throw Error(ErrorCode::ConfigInvalid, "config must be a JSON object");
    if (j.contains("dims")) {
      if (!j.at("dims").is_array()) throw Error(ErrorCode::ConfigInvalid, "dims must be an array");
      c.dims.clear();
      for (const json& d : j.at("dims")) c.dims.push_back(count<std::size_t>(d));
    }
    if (j.contains("trials")) c.trials = count<std::size_t>(j.at("trials"));
    if (j.contains("rank_profile"))
      c.rank_profile = parse_rank_profile(j.at("rank_profile").get<std::string>());
    if (j.contains("seed")) c.seed = count<std::uint64_t>(j.at("seed"));
    if (j.contains("workers")) c.workers = count<std::size_t>(j.at("workers"));
    if (j.contains("tolerances")) {
      const json& t = j.at("tolerances");
      c.tol.inequality = t.value("inequality", c.tol.inequality);
      c.tol.identity = t.value("identity", c.tol.identity);
      c.tol.algebra = t.value("algebra", c.tol.algebra);
      c.tol.spectral = t.value("spectral", c.tol.spectral);
    }
    if (j.contains("radius")) {
      const json& r = j.at("radius");
      c.radius.rel_width = r.value("rel_width", c.radius.rel_width);
      c.radius.initial_grid = r.value("initial_grid", c.radius.initial_grid);
      c.radius.refinement_rounds = r.value("refinement_rounds", c.radius.refinement_rounds);
      c.radius.max_evaluations = r.value("max_evaluations", c.radius.max_evaluations);
      c.radius.samples = r.value("samples", c.radius.samples);
      c.radius.gelfand_depth = r.value("gelfand_depth", c.radius.gelfand_depth);
    }
    if (j.contains("inject_failure") && !j.at("inject_failure").is_null()) {
      const json& f = j.at("inject_failure");
      c.inject = FaultInjection{f.at("check").get<std::string>(), f.value("rhs_offset", 1.0)};
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ConfigInvalid, e.what());
  }
  c.validate();
  return c;
}

}  // namespace arad
