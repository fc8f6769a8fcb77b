#include "ckf/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ckf/acceptance.hpp"
#include "ckf/checker.hpp"
#include "ckf/construct.hpp"
#include "ckf/json_io.hpp"
#include "ckf/rng.hpp"

namespace ckf::cli {

namespace {

using json_io::json;

constexpr std::uint64_t kDefaultSeed = 20240101;

struct UsageError {
  std::string message;
  const CLI::App* app;
};

struct Output {
  bool json = false;
  std::ostream& out;
};

std::string num(double x, int precision = 6) {
  std::ostringstream os;
  os << std::setprecision(precision) << x;
  return os.str();
}

Field parse_field(const std::string& s) { return field_from_string(s); }

// ---- verdict -----------------------------------------------------------------

void print_verdict_text(const checker::Verdict& v, std::ostream& out) {
  const auto& w = v.witness;
  out << "space: " << v.space.describe() << "\n";
  out << "conclusion: " << v.conclusion << "\n";
  out << "theorem: " << v.theorem_applied << "\n";
  if (v.threshold) out << "threshold: " << *v.threshold << "\n";
  auto witness = [&out](const char* label, const checker::Witness& x) {
    out << label << x.name << "\n";
    out << "  d(H) = " << x.d_H << ", d(H') = " << x.d_Hprime << ", branch " << x.branch << "\n";
    if (x.trace_x0)
      out << "  trace on g/h' at X0 = " << num(*x.trace_x0)
          << (x.trace_expected ? " (expected " + num(*x.trace_expected) + ")" : std::string()) << "\n";
    if (x.mu_samples > 0)
      out << "  mu: " << x.mu_samples << " samples against " << x.mu_model << ", failures " << x.mu_failures
          << ", max distance " << num(x.mu_max_distance, 3) << "\n";
  };
  witness("witness: ", w);
  if (v.alternative) witness("alternative witness: ", *v.alternative);
  out << "checks:\n";
  for (const auto& c : v.checks)
    out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << " (" << c.role << "): " << c.detail << "\n";
  if (!v.prior_results.empty()) {
    out << "prior results:\n";
    for (const auto& p : v.prior_results)
      out << "  " << p.tag << ": " << p.inequality << " -> " << (p.applies ? "applies" : "does not apply")
          << (p.note.empty() ? "" : " (" + p.note + ")") << "\n";
  }
  for (const auto& n : v.notes) out << "note: " << n << "\n";
  out << "conventions: order " << rootsys::kOrderToken << ", seed " << v.config.seed << ", samples "
      << v.config.samples << ", tolerance " << num(v.config.tol_abs) << " + " << num(v.config.tol_rel)
      << "*|mu|, quaternion pair tolerance " << num(cartan::kQuaternionPairTol) << "\n";
}

int emit_verdict(const checker::Verdict& v, const Output& o) {
  if (o.json)
    o.out << json_io::verdict_to_json(v).dump(2) << "\n";
  else
    print_verdict_text(v, o.out);
  return v.integrity_ok() ? 0 : 1;
}

// ---- epsilon table ------------------------------------------------------------

int emit_epsilon(int max_m, const Output& o) {
  const auto rows = checker::epsilon_rows(max_m);
  const json doc = json_io::epsilon_table_to_json(max_m, rows);
  if (o.json) {
    o.out << doc.dump(2) << "\n";
  } else {
    o.out << std::left << std::setw(4) << "m" << std::setw(3) << "K" << std::setw(7) << "eps" << std::setw(11)
          << "5m/4+eps" << std::setw(7) << "min n"
          << "match\n";
    for (const auto& r : rows)
      o.out << std::setw(4) << r.m << std::setw(3) << to_string(r.field) << std::setw(7)
            << checker::to_string(r.epsilon) << std::setw(11) << checker::to_string(r.threshold) << std::setw(7)
            << r.derived_min_n << (r.matches ? "yes" : "NO") << "\n";
  }
  return doc["all_match"].get<bool>() ? 0 : 1;
}

// ---- mu sampling ---------------------------------------------------------------

struct MuArgs {
  std::string family;
  std::uint64_t samples = 0;
  std::uint64_t seed = kDefaultSeed;
  int n = 0, m = 0, p = 0, q = 0;
  std::string field = "R";
  double scale = 1.0;
};

SubgroupFamily family_from(const MuArgs& a) {
  const SubgroupKind kind = subgroup_kind_from_string(a.family);
  const Field f = parse_field(a.field);
  SubgroupFamily fam;
  switch (kind) {
    case SubgroupKind::SLSub: fam = SubgroupFamily::sl_sub(f, a.n, a.m); break;
    case SubgroupKind::HprimeSL: fam = SubgroupFamily::hprime_sl(f, a.n, a.m); break;
    case SubgroupKind::HppSL: fam = SubgroupFamily::hpp_sl(f, a.n, a.m); break;
    case SubgroupKind::SSL: fam = SubgroupFamily::s_sl(f, a.n, a.m); break;
    case SubgroupKind::SOCompact: fam = SubgroupFamily::so_compact(a.n); break;
    default: fam = SubgroupFamily::so_family(kind, a.p, a.q); break;
  }
  fam.scale = a.scale;
  return fam;
}

int emit_mu_samples(const MuArgs& a, const SubgroupFamily& fam, const Output& o) {
  const auto model = fam.model();
  const cartan::ContainmentTolerance tol;
  sampling::ContainmentStats st;
  for (std::uint64_t i = 0; i < a.samples; ++i) {
    ++st.samples;
    const auto v = cartan::mu(fam.field, fam.n, fam.sample(a.seed, i));
    const double d = cartan::model_membership_distance(model, v);
    const bool ok = d < tol.bound(v);
    st.max_distance = std::max(st.max_distance, d);
    if (!ok) ++st.failures;
    if (o.json) {
      json params;
      params["family"] = a.family;
      params["field"] = std::string(to_string(fam.field));
      params["n"] = fam.n;
      if (fam.m > 0) params["m"] = fam.m;
      if (fam.p > 0) params["p"] = fam.p;
      if (fam.q > 0) params["q"] = fam.q;
      params["seed"] = a.seed;
      params["index"] = i;
      params["scale"] = fam.scale;
      json line;
      line["schema"] = "ckf.mu-sample/1";
      line["subgroup"] = fam.describe();
      line["parameters"] = std::move(params);
      line["mu"] = v.values();
      line["model"] = model.describe();
      line["model_distance"] = d;
      line["within_tolerance"] = ok;
      o.out << line.dump() << "\n";
    } else {
      o.out << i << " mu = (";
      for (std::size_t j = 0; j < v.size(); ++j) o.out << (j ? ", " : "") << num(v[j]);
      o.out << ") distance " << num(d, 3) << (ok ? "" : " OUTSIDE") << "\n";
    }
  }
  if (o.json) {
    json sum;
    sum["schema"] = "ckf.mu-summary/1";
    sum["subgroup"] = fam.describe();
    sum["samples"] = st.samples;
    sum["failures"] = st.failures;
    sum["max_distance"] = st.max_distance;
    sum["seed"] = a.seed;
    o.out << sum.dump() << "\n";
  } else {
    o.out << fam.describe() << " against " << model.describe() << ": " << st.samples << " samples, "
          << st.failures << " outside tolerance, max distance " << num(st.max_distance, 3) << ", seed " << a.seed
          << "\n";
  }
  return st.failures == 0 ? 0 : 1;
}

// ---- strongly orthogonal sequence --------------------------------------------

int emit_sequence(int p, int q, std::uint64_t samples, std::uint64_t seed, const Output& o) {
  const construct::SymmetricLeviInstance inst(p, q);
  const auto seq = construct::strongly_orthogonal_sequence(inst.ctx, inst.u);
  const auto checks = construct::check_sequence(inst, seq, 20, seed);
  const auto rep = construct::mu_equalities_check(inst, seq, samples, seed);
  json doc = json_io::sequence_to_json(inst, seq, checks, rep, samples);
  doc["seed"] = seed;
  const bool passed = doc["passed"].get<bool>();
  if (o.json) {
    o.out << doc.dump(2) << "\n";
  } else {
    o.out << "pair: (sl(" << p + q << ",R), so(" << p << "," << q << ")), order " << rootsys::kOrderToken
          << ", seed " << seed << "\n";
    o.out << "r = " << seq.r() << "\n";
    for (int i = 0; i < seq.r(); ++i) o.out << "  lambda_" << i + 1 << " = " << seq.lambdas[i].str() << "\n";
    o.out << "dim u = " << checks.u_dim << ", dim(p∩h) = " << checks.ph_dim << ", dim a' = " << checks.a_prime_dim
          << ", centralizer of a' in p∩h: " << checks.centralizer_dim << "\n";
    o.out << "residuals: theta brackets " << num(checks.theta_bracket_residual, 3) << ", sl2 "
          << num(checks.sl2_residual, 3) << ", sl2 commutation " << num(checks.sl2_commutation_residual, 3)
          << ", equivariance " << num(checks.equivariance_residual, 3) << "\n";
    for (const auto& row : rep.rows)
      o.out << "  mu(" << row.subgroup << "): " << row.stats.samples << " samples, max distance "
            << num(row.stats.max_distance, 3) << "\n";
    o.out << "preimage difference " << num(rep.preimage_max_difference, 3) << "\n";
    o.out << (passed ? "passed" : "FAILED") << "\n";
  }
  return passed ? 0 : 1;
}

// ---- decay -----------------------------------------------------------------------

int emit_decay(int p, int q, double tmax, double step, const std::string& variant, std::uint64_t seed,
               const Output& o) {
  const auto d = construct::decay_experiment(p, q, tmax, step, variant, seed);
  const bool passed = std::abs(d.slope_ratio - 1.0) <= 0.1;
  if (o.json) {
    o.out << json_io::decay_to_json(p, q, variant, seed, d, passed).dump(2) << "\n";
  } else {
    o.out << "# p=" << p << " q=" << q << " variant=" << variant << " seed=" << seed << " rate=" << num(d.rate)
          << " slope=" << num(d.slope) << " slope_ratio=" << num(d.slope_ratio) << "\n";
    o.out << "t,distance\n";
    for (const auto& pt : d.points) o.out << num(pt.t) << "," << std::setprecision(17) << pt.distance << "\n";
  }
  return 0;
}

// ---- verify ------------------------------------------------------------------------

int emit_verify(const acceptance::Options& opts, const Output& o) {
  std::vector<acceptance::CriterionResult> results;
  if (!o.json) o.out << "verify-paper" << (opts.fast ? " --fast" : "") << ", seed " << opts.seed << "\n";
  results = acceptance::run(opts, [&](const acceptance::CriterionResult& r) {
    if (!o.json)
      o.out << (r.passed ? "PASS" : "FAIL") << " " << r.id << " " << r.name << " (" << num(r.seconds, 3) << " s of "
            << num(r.budget_seconds) << " s): " << r.detail << std::endl;
  });
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (o.json) {
    json doc;
    doc["schema"] = "ckf.verify/1";
    doc["fast"] = opts.fast;
    doc["seed"] = opts.seed;
    if (!opts.fault.empty()) doc["fault"] = opts.fault;
    doc["passed"] = all;
    json arr = json::array();
    for (const auto& r : results)
      arr.push_back(json{{"id", r.id},
                         {"name", r.name},
                         {"passed", r.passed},
                         {"detail", r.detail},
                         {"budget_seconds", r.budget_seconds}});
    doc["criteria"] = std::move(arr);
    o.out << doc.dump(2) << "\n";
  } else {
    o.out << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
  }
  return all ? 0 : 1;
}

std::uint64_t default_samples(std::uint64_t fallback) {
  const char* env = std::getenv("CKF_SAMPLES");
  if (!env || !*env) return fallback;
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(env, &pos);
    if (pos != std::string(env).size() || v < 1 || v > 10000000) throw std::out_of_range("");
    return static_cast<std::uint64_t>(v);
  } catch (const std::exception&) {
    throw UsageError{"CKF_SAMPLES must be an integer in [1, 10000000]", nullptr};
  }
}

const CLI::App* deepest_parsed(const CLI::App* app) {
  for (const auto* sub : app->get_subcommands()) return deepest_parsed(sub);
  return app;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certificates for the nonexistence of compact Clifford-Klein forms", "ckf"};
  app.fallthrough();
  app.require_subcommand(1);
  bool as_json = false, as_text = false;
  auto* json_flag = app.add_flag("--json", as_json, "Emit JSON");
  auto* text_flag = app.add_flag("--text", as_text, "Emit text (default)");
  json_flag->excludes(text_flag);

  std::uint64_t seed = kDefaultSeed;
  std::uint64_t samples = 0;
  auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Random seed")->capture_default_str();
    sub->add_option("--samples", samples, "Number of random samples (default 1000, or CKF_SAMPLES)")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{10000000}));
  };
  const std::vector<std::string> fields{"R", "C", "H"};

  // verdict
  auto* verdict = app.add_subcommand("verdict", "Decide a space");
  verdict->require_subcommand(1);
  int n = 0, m = 0, p = 0, q = 0, rank = 0;
  std::string field = "R", type;
  std::vector<int> removed;
  std::string rootsys_file;
  auto* v_sl = verdict->add_subcommand("sl", "SL(n,K)/SL(m,K)");
  v_sl->add_option("--n", n, "Ambient size")->required()->check(CLI::Range(3, 40));
  v_sl->add_option("--m", m, "Subgroup size")->required()->check(CLI::Range(2, 39));
  v_sl->add_option("--field", field, "R, C or H")->required()->check(CLI::IsMember(fields));
  add_sampling(v_sl);
  auto* v_slso = verdict->add_subcommand("slso", "SL(p+q,R)/SO0(p,q)");
  v_slso->add_option("--p", p)->required()->check(CLI::Range(1, 12));
  v_slso->add_option("--q", q)->required()->check(CLI::Range(1, 12));
  add_sampling(v_slso);
  auto* v_levi = verdict->add_subcommand("levi", "Symmetric pair whose associated subalgebra is a Levi subalgebra");
  auto* type_opt = v_levi->add_option("--type", type, "Root system family")
                       ->check(CLI::IsMember(std::vector<std::string>{"A", "B", "C", "D", "BC"}));
  auto* rank_opt = v_levi->add_option("--rank", rank)->check(CLI::Range(1, 12));
  v_levi->add_option("--remove", removed, "Simple root to remove, 1-based (repeatable)")->required();
  auto* file_opt = v_levi->add_option("--rootsys", rootsys_file, "Root system JSON document")->check(CLI::ExistingFile);
  type_opt->excludes(file_opt);
  rank_opt->excludes(file_opt);
  add_sampling(v_levi);

  // epsilon-table
  int max_m = 8;
  auto* eps = app.add_subcommand("epsilon-table", "Threshold table against the dimension count");
  eps->add_option("--max-m", max_m)->check(CLI::Range(2, 200))->capture_default_str();

  // mu-sample
  MuArgs mu_args;
  auto* mus = app.add_subcommand("mu-sample", "Cartan projections of random subgroup elements");
  mus->add_option("--family", mu_args.family, "Subgroup family")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>{"SL_sub", "SO0", "Hprime_sl", "Hpp_sl", "S_sl", "Hprime_so",
                                                     "U_so", "Aprime_so", "Uprime_so", "G_prime_embedded",
                                                     "SO_compact"}));
  mus->add_option("--n", mu_args.n)->check(CLI::Range(2, 40));
  mus->add_option("--m", mu_args.m)->check(CLI::Range(1, 40));
  mus->add_option("--p", mu_args.p)->check(CLI::Range(1, 20));
  mus->add_option("--q", mu_args.q)->check(CLI::Range(1, 20));
  mus->add_option("--field", mu_args.field)->check(CLI::IsMember(fields))->capture_default_str();
  mus->add_option("--scale", mu_args.scale, "Gaussian scale of the parameters")
      ->check(CLI::Range(1e-6, 100.0))
      ->capture_default_str();
  add_sampling(mus);

  // so-sequence
  auto* sos = app.add_subcommand("so-sequence", "Strongly orthogonal sequence for (sl(p+q,R), so(p,q))");
  sos->add_option("--p", p)->required()->check(CLI::Range(1, 9));
  sos->add_option("--q", q)->required()->check(CLI::Range(1, 9));
  add_sampling(sos);

  // decay
  double tmax = 10.0, step = 0.5;
  std::string variant = "group";
  auto* dec = app.add_subcommand("decay", "Distance of conjugates of SO0(p,q) to the limit H'");
  dec->add_option("--p", p)->required()->check(CLI::Range(1, 12));
  dec->add_option("--q", q)->required()->check(CLI::Range(1, 12));
  dec->add_option("--tmax", tmax)->required()->check(CLI::Range(0.5, 40.0));
  dec->add_option("--step", step)->check(CLI::Range(0.01, 10.0))->capture_default_str();
  dec->add_option("--variant", variant)
      ->check(CLI::IsMember(std::vector<std::string>{"group", "compact"}))
      ->capture_default_str();
  dec->add_option("--seed", seed)->capture_default_str();

  // verify-paper
  acceptance::Options vopts;
  auto* ver = app.add_subcommand("verify-paper", "Run the reproduction suite");
  ver->add_flag("--fast", vopts.fast, "Cap sampling at 100 draws");
  ver->add_option("--seed", seed)->capture_default_str();
  ver->add_option("--inject-fault", vopts.fault)
      ->check(CLI::IsMember(std::vector<std::string>{"epsilon", "trace", "mu", "d"}))
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << deepest_parsed(&app)->help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << deepest_parsed(&app)->help();
    return 2;
  }

  const Output o{as_json, out};
  try {
    const std::uint64_t n_samples = samples > 0 ? samples : default_samples(1000);
    try {
      if (*verdict) {
        checker::VerdictConfig cfg;
        cfg.seed = seed;
        cfg.samples = n_samples;
        checker::SpaceSpec space;
        if (*v_sl) {
          if (m >= n) throw UsageError{"--m must be smaller than --n", v_sl};
          space = checker::SpaceSpec::sl_over_sl(n, m, parse_field(field));
        } else if (*v_slso) {
          if (p + q > 13) throw UsageError{"p + q is limited to 13", v_slso};
          space = checker::SpaceSpec::sl_over_so(p, q);
        } else {
          std::optional<rootsys::RestrictedRootSystem> rs;
          if (!rootsys_file.empty()) {
            std::ifstream in(rootsys_file);
            json doc;
            try {
              doc = json::parse(in);
            } catch (const json::exception& e) {
              throw UsageError{"cannot parse " + rootsys_file + ": " + e.what(), v_levi};
            }
            rs = json_io::rootsys_from_json(doc);
          } else {
            if (type.empty() || rank == 0) throw UsageError{"give --type and --rank, or --rootsys", v_levi};
            rs = rootsys::build_root_system(rootsys::family_from_string(type), rank);
          }
          std::set<int> pi = rootsys::all_simple(*rs);
          for (int r : removed) {
            if (r < 1 || r > rs->rank())
              throw UsageError{"--remove " + std::to_string(r) + " is outside 1.." + std::to_string(rs->rank()), v_levi};
            pi.erase(r - 1);
          }
          space = checker::SpaceSpec::levi(*rs, pi);
        }
        return emit_verdict(checker::verdict(space, cfg), o);
      }
      if (*eps) return emit_epsilon(max_m, o);
      if (*mus) {
        mu_args.samples = samples > 0 ? samples : default_samples(10);
        mu_args.seed = seed;
        return emit_mu_samples(mu_args, family_from(mu_args), o);
      }
      if (*sos) {
        if (p > q) throw UsageError{"so-sequence expects p <= q", sos};
        
        if (p + q > 10) throw UsageError{"so-sequence is limited to p + q <= 10", sos};
        return emit_sequence(p, q, samples > 0 ? samples : default_samples(500), seed, o);
      }
      if (*dec) {
        if (step > tmax) throw UsageError{"--step must not exceed --tmax", dec};
        return emit_decay(p, q, tmax, step, variant, seed, o);
      }
      if (*ver) {
        vopts.seed = seed;
        return emit_verify(vopts, o);
      }
    } catch (const std::invalid_argument& e) {
      // Parameter combinations rejected by the library constructors.
      throw UsageError{e.what(), deepest_parsed(&app)};
    }
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n";
    if (e.app) err << "\n" << e.app->help();
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace ckf::cli
