#include "ckf/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ckf/checker.hpp"
#include "ckf/construct.hpp"
#include "ckf/linalg.hpp"
#include "ckf/rng.hpp"
#include "ckf/sampling.hpp"

namespace ckf::acceptance {

namespace {

using checker::Rational;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Noncompact dimensions counted as dim G - dim K from the real dimensions of
// sl(m, K) and su/so/sp(m), kept apart from checker::d_noncompact.
long long d_sl_by_count(int m, Field f) {
  const long long mm = m;
  switch (f) {
    case Field::R: return (mm * mm - 1) - mm * (mm - 1) / 2;
    case Field::C: return 2 * (mm * mm - 1) - (mm * mm - 1);
    case Field::H: return (4 * mm * mm - 1) - mm * (2 * mm + 1);
  }
  return 0;
}

int min_n_by_count(int m, Field f, int d_offset) {
  const int k = m / 2;
  for (int n = m + 1;; ++n) {
    const long long dhp = d_sl_by_count(k, f) + static_cast<long long>(real_dim(f)) * k * (n - k) + d_offset;
    if (dhp >= d_sl_by_count(m, f)) return n;
  }
}

Outcome criterion_epsilon(const Options& o) {
  Outcome out;
  const Rational perturb = o.fault == "epsilon" ? Rational(1, 4) : Rational(0);
  const int d_offset = o.fault == "d" ? -1 : 0;
  int rows = 0;
  for (const auto& row : checker::epsilon_rows(20, perturb)) {
    ++rows;
    const int counted = min_n_by_count(row.m, row.field, d_offset);
    const bool ok = row.matches && counted == row.derived_min_n && Rational(counted) == row.threshold;
    if (!ok && out.passed) {
      out.passed = false;
      out.detail = "row m=" + std::to_string(row.m) + " K=" + std::string(to_string(row.field)) + ": eps " +
                   checker::to_string(row.epsilon) + ", 5m/4+eps " + checker::to_string(row.threshold) +
                   ", min n " + std::to_string(counted);
    }
  }
  if (out.passed) out.detail = std::to_string(rows) + " rows, m in [2,20], exact";
  return out;
}

Outcome criterion_trace(const Options& o) {
  Outcome out;
  int cases = 0;
  double worst = 0.0;
  auto record = [&](const std::string& label, double got, double expected) {
    ++cases;
    if (o.fault == "trace") got = 0.0;
    const double err = std::abs(got - expected);
    worst = std::max(worst, err);
    if (!(err < 1e-8) && out.passed) {
      out.passed = false;
      out.detail = label + ": trace " + fmt(got) + ", expected " + fmt(expected);
    }
  };
  auto sl_case = [&](Field f, int n, int m) {
    const int k = m / 2;
    const liealg::MatrixAlgebraContext ctx(f, n);
    const auto tro = checker::trace_free_obstruction(ctx, construct::hprime_sl_algebra(ctx, m),
                                                     construct::grading_element_sl(f, n, k), o.seed);
    const double expected = -static_cast<double>(real_dim(f)) * n * k * (n - k);
    record("H'(" + std::to_string(n) + "," + std::to_string(m) + "," + std::string(to_string(f)) + ")",
           tro.trace_free_on_h ? tro.trace_at_x0 : NAN, expected);
  };
  for (int n = 3; n <= 8; ++n)
    for (int m = 2; m < n; ++m) sl_case(Field::R, n, m);
  sl_case(Field::C, 4, 2);
  sl_case(Field::C, 5, 3);
  sl_case(Field::H, 3, 2);
  sl_case(Field::H, 4, 3);
  for (int p = 1; p <= 6; ++p)
    for (int q = 1; p + q <= 7; ++q) {
      const liealg::MatrixAlgebraContext ctx(Field::R, p + q);
      const auto tro = checker::trace_free_obstruction(ctx, construct::hprime_so_algebra(ctx, p, q),
                                                       construct::grading_element_so(p, q), o.seed);
      record("H'_so(" + std::to_string(p) + "," + std::to_string(q) + ")",
             tro.trace_free_on_h ? tro.trace_at_x0 : NAN, -static_cast<double>(p) * q * (p + q));
    }
  if (out.passed) out.detail = std::to_string(cases) + " cases, max error " + fmt(worst);
  return out;
}

Outcome criterion_mu(const Options& o) {
  Outcome out;
  const std::uint64_t samples = o.fast ? 100 : 1000;
  int batches = 0;
  double worst_ratio = 0.0, worst_block = 0.0, worst_mu = 0.0;
  for (Field f : {Field::R, Field::C, Field::H})
    for (int n = 3; n <= 6; ++n)
      for (int m = 2; m < n; ++m) {
        const auto fam = SubgroupFamily::hprime_sl(f, n, m);
        auto spec = sampling::batch_for(fam, samples, o.seed);
        if (o.fault == "mu") spec.fault_stretch = 0.75;
        const sampling::Sampler sampler = [&fam](std::mt19937_64& eng) { return fam.sample(eng); };
        const auto st = sampling::containment_parallel(spec, sampler);
        ++batches;
        worst_ratio = std::max(worst_ratio, st.max_ratio);
        const std::string label = fam.describe();
        if (!st.passed() && out.passed) {
          out.passed = false;
          out.detail = label + ": " + std::to_string(st.failures + st.errors) + " of " + std::to_string(st.samples) +
                       " samples off " + spec.model.describe() + ", first at index " +
                       std::to_string(st.first_failure);
        }
        if (f == Field::H) continue;
        for (std::uint64_t i = 0; i < 100; ++i) {
          const auto c = construct::conjugate_to_S(f, n, m, fam.sample(o.seed + 17, i));
          worst_block = std::max(worst_block, c.block_residual);
          worst_mu = std::max(worst_mu, c.mu_difference);
          if (!(c.block_residual < 1e-9 && c.mu_difference < 1e-8 && c.group_residual < 1e-9) && out.passed) {
            out.passed = false;
            out.detail = label + ": conjugation into S failed at sample " + std::to_string(i) + " (block " +
                         fmt(c.block_residual) + ", mu " + fmt(c.mu_difference) + ")";
          }
        }
      }
  if (out.passed)
    out.detail = std::to_string(batches) + " batches x " + std::to_string(samples) +
                 " samples, max distance/bound " + fmt(worst_ratio) + "; conjugation block residual " +
                 fmt(worst_block) + ", mu difference " + fmt(worst_mu);
  return out;
}

Outcome criterion_sequence(const Options& o) {
  Outcome out;
  const std::uint64_t samples = o.fast ? 100 : 500;
  int cases = 0;
  for (int p = 1; p <= 3; ++p)
    for (int q = p; p + q <= 7; ++q) {
      ++cases;
      const std::string label = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
      const construct::SymmetricLeviInstance inst(p, q);
      const auto seq = construct::strongly_orthogonal_sequence(inst.ctx, inst.u);
      const auto rotated = construct::strongly_orthogonal_sequence_rotated(inst.ctx, inst.u, o.seed);
      const auto checks = construct::check_sequence(inst, seq, 20, o.seed);
      const auto rep = construct::mu_equalities_check(inst, seq, samples, o.seed, o.fault == "mu" ? 0.75 : 0.0);
      std::string why;
      if (seq.r() != p) why = "r = " + std::to_string(seq.r());
      else if (!checks.increasing) why = "roots not strictly increasing";
      else if (!(checks.sl2_commutation_residual < 1e-10)) why = "sl2 copies commute only to " + fmt(checks.sl2_commutation_residual);
      else if (checks.centralizer_dim != checks.a_prime_dim) why = "centralizer of a' has dimension " + std::to_string(checks.centralizer_dim);
      else if (checks.u_dim != checks.ph_dim) why = "dim u = " + std::to_string(checks.u_dim) + ", dim(p∩h) = " + std::to_string(checks.ph_dim);
      else if (!checks.passed()) why = "sequence residuals above tolerance";
      else if (rotated.lambdas != seq.lambdas) why = "rotated root-space bases change the roots";
      else if (!rep.passed()) {
        why = "mu equalities failed:";
        for (const auto& row : rep.rows)
          if (!row.stats.passed()) why += " " + row.subgroup + " (max distance " + fmt(row.stats.max_distance) + ")";
        if (!(rep.preimage_max_difference < 1e-8)) why += " preimage difference " + fmt(rep.preimage_max_difference);
      }
      if (!why.empty() && out.passed) {
        out.passed = false;
        out.detail = label + ": " + why;
      }
    }
  if (out.passed) out.detail = std::to_string(cases) + " pairs (p <= q, p+q <= 7), " + std::to_string(samples) + " samples per subgroup";
  return out;
}

Outcome criterion_roots(const Options&) {
  Outcome out;
  struct Entry {
    rootsys::Family family;
    int lo, hi;
  };
  const Entry catalog[] = {{rootsys::Family::A, 1, 6}, {rootsys::Family::B, 2, 6}, {rootsys::Family::C, 2, 6},
                           {rootsys::Family::D, 3, 6}, {rootsys::Family::BC, 1, 6}};
  int systems = 0, subsets = 0;
  for (const auto& e : catalog)
    for (int r = e.lo; r <= e.hi; ++r) {
      const auto rs = rootsys::build_root_system(e.family, r);
      ++systems;
      for (int mask = 0; mask < (1 << r); ++mask) {
        std::set<int> pp;
        for (int i = 0; i < r; ++i)
          if (mask & (1 << i)) pp.insert(i);
        ++subsets;
        const bool abelian = rootsys::horospherical_is_abelian(rs, pp);
        const bool depth_one = rootsys::grading_depth(rs, pp) <= 1;
        bool agree = abelian == depth_one;
        if (static_cast<int>(pp.size()) == r - 1) agree = agree && abelian == rootsys::levi_condition_v(rs, pp);
        if (!agree && out.passed) {
          out.passed = false;
          out.detail = rs.label() + " with " + std::to_string(r - static_cast<int>(pp.size())) + " root(s) removed (mask " +
                       std::to_string(mask) + "): pair-sum " + (abelian ? "abelian" : "non-abelian");
        }
      }
    }
  if (out.passed) out.detail = std::to_string(systems) + " systems, " + std::to_string(subsets) + " subsets";
  return out;
}

Outcome criterion_in_p(const Options& o) {
  Outcome out;
  int pairs = 0, in_p = 0;
  double worst = 0.0;
  for (Field f : {Field::R, Field::C, Field::H})
    for (int n = 2; n <= 5; ++n) {
      const liealg::MatrixAlgebraContext ctx(f, n);
      const auto& spaces = ctx.root_spaces();
      for (std::uint64_t i = 0; i < 100; ++i) {
        auto eng = counter_engine(o.seed + static_cast<std::uint64_t>(n) * 1000 + static_cast<std::uint64_t>(f), i);
        const auto& rsp = spaces[eng() % spaces.size()];
        auto combo = [&] {
          Mat x = Mat::Zero(ctx.rep(), ctx.rep());
          for (const auto& b : rsp.basis) x += gaussian(eng) * b;
          return Mat(x / ctx.norm_theta(x));
        };
        const Mat x = combo();
        const Mat xp = i % 2 == 0 ? Mat(gaussian(eng) * x) : combo();
        const auto tb = liealg::bracket_theta_identity(ctx, rsp.root, x, xp);
        ++pairs;
        worst = std::max(worst, tb.p_residual);
        if (!(tb.p_residual < 1e-10) && out.passed) {
          out.passed = false;
          out.detail = ctx.name() + " root " + rsp.root.str() + ": p-residual " + fmt(tb.p_residual);
        }
        if (tb.k_norm < 1e-10) {
          ++in_p;
          if (linalg::numerical_rank(linalg::vec_columns({x, xp}), 1e-8) > 1 && out.passed) {
            out.passed = false;
            out.detail = ctx.name() + " root " + rsp.root.str() + ": bracket in p for an independent pair";
          }
        }
      }
    }
  if (out.passed)
    out.detail = std::to_string(pairs) + " pairs, " + std::to_string(in_p) + " with bracket in p, max residual " + fmt(worst);
  return out;
}

Outcome criterion_decay(const Options& o) {
  Outcome out;
  std::string summary;
  for (const auto& [p, q] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{2, 3}})
    for (const char* variant : {"group", "compact"}) {
      const auto d = construct::decay_experiment(p, q, 10.0, 0.5, variant, o.seed);
      const bool ok = std::abs(d.slope_ratio - 1.0) <= 0.1 && d.end_ratio < 1e-3;
      if (!summary.empty()) summary += ", ";
      summary += "(" + std::to_string(p) + "," + std::to_string(q) + "," + variant + ") " + fmt(d.slope_ratio);
      if (!ok && out.passed) {
        out.passed = false;
        out.detail = "(" + std::to_string(p) + "," + std::to_string(q) + ") " + variant + ": slope/rate " +
                     fmt(d.slope_ratio) + ", end ratio " + fmt(d.end_ratio);
      }
    }
  if (out.passed) out.detail = "slope/rate " + summary;
  return out;
}

Outcome criterion_integrity(const Options& o) {
  Outcome out;
  checker::VerdictConfig base;
  base.samples = 100;
  base.conjugation_samples = 20;
  base.seed = o.seed;
  struct Case {
    std::string label;
    checker::SpaceSpec space;
    std::vector<std::string> applicable;
  };
  const std::vector<Case> cases = {
      {"SL(5,3,C)", checker::SpaceSpec::sl_over_sl(5, 3, Field::C), {"epsilon", "trace", "mu", "d"}},
      {"SL(4,2,R)", checker::SpaceSpec::sl_over_sl(4, 2, Field::R), {"epsilon", "trace", "mu", "d"}},
      {"SL(5)/SO(2,3)", checker::SpaceSpec::sl_over_so(2, 3), {"trace", "mu", "d"}},
      {"A3 minus alpha_2", checker::SpaceSpec::levi(rootsys::build_root_system(rootsys::Family::A, 3), {0, 2}),
       {"trace", "d"}},
  };
  int verdicts = 0;
  auto fail = [&](const std::string& why) {
    if (out.passed) out.detail = why;
    out.passed = false;
  };
  for (const auto& c : cases) {
    const auto clean = checker::verdict(c.space, base);
    ++verdicts;
    if (clean.conclusion != "no_compact_form" || !clean.integrity_ok()) fail(c.label + ": clean verdict is " + clean.conclusion);
    for (const std::string fault : {"epsilon", "trace", "mu", "d"}) {
      auto cfg = base;
      cfg.faults.perturb_epsilon = fault == "epsilon";
      cfg.faults.break_trace = fault == "trace";
      cfg.faults.break_mu = fault == "mu";
      cfg.faults.break_d = fault == "d";
      const auto v = checker::verdict(c.space, cfg);
      ++verdicts;
      bool all = true;
      for (const auto& ch : v.checks) all = all && ch.passed;
      const bool applicable = std::find(c.applicable.begin(), c.applicable.end(), fault) != c.applicable.end();
      if ((v.conclusion == "no_compact_form") != all)
        fail(c.label + " with " + fault + " fault: conclusion " + v.conclusion + " disagrees with its checks");
      else if (applicable && all)
        fail(c.label + ": " + fault + " fault went undetected");
      else if (applicable && v.conclusion == "no_compact_form")
        fail(c.label + ": " + fault + " fault still yields no_compact_form");
    }
  }
  std::string violation;
  if (!checker::prior_consistency(40, &violation)) fail("prior results: " + violation);
  if (out.passed) out.detail = std::to_string(verdicts) + " verdicts under fault injection; prior results consistent for m <= 40";
  return out;
}

}  // namespace

void validate(const Options& options) {
  const auto& f = options.fault;
  if (!(f.empty() || f == "epsilon" || f == "trace" || f == "mu" || f == "d"))
    throw std::invalid_argument("unknown fault '" + f + "' (expected epsilon, trace, mu or d)");
}

std::vector<CriterionResult> run(const Options& options, const std::function<void(const CriterionResult&)>& on_result) {
  validate(options);
  struct Spec {
    int id;
    const char* name;
    double budget;
    Outcome (*fn)(const Options&);
  };
  const Spec specs[] = {
      {1, "epsilon table", 1.0, criterion_epsilon},
      {2, "trace identities", 10.0, criterion_trace},
      {3, "mu containment and conjugation into S", 30.0, criterion_mu},
      {4, "strongly orthogonal sequence", 60.0, criterion_sequence},
      {5, "root combinatorics", 5.0, criterion_roots},
      {6, "bracket identity in p", 5.0, criterion_in_p},
      {7, "conjugacy-limit decay", 5.0, criterion_decay},
      {8, "verdict integrity", 5.0, criterion_integrity},
  };
  std::vector<CriterionResult> results;
  for (const auto& s : specs) {
    CriterionResult r;
    r.id = s.id;
    r.name = s.name;
    r.budget_seconds = s.budget;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = s.fn(options);
    } catch (const std::exception& e) {
      out.passed = false;
      out.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.passed = out.passed && r.seconds <= r.budget_seconds;
    r.detail = out.detail;
    if (out.passed && !r.passed) r.detail += " (over the time budget)";
    results.push_back(r);
    if (on_result) on_result(r);
  }
  return results;
}

}  // namespace ckf::acceptance
