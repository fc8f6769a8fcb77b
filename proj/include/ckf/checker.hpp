#pragma once

// Verdict assembly: noncompact dimensions, the threshold tables, the
// trace-free obstruction and the certificates for the three space families.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "ckf/liealg.hpp"
#include "ckf/rootsys.hpp"

namespace ckf::checker {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);
/// Smallest integer >= r.
long long ceil(const Rational& r);

// ---- noncompact dimension -------------------------------------------------

struct GroupDescriptor {
  enum class Kind { SL, HprimeSL, HppSL, SO0, HprimeSO, Compact };
  Kind kind = Kind::Compact;
  Field field = Field::R;
  int n = 0, m = 0, p = 0, q = 0;

  static GroupDescriptor sl(Field f, int m) { return {Kind::SL, f, 0, m, 0, 0}; }
  static GroupDescriptor hprime_sl(Field f, int n, int m) { return {Kind::HprimeSL, f, n, m, 0, 0}; }
  static GroupDescriptor hpp_sl(Field f, int n, int m) { return {Kind::HppSL, f, n, m, 0, 0}; }
  static GroupDescriptor so0(int p, int q) { return {Kind::SO0, Field::R, 0, 0, p, q}; }
  static GroupDescriptor hprime_so(int p, int q) { return {Kind::HprimeSO, Field::R, 0, 0, p, q}; }
  static GroupDescriptor compact() { return {}; }

  std::string describe() const;
};

/// d(G) = dim G - dim K as an exact integer.
long long d_noncompact(const GroupDescriptor& g);

// ---- threshold tables --------------------------------------------------------

/// ε(m, K): threshold offset of the nonreductive comparison, by m mod 4.
Rational epsilon_table(int m, Field f);
/// δ(m, K): offset of the reductive comparison threshold 3m/2 + δ, by parity.
Rational delta_table(int m, Field f);
/// ε'(m, K): offset for the Cartan motion group analogue.
Rational epsilon_prime_table(int m, Field f);

/// 5m/4 + ε(m, K).
Rational main_threshold(int m, Field f);

/// min{n >= m + 1 : d(H'(n, m, K)) >= d(SL(m, K))}, by integer search.
int derived_min_n(int m, Field f);

struct EpsilonRow {
  int m = 0;
  Field field = Field::R;
  Rational epsilon;
  Rational threshold;  // 5m/4 + ε
  int derived_min_n = 0;
  bool matches = false;  // derived_min_n == threshold (which is an integer)
};

/// Rows for 2 <= m <= max_m, fields in the order R, C, H. `perturb` adds to every ε.
std::vector<EpsilonRow> epsilon_rows(int max_m, Rational perturb = Rational(0));

// ---- prior results -----------------------------------------------------------

struct PriorResult {
  std::string tag;
  std::string inequality;
  bool applies = false;
  std::string note;
};

/// The comparison list for SL(n, K)/SL(m, K), n > m >= 2; first entry is the present criterion.
std::vector<PriorResult> prior_thresholds(int n, int m, Field f);

/// For every 2 <= m <= max_m, K and n in (m, 3m]: the reductive threshold implies the main one.
bool prior_consistency(int max_m, std::string* first_violation = nullptr);

// ---- trace-free obstruction ---------------------------------------------------

struct TraceObstruction {
  bool trace_free_on_h = false;
  double max_trace_on_h = 0.0;
  double trace_at_x0 = 0.0;
  double extension_difference = 0.0;  // |orthonormal route - random extension route|
  bool holds = false;
};

/// Throws liealg::not_normalizing if X0 does not normalize h.
TraceObstruction trace_free_obstruction(const liealg::MatrixAlgebraContext& ctx, const liealg::Subalgebra& h,
                                        const Mat& x0, std::uint64_t seed = 1);

// ---- verdicts ------------------------------------------------------------------

struct SpaceSpec {
  enum class Family { SLoverSL, SLoverSO, LeviSymmetric };
  Family family = Family::SLoverSL;
  int n = 0, m = 0;
  Field field = Field::R;
  int p = 0, q = 0;
  std::optional<rootsys::RestrictedRootSystem> rs;
  std::set<int> pi_prime;

  static SpaceSpec sl_over_sl(int n, int m, Field f);
  static SpaceSpec sl_over_so(int p, int q);
  static SpaceSpec levi(rootsys::RestrictedRootSystem rs, std::set<int> pi_prime);

  std::string describe() const;
};

/// Deliberate corruption of one certificate component, for integrity tests.
struct FaultPlan {
  bool perturb_epsilon = false;
  bool break_trace = false;
  bool break_mu = false;
  bool break_d = false;

  bool any() const { return perturb_epsilon || break_trace || break_mu || break_d; }
};

struct VerdictConfig {
  std::uint64_t samples = 1000;
  std::uint64_t seed = 20240101;
  double tol_abs = 1e-8;
  double tol_rel = 1e-8;
  std::uint64_t conjugation_samples = 100;
  FaultPlan faults;
};

/// "hypothesis" checks decide applicability; "integrity" checks certify the computation.
struct Check {
  std::string name;
  std::string role;
  bool passed = false;
  std::string detail;
};

struct Witness {
  std::string name;
  long long d_H = 0;
  long long d_Hprime = 0;
  std::string branch;  // "strict" or "equal"
  std::optional<double> trace_x0;
  std::optional<double> trace_expected;
  std::optional<bool> trace_free_on_h;
  std::uint64_t mu_samples = 0;
  std::uint64_t mu_failures = 0;
  double mu_max_distance = 0.0;
  std::string mu_model;
  double c_radius = 0.0;
};

struct Verdict {
  SpaceSpec space;
  std::string conclusion;  // "no_compact_form" or "inconclusive"
  std::string theorem_applied;
  Witness witness;
  std::optional<Witness> alternative;
  std::vector<Check> checks;
  std::vector<PriorResult> prior_results;
  std::vector<std::string> notes;
  std::optional<std::string> threshold;
  VerdictConfig config;

  bool integrity_ok() const;
};

Verdict verdict(const SpaceSpec& space, const VerdictConfig& config);

}  // namespace ckf::checker
