#pragma once

// Subgroup constructions used by the verdicts: the block subalgebras and
// their grading elements, the SVD conjugation of H' into S, the strongly
// orthogonal sequence in a horospherical subalgebra, and the conjugacy-limit
// decay experiment.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ckf/cartan.hpp"
#include "ckf/liealg.hpp"
#include "ckf/rootsys.hpp"
#include "ckf/sampling.hpp"
#include "ckf/subgroups.hpp"

namespace ckf::construct {

using liealg::MatrixAlgebraContext;
using liealg::Subalgebra;
using rootsys::RootVector;

// ---- block subalgebras of sl(n, K) -------------------------------------

/// Lie algebra of H' = [[g, X], [0, I]], g in SL(k, K), k = floor(m/2).
Subalgebra hprime_sl_algebra(const MatrixAlgebraContext& ctx, int m);
/// diag((n-k) I_k, -k I_{n-k}) in represented form.
Mat grading_element_sl(Field f, int n, int k);

/// Lie algebra of [[so(p), X], [0, so(q)]] in sl(p+q, R).
Subalgebra hprime_so_algebra(const MatrixAlgebraContext& ctx, int p, int q);
/// diag(q I_p, -p I_q).
Mat grading_element_so(int p, int q);

/// Lie algebra of SL(m, K) in the top-left corner.
Subalgebra sl_sub_algebra(const MatrixAlgebraContext& ctx, int m);

// ---- SVD conjugation ----------------------------------------------------

struct SConjugation {
  Mat l;        // SO(k) or SU(k)
  Mat l_prime;  // SO(n-k) or SU(n-k)
  Mat s;        // diag(l, l') h diag(l, l')^{-1}
  std::vector<double> strip;  // t_1 >= ... >= t_k >= 0
  double block_residual = 0.0;  // off-pattern entries of s plus imaginary parts of the strip
  double group_residual = 0.0;  // |l^* l - I|, |det l - 1| and the same for l'
  double mu_difference = 0.0;   // max |mu(s) - mu(h)|
};

/// Conjugates an element of H'(n, m) into S. Implemented for K = R, C.
SConjugation conjugate_to_S(Field f, int n, int m, const Mat& h);

// ---- strongly orthogonal sequences ---------------------------------------

/// Root data of a horospherical subalgebra u = sum of g_lambda, lambda in Σ_{Π',+}.
struct HorosphericalData {
  std::set<int> pi_prime;
  std::vector<RootVector> plus;  // ascending in the fixed order
};

HorosphericalData horospherical_data(const MatrixAlgebraContext& ctx, const std::set<int>& pi_prime);

struct SOSequence {
  std::vector<RootVector> lambdas;
  std::vector<Mat> vectors;
  int r() const { return static_cast<int>(lambdas.size()); }
};

/// Repeatedly takes the lowest root with a nonzero remaining space, picks the first
/// orthonormal vector scaled to |X|_theta = sqrt(2), and cuts every space down to
/// {Y : [X, theta Y] = 0}. Throws if u is not abelian.
SOSequence strongly_orthogonal_sequence(const MatrixAlgebraContext& ctx, const HorosphericalData& u);

/// Same sequence with the initial root-space bases rotated randomly (choice independence).
SOSequence strongly_orthogonal_sequence_rotated(const MatrixAlgebraContext& ctx, const HorosphericalData& u,
                                                std::uint64_t seed);

/// The symmetric pair (sl(p+q, R), so(p, q)) with Π' = Π \ {α_p}.
struct SymmetricLeviInstance {
  int p = 0, q = 0;
  MatrixAlgebraContext ctx;
  liealg::Involution sigma;
  liealg::AssociatedPair pair;
  HorosphericalData u;

  SymmetricLeviInstance(int p, int q);
};

struct SequenceChecks {
  int r = 0;
  bool increasing = false;
  double theta_bracket_residual = 0.0;   // max |[X_k, theta X_l]|, k != l
  double sl2_residual = 0.0;             // max triple-relation residual
  double sl2_commutation_residual = 0.0; // max bracket between distinct copies
  int a_prime_dim = 0;
  double a_prime_in_ph_residual = 0.0;
  int centralizer_dim = 0;
  double centralizer_gap = 0.0;          // subspace gap between a' and its centralizer in p ∩ h
  int u_dim = 0;
  int ph_dim = 0;
  int f_rank_on_u_prime = 0;
  double equivariance_residual = 0.0;
  double f_image_residual = 0.0;         // max distance of X - theta X to p ∩ h over u

  bool passed() const;
};

SequenceChecks check_sequence(const SymmetricLeviInstance& inst, const SOSequence& seq,
                              int equivariance_samples, std::uint64_t seed);

struct MuEqualityRow {
  std::string subgroup;
  sampling::ContainmentStats stats;
};

struct MuEqualityReport {
  std::vector<MuEqualityRow> rows;
  double preimage_max_difference = 0.0;  // |mu(U' sample) - mu(A' preimage)|, max over samples
  double a_prime_pattern_residual = 0.0; // |mu(exp t(X - theta X)) - predicted ±|t| pattern|
  bool passed(double preimage_tol = 1e-8) const;
};

MuEqualityReport mu_equalities_check(const SymmetricLeviInstance& inst, const SOSequence& seq,
                                     std::uint64_t samples, std::uint64_t seed, double fault_stretch = 0.0);

// ---- conjugacy limits ---------------------------------------------------

struct DecayPoint {
  double t = 0.0;
  double distance = 0.0;
};

struct DecayResult {
  std::vector<DecayPoint> points;
  double rate = 0.0;          // documented block-gap rate, p + q
  double slope = 0.0;         // least-squares slope of log distance
  double slope_ratio = 0.0;   // -slope / rate
  double end_ratio = 0.0;     // distance(t_max) / distance(t_0)
  double monotone_from = 0.0; // smallest grid t beyond which distance is nonincreasing
};

/// distance(t) = forbidden entries of exp(t X0) h exp(-t X0) for the limit family.
std::vector<DecayPoint> conjugacy_limit_decay(const Mat& h, const Mat& x0, const SubgroupFamily& limit,
                                              const std::vector<double>& t_grid);

/// Variant "group": h from SO_0(p, q); variant "compact": h from SO(p + q).
DecayResult decay_experiment(int p, int q, double t_max, double step, const std::string& variant,
                             std::uint64_t seed);

}  // namespace ckf::construct
