#pragma once

// Cartan projection for SL(n, K) and the model sets that describe the
// Cartan projections of the subgroups compared in the verdicts.

#include <string>
#include <vector>

#include "ckf/matrix.hpp"

namespace ckf::cartan {

/// Point of the closed positive Weyl chamber: weakly descending, summing to zero.
class CartanVector {
 public:
  CartanVector() = default;
  /// Validates the chamber conditions (descending, |sum| <= 1e-9 (1 + |v|_1)).
  explicit CartanVector(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double norm() const;

 private:
  std::vector<double> values_;
};

/// Smallest singular value accepted before an element counts as singular.
inline constexpr double kSingularFloor = 1e-300;
/// Relative tolerance for the equal pairs of singular values of quaternionic matrices.
inline constexpr double kQuaternionPairTol = 1e-8;

/// mu(g) from the singular values of the represented matrix. For K = H one
/// value is kept per equal pair, giving n coordinates.
CartanVector mu(Field field, int n, const Mat& g);

/// Log of the larger singular value of [[1, t], [0, 1]].
double mu_unipotent_sl2(double t);
/// Inverse on [0, inf): the t >= 0 with mu_unipotent_sl2(t) = value.
double mu_unipotent_sl2_inverse(double value);

struct MuModelSet {
  enum class Kind { SLBlock, SOpq, Zero };
  Kind kind = Kind::Zero;
  int n = 0;
  int m = 0;  // SLBlock
  int p = 0;  // SOpq, p <= q
  int q = 0;

  static MuModelSet sl_block(int n, int m);
  static MuModelSet so_pq(int p, int q);
  static MuModelSet zero(int n);

  std::string describe() const;
};

/// Euclidean distance from v to the model set:
///   SLBlock(m): norm of the n-m smallest-magnitude coordinates;
///   SOpq(p,q):  distance to {v_i + v_{n+1-i} = 0 (i <= p), v_{p+1..q} = 0};
///   Zero:       |v|.
double model_membership_distance(const MuModelSet& set, const CartanVector& v);

/// Acceptance tolerance for a single containment sample.
struct ContainmentTolerance {
  double abs = 1e-8;
  double rel = 1e-8;
  double bound(const CartanVector& v) const { return abs + rel * v.norm(); }
};

}  // namespace ckf::cartan
