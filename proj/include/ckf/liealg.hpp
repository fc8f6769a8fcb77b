#pragma once

// Concrete realizations of sl(n, K) for K = R, C, H together with the
// structures attached to a Cartan involution: theta, the trace form B,
// the inner product B_theta, a maximal abelian subspace a of p and the
// restricted root spaces.

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ckf/linalg.hpp"
#include "ckf/matrix.hpp"
#include "ckf/rootsys.hpp"

namespace ckf::liealg {

using rootsys::RootVector;

struct RootSpace {
  RootVector root;
  std::vector<Mat> basis;  // B_theta-orthonormal
};

/// sl(n, K) with theta(X) = -X^*, B(X, Y) = Re tr(XY) and a = real traceless diagonals.
class MatrixAlgebraContext {
 public:
  MatrixAlgebraContext(Field field, int n);

  Field field() const { return field_; }
  int n() const { return n_; }
  /// Size of the represented complex matrices.
  int rep() const { return rep_size(field_, n_); }
  int dim() const { return static_cast<int>(basis_.size()); }
  std::string name() const;

  Mat theta(const Mat& x) const { return -x.adjoint(); }
  Mat theta_group(const Mat& g) const { return g.adjoint().inverse(); }
  double B(const Mat& x, const Mat& y) const { return (x * y).trace().real(); }
  /// -B(X, theta Y) = Re tr(X Y^*); equals the Euclidean product of vec() coordinates.
  double b_theta(const Mat& x, const Mat& y) const { return (x.array() * y.conjugate().array()).sum().real(); }
  double norm_theta(const Mat& x) const { return std::sqrt(b_theta(x, x)); }

  Mat identity() const { return Mat::Identity(rep(), rep()); }
  Mat zero() const { return Mat::Zero(rep(), rep()); }

  /// B_theta-orthonormal basis of g (root spaces first, then g_0).
  const std::vector<Mat>& basis() const { return basis_; }
  /// vec() of basis() as columns.
  const RMat& basis_vec() const { return basis_vec_; }
  const std::vector<Mat>& a_basis() const { return a_basis_; }
  const std::vector<Mat>& g0_basis() const { return g0_basis_; }

  const rootsys::RestrictedRootSystem& roots() const { return roots_; }
  const std::vector<RootSpace>& root_spaces() const { return root_spaces_; }
  const RootSpace& root_space(const RootVector& lambda) const;

  /// lambda(Z) for Z in a.
  double root_value(const RootVector& lambda, const Mat& z) const;
  /// H_lambda in a with B_theta(H_lambda, Z) = lambda(Z) for all Z in a.
  Mat coroot(const RootVector& lambda) const;

  /// Coordinates in basis(); valid for elements of g.
  RVec coords(const Mat& x) const;
  Mat from_coords(const RVec& c) const;
  /// Distance from x to g in the B_theta norm.
  double distance_to_algebra(const Mat& x) const;

  /// Elementary K-matrix u * E_ij in represented form (0-based indices).
  Mat elementary(int i, int j, const KUnit& u) const;

 private:
  Field field_;
  int n_;
  rootsys::RestrictedRootSystem roots_;
  std::vector<Mat> basis_;
  RMat basis_vec_;
  std::vector<Mat> a_basis_;
  std::vector<Mat> g0_basis_;
  std::vector<RootSpace> root_spaces_;
};

/// Real subspace of g closed under the bracket, kept with a B_theta-orthonormal basis.
class Subalgebra {
 public:
  Subalgebra() = default;
  /// Orthonormalizes the spanning set; dependent vectors are dropped.
  Subalgebra(std::string name, const std::vector<Mat>& spanning, double rel_tol = linalg::kRankTol);

  const std::string& name() const { return name_; }
  const std::vector<Mat>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const RMat& q() const { return q_; }

  double distance(const Mat& x) const;
  Mat project(const Mat& x) const;
  /// max over basis pairs of the distance of [b_i, b_j] to the span.
  double closure_residual() const;

 private:
  std::string name_;
  std::vector<Mat> basis_;
  RMat q_;
};

double b_theta(const MatrixAlgebraContext& ctx, const Mat& x, const Mat& y);

struct Sl2Triple {
  Mat e, f, h;
  /// max of |[h,e]-2e|, |[h,f]+2f|, |[e,f]-h|.
  double residual = 0.0;
};

/// e = X, f = -2/(|H|^2 |X|^2) theta X, h = 2/|H|^2 H_lambda. Throws for X = 0.
Sl2Triple sl2_homomorphism(const MatrixAlgebraContext& ctx, const RootVector& lambda, const Mat& x);

struct ThetaBracket {
  Mat value;            // [X, theta X']
  double p_residual;    // |p-part of [X, theta X'] + B_theta(X, X') H_lambda|
  double k_norm;        // |k-part of [X, theta X']|; zero iff the bracket lies in p
};

ThetaBracket bracket_theta_identity(const MatrixAlgebraContext& ctx, const RootVector& lambda,
                                    const Mat& x, const Mat& x_prime);

/// A linear involution of g described by its action on matrices.
struct Involution {
  std::string name;
  std::function<Mat(const Mat&)> apply;
};

/// sigma(X) = -I_{p,q} X^T I_{p,q}, whose fixed points are so(p, q) in sl(p+q, R).
Involution sigma_so_pq(int p, int q);
/// sigma(X) = I_{p,q} X I_{p,q}, whose fixed points are s(gl(p) + gl(q)).
Involution sigma_block_diagonal(int p, int q);

struct AssociatedPair {
  Subalgebra h;    // fixed points of sigma
  Subalgebra h_a;  // fixed points of sigma theta
  Subalgebra q;    // (-1)-eigenspace of sigma
  double q_vs_orthogonal_complement = 0.0;  // gap between q and the B-orthogonal complement of h
};

AssociatedPair associated_pair(const MatrixAlgebraContext& ctx, const Involution& sigma);

/// Eigenspace {X in g : map(X) = eigenvalue X}.
Subalgebra eigenspace(const MatrixAlgebraContext& ctx, const std::function<Mat(const Mat&)>& map,
                      double eigenvalue, std::string name);

/// s ∩ k and s ∩ p for a theta-stable or arbitrary subspace s.
Subalgebra intersect_k(const MatrixAlgebraContext& ctx, const Subalgebra& s);
Subalgebra intersect_p(const MatrixAlgebraContext& ctx, const Subalgebra& s);

/// Centralizer of `elements` inside the subspace s.
Subalgebra centralizer_in(const Subalgebra& s, const std::vector<Mat>& elements, std::string name);

class not_normalizing : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Largest distance of [X, b] to h over the basis b of h.
double normalizer_residual(const Subalgebra& h, const Mat& x);

/// trace(ad X) on g/h, via orthonormal bases of g and h. Throws not_normalizing.
double trace_on_quotient(const MatrixAlgebraContext& ctx, const Subalgebra& h, const Mat& x);

/// Same quantity through a random (non-orthogonal) extension of a mixed basis of h.
double trace_on_quotient_extended(const MatrixAlgebraContext& ctx, const Subalgebra& h, const Mat& x,
                                  std::uint64_t seed);

/// Dimensions recovered numerically from the adjoint action of a.
struct RootDecompositionDims {
  int g0 = 0;
  int root_total = 0;
  double max_residual = 0.0;  // largest |[Z, X] - lambda(Z) X| over the stored bases
};
RootDecompositionDims restricted_root_decomposition_dims(const MatrixAlgebraContext& ctx);

}  // namespace ckf::liealg
