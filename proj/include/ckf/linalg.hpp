#pragma once

// Rank-revealing helpers shared by the subspace computations. Every routine
// works on real coordinate vectors; complex matrices enter through vec().

#include <vector>

#include "ckf/matrix.hpp"

namespace ckf::linalg {

/// Default relative tolerance for numerical rank decisions.
inline constexpr double kRankTol = 1e-10;

/// Real coordinates (real parts then imaginary parts, column-major) of a complex matrix.
RVec vec(const Mat& m);
/// Inverse of vec() for an n x n matrix.
Mat unvec(const RVec& v, Eigen::Index n);

/// Stack vec() of each matrix as a column.
RMat vec_columns(const std::vector<Mat>& mats);

/// Numerical rank with threshold rel_tol * (largest singular value).
int numerical_rank(const RMat& a, double rel_tol = kRankTol);

/// Orthonormal basis of the null space of a (columns), from the SVD.
RMat kernel(const RMat& a, double rel_tol = kRankTol);

/// Orthonormal basis of the column span of a, dropping dependent directions.
RMat orthonormalize(const RMat& a, double rel_tol = kRankTol);

/// Norm of the component of v orthogonal to the span of the orthonormal columns q.
double distance_to_span(const RMat& q, const RVec& v);

/// Largest principal-angle sine between two subspaces given by orthonormal columns;
/// returns 1 when the dimensions differ.
double subspace_gap(const RMat& q1, const RMat& q2);

/// Combine matrices with real coefficients.
Mat combine(const std::vector<Mat>& basis, const RVec& coeffs);

}  // namespace ckf::linalg
