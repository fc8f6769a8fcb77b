#include "ckf/linalg.hpp"

#include <algorithm>

namespace ckf::linalg {

RVec vec(const Mat& m) {
  const Eigen::Index n = m.size();
  RVec v(2 * n);
  v.head(n) = m.real().reshaped();
  v.tail(n) = m.imag().reshaped();
  return v;
}

Mat unvec(const RVec& v, Eigen::Index n) {
  const Eigen::Index sz = n * n;
  if (v.size() != 2 * sz) throw dimension_error("unvec: coordinate length mismatch");
  Mat m(n, n);
  m.real() = v.head(sz).reshaped(n, n);
  m.imag() = v.tail(sz).reshaped(n, n);
  return m;
}

RMat vec_columns(const std::vector<Mat>& mats) {
  if (mats.empty()) return RMat();
  RMat out(2 * mats.front().size(), static_cast<Eigen::Index>(mats.size()));
  for (std::size_t j = 0; j < mats.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = vec(mats[j]);
  return out;
}

namespace {

int rank_from_singular(const RVec& s, double rel_tol, double floor = 0.0) {
  if (s.size() == 0) return 0;
  const double top = std::max(s(0), floor);
  if (top <= 0.0) return 0;
  return static_cast<int>((s.array() > rel_tol * top).count());
}

}  // namespace

int numerical_rank(const RMat& a, double rel_tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<RMat> svd(a);
  return rank_from_singular(svd.singularValues(), rel_tol);
}

RMat kernel(const RMat& a, double rel_tol) {
  const Eigen::Index n = a.cols();
  if (n == 0) return RMat(0, 0);
  if (a.rows() == 0) return RMat::Identity(n, n);
  Eigen::JacobiSVD<RMat> svd(a, Eigen::ComputeFullV);
  // Maps here act on orthonormal bases, so a map that is pure round-off has full kernel.
  const int r = rank_from_singular(svd.singularValues(), rel_tol, 1.0);
  return svd.matrixV().rightCols(n - r);
}

RMat orthonormalize(const RMat& a, double rel_tol) {
  if (a.cols() == 0) return RMat(a.rows(), 0);
  Eigen::JacobiSVD<RMat> svd(a, Eigen::ComputeThinU);
  const int r = rank_from_singular(svd.singularValues(), rel_tol);
  return svd.matrixU().leftCols(r);
}

double distance_to_span(const RMat& q, const RVec& v) {
  if (q.cols() == 0) return v.norm();
  return (v - q * (q.transpose() * v)).norm();
}

double subspace_gap(const RMat& q1, const RMat& q2) {
  if (q1.cols() != q2.cols()) return 1.0;
  if (q1.cols() == 0) return 0.0;
  const RMat resid = q1 - q2 * (q2.transpose() * q1);
  Eigen::JacobiSVD<RMat> svd(resid);
  return std::min(1.0, svd.singularValues()(0));
}

Mat combine(const std::vector<Mat>& basis, const RVec& coeffs) {
  if (basis.empty()) throw dimension_error("combine: empty basis");
  Mat out = Mat::Zero(basis.front().rows(), basis.front().cols());
  for (std::size_t j = 0; j < basis.size(); ++j) out += coeffs(static_cast<Eigen::Index>(j)) * basis[j];
  return out;
}

}  // namespace ckf::linalg
