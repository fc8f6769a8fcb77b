#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace ckf {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

/// Base field of the matrix groups SL(n, K).
enum class Field { R, C, H };

std::string_view to_string(Field f);
Field field_from_string(std::string_view s);

/// Real dimension of K (1, 2 or 4).
int real_dim(Field f);

/// Size of the complex matrices representing n x n matrices over K.
/// Quaternionic matrices use the 2n x 2n complex form [[A, -conj(B)], [B, conj(A)]].
int rep_size(Field f, int n);

/// Assemble the represented matrix of the K-matrix A + B j (B ignored unless K = H).
Mat embed(Field f, const Mat& a, const Mat& b);
inline Mat embed(Field f, const Mat& a) { return embed(f, a, Mat::Zero(a.rows(), a.cols())); }

/// Complex part A of a quaternionic representative (or the matrix itself for R, C).
Mat quaternion_a(Field f, const Mat& m);
/// j-part B of a quaternionic representative (zero for R, C).
Mat quaternion_b(Field f, const Mat& m);

/// Entrywise K-norms of the underlying n x n K-matrix.
RMat entry_norms(Field f, const Mat& m);

/// Largest violation of the quaternionic structure (0 for R, C; imaginary parts for R).
double structure_defect(Field f, const Mat& m);

/// Real basis of K as pairs (a, b) meaning a + b j.
struct KUnit {
  cplx a;
  cplx b;
};
const std::vector<KUnit>& units(Field f);

class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ckf

namespace ckf {

/// Matrix exponential (Padé with scaling and squaring).
Mat expm(const Mat& x);

/// Commutator XY - YX.
Mat bracket(const Mat& x, const Mat& y);

}  // namespace ckf
