#include "ckf/matrix.hpp"

#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

namespace ckf {

std::string_view to_string(Field f) {
  switch (f) {
    case Field::R: return "R";
    case Field::C: return "C";
    case Field::H: return "H";
  }
  return "?";
}

Field field_from_string(std::string_view s) {
  if (s == "R") return Field::R;
  if (s == "C") return Field::C;
  if (s == "H") return Field::H;
  throw std::invalid_argument("unknown field '" + std::string(s) + "' (expected R, C or H)");
}

int real_dim(Field f) {
  switch (f) {
    case Field::R: return 1;
    case Field::C: return 2;
    case Field::H: return 4;
  }
  return 0;
}

int rep_size(Field f, int n) { return f == Field::H ? 2 * n : n; }

Mat embed(Field f, const Mat& a, const Mat& b) {
  if (f != Field::H) {
    if (f == Field::R) return Mat(a.real().cast<cplx>());
    return a;
  }
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw dimension_error("quaternionic blocks differ in shape");
  const Eigen::Index r = a.rows(), c = a.cols();
  Mat m(2 * r, 2 * c);
  m.topLeftCorner(r, c) = a;
  m.topRightCorner(r, c) = -b.conjugate();
  m.bottomLeftCorner(r, c) = b;
  m.bottomRightCorner(r, c) = a.conjugate();
  return m;
}

Mat quaternion_a(Field f, const Mat& m) {
  if (f != Field::H) return m;
  return m.topLeftCorner(m.rows() / 2, m.cols() / 2);
}

Mat quaternion_b(Field f, const Mat& m) {
  if (f != Field::H) return Mat::Zero(m.rows(), m.cols());
  return m.bottomLeftCorner(m.rows() / 2, m.cols() / 2);
}

RMat entry_norms(Field f, const Mat& m) {
  const Mat a = quaternion_a(f, m);
  const Mat b = quaternion_b(f, m);
  return (a.cwiseAbs2() + b.cwiseAbs2()).cwiseSqrt();
}

double structure_defect(Field f, const Mat& m) {
  switch (f) {
    case Field::R: return m.imag().cwiseAbs().maxCoeff();
    case Field::C: return 0.0;
    case Field::H: {
      const Eigen::Index r = m.rows() / 2, c = m.cols() / 2;
      const double d1 = (m.bottomRightCorner(r, c) - m.topLeftCorner(r, c).conjugate()).cwiseAbs().maxCoeff();
      const double d2 = (m.topRightCorner(r, c) + m.bottomLeftCorner(r, c).conjugate()).cwiseAbs().maxCoeff();
      return std::max(d1, d2);
    }
  }
  return 0.0;
}

const std::vector<KUnit>& units(Field f) {
  static const std::vector<KUnit> real{{1.0, 0.0}};
  static const std::vector<KUnit> complex{{1.0, 0.0}, {cplx(0, 1), 0.0}};
  static const std::vector<KUnit> quaternion{
      {1.0, 0.0}, {cplx(0, 1), 0.0}, {0.0, 1.0}, {0.0, cplx(0, 1)}};
  switch (f) {
    case Field::R: return real;
    case Field::C: return complex;
    case Field::H: return quaternion;
  }
  return real;
}

Mat expm(const Mat& x) { return x.exp(); }

Mat bracket(const Mat& x, const Mat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols() || x.rows() != x.cols())
    throw dimension_error("bracket: operands differ in size");
  return x * y - y * x;
}

}  // namespace ckf
