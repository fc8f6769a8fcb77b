#include "ckf/cartan.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ckf::cartan {

CartanVector::CartanVector(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] > values_[i - 1]) throw std::invalid_argument("Cartan vector must be weakly descending");
  double sum = 0.0, l1 = 0.0;
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("Cartan vector has non-finite entries");
    sum += v;
    l1 += std::abs(v);
  }
  if (std::abs(sum) > 1e-9 * (1.0 + l1)) throw std::invalid_argument("Cartan vector must sum to zero");
}

double CartanVector::norm() const {
  return std::sqrt(std::inner_product(values_.begin(), values_.end(), values_.begin(), 0.0));
}

CartanVector mu(Field field, int n, const Mat& g) {
  const int r = rep_size(field, n);
  if (g.rows() != r || g.cols() != r)
    throw dimension_error("mu: expected a " + std::to_string(r) + "x" + std::to_string(r) + " matrix");
  if (!g.allFinite()) throw std::invalid_argument("mu: non-finite entries");
  Eigen::JacobiSVD<Mat> svd(g);
  const auto& s = svd.singularValues();  // descending
  if (!(s(r - 1) > kSingularFloor)) throw std::invalid_argument("mu: matrix is not invertible");

  std::vector<double> logs;
  logs.reserve(static_cast<std::size_t>(n));
  if (field == Field::H) {
    for (int i = 0; i < n; ++i) {
      const double a = s(2 * i), b = s(2 * i + 1);
      if (std::abs(a - b) > kQuaternionPairTol * std::max(1.0, a))
        throw std::invalid_argument("mu: singular values of a quaternionic matrix are not paired");
      logs.push_back(std::log(a));
    }
  } else {
    for (int i = 0; i < r; ++i) logs.push_back(std::log(s(i)));
  }
  double sum = 0.0, l1 = 0.0;
  for (double v : logs) {
    sum += v;
    l1 += std::abs(v);
  }
  if (std::abs(sum) > 1e-8 * (1.0 + l1)) throw std::invalid_argument("mu: |det| differs from 1");
  // Remove the rounding drift so the vector lies exactly on the sum-zero hyperplane.
  const double shift = sum / static_cast<double>(logs.size());
  for (double& v : logs) v -= shift;
  std::sort(logs.begin(), logs.end(), std::greater<>());
  return CartanVector(std::move(logs));
}

double mu_unipotent_sl2(double t) {
  const double a = std::abs(t);
  // log((a + sqrt(a^2 + 4)) / 2) = asinh(a / 2), stable for all a.
  return std::asinh(0.5 * a);
}

double mu_unipotent_sl2_inverse(double value) {
  if (value < 0.0) throw std::invalid_argument("mu_unipotent_sl2_inverse: negative value");
  return 2.0 * std::sinh(value);
}

MuModelSet MuModelSet::sl_block(int n, int m) {
  if (m < 1 || m > n) throw std::invalid_argument("SL_block(m) needs 1 <= m <= n");
  MuModelSet s;
  s.kind = Kind::SLBlock;
  s.n = n;
  s.m = m;
  return s;
}

MuModelSet MuModelSet::so_pq(int p, int q) {
  if (p > q) std::swap(p, q);
  if (p < 1) throw std::invalid_argument("SO_pq needs p, q >= 1");
  MuModelSet s;
  s.kind = Kind::SOpq;
  s.n = p + q;
  s.p = p;
  s.q = q;
  return s;
}

MuModelSet MuModelSet::zero(int n) {
  MuModelSet s;
  s.kind = Kind::Zero;
  s.n = n;
  return s;
}

std::string MuModelSet::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::SLBlock: os << "SL_block(" << m << ") in n=" << n; break;
    case Kind::SOpq: os << "SO_pq(" << p << "," << q << ")"; break;
    case Kind::Zero: os << "zero in n=" << n; break;
  }
  return os.str();
}

double model_membership_distance(const MuModelSet& set, const CartanVector& v) {
  if (static_cast<int>(v.size()) != set.n)
    throw dimension_error("model set " + set.describe() + " does not match a vector of length " +
                          std::to_string(v.size()));
  const auto& x = v.values();
  switch (set.kind) {
    case MuModelSet::Kind::SLBlock: {
      std::vector<double> mags;
      for (double c : x) mags.push_back(std::abs(c));
      std::sort(mags.begin(), mags.end());
      double s = 0.0;
      for (int i = 0; i < set.n - set.m; ++i) s += mags[static_cast<std::size_t>(i)] * mags[static_cast<std::size_t>(i)];
      return std::sqrt(s);
    }
    case MuModelSet::Kind::SOpq: {
      const int n = set.n;
      double s = 0.0;
      for (int i = 0; i < set.p; ++i) {
        const double d = x[static_cast<std::size_t>(i)] + x[static_cast<std::size_t>(n - 1 - i)];
        s += 0.5 * d * d;
      }
      for (int j = set.p; j < set.q; ++j) s += x[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
      return std::sqrt(s);
    }
    case MuModelSet::Kind::Zero: return v.norm();
  }
  return 0.0;
}

}  // namespace ckf::cartan
