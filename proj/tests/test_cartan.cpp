#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "ckf/cartan.hpp"
#include "ckf/rng.hpp"
#include "ckf/subgroups.hpp"

using namespace ckf;
using namespace ckf::cartan;

namespace {

// Independent spectral oracle: characteristic polynomial of the Hermitian
// matrix g^* g by Faddeev-LeVerrier, roots isolated by bisection between the
// critical points obtained recursively from the derivative.
std::vector<double> poly_roots(const std::vector<double>& c) {  // c[0] + c[1] x + ... monic
  const int deg = static_cast<int>(c.size()) - 1;
  auto eval = [&c](double x) {
    double v = 0.0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * x + c[static_cast<std::size_t>(i)];
    return v;
  };
  if (deg == 1) return {-c[0] / c[1]};
  std::vector<double> d(static_cast<std::size_t>(deg));
  for (int i = 1; i <= deg; ++i) d[static_cast<std::size_t>(i - 1)] = i * c[static_cast<std::size_t>(i)];
  std::vector<double> crit = poly_roots(d);
  double bound = 1.0;
  for (int i = 0; i < deg; ++i) bound = std::max(bound, 1.0 + std::abs(c[static_cast<std::size_t>(i)] / c.back()));
  std::vector<double> pts{-bound};
  pts.insert(pts.end(), crit.begin(), crit.end());
  pts.push_back(bound);
  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double lo = pts[i], hi = pts[i + 1];
    double flo = eval(lo), fhi = eval(hi);
    if (flo == 0.0) { roots.push_back(lo); continue; }
    if (flo * fhi > 0.0) {
      // Double root at a critical point: take the endpoint with the smaller value.
      if (std::abs(fhi) < 1e-9 * (1.0 + std::abs(hi))) roots.push_back(hi);
      continue;
    }
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = eval(mid);
      if ((fm < 0) == (flo < 0)) { lo = mid; flo = fm; } else { hi = mid; }
    }
    roots.push_back(0.5 * (lo + hi));
  }
  return roots;
}

std::vector<double> oracle_log_singular_values(const Mat& g) {
  const Mat a = g.adjoint() * g;
  const int n = static_cast<int>(a.rows());
  std::vector<double> c(static_cast<std::size_t>(n + 1));
  c[static_cast<std::size_t>(n)] = 1.0;
  Mat m = Mat::Zero(n, n);
  for (int k = 1; k <= n; ++k) {
    m = a * m + c[static_cast<std::size_t>(n - k + 1)] * Mat::Identity(n, n);
    c[static_cast<std::size_t>(n - k)] = -(a * m).trace().real() / k;
  }
  auto roots = poly_roots(c);
  std::vector<double> out;
  for (double r : roots) out.push_back(0.5 * std::log(r));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Mat random_sl(Field f, int n, std::mt19937_64& eng) {
  Mat g = Mat::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) += cplx(0.7 * gaussian(eng), f == Field::C ? 0.7 * gaussian(eng) : 0.0);
  const cplx det = g.determinant();
  return g / std::pow(det, 1.0 / n);
}

}  // namespace

TEST_CASE("mu agrees with the characteristic-polynomial oracle") {
  for (Field f : {Field::R, Field::C})
    for (int n = 2; n <= 4; ++n)
      for (std::uint64_t s = 0; s < 25; ++s) {
        auto eng = counter_engine(11, s);
        const Mat g = random_sl(f, n, eng);
        const auto v = mu(f, n, g);
        const auto oracle = oracle_log_singular_values(g);
        REQUIRE(oracle.size() == v.size());
        for (std::size_t i = 0; i < v.size(); ++i) CHECK(std::abs(v[i] - oracle[i]) < 1e-8);
      }
}

TEST_CASE("mu of exp of a diagonal is the descending rearrangement") {
  Mat x = Mat::Zero(4, 4);
  x.diagonal() << 0.3, -1.2, 2.0, -1.1;
  const auto v = mu(Field::R, 4, expm(x));
  const std::vector<double> expect{2.0, 0.3, -1.1, -1.2};
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(v[i] - expect[i]) < 1e-12);
}

TEST_CASE("quaternionic mu keeps one value per pair") {
  auto eng = counter_engine(3, 0);
  const auto fam = SubgroupFamily::sl_sub(Field::H, 3, 3);
  const auto v = mu(Field::H, 3, fam.sample(eng));
  CHECK(v.size() == 3);
  Mat bad = Mat::Identity(6, 6);
  bad(0, 0) = 2.0;
  bad(5, 5) = 0.5;
  CHECK_THROWS_AS(mu(Field::H, 3, bad), std::invalid_argument);
}

TEST_CASE("mu rejects singular and non-unimodular input") {
  CHECK_THROWS_AS(mu(Field::R, 2, Mat::Zero(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(mu(Field::R, 2, Mat(2.0 * Mat::Identity(2, 2))), std::invalid_argument);
  CHECK_THROWS_AS(mu(Field::R, 3, Mat::Identity(2, 2)), dimension_error);
}

TEST_CASE("mu is invariant under the compact group on both sides") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    auto eng = counter_engine(21, s);
    const Mat g = random_sl(Field::R, 4, eng);
    const Mat k1 = random_special_orthogonal(4, eng).cast<cplx>();
    const Mat k2 = random_special_orthogonal(4, eng).cast<cplx>();
    const auto a = mu(Field::R, 4, g), b = mu(Field::R, 4, k1 * g * k2);
    CHECK(std::abs(a.norm() - b.norm()) < 1e-9);
  }
}

TEST_CASE("model set distances") {
  CHECK(model_membership_distance(MuModelSet::sl_block(4, 2), CartanVector({0.7, 0.0, 0.0, -0.7})) == 0.0);
  CHECK(model_membership_distance(MuModelSet::so_pq(1, 2), CartanVector({1.3, 0.0, -1.3})) == 0.0);
  const double scale = 5.0;
  CHECK(model_membership_distance(MuModelSet::sl_block(4, 2), CartanVector({3 / scale, 1 / scale, -1 / scale, -3 / scale})) ==
        doctest::Approx(std::sqrt(2.0) / scale));
  CHECK(model_membership_distance(MuModelSet::zero(3), CartanVector({1.0, 0.0, -1.0})) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("model distance is 1-Lipschitz") {
  const auto set = MuModelSet::so_pq(2, 3);
  for (std::uint64_t s = 0; s < 200; ++s) {
    auto eng = counter_engine(8, s);
    auto draw = [&eng] {
      std::vector<double> x(5);
      double sum = 0.0;
      for (auto& e : x) sum += (e = gaussian(eng));
      for (auto& e : x) e -= sum / 5.0;
      std::sort(x.begin(), x.end(), std::greater<>());
      return x;
    };
    const auto a = draw(), b = draw();
    double dist = 0.0;
    for (int i = 0; i < 5; ++i) dist += (a[i] - b[i]) * (a[i] - b[i]);
    CHECK(std::abs(model_membership_distance(set, CartanVector(a)) - model_membership_distance(set, CartanVector(b))) <=
          std::sqrt(dist) + 1e-12);
  }
}

TEST_CASE("unipotent sl2 projection and its inverse") {
  for (double t : {0.0, 0.1, 1.0, 7.5, 300.0}) {
    Mat u = Mat::Identity(2, 2);
    u(0, 1) = t;
    CHECK(mu(Field::R, 2, u)[0] == doctest::Approx(mu_unipotent_sl2(t)).epsilon(1e-12));
    CHECK(mu_unipotent_sl2_inverse(mu_unipotent_sl2(t)) == doctest::Approx(t).epsilon(1e-10));
  }
}

TEST_CASE("chamber vectors are validated") {
  CHECK_THROWS(CartanVector({0.0, 1.0, -1.0}));
  CHECK_THROWS(CartanVector({1.0, 0.0}));
}
