#include "doctest.h"

#include "ckf/liealg.hpp"
#include "ckf/rng.hpp"

using namespace ckf;
using namespace ckf::liealg;

TEST_CASE("dimension of sl(n,K) and of its root decomposition") {
  for (Field f : {Field::R, Field::C, Field::H})
    for (int n = 2; n <= 4; ++n) {
      const MatrixAlgebraContext ctx(f, n);
      const int d = real_dim(f);
      CHECK(ctx.dim() == d * n * n - (f == Field::C ? 2 : 1));
      // g_0 = a + m, with m the centralizer of a in k: 0, (n-1) imaginary diagonals, or n copies of sp(1).
      const int m_dim = f == Field::R ? 0 : (f == Field::C ? n - 1 : 3 * n);
      const auto dims = restricted_root_decomposition_dims(ctx);
      CHECK(dims.g0 == (n - 1) + m_dim);
      CHECK(dims.root_total == d * n * (n - 1));
      CHECK(dims.max_residual < 1e-12);
    }
}

TEST_CASE("the basis is B_theta-orthonormal and closes under brackets") {
  const MatrixAlgebraContext ctx(Field::C, 3);
  const auto& b = ctx.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) CHECK(std::abs(ctx.b_theta(b[i], b[j]) - (i == j ? 1.0 : 0.0)) < 1e-12);
  double worst = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) worst = std::max(worst, ctx.distance_to_algebra(bracket(b[i], b[j])));
  CHECK(worst < 1e-12);
}

TEST_CASE("theta is an involutive automorphism and B is invariant") {
  const MatrixAlgebraContext ctx(Field::H, 3);
  auto eng = counter_engine(5, 0);
  auto rnd = [&] {
    RVec c(ctx.dim());
    for (int i = 0; i < ctx.dim(); ++i) c(i) = gaussian(eng);
    return ctx.from_coords(c);
  };
  for (int t = 0; t < 10; ++t) {
    const Mat x = rnd(), y = rnd(), z = rnd();
    CHECK((ctx.theta(ctx.theta(x)) - x).norm() < 1e-12);
    CHECK((ctx.theta(bracket(x, y)) - bracket(ctx.theta(x), ctx.theta(y))).norm() < 1e-10);
    CHECK(std::abs(ctx.B(bracket(x, y), z) + ctx.B(y, bracket(x, z))) < 1e-9);
    CHECK(std::abs(ctx.b_theta(x, y) + ctx.B(x, ctx.theta(y))) < 1e-10);
  }
}

TEST_CASE("root spaces are eigenspaces of ad a and coroots represent the roots") {
  for (Field f : {Field::R, Field::C, Field::H}) {
    const MatrixAlgebraContext ctx(f, 4);
    for (const auto& rs : ctx.root_spaces()) {
      CHECK(static_cast<int>(rs.basis.size()) == real_dim(f));
      const Mat h = ctx.coroot(rs.root);
      for (const auto& z : ctx.a_basis()) CHECK(std::abs(ctx.b_theta(h, z) - ctx.root_value(rs.root, z)) < 1e-12);
      for (const auto& x : rs.basis)
        for (const auto& z : ctx.a_basis())
          CHECK((bracket(z, x) - ctx.root_value(rs.root, z) * x).norm() < 1e-12);
    }
  }
}

TEST_CASE("sl2 triples attached to root vectors") {
  const MatrixAlgebraContext ctx(Field::C, 3);
  for (const auto& rs : ctx.root_spaces()) {
    if (!rs.root.positive()) continue;
    const Mat x = 0.6 * rs.basis[0] + 0.8 * rs.basis[1];
    const auto t = sl2_homomorphism(ctx, rs.root, x);
    CHECK(t.residual < 1e-12);
  }
  CHECK_THROWS(sl2_homomorphism(ctx, ctx.root_spaces()[0].root, ctx.zero()));
}

TEST_CASE("associated pair of so(p,q)") {
  for (auto [p, q] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{2, 3}}) {
    const int n = p + q;
    const MatrixAlgebraContext ctx(Field::R, n);
    const auto pair = associated_pair(ctx, sigma_so_pq(p, q));
    CHECK(pair.h.dim() == n * (n - 1) / 2);
    CHECK(pair.h_a.dim() == p * p + q * q - 1);
    CHECK(pair.h.dim() + pair.q.dim() == ctx.dim());
    CHECK(pair.q_vs_orthogonal_complement < 1e-10);
    CHECK(pair.h.closure_residual() < 1e-12);
    CHECK(intersect_p(ctx, pair.h).dim() == p * q);
    CHECK(intersect_k(ctx, pair.h).dim() == p * (p - 1) / 2 + q * (q - 1) / 2);
  }
  const MatrixAlgebraContext ctx(Field::R, 3);
  Involution theta{"theta", [&ctx](const Mat& x) { return ctx.theta(x); }};
  CHECK_THROWS_AS(associated_pair(ctx, theta), std::invalid_argument);
}

TEST_CASE("trace on a quotient is independent of the chosen extension") {
  const MatrixAlgebraContext ctx(Field::R, 4);
  // h = upper triangular traceless matrices; X = diag(3,1,-1,-3) normalizes it.
  std::vector<Mat> span;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) span.push_back(ctx.elementary(i, j, units(Field::R)[0]));
  const Subalgebra h("n", span);
  Mat x = Mat::Zero(4, 4);
  x.diagonal() << 3, 1, -1, -3;
  const double tr = trace_on_quotient(ctx, h, x);
  // g/n is spanned by a and the lower triangular part, whose weights sum to -(sum over i<j of x_i - x_j) = -20.
  CHECK(tr == doctest::Approx(-20.0).epsilon(1e-12));
  CHECK(trace_on_quotient_extended(ctx, h, x, 3) == doctest::Approx(tr).epsilon(1e-9));
  Mat y = Mat::Zero(4, 4);
  y(3, 0) = 1.0;
  CHECK_THROWS_AS(trace_on_quotient(ctx, h, y), not_normalizing);
}
