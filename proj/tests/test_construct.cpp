#include "doctest.h"

#include "ckf/construct.hpp"

using namespace ckf;
using namespace ckf::construct;

TEST_CASE("block subalgebras have the expected dimensions") {
  for (Field f : {Field::R, Field::C, Field::H})
    for (int n = 3; n <= 5; ++n)
      for (int m = 2; m < n; ++m) {
        const liealg::MatrixAlgebraContext ctx(f, n);
        const int d = real_dim(f), k = m / 2, c = f == Field::C ? 2 : 1;
        const auto hp = hprime_sl_algebra(ctx, m);
        CHECK(hp.dim() == (d * k * k - c) + d * k * (n - k));
        CHECK(hp.closure_residual() < 1e-12);
        CHECK(liealg::normalizer_residual(hp, grading_element_sl(f, n, k)) < 1e-12);
        const auto sub = sl_sub_algebra(ctx, m);
        CHECK(sub.dim() == d * m * m - c);
      }
  const liealg::MatrixAlgebraContext ctx(Field::R, 5);
  const auto hso = hprime_so_algebra(ctx, 2, 3);
  CHECK(hso.dim() == 1 + 3 + 6);
  CHECK(liealg::normalizer_residual(hso, grading_element_so(2, 3)) < 1e-12);
}

TEST_CASE("SVD conjugation of H' into S") {
  for (Field f : {Field::R, Field::C})
    for (auto [n, m] : {std::pair{4, 2}, std::pair{5, 3}, std::pair{6, 4}, std::pair{7, 5}}) {
      const auto fam = SubgroupFamily::hprime_sl(f, n, m);
      const auto s_fam = SubgroupFamily::s_sl(f, n, m);
      for (std::uint64_t i = 0; i < 10; ++i) {
        const auto c = conjugate_to_S(f, n, m, fam.sample(4, i));
        CHECK(c.block_residual < 1e-9);
        CHECK(c.group_residual < 1e-9);
        CHECK(c.mu_difference < 1e-8);
        CHECK(s_fam.contains(c.s));
        for (std::size_t j = 1; j < c.strip.size(); ++j) CHECK(c.strip[j - 1] >= c.strip[j]);
        CHECK(c.strip.back() >= 0.0);
      }
    }
  const auto h = SubgroupFamily::hprime_sl(Field::H, 4, 2);
  CHECK_THROWS(conjugate_to_S(Field::H, 4, 2, h.sample(1, 0)));
}

TEST_CASE("strongly orthogonal sequence for so(2,3)") {
  const SymmetricLeviInstance inst(2, 3);
  const auto seq = strongly_orthogonal_sequence(inst.ctx, inst.u);
  REQUIRE(seq.r() == 2);
  CHECK(rootsys::HeightLexLess{}(seq.lambdas[0], seq.lambdas[1]));
  for (const auto& x : seq.vectors) CHECK(inst.ctx.norm_theta(x) == doctest::Approx(std::sqrt(2.0)));
  const auto checks = check_sequence(inst, seq, 10, 1);
  CHECK(checks.passed());
  CHECK(checks.u_dim == 6);
  CHECK(checks.ph_dim == 6);
  const auto rotated = strongly_orthogonal_sequence_rotated(inst.ctx, inst.u, 77);
  CHECK(rotated.lambdas == seq.lambdas);
  const auto rep = mu_equalities_check(inst, seq, 100, 3);
  CHECK(rep.passed());
  const auto broken = mu_equalities_check(inst, seq, 50, 3, 0.75);
  CHECK_FALSE(broken.passed());
}

TEST_CASE("the sequence needs an abelian horospherical subalgebra") {
  const liealg::MatrixAlgebraContext ctx(Field::R, 3);
  const auto borel = horospherical_data(ctx, {});
  CHECK_THROWS(strongly_orthogonal_sequence(ctx, borel));
}

TEST_CASE("conjugacy-limit decay follows the block gap") {
  for (const std::string variant : {"group", "compact"}) {
    const auto d = decay_experiment(2, 3, 10.0, 0.5, variant, 9);
    CHECK(d.rate == 5.0);
    CHECK(d.slope_ratio == doctest::Approx(1.0).epsilon(0.1));
    CHECK(d.end_ratio < 1e-3);
    for (std::size_t i = 1; i < d.points.size(); ++i)
      if (d.points[i].t >= d.monotone_from) CHECK(d.points[i].distance <= d.points[i - 1].distance);
  }
  CHECK_THROWS(decay_experiment(2, 3, 10.0, 0.5, "other", 9));
}
