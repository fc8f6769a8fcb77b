#include "doctest.h"

#include "ckf/checker.hpp"
#include "ckf/construct.hpp"

using namespace ckf;
using namespace ckf::checker;

TEST_CASE("epsilon, delta and epsilon' tables") {
  // Values as printed in the source tables, indexed by m mod 4 starting at m = 4.
  const Rational eps_r[] = {Rational(1), Rational(7, 4), Rational(1, 2), Rational(9, 4)};
  const Rational eps_c[] = {Rational(0), Rational(7, 4), Rational(1, 2), Rational(5, 4)};
  const Rational eps_h[] = {Rational(0), Rational(3, 4), Rational(1, 2), Rational(5, 4)};
  for (int m = 2; m <= 40; ++m) {
    const int r = m % 4;
    CHECK(epsilon_table(m, Field::R) == eps_r[r]);
    CHECK(epsilon_table(m, Field::C) == eps_c[r]);
    CHECK(epsilon_table(m, Field::H) == eps_h[r]);
    CHECK(delta_table(m, Field::R) == (m % 2 == 0 ? Rational(1) : Rational(5, 2)));
    CHECK(delta_table(m, Field::C) == (m % 2 == 0 ? Rational(0) : Rational(3, 2)));
    CHECK(delta_table(m, Field::H) == (m % 2 == 0 ? Rational(0) : Rational(1, 2)));
    CHECK(epsilon_prime_table(m, Field::R) == eps_r[r] + (r == 2 ? 1 : 0));
    CHECK(epsilon_prime_table(m, Field::C) == eps_c[r] + (r == 0 ? 1 : 0));
    CHECK(epsilon_prime_table(m, Field::H) == eps_h[r]);
  }
}

TEST_CASE("threshold equals the minimal n from the dimension count") {
  for (const auto& row : epsilon_rows(20)) {
    CAPTURE(row.m);
    CHECK(row.matches);
    CHECK(row.threshold.denominator() == 1);
  }
  CHECK(epsilon_rows(8).size() == 21);
  bool any_broken = false;
  for (const auto& row : epsilon_rows(8, Rational(1, 4))) any_broken = any_broken || !row.matches;
  CHECK(any_broken);
}

TEST_CASE("rational helpers") {
  CHECK(checker::to_string(Rational(13, 4)) == "13/4");
  CHECK(checker::to_string(Rational(3)) == "3");
  CHECK(checker::ceil(Rational(13, 4)) == 4);
  CHECK(checker::ceil(Rational(-13, 4)) == -3);
  CHECK(checker::ceil(Rational(5)) == 5);
}

TEST_CASE("noncompact dimensions against dim h - dim(h ∩ k)") {
  for (Field f : {Field::R, Field::C, Field::H})
    for (int n = 3; n <= 4; ++n)
      for (int m = 2; m < n; ++m) {
        CAPTURE(n);
        CAPTURE(m);
        const liealg::MatrixAlgebraContext ctx(f, n);
        const auto hp = construct::hprime_sl_algebra(ctx, m);
        CHECK(d_noncompact(GroupDescriptor::hprime_sl(f, n, m)) == hp.dim() - liealg::intersect_k(ctx, hp).dim());
        const auto sub = construct::sl_sub_algebra(ctx, m);
        CHECK(d_noncompact(GroupDescriptor::sl(f, m)) == sub.dim() - liealg::intersect_k(ctx, sub).dim());
      }
  for (auto [p, q] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{2, 3}}) {
    const liealg::MatrixAlgebraContext ctx(Field::R, p + q);
    const auto pair = liealg::associated_pair(ctx, liealg::sigma_so_pq(p, q));
    CHECK(d_noncompact(GroupDescriptor::so0(p, q)) == pair.h.dim() - liealg::intersect_k(ctx, pair.h).dim());
    const auto hso = construct::hprime_so_algebra(ctx, p, q);
    CHECK(d_noncompact(GroupDescriptor::hprime_so(p, q)) == hso.dim() - liealg::intersect_k(ctx, hso).dim());
  }
  CHECK(d_noncompact(GroupDescriptor::compact()) == 0);
  CHECK(d_noncompact(GroupDescriptor::hpp_sl(Field::C, 5, 3)) == d_noncompact(GroupDescriptor::hprime_sl(Field::C, 5, 3)) + 1);
}

TEST_CASE("trace-free obstruction on the SL(5)/SO(2,3) instance") {
  const liealg::MatrixAlgebraContext ctx(Field::R, 5);
  const auto hp = construct::hprime_so_algebra(ctx, 2, 3);
  const auto t = trace_free_obstruction(ctx, hp, construct::grading_element_so(2, 3));
  CHECK(t.trace_free_on_h);
  CHECK(t.holds);
  CHECK(t.trace_at_x0 == doctest::Approx(-30.0));

  // An element of h' itself acts with trace zero on g/h'.
  const auto inside = trace_free_obstruction(ctx, hp, hp.basis().front());
  CHECK(inside.trace_at_x0 == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_FALSE(inside.holds);
}

TEST_CASE("prior results") {
  std::string violation;
  CHECK(prior_consistency(40, &violation));
  const auto list = prior_thresholds(5, 3, Field::C);
  REQUIRE_FALSE(list.empty());
  CHECK(list.front().tag == "nonreductive-comparison");
  CHECK(list.front().applies);
  bool has_margulis = false;
  for (const auto& p : list) has_margulis = has_margulis || p.tag.find("margulis") != std::string::npos;
  CHECK_FALSE(has_margulis);
}

TEST_CASE("space specifications are validated") {
  CHECK_THROWS_AS(SpaceSpec::sl_over_sl(3, 3, Field::R), std::invalid_argument);
  CHECK_THROWS_AS(SpaceSpec::sl_over_sl(41, 3, Field::R), std::invalid_argument);
  CHECK_THROWS_AS(SpaceSpec::sl_over_so(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(SpaceSpec::levi(rootsys::build_root_system(rootsys::Family::A, 2), {5}), std::invalid_argument);
}

namespace {

VerdictConfig quick() {
  VerdictConfig c;
  c.samples = 100;
  c.conjugation_samples = 10;
  return c;
}

// Minimal n from the block count, independent of the tables.
int min_n(int m, Field f) {
  const int d = real_dim(f), k = m / 2;
  auto d_sl = [d](long long s) { return d == 1 ? s * (s + 1) / 2 - 1 : (d == 2 ? s * s - 1 : 2 * s * s - s - 1); };
  for (int n = m + 1;; ++n)
    if (d_sl(k) + static_cast<long long>(d) * k * (n - k) >= d_sl(m)) return n;
}

}  // namespace

TEST_CASE("verdicts for SL(n,K)/SL(m,K)") {
  const auto v = verdict(SpaceSpec::sl_over_sl(5, 3, Field::C), quick());
  CHECK(v.conclusion == "no_compact_form");
  CHECK(v.integrity_ok());
  CHECK(v.witness.branch == "equal");
  CHECK(v.alternative.has_value());

  const auto h = verdict(SpaceSpec::sl_over_sl(3, 2, Field::H), quick());
  CHECK((h.conclusion == "no_compact_form") == (3 >= min_n(2, Field::H)));

  const auto below = verdict(SpaceSpec::sl_over_sl(4, 3, Field::R), quick());
  CHECK(below.conclusion == "inconclusive");
  CHECK(below.integrity_ok());
}

TEST_CASE("verdicts are monotone in n") {
  for (Field f : {Field::R, Field::C, Field::H})
    for (int m = 2; m <= 5; ++m) {
      bool seen = false;
      for (int n = m + 1; n <= m + 5; ++n) {
        auto cfg = quick();
        cfg.samples = 20;
        const auto v = verdict(SpaceSpec::sl_over_sl(n, m, f), cfg);
        const bool yes = v.conclusion == "no_compact_form";
        CHECK(yes == (n >= min_n(m, f)));
        if (seen) CHECK(yes);
        seen = seen || yes;
      }
    }
}

TEST_CASE("verdicts for SL(p+q,R)/SO0(p,q) and Levi pairs") {
  const auto v = verdict(SpaceSpec::sl_over_so(2, 3), quick());
  CHECK(v.conclusion == "no_compact_form");
  REQUIRE(v.witness.trace_x0.has_value());
  CHECK(*v.witness.trace_x0 == doctest::Approx(-30.0));

  const auto a3 = rootsys::build_root_system(rootsys::Family::A, 3);
  CHECK(verdict(SpaceSpec::levi(a3, rootsys::complement_of(a3, 1)), quick()).conclusion == "no_compact_form");
  const auto b3 = rootsys::build_root_system(rootsys::Family::B, 3);
  CHECK(verdict(SpaceSpec::levi(b3, rootsys::complement_of(b3, 1)), quick()).conclusion == "inconclusive");
  // Π' = Π: H is compact, so nothing is claimed.
  CHECK(verdict(SpaceSpec::levi(a3, rootsys::all_simple(a3)), quick()).conclusion == "inconclusive");
}

TEST_CASE("fault injection never yields no_compact_form") {
  for (const auto& space : {SpaceSpec::sl_over_sl(5, 3, Field::C), SpaceSpec::sl_over_sl(12, 4, Field::H),
                            SpaceSpec::sl_over_so(2, 3)}) {
    for (int fault = 0; fault < 4; ++fault) {
      auto cfg = quick();
      cfg.faults.perturb_epsilon = fault == 0;
      cfg.faults.break_trace = fault == 1;
      cfg.faults.break_mu = fault == 2;
      cfg.faults.break_d = fault == 3;
      const auto v = verdict(space, cfg);
      if (space.family == SpaceSpec::Family::SLoverSO && fault == 0) {
        CHECK(v.conclusion == "no_compact_form");
        continue;
      }
      CHECK(v.conclusion == "inconclusive");
      CHECK_FALSE(v.integrity_ok());
    }
  }
}
