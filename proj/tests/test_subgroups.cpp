#include "doctest.h"

#include "ckf/rng.hpp"
#include "ckf/sampling.hpp"
#include "ckf/subgroups.hpp"

using namespace ckf;

namespace {

std::vector<SubgroupFamily> families() {
  std::vector<SubgroupFamily> out;
  for (Field f : {Field::R, Field::C, Field::H}) {
    out.push_back(SubgroupFamily::sl_sub(f, 5, 3));
    out.push_back(SubgroupFamily::hprime_sl(f, 5, 3));
    out.push_back(SubgroupFamily::hprime_sl(f, 6, 4));
    out.push_back(SubgroupFamily::s_sl(f, 5, 3));
  }
  out.push_back(SubgroupFamily::hpp_sl(Field::R, 5, 3));
  out.push_back(SubgroupFamily::hpp_sl(Field::C, 6, 5));
  for (auto kind : {SubgroupKind::SO0, SubgroupKind::HprimeSO, SubgroupKind::USO, SubgroupKind::AprimeSO,
                    SubgroupKind::UprimeSO, SubgroupKind::GprimeSO})
    out.push_back(SubgroupFamily::so_family(kind, 2, 3));
  out.push_back(SubgroupFamily::so_compact(4));
  return out;
}

}  // namespace

TEST_CASE("samples are members of their families") {
  for (const auto& fam : families()) {
    CAPTURE(fam.describe());
    for (std::uint64_t i = 0; i < 20; ++i) {
      const Mat g = fam.sample(99, i);
      CHECK(fam.contains(g));
      CHECK(fam.forbidden_norm(g) < 1e-12);
      if (fam.unimodular() && fam.field != Field::H) CHECK(std::abs(g.determinant() - cplx(1.0)) < 1e-8);
    }
  }
}

TEST_CASE("non-members are rejected") {
  const auto hp = SubgroupFamily::hprime_sl(Field::R, 5, 3);
  Mat g = hp.sample(1, 0);
  g(4, 0) = 0.3;
  CHECK_FALSE(hp.contains(g));
  CHECK(hp.forbidden_norm(g) == doctest::Approx(0.3));

  const auto so = SubgroupFamily::so_family(SubgroupKind::SO0, 2, 3);
  Mat h = so.sample(1, 0);
  h(0, 0) *= 1.01;
  CHECK_FALSE(so.contains(h));
}

TEST_CASE("sampling is deterministic in (seed, index)") {
  const auto fam = SubgroupFamily::hprime_sl(Field::C, 5, 2);
  CHECK((fam.sample(5, 7) - fam.sample(5, 7)).norm() == 0.0);
  CHECK((fam.sample(5, 7) - fam.sample(5, 8)).norm() > 0.0);
}

TEST_CASE("factory validation") {
  CHECK_THROWS_AS(SubgroupFamily::hpp_sl(Field::R, 5, 4), std::invalid_argument);
  CHECK_THROWS_AS(SubgroupFamily::hpp_sl(Field::H, 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(SubgroupFamily::hprime_sl(Field::R, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(subgroup_kind_from_string("nope"), std::invalid_argument);
  for (auto name : {"SL_sub", "SO0", "Hprime_sl", "Hpp_sl", "S_sl", "Hprime_so", "U_so", "Aprime_so", "Uprime_so",
                    "G_prime_embedded", "SO_compact"})
    CHECK(to_string(subgroup_kind_from_string(name)) == name);
}

TEST_CASE("random special orthogonal matrices") {
  auto eng = counter_engine(2, 0);
  for (int k = 1; k <= 5; ++k) {
    const RMat q = random_special_orthogonal(k, eng);
    CHECK((q.transpose() * q - RMat::Identity(k, k)).norm() < 1e-12);
    CHECK(q.determinant() == doctest::Approx(1.0));
  }
}

TEST_CASE("serial and parallel containment agree exactly") {
  for (const auto& fam : {SubgroupFamily::hprime_sl(Field::H, 5, 3), SubgroupFamily::so_family(SubgroupKind::HprimeSO, 2, 3)}) {
    const auto a = sampling::family_containment(fam, 300, 17, false);
    const auto b = sampling::family_containment(fam, 300, 17, true);
    CHECK(a.samples == b.samples);
    CHECK(a.failures == b.failures);
    CHECK(a.max_distance == b.max_distance);
    CHECK(a.max_mu_norm == b.max_mu_norm);
    CHECK(a.passed());
  }
}

TEST_CASE("the stretch fault moves H' samples off the block model") {
  const auto fam = SubgroupFamily::hprime_sl(Field::R, 5, 3);
  auto spec = sampling::batch_for(fam, 50, 3);
  spec.fault_stretch = 0.75;
  const sampling::Sampler sampler = [&fam](std::mt19937_64& eng) { return fam.sample(eng); };
  const auto st = sampling::containment_serial(spec, sampler);
  CHECK(st.failures > 0);
  CHECK(st.first_failure < 50);
}
