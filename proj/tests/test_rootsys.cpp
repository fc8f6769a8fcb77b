#include "doctest.h"

#include "ckf/json_io.hpp"
#include "ckf/rootsys.hpp"

using namespace ckf::rootsys;

namespace {

// Positive roots of the classical families written out in orthonormal
// coordinates and counted directly.
int positive_count_by_formula(Family f, int r) {
  switch (f) {
    case Family::A: return r * (r + 1) / 2;
    case Family::B:
    case Family::C: return r * r;
    case Family::D: return r * (r - 1);
    case Family::BC: return r * r + r;
  }
  return 0;
}

}  // namespace

TEST_CASE("positive root counts of the catalog") {
  for (auto f : {Family::A, Family::B, Family::C, Family::D, Family::BC})
    for (int r = 1; r <= 6; ++r) {
      if ((f == Family::B || f == Family::C) && r < 2) continue;
      if (f == Family::D && r < 3) continue;
      const auto rs = build_root_system(f, r);
      CHECK(static_cast<int>(rs.positive_roots().size()) == positive_count_by_formula(f, r));
      CHECK(static_cast<int>(rs.roots().size()) == 2 * positive_count_by_formula(f, r));
      CHECK(rs.irreducible());
    }
}

TEST_CASE("highest roots") {
  CHECK(highest_root(build_root_system(Family::A, 4)) == RootVector({1, 1, 1, 1}));
  CHECK(highest_root(build_root_system(Family::B, 4)) == RootVector({1, 2, 2, 2}));
  CHECK(highest_root(build_root_system(Family::C, 4)) == RootVector({2, 2, 2, 1}));
  CHECK(highest_root(build_root_system(Family::D, 5)) == RootVector({1, 2, 2, 1, 1}));
  CHECK(highest_root(build_root_system(Family::BC, 3)) == RootVector({2, 2, 2}));
}

TEST_CASE("height-then-lex order") {
  const HeightLexLess less;
  CHECK(less(RootVector({1, 0, 0}), RootVector({0, 1, 0})) == false);
  CHECK(less(RootVector({0, 1, 0}), RootVector({1, 0, 0})));
  CHECK(less(RootVector({1, 0, 0}), RootVector({1, 1, 0})));
  CHECK(less(RootVector({-1, -1, 0}), RootVector({1, 0, 0})));
  const auto rs = build_root_system(Family::A, 3);
  CHECK(lowest_root_in(rs.positive_roots()) == RootVector({0, 0, 1}));
}

TEST_CASE("root vectors reject mixed signs") {
  CHECK_THROWS_AS(RootVector({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(RootVector({0, 0}), std::invalid_argument);
}

TEST_CASE("condition (v) on maximal parabolics") {
  // For A_n every simple root has coefficient 1 in the highest root.
  const auto a4 = build_root_system(Family::A, 4);
  for (int i = 0; i < 4; ++i) CHECK(levi_condition_v(a4, complement_of(a4, i)));
  const auto b3 = build_root_system(Family::B, 3);
  CHECK(levi_condition_v(b3, complement_of(b3, 0)));
  CHECK_FALSE(levi_condition_v(b3, complement_of(b3, 1)));
  CHECK_FALSE(levi_condition_v(b3, complement_of(b3, 2)));
  const auto c3 = build_root_system(Family::C, 3);
  CHECK(levi_condition_v(c3, complement_of(c3, 2)));
  CHECK_FALSE(levi_condition_v(c3, complement_of(c3, 0)));
  const auto d5 = build_root_system(Family::D, 5);
  CHECK(levi_condition_v(d5, complement_of(d5, 0)));
  CHECK(levi_condition_v(d5, complement_of(d5, 3)));
  CHECK(levi_condition_v(d5, complement_of(d5, 4)));
  CHECK_FALSE(levi_condition_v(d5, complement_of(d5, 2)));
  // BC has no coefficient-1 simple root.
  const auto bc3 = build_root_system(Family::BC, 3);
  for (int i = 0; i < 3; ++i) CHECK_FALSE(levi_condition_v(bc3, complement_of(bc3, i)));
  CHECK(levi_condition_v(bc3, all_simple(bc3)));
}

TEST_CASE("abelian nilradical and grading depth") {
  const auto b3 = build_root_system(Family::B, 3);
  CHECK(horospherical_is_abelian(b3, complement_of(b3, 0)));
  CHECK(grading_depth(b3, complement_of(b3, 0)) == 1);
  CHECK_FALSE(horospherical_is_abelian(b3, complement_of(b3, 1)));
  CHECK(grading_depth(b3, complement_of(b3, 1)) == 2);
  CHECK(grading_depth(b3, all_simple(b3)) == 0);
  CHECK(horospherical_is_abelian(b3, all_simple(b3)));
  // Borel: non-abelian once rank >= 2.
  CHECK_FALSE(horospherical_is_abelian(b3, {}));
}

TEST_CASE("sigma split partitions the roots") {
  const auto c4 = build_root_system(Family::C, 4);
  const auto split = split_sigma(c4, {0, 2});
  CHECK(split.zero.size() + split.plus.size() + split.minus.size() == c4.roots().size());
  CHECK(split.plus.size() == split.minus.size());
  for (const auto& r : split.plus) CHECK(split.minus.count(-r) == 1);
}

TEST_CASE("presets for sl(n,K) carry the field multiplicity") {
  for (int d : {1, 2, 4}) {
    const auto rs = preset_sl(4, d);
    CHECK(rs.family() == Family::A);
    CHECK(rs.rank() == 3);
    for (const auto& r : rs.roots()) CHECK(rs.multiplicity(r) == d);
  }
  CHECK_THROWS(preset_so(2, 2));
}

TEST_CASE("root system JSON round trip") {
  const auto rs = build_root_system(Family::BC, 2, MultiplicityProfile{{{1, 2}, {2, 3}, {4, 1}}, 1});
  const auto doc = ckf::json_io::rootsys_to_json(rs);
  CHECK(ckf::json_io::validate(doc, "ckf.rootsys/1").empty());
  const auto back = ckf::json_io::rootsys_from_json(doc);
  CHECK(back.family() == rs.family());
  CHECK(back.rank() == rs.rank());
  REQUIRE(back.roots().size() == rs.roots().size());
  for (const auto& r : rs.roots()) CHECK(back.multiplicity(r) == rs.multiplicity(r));

  auto broken = doc;
  broken["roots"].push_back(ckf::json_io::json::array({3, 3}));
  broken["multiplicities"].push_back(1);
  CHECK_THROWS_AS(ckf::json_io::rootsys_from_json(broken), std::invalid_argument);
}
