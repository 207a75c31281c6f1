#include <doctest.h>

#include "groth/symfunc.hpp"
#include "support.hpp"

using namespace groth;

namespace {

SchurExpansion single(const Partition& p, ZPoly c = ZPoly::constant(1)) {
  SchurExpansion e;
  e.add(p, c);
  return e;
}

ZPoly z1(int c = 1) { return ZPoly::monomial(WeightVector{1}, c); }

}  // namespace

TEST_CASE("Schur polynomials") {
  CHECK(schur_poly(Partition{1}, 2).to_text() == "x1 + x2");
  CHECK(schur_poly(Partition{1, 1}, 2).to_text() == "x1*x2");
  Series s = schur_poly(Partition{2, 1}, 3);
  CHECK(s.size() == 7);
  mpz_class total = 0;
  for (const auto& [m, c] : s.terms()) total += c;
  CHECK(total == 8);
  CHECK(schur_poly(Partition{1, 1, 1}, 2).is_zero());
}

TEST_CASE("expansion of a basis element") {
  for (const auto& lambda : partitions_up_to(4)) {
    SchurExpansion e = expand_schur(schur_poly(lambda, 4));
    CHECK(e == single(lambda));
  }
}

TEST_CASE("non-symmetric input is rejected") {
  Truncation t{2, 0, 0, 2};
  CHECK_THROWS_AS(expand_schur(Series::variable(t, 'x', 1)), DomainError);
}

TEST_CASE("expansions of refined series") {
  SchurExpansion b = expand_schur(refined(Variant::V2B, Partition{2}, 2, std::nullopt));
  SchurExpansion want;
  want.add(Partition{2}, ZPoly::constant(1));
  want.add(Partition{1}, z1());
  CHECK(b == want);
  SchurExpansion a = expand_schur(refined(Variant::V1A, Partition{1}, 2, 2));
  SchurExpansion want_a;
  want_a.add(Partition{1}, ZPoly::constant(1));
  want_a.add(Partition{1, 1}, z1(-1));
  CHECK(a == want_a);
}

TEST_CASE("double expansion of the PT series") {
  DoubleSchurExpansion d = expand_schur_xy(pt_generating(Partition{1}, 1));
  CHECK(d.terms.size() == 2);
  CHECK(d.at(Partition{1}, Partition{}) == ZPoly::constant(1));
  CHECK(d.at(Partition{}, Partition{1}) == ZPoly::constant(1));
}

TEST_CASE("omega") {
  CHECK(omega(single(Partition{1})) == single(Partition{1}));
  CHECK(omega(single(Partition{2, 1}, z1())) == single(Partition{2, 1}, z1()));
  CHECK(omega(single(Partition{3, 1})) == single(Partition{2, 1, 1}));
  SchurExpansion e = expand_schur(refined(Variant::V1B, Partition{2, 1}, 4, 5));
  CHECK(omega(omega(e)) == e);
}

TEST_CASE("Hall pairing") {
  CHECK(hall_pair(single(Partition{2, 1}), single(Partition{2, 1})) == ZPoly::constant(1));
  CHECK(hall_pair(single(Partition{2, 1}), single(Partition{3})).is_zero());
}

TEST_CASE("flag-based expansions") {
  CHECK(schur_expansion_via_flags(Partition{1}, FlagSide::Gdual, false) == single(Partition{1}));
  SchurExpansion g = schur_expansion_via_flags(Partition{1}, FlagSide::G, false, 2);
  SchurExpansion want;
  want.add(Partition{1}, ZPoly::constant(1));
  want.add(Partition{2}, z1(-1));
  CHECK(g == want);
  SchurExpansion gd = schur_expansion_via_flags(Partition{2}, FlagSide::Gdual, false);
  SchurExpansion want_d;
  want_d.add(Partition{2}, ZPoly::constant(1));
  want_d.add(Partition{1}, z1());
  CHECK(gd == want_d);
  CHECK(gd == expand_schur(groth_dual(Partition{2}, {2, 0, 0, std::nullopt})));
}

TEST_CASE("small Gram matrix") {
  for (const auto& mu : partitions_up_to(3))
    for (const auto& lambda : partitions_up_to(3)) {
      ZPoly p = hall_pair(expand_schur(refined(Variant::V1B, mu, 3, 3)), expand_schur(refined(Variant::V2B, lambda, 3, std::nullopt)));
      CHECK(p == (mu == lambda ? ZPoly::constant(1) : ZPoly{}));
    }
}
