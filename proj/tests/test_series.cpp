#include <doctest.h>

#include "groth/series.hpp"
#include "groth/enumerate.hpp"
#include "support.hpp"

using testing::D;

using namespace groth;

namespace {

Monomial mono(std::vector<int> x, std::vector<int> y, std::vector<int> z) { return Monomial{std::move(x), std::move(y), std::move(z)}; }

}  // namespace

TEST_CASE("ring identities") {
  Truncation t{2, 0, 0, 2};
  Series x1 = Series::variable(t, 'x', 1), x2 = Series::variable(t, 'x', 2);
  CHECK(x1 + Series(t) == x1);
  CHECK(x1 * Series::one(t) == x1);
  CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
  CHECK(((x1 * x1) * x1).is_zero());
}

TEST_CASE("groth on one box") {
  Series s = groth::groth(Partition{1}, {0, 2, 0, 2});
  CHECK(s.to_text() == "y1 + y2 - z1*y1*y2");
  CHECK(groth::groth(Partition{}, {2, 2, 0, 3}).to_text() == "1");
}

TEST_CASE("groth coefficient at the worked-example monomial" * doctest::test_suite("slow")) {
  // Its overweight totals 7, so the OT stream needs an extra-entry budget of 7.
  const Tableau p = D("{1'11}{12'}{23'},{2'}2{3'33},{2'3'}3");
  long count = 0;
  int seen = 0;
  for_each_OT(Partition{3, 3, 2}, {3, 3}, 7, [&](const Tableau& t) {
    seen += t == p;
    if (left_weight(t) == WeightVector{3, 2, 3} && right_weight(t) == WeightVector{1, 3, 3} &&
        overweight(t) == WeightVector{3, 1, 3})
      ++count;
  });
  CHECK(seen == 1);
  CHECK(count >= 1);
  Series g = groth::groth(Partition{3, 3, 2}, {3, 3, 0, 15});
  CHECK(g.coeff(mono({3, 2, 3}, {1, 3, 3}, {3, 1, 3})) == mpz_class(-count));
}

TEST_CASE("groth_dual small cases") {
  CHECK(groth_dual(Partition{1}, {1, 1, 0, std::nullopt}).to_text() == "x1 + y1");
  CHECK(groth_dual(Partition{2}, {1, 0, 0, std::nullopt}).to_text() == "x1^2 + z1*x1");
}

TEST_CASE("groth_dual contains the worked-example UT monomial") {
  Series g = groth_dual(Partition{5, 5, 3, 1}, {3, 3, 0, std::nullopt});
  CHECK(g.coeff(mono({3, 1, 2}, {1, 2, 0}, {2, 1, 1, 1})) >= 1);
}

TEST_CASE("refined variants") {
  Series a = refined(Variant::V1A, Partition{1}, 2, 2);
  CHECK(a.to_text() == "x1 + x2 - z1*x1*x2");
  CHECK(a.to_latex() == "x_1+x_2-z_1x_1x_2");
  CHECK(refined(Variant::V1A, Partition{1}, 2, 2, true).to_text() == "x1 + x2 - x1*x2");
  CHECK(refined(Variant::V2B, Partition{1}, 1, std::nullopt).to_text() == "x1");
  for (auto v : {Variant::V1A, Variant::V1B, Variant::V2A, Variant::V2B}) CHECK(parse_variant(to_string(v)) == v);
  CHECK_THROWS_AS(parse_variant("3C"), StructuralError);
}

TEST_CASE("refined series are symmetric in x") {
  for (const auto& lambda : partitions_up_to(3)) {
    CHECK(refined(Variant::V1A, lambda, 3, lambda.size() + 1).symmetric_in('x'));
    CHECK(refined(Variant::V1B, lambda, 3, lambda.size() + 1).symmetric_in('x'));
    CHECK(refined(Variant::V2A, lambda, 3, std::nullopt).symmetric_in('x'));
    CHECK(refined(Variant::V2B, lambda, 3, std::nullopt).symmetric_in('x'));
  }
}

TEST_CASE("PT generating series") {
  CHECK(pt_generating(Partition{1}, 1).to_text() == "x1 + y1");
}

TEST_CASE("JSON form") {
  json j = groth_dual(Partition{1}, {1, 1, 0, std::nullopt}).to_json();
  CHECK(j["terms"].size() == 2);
  CHECK(j["nx"] == 1);
}
