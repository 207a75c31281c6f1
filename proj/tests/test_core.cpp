#include <doctest.h>

#include "groth/core.hpp"
#include "groth/json_io.hpp"
#include "support.hpp"

using namespace groth;
using testing::D;

TEST_CASE("conjugate partitions") {
  CHECK(conjugate(Partition{3, 3, 2}) == Partition{3, 3, 2});
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{1, 1, 1}) == Partition{3});
  CHECK(conjugate(Partition{4, 2, 1}) == Partition{3, 2, 1, 1});
  for (const auto& p : partitions_up_to(7)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("partition construction rejects non-partitions") {
  CHECK_THROWS_AS(Partition({1, 2}), StructuralError);
  CHECK_THROWS_AS(Partition({2, 0}), StructuralError);
  CHECK_THROWS_AS(SkewShape(Partition{2}, Partition{3}), StructuralError);
}

TEST_CASE("partition listings") {
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_up_to(4).size() == 1 + 1 + 2 + 3 + 5);
  CHECK(subpartitions(Partition{2, 1}).size() == 5);
  for (const auto& rho : superpartitions_same_rows(Partition{2, 1}, 5)) {
    CHECK(rho.length() == 2);
    CHECK(rho.contains(Partition{2, 1}));
  }
}

TEST_CASE("letters and boxes") {
  CHECK(parse_letter("3'") == Letter{3, true});
  CHECK(parse_letter("12") == Letter{12, false});
  CHECK_THROWS_AS(parse_letter("x"), StructuralError);
  BoxFill f = BoxFill::of({Letter{1, false}, Letter{1, true}, Letter{1, false}});
  CHECK(f.to_string() == "{1'11}");
  CHECK(f.size() == 3);
  CHECK_THROWS_AS(f.add(Letter{1, true}), StructuralError);
}

TEST_CASE("diagram notation round trips") {
  for (const char* d : {"{1'11}{12'}{23'},{2'}{2}{3'33},{2'3'}{3}", "**{2}{2}{1},**{1}{1},*{1}", "*****,**{1'}{2'}"}) {
    CHECK(diagram(D(d)) == d);
  }
  CHECK_THROWS_AS(D("{1"), StructuralError);
  CHECK_THROWS_AS(D("1*"), StructuralError);
}

TEST_CASE("tableau JSON round trips") {
  Tableau t = D("**1'122332',1'113333'4',1'222'443',1332'3',243',33'");
  CHECK(tableau_from_json(to_json(t)) == t);
  json j = to_json(t);
  j["cells"].push_back(j["cells"][0]);
  CHECK_THROWS_AS(tableau_from_json(j), StructuralError);
}

TEST_CASE("family validation on the worked-example tableaux") {
  Tableau p = D("{1'11}{12'}{23'},{2'}2{3'33},{2'3'}3");
  CHECK(validate(p, Family::OT));
  CHECK_FALSE(validate(p, Family::UT));
  CHECK_FALSE(validate(p, Family::PT));
  Tableau q = D("1'{}1{}1,12'{}2{},2'{}3,3");
  CHECK(validate(q, Family::UT));
  CHECK_FALSE(validate(q, Family::OT));
  CHECK(validate(D("****42,***321,**221,*111"), Family::OFT));
  CHECK(validate(D("****1'5',***2'3'5',**1'2'4',*1'2'3'"), Family::UFT));
  CHECK(validate(D("*****5443'5',****4333'6'8',****3223'6',***322'3'4'"), Family::PFT));
}

TEST_CASE("primed tableau rules") {
  CHECK_FALSE(validate(D("{11'}"), Family::PT));
  CHECK(validate(D("12,2"), Family::PT));
  CHECK_FALSE(validate(D("1,1"), Family::PT));
  CHECK(validate(D("1',1'"), Family::PT));
  CHECK_FALSE(validate(D("1'1'"), Family::PT));
  CHECK(validate(D("11"), Family::PT));
  CHECK(validate(Tableau{SkewShape{}}, Family::PT));
}

TEST_CASE("PT under an arbitrary order") {
  TotalOrder prec = parse_order("1'<1<2<3<2'<4<3'<4'");
  CHECK(validate_pt_order(D("**1'122332',1'113333'4',1'222'443',1332'3',243',33'"), prec));
  CHECK(validate_pt_order(Tableau{SkewShape{}}, prec));
  CHECK_FALSE(validate_pt_order(D("1,1"), parse_order("1'<1<2'<2")));
  CHECK_THROWS_AS(validate_pt_order(D("5"), prec), DomainError);
}

TEST_CASE("weights of the worked-example tableaux") {
  Tableau p = D("{1'11}{12'}{23'},{2'}2{3'33},{2'3'}3");
  // The stated left weight (2,1,3) is not attainable: the displayed filling has (3,2,3).
  CHECK(left_weight(p) == WeightVector{3, 2, 3});
  CHECK(right_weight(p) == WeightVector{1, 3, 3});
  CHECK(overweight(p) == WeightVector{3, 1, 3});
  Tableau q = D("1'{}1{}1,12'{}2{},2'{}3,3");
  CHECK(left_weight(q) == WeightVector{3, 1, 2});
  CHECK(right_weight(q) == WeightVector{1, 2, 0});
  CHECK(underweight(q) == WeightVector{2, 1, 1, 1});
  CHECK(left_weight(Tableau{SkewShape{}}).zero());
  CHECK(overweight(D("12,2")).zero());
  CHECK_THROWS_AS(overweight(q), DomainError);
  CHECK_THROWS_AS(underweight(p), DomainError);
}

TEST_CASE("flag weights") {
  // The displayed over flagged tableau has weight (5,4,1,1).
  CHECK(flag_weight(D("****42,***321,**221,*111")) == WeightVector{5, 4, 1, 1});
  CHECK(flag_weight(D("****1'5',***2'3'5',**1'2'4',*1'2'3'")) == WeightVector{3, 3, 2, 1, 2});
  CHECK(flag_weight(D("*,*")).zero());
  CHECK_THROWS_AS(flag_weight(D("1'{}1{}1,12'{}2{},2'{}3,3")), DomainError);
}

TEST_CASE("total orders") {
  TotalOrder s = TotalOrder::standard(2);
  CHECK(s.to_string() == "1'<1<2'<2");
  CHECK(parse_order(s.to_string()) == s);
  CHECK(s.swapped(1).to_string() == "1'<2'<1<2");
  CHECK(TotalOrder::unprimed_first(2).to_string() == "1<2<1'<2'");
  CHECK_THROWS_AS(parse_order("1<1"), StructuralError);
}
