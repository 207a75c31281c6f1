#include <algorithm>
#include <set>

#include <doctest.h>

#include "groth/enumerate.hpp"
#include "groth/json_io.hpp"
#include "support.hpp"

using namespace groth;
using testing::D;

namespace {

bool contains(const std::vector<Tableau>& all, const Tableau& t) { return std::find(all.begin(), all.end(), t) != all.end(); }

// All boxes drawn from letters of value <= n with at most `max_entries` entries.
std::vector<BoxFill> all_boxes(int n, int max_entries) {
  std::vector<BoxFill> out{BoxFill{}};
  for (int round = 0; round < max_entries; ++round) {
    std::set<BoxFill> next(out.begin(), out.end());
    for (const auto& f : out)
      for (int v = 1; v <= n; ++v)
        for (bool pr : {false, true}) {
          if (pr && f.contains(Letter{v, true})) continue;
          BoxFill g = f;
          g.add(Letter{v, pr});
          next.insert(g);
        }
    out.assign(next.begin(), next.end());
  }
  return out;
}

}  // namespace

TEST_CASE("OT on one box") {
  CHECK(enum_OT(Partition{1}, {1, 0}).size() == 2);
  auto boxes = all_boxes(2, 2);
  auto expected = std::count_if(boxes.begin(), boxes.end(), [](const BoxFill& f) { return f.size() >= 1; });
  CHECK(expected == 12);
  CHECK(enum_OT(Partition{1}, {2, 1}).size() == 12);
}

TEST_CASE("UT on small shapes") {
  CHECK(enum_UT(Partition{1}, {2, 0}).size() == 4);
  // Direct two-box oracle: first box nonempty, second box any subset-like fill;
  // the row rule compares with the nearest nonempty box to the left.
  long long direct = 0;
  for (const auto& a : all_boxes(1, 1))
    for (const auto& b : all_boxes(1, 1)) {
      if (a.empty()) continue;
      Tableau t{SkewShape(Partition{2})};
      t.at(1, 1) = a;
      t.at(1, 2) = b;
      Letter x = *a.single();
      if (b.empty() || x < *b.single() || (x == *b.single() && !x.primed)) ++direct;
    }
  CHECK(direct == 4);
  CHECK(enum_UT(Partition{2}, {1, 0}).size() == 4);
}

TEST_CASE("UT stream contains the worked-example tableau") {
  const Tableau q = D("1'{}1{}1,12'{}2{},2'{}3,3");
  int seen = 0;
  for_each_UT(Partition{5, 5, 3, 1}, {3, 3}, [&](const Tableau& t) { seen += t == q; });
  CHECK(seen == 1);
}

TEST_CASE("PT counts") {
  CHECK(enum_PT(Partition{1}, 2).size() == 4);
  CHECK(enum_PT(Partition{1, 1}, 2).size() == 8);
  CHECK(enum_PT(Partition{2}, 1).size() == 2);
  CHECK(enum_PT(Partition{}, 3).size() == 1);
}

TEST_CASE("PT under orders") {
  for (const auto& lambda : partitions_up_to(4)) {
    auto a = enum_PT(lambda, 2);
    auto b = enum_PT_order(SkewShape(lambda), TotalOrder::standard(2), 2);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
  SkewShape sh(Partition{3, 2}, Partition{1});
  auto n1 = enum_PT_order(sh, TotalOrder::standard(3), 3).size();
  for (auto order : {TotalOrder::unprimed_first(3), TotalOrder::primed_first(3), TotalOrder::flagged(3),
                     parse_order("1'<1<3<2<2'<3'")})
    CHECK(enum_PT_order(sh, order, 3).size() == n1);
}

TEST_CASE("flagged families on small shapes") {
  SkewShape one(Partition{2}, Partition{1});
  CHECK(enum_OFT(one).size() == 1);
  CHECK(enum_UFT(one).size() == 1);
  CHECK(enum_PFT(one).size() == 2);
  SkewShape full(Partition{2, 1}, Partition{2, 1});
  CHECK(enum_UFT(full).size() == 1);
  CHECK(enum_PFT(full).size() == 1);
  CHECK(enum_OFT(SkewShape(Partition{2, 1}, Partition{1})).empty());
  CHECK(enum_UFT(SkewShape(Partition{2, 1}, Partition{1})).empty());
}

TEST_CASE("flagged streams contain the worked-example tableaux") {
  SkewShape sh(Partition{6, 6, 5, 4}, Partition{4, 3, 2, 1});
  CHECK(contains(enum_OFT(sh), D("****42,***321,**221,*111")));
  CHECK(contains(enum_UFT(sh), D("****1'5',***2'3'5',**1'2'4',*1'2'3'")));
}

TEST_CASE("PFT cardinality matches the superimposition count") {
  for (const auto& lambda : partitions_up_to(5))
    for (const auto& mu : subpartitions(lambda)) {
      if (mu.length() != lambda.length()) continue;
      std::size_t product = 0;
      for (const auto& rho : subpartitions(lambda))
        if (rho.contains(mu)) product += enum_OFT(SkewShape(rho, mu)).size() * enum_UFT(SkewShape(lambda, rho)).size();
      CHECK(enum_PFT(SkewShape(lambda, mu)).size() == product);
    }
}

TEST_CASE("family dispatcher") {
  std::size_t n = 0;
  for_each_tableau(Family::PFT, SkewShape(Partition{2}, Partition{1}), {}, [&](const Tableau&) { ++n; });
  CHECK(n == 2);
  CHECK_THROWS_AS(for_each_tableau(Family::OT, SkewShape(Partition{2}, Partition{1}), {1, 0}, [](const Tableau&) {}),
                  DomainError);
}

TEST_CASE("enumerators agree with the validators") {
  for (const auto& lambda : partitions_up_to(5))
    for (const auto& mu : subpartitions(lambda)) {
      SkewShape sh(lambda, mu);
      for (Family f : {Family::OFT, Family::UFT, Family::PFT})
        for_each_tableau(f, sh, {}, [&](const Tableau& t) { CHECK(validate(t, f)); });
    }
  for (const auto& lambda : partitions_up_to(3))
    for (const auto& t : enum_OT(lambda, {2, 2})) CHECK(validate(t, Family::OT));
  for (const auto& t : enum_UT(Partition{3, 2}, {2, 0})) CHECK(validate(t, Family::UT));
}

TEST_CASE("iota example tableaux are primed flagged") {
  CHECK(validate(D("*****5443'5',****4333'6'8',****3223'6',***322'3'4'"), Family::PFT));
  CHECK(validate(D("*****5443'5',****4333'6'8',****322'3'6',***322'3'4'"), Family::PFT));
}
