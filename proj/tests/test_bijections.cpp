#include <algorithm>
#include <map>
#include <set>

#include <doctest.h>

#include "groth/bijections.hpp"
#include "groth/enumerate.hpp"
#include "support.hpp"

using namespace groth;
using testing::D;

namespace {

std::vector<Tableau> trace_tableaux(const Trace& tr) {
  std::vector<Tableau> out;
  for (const auto& s : tr) out.push_back(s.tableau);
  return out;
}

const TotalOrder kPrec = parse_order("1'<1<2<3<2'<4<3'<4'");
const TotalOrder kTri = parse_order("1'<1<2<2'<3<4<3'<4'");

}  // namespace

TEST_CASE("RSK: worked example") {
  Trace tr;
  RskPair pr = rsk_forward(D("{1'}{2'3'},{12'3'}{33},{3'4'4}"), &tr);
  CHECK(pr.p == D("1'2'3'33,12'3'4,3'4'"));
  CHECK(pr.q == D("**221,**11,*1"));
  std::vector<Tableau> want{D("{1'}{2'3'},{12'3'}{33},{3'4'4}"), D("1'{2'3'}3,{12'3'}3,{3'4'4}"),
                            D("1'2'3'3,{12'3'}3,{3'4'4}"),       D("1'2'3'3,{12'3'}3,{3'4'}4"),
                            D("1'2'3'3,{12'3'}34,3'4'"),         D("1'2'3'3,{12'}3'34,3'4'"),
                            D("1'2'3'33,12'3'4,3'4'")};
  CHECK(trace_tableaux(tr) == want);
  CHECK(rsk_backward(pr, Partition{2, 2, 1}) == D("{1'}{2'3'},{12'3'}{33},{3'4'4}"));
}

TEST_CASE("RSK: a primed tableau is its own P") {
  Tableau t = D("1'12,2'3");
  RskPair pr = rsk_forward(t);
  CHECK(pr.p == t);
  CHECK(pr.q.num_cells() == 0);
  CHECK(rsk_backward(pr, t.shape().outer()) == t);
}

TEST_CASE("RSK: weight triple and round trip on small shapes") {
  for (const auto& mu : {Partition{2, 1}, Partition{2, 2}}) {
    for (const auto& t : enum_OT(mu, {3, 2})) {
      RskPair pr = rsk_forward(t);
      CHECK(validate(pr.p, Family::PT));
      CHECK(validate(pr.q, Family::OFT));
      CHECK(left_weight(pr.p) == left_weight(t));
      CHECK(right_weight(pr.p) == right_weight(t));
      CHECK(flag_weight(pr.q) == overweight(t));
      CHECK(rsk_backward(pr, mu) == t);
    }
  }
  CHECK_THROWS_AS(rsk_forward(D("1'{}1{}1,12'{}2{},2'{}3,3")), DomainError);
}

TEST_CASE("jdt: worked example") {
  Trace tr;
  Tableau input = D("1'{}{}{}3',2'{}3'{}{},23{}44,4{}4");
  JdtPair pr = jdt_forward(input, &tr);
  CHECK(pr.p == D("1'3'444,2'3',23,4"));
  CHECK(pr.q == D("*****,**1'2'3',**1'3'4',*1'2'"));
  REQUIRE(tr.size() == 9);
  std::vector<std::pair<int, int>> marks{{2, 5}, {2, 4}, {1, 4}, {3, 3}, {1, 3}, {4, 2}, {2, 2}, {1, 2}, {0, 0}};
  for (std::size_t k = 0; k < tr.size(); ++k) CHECK(std::pair{tr[k].mark_row, tr[k].mark_col} == marks[k]);
  CHECK(tr[3].tableau == D("1'{}{}3'4,2'{}3'4,23{},4{}4"));
  CHECK(jdt_backward(pr, Partition{5, 5, 5, 3}) == input);
}

TEST_CASE("jdt: a full tableau is its own P") {
  Tableau t = D("1'12,2'3");
  JdtPair pr = jdt_forward(t);
  CHECK(pr.p == t);
  CHECK(jdt_backward(pr, t.shape().outer()) == t);
}

TEST_CASE("jdt: weight triple and round trip on small shapes") {
  for (const auto& t : enum_UT(Partition{3, 2}, {3, 0})) {
    JdtPair pr = jdt_forward(t);
    CHECK(validate(pr.p, Family::PT));
    CHECK(validate(pr.q, Family::UFT));
    CHECK(left_weight(pr.p) == left_weight(t));
    CHECK(right_weight(pr.p) == right_weight(t));
    CHECK(flag_weight(pr.q) == underweight(t));
  }
  for (const auto& t : enum_UT(Partition{3, 3, 1}, {3, 0})) CHECK(jdt_backward(jdt_forward(t), Partition{3, 3, 1}) == t);
}

TEST_CASE("order swap: worked example") {
  Tableau s = D("**1'122332',1'113333'4',1'222'443',1332'3',243',33'");
  Tableau t = D("**1'1222'33,1'112'333'4',1'222'443',13333',243',33'");
  CHECK(order_swap_up(s, kPrec, kTri) == t);
  CHECK(order_swap_down(t, kTri, kPrec) == s);
  CHECK_THROWS_AS(order_swap_down(s, kPrec, kTri), DomainError);
}

TEST_CASE("order swap: untouched tableau") {
  Tableau t = D("1'12,14'");
  CHECK(order_swap_up(t, kPrec, kTri) == t);
}

TEST_CASE("order swap: round trip and weights") {
  SkewShape sh(Partition{3, 2});
  for (const auto& t : enum_PT_order(sh, kPrec, 4)) {
    Tableau u = order_swap_up(t, kPrec, kTri);
    CHECK(validate_pt_order(u, kTri));
    CHECK(left_weight(u) == left_weight(t));
    CHECK(right_weight(u) == right_weight(t));
    CHECK(order_swap_down(u, kTri, kPrec) == t);
  }
}

TEST_CASE("reorder") {
  SkewShape sh(Partition{2, 1});
  CHECK(reorder(D("1'1,2"), TotalOrder::standard(2), TotalOrder::standard(2)) == D("1'1,2"));
  const TotalOrder from = TotalOrder::standard(2), to = TotalOrder::unprimed_first(2);
  std::set<Tableau> image;
  for (const auto& t : enum_PT(Partition{2, 1}, 2)) image.insert(reorder(t, from, to));
  auto target = enum_PT_order(sh, to, 2);
  CHECK(image == std::set<Tableau>(target.begin(), target.end()));
  for (const auto& t : enum_PT(Partition{2, 2}, 3)) {
    Tableau u = reorder(t, TotalOrder::standard(3), TotalOrder::flagged(3));
    CHECK(left_weight(u) == left_weight(t));
    CHECK(right_weight(u) == right_weight(t));
  }
  CHECK(bubble_path(from, to) == std::vector<int>{0, 2, 1});
  CHECK(bubble_path(from, from).empty());
}

TEST_CASE("iota: worked example") {
  Tableau a = D("*****5443'5',****4333'6'8',****3223'6',***322'3'4'");
  Tableau b = D("*****5443'5',****4333'6'8',****322'3'6',***322'3'4'");
  IotaSite s = iota_site(a);
  CHECK(s.m == 2);
  CHECK(s.row == 3);
  CHECK(s.col == 7);
  CHECK(iota(a) == b);
  CHECK(iota(b) == a);
}

TEST_CASE("iota: single box") {
  CHECK(iota(D("*1")) == D("*1'"));
  CHECK(iota(D("*1'")) == D("*1"));
}

TEST_CASE("superimpose and split") {
  Tableau q = D("*1'");
  Tableau empty{SkewShape(Partition{1}, Partition{1})};
  CHECK(superimpose(empty, q) == q);
  for (const auto& lambda : partitions_up_to(5))
    for (const auto& mu : subpartitions(lambda)) {
      if (mu.length() != lambda.length()) continue;
      for (const auto& rho : subpartitions(lambda)) {
        if (!rho.contains(mu)) continue;
        for (const auto& p : enum_OFT(SkewShape(rho, mu)))
          for (const auto& uq : enum_UFT(SkewShape(lambda, rho))) {
            auto [p2, q2] = split(superimpose(p, uq));
            CHECK(p2 == p);
            CHECK(q2 == uq);
          }
      }
    }
}
