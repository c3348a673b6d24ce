#include <doctest.h>

#include "qtrace/biangle.hpp"

using namespace qtrace;

namespace {

BiangleDiagram two_strands(Dir a, Dir b, std::vector<Slice> slices) { return {{a, b}, std::move(slices)}; }

// Contracts the right states of x with the left states of y.
BiangleTensor compose(const BiangleTensor& x, const BiangleTensor& y) {
  BiangleTensor r;
  for (const auto& [kx, vx] : x)
    for (const auto& [ky, vy] : y)
      if (kx.second == ky.first) r[{kx.first, ky.second}] += vx * vy;
  for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

}  // namespace

TEST_CASE("a kink scales a strand") {
  RibbonConstants rc = RibbonConstants::of(3);
  BiangleDiagram pos{{Dir::Right}, {Slice::make_kink(0, true)}};
  BiangleDiagram neg{{Dir::Right}, {Slice::make_kink(0, false)}};
  for (int s = 1; s <= 3; ++s) {
    CHECK(biangle_trace(pos, 3, {s}, {s}) == rc.zeta_bar);
    CHECK(biangle_trace(neg, 3, {s}, {s}) == rc.zeta_bar_inv);
    CHECK(biangle_trace(pos, 3, {s}, {s % 3 + 1}).is_zero());
  }
}

TEST_CASE("a circle evaluates to (-1)^{n-1} [n]_q") {
  for (int n = 2; n <= 4; ++n) {
    BiangleDiagram circle{{}, {Slice::make_uturn(0, {true, false}), Slice::make_uturn(0, {false, false})}};
    RootScalar sign = n % 2 == 1 ? RootScalar(1) : RootScalar(-1);
    CHECK(biangle_trace(circle, n, {}, {}) == sign * RibbonConstants::of(n).quantum_n);
  }
}

TEST_CASE("cuts track orientations through U-turns") {
  BiangleDiagram d{{Dir::Right}, {Slice::make_uturn(1, {true, false})}};
  std::vector<std::vector<Dir>> c = cuts(d);
  REQUIRE(c.size() == 2);
  CHECK(c[1].size() == 3);
  CHECK(right_boundary(d) == c[1]);
}

TEST_CASE("inconsistent slices are rejected") {
  CHECK_THROWS_AS(cuts({{Dir::Right}, {Slice::make_crossing(0, crossing_kind_from(Dir::Right, Dir::Right, true))}}),
                  Error);
  CHECK_THROWS_AS(cuts({{Dir::Right}, {Slice::make_kink(1, true)}}), Error);
  CHECK_THROWS_AS(cuts({{Dir::Right, Dir::Right}, {Slice::make_uturn(0, {true, true})}}), Error);
  CHECK_THROWS_AS(cuts({{Dir::Right, Dir::Left},
                        {Slice::make_crossing(0, crossing_kind_from(Dir::Right, Dir::Right, true))}}),
                  Error);
}

TEST_CASE("crossing kinds") {
  CrossingKind k = crossing_kind_from(Dir::Right, Dir::Right, true);
  CHECK(k.same_direction);
  CHECK(crossing_kind_from(Dir::Right, Dir::Left, true).same_direction == false);
  CHECK(crossing_kind_from(Dir::Right, Dir::Right, false).positive != k.positive);
}

TEST_CASE("a crossing followed by its inverse is trivial") {
  for (Dir a : {Dir::Right, Dir::Left})
    for (Dir b : {Dir::Right, Dir::Left}) {
      BiangleDiagram d = two_strands(a, b, {Slice::make_crossing(0, crossing_kind_from(a, b, true)),
                                            Slice::make_crossing(0, crossing_kind_from(b, a, false))});
      BiangleTensor t = biangle_tensor(d, 3);
      CHECK(t.size() == 9);
      for (const auto& [k, v] : t) {
        CHECK(k.first == k.second);
        CHECK(v == RootScalar(1));
      }
    }
}

TEST_CASE("gluing biangles composes their tensors") {
  Dir r = Dir::Right;
  BiangleDiagram a = two_strands(r, r, {Slice::make_crossing(0, crossing_kind_from(r, r, true))});
  BiangleDiagram b = two_strands(r, r, {Slice::make_kink(1, true), Slice::make_crossing(0, crossing_kind_from(r, r, false))});
  CHECK(biangle_tensor(concatenate(a, b), 3) == compose(biangle_tensor(a, 3), biangle_tensor(b, 3)));
}

TEST_CASE("turning a biangle around swaps its sides") {
  Dir r = Dir::Right, l = Dir::Left;
  BiangleDiagram d{{r, l, r}, {Slice::make_crossing(0, crossing_kind_from(r, l, true)), Slice::make_kink(2, false),
                               Slice::make_uturn(0, {true, false})}};
  BiangleTensor t = biangle_tensor(d, 3), u = biangle_tensor(turn_around(d), 3);
  BiangleTensor swapped;
  for (const auto& [k, v] : t) swapped[{k.second, k.first}] = v;
  CHECK(u == swapped);
}

TEST_CASE("skein relations hold for n = 2, 3, 4") {
  for (int n = 2; n <= 4; ++n) {
    SkeinReport s = skein_checks(n);
    CAPTURE(s.detail);
    CHECK(s.homflypt);
    CHECK(s.unknot);
    CHECK(s.kinks_cancel);
    CHECK(s.curl_matches_kink);
  }
}
