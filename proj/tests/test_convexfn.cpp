#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "tropkit/convexfn.hpp"

using namespace tropkit;

namespace {

IVec ivec(std::initializer_list<long> xs) {
  IVec v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

HalfSpace hs(std::initializer_list<long> u, long c) { return {ivec(u), Rat(c)}; }

Polyhedron interval(long a, long b) {
  return Polyhedron::from_halfspaces(1, {hs({1}, a), hs({-1}, -b)});
}

}  // namespace

TEST_CASE("conjugate of an affine function is a point mass") {
  // f(w) = <u0,w> + c on all of R^2, u0=(2,-1), c=5
  auto f = ProperPolyhedralFunction::from_affine_pieces(
      Polyhedron::full_space(2), {{Vec{Rat(2), Rat(-1)}, Rat(5)}});
  auto g = f.conjugate();
  auto dom = g.domain();
  CHECK(dom.dim() == 0);
  CHECK(dom.contains(Vec{Rat(2), Rat(-1)}));
  CHECK(*g.value(Vec{Rat(2), Rat(-1)}) == Rat(-5));
  CHECK_FALSE(g.value(Vec{Rat(0), Rat(0)}).has_value());
}

TEST_CASE("conjugate of max(0, w) is the [0,1] indicator") {
  auto f = ProperPolyhedralFunction::from_affine_pieces(
      Polyhedron::full_space(1), {{Vec{Rat(0)}, Rat(0)}, {Vec{Rat(1)}, Rat(0)}});
  auto g = f.conjugate();
  CHECK(g.domain() == interval(0, 1));
  CHECK(*g.value(Vec{make_rat(1, 2)}) == 0);
  CHECK(*g.value(Vec{Rat(0)}) == 0);
  CHECK_FALSE(g.value(Vec{Rat(2)}).has_value());
}

TEST_CASE("conjugate of the [-1,1] indicator is |u|") {
  auto f = ProperPolyhedralFunction::indicator(interval(-1, 1));
  auto g = f.conjugate();
  CHECK(g.domain() == Polyhedron::full_space(1));
  CHECK(*g.value(Vec{Rat(3)}) == 3);
  CHECK(*g.value(Vec{Rat(-2)}) == 2);
  CHECK(*g.value(Vec{Rat(0)}) == 0);
}

TEST_CASE("biconjugation is the identity") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> entry(-3, 3), cnt(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    size_t n = 1 + trial % 2;
    std::vector<std::pair<Vec, Rat>> affines;
    for (int i = 0, k = cnt(rng); i < k; ++i) {
      Vec peg(n);
      for (auto& x : peg) x = make_rat(entry(rng), 1 + std::abs(entry(rng)));
      affines.push_back({peg, Rat(entry(rng))});
    }
    auto f = ProperPolyhedralFunction::from_affine_pieces(Polyhedron::full_space(n), affines);
    auto ff = f.conjugate().conjugate();
    CHECK(f == ff);
    for (long a = -2; a <= 2; ++a)
      for (long b = -2; b <= 2; ++b) {
        Vec w(n);
        w[0] = make_rat(a, 2);
        if (n > 1) w[1] = make_rat(b, 2);
        CHECK(*f.value(w) == *ff.value(w));
      }
  }
}

TEST_CASE("coherent complex and duality for max(0, w)") {
  auto f = ProperPolyhedralFunction::from_affine_pieces(
      Polyhedron::full_space(1), {{Vec{Rat(0)}, Rat(0)}, {Vec{Rat(1)}, Rat(0)}});
  auto d = dual_complex_of_function(f);
  REQUIRE(d.primal.cells().size() == 3);
  REQUIRE(d.dual.cells().size() == 3);
  for (const auto& pr : d.pairing) {
    CHECK(pr.cell.dim() + pr.dual.dim() == 1);
    CHECK(d.dual.find(pr.dual).has_value());
  }
  // order reversing: the vertex {0} pairs with [0,1]
  for (const auto& pr : d.pairing)
    if (pr.cell.dim() == 0) CHECK(pr.dual == interval(0, 1));
}

TEST_CASE("duality for an affine function on R^n") {
  auto f = ProperPolyhedralFunction::from_affine_pieces(
      Polyhedron::full_space(2), {{Vec{Rat(1), Rat(1)}, Rat(0)}});
  auto d = dual_complex_of_function(f);
  REQUIRE(d.primal.cells().size() == 1);
  REQUIRE(d.dual.cells().size() == 1);
  CHECK(d.pairing[0].cell.dim() == 2);
  CHECK(d.pairing[0].dual.dim() == 0);
}

TEST_CASE("duality laws on random polyhedral functions") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> entry(-2, 2), cnt(2, 5);
  for (int trial = 0; trial < 25; ++trial) {
    size_t n = 2;
    std::vector<std::pair<Vec, Rat>> affines;
    for (int i = 0, k = cnt(rng); i < k; ++i) {
      Vec peg(n);
      for (auto& x : peg) x = Rat(entry(rng));
      affines.push_back({peg, Rat(entry(rng))});
    }
    auto f = ProperPolyhedralFunction::from_affine_pieces(Polyhedron::full_space(n), affines);
    auto d = dual_complex_of_function(f);
    REQUIRE(d.primal.cells().size() == d.dual.cells().size());
    std::set<Polyhedron> seen;
    for (const auto& pr : d.pairing) {
      CHECK(pr.cell.dim() + pr.dual.dim() == int(n));
      REQUIRE(d.dual.find(pr.dual).has_value());
      CHECK(seen.insert(pr.dual).second);  // injective
    }
    for (const auto& a : d.pairing)
      for (const auto& b : d.pairing) {
        if (a.cell == b.cell) continue;
        if (b.cell.contains(a.cell)) CHECK(a.dual.contains(b.dual));
      }
  }
}

TEST_CASE("pieces recover the affine data") {
  auto f = ProperPolyhedralFunction::from_affine_pieces(
      Polyhedron::full_space(1), {{Vec{Rat(0)}, Rat(0)}, {Vec{Rat(1)}, Rat(0)}});
  auto ps = f.pieces();
  REQUIRE(ps.size() == 2);
  for (const auto& p : ps) {
    Vec w = p.cell.relint_point();
    CHECK(*f.value(w) == p.constant + dot(p.peg, w));
  }
}
