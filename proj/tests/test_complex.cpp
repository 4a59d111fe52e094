#include <catch2/catch_amalgamated.hpp>

#include "tropkit/complex.hpp"

using namespace tropkit;

namespace {

IVec ivec(std::initializer_list<long> xs) {
  IVec v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

Vec qvec(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(Rat(x));
  return v;
}

HalfSpace hs(std::initializer_list<long> u, long c) { return {ivec(u), Rat(c)}; }

Polyhedron segment2d(long x0, long x1) {
  return Polyhedron::from_generators(2, {qvec({x0, 0}), qvec({x1, 0})}, {}, {});
}

Polyhedron ray_from_origin(std::initializer_list<long> dir) {
  return Polyhedron::from_generators(2, {qvec({0, 0})}, {ivec(dir)}, {});
}

}  // namespace

TEST_CASE("validate_complex") {
  SECTION("face closure of one triangle has 7 cells") {
    auto tri = Polyhedron::from_halfspaces(2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, -1}, -1)});
    auto res = validate_complex(2, {tri});
    REQUIRE(res.ok);
    CHECK(res.complex.cells().size() == 7);
  }
  SECTION("overlapping segments violate the axioms") {
    auto res = validate_complex(2, {segment2d(0, 2), segment2d(1, 3)});
    REQUIRE_FALSE(res.ok);
    CHECK(res.overlap == segment2d(1, 2));
  }
  SECTION("tropical-line rays with the origin form a complex") {
    auto res = validate_complex(
        2, {ray_from_origin({1, 0}), ray_from_origin({0, 1}), ray_from_origin({-1, -1})});
    REQUIRE(res.ok);
    CHECK(res.complex.cells().size() == 4);
  }
}

TEST_CASE("is_subdivision") {
  auto seg = [](long a, long b) {
    return Polyhedron::from_halfspaces(1, {hs({1}, a), hs({-1}, -b)});
  };
  auto whole = PolyhedralComplex::from_cells(1, {seg(0, 1)});
  auto half1 = Polyhedron::from_halfspaces(1, {hs({1}, 0), hs({-2}, -1)});
  auto half2 = Polyhedron::from_halfspaces(1, {hs({2}, 1), hs({-1}, -1)});
  auto halved = PolyhedralComplex::from_cells(1, {half1, half2});

  CHECK(is_subdivision(whole, whole));
  CHECK(is_subdivision(halved, whole));
  auto bigger = PolyhedralComplex::from_cells(1, {seg(0, 2)});
  CHECK_FALSE(is_subdivision(whole, bigger));
}

TEST_CASE("common refinement") {
  SECTION("interval against its split") {
    auto seg = [](long a, long b) {
      return Polyhedron::from_halfspaces(1, {hs({1}, a), hs({-1}, -b)});
    };
    auto c1 = PolyhedralComplex::from_cells(1, {seg(0, 2)});
    auto c2 = PolyhedralComplex::from_cells(1, {seg(0, 1), seg(1, 2)});
    auto r = common_refinement(c1, c2);
    // cells: [0,1], [1,2] and the three vertices
    CHECK(r.cells().size() == 5);
    CHECK(is_subdivision(r, c1));
    CHECK(is_subdivision(r, c2));
  }
  SECTION("axes fan against diagonal fan gives the 8-sector fan") {
    auto quad = [](long sx, long sy) {
      return Polyhedron::from_halfspaces(2, {hs({sx, 0}, 0), hs({0, sy}, 0)});
    };
    auto diag = [](long s1, long s2) {
      // sectors cut by the two diagonals x=y and x=-y
      return Polyhedron::from_halfspaces(2, {hs({s1, -s1}, 0), hs({s2, s2}, 0)});
    };
    auto axes = PolyhedralComplex::from_cells(
        2, {quad(1, 1), quad(-1, 1), quad(1, -1), quad(-1, -1)});
    auto diags = PolyhedralComplex::from_cells(
        2, {diag(1, 1), diag(-1, 1), diag(1, -1), diag(-1, -1)});
    auto r = common_refinement(axes, diags);
    size_t two_cells = 0;
    for (const auto& c : r.cells())
      if (c.dim() == 2) ++two_cells;
    CHECK(two_cells == 8);
    CHECK(is_subdivision(r, axes));
    CHECK(is_subdivision(r, diags));
  }
  SECTION("refinement with itself is itself") {
    auto tri = Polyhedron::from_halfspaces(2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, -1}, -1)});
    auto c = PolyhedralComplex::from_cells(2, {tri});
    auto r = common_refinement(c, c);
    CHECK(r.cells().size() == c.cells().size());
  }
  SECTION("support mismatch is an error") {
    auto seg = [](long a, long b) {
      return Polyhedron::from_halfspaces(1, {hs({1}, a), hs({-1}, -b)});
    };
    auto c1 = PolyhedralComplex::from_cells(1, {seg(0, 1)});
    auto c2 = PolyhedralComplex::from_cells(1, {seg(0, 2)});
    CHECK_THROWS_AS(common_refinement(c1, c2), std::invalid_argument);
  }
}

TEST_CASE("support queries") {
  auto quad = Polyhedron::from_halfspaces(2, {hs({1, 0}, 0), hs({0, 1}, 0)});
  auto left = Polyhedron::from_halfspaces(2, {hs({-1, 0}, 1)});  // x <= -1
  CHECK_FALSE(support_contains({quad, left}, Polyhedron::from_halfspaces(2, {hs({0, 1}, 0)})));
  CHECK(support_contains(
      {quad, left},
      Polyhedron::from_halfspaces(2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, -1}, -4)})));
  auto complete = PolyhedralComplex::from_cells(
      2, {quad, Polyhedron::from_halfspaces(2, {hs({-1, 0}, 0), hs({0, 1}, 0)}),
          Polyhedron::from_halfspaces(2, {hs({1, 0}, 0), hs({0, -1}, 0)}),
          Polyhedron::from_halfspaces(2, {hs({-1, 0}, 0), hs({0, -1}, 0)})});
  CHECK(complete.is_complete());
  auto partial = PolyhedralComplex::from_cells(2, {quad});
  CHECK_FALSE(partial.is_complete());
}

TEST_CASE("maximal cells and face relation") {
  auto tri = Polyhedron::from_halfspaces(2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, -1}, -1)});
  auto c = PolyhedralComplex::from_cells(2, {tri});
  auto max = c.maximal_cells();
  REQUIRE(max.size() == 1);
  CHECK(max[0] == tri);
  auto rel = c.face_relation();
  size_t into_triangle = 0;
  for (auto [i, j] : rel)
    if (c.cells()[j] == tri) ++into_triangle;
  CHECK(into_triangle == 6);
}

TEST_CASE("local cone of a complex is a fan") {
  auto sq = Polyhedron::from_halfspaces(
      2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, 0}, -1), hs({0, -1}, -1)});
  auto c = PolyhedralComplex::from_cells(2, {sq});
  auto lc = local_cone(c, qvec({0, 0}));
  // quadrant + its two boundary rays + origin
  CHECK(lc.cells().size() == 4);
  for (const auto& cell : lc.cells()) CHECK(cell.is_cone());
  auto away = local_cone(c, qvec({7, 7}));
  CHECK(away.cells().empty());
}
