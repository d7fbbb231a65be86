#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "graphstat/homology.hpp"

using namespace graphstat;
using namespace graphstat::hom;

namespace {

// Chain complex of an m-gon: m vertices, m edges, no 2-cells.
BoundaryData polygon(int m) {
  BoundaryData b;
  b.c0 = b.c1 = m;
  b.c2 = 0;
  b.d1.rows = m;
  b.d1.cols = m;
  b.d2.rows = m;
  b.d2.cols = 0;
  for (int i = 0; i < m; ++i) {
    b.d1.entries.push_back({(i + 1) % m, i, 1});
    b.d1.entries.push_back({i, i, -1});
  }
  return b;
}

// One vertex, `loops` loop edges, one 2-cell with the given boundary column.
BoundaryData one_vertex_complex(int loops, std::vector<long long> attach) {
  BoundaryData b;
  b.c0 = 1;
  b.c1 = loops;
  b.c2 = attach.empty() ? 0 : 1;
  b.d1.rows = 1;
  b.d1.cols = loops;
  b.d2.rows = loops;
  b.d2.cols = b.c2;
  for (int i = 0; i < static_cast<int>(attach.size()); ++i)
    if (attach[i] != 0) b.d2.entries.push_back({i, 0, attach[i]});
  return b;
}

}  // namespace

TEST_CASE("circle homology with basis and classes") {
  BoundaryData b = polygon(5);
  CHECK(composition_is_zero(b));
  CHECK(h0_rank(b) == 1);

  H1Result h = homology_h1(b);
  CHECK(h.group.rank == 1);
  CHECK(h.group.torsion.empty());
  CHECK(h.group.to_string() == "Z");
  REQUIRE(h.basis.available);
  REQUIRE(h.basis.free_generators.size() == 1);
  CHECK(h.basis.torsion_generators.empty());

  // The full polygon loop is a generator: class +-1.
  std::vector<Int> loop(5, 1);
  CycleClass c = cycle_class(h.basis, loop);
  REQUIRE(c.free_coords.size() == 1);
  CHECK(abs(c.free_coords[0]) == 1);

  std::vector<Int> twice(5, 2);
  CHECK(cycle_class(h.basis, twice).free_coords[0] == 2 * c.free_coords[0]);

  CHECK((c - c).is_zero());
  CHECK((c + c).free_coords[0] == 2 * c.free_coords[0]);

  // A non-cycle is rejected.
  std::vector<Int> notcycle(5, 0);
  notcycle[0] = 1;
  CHECK_THROWS_AS(cycle_class(h.basis, notcycle), InputError);
}

TEST_CASE("torsion complexes") {
  // Projective-plane pattern: one loop, 2-cell attached twice.
  H1Result rp2 = homology_h1(one_vertex_complex(1, {2}));
  CHECK(rp2.group.rank == 0);
  CHECK(rp2.group.torsion == std::vector<Int>{2});
  CHECK(rp2.group.to_string() == "Z/2");
  REQUIRE(rp2.basis.available);
  CHECK(rp2.basis.free_generators.empty());
  REQUIRE(rp2.basis.torsion_generators.size() == 1);
  CycleClass t = cycle_class(rp2.basis, {Int(1)});
  CHECK(t.torsion_residues == std::vector<Int>{1});
  CHECK(t.torsion_moduli == std::vector<Int>{2});
  CHECK((t + t).is_zero());  // order two

  // Klein-bottle pattern: two loops, relation 2a.
  H1Result kb = homology_h1(one_vertex_complex(2, {2, 0}));
  CHECK(kb.group.rank == 1);
  CHECK(kb.group.torsion == std::vector<Int>{2});

  // Torus pattern: two loops, trivial relation.
  H1Result torus = homology_h1(one_vertex_complex(2, {0, 0}));
  CHECK(torus.group.rank == 2);
  CHECK(torus.group.torsion.empty());

  // Relation 1*a kills a generator without torsion.
  H1Result disk = homology_h1(one_vertex_complex(1, {1}));
  CHECK(disk.group.rank == 0);
  CHECK(disk.group.torsion.empty());
  CHECK(disk.group.to_string() == "0");
}

TEST_CASE("group-only path agrees with the basis path") {
  H1Options group_only;
  group_only.force_group_only = true;

  for (int m : {3, 4, 7}) {
    H1Result a = homology_h1(polygon(m));
    H1Result b = homology_h1(polygon(m), group_only);
    CHECK(a.group == b.group);
    CHECK_FALSE(b.basis.available);
  }
  for (auto attach : std::vector<std::vector<long long>>{
           {2}, {1}, {0}, {2, 0}, {3, 0}, {2, 4}, {6, 10}}) {
    H1Result a = homology_h1(one_vertex_complex(
        static_cast<int>(attach.size()), attach));
    H1Result b = homology_h1(one_vertex_complex(
                                 static_cast<int>(attach.size()), attach),
                             group_only);
    CHECK(a.group == b.group);
  }
}

TEST_CASE("h0 counts components") {
  // Two disjoint triangles.
  BoundaryData b;
  b.c0 = 6;
  b.c1 = 6;
  b.c2 = 0;
  b.d1.rows = 6;
  b.d1.cols = 6;
  b.d2.rows = 6;
  b.d2.cols = 0;
  int triangles[2][3] = {{0, 1, 2}, {3, 4, 5}};
  int col = 0;
  for (auto& tri : triangles)
    for (int i = 0; i < 3; ++i) {
      b.d1.entries.push_back({tri[(i + 1) % 3], col, 1});
      b.d1.entries.push_back({tri[i], col, -1});
      ++col;
    }
  CHECK(h0_rank(b) == 2);
  CHECK(homology_h1(b).group.rank == 2);
}

TEST_CASE("group rendering") {
  FGAbelianGroup g = group_from_factors(3, {Int(1), Int(2), Int(1)});
  CHECK(g.rank == 3);
  CHECK(g.torsion == std::vector<Int>{2});
  CHECK(g.to_string() == "Z^3 + Z/2");
}
