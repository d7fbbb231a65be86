#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "graphstat/complex.hpp"
#include "graphstat/graph.hpp"
#include "graphstat/homology.hpp"
#include "graphstat/util.hpp"

using namespace graphstat;
using namespace graphstat::core;
using namespace graphstat::cfg;

namespace {

hom::FGAbelianGroup h1_of(const ConfigComplex& cx) {
  return hom::homology_h1(cx.boundary_data()).group;
}

hom::FGAbelianGroup free_group(int rank) { return {rank, {}}; }

}  // namespace

TEST_CASE("cell counts for two particles") {
  auto lasso = build_config_complex(make_lasso(), 2);
  CHECK(lasso.cells0.size() == 6);
  CHECK(lasso.cells1.size() == 8);
  CHECK(lasso.cells2.size() == 1);

  auto k5 = build_config_complex(make_complete(5), 2);
  CHECK(k5.cells0.size() == 10);
  CHECK(k5.cells1.size() == 30);
  CHECK(k5.cells2.size() == 15);

  auto theta = build_config_complex(make_theta(), 2);
  CHECK(theta.cells0.size() == 10);
  CHECK(theta.cells1.size() == 18);
  CHECK(theta.cells2.size() == 6);

  auto tri = build_config_complex(make_cycle(3), 2);
  CHECK(tri.cells0.size() == 3);
  CHECK(tri.cells1.size() == 3);
  CHECK(tri.cells2.size() == 0);

  auto y = build_config_complex(make_star(3), 2);
  CHECK(y.cells0.size() == 6);
  CHECK(y.cells1.size() == 6);
  CHECK(y.cells2.size() == 0);

  auto k33 = build_config_complex(make_complete_bipartite(3, 3), 2);
  CHECK(k33.cells0.size() == 15);
  CHECK(k33.cells1.size() == 36);
  CHECK(k33.cells2.size() == 18);
}

TEST_CASE("one particle reproduces the graph") {
  Graph g = make_two_connected_example();
  auto cx = build_config_complex(g, 1);
  CHECK(cx.cells0.size() == static_cast<size_t>(g.num_vertices()));
  CHECK(cx.cells1.size() == static_cast<size_t>(g.num_edges()));
  CHECK(cx.cells2.empty());
  CHECK(h1_of(cx) == free_group(core::betti_number(g)));
}

TEST_CASE("cells are generated in canonical order") {
  for (const Graph& g : {make_lasso(), make_theta(), make_complete(4)}) {
    auto cx = build_config_complex(g, 2);
    CHECK(std::is_sorted(cx.cells0.begin(), cx.cells0.end()));
    CHECK(std::is_sorted(cx.cells1.begin(), cx.cells1.end()));
    CHECK(std::is_sorted(cx.cells2.begin(), cx.cells2.end()));
  }
}

TEST_CASE("boundary of boundary vanishes") {
  for (int n : {2, 3}) {
    for (const Graph& base :
         {make_lasso(), make_theta(), make_complete(4), make_star(4)}) {
      Graph g = n > 2 ? core::subdivide(base, n).first : base;
      auto cx = build_config_complex(g, n);
      CHECK(hom::composition_is_zero(cx.boundary_data()));
    }
  }
}

TEST_CASE("serial and parallel boundary assembly agree") {
  for (const Graph& g : {make_complete(5), make_two_connected_example()}) {
    auto a = build_config_complex(g, 2, ExecPolicy::Parallel);
    auto b = build_config_complex(g, 2, ExecPolicy::Serial);
    REQUIRE(a.d2.entries.size() == b.d2.entries.size());
    for (size_t i = 0; i < a.d2.entries.size(); ++i) {
      CHECK(a.d2.entries[i].row == b.d2.entries[i].row);
      CHECK(a.d2.entries[i].col == b.d2.entries[i].col);
      CHECK(a.d2.entries[i].val == b.d2.entries[i].val);
    }
  }
}

TEST_CASE("subdivision requirements are enforced") {
  CHECK_THROWS_AS(build_config_complex(make_lasso(), 3), InputError);
  CHECK_THROWS_AS(build_config_complex(make_complete(4), 3), InputError);
  CHECK_NOTHROW(build_config_complex(subdivide(make_lasso(), 3).first, 3));
  CHECK_NOTHROW(build_config_complex(make_complete(5), 2));

  // The combinatorial complex can still be requested explicitly.
  auto raw = build_config_complex(make_star(3), 3, ExecPolicy::Parallel, false);
  CHECK(raw.cells0.size() == 4);
  CHECK(raw.cells1.size() == 3);
  CHECK(raw.cells2.empty());
  CHECK(h1_of(raw) == free_group(0));
}

TEST_CASE("euler characteristic matches betti numbers for two particles") {
  for (const Graph& g : {make_lasso(), make_theta(), make_complete(5),
                         make_complete_bipartite(3, 3), make_bowtie()}) {
    auto cx = build_config_complex(g, 2);
    auto bd = cx.boundary_data();
    auto h1 = hom::homology_h1(bd);
    int b0 = hom::h0_rank(bd);
    long long chi = static_cast<long long>(bd.c0) - bd.c1 + bd.c2;
    long long beta2 = chi - b0 + h1.group.rank;
    CHECK(b0 == 1);
    CHECK(beta2 == 0);
  }
}

TEST_CASE("two-particle homology of reference graphs") {
  CHECK(h1_of(build_config_complex(make_cycle(3), 2)) == free_group(1));
  CHECK(h1_of(build_config_complex(make_cycle(5), 2)) == free_group(1));
  CHECK(h1_of(build_config_complex(make_star(3), 2)) == free_group(1));
  CHECK(h1_of(build_config_complex(make_lasso(), 2)) == free_group(2));
  CHECK(h1_of(build_config_complex(make_theta(), 2)) == free_group(3));
  Graph k4e({1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(h1_of(build_config_complex(k4e, 2)) == free_group(3));
  CHECK(h1_of(build_config_complex(make_complete(4), 2)) == free_group(4));
  CHECK(h1_of(build_config_complex(make_bowtie(), 2)) == free_group(4));
  CHECK(h1_of(build_config_complex(make_two_connected_example(), 2)) ==
        free_group(7));

  hom::FGAbelianGroup k5{6, {2}};
  CHECK(h1_of(build_config_complex(make_complete(5), 2)) == k5);
  hom::FGAbelianGroup k33{4, {2}};
  CHECK(h1_of(build_config_complex(make_complete_bipartite(3, 3), 2)) == k33);
}

TEST_CASE("three-particle homology of the subdivided lasso") {
  Graph g = subdivide(make_lasso(), 3).first;
  auto cx = build_config_complex(g, 3);
  CHECK(h1_of(cx) == free_group(3));
}

TEST_CASE("cycle loops give generators") {
  // Two particles exchanging on a triangle.
  auto tri = build_config_complex(make_cycle(3), 2);
  auto h1 = hom::homology_h1(tri.boundary_data());
  auto ex = exchange_loop({1, 2, 3}, 2);
  CHECK(ex.size() == 3);
  auto chain = loop_to_chain(tri, ex);
  auto cls = hom::cycle_class(h1.basis, chain);
  REQUIRE(cls.free_coords.size() == 1);
  CHECK((cls.free_coords[0] == 1 || cls.free_coords[0] == -1));

  // A lap around the lasso cycle with a spectator on the tail.
  auto lasso = build_config_complex(make_lasso(), 2);
  auto lh = hom::homology_h1(lasso.boundary_data());
  auto lap = ab_loop({2, 3, 4}, {1});
  auto lap_cls = hom::cycle_class(lh.basis, loop_to_chain(lasso, lap));
  CHECK_FALSE(lap_cls.is_zero());

  // Doubling the loop doubles the class.
  Loop twice(lap);
  twice.insert(twice.end(), lap.begin(), lap.end());
  auto twice_cls = hom::cycle_class(lh.basis, loop_to_chain(lasso, twice));
  CHECK(twice_cls == lap_cls + lap_cls);
}

TEST_CASE("junction loop matches its explicit step sequence") {
  auto lasso = build_config_complex(make_lasso(), 2);
  Loop y = y_loop(2, {1, 3, 4});
  REQUIRE(y.size() == 6);
  CHECK(y[0].stationary == std::vector<int>{1});
  CHECK(y[0].tail == 2);
  CHECK(y[0].head == 3);
  CHECK(y[1].stationary == std::vector<int>{3});
  CHECK(y[1].tail == 1);
  CHECK(y[1].head == 2);
  CHECK(y[2].stationary == std::vector<int>{3});
  CHECK(y[2].tail == 2);
  CHECK(y[2].head == 4);
  CHECK(y[3].stationary == std::vector<int>{4});
  CHECK(y[3].tail == 3);
  CHECK(y[3].head == 2);
  CHECK(y[4].stationary == std::vector<int>{4});
  CHECK(y[4].tail == 2);
  CHECK(y[4].head == 1);
  CHECK(y[5].stationary == std::vector<int>{1});
  CHECK(y[5].tail == 4);
  CHECK(y[5].head == 2);
  CHECK_NOTHROW(loop_to_chain(lasso, y));
}

TEST_CASE("junction loop class flips sign under odd arm swaps") {
  auto star = build_config_complex(make_star(3), 2);
  auto h1 = hom::homology_h1(star.boundary_data());
  auto cls = [&](const std::array<int, 3>& arms) {
    return hom::cycle_class(h1.basis, loop_to_chain(star, y_loop(1, arms)));
  };
  auto base = cls({2, 3, 4});
  CHECK_FALSE(base.is_zero());
  CHECK(cls({3, 4, 2}) == base);           // rotation
  CHECK(cls({4, 2, 3}) == base);           // rotation
  CHECK(cls({3, 2, 4}) + base == hom::cycle_class(h1.basis,
        std::vector<Int>(star.cells1.size(), 0)));  // swap negates
}

TEST_CASE("exchange loop shape on larger cycles") {
  auto c5 = build_config_complex(make_cycle(5), 2);
  auto ex = exchange_loop({1, 2, 3, 4, 5}, 2);
  CHECK(ex.size() == 5);  // one step per cycle vertex
  auto chain = loop_to_chain(c5, ex);
  auto h1 = hom::homology_h1(c5.boundary_data());
  CHECK_FALSE(hom::cycle_class(h1.basis, chain).is_zero());

  // Three particles on the subdivided lasso: the loop validates and closes.
  Graph g = subdivide(make_lasso(), 3).first;
  auto cx = build_config_complex(g, 3);
  std::vector<int> cyc = {3, 8, 4, 7, 2, 6};
  auto ex3 = exchange_loop(cyc, 2, {1});
  CHECK(ex3.size() == 6);
  CHECK_NOTHROW(loop_to_chain(cx, ex3));
}

TEST_CASE("loop classes satisfy the composition relations") {
  // (a) On the lasso, the two-particle exchange around the cycle splits into
  //     a one-particle lap plus a junction exchange.
  {
    auto cx = build_config_complex(make_lasso(), 2);
    auto h1 = hom::homology_h1(cx.boundary_data());
    auto cls = [&](const Loop& l) {
      return hom::cycle_class(h1.basis, loop_to_chain(cx, l));
    };
    CHECK(cls(exchange_loop({2, 4, 3}, 2)) ==
          cls(ab_loop({2, 4, 3}, {1})) + cls(y_loop(2, {1, 3, 4})));
  }
  // (b) With tails at two positions, the difference of the two spectator
  //     laps equals the difference of the two junction exchanges.
  {
    Graph g({1, 2, 3, 4, 5}, {{1, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5}});
    auto cx = build_config_complex(g, 2);
    auto h1 = hom::homology_h1(cx.boundary_data());
    auto cls = [&](const Loop& l) {
      return hom::cycle_class(h1.basis, loop_to_chain(cx, l));
    };
    CHECK(cls(ab_loop({2, 4, 3}, {1})) + cls(y_loop(2, {1, 3, 4})) ==
          cls(ab_loop({2, 4, 3}, {5})) + cls(y_loop(3, {5, 4, 2})));
  }
  // (c) Three particles on the subdivided lasso: the triple exchange is a
  //     pair exchange with a parked spectator plus a junction exchange.
  {
    Graph g({1, 2, 3, 4, 5, 6},
            {{1, 2}, {2, 3}, {3, 4}, {3, 6}, {4, 5}, {5, 6}});
    auto cx = build_config_complex(g, 3);
    auto h1 = hom::homology_h1(cx.boundary_data());
    CHECK(h1.group == hom::FGAbelianGroup{3, {}});
    auto cls = [&](const Loop& l) {
      return hom::cycle_class(h1.basis, loop_to_chain(cx, l));
    };
    CHECK(cls(exchange_loop({3, 4, 5, 6}, 3)) ==
          cls(exchange_loop({3, 4, 5, 6}, 2, {2})) +
              cls(y_loop(3, {2, 6, 4}, {5})));
  }
  // (d) Three particles, a cycle with two tails: moving a parked particle
  //     from one tail to the other changes the lap class by the difference
  //     of the junction exchanges at the two attachment points.
  {
    Graph g({1, 2, 3, 4, 5, 6, 7, 8},
            {{1, 2}, {1, 4}, {1, 5}, {2, 3}, {3, 4}, {3, 7}, {5, 6}, {7, 8}});
    auto cx = build_config_complex(g, 3);
    auto h1 = hom::homology_h1(cx.boundary_data());
    auto cls = [&](const Loop& l) {
      return hom::cycle_class(h1.basis, loop_to_chain(cx, l));
    };
    // Parking depth inside a tail does not change the class.
    CHECK(cls(ab_loop({1, 2, 3, 4}, {6, 8})) ==
          cls(ab_loop({1, 2, 3, 4}, {5, 7})));
    CHECK(cls(ab_loop({1, 2, 3, 4}, {5, 6})) -
              cls(ab_loop({1, 2, 3, 4}, {6, 8})) ==
          cls(y_loop(3, {2, 4, 7}, {6})) - cls(y_loop(1, {2, 5, 4}, {6})));
  }
}

TEST_CASE("loop validation rejects malformed input") {
  auto lasso = build_config_complex(make_lasso(), 2);
  CHECK_THROWS_AS(loop_to_chain(lasso, Loop{}), InputError);
  // Wrong spectator count.
  CHECK_THROWS_AS(loop_to_chain(lasso, ab_loop({2, 3, 4}, {})), InputError);
  // Non-edge move.
  CHECK_THROWS_AS(loop_to_chain(lasso, Loop{{{2}, 1, 3}, {{2}, 3, 1}}),
                  InputError);
  // Does not close.
  Loop open{{{1}, 2, 3}, {{1}, 3, 4}};
  CHECK_THROWS_AS(loop_to_chain(lasso, open), InputError);
  // Spectator sitting on the moving edge.
  CHECK_THROWS_AS(loop_to_chain(lasso, Loop{{{3}, 2, 3}, {{3}, 3, 2}}),
                  InputError);
}

TEST_CASE("complex serialization shape") {
  auto cx = build_config_complex(make_lasso(), 2);
  auto j = complex_to_json(cx);
  CHECK(j["particles"] == 2);
  CHECK(j["cells"].size() == cx.total_cells());
  CHECK(j["d1"].size() == 2 * cx.cells1.size());
  CHECK(j["d2"].size() == 4 * cx.cells2.size());
  // First 0-cell, in canonical order.
  CHECK(j["cells"][0][0] == 0);
  CHECK(j["cells"][0][1] == std::vector<int>{1, 2});
}
