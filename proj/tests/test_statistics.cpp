#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphstat/complex.hpp"
#include "graphstat/graph.hpp"
#include "graphstat/homology.hpp"
#include "graphstat/statistics.hpp"
#include "graphstat/util.hpp"

using namespace graphstat;
using namespace graphstat::core;
using namespace graphstat::stat;

namespace {

hom::FGAbelianGroup computed_h1(const Graph& g, int n) {
  Graph use = core::sufficiently_subdivided(g, n) ? g : subdivide(g, n).first;
  auto cx = cfg::build_config_complex(use, n);
  return hom::homology_h1(cx.boundary_data()).group;
}

hom::FGAbelianGroup free_group(int rank) { return {rank, {}}; }

Graph make_domino() {
  return Graph({1, 2, 3, 4, 5, 6},
               {{1, 2}, {2, 4}, {3, 4}, {1, 3}, {3, 5}, {5, 6}, {4, 6}});
}

Graph make_book3() {
  return Graph({1, 2, 3, 4, 5},
               {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {1, 5}, {2, 5}});
}

Graph make_prism() {
  return Graph({1, 2, 3, 4, 5, 6},
               {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6},
                {1, 4}, {2, 5}, {3, 6}});
}

}  // namespace

TEST_CASE("star gamma values") {
  CHECK(star_gamma(2, 3) == 1);
  CHECK(star_gamma(2, 5) == 6);
  CHECK(star_gamma(3, 5) == 11);
  CHECK(star_gamma(1, 4) == 0);   // one particle on a tree
  CHECK(star_gamma(4, 4) == 0);   // saturated star is a tree again
  CHECK_THROWS_AS(star_gamma(4, 3), InputError);
}

TEST_CASE("star gamma matches the combinatorial complex") {
  for (int arms = 3; arms <= 5; ++arms) {
    Graph star = make_star(arms);
    for (int n = 2; n <= arms; ++n) {
      auto cx = cfg::build_config_complex(star, n, ExecPolicy::Parallel, false);
      CHECK(cx.cells2.empty());  // all edges share the hub
      auto h1 = hom::homology_h1(cx.boundary_data());
      CHECK(hom::h0_rank(cx.boundary_data()) == 1);
      CHECK(Int(h1.group.rank) == star_gamma(n, arms));
      CHECK(h1.group.torsion.empty());
    }
  }
}

TEST_CASE("alpha contraction identity") {
  CHECK(star_alpha(3, 5) == -4);
  CHECK(star_alpha(4, 5) == 1);
  for (int arms = 3; arms <= 10; ++arms) {
    for (int k = 2; k <= arms - 1; ++k) {
      Int expect = binom(arms - 1, k);
      if (k % 2 == 1) expect = -expect;
      CHECK(star_alpha(k, arms) == expect);
    }
  }
}

TEST_CASE("star beta values") {
  CHECK(star_beta(2, 3) == 1);
  CHECK(star_beta(3, 3) == 3);
  CHECK(star_beta(3, 5) == 26);
  CHECK(star_beta(2, 4) == 3);
  CHECK(star_beta(2, 5) == 6);
}

TEST_CASE("junction coefficient closes the star formulas") {
  for (int arms = 2; arms <= 8; ++arms)
    for (int n = 1; n <= 8; ++n)
      CHECK(n1_coefficient(arms, arms, n) == star_beta(n, arms));
}

TEST_CASE("two-particle reduction of the junction coefficient") {
  for (int mu = 2; mu <= 8; ++mu)
    for (int nu = mu; nu <= 12; ++nu) {
      Int reduced = Int(mu - 1) * (mu - 2) / 2 + Int(mu - 1) * (nu - mu);
      CHECK(n1_coefficient(mu, nu, 2) == reduced);
    }
}

TEST_CASE("junction coefficient vanishes in degenerate cases") {
  // A degree-2 cut vertex is invisible at every particle count.
  for (int n = 1; n <= 8; ++n) CHECK(n1_coefficient(2, 2, n) == 0);
  // One particle sees no junction at all.
  for (int mu = 2; mu <= 6; ++mu)
    for (int nu = mu; nu <= 8; ++nu) CHECK(n1_coefficient(mu, nu, 1) == 0);
}

TEST_CASE("two-cut coefficient") {
  CHECK(n2_coefficient(2) == 0);
  CHECK(n2_coefficient(3) == 1);
  CHECK(n2_coefficient(4) == 3);
  CHECK(n2_coefficient(5) == 6);
}

TEST_CASE("predictions for two particles on the reference graphs") {
  auto group = [](const Graph& g) { return predict_h1(g, 2).group; };

  CHECK(group(make_cycle(3)) == free_group(1));
  CHECK(group(make_cycle(5)) == free_group(1));
  CHECK(group(make_star(3)) == free_group(1));
  CHECK(group(make_star(4)) == free_group(3));
  CHECK(group(make_star(5)) == free_group(6));
  CHECK(group(make_path(4)) == free_group(0));
  CHECK(group(make_lasso()) == free_group(2));
  CHECK(group(make_theta()) == free_group(3));
  CHECK(group(make_bowtie()) == free_group(4));
  CHECK(group(make_complete(4)) == free_group(4));
  CHECK(group(make_two_connected_example()) == free_group(7));
  CHECK(group(make_wheel(4)) == free_group(5));
  CHECK(group(make_octahedron()) == free_group(8));
  CHECK(group(make_domino()) == free_group(3));
  CHECK(group(make_book3()) == free_group(6));
  CHECK(group(make_prism()) == free_group(5));

  hom::FGAbelianGroup k5{6, {2}};
  CHECK(group(make_complete(5)) == k5);
  hom::FGAbelianGroup k33{4, {2}};
  CHECK(group(make_complete_bipartite(3, 3)) == k33);
  hom::FGAbelianGroup k6{10, {2}};
  CHECK(group(make_complete(6)) == k6);
}

TEST_CASE("report details for the eight-vertex example") {
  auto rep = predict_h1(make_two_connected_example(), 2);
  CHECK(rep.beta1 == 4);
  CHECK(rep.n1_total == 0);
  CHECK(rep.n2_total == 3);
  CHECK(rep.n3 == 0);
  CHECK(rep.n3_prime == 0);
  CHECK(rep.cut_vertices.empty());
  CHECK(rep.group == free_group(7));
}

TEST_CASE("report details for the bow-tie") {
  auto rep = predict_h1(make_bowtie(), 2);
  CHECK(rep.beta1 == 2);
  REQUIRE(rep.cut_vertices.size() == 1);
  CHECK(rep.cut_vertices[0].vertex == 2);
  CHECK(rep.cut_vertices[0].mu == 2);
  CHECK(rep.cut_vertices[0].nu == 4);
  CHECK(rep.cut_vertices[0].contribution == 2);
  CHECK(rep.n2_total == 0);
  CHECK(rep.group == free_group(4));
}

TEST_CASE("prediction is subdivision invariant") {
  for (const Graph& g : {make_lasso(), make_complete(4), make_theta(),
                         make_bowtie(), make_complete(5)}) {
    for (int n : {2, 3, 4}) {
      auto plain = predict_h1(g, n);
      auto fine = predict_h1(subdivide(g, n).first, n);
      CHECK(plain.group == fine.group);
    }
  }
}

TEST_CASE("prediction matches computed homology for two particles") {
  for (const Graph& g :
       {make_cycle(3), make_star(3), make_star(4), make_lasso(), make_theta(),
        make_complete(4), make_bowtie(), make_domino(), make_book3(),
        make_prism(), make_wheel(4), make_octahedron(),
        make_two_connected_example(), make_complete(5),
        make_complete_bipartite(3, 3)}) {
    CHECK(predict_h1(g, 2).group == computed_h1(g, 2));
  }
}

TEST_CASE("prediction matches computed homology for three particles") {
  CHECK(predict_h1(make_star(3), 3).group == free_group(3));
  CHECK(predict_h1(make_star(3), 3).group == computed_h1(make_star(3), 3));
  CHECK(predict_h1(make_lasso(), 3).group == free_group(3));
  CHECK(predict_h1(make_lasso(), 3).group == computed_h1(make_lasso(), 3));
  CHECK(predict_h1(make_cycle(3), 3).group == free_group(1));
  CHECK(predict_h1(make_cycle(3), 3).group == computed_h1(make_cycle(3), 3));
}

TEST_CASE("one particle prediction is the graph itself") {
  CHECK(predict_h1(make_complete(4), 1).group == free_group(3));
  CHECK(predict_h1(make_complete(5), 1).group == free_group(6));
  CHECK(predict_h1(make_star(5), 1).group == free_group(0));
}

TEST_CASE("trees are governed by junction terms alone") {
  // Two particles on a path: contractible.
  CHECK(predict_h1(make_path(5), 2).group == free_group(0));
  CHECK(computed_h1(make_path(5), 2) == free_group(0));
  // Star junctions for larger n.
  CHECK(predict_h1(make_star(4), 3).group.rank == static_cast<int>(star_beta(3, 4)));
  CHECK(predict_h1(make_star(5), 3).group.rank == 26);
}
