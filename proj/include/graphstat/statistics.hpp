#pragma once

#include <utility>
#include <vector>

#include "graphstat/connectivity.hpp"
#include "graphstat/graph.hpp"
#include "graphstat/homology.hpp"
#include "graphstat/util.hpp"

namespace graphstat::stat {

// First Betti number of the n-particle combinatorial configuration space of
// a star with the given number of arms (n <= arms).
Int star_gamma(int n, int arms);

// Alternating binomial contraction of the star numbers; equals
// (-1)^k * C(arms - 1, k).
Int star_alpha(int k, int arms);

// Rank contribution of a star junction for n particles.
Int star_beta(int n, int arms);

// Contribution of a cut vertex with mu = components left by its removal and
// nu = its degree, for n particles.
Int n1_coefficient(int mu, int nu, int n);

// Contribution of a 2-cut with multiplicity mu (components plus direct
// edges); independent of the particle count.
Int n2_coefficient(int mu);

struct CutVertexTerm {
  int vertex = 0;
  int mu = 0;
  int nu = 0;
  Int contribution = 0;
};

struct TwoCutTerm {
  std::pair<int, int> pair;
  int mu = 0;
  Int contribution = 0;
};

struct StatisticsReport {
  hom::FGAbelianGroup group;
  int particles = 0;
  int beta1 = 0;
  Int n1_total = 0;
  Int n2_total = 0;
  int n3 = 0;         // 3-connected planar pieces
  int n3_prime = 0;   // 3-connected nonplanar pieces
  int n3_second = 0;  // cycle pieces (informational)
  int c2 = 0;
  std::vector<CutVertexTerm> cut_vertices;
  std::vector<TwoCutTerm> two_cuts;
};

// Predicts the first homology of the n-particle configuration space from
// graph connectivity alone: rank = beta1 + N1 + N2 + N3 with a Z/2 summand
// per nonplanar 3-connected piece. For n = 1 the answer is Z^beta1.
StatisticsReport predict_h1(const core::Graph& g, int n);

}  // namespace graphstat::stat
