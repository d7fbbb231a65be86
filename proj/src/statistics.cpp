#include "graphstat/statistics.hpp"

#include <algorithm>

namespace graphstat::stat {

using core::Graph;

Int star_gamma(int n, int arms) {
  check_input(arms >= 1, "star needs at least one arm");
  check_input(n >= 1 && n <= arms, "star Betti number needs 1 <= n <= arms");
  return Int(arms) * binom(arms - 1, n - 1) - binom(arms + 1, n) + 1;
}

Int star_alpha(int k, int arms) {
  check_input(k >= 2 && k <= arms, "alpha needs 2 <= k <= arms");
  Int total = 0;
  for (int i = 0; i <= k - 2; ++i) {
    Int term = binom(arms, i) * star_gamma(k - i, arms - i);
    total += (i % 2 == 0) ? term : -term;
  }
  return total;
}

Int star_beta(int n, int arms) {
  check_input(arms >= 2, "beta needs at least two arms");
  check_input(n >= 1, "particle count must be positive");
  return binom(n + arms - 2, arms - 1) * (arms - 2) -
         binom(n + arms - 2, arms - 2) + 1;
}

Int n1_coefficient(int mu, int nu, int n) {
  check_input(mu >= 1 && nu >= mu, "cut vertex needs nu >= mu >= 1");
  check_input(n >= 1, "particle count must be positive");
  return binom(n + mu - 2, mu - 1) * (nu - 2) - binom(n + mu - 2, mu - 2) -
         Int(nu - mu - 1);
}

Int n2_coefficient(int mu) {
  check_input(mu >= 2, "two-cut multiplicity must be at least 2");
  return Int(mu - 1) * (mu - 2) / 2;
}

StatisticsReport predict_h1(const Graph& g, int n) {
  check_input(n >= 1, "particle count must be positive");
  check_input(core::is_connected(g), "prediction needs a connected graph");

  StatisticsReport rep;
  rep.particles = n;
  rep.beta1 = core::betti_number(g);
  if (n == 1) {
    rep.group = {rep.beta1, {}};
    return rep;
  }

  auto blocks = conn::block_decomposition(g);
  for (int v : blocks.cut_vertices) {
    CutVertexTerm term;
    term.vertex = v;
    term.mu = blocks.mu.at(v);
    term.nu = blocks.nu.at(v);
    term.contribution = n1_coefficient(term.mu, term.nu, n);
    rep.n1_total += term.contribution;
    rep.cut_vertices.push_back(term);
  }

  for (const Graph& block : blocks.blocks) {
    if (block.num_vertices() < 3) continue;  // bridges contribute nothing
    auto d = conn::tri_decomposition(block);
    rep.n3 += d.n3;
    rep.n3_prime += d.n3_prime;
    rep.n3_second += d.n3_second;
    rep.c2 += d.c2;
    for (const auto& cut : d.cuts) {
      TwoCutTerm term;
      term.pair = cut.pair;
      term.mu = cut.mu;
      term.contribution = n2_coefficient(cut.mu);
      rep.n2_total += term.contribution;
      rep.two_cuts.push_back(term);
    }
  }

  Int rank = Int(rep.beta1) + rep.n1_total + rep.n2_total + Int(rep.n3);
  check_internal(rank >= 0 && rank <= Int(1) << 30,
                 "predicted rank out of range");
  rep.group.rank = static_cast<int>(rank);
  rep.group.torsion.assign(rep.n3_prime, Int(2));
  return rep;
}

}  // namespace graphstat::stat
