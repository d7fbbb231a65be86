#include "graphstat/homology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace graphstat::hom {

std::string FGAbelianGroup::to_string() const {
  if (rank == 0 && torsion.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank > 0) {
    os << "Z";
    if (rank > 1) os << "^" << rank;
    first = false;
  }
  for (const Int& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

FGAbelianGroup group_from_factors(int rank, std::vector<Int> factors) {
  FGAbelianGroup g;
  g.rank = rank;
  for (Int& f : factors) {
    check_internal(f >= 0, "negative invariant factor");
    if (f > 1) g.torsion.push_back(f);
  }
  std::sort(g.torsion.begin(), g.torsion.end());
  for (size_t i = 0; i + 1 < g.torsion.size(); ++i)
    check_internal(g.torsion[i + 1] % g.torsion[i] == 0,
                   "torsion factors must form a divisibility chain");
  return g;
}

bool composition_is_zero(const BoundaryData& b) {
  // d1 * d2 columns, computed sparsely.
  std::vector<std::vector<std::pair<int, long long>>> d1cols(b.c1);
  for (const Triplet& t : b.d1.entries) d1cols[t.col].push_back({t.row, t.val});
  std::vector<std::vector<std::pair<int, long long>>> d2cols(b.c2);
  for (const Triplet& t : b.d2.entries) d2cols[t.col].push_back({t.row, t.val});
  for (int j = 0; j < b.c2; ++j) {
    std::map<int, long long> acc;
    for (const auto& [r1cell, v] : d2cols[j])
      for (const auto& [r0cell, w] : d1cols[r1cell]) acc[r0cell] += v * w;
    for (const auto& [r, v] : acc)
      if (v != 0) return false;
  }
  return true;
}

namespace {

// Union-find rank of a boundary matrix whose columns all have entry set
// {+1, -1}; falls back to a generic sparse rank otherwise.
int boundary_rank(const SparseMat& m) {
  std::vector<std::vector<std::pair<int, long long>>> cols(m.cols);
  for (const Triplet& t : m.entries)
    if (t.val != 0) cols[t.col].push_back({t.row, t.val});
  bool incidence = true;
  for (const auto& c : cols) {
    if (c.size() != 2 || c[0].second * c[1].second != -1) {
      incidence = false;
      break;
    }
  }
  if (!incidence) return sparse_rank(m);

  std::vector<int> parent(m.rows);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int merges = 0;
  for (const auto& c : cols) {
    if (c.empty()) continue;
    int ra = find(c[0].first), rb = find(c[1].first);
    if (ra != rb) {
      parent[ra] = rb;
      ++merges;
    }
  }
  return merges;
}

}  // namespace

int h0_rank(const BoundaryData& b) { return b.c0 - boundary_rank(b.d1); }

H1Result homology_h1(const BoundaryData& b, const H1Options& opt) {
  check_internal(b.d1.rows == b.c0 && b.d1.cols == b.c1 &&
                     b.d2.rows == b.c1 && b.d2.cols == b.c2,
                 "boundary shapes inconsistent");
  H1Result res;
  bool with_basis = !opt.force_group_only && b.c1 <= opt.basis_threshold;

  if (!with_basis) {
    int r1 = boundary_rank(b.d1);
    std::vector<Int> factors = sparse_invariant_factors(b.d2);
    int r2 = static_cast<int>(factors.size());
    check_internal(b.c1 - r1 - r2 >= 0, "negative homology rank");
    res.group = group_from_factors(b.c1 - r1 - r2, std::move(factors));
    return res;
  }

  Mat a1 = to_dense(b.d1);
  Mat a2 = to_dense(b.d2);
  SmithResult s1 = smith_normal_form(a1, true);
  int r1 = s1.rank;
  int k = b.c1 - r1;

  // Coordinates of the d2 columns in the V1 basis; the first r1 rows must
  // vanish because im d2 lies inside ker d1.
  Mat w = mat_mul(s1.v_inv, a2);
  for (int i = 0; i < r1; ++i)
    for (int j = 0; j < b.c2; ++j)
      check_internal(w[i][j] == 0, "im d2 escapes ker d1");
  Mat bmat = mat_zero(k, b.c2);
  for (int i = 0; i < k; ++i) bmat[i] = w[r1 + i];

  SmithResult s2 = smith_normal_form(bmat, true);
  int r2 = s2.rank;
  std::vector<Int> factors(s2.diag.begin(), s2.diag.begin() + r2);
  res.group = group_from_factors(k - r2, factors);

  // Kernel basis K = trailing columns of V1; generators G = K * U2^-1.
  H1Basis& basis = res.basis;
  basis.available = true;
  basis.r1 = r1;
  basis.r2 = r2;
  basis.v1_inv = s1.v_inv;
  basis.u2 = s2.u;
  basis.diag2 = factors;
  for (int j = 0; j < k; ++j) {
    std::vector<Int> gen(b.c1, 0);
    for (int t = 0; t < b.c1; ++t) {
      Int acc = 0;
      for (int i = 0; i < k; ++i) acc += s1.v[t][r1 + i] * s2.u_inv[i][j];
      gen[t] = acc;
    }
    if (j >= r2)
      basis.free_generators.push_back(std::move(gen));
    else if (factors[j] > 1)
      basis.torsion_generators.push_back(std::move(gen));
  }
  return res;
}

CycleClass cycle_class(const H1Basis& basis, const std::vector<Int>& z) {
  check_internal(basis.available, "no basis available for cycle_class");
  int c1 = static_cast<int>(basis.v1_inv.size());
  check_input(static_cast<int>(z.size()) == c1, "chain has wrong length");
  std::vector<Int> w(c1, 0);
  for (int i = 0; i < c1; ++i) {
    Int acc = 0;
    for (int j = 0; j < c1; ++j)
      if (z[j] != 0) acc += basis.v1_inv[i][j] * z[j];
    w[i] = acc;
  }
  for (int i = 0; i < basis.r1; ++i)
    check_input(w[i] == 0, "chain is not a cycle");

  int k = c1 - basis.r1;
  std::vector<Int> y(k, 0);
  for (int i = 0; i < k; ++i) {
    Int acc = 0;
    for (int j = 0; j < k; ++j)
      if (w[basis.r1 + j] != 0) acc += basis.u2[i][j] * w[basis.r1 + j];
    y[i] = acc;
  }
  CycleClass cc;
  for (int i = basis.r2; i < k; ++i) cc.free_coords.push_back(y[i]);
  for (int i = 0; i < basis.r2; ++i) {
    if (basis.diag2[i] <= 1) continue;
    Int m = basis.diag2[i];
    Int r = y[i] % m;
    if (r < 0) r += m;
    cc.torsion_residues.push_back(r);
    cc.torsion_moduli.push_back(m);
  }
  return cc;
}

CycleClass CycleClass::operator+(const CycleClass& o) const {
  check_input(free_coords.size() == o.free_coords.size() &&
                  torsion_moduli == o.torsion_moduli,
              "cycle classes from different bases");
  CycleClass r = *this;
  for (size_t i = 0; i < free_coords.size(); ++i)
    r.free_coords[i] += o.free_coords[i];
  for (size_t i = 0; i < torsion_residues.size(); ++i) {
    r.torsion_residues[i] = (torsion_residues[i] + o.torsion_residues[i]) %
                            torsion_moduli[i];
  }
  return r;
}

CycleClass CycleClass::operator-(const CycleClass& o) const {
  check_input(free_coords.size() == o.free_coords.size() &&
                  torsion_moduli == o.torsion_moduli,
              "cycle classes from different bases");
  CycleClass r = *this;
  for (size_t i = 0; i < free_coords.size(); ++i)
    r.free_coords[i] -= o.free_coords[i];
  for (size_t i = 0; i < torsion_residues.size(); ++i) {
    Int m = torsion_moduli[i];
    r.torsion_residues[i] = ((torsion_residues[i] - o.torsion_residues[i]) % m + m) % m;
  }
  return r;
}

bool CycleClass::is_zero() const {
  for (const Int& x : free_coords)
    if (x != 0) return false;
  for (const Int& x : torsion_residues)
    if (x != 0) return false;
  return true;
}

std::string CycleClass::to_string() const {
  std::ostringstream os;
  os << "free(";
  for (size_t i = 0; i < free_coords.size(); ++i)
    os << (i ? "," : "") << free_coords[i];
  os << ") torsion(";
  for (size_t i = 0; i < torsion_residues.size(); ++i)
    os << (i ? "," : "") << torsion_residues[i] << " mod " << torsion_moduli[i];
  os << ")";
  return os.str();
}

}  // namespace graphstat::hom
