#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "graphstat/smith.hpp"

using namespace graphstat;
using namespace graphstat::hom;

namespace {

Mat from_ll(const std::vector<std::vector<long long>>& rows) {
  Mat m;
  for (const auto& r : rows) {
    m.emplace_back();
    for (long long v : r) m.back().push_back(v);
  }
  return m;
}

void check_snf_contract(const Mat& a) {
  SmithResult s = smith_normal_form(a, true);
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;

  // U*A*V equals the diagonal matrix D.
  Mat d = mat_mul(mat_mul(s.u, a), s.v);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      Int want = (i == j && i < static_cast<int>(s.diag.size())) ? s.diag[i] : Int(0);
      CHECK(d[i][j] == want);
    }
  // Transforms are exact integer inverses of each other (hence unimodular).
  CHECK(mat_equal(mat_mul(s.u, s.u_inv), mat_identity(rows)));
  CHECK(mat_equal(mat_mul(s.u_inv, s.u), mat_identity(rows)));
  CHECK(mat_equal(mat_mul(s.v, s.v_inv), mat_identity(cols)));
  CHECK(mat_equal(mat_mul(s.v_inv, s.v), mat_identity(cols)));
  // Nonnegative divisibility chain, zeros trailing.
  for (int i = 0; i < static_cast<int>(s.diag.size()); ++i) {
    CHECK(s.diag[i] >= 0);
    CHECK((i < s.rank) == (s.diag[i] != 0));
    if (i + 1 < s.rank) CHECK(s.diag[i + 1] % s.diag[i] == 0);
  }
}

}  // namespace

TEST_CASE("smith normal form on known matrices") {
  SmithResult s1 = smith_normal_form(from_ll({{2, 4}, {6, 8}}), false);
  CHECK(s1.rank == 2);
  CHECK(s1.diag == std::vector<Int>{2, 4});

  SmithResult s2 = smith_normal_form(from_ll({{2, 0}, {0, 3}}), false);
  CHECK(s2.rank == 2);
  CHECK(s2.diag == std::vector<Int>{1, 6});

  // Incidence matrix of a triangle: rank 2, unit factors.
  SmithResult s3 = smith_normal_form(
      from_ll({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}}), false);
  CHECK(s3.rank == 2);
  CHECK(s3.diag == std::vector<Int>{1, 1, 0});

  SmithResult s4 = smith_normal_form(from_ll({{2}}), false);
  CHECK(s4.diag == std::vector<Int>{2});

  SmithResult s5 = smith_normal_form(from_ll({{0, 0}, {0, 0}}), false);
  CHECK(s5.rank == 0);

  // Wider-than-tall and taller-than-wide shapes.
  SmithResult s6 = smith_normal_form(from_ll({{4, 6, 10}}), false);
  CHECK(s6.rank == 1);
  CHECK(s6.diag == std::vector<Int>{2});
  SmithResult s7 = smith_normal_form(from_ll({{4}, {6}, {10}}), false);
  CHECK(s7.diag == std::vector<Int>{2});
}

TEST_CASE("smith transforms satisfy the exact contract") {
  check_snf_contract(from_ll({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}));
  check_snf_contract(from_ll({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));
  check_snf_contract(from_ll({{0, 2}, {3, 0}, {0, 0}}));
  check_snf_contract(from_ll({{6, 10, 15}}));

  std::mt19937_64 rng(20260822u);
  std::uniform_int_distribution<int> dim(1, 7), val(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    int r = dim(rng), c = dim(rng);
    Mat a = mat_zero(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) a[i][j] = val(rng);
    check_snf_contract(a);
  }
}

TEST_CASE("sparse invariant factors agree with the dense path") {
  std::mt19937_64 rng(97531u);
  std::uniform_int_distribution<int> dim(1, 12), val(-3, 3);
  std::uniform_int_distribution<int> fill(0, 3);
  for (int trial = 0; trial < 80; ++trial) {
    int r = dim(rng), c = dim(rng);
    SparseMat sp;
    sp.rows = r;
    sp.cols = c;
    Mat dense = mat_zero(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        if (fill(rng) != 0) continue;  // keep it sparse
        int v = val(rng);
        if (v == 0) continue;
        sp.entries.push_back({i, j, v});
        dense[i][j] = v;
      }
    std::vector<Int> got = sparse_invariant_factors(sp);
    SmithResult want = smith_normal_form(dense, false);
    std::vector<Int> wantd(want.diag.begin(), want.diag.begin() + want.rank);
    CHECK(got == wantd);
    CHECK(sparse_rank(sp) == want.rank);
  }
}

TEST_CASE("sparse path handles matrices without unit entries") {
  SparseMat sp;
  sp.rows = 2;
  sp.cols = 2;
  sp.entries = {{0, 0, 2}, {0, 1, 4}, {1, 0, 6}, {1, 1, 8}};
  CHECK(sparse_invariant_factors(sp) == std::vector<Int>{2, 4});

  SparseMat zero;
  zero.rows = 3;
  zero.cols = 4;
  CHECK(sparse_invariant_factors(zero).empty());
  CHECK(sparse_rank(zero) == 0);
}

TEST_CASE("duplicate triplets accumulate") {
  SparseMat sp;
  sp.rows = 1;
  sp.cols = 1;
  sp.entries = {{0, 0, 1}, {0, 0, 1}};  // sums to 2
  CHECK(sparse_invariant_factors(sp) == std::vector<Int>{2});
}
