#pragma once

#include <vector>

#include "graphstat/util.hpp"

namespace graphstat::hom {

using Mat = std::vector<std::vector<Int>>;

Mat mat_zero(int rows, int cols);
Mat mat_identity(int n);
Mat mat_mul(const Mat& a, const Mat& b);
bool mat_equal(const Mat& a, const Mat& b);

// Sparse integer matrix as coordinate triplets (row, col, value).
struct Triplet {
  int row, col;
  long long val;
};

struct SparseMat {
  int rows = 0, cols = 0;
  std::vector<Triplet> entries;
};

Mat to_dense(const SparseMat& s);

// Smith normal form U*A*V = D with unimodular U, V.  D is diagonal with
// nonnegative entries d1 | d2 | ... | dr followed by zeros.
struct SmithResult {
  std::vector<Int> diag;   // the first min(rows,cols) diagonal entries
  int rank = 0;            // number of nonzero diagonal entries
  Mat u, u_inv, v, v_inv;  // transforms, tracked on demand
  bool has_transforms = false;
};

SmithResult smith_normal_form(Mat a, bool with_transforms);

// Invariant factors (nonzero diagonal of the SNF) of a sparse matrix,
// without transform tracking.  Greedy unit-pivot elimination first, dense
// exact arithmetic on whatever remains.
std::vector<Int> sparse_invariant_factors(const SparseMat& m);

// Rank over the rationals of a sparse integer matrix.
int sparse_rank(const SparseMat& m);

}  // namespace graphstat::hom
