#include "graphstat/smith.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace graphstat::hom {

Mat mat_zero(int rows, int cols) {
  return Mat(rows, std::vector<Int>(cols, 0));
}

Mat mat_identity(int n) {
  Mat m = mat_zero(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  int n = static_cast<int>(a.size());
  int k = n ? static_cast<int>(a[0].size()) : 0;
  int m = k ? static_cast<int>(b[0].size()) : (b.empty() ? 0 : (int)b[0].size());
  check_internal(b.size() == static_cast<size_t>(k), "mat_mul shape mismatch");
  Mat c = mat_zero(n, m);
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < m; ++j)
        if (b[t][j] != 0) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

bool mat_equal(const Mat& a, const Mat& b) { return a == b; }

Mat to_dense(const SparseMat& s) {
  Mat m = mat_zero(s.rows, s.cols);
  for (const Triplet& t : s.entries) m[t.row][t.col] += t.val;
  return m;
}

namespace {

// Elementary-operation bookkeeping for SNF transform tracking.
struct SnfWorker {
  Mat a;
  int rows, cols;
  bool track;
  Mat u, uinv, v, vinv;

  SnfWorker(Mat m, bool with_transforms)
      : a(std::move(m)),
        rows(static_cast<int>(a.size())),
        cols(rows ? static_cast<int>(a[0].size()) : 0),
        track(with_transforms) {
    if (track) {
      u = mat_identity(rows);
      uinv = mat_identity(rows);
      v = mat_identity(cols);
      vinv = mat_identity(cols);
    }
  }

  void row_add(int i, int j, const Int& c) {  // row_i += c * row_j
    for (int t = 0; t < cols; ++t) a[i][t] += c * a[j][t];
    if (track) {
      for (int t = 0; t < rows; ++t) u[i][t] += c * u[j][t];
      for (int t = 0; t < rows; ++t) uinv[t][j] -= c * uinv[t][i];
    }
  }
  void row_swap(int i, int j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    if (track) {
      std::swap(u[i], u[j]);
      for (int t = 0; t < rows; ++t) std::swap(uinv[t][i], uinv[t][j]);
    }
  }
  void row_negate(int i) {
    for (int t = 0; t < cols; ++t) a[i][t] = -a[i][t];
    if (track) {
      for (int t = 0; t < rows; ++t) u[i][t] = -u[i][t];
      for (int t = 0; t < rows; ++t) uinv[t][i] = -uinv[t][i];
    }
  }
  void col_add(int j, int k, const Int& c) {  // col_j += c * col_k
    for (int t = 0; t < rows; ++t) a[t][j] += c * a[t][k];
    if (track) {
      for (int t = 0; t < cols; ++t) v[t][j] += c * v[t][k];
      for (int t = 0; t < cols; ++t) vinv[k][t] -= c * vinv[j][t];
    }
  }
  void col_swap(int j, int k) {
    if (j == k) return;
    for (int t = 0; t < rows; ++t) std::swap(a[t][j], a[t][k]);
    if (track) {
      for (int t = 0; t < cols; ++t) std::swap(v[t][j], v[t][k]);
      std::swap(vinv[j], vinv[k]);
    }
  }
  void col_negate(int j) {
    for (int t = 0; t < rows; ++t) a[t][j] = -a[t][j];
    if (track) {
      for (int t = 0; t < cols; ++t) v[t][j] = -v[t][j];
      for (int t = 0; t < cols; ++t) vinv[j][t] = -vinv[j][t];
    }
  }
};

}  // namespace

SmithResult smith_normal_form(Mat a0, bool with_transforms) {
  SnfWorker w(std::move(a0), with_transforms);
  int n = std::min(w.rows, w.cols);
  int t = 0;
  while (t < n) {
    // Find smallest-magnitude nonzero entry in the trailing submatrix.
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < w.rows; ++i)
      for (int j = t; j < w.cols; ++j) {
        if (w.a[i][j] == 0) continue;
        Int mag = abs(w.a[i][j]);
        if (pi < 0 || mag < best) {
          best = mag;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // all zero; done
    w.row_swap(t, pi);
    w.col_swap(t, pj);
    if (w.a[t][t] < 0) w.row_negate(t);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      // Clear column t.
      for (int i = t + 1; i < w.rows; ++i) {
        if (w.a[i][t] == 0) continue;
        Int q = w.a[i][t] / w.a[t][t];
        if (q != 0) w.row_add(i, t, -q);
        if (w.a[i][t] != 0) {  // remainder became the smaller pivot
          w.row_swap(t, i);
          if (w.a[t][t] < 0) w.row_negate(t);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Clear row t.
      for (int j = t + 1; j < w.cols; ++j) {
        if (w.a[t][j] == 0) continue;
        Int q = w.a[t][j] / w.a[t][t];
        if (q != 0) w.col_add(j, t, -q);
        if (w.a[t][j] != 0) {
          w.col_swap(t, j);
          if (w.a[t][t] < 0) w.col_negate(t);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Divisibility fix-up: pivot must divide the trailing submatrix.
      for (int i = t + 1; i < w.rows && !dirty; ++i)
        for (int j = t + 1; j < w.cols && !dirty; ++j)
          if (w.a[i][j] % w.a[t][t] != 0) {
            w.row_add(t, i, 1);
            dirty = true;
          }
    }
    ++t;
  }

  SmithResult r;
  r.rank = t;
  for (int i = 0; i < n; ++i) r.diag.push_back(i < w.rows && i < w.cols ? w.a[i][i] : Int(0));
  r.has_transforms = with_transforms;
  if (with_transforms) {
    r.u = std::move(w.u);
    r.u_inv = std::move(w.uinv);
    r.v = std::move(w.v);
    r.v_inv = std::move(w.vinv);
  }
  return r;
}

namespace {

constexpr long long kOverflowGuard = 1LL << 60;
constexpr int kDenseRemainderCap = 2000;

struct SparseWorker {
  int rows, cols;
  std::vector<std::map<int, long long>> row;  // row -> (col -> value)
  std::vector<std::set<int>> col_rows;        // col -> rows with a nonzero
  std::vector<bool> row_alive, col_alive;
  std::vector<int> col_nnz;
  std::vector<std::set<int>> cols_by_nnz;  // bucket index = nnz

  explicit SparseWorker(const SparseMat& m)
      : rows(m.rows),
        cols(m.cols),
        row(m.rows),
        col_rows(m.cols),
        row_alive(m.rows, true),
        col_alive(m.cols, true),
        col_nnz(m.cols, 0),
        cols_by_nnz(m.rows + 2) {
    for (const Triplet& t : m.entries) {
      check_internal(t.row >= 0 && t.row < rows && t.col >= 0 && t.col < cols,
                     "triplet out of range");
      if (t.val == 0) continue;
      long long& slot = row[t.row][t.col];
      slot += t.val;
      if (slot == 0) row[t.row].erase(t.col);
    }
    for (int r = 0; r < rows; ++r)
      for (const auto& [c, v] : row[r]) {
        col_rows[c].insert(r);
        ++col_nnz[c];
      }
    for (int c = 0; c < cols; ++c)
      if (col_nnz[c] > 0) cols_by_nnz[col_nnz[c]].insert(c);
  }

  void bump_col(int c, int delta) {
    if (col_nnz[c] > 0) cols_by_nnz[col_nnz[c]].erase(c);
    col_nnz[c] += delta;
    if (col_nnz[c] > 0 && col_alive[c]) cols_by_nnz[col_nnz[c]].insert(c);
  }

  void set_entry(int r, int c, long long val) {
    auto it = row[r].find(c);
    if (val == 0) {
      if (it != row[r].end()) {
        row[r].erase(it);
        col_rows[c].erase(r);
        bump_col(c, -1);
      }
    } else {
      check_internal(std::abs(val) < kOverflowGuard,
                     "sparse elimination overflow");
      if (it == row[r].end()) {
        row[r][c] = val;
        col_rows[c].insert(r);
        bump_col(c, +1);
      } else {
        it->second = val;
      }
    }
  }

  long long get_entry(int r, int c) const {
    auto it = row[r].find(c);
    return it == row[r].end() ? 0 : it->second;
  }

  // Eliminate with +-1 pivots while any remain.  Returns the pivot count.
  // Pivot choice: sparsest live column holding a unit entry, and within it
  // the unit row with fewest nonzeros, to keep fill-in down.
  int unit_eliminate() {
    int pivots = 0;
    while (true) {
      int pr = -1, pc = -1;
      for (size_t nnz = 1; nnz < cols_by_nnz.size() && pr < 0; ++nnz) {
        for (int c : cols_by_nnz[nnz]) {
          size_t best_row_size = 0;
          for (int r : col_rows[c]) {
            long long v = get_entry(r, c);
            if (v != 1 && v != -1) continue;
            if (pr < 0 || row[r].size() < best_row_size) {
              best_row_size = row[r].size();
              pr = r;
              pc = c;
            }
          }
          if (pr >= 0) break;
        }
      }
      if (pr < 0) break;

      long long pv = get_entry(pr, pc);
      // Clear the pivot column with row operations.
      std::vector<int> targets(col_rows[pc].begin(), col_rows[pc].end());
      for (int r2 : targets) {
        if (r2 == pr) continue;
        long long f = get_entry(r2, pc) * pv;  // pv = +-1
        for (const auto& [c2, v2] : row[pr])
          set_entry(r2, c2, get_entry(r2, c2) - f * v2);
      }
      // With the column cleared, eliminating row pr needs only column
      // operations against column pc, which touch no other row.  Dropping
      // row pr and column pc therefore splits off one unit invariant factor.
      std::vector<int> rowcols;
      for (const auto& [c2, v2] : row[pr]) rowcols.push_back(c2);
      for (int c2 : rowcols) set_entry(pr, c2, 0);
      row_alive[pr] = false;
      col_alive[pc] = false;
      if (col_nnz[pc] > 0) cols_by_nnz[col_nnz[pc]].erase(pc);
      ++pivots;
    }
    return pivots;
  }

  Mat remainder_dense(std::vector<int>* live_rows,
                      std::vector<int>* live_cols) const {
    std::vector<int> rs, cs;
    for (int r = 0; r < rows; ++r)
      if (row_alive[r] && !row[r].empty()) rs.push_back(r);
    std::map<int, int> cmap;
    for (int c = 0; c < cols; ++c)
      if (col_alive[c] && col_nnz[c] > 0) {
        cmap[c] = static_cast<int>(cs.size());
        cs.push_back(c);
      }
    Mat d = mat_zero(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
    for (size_t i = 0; i < rs.size(); ++i)
      for (const auto& [c, v] : row[rs[i]]) d[i][cmap.at(c)] = v;
    if (live_rows) *live_rows = rs;
    if (live_cols) *live_cols = cs;
    return d;
  }
};

}  // namespace

std::vector<Int> sparse_invariant_factors(const SparseMat& m) {
  SparseWorker w(m);
  int units = w.unit_eliminate();
  Mat rem = w.remainder_dense(nullptr, nullptr);
  check_internal(static_cast<int>(rem.size()) <= kDenseRemainderCap,
                 "sparse reduction remainder too large");
  std::vector<Int> factors(units, Int(1));
  if (!rem.empty() && !rem[0].empty()) {
    SmithResult s = smith_normal_form(std::move(rem), false);
    for (int i = 0; i < s.rank; ++i) factors.push_back(s.diag[i]);
  }
  return factors;
}

int sparse_rank(const SparseMat& m) {
  return static_cast<int>(sparse_invariant_factors(m).size());
}

}  // namespace graphstat::hom
