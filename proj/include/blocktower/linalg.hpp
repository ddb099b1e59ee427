#pragma once

// Dense exact linear algebra over GF(p^m): row reduction with leftmost pivot
// choice, kernels, linear solves, and Krylov minimal polynomials.  Everything
// is deterministic; there is no pivoting heuristic beyond "leftmost, first
// row".

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "blocktower/ff.hpp"

namespace blocktower {

using FFVec = std::vector<ffel>;

struct FFMatrix {
  FieldPtr field;
  int rows = 0, cols = 0;
  FFVec a;  // row-major

  FFMatrix() = default;
  FFMatrix(FieldPtr F, int r, int c) : field(std::move(F)), rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  ffel& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  ffel at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static FFMatrix identity(FieldPtr F, int n) {
    FFMatrix m(std::move(F), n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool is_zero() const {
    for (ffel x : a)
      if (x) return false;
    return true;
  }

  FFMatrix mul(const FFMatrix& other) const {
    require(cols == other.rows && field->same(*other.field), "matrix shape/field mismatch");
    const FF& F = *field;
    FFMatrix c(field, rows, other.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        ffel x = at(i, k);
        if (!x) continue;
        for (int j = 0; j < other.cols; ++j)
          c.at(i, j) = F.add(c.at(i, j), F.mul(x, other.at(k, j)));
      }
    return c;
  }

  FFVec apply(const FFVec& v) const {
    require(static_cast<int>(v.size()) == cols, "vector length mismatch");
    const FF& F = *field;
    FFVec r(rows, 0);
    for (int i = 0; i < rows; ++i) {
      ffel acc = 0;
      for (int j = 0; j < cols; ++j)
        if (v[j]) acc = F.add(acc, F.mul(at(i, j), v[j]));
      r[i] = acc;
    }
    return r;
  }
};

// Incremental row space in reduced echelon form.  Supports membership tests
// and expressing vectors as combinations of the inserted ones.
class SpanSolver {
 public:
  SpanSolver(FieldPtr F, int dim) : field_(std::move(F)), dim_(dim) {}

  int rank() const { return static_cast<int>(rows_.size()); }
  int dim() const { return dim_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Reduce v against the current rows; returns the residue and the
  // combination of inserted vectors that was subtracted.
  std::pair<FFVec, FFVec> reduce(FFVec v) const {
    const FF& F = *field_;
    FFVec comb(rows_.size(), 0);
    for (size_t r = 0; r < rows_.size(); ++r) {
      ffel c = v[pivots_[r]];
      if (!c) continue;
      comb[r] = c;  // rows are normalized to pivot 1
      for (int j = 0; j < dim_; ++j)
        if (rows_[r][j]) v[j] = F.sub(v[j], F.mul(c, rows_[r][j]));
    }
    return {std::move(v), std::move(comb)};
  }

  bool contains(const FFVec& v) const {
    auto [res, comb] = reduce(v);
    for (ffel x : res)
      if (x) return false;
    return true;
  }

  // Coordinates of v in terms of the vectors passed to insert(), if v lies
  // in their span.
  std::optional<FFVec> express(const FFVec& v) const {
    auto [res, comb] = reduce(v);
    for (ffel x : res)
      if (x) return std::nullopt;
    const FF& F = *field_;
    FFVec coords(insert_count_, 0);
    for (size_t r = 0; r < comb.size(); ++r) {
      if (!comb[r]) continue;
      for (size_t k = 0; k < history_[r].size(); ++k)
        coords[k] = F.add(coords[k], F.mul(comb[r], history_[r][k]));
    }
    return coords;
  }

  // Insert v; returns true if it enlarged the span.
  bool insert(const FFVec& v) {
    require(static_cast<int>(v.size()) == dim_, "vector length mismatch");
    const FF& F = *field_;
    auto [res, comb] = reduce(v);
    int piv = -1;
    for (int j = 0; j < dim_; ++j)
      if (res[j]) { piv = j; break; }

    // Every existing history row gains a column for the new vector.
    for (auto& h : history_) h.push_back(0);
    ++insert_count_;
    if (piv < 0) return false;

    ffel c = F.inv(res[piv]);
    for (auto& x : res) x = F.mul(x, c);
    // New row is c*v minus the reductions, expressed over inserted vectors.
    FFVec hrow(insert_count_, 0);
    hrow[insert_count_ - 1] = c;
    for (size_t r = 0; r < comb.size(); ++r) {
      if (!comb[r]) continue;
      for (size_t k = 0; k < history_[r].size(); ++k)
        hrow[k] = F.sub(hrow[k], F.mul(F.mul(c, comb[r]), history_[r][k]));
    }

    // Back-substitute to keep reduced form.
    for (size_t r = 0; r < rows_.size(); ++r) {
      ffel x = rows_[r][piv];
      if (!x) continue;
      for (int j = 0; j < dim_; ++j)
        if (res[j]) rows_[r][j] = F.sub(rows_[r][j], F.mul(x, res[j]));
      for (size_t k = 0; k < hrow.size(); ++k)
        history_[r][k] = F.sub(history_[r][k], F.mul(x, hrow[k]));
    }

    // Keep rows sorted by pivot column.
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(res));
    pivots_.insert(pivots_.begin() + pos, piv);
    history_.insert(history_.begin() + pos, std::move(hrow));
    return true;
  }

  // Echelon basis of the current span.
  const std::vector<FFVec>& basis_rows() const { return rows_; }

 private:
  FieldPtr field_;
  int dim_;
  int insert_count_ = 0;
  std::vector<FFVec> rows_;
  std::vector<int> pivots_;
  std::vector<FFVec> history_;  // row i = rows_[i] as combination of inserted vectors
};

inline int rank_of(const FFMatrix& M) {
  SpanSolver s(M.field, M.cols);
  for (int i = 0; i < M.rows; ++i)
    s.insert(FFVec(M.a.begin() + static_cast<size_t>(i) * M.cols,
                   M.a.begin() + static_cast<size_t>(i + 1) * M.cols));
  return s.rank();
}

// Basis of the right null space { v : Mv = 0 }, derived from the reduced
// echelon form with leftmost pivots.  Deterministic: one basis vector per
// free column, in column order.
inline std::vector<FFVec> kernel_basis(const FFMatrix& M) {
  const FF& F = *M.field;
  // Reduce rows.
  SpanSolver s(M.field, M.cols);
  for (int i = 0; i < M.rows; ++i)
    s.insert(FFVec(M.a.begin() + static_cast<size_t>(i) * M.cols,
                   M.a.begin() + static_cast<size_t>(i + 1) * M.cols));
  const auto& rows = s.basis_rows();
  const auto& piv = s.pivots();
  std::vector<bool> is_pivot(M.cols, false);
  for (int p : piv) is_pivot[p] = true;

  std::vector<FFVec> basis;
  for (int j = 0; j < M.cols; ++j) {
    if (is_pivot[j]) continue;
    FFVec v(M.cols, 0);
    v[j] = 1;
    for (size_t r = 0; r < rows.size(); ++r) v[piv[r]] = F.neg(rows[r][j]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of Mx = b if consistent.
inline std::optional<FFVec> solve_linear(const FFMatrix& M, const FFVec& b) {
  require(static_cast<int>(b.size()) == M.rows, "rhs length mismatch");
  // Work with columns as the spanning set: find coords of b in the column span.
  SpanSolver s(M.field, M.rows);
  for (int j = 0; j < M.cols; ++j) {
    FFVec col(M.rows);
    for (int i = 0; i < M.rows; ++i) col[i] = M.at(i, j);
    s.insert(col);
  }
  auto coords = s.express(b);
  if (!coords) return std::nullopt;
  return coords;
}

// Monic minimal polynomial of the operator "multiply by v" on the unital
// span it generates: iterate x_{k+1} = step(x_k) from the algebra identity
// and detect the first linear dependence.
inline FFPoly min_poly(FieldPtr field, const FFVec& identity,
                       const std::function<FFVec(const FFVec&)>& step) {
  require(identity.size() <= 4096, "ambient dimension exceeds cap");
  const int n = static_cast<int>(identity.size());
  SpanSolver s(field, n);
  FFVec cur = identity;
  for (int k = 0; k <= n; ++k) {
    if (!s.insert(cur)) {
      auto coords = s.express(cur);
      check(coords.has_value(), "dependent vector must be expressible");
      FFPoly f(k + 1, 0);
      const FF& F = *field;
      for (int i = 0; i < k; ++i) f[i] = F.neg((*coords)[i]);
      f[k] = 1;
      return f;
    }
    cur = step(cur);
  }
  throw check_error("minimal polynomial not found within dimension bound");
}

}  // namespace blocktower
