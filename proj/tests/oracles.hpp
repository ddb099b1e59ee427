#pragma once

// Test-only oracles: independent brute-force reference computations used to
// freeze expected values.  Nothing here shares code with the algorithms under
// test beyond the raw data types.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "blocktower/algebra.hpp"
#include "blocktower/group.hpp"

namespace oracle {

using namespace blocktower;

// Brute-force closure of permutations under composition; returns the order.
inline int permutation_closure_order(std::vector<std::vector<int>> gens) {
  std::set<std::vector<int>> seen(gens.begin(), gens.end());
  std::vector<std::vector<int>> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    auto a = todo.back();
    todo.pop_back();
    for (const auto& b : gens) {
      std::vector<int> ab(a.size());
      for (size_t i = 0; i < a.size(); ++i) ab[i] = a[b[i]];
      if (seen.insert(ab).second) todo.push_back(ab);
    }
  }
  // seen may be missing the identity if it is not a generator
  std::vector<int> id(gens[0].size());
  for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  seen.insert(id);
  return static_cast<int>(seen.size());
}

// Exhaustive isomorphism search between two small Cayley tables.
// Backtracking over images, feasible for orders <= 8.
inline bool tables_isomorphic(const GroupPtr& A, const GroupPtr& B) {
  if (A->order() != B->order()) return false;
  const int n = A->order();
  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  img[0] = 0;
  used[0] = true;

  std::function<bool(int)> place = [&](int x) -> bool {
    if (x == n) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (img[A->mul(a, b)] != B->mul(img[a], img[b])) return false;
      return true;
    }
    for (int y = 0; y < n; ++y) {
      if (used[y]) continue;
      if (A->element_order(x) != B->element_order(y)) continue;
      img[x] = y;
      used[y] = true;
      bool consistent = true;
      for (int a = 0; a <= x && consistent; ++a)
        for (int b = 0; b <= x && consistent; ++b)
          if (img[a] >= 0 && img[b] >= 0 && img[A->mul(a, b)] >= 0)
            consistent = img[A->mul(a, b)] == B->mul(img[a], img[b]);
      if (consistent && place(x + 1)) return true;
      used[y] = false;
      img[x] = -1;
    }
    return false;
  };
  return place(1);
}

// All subgroups of G generated by at most two elements (covers every
// subgroup of the corpus 2-subgroup lattices), filtered to p-power order and
// deduplicated up to conjugacy by exhaustive scan.  Returns the sorted list
// of class orders.
inline std::vector<int> p_subgroup_class_orders(const GroupPtr& G, int p) {
  std::set<std::vector<Elem>> subs;
  subs.insert({0});
  for (Elem a = 0; a < G->order(); ++a)
    for (Elem b = a; b < G->order(); ++b) {
      Subgroup H = subgroup_generated(G, {a, b});
      int n = H.order();
      while (n % p == 0) n /= p;
      if (n == 1) subs.insert(H.elems);
    }
  std::vector<Subgroup> classes;
  for (const auto& elems : subs) {
    Subgroup H{G, elems};
    bool dup = false;
    for (const auto& R : classes)
      if (are_conjugate(R, H)) { dup = true; break; }
    if (!dup) classes.push_back(H);
  }
  std::vector<int> orders;
  for (const auto& c : classes) orders.push_back(c.order());
  std::sort(orders.begin(), orders.end());
  return orders;
}

// Structure constants of class sums by combinatorial counting: coefficient
// of g in (sum of K1)(sum of K2) is #{(x, y) in K1 x K2 : xy = g} mod p.
inline FFVec class_sum_product_by_counting(const GroupPtr& G, const FieldPtr& F,
                                           const std::vector<Elem>& K1,
                                           const std::vector<Elem>& K2) {
  std::vector<long> cnt(G->order(), 0);
  for (Elem x : K1)
    for (Elem y : K2) ++cnt[G->mul(x, y)];
  FFVec out(G->order(), 0);
  for (Elem g = 0; g < G->order(); ++g) out[g] = F->from_int(cnt[g]);
  return out;
}

// Exhaustive enumeration of the primitive idempotents of a commutative
// subalgebra: walk all q^dim coefficient vectors, keep the idempotents,
// and select the minimal nonzero ones under e <= f iff ef = e.
// Multiplication uses structure constants computed independently here.
inline std::vector<FFVec> primitive_idempotents_exhaustive(const SubalgebraBasis& S,
                                                           long budget = 1 << 20) {
  const FF& F = *S.field;
  const int d = S.dim();
  const int n = S.group->order();
  long total = 1;
  for (int i = 0; i < d; ++i) {
    total *= F.q();
    require(total <= budget, "exhaustive idempotent search out of budget");
  }

  // structure constants in basis coordinates
  SpanSolver span(S.field, n);
  for (const auto& b : S.basis) span.insert(b.coeffs);
  std::vector<FFVec> sc(static_cast<size_t>(d) * d);  // sc[i*d+j] = coords of b_i b_j
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      auto prod = multiply(S.basis[i], S.basis[j]);
      auto coords = span.express(prod.coeffs);
      require(coords.has_value(), "subalgebra not closed under multiplication");
      sc[static_cast<size_t>(i) * d + j] = *coords;
    }
  auto mul_coords = [&](const FFVec& x, const FFVec& y) {
    FFVec r(d, 0);
    for (int i = 0; i < d; ++i) {
      if (!x[i]) continue;
      for (int j = 0; j < d; ++j) {
        if (!y[j]) continue;
        ffel c = F.mul(x[i], y[j]);
        const FFVec& row = sc[static_cast<size_t>(i) * d + j];
        for (int k = 0; k < d; ++k)
          if (row[k]) r[k] = F.add(r[k], F.mul(c, row[k]));
      }
    }
    return r;
  };

  std::vector<FFVec> idems;  // in basis coordinates, nonzero
  FFVec v(d, 0);
  for (long code = 1; code < total; ++code) {
    long c = code;
    for (int i = 0; i < d; ++i) { v[i] = static_cast<ffel>(c % F.q()); c /= F.q(); }
    if (mul_coords(v, v) == v) idems.push_back(v);
  }

  std::vector<FFVec> prim;
  for (const auto& e : idems) {
    bool minimal = true;
    for (const auto& f : idems)
      if (f != e && mul_coords(e, f) == f) { minimal = false; break; }
    if (minimal) prim.push_back(e);
  }

  // back to kG coefficient vectors
  std::vector<FFVec> out;
  for (const auto& e : prim) {
    AlgebraElement x = zero_element(S.group, S.field);
    for (int i = 0; i < d; ++i)
      if (e[i]) x = add(x, scale(e[i], S.basis[i]));
    out.push_back(x.coeffs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
