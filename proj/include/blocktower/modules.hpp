#pragma once

// Finite dimensional kG-modules as explicit matrix representations: block
// membership, relative projectivity via the Higman criterion, vertices,
// deterministic chopping into simple constituents, and the block-as-bimodule
// statements over G x G.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "blocktower/blocks.hpp"

namespace blocktower {

struct Rep {
  GroupPtr group;
  FieldPtr field;
  int dim = 0;
  std::vector<FFMatrix> mats;  // full table, one matrix per group element

  const FFMatrix& mat(Elem g) const { return mats[g]; }

  // Exhaustive homomorphism check, used by tests.
  bool is_homomorphism() const {
    const auto& G = *group;
    for (Elem g = 0; g < G.order(); ++g)
      for (Elem h = 0; h < G.order(); ++h)
        if (!(mat(g).mul(mat(h)).a == mat(G.mul(g, h)).a)) return false;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (mat(0).at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }
};

inline Rep trivial_rep(const GroupPtr& G, const FieldPtr& F) {
  Rep r{G, F, 1, {}};
  for (Elem g = 0; g < G->order(); ++g) r.mats.push_back(FFMatrix::identity(F, 1));
  return r;
}

// Permutation module on the left cosets G/H, cosets ordered by smallest
// member.
inline Rep permutation_rep(const GroupPtr& G, const FieldPtr& F, const Subgroup& H) {
  const int n = G->order();
  std::vector<Elem> rep(n);
  for (Elem x = 0; x < n; ++x) {
    Elem r = x;
    for (Elem h : H.elems) r = std::min(r, G->mul(x, h));
    rep[x] = r;
  }
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x)
    if (rep[x] == x) reps.push_back(x);
  std::vector<int> idx(n, -1);
  for (size_t i = 0; i < reps.size(); ++i) idx[reps[i]] = static_cast<int>(i);

  Rep r{G, F, static_cast<int>(reps.size()), {}};
  for (Elem g = 0; g < n; ++g) {
    FFMatrix M(F, r.dim, r.dim);
    for (int c = 0; c < r.dim; ++c) M.at(idx[rep[G->mul(g, reps[c])]], c) = 1;
    r.mats.push_back(std::move(M));
  }
  return r;
}

inline Rep regular_rep(const GroupPtr& G, const FieldPtr& F) {
  return permutation_rep(G, F, trivial_subgroup(G));
}

// The action of an algebra element: sum of x_g M(g).
inline FFMatrix algebra_action(const Rep& U, const AlgebraElement& x) {
  const FF& F = *U.field;
  FFMatrix A(U.field, U.dim, U.dim);
  for (Elem g = 0; g < U.group->order(); ++g) {
    if (!x.coeffs[g]) continue;
    const FFMatrix& M = U.mat(g);
    for (size_t i = 0; i < A.a.size(); ++i) A.a[i] = F.add(A.a[i], F.mul(x.coeffs[g], M.a[i]));
  }
  return A;
}

// Restrict U to an invariant subspace given by independent spanning vectors
// (as columns).  Solves the change of basis exactly.
inline Rep subrepresentation(const Rep& U, const std::vector<FFVec>& basis) {
  const int r = static_cast<int>(basis.size());
  SpanSolver span(U.field, U.dim);
  for (const auto& v : basis) check(span.insert(v), "subspace basis must be independent");
  Rep sub{U.group, U.field, r, {}};
  for (Elem g = 0; g < U.group->order(); ++g) {
    FFMatrix M(U.field, r, r);
    for (int c = 0; c < r; ++c) {
      FFVec img = U.mat(g).apply(basis[c]);
      auto coords = span.express(img);
      check(coords.has_value(), "subspace is not invariant");
      for (int i = 0; i < r; ++i) M.at(i, c) = (*coords)[i];
    }
    sub.mats.push_back(std::move(M));
  }
  return sub;
}

// Quotient of U by the invariant subspace spanned by `basis` (echelon rows
// with the stated pivots assumed reduced; any independent spanning set
// works).  Coordinates on the non-pivot standard vectors.
inline Rep quotient_rep(const Rep& U, const std::vector<FFVec>& basis) {
  SpanSolver span(U.field, U.dim);
  for (const auto& v : basis) span.insert(v);
  std::vector<bool> is_pivot(U.dim, false);
  for (int p : span.pivots()) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < U.dim; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  const int r = static_cast<int>(free_cols.size());
  Rep quot{U.group, U.field, r, {}};
  for (Elem g = 0; g < U.group->order(); ++g) {
    FFMatrix M(U.field, r, r);
    for (int c = 0; c < r; ++c) {
      FFVec ev(U.dim, 0);
      ev[free_cols[c]] = 1;
      FFVec img = span.reduce(U.mat(g).apply(ev)).first;
      for (int i = 0; i < r; ++i) M.at(i, c) = img[free_cols[i]];
    }
    quot.mats.push_back(std::move(M));
  }
  return quot;
}

// The unique decomposition of U along the blocks: for each block, the image
// of the action of its idempotent, returned when nonzero.
inline std::vector<std::pair<size_t, Rep>> module_block_split(const Rep& U,
                                                              const std::vector<Block>& blocks) {
  std::vector<std::pair<size_t, Rep>> out;
  int total = 0;
  for (size_t i = 0; i < blocks.size(); ++i) {
    FFMatrix A = algebra_action(U, blocks[i].idempotent);
    SpanSolver span(U.field, U.dim);
    std::vector<FFVec> basis;
    for (int c = 0; c < U.dim; ++c) {
      FFVec col(U.dim);
      for (int j = 0; j < U.dim; ++j) col[j] = A.at(j, c);
      if (span.insert(col)) basis.push_back(col);
    }
    if (basis.empty()) continue;
    total += static_cast<int>(basis.size());
    out.emplace_back(i, subrepresentation(U, basis));
  }
  check(total == U.dim, "block components must fill the module");
  return out;
}

struct HigmanResult {
  bool projective = false;
  std::optional<FFMatrix> witness;  // alpha with Tr_H^G(alpha) = id
};

// Relative H-projectivity by the Higman criterion: id_U = Tr_H^G(alpha)
// for some H-equivariant alpha, decided exactly as a linear system in the
// entries of alpha.
inline HigmanResult higman_projectivity(const Rep& U, const Subgroup& H) {
  const FF& F = *U.field;
  const auto& G = *U.group;
  const int d = U.dim;
  const int n_unknowns = d * d;  // alpha(k,l) at index k*d + l

  std::vector<Elem> gens = subgroup_generators(H);
  std::vector<Elem> reps = left_coset_reps(full_subgroup(U.group), H);

  const int rows = (static_cast<int>(gens.size()) + 1) * d * d;
  FFMatrix sys(U.field, rows, n_unknowns);
  FFVec rhs(rows, 0);
  int row = 0;

  // alpha commutes with the H-action: alpha M(h) - M(h) alpha = 0
  for (Elem h : gens) {
    const FFMatrix& M = U.mat(h);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
          // + alpha(i,k) M(k,j)
          sys.at(row, i * d + k) = F.add(sys.at(row, i * d + k), M.at(k, j));
          // - M(i,k) alpha(k,j)
          sys.at(row, k * d + j) = F.sub(sys.at(row, k * d + j), M.at(i, k));
        }
        ++row;
      }
  }

  // sum over coset representatives of M(s) alpha M(s^-1) = id
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      for (Elem s : reps) {
        const FFMatrix& Ms = U.mat(s);
        const FFMatrix& Msi = U.mat(G.inv(s));
        for (int k = 0; k < d; ++k) {
          if (!Ms.at(i, k)) continue;
          for (int l = 0; l < d; ++l)
            sys.at(row, k * d + l) =
                F.add(sys.at(row, k * d + l), F.mul(Ms.at(i, k), Msi.at(l, j)));
        }
      }
      rhs[row] = (i == j) ? 1 : 0;
      ++row;
    }

  HigmanResult res;
  auto sol = solve_linear(sys, rhs);
  if (!sol) return res;
  res.projective = true;
  FFMatrix alpha(U.field, d, d);
  alpha.a.assign(sol->begin(), sol->end());
  res.witness = std::move(alpha);
  return res;
}

// Vertex of an (asserted) indecomposable module: the minimal-order class
// among the p-subgroup classes relative to which U is projective.  Errors if
// the minimal class is not unique, which would contradict the conjugacy of
// vertices for an indecomposable module.
inline Subgroup vertex(const Rep& U, const std::vector<Subgroup>& p_classes,
                       bool caller_asserts_indecomposable) {
  require(caller_asserts_indecomposable,
          "vertex computation requires the caller to assert indecomposability");
  std::vector<const Subgroup*> projective_at;
  for (const auto& Q : p_classes)
    if (higman_projectivity(U, Q).projective) projective_at.push_back(&Q);
  check(!projective_at.empty(), "U is projective relative to a Sylow subgroup");
  int m = projective_at.front()->order();
  for (auto* Q : projective_at) m = std::min(m, Q->order());
  std::vector<const Subgroup*> minimal;
  for (auto* Q : projective_at)
    if (Q->order() == m) minimal.push_back(Q);
  if (minimal.size() != 1)
    throw check_error("two non-conjugate minimal classes admit a Higman witness: "
                      "either the module was decomposable or this is a bug");
  // the relative-projectivity locus must be upward closed from the vertex
  for (auto* Q : projective_at)
    check(conjugate_into(*minimal[0], *Q), "projectivity locus is not generated by the vertex");
  return *minimal[0];
}

// ---------------------------------------------------------------------------
// chopping into simple constituents

namespace detail {

// Spin v under the generator matrices; returns an independent spanning set.
inline std::vector<FFVec> spin(const Rep& U, const FFVec& v) {
  SpanSolver span(U.field, U.dim);
  std::vector<FFVec> basis;
  std::vector<FFVec> work{v};
  span.insert(v);
  basis.push_back(v);
  const auto& gens = U.group->generators();
  for (size_t i = 0; i < work.size(); ++i)
    for (Elem g : gens) {
      FFVec img = U.mat(g).apply(work[i]);
      if (span.insert(img)) {
        basis.push_back(img);
        work.push_back(std::move(img));
      }
    }
  return basis;
}

inline void chop_recursive(const Rep& U, std::vector<Rep>& out, long budget) {
  if (U.dim == 0) return;
  const long q = U.field->q();
  FFVec v(U.dim, 0);
  long enumerated = 0;
  // lexicographic enumeration of nonzero coefficient vectors, low index as
  // the least significant digit
  bool more = true;
  while (more) {
    // increment
    int pos = 0;
    while (pos < U.dim) {
      if (v[pos] + 1 < q) { ++v[pos]; break; }
      v[pos] = 0;
      ++pos;
    }
    if (pos == U.dim) { more = false; break; }
    if (++enumerated > budget)
      throw cap_error("exhaustive spinning budget exceeded while certifying simplicity");
    auto basis = spin(U, v);
    if (static_cast<int>(basis.size()) == U.dim) continue;  // spins to everything
    // proper nonzero submodule: recurse on both sides
    chop_recursive(subrepresentation(U, basis), out, budget);
    chop_recursive(quotient_rep(U, basis), out, budget);
    return;
  }
  out.push_back(U);  // no proper spin: simple, certified exhaustively
}

// Basis of the space of intertwiners X with X M_U(g) = M_V(g) X for all g.
inline std::vector<FFVec> hom_space(const Rep& U, const Rep& V) {
  require(U.group.get() == V.group.get() && U.field->same(*V.field), "ambient mismatch");
  const FF& F = *U.field;
  const auto& gens = U.group->generators();
  const int du = U.dim, dv = V.dim;
  FFMatrix sys(U.field, static_cast<int>(gens.size()) * du * dv, du * dv);
  int row = 0;
  for (Elem g : gens) {
    const FFMatrix& MU = U.mat(g);
    const FFMatrix& MV = V.mat(g);
    // X index (i, j): row i of V-side, column j of U-side: X is dv x du
    for (int i = 0; i < dv; ++i)
      for (int j = 0; j < du; ++j) {
        for (int k = 0; k < du; ++k)
          sys.at(row, i * du + k) = F.add(sys.at(row, i * du + k), MU.at(k, j));
        for (int k = 0; k < dv; ++k)
          sys.at(row, k * du + j) = F.sub(sys.at(row, k * du + j), MV.at(i, k));
        ++row;
      }
  }
  return kernel_basis(sys);
}

inline bool reps_isomorphic(const Rep& U, const Rep& V, long budget = 1 << 16) {
  if (U.dim != V.dim) return false;
  auto homs = hom_space(U, V);
  if (homs.empty()) return false;
  // search the hom space for an invertible element; for simples the first
  // nonzero hom already is one, but stay general within a budget
  const FF& F = *U.field;
  const int k = static_cast<int>(homs.size());
  long total = 1;
  for (int i = 0; i < k; ++i) {
    total *= F.q();
    if (total > budget) { total = budget + 1; break; }
  }
  require(total <= budget, "intertwiner search budget exceeded");
  FFVec coords(k, 0);
  for (long code = 1; code < total; ++code) {
    long c = code;
    for (int i = 0; i < k; ++i) { coords[i] = static_cast<ffel>(c % F.q()); c /= F.q(); }
    FFMatrix X(U.field, V.dim, U.dim);
    for (int i = 0; i < k; ++i) {
      if (!coords[i]) continue;
      for (size_t t = 0; t < X.a.size(); ++t)
        X.a[t] = F.add(X.a[t], F.mul(coords[i], homs[i][t]));
    }
    if (rank_of(X) == U.dim) return true;
  }
  return false;
}

}  // namespace detail

// The simple constituents of the regular representation, deduplicated up to
// isomorphism and sorted by dimension then by generator matrices.
// Deterministic exhaustive submodule search; the per-stage enumeration
// budget caps the exhaustive simplicity certification.
inline std::vector<Rep> chop_simples(const GroupPtr& G, const FieldPtr& F,
                                     long spin_budget = 1 << 20) {
  std::vector<Rep> factors;
  detail::chop_recursive(regular_rep(G, F), factors, spin_budget);
  std::vector<Rep> simples;
  for (auto& U : factors) {
    bool dup = false;
    for (const auto& S : simples)
      if (detail::reps_isomorphic(U, S)) { dup = true; break; }
    if (!dup) simples.push_back(std::move(U));
  }
  std::sort(simples.begin(), simples.end(), [&](const Rep& a, const Rep& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    for (Elem g : G->generators()) {
      if (a.mat(g).a != b.mat(g).a) return a.mat(g).a < b.mat(g).a;
    }
    return false;
  });
  return simples;
}

// Whether the simple module S lies in the given block: the central
// idempotent acts as the identity (else as zero).
inline bool simple_lies_in_block(const Rep& S, const Block& b) {
  return !algebra_action(S, b.idempotent).is_zero();
}

struct SimpleVertexReport {
  bool found = false;
  int simple_index = -1;
  int simple_dim = 0;
  std::optional<Subgroup> vertex;
};

// A simple module in the block whose vertex is the block's defect group.
inline SimpleVertexReport simple_with_vertex_equal_defect(const GroupPtr& G, const FieldPtr& F,
                                                          const Block& block,
                                                          const std::vector<Rep>& simples,
                                                          const std::vector<Subgroup>& p_classes) {
  require(G->order() <= 48, "capped at |G| <= 48");
  require(block.defect_group.has_value(), "defect group must be computed");
  SimpleVertexReport rep;
  for (size_t i = 0; i < simples.size(); ++i) {
    if (!simple_lies_in_block(simples[i], block)) continue;
    Subgroup vtx = vertex(simples[i], p_classes, true);
    if (are_conjugate(vtx, *block.defect_group)) {
      rep.found = true;
      rep.simple_index = static_cast<int>(i);
      rep.simple_dim = simples[i].dim;
      rep.vertex = vtx;
      return rep;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// kG as a module over G x G

// kG with (g1, g2) . x = g1 x g2^-1, a permutation representation of G x G.
inline Rep bimodule_rep(const GroupPtr& GG, const GroupPtr& G, const FieldPtr& F) {
  const int n = G->order();
  require(GG->order() == n * n, "square group mismatch");
  Rep r{GG, F, n, {}};
  for (Elem e = 0; e < GG->order(); ++e) {
    Elem g1 = e / n, g2 = e % n;
    FFMatrix M(F, n, n);
    for (Elem x = 0; x < n; ++x) M.at(G->mul(G->mul(g1, x), G->inv(g2)), x) = 1;
    r.mats.push_back(std::move(M));
  }
  return r;
}

// kG is isomorphic to the module induced from the trivial module of the
// diagonal: both realized explicitly and compared by an intertwiner search.
inline bool bimodule_induced_check(const GroupPtr& G, const FieldPtr& F, const Caps& caps = {}) {
  require(static_cast<long>(G->order()) * G->order() <= 256, "capped at |G|^2 <= 256");
  auto [GG, delta] = direct_square(G, caps);
  Rep bimod = bimodule_rep(GG, G, F);

  std::vector<Elem> diag;
  for (Elem g = 0; g < G->order(); ++g) diag.push_back(delta(g));
  std::sort(diag.begin(), diag.end());
  Rep induced = permutation_rep(GG, F, Subgroup{GG, diag});

  return detail::reps_isomorphic(bimod, induced);
}

struct BimoduleVertexReport {
  Subgroup vertex_of_block;   // subgroup of G x G
  bool matches_diagonal_defect = false;
};

// The vertex of the block algebra e kG as a k[G x G]-module, compared with
// the diagonal image of the block's defect group.
inline BimoduleVertexReport bimodule_vertex(const GroupPtr& G, const FieldPtr& F,
                                            const Block& block, const Caps& caps = {}) {
  require(G->order() <= 12, "bimodule vertex search capped at |G| <= 12");
  require(block.defect_group.has_value(), "defect group must be computed");
  auto [GG, delta] = direct_square(G, caps);
  Rep bimod = bimodule_rep(GG, G, F);

  // basis of e kG: independent columns of left multiplication by e
  SpanSolver span(F, G->order());
  std::vector<FFVec> basis;
  const AlgebraElement& e = block.idempotent;
  for (Elem g = 0; g < G->order(); ++g) {
    // column: e * g as a vector in kG
    FFVec col(G->order(), 0);
    for (Elem h = 0; h < G->order(); ++h)
      if (e.coeffs[h]) col[G->mul(h, g)] = F->add(col[G->mul(h, g)], e.coeffs[h]);
    if (span.insert(col)) basis.push_back(col);
  }
  check(static_cast<int>(basis.size()) == block.algebra_dim, "block basis dimension mismatch");
  Rep blockmod = subrepresentation(bimod, basis);

  auto classes = p_subgroups_up_to_conjugacy(GG, F->p(), caps);
  BimoduleVertexReport rep{vertex(blockmod, classes, true), false};

  std::vector<Elem> dd;
  for (Elem x : block.defect_group->elems) dd.push_back(delta(x));
  std::sort(dd.begin(), dd.end());
  rep.matches_diagonal_defect = are_conjugate(rep.vertex_of_block, Subgroup{GG, dd});
  return rep;
}

}  // namespace blocktower
