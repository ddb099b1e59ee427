#pragma once

// Blocks of kG and their local structure: the block decomposition, relative
// trace maps and the modified trace, Mackey decomposition checks, the Brauer
// homomorphism with its kernel description, defect groups under all their
// equivalent characterizations, and the Brauer correspondence up to the
// first main theorem.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "blocktower/algebra.hpp"

namespace blocktower {

struct Block {
  AlgebraElement idempotent;
  int algebra_dim = 0;       // dim of the two-sided ideal e*kG
  bool principal = false;    // augmentation(e) = 1
  std::optional<Subgroup> defect_group;
};

inline int block_algebra_dim(const AlgebraElement& e) {
  const auto& G = *e.group;
  const int n = G.order();
  FFMatrix M(e.field, n, n);
  for (Elem g = 0; g < n; ++g) {
    Elem gi = G.inv(g);
    for (Elem h = 0; h < n; ++h) M.at(h, g) = e.coeffs[G.mul(h, gi)];
  }
  return rank_of(M);
}

// Complete block decomposition of kG: principal block first, then ascending
// algebra dimension, then canonical idempotent coefficients.
inline std::vector<Block> block_decomposition(const GroupPtr& G, const FieldPtr& F) {
  SubalgebraBasis Z = fixed_point_basis(G, F, full_subgroup(G));
  std::vector<AlgebraElement> idems = primitive_idempotents_commutative(Z);

  std::vector<Block> blocks;
  int total_dim = 0;
  int principal_count = 0;
  for (const auto& e : idems) {
    Block b;
    b.idempotent = e;
    check(is_central(e), "block idempotent is not central");
    check(is_primitive_idempotent_in(Z, e), "block idempotent is not primitive in the center");
    b.algebra_dim = block_algebra_dim(e);
    ffel aug = e.augmentation();
    check(aug == 0 || aug == 1, "augmentation of an idempotent must be 0 or 1");
    b.principal = aug == 1;
    principal_count += b.principal;
    total_dim += b.algebra_dim;
    blocks.push_back(std::move(b));
  }
  check(principal_count == 1, "exactly one block must act as identity on the trivial module");
  check(total_dim == G->order(), "block dimensions must sum to |G|");

  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
    if (a.principal != b.principal) return a.principal;
    if (a.algebra_dim != b.algebra_dim) return a.algebra_dim < b.algebra_dim;
    return a.idempotent.coeffs < b.idempotent.coeffs;
  });
  return blocks;
}

// ---------------------------------------------------------------------------
// trace maps

// Tr_H^L(x) = sum over coset representatives s of L/H of s x s^{-1}, for
// H <= L subgroups of the ambient group and x fixed under H-conjugation.
// Representatives are smallest-index-first; the value does not depend on the
// choice.
inline AlgebraElement trace_map(const Subgroup& H, const Subgroup& L, const AlgebraElement& x) {
  require(H.parent.get() == x.group.get() && L.parent.get() == x.group.get(),
          "subgroups must live in the element's group");
  require(H.is_subset_of(L), "trace needs H <= L");
  require(is_fixed_by(x, H), "element is not fixed by H-conjugation");
  AlgebraElement acc = zero_element(x.group, x.field);
  for (Elem s : left_coset_reps(L, H)) acc = add(acc, conjugate(s, x));
  return acc;
}

// (1/|L:H|_{p'}) Tr_H^L; the p'-part of the index is invertible in
// characteristic p.
inline AlgebraElement modified_trace(const Subgroup& H, const Subgroup& L,
                                     const AlgebraElement& x) {
  AlgebraElement t = trace_map(H, L, x);
  int index = L.order() / H.order();
  ffel c = x.field->inv(x.field->from_int(pprime_part(index, x.field->p())));
  return scale(c, t);
}

struct MackeyResult {
  bool ok = false;
  AlgebraElement lhs, rhs;
};

// Tr_L^G(a) = sum over double cosets H\G/L of Tr_{H cap gLg^-1}^H(g a g^-1).
inline MackeyResult mackey_verify(const GroupPtr& G, const Subgroup& H, const Subgroup& L,
                                  const AlgebraElement& a) {
  Subgroup full = full_subgroup(G);
  MackeyResult r;
  r.lhs = trace_map(L, full, a);
  r.rhs = zero_element(G, a.field);
  for (Elem g : double_cosets(G, H, L)) {
    Subgroup gL = conjugate_subgroup(L, g);
    Subgroup HgL = intersect(H, gL);
    r.rhs = add(r.rhs, trace_map(HgL, H, conjugate(g, a)));
  }
  r.ok = r.lhs == r.rhs;
  return r;
}

// ---------------------------------------------------------------------------
// Brauer homomorphism

// Br_D: kG^D -> k C_G(D), truncation of the support to the centralizer.  An
// algebra homomorphism on D-fixed elements.
inline AlgebraElement brauer_hom(const Subgroup& D, const AlgebraElement& x) {
  require(is_p_group(D, x.field->p()), "Brauer homomorphism needs a p-subgroup");
  require(is_fixed_by(x, D), "element is not fixed by D-conjugation");
  Subgroup C = centralizer(x.group, D);
  AlgebraElement r = zero_element(x.group, x.field);
  for (Elem c : C.elems) r.coeffs[c] = x.coeffs[c];
  return r;
}

struct BrauerKernelReport {
  bool ok = false;
  int trace_span_dim = 0;  // dim of sum of Tr_Q^D(kG^Q) over proper Q < D
  int kernel_dim = 0;      // dim of D-fixed elements supported off C_G(D)
  bool contained = false;  // trace span inside the kernel
};

// ker Br_D = sum over proper subgroups Q of D of Tr_Q^D(kG^Q), verified as an
// equality of subspaces of kG^D.
inline BrauerKernelReport brauer_kernel_check(const GroupPtr& G, const FieldPtr& F,
                                              const Subgroup& D, const Caps& caps = {}) {
  require(D.order() <= 64, "kernel check capped at |D| <= 64");
  const int p = F->p();
  require(is_p_group(D, p), "D must be a p-group");

  // D-fixed elements supported off the centralizer: exactly the sums over
  // non-singleton D-conjugation orbits.
  SubalgebraBasis fixD = fixed_point_basis(G, F, D);
  SpanSolver kernel(F, G->order());
  for (const auto& b : fixD.basis)
    if (b.support_size() >= 2) kernel.insert(b.coeffs);

  SpanSolver tspan(F, G->order());
  bool contained = true;
  for (const auto& Q : all_subgroups_of_p_group(G, D, p, caps)) {
    if (Q.order() == D.order()) continue;
    for (const auto& b : fixed_point_basis(G, F, Q).basis) {
      AlgebraElement t = trace_map(Q, D, b);
      if (!kernel.contains(t.coeffs)) contained = false;
      tspan.insert(t.coeffs);
    }
  }

  BrauerKernelReport r;
  r.trace_span_dim = tspan.rank();
  r.kernel_dim = kernel.rank();
  r.contained = contained;
  r.ok = contained && r.trace_span_dim == r.kernel_dim;
  return r;
}

// ---------------------------------------------------------------------------
// defect groups

// Membership of e in the image of Tr_D^G (or of the modified trace) on kG^D,
// decided exactly as a linear system in the orbit-sum basis.
inline bool in_trace_image(const GroupPtr& G, const Subgroup& D, const AlgebraElement& e,
                           bool modified = false) {
  Subgroup full = full_subgroup(G);
  SubalgebraBasis fixD = fixed_point_basis(G, e.field, D);
  SpanSolver span(e.field, G->order());
  for (const auto& b : fixD.basis) {
    AlgebraElement t = modified ? modified_trace(D, full, b) : trace_map(D, full, b);
    span.insert(t.coeffs);
  }
  return span.contains(e.coeffs);
}

// The defect group of a block: among the p-subgroup classes, the unique
// maximal-order class D with Br_D(e) != 0.  Two distinct classes at the top
// order would contradict the conjugacy of defect groups, so that aborts.
inline Subgroup defect_group(const Block& block, const std::vector<Subgroup>& p_classes) {
  const AlgebraElement& e = block.idempotent;
  std::vector<const Subgroup*> hits;
  for (const auto& D : p_classes)
    if (!brauer_hom(D, e).is_zero()) hits.push_back(&D);
  check(!hits.empty(), "Br_1(e) = e is nonzero, so some class must survive");
  int max_order = 0;
  for (auto* D : hits) max_order = std::max(max_order, D->order());
  std::vector<const Subgroup*> top;
  for (auto* D : hits)
    if (D->order() == max_order) top.push_back(D);
  if (top.size() != 1) {
    std::ostringstream os;
    os << "found " << top.size() << " non-conjugate maximal classes with Br_D(e) != 0 "
       << "(orders " << max_order << "); defect groups form a single conjugacy class";
    throw check_error(os.str());
  }
  return *top[0];
}

inline void compute_defect_groups(std::vector<Block>& blocks, const GroupPtr& G,
                                  const FieldPtr& F, const Caps& caps = {}) {
  auto classes = p_subgroups_up_to_conjugacy(G, F->p(), caps);
  for (auto& b : blocks) b.defect_group = defect_group(b, classes);
}

inline std::vector<Block> blocks_with_defects(const GroupPtr& G, const FieldPtr& F,
                                              const Caps& caps = {}) {
  auto blocks = block_decomposition(G, F);
  compute_defect_groups(blocks, G, F, caps);
  return blocks;
}

// Subgroup classes of D itself, up to G-conjugacy, ascending order.
inline std::vector<Subgroup> subgroup_classes_of(const GroupPtr& G, const Subgroup& D, int p,
                                                 const Caps& caps = {}) {
  std::vector<Subgroup> reps;
  for (const auto& H : all_subgroups_of_p_group(G, D, p, caps)) {
    bool dup = false;
    for (const auto& R : reps)
      if (are_conjugate(R, H)) { dup = true; break; }
    if (!dup) reps.push_back(H);
  }
  return reps;
}

struct DefectCharacterizations {
  // (1) e in Tr_D^G(kG^D), no proper subgroup class of D has that
  bool trace_membership_at_D = false;
  bool no_proper_trace_membership = false;
  bool members_contain_conjugate_of_D = false;
  // (2) same with the modified trace
  bool modified_membership_at_D = false;
  bool no_proper_modified_membership = false;
  // (4) classes with both trace membership and Br != 0 are exactly D's class
  bool membership_and_brauer_unique = false;
  // (5) poset-maximal classes with Br != 0 are exactly D's class
  bool brauer_maximal_unique = false;
  bool all_agree = false;
};

inline DefectCharacterizations defect_crosscheck(const GroupPtr& G, const FieldPtr& F,
                                                 const Block& block,
                                                 const std::vector<Subgroup>& p_classes,
                                                 const Caps& caps = {}) {
  require(block.defect_group.has_value(), "defect group must be computed first");
  const Subgroup& D = *block.defect_group;
  const AlgebraElement& e = block.idempotent;
  const int p = F->p();
  DefectCharacterizations r;

  r.trace_membership_at_D = in_trace_image(G, D, e, false);
  r.modified_membership_at_D = in_trace_image(G, D, e, true);

  r.no_proper_trace_membership = true;
  r.no_proper_modified_membership = true;
  for (const auto& Q : subgroup_classes_of(G, D, p, caps)) {
    if (Q.order() == D.order()) continue;
    if (in_trace_image(G, Q, e, false)) r.no_proper_trace_membership = false;
    if (in_trace_image(G, Q, e, true)) r.no_proper_modified_membership = false;
  }

  // every class with trace membership contains a conjugate of D
  r.members_contain_conjugate_of_D = true;
  std::vector<const Subgroup*> brauer_hits;
  std::vector<const Subgroup*> both;
  for (const auto& Q : p_classes) {
    bool mem = in_trace_image(G, Q, e, false);
    bool br = !brauer_hom(Q, e).is_zero();
    if (mem && !conjugate_into(D, Q)) r.members_contain_conjugate_of_D = false;
    if (br) brauer_hits.push_back(&Q);
    if (mem && br) both.push_back(&Q);
  }
  r.membership_and_brauer_unique = both.size() == 1 && are_conjugate(*both[0], D);

  // poset-maximal among Brauer survivors
  std::vector<const Subgroup*> maximal;
  for (auto* Q : brauer_hits) {
    bool is_max = true;
    for (auto* R : brauer_hits)
      if (R != Q && R->order() > Q->order() && conjugate_into(*Q, *R)) { is_max = false; break; }
    if (is_max) maximal.push_back(Q);
  }
  r.brauer_maximal_unique = maximal.size() == 1 && are_conjugate(*maximal[0], D);

  r.all_agree = r.trace_membership_at_D && r.no_proper_trace_membership &&
                r.members_contain_conjugate_of_D && r.modified_membership_at_D &&
                r.no_proper_modified_membership && r.membership_and_brauer_unique &&
                r.brauer_maximal_unique;
  return r;
}

struct SylowIntersectionWitness {
  bool found = false;
  Elem witness = -1;
};

// D = P cap gPg^-1 for some g centralizing D, with P the fixed Sylow
// subgroup containing D.  Exhaustive scan of C_G(D), smallest witness first.
inline SylowIntersectionWitness defect_sylow_intersection_check(const GroupPtr& G,
                                                                const Subgroup& D,
                                                                const Subgroup& P) {
  require(D.is_subset_of(P), "defect representative must lie in the chosen Sylow subgroup");
  SylowIntersectionWitness w;
  for (Elem g : centralizer(G, D).elems) {
    if (intersect(P, conjugate_subgroup(P, g)) == D) {
      w.found = true;
      w.witness = g;
      return w;
    }
  }
  return w;
}

// D equals the largest normal p-subgroup of its normalizer, computed as the
// join of all normal p-subgroups of N_G(D) by enumeration.
inline bool defect_normalizer_check(const GroupPtr& G, const Subgroup& D, int p,
                                    const Caps& caps = {}) {
  require(is_p_group(D, p), "D must be a p-group");
  Subgroup N = normalizer(G, D);
  auto [Ngrp, emb] = subgroup_as_group(N);
  std::vector<Elem> d_in_n = reindex_into(D, N);

  Subgroup P1 = sylow_p(Ngrp, p, caps);
  std::vector<Elem> join_gens;
  for (const auto& H : all_subgroups_of_p_group(Ngrp, P1, p, caps))
    if (is_normal(Ngrp, H))
      join_gens.insert(join_gens.end(), H.elems.begin(), H.elems.end());
  Subgroup core = subgroup_generated(Ngrp, join_gens);
  check(is_p_group(core, p), "join of normal p-subgroups must be a p-group");
  return core.elems == d_in_n;
}

// Every central idempotent of kG is supported inside C_G(D) when D is a
// normal p-subgroup.
inline bool central_idempotent_support_check(const GroupPtr& G, const FieldPtr& F,
                                             const Subgroup& D) {
  require(is_normal(G, D), "needs a normal p-subgroup");
  require(is_p_group(D, F->p()), "needs a normal p-subgroup");
  Subgroup C = centralizer(G, D);
  for (const Block& b : block_decomposition(G, F))
    for (Elem g = 0; g < G->order(); ++g)
      if (b.idempotent.coeffs[g] && !C.contains(g)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Brauer correspondence

// The unique block e of G with f * Br_D(e) = f, for f the idempotent of a
// block of a subgroup H with D C_G(D) <= H <= N_G(D).  `f` is given in kG
// coordinates (supported on H).  Returns the index into g_blocks.
inline size_t brauer_correspondent(const GroupPtr& G, const FieldPtr& F,
                                   const std::vector<Block>& g_blocks, const Subgroup& D,
                                   const Subgroup& H, const AlgebraElement& f) {
  require(is_p_group(D, F->p()), "D must be a p-subgroup");
  Subgroup N = normalizer(G, D);
  Subgroup C = centralizer(G, D);
  std::vector<Elem> dc = product_set(D, C);
  require(is_subgroup(G, dc), "D C_G(D) must be a subgroup");
  require(Subgroup{G, dc}.is_subset_of(H) && H.is_subset_of(N),
          "H must satisfy D C_G(D) <= H <= N_G(D)");
  require(!f.is_zero(), "block idempotent must be nonzero");
  // The idempotent of a block of H automatically lies in k C_G(D).
  for (Elem g = 0; g < G->order(); ++g)
    check(!f.coeffs[g] || C.contains(g), "subgroup block idempotent must be supported on C_G(D)");

  std::vector<size_t> found;
  for (size_t i = 0; i < g_blocks.size(); ++i) {
    AlgebraElement br = brauer_hom(D, g_blocks[i].idempotent);
    if (multiply(f, br) == f) found.push_back(i);
  }
  if (found.size() != 1) {
    std::ostringstream os;
    os << found.size() << " blocks satisfy f Br_D(e) = f; the correspondent must be unique";
    throw check_error(os.str());
  }
  return found[0];
}

struct FirstMainReport {
  int g_defect_blocks = 0;             // blocks of G with defect group ~ D
  int n_defect_blocks = 0;             // blocks of N_G(D) with defect group ~ D
  std::vector<std::pair<int, int>> pairs;  // (block of N index, block of G index)
  bool correspondent_defects_match = false;
  bool injective = false;
  bool surjective = false;
  bool ok = false;
};

// The first main theorem at one level: the Brauer correspondence restricted
// to defect-D blocks of N_G(D) is a bijection onto the defect-D blocks of G.
inline FirstMainReport first_main_check(const GroupPtr& G, const FieldPtr& F, const Subgroup& D,
                                        const Caps& caps = {}) {
  FirstMainReport rep;
  std::vector<Block> g_blocks = blocks_with_defects(G, F, caps);
  std::vector<size_t> g_targets;
  for (size_t i = 0; i < g_blocks.size(); ++i)
    if (are_conjugate(*g_blocks[i].defect_group, D)) g_targets.push_back(i);
  rep.g_defect_blocks = static_cast<int>(g_targets.size());

  Subgroup N = normalizer(G, D);
  auto [Ngrp, emb] = subgroup_as_group(N);
  Subgroup D_N{Ngrp, reindex_into(D, N)};

  std::vector<Block> n_blocks = blocks_with_defects(Ngrp, F, caps);
  std::vector<size_t> sources;
  for (size_t i = 0; i < n_blocks.size(); ++i)
    if (are_conjugate(*n_blocks[i].defect_group, D_N)) sources.push_back(i);
  rep.n_defect_blocks = static_cast<int>(sources.size());

  rep.correspondent_defects_match = true;
  std::vector<size_t> images;
  for (size_t i : sources) {
    AlgebraElement f = embed_into(G, F, n_blocks[i].idempotent, emb);
    size_t j = brauer_correspondent(G, F, g_blocks, D, N, f);
    images.push_back(j);
    rep.pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    if (!are_conjugate(*g_blocks[j].defect_group, D)) rep.correspondent_defects_match = false;
  }

  std::vector<size_t> sorted_images = images;
  std::sort(sorted_images.begin(), sorted_images.end());
  rep.injective = std::adjacent_find(sorted_images.begin(), sorted_images.end()) ==
                  sorted_images.end();
  rep.surjective = sorted_images == g_targets;
  rep.ok = rep.correspondent_defects_match && rep.injective && rep.surjective;
  return rep;
}

struct IntermediateFirstMain {
  FirstMainReport in_G;  // blocks of N_G(D) vs blocks of G
  FirstMainReport in_L;  // blocks of N_L(D) = N_G(D) vs blocks of L
  // composite bijection blocks(L, D) <-> blocks(G, D) through the common
  // normalizer block: entries are (L block index, G block index)
  std::vector<std::pair<int, int>> composite;
  bool ok = false;
};

// The canonical bijection between defect-D blocks of G and of an
// intermediate subgroup L containing N_G(D), as the composite of the two
// normalizer correspondences.  Both N_G(D) and N_L(D) are the same group
// with the same deterministic indexing, so block indices line up.
inline IntermediateFirstMain first_main_with_intermediate(const GroupPtr& G, const FieldPtr& F,
                                                          const Subgroup& D, const Subgroup& L,
                                                          const Caps& caps = {}) {
  Subgroup N = normalizer(G, D);
  require(N.is_subset_of(L), "intermediate subgroup must contain the normalizer");
  IntermediateFirstMain rep;
  rep.in_G = first_main_check(G, F, D, caps);

  auto [Lgrp, embL] = subgroup_as_group(L);
  Subgroup D_L{Lgrp, reindex_into(D, L)};
  rep.in_L = first_main_check(Lgrp, F, D_L, caps);

  for (const auto& [n_idx, g_idx] : rep.in_G.pairs)
    for (const auto& [n_idx2, l_idx] : rep.in_L.pairs)
      if (n_idx == n_idx2) rep.composite.emplace_back(l_idx, g_idx);
  rep.ok = rep.in_G.ok && rep.in_L.ok &&
           rep.composite.size() == rep.in_G.pairs.size() &&
           rep.composite.size() == rep.in_L.pairs.size();
  return rep;
}

struct DiagramReport {
  bool ok = false;
  int checked_vectors = 0;
  std::optional<FFVec> witness;  // first failing orbit-sum basis vector
};

// Br_D(Ttilde_D^G(x)) = b * Ttilde_D^{N_G(D)}(Br_D(x)) for every D-fixed x,
// with b = 1/|G : N_G(D)|_{p'}, verified on every orbit-sum basis vector.
inline DiagramReport diagram_commutation_check(const GroupPtr& G, const FieldPtr& F,
                                               const Subgroup& D) {
  require(is_p_group(D, F->p()), "D must be a p-subgroup");
  Subgroup full = full_subgroup(G);
  Subgroup N = normalizer(G, D);
  ffel b = F->inv(F->from_int(pprime_part(G->order() / N.order(), F->p())));

  DiagramReport rep;
  rep.ok = true;
  for (const auto& x : fixed_point_basis(G, F, D).basis) {
    AlgebraElement lhs = brauer_hom(D, modified_trace(D, full, x));
    AlgebraElement rhs = scale(b, modified_trace(D, N, brauer_hom(D, x)));
    ++rep.checked_vectors;
    if (!(lhs == rhs)) {
      rep.ok = false;
      if (!rep.witness) rep.witness = x.coeffs;
    }
  }
  return rep;
}

}  // namespace blocktower
