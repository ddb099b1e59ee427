#pragma once

// The group algebra kG over GF(p^m): elements as dense coefficient vectors,
// convolution products through the Cayley table, fixed-point subalgebras
// kG^H, and the commutative idempotent engine: nilradical via an iterated
// Frobenius kernel, semisimple splitting by root idempotents, and lifting by
// q^t-th powers.  Everything is deterministic.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blocktower/group.hpp"
#include "blocktower/linalg.hpp"

namespace blocktower {

struct AlgebraElement {
  GroupPtr group;
  FieldPtr field;
  FFVec coeffs;  // indexed by group element

  bool is_zero() const {
    for (ffel c : coeffs)
      if (c) return false;
    return true;
  }

  bool operator==(const AlgebraElement& o) const { return coeffs == o.coeffs; }

  int support_size() const {
    int n = 0;
    for (ffel c : coeffs) n += (c != 0);
    return n;
  }

  // Sum of coefficients: the image under the augmentation map kG -> k.
  ffel augmentation() const {
    ffel s = 0;
    for (ffel c : coeffs) s = field->add(s, c);
    return s;
  }
};

inline AlgebraElement zero_element(const GroupPtr& G, const FieldPtr& F) {
  return {G, F, FFVec(G->order(), 0)};
}

inline AlgebraElement one_element(const GroupPtr& G, const FieldPtr& F) {
  AlgebraElement x = zero_element(G, F);
  x.coeffs[0] = 1;
  return x;
}

inline AlgebraElement basis_element(const GroupPtr& G, const FieldPtr& F, Elem g, ffel c = 1) {
  AlgebraElement x = zero_element(G, F);
  x.coeffs[g] = c;
  return x;
}

inline void require_same_ambient(const AlgebraElement& a, const AlgebraElement& b) {
  require(a.group.get() == b.group.get() && a.field->same(*b.field), "ambient algebra mismatch");
}

inline AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_ambient(a, b);
  AlgebraElement c = a;
  for (size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] = a.field->add(a.coeffs[i], b.coeffs[i]);
  return c;
}

inline AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_ambient(a, b);
  AlgebraElement c = a;
  for (size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] = a.field->sub(a.coeffs[i], b.coeffs[i]);
  return c;
}

inline AlgebraElement scale(ffel c, const AlgebraElement& a) {
  AlgebraElement r = a;
  for (auto& x : r.coeffs) x = a.field->mul(c, x);
  return r;
}

// Convolution product via the Cayley table.
inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_ambient(a, b);
  const auto& G = *a.group;
  const FF& F = *a.field;
  AlgebraElement c = zero_element(a.group, a.field);
  for (Elem i = 0; i < G.order(); ++i) {
    if (!a.coeffs[i]) continue;
    for (Elem j = 0; j < G.order(); ++j) {
      if (!b.coeffs[j]) continue;
      Elem k = G.mul(i, j);
      c.coeffs[k] = F.add(c.coeffs[k], F.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return c;
}

inline AlgebraElement power(const AlgebraElement& a, long e) {
  AlgebraElement r = one_element(a.group, a.field);
  AlgebraElement base = a;
  while (e > 0) {
    if (e & 1) r = multiply(r, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return r;
}

// g x g^{-1}: the conjugation action on kG, as a coefficient permutation.
inline AlgebraElement conjugate(Elem g, const AlgebraElement& a) {
  const auto& G = *a.group;
  AlgebraElement r = zero_element(a.group, a.field);
  for (Elem x = 0; x < G.order(); ++x)
    if (a.coeffs[x]) r.coeffs[G.conj(g, x)] = a.coeffs[x];
  return r;
}

inline bool is_fixed_by(const AlgebraElement& a, const Subgroup& H) {
  for (Elem h : H.elems)
    if (!(conjugate(h, a) == a)) return false;
  return true;
}

inline bool is_central(const AlgebraElement& a) {
  for (Elem g : a.group->generators())
    if (!(conjugate(g, a) == a)) return false;
  return true;
}

// Push an algebra element through a group homomorphism (linear extension of
// g -> phi(g)); an algebra homomorphism when phi is one.
inline AlgebraElement push_through(const GroupMorphism& phi, const AlgebraElement& a) {
  require(a.group.get() == phi.source.get(), "element not over the morphism source");
  AlgebraElement r = zero_element(phi.target, a.field);
  const FF& F = *a.field;
  for (Elem x = 0; x < phi.source->order(); ++x)
    if (a.coeffs[x]) r.coeffs[phi(x)] = F.add(r.coeffs[phi(x)], a.coeffs[x]);
  return r;
}

// Re-coordinatize an element of a subgroup algebra k[H] inside kG, where
// to_parent is the embedding produced by subgroup_as_group.
inline AlgebraElement embed_into(const GroupPtr& G, const FieldPtr& F,
                                 const AlgebraElement& x, const std::vector<Elem>& to_parent) {
  AlgebraElement r = zero_element(G, F);
  for (size_t i = 0; i < x.coeffs.size(); ++i)
    if (x.coeffs[i]) r.coeffs[to_parent[i]] = x.coeffs[i];
  return r;
}

// Restrict an element of kG supported on H to k[H] coordinates.
inline AlgebraElement restrict_to(const GroupPtr& Hgrp, const std::vector<Elem>& to_parent,
                                  const AlgebraElement& x) {
  AlgebraElement r = zero_element(Hgrp, x.field);
  for (size_t i = 0; i < to_parent.size(); ++i) r.coeffs[i] = x.coeffs[to_parent[i]];
  // everything outside the subgroup must vanish
  FFVec back(x.coeffs.size(), 0);
  for (size_t i = 0; i < to_parent.size(); ++i) back[to_parent[i]] = r.coeffs[i];
  require(back == x.coeffs, "element is not supported on the subgroup");
  return r;
}

enum class SubalgebraKind { center, fixed_points, block };

struct SubalgebraBasis {
  GroupPtr group;
  FieldPtr field;
  std::vector<AlgebraElement> basis;
  SubalgebraKind kind;

  int dim() const { return static_cast<int>(basis.size()); }
};

// Basis of the H-conjugation fixed points of kG: one orbit sum per H-orbit,
// orbits keyed by smallest member.  H = G gives the class-sum basis of the
// center.
inline SubalgebraBasis fixed_point_basis(const GroupPtr& G, const FieldPtr& F, const Subgroup& H) {
  std::vector<bool> used(G->order(), false);
  std::vector<AlgebraElement> basis;
  for (Elem x = 0; x < G->order(); ++x) {
    if (used[x]) continue;
    std::set<Elem> orbit;
    for (Elem h : H.elems) orbit.insert(G->conj(h, x));
    AlgebraElement v = zero_element(G, F);
    for (Elem y : orbit) {
      used[y] = true;
      v.coeffs[y] = 1;
    }
    basis.push_back(std::move(v));
  }
  SubalgebraKind kind = H.order() == G->order() ? SubalgebraKind::center : SubalgebraKind::fixed_points;
  return {G, F, std::move(basis), kind};
}

namespace detail {

inline SpanSolver span_of(const SubalgebraBasis& S) {
  SpanSolver s(S.field, S.group->order());
  for (const auto& b : S.basis) check(s.insert(b.coeffs), "subalgebra basis is dependent");
  return s;
}

// x -> x^q on kG, with q = |field|.  Additive in characteristic p and fixes
// base-field scalars, hence GF(q)-linear on any subalgebra.
inline AlgebraElement pow_q(const AlgebraElement& x) { return power(x, x.field->q()); }

}  // namespace detail

inline void require_commutative(const SubalgebraBasis& S) {
  for (size_t i = 0; i < S.basis.size(); ++i)
    for (size_t j = i + 1; j < S.basis.size(); ++j)
      require(multiply(S.basis[i], S.basis[j]) == multiply(S.basis[j], S.basis[i]),
              "subalgebra is not commutative");
}

// Nilradical of a unital commutative subalgebra: the kernel of the
// GF(q)-linear map x -> x^{q^t}, with t minimal such that q^t >= dim S.
// (Nilpotency degree in a unital commutative algebra of dimension d is at
// most d; the unit may be an idempotent other than 1, e.g. in a block factor.)
inline SubalgebraBasis radical_of_commutative(const SubalgebraBasis& S) {
  require_commutative(S);
  const FF& F = *S.field;
  const int d = S.dim();
  int t = 0;
  long qt = 1;
  while (qt < d) { qt *= F.q(); ++t; }

  SpanSolver span = detail::span_of(S);
  FFMatrix M(S.field, d, d);
  for (int j = 0; j < d; ++j) {
    AlgebraElement img = S.basis[j];
    for (int i = 0; i < t; ++i) img = detail::pow_q(img);
    auto coords = span.express(img.coeffs);
    check(coords.has_value(), "Frobenius power left the subalgebra");
    for (int i = 0; i < d; ++i) M.at(i, j) = (*coords)[i];
  }
  std::vector<AlgebraElement> rad;
  for (const FFVec& coords : kernel_basis(M)) {
    AlgebraElement v = zero_element(S.group, S.field);
    for (int j = 0; j < d; ++j)
      if (coords[j]) v = add(v, scale(coords[j], S.basis[j]));
    rad.push_back(std::move(v));
  }
  return {S.group, S.field, std::move(rad), S.kind};
}

namespace detail {

// Arithmetic in S/J realized on canonical representatives: a representative
// is a kG coefficient vector reduced against the echelonized radical.
struct QuotientAlgebra {
  GroupPtr group;
  FieldPtr field;
  SpanSolver rad_span;            // span of J inside kG
  std::vector<AlgebraElement> basis;  // canonical representatives, independent mod J

  FFVec reduce(const FFVec& v) const { return rad_span.reduce(v).first; }

  AlgebraElement reduce_elem(const AlgebraElement& x) const {
    return {group, field, reduce(x.coeffs)};
  }

  AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) const {
    return reduce_elem(multiply(x, y));
  }

  AlgebraElement frob(const AlgebraElement& x) const { return reduce_elem(pow_q(x)); }
};

inline QuotientAlgebra make_quotient(const SubalgebraBasis& S, const SubalgebraBasis& J) {
  SpanSolver rad(S.field, S.group->order());
  for (const auto& b : J.basis) rad.insert(b.coeffs);
  QuotientAlgebra Q{S.group, S.field, rad, {}};
  SpanSolver indep(S.field, S.group->order());
  for (const auto& b : S.basis) {
    FFVec red = Q.reduce(b.coeffs);
    if (indep.insert(red)) Q.basis.push_back({S.group, S.field, red});
  }
  return Q;
}

// Fixed-space basis vectors of (Frob - id) on the Frobenius-stable factor
// spanned by `fbasis`, as elements of Q.  The fixed-space dimension equals
// the number of primitive idempotents of the factor.
inline std::vector<AlgebraElement> frobenius_fixed_basis(const QuotientAlgebra& Q,
                                                         const std::vector<AlgebraElement>& fbasis) {
  SpanSolver span(Q.field, Q.group->order());
  for (const auto& b : fbasis) span.insert(b.coeffs);
  const int d = static_cast<int>(fbasis.size());
  FFMatrix M(Q.field, d, d);
  const FF& F = *Q.field;
  for (int j = 0; j < d; ++j) {
    AlgebraElement img = Q.frob(fbasis[j]);
    auto coords = span.express(img.coeffs);
    check(coords.has_value(), "Frobenius left the factor");
    for (int i = 0; i < d; ++i) M.at(i, j) = F.sub((*coords)[i], i == j ? F.one() : F.zero());
  }
  std::vector<AlgebraElement> out;
  for (const FFVec& k : kernel_basis(M)) {
    AlgebraElement v = zero_element(Q.group, Q.field);
    for (int j = 0; j < d; ++j)
      if (k[j]) v = add(v, scale(k[j], fbasis[j]));
    out.push_back(v);
  }
  return out;
}

// Recursively split the unital factor (identity `id`, spanning set `fbasis`)
// of Q into primitive idempotents.
inline void split_factor(const QuotientAlgebra& Q, const AlgebraElement& id,
                         const std::vector<AlgebraElement>& fbasis,
                         std::vector<AlgebraElement>& out) {
  auto fixed = frobenius_fixed_basis(Q, fbasis);
  if (static_cast<int>(fixed.size()) <= 1) {
    out.push_back(id);
    return;
  }
  // First Frobenius-fixed basis vector outside span(id).
  SpanSolver idspan(Q.field, Q.group->order());
  idspan.insert(id.coeffs);
  const AlgebraElement* pick = nullptr;
  for (const auto& a : fixed)
    if (!idspan.contains(a.coeffs)) { pick = &a; break; }
  check(pick != nullptr, "no splitting element in a factor with several idempotents");
  AlgebraElement a = Q.mul(*pick, id);  // force into the factor

  // Its minimal polynomial over GF(q) splits into distinct linear factors.
  FFPoly mp = min_poly(Q.field, id.coeffs, [&](const FFVec& v) {
    return Q.mul(a, AlgebraElement{Q.group, Q.field, v}).coeffs;
  });
  std::vector<ffel> roots = distinct_roots_in_field(*Q.field, mp);
  check(static_cast<int>(roots.size()) == poly_deg(mp),
        "minimal polynomial of a Frobenius-fixed element must split with distinct roots");
  check(roots.size() >= 2, "splitting element has a single eigenvalue");

  const FF& F = *Q.field;
  for (ffel v : roots) {
    // Lagrange idempotent projecting onto the a = v component.
    AlgebraElement ev = id;
    for (ffel w : roots) {
      if (w == v) continue;
      AlgebraElement t = sub(a, scale(w, id));
      ev = Q.mul(ev, scale(F.inv(F.sub(v, w)), t));
    }
    // Basis of the sub-factor ev * (span fbasis).
    SpanSolver sub_span(Q.field, Q.group->order());
    std::vector<AlgebraElement> sub_basis;
    for (const auto& b : fbasis) {
      AlgebraElement eb = Q.mul(ev, b);
      if (sub_span.insert(eb.coeffs)) sub_basis.push_back(eb);
    }
    split_factor(Q, ev, sub_basis, out);
  }
}

}  // namespace detail

// Number of primitive idempotents of S, read off as the dimension of the
// q-Frobenius fixed space of S/J.  Exposed for cross-checks.
inline int block_count_via_frobenius(const SubalgebraBasis& S) {
  SubalgebraBasis J = radical_of_commutative(S);
  auto Q = detail::make_quotient(S, J);
  return static_cast<int>(detail::frobenius_fixed_basis(Q, Q.basis).size());
}

// Whether the idempotent e is primitive in S: the factor e*S, a unital
// commutative algebra with unit e, has exactly one primitive idempotent.
inline bool is_primitive_idempotent_in(const SubalgebraBasis& S, const AlgebraElement& e) {
  SubalgebraBasis factor{S.group, S.field, {}, SubalgebraKind::block};
  SpanSolver span(S.field, S.group->order());
  for (const auto& b : S.basis) {
    AlgebraElement eb = multiply(e, b);
    if (span.insert(eb.coeffs)) factor.basis.push_back(eb);
  }
  return block_count_via_frobenius(factor) == 1;
}

// The complete list of primitive idempotents of a commutative unital
// subalgebra S of kG.  Deterministic: Frobenius fixed spaces with leftmost
// kernels, smallest-root-first splitting, q^t-power lifting.
inline std::vector<AlgebraElement> primitive_idempotents_commutative(const SubalgebraBasis& S) {
  const FF& F = *S.field;
  AlgebraElement one = one_element(S.group, S.field);
  {
    SpanSolver span = detail::span_of(S);
    require(span.contains(one.coeffs), "subalgebra must contain the identity");
  }

  SubalgebraBasis J = radical_of_commutative(S);
  auto Q = detail::make_quotient(S, J);

  std::vector<AlgebraElement> bars;
  detail::split_factor(Q, Q.reduce_elem(one), Q.basis, bars);

  // Lift: e = x^{q^t} for any preimage x, with q^t >= dim S.  The result is
  // idempotent since (x^2 - x)^{q^t} = 0, and reduces to the same class.
  int t = 0;
  long qt = 1;
  while (qt < S.dim()) { qt *= F.q(); ++t; }
  std::vector<AlgebraElement> lifted;
  for (const auto& bar : bars) {
    AlgebraElement e = bar;  // canonical representative is a preimage
    for (int i = 0; i < t; ++i) e = detail::pow_q(e);
    lifted.push_back(e);
  }

  // Exact sanity: orthogonal idempotents summing to 1, count matching the
  // Frobenius fixed-space dimension.
  check(lifted.size() == detail::frobenius_fixed_basis(Q, Q.basis).size(),
        "idempotent count disagrees with the Frobenius fixed space");
  AlgebraElement sum = zero_element(S.group, S.field);
  for (size_t i = 0; i < lifted.size(); ++i) {
    check(multiply(lifted[i], lifted[i]) == lifted[i], "lifted element is not idempotent");
    check(!lifted[i].is_zero(), "lifted idempotent is zero");
    for (size_t j = i + 1; j < lifted.size(); ++j)
      check(multiply(lifted[i], lifted[j]).is_zero(), "lifted idempotents are not orthogonal");
    sum = add(sum, lifted[i]);
  }
  check(sum == one, "idempotents do not sum to 1");

  // Deterministic order: by coefficient vector.
  std::sort(lifted.begin(), lifted.end(),
            [](const AlgebraElement& a, const AlgebraElement& b) { return a.coeffs < b.coeffs; });
  return lifted;
}

}  // namespace blocktower
