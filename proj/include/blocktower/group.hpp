#pragma once

// Exact finite group arithmetic on full Cayley tables, plus the subgroup
// machinery everything else consumes: Sylow subgroups, normalizers,
// centralizers, quotients, double cosets, conjugacy of subgroups.
//
// Conventions, fixed once and relied on everywhere:
//   * element 0 is the identity of every group;
//   * a Subgroup is a strictly sorted list of element indices, so subgroup
//     equality is plain list equality;
//   * all constructions are deterministic, byte-for-byte reproducible.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "blocktower/errors.hpp"
#include "blocktower/ff.hpp"

namespace blocktower {

using Elem = int;

struct Caps {
  int max_group_order = 20000;     // general construction cap
  int max_subgroup_enum = 512;     // exhaustive subgroup/conjugacy work
  int max_sylow_enum = 256;        // |G|_p cap for p-subgroup enumeration
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class FiniteGroup {
 public:
  FiniteGroup(int order, std::vector<Elem> table, std::vector<std::string> labels = {},
              std::vector<Elem> generators = {})
      : n_(order), table_(std::move(table)), labels_(std::move(labels)), gens_(std::move(generators)) {
    require(n_ >= 1, "group order must be positive");
    require(static_cast<long>(table_.size()) == static_cast<long>(n_) * n_, "table size mismatch");
    inv_.assign(n_, -1);
    for (Elem x = 0; x < n_; ++x) {
      require(mul(0, x) == x && mul(x, 0) == x, "element 0 must be a two-sided identity");
      for (Elem y = 0; y < n_; ++y)
        if (mul(x, y) == 0) { inv_[x] = y; break; }
      require(inv_[x] >= 0 && mul(inv_[x], x) == 0, "missing two-sided inverse");
    }
    if (gens_.empty()) gens_ = greedy_generators();
  }

  int order() const { return n_; }
  Elem mul(Elem x, Elem y) const { return table_[static_cast<size_t>(x) * n_ + y]; }
  Elem inv(Elem x) const { return inv_[x]; }
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }

  const std::vector<Elem>& generators() const { return gens_; }
  bool has_labels() const { return !labels_.empty(); }
  std::string label(Elem x) const {
    if (x < static_cast<Elem>(labels_.size())) return labels_[x];
    return "g" + std::to_string(x);
  }

  int element_order(Elem x) const {
    int k = 1;
    Elem cur = x;
    while (cur != 0) { cur = mul(cur, x); ++k; }
    return k;
  }

  // Exhaustive axiom check; used by tests (O(n^3) associativity scan).
  void verify(int max_order = 512) const {
    require(n_ <= max_order, "group too large for exhaustive verification");
    std::vector<bool> seen(n_);
    for (Elem x = 0; x < n_; ++x) {
      std::fill(seen.begin(), seen.end(), false);
      for (Elem y = 0; y < n_; ++y) {
        Elem z = mul(x, y);
        check(!seen[z], "row is not a permutation");
        seen[z] = true;
      }
      std::fill(seen.begin(), seen.end(), false);
      for (Elem y = 0; y < n_; ++y) {
        Elem z = mul(y, x);
        check(!seen[z], "column is not a permutation");
        seen[z] = true;
      }
    }
    for (Elem x = 0; x < n_; ++x)
      for (Elem y = 0; y < n_; ++y)
        for (Elem z = 0; z < n_; ++z)
          check(mul(mul(x, y), z) == mul(x, mul(y, z)), "associativity failure");
  }

 private:
  std::vector<Elem> greedy_generators() const {
    std::vector<Elem> gens;
    std::vector<bool> in_closure(n_, false);
    in_closure[0] = true;
    int closed = 1;
    while (closed < n_) {
      Elem next = -1;
      for (Elem x = 0; x < n_; ++x)
        if (!in_closure[x]) { next = x; break; }
      gens.push_back(next);
      // grow closure
      std::vector<Elem> frontier{0};
      std::vector<bool> cl(n_, false);
      cl[0] = true;
      closed = 1;
      for (size_t i = 0; i < frontier.size(); ++i)
        for (Elem g : gens) {
          Elem y = mul(frontier[i], g);
          if (!cl[y]) { cl[y] = true; ++closed; frontier.push_back(y); }
        }
      in_closure = cl;
    }
    return gens;
  }

  int n_;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<std::string> labels_;
  std::vector<Elem> gens_;
};

struct Subgroup {
  GroupPtr parent;
  std::vector<Elem> elems;  // strictly sorted; contains 0

  int order() const { return static_cast<int>(elems.size()); }
  bool contains(Elem x) const { return std::binary_search(elems.begin(), elems.end(), x); }
  bool operator==(const Subgroup& o) const { return elems == o.elems; }
  bool is_subset_of(const Subgroup& o) const {
    return std::includes(o.elems.begin(), o.elems.end(), elems.begin(), elems.end());
  }
};

struct GroupMorphism {
  GroupPtr source, target;
  std::vector<Elem> images;

  Elem operator()(Elem x) const { return images[x]; }

  void verify() const {
    check(images[0] == 0, "morphism must fix the identity");
    const auto& S = *source;
    const auto& T = *target;
    for (Elem x = 0; x < S.order(); ++x)
      for (Elem y = 0; y < S.order(); ++y)
        check(images[S.mul(x, y)] == T.mul(images[x], images[y]), "not a homomorphism");
  }

  bool is_surjective() const {
    std::vector<bool> hit(target->order(), false);
    int count = 0;
    for (Elem i : images)
      if (!hit[i]) { hit[i] = true; ++count; }
    return count == target->order();
  }
};

// ---------------------------------------------------------------------------
// permutation helpers

inline std::string cycle_notation(const std::vector<int>& perm) {
  const int d = static_cast<int>(perm.size());
  std::vector<bool> used(d, false);
  std::ostringstream os;
  bool any = false;
  for (int s = 0; s < d; ++s) {
    if (used[s] || perm[s] == s) continue;
    any = true;
    os << '(';
    int c = s;
    bool first = true;
    do {
      os << (first ? "" : " ") << c;
      first = false;
      used[c] = true;
      c = perm[c];
    } while (c != s);
    os << ')';
  }
  return any ? os.str() : "e";
}

// Closure of a set of permutations, breadth-first over generator words with
// generators scanned in index order.  Element 0 is the identity; element
// ordering is the BFS discovery order, which makes every downstream output
// reproducible.
inline GroupPtr group_from_permutations(const std::vector<std::vector<int>>& gens,
                                        const Caps& caps = {}) {
  require(!gens.empty(), "need at least one generator");
  const int d = static_cast<int>(gens[0].size());
  for (const auto& g : gens) {
    require(static_cast<int>(g.size()) == d, "generators act on different sets");
    std::vector<bool> seen(d, false);
    for (int x : g) {
      require(0 <= x && x < d && !seen[x], "generator is not a bijection");
      seen[x] = true;
    }
  }

  std::vector<int> ident(d);
  std::iota(ident.begin(), ident.end(), 0);
  std::map<std::vector<int>, Elem> index;
  std::vector<std::vector<int>> elems{ident};
  index[ident] = 0;
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      // right-multiply: apply g first, then the current word
      std::vector<int> prod(d);
      for (int x = 0; x < d; ++x) prod[x] = elems[i][g[x]];
      if (index.emplace(prod, static_cast<Elem>(elems.size())).second) {
        elems.push_back(prod);
        require(static_cast<int>(elems.size()) <= caps.max_group_order, "group too large");
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<Elem> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> prod(d);
      for (int x = 0; x < d; ++x) prod[x] = elems[i][elems[j][x]];
      table[static_cast<size_t>(i) * n + j] = index.at(prod);
    }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = cycle_notation(elems[i]);
  std::vector<Elem> gen_idx;
  for (const auto& g : gens) gen_idx.push_back(index.at(g));
  return std::make_shared<FiniteGroup>(n, std::move(table), std::move(labels), std::move(gen_idx));
}

// ---------------------------------------------------------------------------
// named constructions

// Cyclic group of order n; element k is the k-th power of the generator.
inline GroupPtr make_cyclic(int n, const Caps& caps = {}) {
  require(n >= 1 && n <= caps.max_group_order, "order out of range");
  std::vector<Elem> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[static_cast<size_t>(i) * n + j] = (i + j) % n;
  std::vector<std::string> labels(n);
  labels[0] = "e";
  for (int i = 1; i < n; ++i) labels[i] = "g^" + std::to_string(i);
  std::vector<Elem> gens = n > 1 ? std::vector<Elem>{1} : std::vector<Elem>{};
  return std::make_shared<FiniteGroup>(n, std::move(table), std::move(labels), std::move(gens));
}

// Dihedral group of order 2n: elements 0..n-1 are rotations r^k, elements
// n..2n-1 are reflections r^k s.  (r^a s)(r^b s^f) follows from s r = r^-1 s.
inline GroupPtr make_dihedral(int n, const Caps& caps = {}) {
  require(n >= 1 && 2 * n <= caps.max_group_order, "order out of range");
  const int N = 2 * n;
  auto code = [n](int rot, int flip) { return flip ? n + rot : rot; };
  std::vector<Elem> table(static_cast<size_t>(N) * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      int ar = i % n, af = i / n, br = j % n, bf = j / n;
      int rot = af ? ((ar - br) % n + n) % n : (ar + br) % n;
      table[static_cast<size_t>(i) * N + j] = code(rot, af ^ bf);
    }
  std::vector<std::string> labels(N);
  for (int i = 0; i < N; ++i) {
    int r = i % n, f = i / n;
    std::string s = r == 0 ? (f ? "s" : "e") : "r^" + std::to_string(r) + (f ? "*s" : "");
    labels[i] = s;
  }
  std::vector<Elem> gens;
  if (n > 1) gens = {1, n};
  else gens = {n};
  return std::make_shared<FiniteGroup>(N, std::move(table), std::move(labels), std::move(gens));
}

inline GroupPtr make_symmetric(int n, const Caps& caps = {}) {
  require(n >= 1, "n must be positive");
  if (n == 1) return make_cyclic(1, caps);
  std::vector<std::vector<int>> gens;
  std::vector<int> t(n);
  std::iota(t.begin(), t.end(), 0);
  std::swap(t[0], t[1]);
  gens.push_back(t);
  if (n > 2) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens.push_back(c);
  }
  return group_from_permutations(gens, caps);
}

inline GroupPtr make_alternating(int n, const Caps& caps = {}) {
  require(n >= 3, "alternating group needs n >= 3");
  // consecutive 3-cycles (i i+1 i+2)
  std::vector<std::vector<int>> gens;
  for (int i = 0; i + 2 < n; ++i) {
    std::vector<int> g(n);
    std::iota(g.begin(), g.end(), 0);
    g[i] = i + 1; g[i + 1] = i + 2; g[i + 2] = i;
    gens.push_back(g);
  }
  return group_from_permutations(gens, caps);
}

// Quaternion group of order 8 via its left regular action on
// {1, i, j, k, -1, -i, -j, -k}.
inline GroupPtr make_quaternion8(const Caps& caps = {}) {
  std::vector<int> pi = {1, 4, 3, 6, 5, 0, 7, 2};  // left multiplication by i
  std::vector<int> pj = {2, 7, 4, 1, 6, 3, 0, 5};  // left multiplication by j
  return group_from_permutations({pi, pj}, caps);
}

// Direct product with lexicographic element ordering: (a, b) -> a*|B| + b.
inline GroupPtr make_direct_product(const GroupPtr& A, const GroupPtr& B, const Caps& caps = {}) {
  const long n = static_cast<long>(A->order()) * B->order();
  require(n <= caps.max_group_order, "product order exceeds cap");
  const int nb = B->order(), N = static_cast<int>(n);
  std::vector<Elem> table(static_cast<size_t>(N) * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      int ia = i / nb, ib = i % nb, ja = j / nb, jb = j % nb;
      table[static_cast<size_t>(i) * N + j] = A->mul(ia, ja) * nb + B->mul(ib, jb);
    }
  std::vector<std::string> labels(N);
  for (int i = 0; i < N; ++i) labels[i] = "(" + A->label(i / nb) + "|" + B->label(i % nb) + ")";
  std::vector<Elem> gens;
  for (Elem g : A->generators()) gens.push_back(g * nb);
  for (Elem g : B->generators()) gens.push_back(g);
  return std::make_shared<FiniteGroup>(N, std::move(table), std::move(labels), std::move(gens));
}

inline GroupPtr make_elementary_abelian(int p, int k, const Caps& caps = {}) {
  require(FF::is_prime(p), "p must be prime");
  require(k >= 1, "rank must be positive");
  GroupPtr g = make_cyclic(p, caps);
  for (int i = 1; i < k; ++i) g = make_direct_product(g, make_cyclic(p, caps), caps);
  return g;
}

// ---------------------------------------------------------------------------
// subgroup machinery

inline Subgroup trivial_subgroup(const GroupPtr& G) { return {G, {0}}; }

inline Subgroup full_subgroup(const GroupPtr& G) {
  std::vector<Elem> all(G->order());
  std::iota(all.begin(), all.end(), 0);
  return {G, std::move(all)};
}

inline Subgroup subgroup_generated(const GroupPtr& G, const std::vector<Elem>& gens) {
  std::vector<bool> in(G->order(), false);
  in[0] = true;
  std::vector<Elem> frontier{0};
  for (size_t i = 0; i < frontier.size(); ++i)
    for (Elem g : gens) {
      Elem y = G->mul(frontier[i], g);
      if (!in[y]) { in[y] = true; frontier.push_back(y); }
      y = G->mul(g, frontier[i]);
      if (!in[y]) { in[y] = true; frontier.push_back(y); }
    }
  std::vector<Elem> elems;
  for (Elem x = 0; x < G->order(); ++x)
    if (in[x]) elems.push_back(x);
  return {G, std::move(elems)};
}

inline bool is_subgroup(const GroupPtr& G, const std::vector<Elem>& sorted_elems) {
  if (sorted_elems.empty() || sorted_elems[0] != 0) return false;
  for (Elem x : sorted_elems)
    for (Elem y : sorted_elems)
      if (!std::binary_search(sorted_elems.begin(), sorted_elems.end(), G->mul(x, y))) return false;
  return true;
}

inline Subgroup conjugate_subgroup(const Subgroup& H, Elem g) {
  const auto& G = *H.parent;
  std::vector<Elem> elems;
  elems.reserve(H.elems.size());
  for (Elem x : H.elems) elems.push_back(G.conj(g, x));
  std::sort(elems.begin(), elems.end());
  return {H.parent, std::move(elems)};
}

inline bool are_conjugate(const Subgroup& H, const Subgroup& K) {
  if (H.order() != K.order()) return false;
  const auto& G = *H.parent;
  for (Elem g = 0; g < G.order(); ++g)
    if (conjugate_subgroup(H, g) == K) return true;
  return false;
}

// True if some conjugate of H is contained in K.
inline bool conjugate_into(const Subgroup& H, const Subgroup& K) {
  const auto& G = *H.parent;
  for (Elem g = 0; g < G.order(); ++g)
    if (conjugate_subgroup(H, g).is_subset_of(K)) return true;
  return false;
}

inline Subgroup intersect(const Subgroup& H, const Subgroup& K) {
  std::vector<Elem> elems;
  std::set_intersection(H.elems.begin(), H.elems.end(), K.elems.begin(), K.elems.end(),
                        std::back_inserter(elems));
  return {H.parent, std::move(elems)};
}

// The product set HK; callers must check is_subgroup when they need one.
inline std::vector<Elem> product_set(const Subgroup& H, const Subgroup& K) {
  std::set<Elem> s;
  for (Elem h : H.elems)
    for (Elem k : K.elems) s.insert(H.parent->mul(h, k));
  return std::vector<Elem>(s.begin(), s.end());
}

inline Subgroup normalizer(const GroupPtr& G, const Subgroup& H) {
  std::vector<Elem> elems;
  for (Elem g = 0; g < G->order(); ++g)
    if (conjugate_subgroup(H, g) == H) elems.push_back(g);
  return {G, std::move(elems)};
}

inline Subgroup centralizer(const GroupPtr& G, const Subgroup& S) {
  std::vector<Elem> elems;
  for (Elem g = 0; g < G->order(); ++g) {
    bool ok = true;
    for (Elem s : S.elems)
      if (G->mul(g, s) != G->mul(s, g)) { ok = false; break; }
    if (ok) elems.push_back(g);
  }
  return {G, std::move(elems)};
}

inline Subgroup centralizer_of_element(const GroupPtr& G, Elem x) {
  std::vector<Elem> elems;
  for (Elem g = 0; g < G->order(); ++g)
    if (G->mul(g, x) == G->mul(x, g)) elems.push_back(g);
  return {G, std::move(elems)};
}

inline bool is_normal(const GroupPtr& G, const Subgroup& N) {
  return normalizer(G, N).order() == G->order();
}

// Smallest-index-first coset representatives of H in L (subgroup of
// the common parent, H <= L).
inline std::vector<Elem> left_coset_reps(const Subgroup& L, const Subgroup& H) {
  const auto& G = *L.parent;
  std::vector<bool> covered(G.order(), false);
  std::vector<Elem> reps;
  for (Elem x : L.elems) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (Elem h : H.elems) covered[G.mul(x, h)] = true;
  }
  return reps;
}

inline int p_part(int n, int p) {
  int r = 1;
  while (n % p == 0) { n /= p; r *= p; }
  return r;
}

inline int pprime_part(int n, int p) { return n / p_part(n, p); }

inline bool is_p_group(const Subgroup& H, int p) {
  int n = H.order();
  while (n % p == 0) n /= p;
  return n == 1;
}

// Deterministic Sylow p-subgroup: grow a p-subgroup H by the smallest-index
// p-element of N_G(H) whose image in N_G(H)/H has order p, starting from the
// trivial subgroup.  No randomization.
inline Subgroup sylow_p(const GroupPtr& G, int p, const Caps& caps = {}) {
  require(FF::is_prime(p), "p must be prime");
  const int target = p_part(G->order(), p);
  Subgroup H = trivial_subgroup(G);
  while (H.order() < target) {
    Subgroup N = normalizer(G, H);
    Elem pick = -1;
    for (Elem x : N.elems) {
      if (H.contains(x)) continue;
      int ord = G->element_order(x);
      bool ppower = true;
      while (ord % p == 0) ord /= p;
      ppower = (ord == 1);
      if (!ppower) continue;
      // image in N/H has order p  <=>  x^p in H (given x not in H)
      Elem xp = x;
      for (int i = 1; i < p; ++i) xp = G->mul(xp, x);
      if (H.contains(xp)) { pick = x; break; }
    }
    check(pick >= 0, "Sylow growth stalled below the full p-part");
    std::vector<Elem> gens = H.elems;
    gens.push_back(pick);
    Subgroup bigger = subgroup_generated(G, gens);
    check(bigger.order() == p * H.order(), "Sylow extension has wrong order");
    H = bigger;
  }
  (void)caps;
  return H;
}

// All subgroups of a p-group P (as subgroups of the ambient G), by
// breadth-first normalizer extension.  Every subgroup of a p-group is
// subnormal, so each one arises from a maximal chain through the trivial
// subgroup.
inline std::vector<Subgroup> all_subgroups_of_p_group(const GroupPtr& G, const Subgroup& P, int p,
                                                      const Caps& caps = {}) {
  require(is_p_group(P, p), "not a p-group");
  require(P.order() <= caps.max_sylow_enum, "p-subgroup enumeration cap exceeded");
  std::set<std::vector<Elem>> seen;
  std::vector<Subgroup> out;
  std::vector<Subgroup> frontier{trivial_subgroup(G)};
  seen.insert(frontier[0].elems);
  out.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const Subgroup& H : frontier) {
      // normalizer of H inside P
      for (Elem x : P.elems) {
        if (H.contains(x)) continue;
        if (!(conjugate_subgroup(H, x) == H)) continue;
        Elem xp = x;
        for (int i = 1; i < p; ++i) xp = G->mul(xp, x);
        if (!H.contains(xp)) continue;
        std::vector<Elem> gens = H.elems;
        gens.push_back(x);
        Subgroup K = subgroup_generated(G, gens);
        if (seen.insert(K.elems).second) {
          out.push_back(K);
          next.push_back(K);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elems < b.elems;
  });
  return out;
}

// One representative per G-conjugacy class of p-subgroups, sorted by order
// then by canonical element list.  Every p-subgroup of G is conjugate into a
// fixed Sylow subgroup, so enumerating inside one Sylow covers all classes.
inline std::vector<Subgroup> p_subgroups_up_to_conjugacy(const GroupPtr& G, int p,
                                                         const Caps& caps = {}) {
  require(p_part(G->order(), p) <= caps.max_sylow_enum, "p-subgroup enumeration cap exceeded");
  Subgroup P = sylow_p(G, p, caps);
  std::vector<Subgroup> all = all_subgroups_of_p_group(G, P, p, caps);
  std::vector<Subgroup> reps;
  for (const Subgroup& H : all) {
    bool dup = false;
    for (const Subgroup& R : reps)
      if (are_conjugate(R, H)) { dup = true; break; }
    if (!dup) reps.push_back(H);
  }
  return reps;  // `all` is sorted, so reps are the lex-least of each class
}

// Representatives g of the double cosets H\G/K, smallest index per coset.
inline std::vector<Elem> double_cosets(const GroupPtr& G, const Subgroup& H, const Subgroup& K) {
  std::vector<bool> covered(G->order(), false);
  std::vector<Elem> reps;
  for (Elem g = 0; g < G->order(); ++g) {
    if (covered[g]) continue;
    reps.push_back(g);
    for (Elem h : H.elems) {
      Elem hg = G->mul(h, g);
      for (Elem k : K.elems) covered[G->mul(hg, k)] = true;
    }
  }
  return reps;
}

inline int double_coset_size(const GroupPtr& G, const Subgroup& H, Elem g, const Subgroup& K) {
  std::set<Elem> s;
  for (Elem h : H.elems) {
    Elem hg = G->mul(h, g);
    for (Elem k : K.elems) s.insert(G->mul(hg, k));
  }
  return static_cast<int>(s.size());
}

// Quotient G/N with cosets ordered by smallest member, plus the projection.
inline std::pair<GroupPtr, GroupMorphism> quotient(const GroupPtr& G, const Subgroup& N) {
  for (Elem g = 0; g < G->order(); ++g)
    for (Elem n : N.elems) {
      Elem c = G->conj(g, n);
      if (!N.contains(c))
        throw validation_error("subgroup is not normal: conjugating element " + std::to_string(n) +
                               " by " + std::to_string(g) + " leaves the subgroup");
    }
  const int n = G->order();
  std::vector<Elem> rep(n, -1);
  for (Elem x = 0; x < n; ++x) {
    Elem r = x;
    for (Elem m : N.elems) r = std::min(r, G->mul(x, m));
    rep[x] = r;
  }
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x)
    if (rep[x] == x) reps.push_back(x);
  std::map<Elem, Elem> idx;
  for (size_t i = 0; i < reps.size(); ++i) idx[reps[i]] = static_cast<Elem>(i);

  const int q = static_cast<int>(reps.size());
  std::vector<Elem> table(static_cast<size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) table[static_cast<size_t>(i) * q + j] = idx.at(rep[G->mul(reps[i], reps[j])]);
  std::vector<std::string> labels(q);
  for (int i = 0; i < q; ++i) labels[i] = G->label(reps[i]) + "N";
  auto Q = std::make_shared<FiniteGroup>(q, std::move(table), std::move(labels));
  std::vector<Elem> images(n);
  for (Elem x = 0; x < n; ++x) images[x] = idx.at(rep[x]);
  return {Q, GroupMorphism{G, Q, std::move(images)}};
}

// G x G with lexicographic ordering together with the diagonal embedding.
inline std::pair<GroupPtr, GroupMorphism> direct_square(const GroupPtr& G, const Caps& caps = {}) {
  require(static_cast<long>(G->order()) * G->order() <= caps.max_group_order,
          "square order exceeds cap");
  GroupPtr GG = make_direct_product(G, G, caps);
  std::vector<Elem> images(G->order());
  for (Elem g = 0; g < G->order(); ++g) images[g] = g * G->order() + g;
  return {GG, GroupMorphism{G, GG, std::move(images)}};
}

// A subgroup as a group in its own right: indices follow the sorted element
// list, so 0 stays the identity.  Returns the group and the embedding into
// the parent (new index -> parent element).
inline std::pair<GroupPtr, std::vector<Elem>> subgroup_as_group(const Subgroup& H) {
  const auto& G = *H.parent;
  const int n = H.order();
  std::map<Elem, Elem> idx;
  for (int i = 0; i < n; ++i) idx[H.elems[i]] = i;
  std::vector<Elem> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elem z = G.mul(H.elems[i], H.elems[j]);
      auto it = idx.find(z);
      require(it != idx.end(), "element list is not closed under multiplication");
      table[static_cast<size_t>(i) * n + j] = it->second;
    }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = G.label(H.elems[i]);
  return {std::make_shared<FiniteGroup>(n, std::move(table), std::move(labels)), H.elems};
}

// Positions of the elements of H inside the sorted element list of an
// enclosing subgroup L: H reindexed into subgroup_as_group(L) coordinates.
inline std::vector<Elem> reindex_into(const Subgroup& H, const Subgroup& L) {
  std::vector<Elem> out;
  for (Elem x : H.elems) {
    auto it = std::lower_bound(L.elems.begin(), L.elems.end(), x);
    require(it != L.elems.end() && *it == x, "subgroup is not contained in the enclosing one");
    out.push_back(static_cast<Elem>(it - L.elems.begin()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Conjugacy classes of G, each sorted, ordered by smallest member.
inline std::vector<std::vector<Elem>> conjugacy_classes(const GroupPtr& G) {
  std::vector<bool> used(G->order(), false);
  std::vector<std::vector<Elem>> classes;
  for (Elem x = 0; x < G->order(); ++x) {
    if (used[x]) continue;
    std::set<Elem> cls;
    for (Elem g = 0; g < G->order(); ++g) cls.insert(G->conj(g, x));
    std::vector<Elem> v(cls.begin(), cls.end());
    for (Elem y : v) used[y] = true;
    classes.push_back(std::move(v));
  }
  return classes;
}

// Minimal generating set of a subgroup, greedy over ascending element index.
inline std::vector<Elem> subgroup_generators(const Subgroup& H) {
  std::vector<Elem> gens;
  Subgroup cur = trivial_subgroup(H.parent);
  for (Elem x : H.elems) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    std::vector<Elem> g2 = gens;
    cur = subgroup_generated(H.parent, g2);
    if (cur.order() == H.order()) break;
  }
  return gens;
}

}  // namespace blocktower
