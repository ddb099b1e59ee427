#include <catch2/catch_amalgamated.hpp>

#include "blocktower/algebra.hpp"
#include "oracles.hpp"

using namespace blocktower;

namespace {

Elem labelled(const GroupPtr& G, const std::string& s) {
  for (Elem x = 0; x < G->order(); ++x)
    if (G->label(x) == s) return x;
  throw std::runtime_error("no element labelled " + s);
}

}  // namespace

TEST_CASE("algebra multiplication") {
  auto G = make_symmetric(3);
  auto F = make_field(3);

  SECTION("multiplying by 1 is the identity") {
    AlgebraElement a = zero_element(G, F);
    a.coeffs = {1, 2, 0, 1, 0, 2};
    REQUIRE(multiply(a, one_element(G, F)) == a);
    REQUIRE(multiply(one_element(G, F), a) == a);
  }

  SECTION("(1+g)^2 = 0 in F2C2") {
    auto C2 = make_cyclic(2);
    auto F2 = make_field(2);
    AlgebraElement x = zero_element(C2, F2);
    x.coeffs = {1, 1};
    REQUIRE(multiply(x, x).is_zero());
  }

  SECTION("class-sum products match the counting oracle") {
    for (auto F2 : {make_field(3), make_field(2), make_field(5)}) {
      auto classes = conjugacy_classes(G);
      REQUIRE(classes.size() == 3);
      for (const auto& K1 : classes)
        for (const auto& K2 : classes) {
          AlgebraElement a = zero_element(G, F2), b = zero_element(G, F2);
          for (Elem x : K1) a.coeffs[x] = 1;
          for (Elem x : K2) b.coeffs[x] = 1;
          REQUIRE(multiply(a, b).coeffs ==
                  oracle::class_sum_product_by_counting(G, F2, K1, K2));
        }
    }
  }

  SECTION("ambient mismatch is rejected") {
    auto a = one_element(G, F);
    auto b = one_element(make_cyclic(6), F);
    REQUIRE_THROWS_AS(multiply(a, b), validation_error);
  }
}

TEST_CASE("fixed point bases") {
  auto G = make_symmetric(3);
  auto F = make_field(2);

  SECTION("H = 1 gives all singletons") {
    auto S = fixed_point_basis(G, F, trivial_subgroup(G));
    REQUIRE(S.dim() == 6);
  }
  SECTION("H = G gives the three class sums") {
    auto S = fixed_point_basis(G, F, full_subgroup(G));
    REQUIRE(S.dim() == 3);
    REQUIRE(S.kind == SubalgebraKind::center);
    for (const auto& b : S.basis) REQUIRE(is_central(b));
  }
  SECTION("H = <(0 1)> gives four orbit sums") {
    Subgroup H = subgroup_generated(G, {labelled(G, "(0 1)")});
    auto S = fixed_point_basis(G, F, H);
    REQUIRE(S.dim() == 4);
    std::vector<int> sizes;
    for (const auto& b : S.basis) sizes.push_back(b.support_size());
    std::sort(sizes.begin(), sizes.end());
    REQUIRE(sizes == std::vector<int>({1, 1, 2, 2}));
    for (const auto& b : S.basis) REQUIRE(is_fixed_by(b, H));
  }
}

TEST_CASE("radical of commutative subalgebras") {
  SECTION("semisimple case: Z(F5 S3) has radical 0") {
    auto G = make_symmetric(3);
    auto S = fixed_point_basis(G, make_field(5), full_subgroup(G));
    REQUIRE(radical_of_commutative(S).dim() == 0);
  }
  SECTION("F3 C3 has radical of dimension 2 containing g-1 and g^2-1") {
    auto G = make_cyclic(3);
    auto F = make_field(3);
    auto S = fixed_point_basis(G, F, full_subgroup(G));
    REQUIRE(S.dim() == 3);
    auto J = radical_of_commutative(S);
    REQUIRE(J.dim() == 2);
    SpanSolver span(F, 3);
    for (const auto& b : J.basis) span.insert(b.coeffs);
    // g - 1 and g^2 - 1
    REQUIRE(span.contains(FFVec{2, 1, 0}));
    REQUIRE(span.contains(FFVec{2, 0, 1}));
    // oracle: every radical basis element cubes to zero
    for (const auto& b : J.basis)
      REQUIRE(multiply(b, multiply(b, b)).is_zero());
  }
  SECTION("Z(F2 S3): radical equals the span of the nilpotent center vectors") {
    auto G = make_symmetric(3);
    auto F = make_field(2);
    auto S = fixed_point_basis(G, F, full_subgroup(G));
    auto J = radical_of_commutative(S);

    // oracle: scan all 2^3 center vectors for nilpotency
    int nilpotent_dim = 0;
    {
      SpanSolver span(F, 6);
      for (int code = 1; code < 8; ++code) {
        AlgebraElement v = zero_element(G, F);
        for (int i = 0; i < 3; ++i)
          if (code & (1 << i)) v = add(v, S.basis[i]);
        AlgebraElement pw = v;
        for (int k = 0; k < 3; ++k) pw = multiply(pw, pw);
        if (pw.is_zero()) span.insert(v.coeffs);
      }
      nilpotent_dim = span.rank();
    }
    REQUIRE(nilpotent_dim == 1);
    REQUIRE(J.dim() == nilpotent_dim);
    // the radical is spanned by the sum over all of G
    REQUIRE(J.basis.size() == 1);
    REQUIRE(J.basis[0].support_size() == 6);
  }
  SECTION("noncommutative input is rejected") {
    auto G = make_symmetric(3);
    auto S = fixed_point_basis(G, make_field(2), trivial_subgroup(G));
    REQUIRE_THROWS_AS(radical_of_commutative(S), validation_error);
  }
}

TEST_CASE("primitive idempotents of commutative subalgebras") {
  SECTION("group algebra of a p-group is local: only the identity") {
    for (auto G : {make_cyclic(3), make_cyclic(9), make_quaternion8()}) {
      int p = G->order() % 2 == 0 ? 2 : 3;
      auto F = make_field(p);
      auto S = fixed_point_basis(G, F, full_subgroup(G));
      auto idems = primitive_idempotents_commutative(S);
      REQUIRE(idems.size() == 1);
      REQUIRE(idems[0] == one_element(G, F));
    }
  }

  SECTION("Z(F2 S3): exactly two, matching the exhaustive oracle") {
    auto G = make_symmetric(3);
    auto F = make_field(2);
    auto S = fixed_point_basis(G, F, full_subgroup(G));
    auto idems = primitive_idempotents_commutative(S);
    REQUIRE(idems.size() == 2);

    auto expected = oracle::primitive_idempotents_exhaustive(S);
    std::vector<FFVec> got;
    for (const auto& e : idems) got.push_back(e.coeffs);
    std::sort(got.begin(), got.end());
    REQUIRE(got == expected);
  }

  SECTION("Z(F3 S3): only the identity, matching the exhaustive oracle") {
    auto G = make_symmetric(3);
    auto F = make_field(3);
    auto S = fixed_point_basis(G, F, full_subgroup(G));
    auto idems = primitive_idempotents_commutative(S);
    REQUIRE(idems.size() == 1);
    REQUIRE(idems[0] == one_element(G, F));
    auto expected = oracle::primitive_idempotents_exhaustive(S);
    REQUIRE(expected == std::vector<FFVec>{one_element(G, F).coeffs});
  }

  SECTION("oracle equivalence across small corpus pairs") {
    struct Pair { GroupPtr g; int p, m; };
    std::vector<Pair> pairs = {
        {make_cyclic(3), 2, 1},  {make_cyclic(3), 2, 2},  {make_cyclic(4), 2, 1},
        {make_cyclic(6), 2, 1},  {make_cyclic(6), 3, 1},  {make_cyclic(6), 5, 1},
        {make_symmetric(3), 2, 1}, {make_symmetric(3), 3, 1}, {make_symmetric(3), 5, 1},
        {make_symmetric(4), 2, 1}, {make_symmetric(4), 3, 1},
        {make_dihedral(4), 2, 1},  {make_dihedral(6), 2, 1}, {make_dihedral(6), 3, 1},
        {make_alternating(4), 2, 1}, {make_alternating(4), 3, 1},
        {make_quaternion8(), 2, 1}, {make_quaternion8(), 3, 1},
    };
    for (const auto& [G, p, m] : pairs) {
      auto F = make_field(p, m);
      auto S = fixed_point_basis(G, F, full_subgroup(G));
      auto idems = primitive_idempotents_commutative(S);
      std::vector<FFVec> got;
      for (const auto& e : idems) got.push_back(e.coeffs);
      std::sort(got.begin(), got.end());
      INFO("group order " << G->order() << " over GF(" << p << "^" << m << ")");
      REQUIRE(got == oracle::primitive_idempotents_exhaustive(S));
    }
  }

  SECTION("idempotent count equals the Frobenius fixed space dimension") {
    for (auto [G, p] : std::vector<std::pair<GroupPtr, int>>{
             {make_symmetric(4), 2}, {make_symmetric(4), 3}, {make_alternating(4), 2}}) {
      auto F = make_field(p);
      auto S = fixed_point_basis(G, F, full_subgroup(G));
      REQUIRE(static_cast<int>(primitive_idempotents_commutative(S).size()) ==
              block_count_via_frobenius(S));
    }
  }
}
