#include <catch2/catch_amalgamated.hpp>

#include "blocktower/ff.hpp"
#include "blocktower/linalg.hpp"

using namespace blocktower;

TEST_CASE("field axioms hold exhaustively for small fields") {
  // every supported (p, m) with q <= 64
  for (auto [p, m] : std::vector<std::pair<int, int>>{
           {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
           {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}, {7, 2},
           {11, 1}, {13, 1}, {61, 1}}) {
    FF F(p, m);
    const long q = F.q();
    bool ok = true;
    for (long a = 0; a < q && ok; ++a) {
      ffel x = static_cast<ffel>(a);
      ok = ok && F.add(x, 0) == x && F.mul(x, 1) == x && F.add(x, F.neg(x)) == 0;
      if (a) ok = ok && F.mul(x, F.inv(x)) == 1;
      for (long b = 0; b < q && ok; ++b) {
        ffel y = static_cast<ffel>(b);
        ok = ok && F.add(x, y) == F.add(y, x) && F.mul(x, y) == F.mul(y, x);
        for (long c = 0; c < q && ok; ++c) {
          ffel z = static_cast<ffel>(c);
          ok = ok && F.add(F.add(x, y), z) == F.add(x, F.add(y, z)) &&
               F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)) &&
               F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z));
        }
      }
    }
    INFO("GF(" << p << "^" << m << ")");
    REQUIRE(ok);
  }
}

TEST_CASE("basic arithmetic spot values") {
  FF F2(2, 1);
  REQUIRE(F2.add(1, 1) == 0);

  FF F3(3, 1);
  REQUIRE(F3.inv(2) == 2);  // 2*2 = 4 = 1

  // GF(4) has modulus x^2 + x + 1; omega * omega = omega + 1
  FF F4(2, 2);
  REQUIRE(F4.modulus() == IntPoly{1, 1, 1});
  ffel omega = 2;  // encoding of x
  REQUIRE(F4.mul(omega, omega) == F4.add(omega, 1));
}

TEST_CASE("modulus is the lexicographically smallest monic irreducible") {
  REQUIRE(FF(3, 2).modulus() == IntPoly{1, 0, 1});   // x^2 + 1
  REQUIRE(FF(2, 3).modulus() == IntPoly{1, 1, 0, 1});  // x^3 + x + 1
}

TEST_CASE("frobenius is additive, multiplicative and fixes the prime field") {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {3, 2}, {5, 2}}) {
    FF F(p, m);
    long q = F.q();
    auto frobq = [&](ffel x) {  // x -> x^q, the relative Frobenius over GF(q) itself
      ffel r = x;
      for (int i = 0; i < m; ++i) r = F.frobenius(r);
      return r;
    };
    for (long a = 0; a < q; ++a) {
      ffel x = static_cast<ffel>(a);
      REQUIRE(frobq(x) == x);  // x^q = x in GF(q)
      for (long b = 0; b < q; ++b) {
        ffel y = static_cast<ffel>(b);
        REQUIRE(F.frobenius(F.add(x, y)) == F.add(F.frobenius(x), F.frobenius(y)));
        REQUIRE(F.frobenius(F.mul(x, y)) == F.mul(F.frobenius(x), F.frobenius(y)));
      }
    }
    for (int a = 0; a < p; ++a) REQUIRE(F.frobenius(F.from_int(a)) == F.from_int(a));
  }
}

TEST_CASE("kernel bases annihilate the matrix and rank-nullity holds") {
  auto F = make_field(2);
  SECTION("identity has empty kernel") {
    auto M = FFMatrix::identity(F, 4);
    REQUIRE(kernel_basis(M).empty());
    REQUIRE(rank_of(M) == 4);
  }
  SECTION("zero 2x2 matrix over GF(2) has kernel of dimension 2") {
    FFMatrix M(F, 2, 2);
    REQUIRE(kernel_basis(M).size() == 2);
  }
  SECTION("[[1,1],[1,1]] over GF(2) has kernel {(1,1)}") {
    FFMatrix M(F, 2, 2);
    M.at(0, 0) = M.at(0, 1) = M.at(1, 0) = M.at(1, 1) = 1;
    auto K = kernel_basis(M);
    REQUIRE(K.size() == 1);
    REQUIRE(K[0] == FFVec{1, 1});
  }
  SECTION("random-ish matrices: rank + nullity = cols, kernel vectors annihilate") {
    auto F9 = make_field(3, 2);
    for (int seed = 0; seed < 20; ++seed) {
      FFMatrix M(F9, 4, 5);
      long s = seed * 7919 + 13;
      for (auto& x : M.a) {
        s = (s * 1103515245 + 12345) % 2147483648;
        x = static_cast<ffel>(s % 9);
      }
      auto K = kernel_basis(M);
      REQUIRE(rank_of(M) + static_cast<int>(K.size()) == 5);
      for (const auto& v : K) {
        auto img = M.apply(v);
        for (ffel x : img) REQUIRE(x == 0);
      }
    }
  }
}

TEST_CASE("minimal polynomials via Krylov iteration") {
  auto F = make_field(2);
  SECTION("identity operator gives X - 1") {
    FFVec id{1, 0};
    auto f = min_poly(F, id, [&](const FFVec& v) { return v; });
    REQUIRE(f == FFPoly{1, 1});  // X + 1 = X - 1 over GF(2)
  }
  SECTION("zero element gives X") {
    FFVec id{1, 0};
    auto f = min_poly(F, id, [&](const FFVec&) { return FFVec{0, 0}; });
    REQUIRE(f == FFPoly{0, 1});
  }
}

TEST_CASE("distinct roots by exhaustive evaluation") {
  auto F3 = FF(3, 1);
  // X^2 - X
  REQUIRE(distinct_roots_in_field(F3, FFPoly{0, 2, 1}) == std::vector<ffel>{0, 1});
  // X^3 - X has all of GF(3)
  REQUIRE(distinct_roots_in_field(F3, FFPoly{0, 2, 0, 1}) == std::vector<ffel>{0, 1, 2});
  auto F2 = FF(2, 1);
  // X^2 + X + 1 has no roots in GF(2)
  REQUIRE(distinct_roots_in_field(F2, FFPoly{1, 1, 1}).empty());
}

TEST_CASE("solve_linear finds exact solutions") {
  auto F = make_field(5);
  FFMatrix M(F, 2, 2);
  M.at(0, 0) = 2; M.at(0, 1) = 3;
  M.at(1, 0) = 1; M.at(1, 1) = 1;
  FFVec b{1, 2};
  auto x = solve_linear(M, b);
  REQUIRE(x.has_value());
  REQUIRE(M.apply(*x) == b);

  // inconsistent system
  FFMatrix S(F, 2, 1);
  S.at(0, 0) = 1; S.at(1, 0) = 1;
  REQUIRE_FALSE(solve_linear(S, FFVec{1, 2}).has_value());
}
