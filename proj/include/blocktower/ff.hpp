#pragma once

// Exact arithmetic in GF(p^m) for p^m <= 2^16.  An element is encoded as an
// integer in [0, q) whose base-p digits are the coefficients of its
// polynomial representative, lowest degree first.  Multiplication and
// inversion go through discrete exp/log tables built at construction time,
// so every operation is an exact table lookup.

#include <cstdint>
#include <memory>
#include <sstream>
#include <vector>

#include "blocktower/errors.hpp"

namespace blocktower {

using ffel = std::uint16_t;

// Polynomials over GF(p) as coefficient vectors, lowest degree first.
using IntPoly = std::vector<int>;

namespace detail {

inline void ipoly_trim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int ipoly_deg(const IntPoly& f) { return static_cast<int>(f.size()) - 1; }

inline IntPoly ipoly_mul(const IntPoly& a, const IntPoly& b, int p) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  ipoly_trim(c);
  return c;
}

inline IntPoly ipoly_mod(IntPoly a, const IntPoly& mod, int p) {
  ipoly_trim(a);
  const int dm = ipoly_deg(mod);
  // mod is monic
  while (ipoly_deg(a) >= dm) {
    int shift = ipoly_deg(a) - dm;
    int lead = a.back();
    for (int i = 0; i <= dm; ++i) {
      a[i + shift] = ((a[i + shift] - lead * mod[i]) % p + p) % p;
    }
    ipoly_trim(a);
  }
  return a;
}

// Irreducibility over GF(p) by trial division against every monic polynomial
// of degree <= deg/2.  Exhaustive and deterministic; fine for p^m <= 2^16.
inline bool ipoly_irreducible(const IntPoly& f, int p) {
  const int d = ipoly_deg(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  for (int dd = 1; 2 * dd <= d; ++dd) {
    long nn = 1;
    for (int i = 0; i < dd; ++i) nn *= p;
    for (long code = 0; code < nn; ++code) {
      IntPoly g(dd + 1, 0);
      long c = code;
      for (int i = 0; i < dd; ++i) { g[i] = static_cast<int>(c % p); c /= p; }
      g[dd] = 1;
      if (ipoly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

class FF;
using FieldPtr = std::shared_ptr<const FF>;

class FF {
 public:
  static constexpr long kMaxCard = 1 << 16;

  FF(int p, int m) : p_(p), m_(m) {
    require(p >= 2 && is_prime(p), "field characteristic must be prime");
    require(m >= 1, "extension degree must be positive");
    long q = 1;
    for (int i = 0; i < m; ++i) {
      q *= p;
      require(q <= kMaxCard, "field size exceeds 2^16 cap");
    }
    q_ = q;
    modulus_ = smallest_irreducible(p, m);
    build_tables();
  }

  int p() const { return p_; }
  int m() const { return m_; }
  long q() const { return q_; }

  // Monic irreducible modulus, coefficients over GF(p), lowest degree first,
  // length m+1.  Lexicographically smallest for the given (p, m).
  const IntPoly& modulus() const { return modulus_; }

  ffel zero() const { return 0; }
  ffel one() const { return 1; }

  ffel add(ffel a, ffel b) const {
    if (p_ == 2) return a ^ b;
    long r = 0, mul = 1, x = a, y = b;
    for (int i = 0; i < m_; ++i) {
      r += ((x + y) % p_) * mul;
      x /= p_; y /= p_; mul *= p_;
    }
    return static_cast<ffel>(r);
  }

  ffel neg(ffel a) const {
    if (p_ == 2) return a;
    long r = 0, mul = 1, x = a;
    for (int i = 0; i < m_; ++i) {
      r += ((p_ - x % p_) % p_) * mul;
      x /= p_; mul *= p_;
    }
    return static_cast<ffel>(r);
  }

  ffel sub(ffel a, ffel b) const { return add(a, neg(b)); }

  ffel mul(ffel a, ffel b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  ffel inv(ffel a) const {
    require(a != 0, "inversion of zero field element");
    return exp_[q_ - 1 - log_[a]];
  }

  ffel div(ffel a, ffel b) const { return mul(a, inv(b)); }

  ffel pow(ffel a, long e) const {
    if (a == 0) {
      require(e > 0, "0^e needs e > 0");
      return 0;
    }
    long le = (log_[a] * (e % (q_ - 1)) % (q_ - 1) + (q_ - 1)) % (q_ - 1);
    return exp_[le];
  }

  // x -> x^p, the absolute Frobenius.
  ffel frobenius(ffel a) const { return pow(a, p_); }

  // Image of an integer under Z -> GF(p) -> GF(q).
  ffel from_int(long n) const { return static_cast<ffel>(((n % p_) + p_) % p_); }

  // Coefficients over GF(p), lowest degree first, length m.
  std::vector<int> coeffs(ffel a) const {
    std::vector<int> c(m_);
    long x = a;
    for (int i = 0; i < m_; ++i) { c[i] = static_cast<int>(x % p_); x /= p_; }
    return c;
  }

  ffel from_coeffs(const std::vector<int>& c) const {
    require(static_cast<int>(c.size()) <= m_, "coefficient list longer than degree");
    long v = 0, mul = 1;
    for (int x : c) {
      require(0 <= x && x < p_, "coefficient out of range");
      v += x * mul;
      mul *= p_;
    }
    return static_cast<ffel>(v);
  }

  std::string show(ffel a) const {
    if (m_ == 1) return std::to_string(a);
    std::ostringstream os;
    os << '[';
    auto c = coeffs(a);
    for (int i = 0; i < m_; ++i) os << (i ? "," : "") << c[i];
    os << ']';
    return os.str();
  }

  bool same(const FF& other) const { return p_ == other.p_ && m_ == other.m_; }

  static bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  static IntPoly smallest_irreducible(int p, int m) {
    long nn = 1;
    for (int i = 0; i < m; ++i) nn *= p;
    for (long code = 0; code < nn; ++code) {
      IntPoly f(m + 1, 0);
      long c = code;
      for (int i = 0; i < m; ++i) { f[i] = static_cast<int>(c % p); c /= p; }
      f[m] = 1;
      if (detail::ipoly_irreducible(f, p)) return f;
    }
    throw check_error("no irreducible polynomial found");  // unreachable
  }

  ffel mul_slow(ffel a, ffel b) const {
    IntPoly pa, pb;
    long x = a, y = b;
    for (int i = 0; i < m_; ++i) { pa.push_back(static_cast<int>(x % p_)); x /= p_; }
    for (int i = 0; i < m_; ++i) { pb.push_back(static_cast<int>(y % p_)); y /= p_; }
    IntPoly pc = detail::ipoly_mod(detail::ipoly_mul(pa, pb, p_), modulus_, p_);
    long v = 0, mul = 1;
    for (int c : pc) { v += c * mul; mul *= p_; }
    return static_cast<ffel>(v);
  }

  void build_tables() {
    // Smallest primitive element by encoding order.
    std::vector<long> prime_factors;
    long n = q_ - 1;
    for (long d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime_factors.push_back(d);
        while (n % d == 0) n /= d;
      }
    if (n > 1) prime_factors.push_back(n);

    auto pow_slow = [&](ffel a, long e) {
      ffel r = 1, base = a;
      while (e) {
        if (e & 1) r = mul_slow(r, base);
        base = mul_slow(base, base);
        e >>= 1;
      }
      return r;
    };

    ffel gen = 0;
    for (long a = 1; a < q_; ++a) {
      bool ok = true;
      for (long f : prime_factors)
        if (pow_slow(static_cast<ffel>(a), (q_ - 1) / f) == 1) { ok = false; break; }
      if (ok) { gen = static_cast<ffel>(a); break; }
    }
    check(gen != 0 || q_ == 2, "no multiplicative generator found");
    if (q_ == 2) gen = 1;

    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, 0);
    ffel cur = 1;
    for (long i = 0; i < q_ - 1; ++i) {
      exp_[i] = cur;
      exp_[i + q_ - 1] = cur;
      log_[cur] = i;
      cur = mul_slow(cur, gen);
    }
    check(cur == 1, "generator order mismatch");
  }

  int p_, m_;
  long q_;
  IntPoly modulus_;
  std::vector<ffel> exp_;
  std::vector<long> log_;
};

inline FieldPtr make_field(int p, int m = 1) { return std::make_shared<FF>(p, m); }

// --- polynomials over GF(q), coefficients lowest degree first ---

using FFPoly = std::vector<ffel>;

inline void poly_trim(FFPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int poly_deg(const FFPoly& f) { return static_cast<int>(f.size()) - 1; }

inline ffel poly_eval(const FF& F, const FFPoly& f, ffel x) {
  ffel acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

// All roots of f that lie in the field, by exhaustive evaluation.
// Returned in increasing encoding order.
inline std::vector<ffel> distinct_roots_in_field(const FF& F, const FFPoly& f) {
  require(poly_deg(f) <= 4096, "polynomial degree exceeds cap");
  std::vector<ffel> roots;
  if (f.empty()) return roots;  // zero polynomial: treated as root-free
  for (long a = 0; a < F.q(); ++a)
    if (poly_eval(F, f, static_cast<ffel>(a)) == 0) roots.push_back(static_cast<ffel>(a));
  return roots;
}

}  // namespace blocktower
