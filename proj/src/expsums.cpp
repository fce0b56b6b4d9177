#include "phi3/expsums.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace phi3 {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

i128 gcd_i128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  return (i128)gcd128((u128)a, (u128)b);
}

template <typename T>
T pairwise_impl(std::span<const T> v) {
  if (v.size() <= 32) {
    T s{};
    for (const T& x : v) s += x;
    return s;
  }
  size_t half = v.size() / 2;
  return pairwise_impl(v.first(half)) + pairwise_impl(v.subspan(half));
}

double frac_mod1_ld(long double t) {
  long double f = t - floorl(t);
  if (f >= 1.0L) f = 0.0L;  // guard against floorl rounding at the boundary
  return (double)f;
}

}  // namespace

RationalMod1 rational_mod1(i128 num, i128 den) {
  if (den == 0) throw std::domain_error("rational_mod1: zero denominator");
  if (den < 0) {
    den = -den;
    num = -num;
  }
  num %= den;
  if (num < 0) num += den;
  i128 g = gcd_i128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (den > (i128)INT64_MAX) throw std::domain_error("rational_mod1: denominator exceeds 2^63");
  return {(i64)num, (i64)den};
}

RationalMod1 add(RationalMod1 a, RationalMod1 b) {
  return rational_mod1((i128)a.num * b.den + (i128)b.num * a.den, (i128)a.den * b.den);
}

double value(RationalMod1 r) { return (double)((long double)r.num / (long double)r.den); }

cdouble unit_phase(double t) {
  double f = t - std::floor(t);
  if (f >= 1.0) f = 0.0;
  return {std::cos(kTwoPi * f), std::sin(kTwoPi * f)};
}

cdouble unit_phase(RationalMod1 t) {
  long double f = (long double)t.num / (long double)t.den;
  long double w = 2.0L * 3.14159265358979323846264338327950288L * f;
  return {(double)cosl(w), (double)sinl(w)};
}

double psi(double t) { return t - std::floor(t) - 0.5; }

double psi_truncated(double t, u64 M) {
  if (M < 2) throw std::domain_error("psi_truncated: M must be >= 2");
  double tr = t - std::floor(t);
  std::vector<double> terms(M);
  for (u64 m = 1; m <= M; ++m) {
    double w = (double)m * tr;
    double f = w - std::floor(w);
    // pairing +-m in -sum e(mt)/(2 pi i m) leaves -sin(2 pi m t)/(pi m)
    terms[m - 1] = -std::sin(kTwoPi * f) / (M_PI * (double)m);
  }
  return pairwise_sum(terms);
}

cdouble pairwise_sum(std::span<const cdouble> terms) { return pairwise_impl(terms); }
double pairwise_sum(std::span<const double> terms) { return pairwise_impl(terms); }

cdouble kloosterman_incomplete(i64 r, i64 h, double alpha, double beta) {
  if (r == 0 || h == 0) throw std::domain_error("kloosterman_incomplete: need h*r != 0");
  u64 rabs = (u64)(r < 0 ? -r : r);
  double len = beta - alpha;
  if (!(len > 0.0) || len > 2.0 * (double)rabs)
    throw std::domain_error("kloosterman_incomplete: need 0 < beta - alpha <= 2|r|");
  i64 x0 = (i64)std::ceil(alpha);
  i64 x1 = (i64)std::floor(beta);
  std::vector<cdouble> terms;
  for (i64 x = x0; x <= x1; ++x) {
    u64 xm = (u64)mod_floor128((i128)x, (i128)rabs);
    if (gcd128(xm, rabs) != 1) continue;
    u64 u = mod_inverse_u(xm, rabs);
    terms.push_back(unit_phase(rational_mod1((i128)h * u, (i128)r)));
  }
  return pairwise_sum(terms);
}

cdouble kloosterman_complete(i64 a, i64 b, u64 c) {
  if (c == 0) throw std::domain_error("kloosterman_complete: c must be positive");
  std::vector<cdouble> terms;
  for (u64 x = 1; x <= c; ++x) {
    if (gcd128(x, c) != 1) continue;
    u64 u = mod_inverse_u(x % c, c);
    terms.push_back(unit_phase(rational_mod1((i128)a * x + (i128)b * u, (i128)c)));
  }
  return pairwise_sum(terms);
}

std::pair<RationalMod1, RationalMod1> reciprocity(i64 A, i64 B) {
  if (A == 0 || B == 0) throw std::domain_error("reciprocity: arguments must be nonzero");
  u64 Aabs = (u64)(A < 0 ? -A : A);
  u64 Babs = (u64)(B < 0 ? -B : B);
  if (gcd128(Aabs, Babs) != 1) throw std::domain_error("reciprocity: arguments must be coprime");
  u64 invA = mod_inverse(A, Babs);
  u64 invB = mod_inverse(B, Aabs);
  RationalMod1 lhs = add(rational_mod1((i128)invA, (i128)B), rational_mod1((i128)invB, (i128)A));
  RationalMod1 rhs = rational_mod1(1, (i128)A * B);
  return {lhs, rhs};
}

cdouble theta_direct(u64 m, u64 D, u64 X) {
  if (m == 0 || D == 0 || X == 0) throw std::domain_error("theta_direct: parameters must be positive");
  const long double sx = sqrtl((long double)X);
  std::vector<cdouble> outer;
  for (u64 d = D; d < 2 * D; ++d) {
    RootSet rs = roots_mod(d);
    if (rs.roots.empty()) continue;
    cdouble head = unit_phase(frac_mod1_ld((long double)m * sx / (long double)d));
    std::vector<cdouble> inner;
    inner.reserve(rs.roots.size());
    for (u64 n : rs.roots) inner.push_back(unit_phase(rational_mod1(-(i128)n * m, (i128)d)));
    outer.push_back(head * pairwise_sum(inner));
  }
  return pairwise_sum(outer);
}

cdouble theta_representation(u64 m, u64 D, u64 X) {
  if (m == 0 || D == 0 || X == 0) throw std::domain_error("theta_representation: parameters must be positive");
  const long double sx = sqrtl((long double)X);
  // u^2+uv+v^2 >= 3u^2/4 and >= 3v^2/4, so both |u|, |v| <= sqrt(8D/3) inside [D, 2D)
  const i64 bound = (i64)isqrt((u128)(8 * D) / 3) + 2;
  std::vector<cdouble> prime_terms, second_terms;
  for (i64 u = 1; u <= bound; ++u) {
    for (i64 v = -bound; v <= bound; ++v) {
      if (v == 0 || u == (v < 0 ? -v : v)) continue;
      i64 f = u * u + u * v + v * v;
      if (f < (i64)D || f >= (i64)(2 * D)) continue;
      if (f % 3 == 0) continue;
      i64 vabs = v < 0 ? -v : v;
      if (std::gcd(u, vabs) != 1) continue;
      RationalMod1 rat;
      if (u < vabs) {
        u64 uinv = mod_inverse(u, (u64)vabs);
        rat = add(rational_mod1(-(i128)m * u, (i128)v * f), rational_mod1((i128)m * uinv, (i128)v));
      } else {
        u64 vinv = mod_inverse(v, (u64)u);
        rat = add(rational_mod1((i128)m * (u + v), (i128)u * f), rational_mod1(-(i128)m * vinv, (i128)u));
      }
      double ph = frac_mod1_ld((long double)m * sx / (long double)f) + value(rat);
      if (ph >= 1.0) ph -= 1.0;
      (u < vabs ? prime_terms : second_terms).push_back(unit_phase(ph));
    }
  }
  return pairwise_sum(prime_terms) + pairwise_sum(second_terms);
}

std::pair<double, double> boundary_sums(u64 D, u64 X) {
  if (D == 0 || X == 0) throw std::domain_error("boundary_sums: parameters must be positive");
  std::vector<double> t1, t2;
  for (u64 d = D; d < 2 * D; ++d) {
    if (d > 3037000499ull) throw std::domain_error("boundary_sums: d^2 exceeds 2^63");
    Factorization fd = factorize(d);
    Factorization fd2;
    fd2.value = (u128)d * d;
    for (auto& [p, e] : fd.factors) fd2.factors.push_back({p, 2 * e});
    RootSet rs = roots_mod((u64)fd2.value, fd2);
    const i128 q = (i128)d * d;
    for (u64 n0 : rs.roots) {
      if (!floor_psi_identity_holds(d, n0, X))
        throw std::logic_error("boundary_sums: counting identity violated");
      i128 neg = mod_floor128(-(i128)n0, q);
      i128 top = mod_floor128((i128)X - (i128)n0, q);
      t1.push_back((double)((long double)neg / (long double)q) - 0.5);
      t2.push_back((double)((long double)top / (long double)q) - 0.5);
    }
  }
  return {pairwise_sum(t1), pairwise_sum(t2)};
}

bool floor_psi_identity_holds(u64 d, u64 root, u64 X) {
  if (d == 0 || d > 3037000499ull) throw std::domain_error("floor_psi_identity_holds: bad d");
  const i128 q = (i128)d * d;
  if (root < 1 || (i128)root > q) throw std::domain_error("floor_psi_identity_holds: root out of range");
  if (((u128)root * root + root + 1) % (u128)q != 0)
    throw std::domain_error("floor_psi_identity_holds: not a root mod d^2");
  // multiply the identity through by q = d^2; all terms are integers
  i128 lhs = floor_div128((i128)X - (i128)root, q) - floor_div128(-(i128)root, q);
  i128 rhs = (i128)X + mod_floor128(-(i128)root, q) - mod_floor128((i128)X - (i128)root, q);
  return lhs * q == rhs;
}

}  // namespace phi3
