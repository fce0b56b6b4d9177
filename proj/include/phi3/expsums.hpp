#pragma once

#include <complex>
#include <span>
#include <utility>

#include "phi3/congruence.hpp"

namespace phi3 {

using cdouble = std::complex<double>;

// A rational taken mod 1: reduced, 0 <= num/den < 1. Exact arithmetic for the
// mod-1 phase identities; never compared through floating point.
struct RationalMod1 {
  i64 num = 0;
  i64 den = 1;
  friend bool operator==(const RationalMod1&, const RationalMod1&) = default;
};

RationalMod1 rational_mod1(i128 num, i128 den);
RationalMod1 add(RationalMod1 a, RationalMod1 b);
double value(RationalMod1 r);

// e(t) = exp(2*pi*i*t); the argument is reduced mod 1 before any trig call.
cdouble unit_phase(double t);
cdouble unit_phase(RationalMod1 t);

// psi(t) = {t} - 1/2 (floor convention), range [-1/2, 1/2)
double psi(double t);
// -sum_{1<=|m|<=M} e(mt)/(2 pi i m) = sum_{m=1}^{M} sin(2 pi m t)/(pi m)
double psi_truncated(double t, u64 M);

// Deterministic pairwise (binary tree) reduction; blocks of 32 at the leaves.
cdouble pairwise_sum(std::span<const cdouble> terms);
double pairwise_sum(std::span<const double> terms);

// K(r,h) = sum over x in [alpha, beta], gcd(x, r) = 1, of e(h * inv(x mod |r|) / r).
// Requires hr != 0 and 0 < beta - alpha <= 2|r|.
cdouble kloosterman_incomplete(i64 r, i64 h, double alpha, double beta);

// S(a,b;c) = sum over x mod c, gcd(x,c) = 1, of e((a x + b inv(x))/c)
cdouble kloosterman_complete(i64 a, i64 b, u64 c);

// inv(A mod |B|)/B + inv(B mod |A|)/A = 1/(AB) (mod 1), gcd(A, B) = 1.
// Returns both sides as exact rationals; they must be equal.
std::pair<RationalMod1, RationalMod1> reciprocity(i64 A, i64 B);

// Theta_m = sum_{D <= d < 2D} e(m sqrt(X)/d) * sum_{n in RootSet(d)} e(-n m / d)
cdouble theta_direct(u64 m, u64 D, u64 X);

// Same sum transported to representations: Theta'_m over 0 < u < |v| plus
// Theta''_m over 0 < |v| < u, with the phases rewritten through reciprocity;
// window restricted to d = u^2+uv+v^2 coprime to 3 (the 3 | d summands vanish).
cdouble theta_representation(u64 m, u64 D, u64 X);

// (Sigma1, Sigma2) = sums of psi(-n/d^2) resp. psi((X-n)/d^2) over d in [D, 2D)
// and n in RootSet(d^2). Verifies the exact per-term counting identity
// floor((X-n)/d^2) - floor(-n/d^2) = X/d^2 + psi(-n/d^2) - psi((X-n)/d^2).
std::pair<double, double> boundary_sums(u64 D, u64 X);

// One instance of that identity, checked in exact integer arithmetic.
bool floor_psi_identity_holds(u64 d, u64 root, u64 X);

}  // namespace phi3
