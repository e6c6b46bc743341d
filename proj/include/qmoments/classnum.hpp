#pragma once

#include <cstdint>

#include "qmoments/qseries.hpp"
#include "qmoments/report.hpp"

namespace qmoments {

/// Class number of discriminant D < 0 by exhaustive enumeration of reduced
/// binary quadratic forms: |b| <= a <= c, b^2 - 4ac = D, gcd(a,b,c) = 1,
/// with b >= 0 when |b| = a or a = c.
Integer class_number(const Integer& discriminant);

struct DiscriminantSplit {
    Integer fundamental;  // D < 0, D == 0 or 1 (mod 4), fundamental
    Integer conductor;    // f with -n = D f^2
};

/// -n = D f^2 with D a negative fundamental discriminant; requires
/// n == 0 or 3 (mod 4), n >= 3.
DiscriminantSplit split_discriminant(std::int64_t n);

bool is_fundamental_discriminant(const Integer& d);

/// Hurwitz class number by the divisor-sum formula over the conductor:
/// H(n) = h(D)/w(D) * sum_{d | f} mu(d) (D/d) sigma_1(f/d). Zero when
/// n == 1, 2 (mod 4); n = 0 is refused (no identity verified here needs it).
Rational hurwitz(std::int64_t n);

/// #{(x,y,z) in Z^3 : x^2+y^2+z^2 = n} by direct counting.
std::int64_t three_squares_r(std::int64_t n);

/// r(0..n) in one sweep.
std::vector<std::int64_t> three_squares_table(std::int64_t n);

/// Legendre symbol (a/ell) for odd prime ell via Euler's criterion; 0 when
/// ell divides a.
int legendre_symbol(const Integer& a, const Integer& ell);

/// Kronecker symbol with the standard conventions for even lower entry.
int kronecker_symbol(const Integer& d, const Integer& m);

/// Checks the four-case dictionary between the signed rank-parity counts
/// alpha(n) and H(4n)/H(n)/r(n/4), for 1 <= n <= n_max. alpha must carry at
/// least n_max coefficients.
Report verify_alpha_class_dictionary(const QSeries& alpha, std::int64_t n_max);

/// Checks the four-case evaluation of r(n) against class numbers for
/// 1 <= n <= n_max, and r against the cube of the theta series.
Report verify_three_squares_formula(std::int64_t n_max);

/// alpha(l^2 n) + (-n/l) alpha(n) + l alpha(n/l^2) = (l+1) alpha(n) for
/// 0 <= n <= n_max; needs alpha up to l^2 n_max.
Report verify_hecke_exact(int ell, std::int64_t n_max, const QSeries& alpha);

/// spt1(n) == (n/3) alpha(n) (mod 3) for 1 <= n <= n_max.
Report verify_spt1_alpha_mod3(const QSeries& spt1, const QSeries& alpha, std::int64_t n_max);

/// spt1(l^2 n) + (-n/l) spt1(n) + l spt1(n/l^2) == (l+1) spt1(n) (mod 3)
/// for 0 <= n <= n_max; needs spt1 up to l^2 n_max.
Report verify_hecke_mod3(int ell, std::int64_t n_max, const QSeries& spt1);

}  // namespace qmoments
