#include "qmoments/classnum.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qmoments {

Integer class_number(const Integer& discriminant) {
    if (discriminant >= 0 || (discriminant % 4 != 0 && ((discriminant % 4) + 4) % 4 != 1))
        throw std::invalid_argument("class_number: discriminant must be negative, 0 or 1 mod 4");
    const Integer abs_d = -discriminant;
    Integer count = 0;
    for (Integer a = 1; 3 * a * a <= abs_d; ++a) {
        for (Integer b = -a + 1; b <= a; ++b) {
            const Integer num = b * b + abs_d;  // b^2 - D
            if (num % (4 * a) != 0) continue;
            const Integer c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && (c == a)) continue;  // |b| = a excluded by b > -a already
            Integer g = gcd(gcd(a, abs(b)), c);
            if (g != 1) continue;
            ++count;
        }
    }
    return count;
}

bool is_fundamental_discriminant(const Integer& d) {
    if (d >= 0) return false;
    auto squarefree = [](Integer v) {
        if (v < 0) v = -v;
        for (Integer p = 2; p * p <= v; ++p) {
            if (v % (p * p) == 0) return false;
        }
        return true;
    };
    const long rem = static_cast<long>(((d % 4) + 4) % 4);
    if (rem == 1) return squarefree(d);
    if (rem == 0) {
        const Integer m = d / 4;
        const long mr = static_cast<long>(((m % 4) + 4) % 4);
        return (mr == 2 || mr == 3) && squarefree(m);
    }
    return false;
}

DiscriminantSplit split_discriminant(std::int64_t n) {
    if (n < 3 || (n % 4 != 0 && n % 4 != 3))
        throw std::invalid_argument("split_discriminant: n must be 0 or 3 mod 4, n >= 3");
    for (std::int64_t f = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n))) + 1;
         f >= 1; --f) {
        if (f * f > n || n % (f * f) != 0) continue;
        const Integer d = Integer(static_cast<long>(-(n / (f * f))));
        if (is_fundamental_discriminant(d)) return {d, Integer(static_cast<long>(f))};
    }
    throw std::logic_error("split_discriminant: no fundamental decomposition found");
}

int legendre_symbol(const Integer& a, const Integer& ell) {
    if (ell <= 2) throw std::invalid_argument("legendre_symbol: ell must be an odd prime");
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), ell.get_mpz_t());
    if (r == 0) return 0;
    Integer e = (ell - 1) / 2;
    Integer pw;
    mpz_powm(pw.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), ell.get_mpz_t());
    return pw == 1 ? 1 : -1;
}

int kronecker_symbol(const Integer& d, const Integer& m) {
    return mpz_kronecker(d.get_mpz_t(), m.get_mpz_t());
}

namespace {

int moebius(std::int64_t n) {
    int mu = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

Integer sigma1(std::int64_t n) {
    Integer s = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        s += d;
        if (d != n / d) s += n / d;
    }
    return s;
}

}  // namespace

Rational hurwitz(std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("hurwitz: n must be >= 1");
    if (n % 4 == 1 || n % 4 == 2) return Rational(0);
    const auto [d, f_big] = split_discriminant(n);
    const std::int64_t f = f_big.get_si();
    const Integer h = class_number(d);
    const long w = d == -3 ? 3 : d == -4 ? 2 : 1;
    Integer total = 0;
    for (std::int64_t div = 1; div <= f; ++div) {
        if (f % div != 0) continue;
        const int mu = moebius(div);
        if (mu == 0) continue;
        total += Integer(mu) * Integer(kronecker_symbol(d, Integer(static_cast<long>(div)))) *
                 sigma1(f / div);
    }
    return make_rational(h * total, Integer(w));
}

std::int64_t three_squares_r(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("three_squares_r: n must be >= 0");
    std::int64_t count = 0;
    for (std::int64_t x = 0; x * x <= n; ++x) {
        for (std::int64_t y = 0; x * x + y * y <= n; ++y) {
            const std::int64_t rem = n - x * x - y * y;
            const std::int64_t z = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rem)));
            for (std::int64_t zz = std::max<std::int64_t>(z - 1, 0); zz <= z + 1; ++zz) {
                if (zz * zz == rem) {
                    std::int64_t mult = 1;
                    mult *= x == 0 ? 1 : 2;
                    mult *= y == 0 ? 1 : 2;
                    mult *= zz == 0 ? 1 : 2;
                    count += mult;
                    break;
                }
            }
        }
    }
    return count;
}

std::vector<std::int64_t> three_squares_table(std::int64_t n) {
    std::vector<std::int64_t> r(static_cast<std::size_t>(n) + 1, 0);
    const std::int64_t lim = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n))) + 1;
    for (std::int64_t x = -lim; x <= lim; ++x)
        for (std::int64_t y = -lim; y <= lim; ++y) {
            const std::int64_t xy = x * x + y * y;
            if (xy > n) continue;
            for (std::int64_t z = -lim; z <= lim; ++z) {
                const std::int64_t s = xy + z * z;
                if (s <= n) ++r[static_cast<std::size_t>(s)];
            }
        }
    return r;
}

Report verify_alpha_class_dictionary(const QSeries& alpha, std::int64_t n_max) {
    Report rep;
    rep.suite = "dictionary";
    rep.parameters["n_max"] = std::to_string(n_max);
    if (alpha.trunc_order() < n_max)
        throw std::invalid_argument("verify_alpha_class_dictionary: alpha series too short");
    const auto r_table = three_squares_table(n_max / 4 + 1);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const Rational lhs = (n % 2 == 0 ? alpha.coeff(n) : -alpha.coeff(n));
        Rational rhs;
        if (n % 4 == 1 || n % 4 == 2) {
            rhs = Rational(-4) * hurwitz(4 * n);
        } else if (n % 8 == 3) {
            rhs = Rational(-24) * hurwitz(n);
        } else if (n % 8 == 7) {
            rhs = Rational(-16) * hurwitz(n);
        } else {  // 4 | n
            rhs = Rational(-16) * hurwitz(n) -
                  make_rational(r_table[static_cast<std::size_t>(n / 4)], 3);
        }
        if (lhs != rhs)
            rep.add_failure("n=" + std::to_string(n), to_fraction_string(rhs),
                            to_fraction_string(lhs));
    }
    return rep;
}

Report verify_three_squares_formula(std::int64_t n_max) {
    Report rep;
    rep.suite = "three-squares";
    rep.parameters["n_max"] = std::to_string(n_max);
    const auto r_table = three_squares_table(n_max);
    // brute-force counts against the cube of the theta series
    const QSeries theta = theta_series(n_max);
    const QSeries theta3 = qs_mul(qs_mul(theta, theta), theta);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        if (Rational(static_cast<long>(r_table[static_cast<std::size_t>(n)])) != theta3.coeff(n))
            rep.add_failure("theta^3 at n=" + std::to_string(n),
                            to_fraction_string(theta3.coeff(n)),
                            std::to_string(r_table[static_cast<std::size_t>(n)]));
    }
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const Rational r_n(static_cast<long>(r_table[static_cast<std::size_t>(n)]));
        Rational expected;
        if (n % 4 == 1 || n % 4 == 2) {
            expected = Rational(12) * hurwitz(4 * n);
        } else if (n % 8 == 3) {
            expected = Rational(24) * hurwitz(n);
        } else if (n % 4 == 0) {
            expected = Rational(static_cast<long>(r_table[static_cast<std::size_t>(n / 4)]));
        } else {  // n == 7 (mod 8)
            expected = Rational(0);
        }
        if (r_n != expected)
            rep.add_failure("n=" + std::to_string(n), to_fraction_string(expected),
                            to_fraction_string(r_n));
    }
    return rep;
}

Report verify_hecke_exact(int ell, std::int64_t n_max, const QSeries& alpha) {
    Report rep;
    rep.suite = "hecke-exact";
    rep.parameters["ell"] = std::to_string(ell);
    rep.parameters["n_max"] = std::to_string(n_max);
    if (ell == 2 || ell == 3) throw std::invalid_argument("verify_hecke_exact: ell must avoid 2, 3");
    const std::int64_t ell2 = static_cast<std::int64_t>(ell) * ell;
    if (alpha.trunc_order() < ell2 * n_max)
        throw std::invalid_argument("verify_hecke_exact: alpha series too short");
    for (std::int64_t n = 0; n <= n_max; ++n) {
        Rational lhs = alpha.coeff(ell2 * n);
        lhs += Rational(legendre_symbol(Integer(static_cast<long>(-n)), Integer(ell))) *
               alpha.coeff(n);
        if (n % ell2 == 0) lhs += Rational(ell) * alpha.coeff(n / ell2);
        const Rational rhs = Rational(ell + 1) * alpha.coeff(n);
        if (lhs != rhs)
            rep.add_failure("n=" + std::to_string(n), to_fraction_string(rhs),
                            to_fraction_string(lhs));
    }
    return rep;
}

namespace {

long value_mod3(const Rational& v) {
    return mod_p(v, 3);
}

}  // namespace

Report verify_spt1_alpha_mod3(const QSeries& spt1, const QSeries& alpha, std::int64_t n_max) {
    Report rep;
    rep.suite = "theorem4";
    rep.parameters["n_max"] = std::to_string(n_max);
    if (spt1.trunc_order() < n_max || alpha.trunc_order() < n_max)
        throw std::invalid_argument("verify_spt1_alpha_mod3: series too short");
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const int chi = legendre_symbol(Integer(static_cast<long>(n)), Integer(3));
        const long lhs = value_mod3(spt1.coeff(n));
        const long rhs = ((chi * value_mod3(alpha.coeff(n))) % 3 + 3) % 3;
        if (lhs != rhs)
            rep.add_failure("n=" + std::to_string(n), std::to_string(rhs) + " (mod 3)",
                            std::to_string(lhs) + " (mod 3)");
    }
    return rep;
}

Report verify_hecke_mod3(int ell, std::int64_t n_max, const QSeries& spt1) {
    Report rep;
    rep.suite = "hecke-mod3";
    rep.parameters["ell"] = std::to_string(ell);
    rep.parameters["n_max"] = std::to_string(n_max);
    if (ell == 2 || ell == 3) throw std::invalid_argument("verify_hecke_mod3: ell must avoid 2, 3");
    const std::int64_t ell2 = static_cast<std::int64_t>(ell) * ell;
    if (spt1.trunc_order() < ell2 * n_max)
        throw std::invalid_argument("verify_hecke_mod3: spt1 series too short");
    for (std::int64_t n = 0; n <= n_max; ++n) {
        long lhs = value_mod3(spt1.coeff(ell2 * n));
        lhs += legendre_symbol(Integer(static_cast<long>(-n)), Integer(ell)) *
               value_mod3(spt1.coeff(n));
        if (n % ell2 == 0) lhs += ell * value_mod3(spt1.coeff(n / ell2));
        const long rhs = ((ell + 1) * value_mod3(spt1.coeff(n))) % 3;
        if (((lhs % 3) + 3) % 3 != ((rhs % 3) + 3) % 3)
            rep.add_failure("n=" + std::to_string(n), std::to_string(((rhs % 3) + 3) % 3) + " (mod 3)",
                            std::to_string(((lhs % 3) + 3) % 3) + " (mod 3)");
    }
    return rep;
}

}  // namespace qmoments
