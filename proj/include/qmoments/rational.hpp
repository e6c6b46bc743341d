#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qmoments {

/// Exact arbitrary-precision arithmetic. All series coefficients in this
/// library are Rational; nothing is ever rounded. mpq_class keeps values
/// canonical (lowest terms, positive denominator) as long as every value is
/// produced through its arithmetic operators or through make_rational below.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

/// Parse "num/den" or "num" (base 10).
inline Rational rational_from_string(std::string_view s) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(Integer(std::string(s)));
    }
    return make_rational(Integer(std::string(s.substr(0, slash))),
                         Integer(std::string(s.substr(slash + 1))));
}

/// "num/den", or just "num" when the denominator is 1.
inline std::string to_fraction_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// p-adic valuation of a nonzero rational; p must be prime.
inline long p_valuation(const Rational& r, long p) {
    if (r == 0) throw std::invalid_argument("p_valuation: zero argument");
    long v = 0;
    Integer n = r.get_num();
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
        ++v;
    }
    Integer d = r.get_den();
    while (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(p));
        --v;
    }
    return v;
}

/// Reduce a p-integral rational mod p into [0, p). Throws when the
/// denominator is divisible by p.
inline long mod_p(const Rational& r, long p) {
    if (r == 0) return 0;
    Integer den = r.get_den();
    if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)))
        throw std::domain_error("mod_p: denominator divisible by " + std::to_string(p));
    const long num_mod = static_cast<long>(mpz_fdiv_ui(r.get_num().get_mpz_t(),
                                                       static_cast<unsigned long>(p)));
    const long den_mod = static_cast<long>(mpz_fdiv_ui(den.get_mpz_t(),
                                                       static_cast<unsigned long>(p)));
    // den_mod^(p-2) mod p is the inverse for prime p
    long inv = 1, base = den_mod % p, e = p - 2;
    while (e > 0) {
        if (e & 1) inv = (inv * base) % p;
        base = (base * base) % p;
        e >>= 1;
    }
    return (num_mod * inv) % p;
}

inline Integer int_pow(Integer base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace qmoments
