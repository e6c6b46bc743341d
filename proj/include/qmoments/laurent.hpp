#pragma once

#include <cstdint>
#include <map>

#include "qmoments/rational.hpp"

namespace qmoments {

/// Laurent polynomial in z over Rational, stored sparsely as
/// exponent -> coefficient. Crank and rank statistics of objects of size n
/// live in the window [-n, n], so these maps stay small.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& constant) {
        if (constant != 0) terms_[0] = constant;
    }
    static LaurentPoly monomial(const Rational& c, std::int64_t zexp) {
        LaurentPoly p;
        if (c != 0) p.terms_[zexp] = c;
        return p;
    }

    const std::map<std::int64_t, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(std::int64_t zexp) const {
        const auto it = terms_.find(zexp);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(std::int64_t zexp, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(zexp, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    LaurentPoly scaled(const Rational& c) const {
        LaurentPoly r;
        if (c == 0) return r;
        for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
        return r;
    }

    /// Multiply by z^k.
    LaurentPoly shifted(std::int64_t k) const {
        LaurentPoly r;
        for (const auto& [e, v] : terms_) r.terms_[e + k] = v;
        return r;
    }

    /// z d/dz: scales the z^m term by m.
    LaurentPoly delta_z() const {
        LaurentPoly r;
        for (const auto& [e, v] : terms_) {
            if (e == 0) continue;
            r.terms_[e] = v * Rational(static_cast<long>(e));
        }
        return r;
    }

    /// Evaluate at z0 = 1 or z0 = -1.
    Rational eval(int z0) const {
        if (z0 != 1 && z0 != -1) throw std::invalid_argument("LaurentPoly::eval: z0 must be +-1");
        Rational s = 0;
        for (const auto& [e, v] : terms_) {
            if (z0 == 1 || e % 2 == 0)
                s += v;
            else
                s -= v;
        }
        return s;
    }

    std::int64_t min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    std::int64_t max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    bool operator==(const LaurentPoly& o) const = default;

private:
    std::map<std::int64_t, Rational> terms_;
};

}  // namespace qmoments
