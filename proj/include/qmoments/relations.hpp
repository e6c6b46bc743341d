#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qmoments/genfun.hpp"
#include "qmoments/qseries.hpp"

namespace qmoments {

/// Named series that may replace a derivative of a crank moment series in
/// the spanning set fed to the relation solver.
enum class ProductId { C2C4OverPbar, C2C6OverPbar };

std::string product_name(ProductId id);

/// A coefficient-space term: the value at n of a moment family, of the cusp
/// companion a_F(n), or of one of the named product series.
struct TermKey {
    enum class Kind { Moment, CuspF, Product };
    Kind kind = Kind::Moment;
    MomentFamily family = MomentFamily::Rank;  // Moment only
    int order = 0;                             // Moment only
    ProductId product = ProductId::C2C4OverPbar;

    static TermKey moment(MomentFamily f, int order_) {
        return TermKey{Kind::Moment, f, order_, ProductId::C2C4OverPbar};
    }
    static TermKey cusp_f() { return TermKey{Kind::CuspF, MomentFamily::Rank, 0, {}}; }
    static TermKey product_term(ProductId id) {
        return TermKey{Kind::Product, MomentFamily::Rank, 0, id};
    }

    std::string name() const;
    auto operator<=>(const TermKey&) const = default;
};

/// Polynomial in n over Rational; index = power of n.
using NPoly = std::vector<Rational>;

NPoly npoly_add(const NPoly& a, const NPoly& b);
NPoly npoly_mul(const NPoly& a, const NPoly& b);
NPoly npoly_scale(const NPoly& a, const Rational& c);
Rational npoly_eval(const NPoly& p, std::int64_t n);
bool npoly_is_zero(const NPoly& p);
std::string npoly_to_string(const NPoly& p);

using RelationNF = std::map<TermKey, NPoly>;

/// target(n) = sum over rhs of poly(n) * term(n), exact for all n.
struct SolvedRelation {
    TermKey target;
    RelationNF rhs;
    std::vector<std::pair<std::string, Rational>> coordinates;  // function-space solve
    std::int64_t residual_checked_to = 0;

    std::string to_json() const;
};

/// Replace occurrences of a derivative delta_q^m of a crank moment series in
/// the spanning collection by a named product series.
struct Substitution {
    MomentFamily family;  // Crank1 or Crank2
    int two_j;
    int m;
    ProductId product;
};

// Substitutions used in the published derivations: the first pair feeds the
// mod-7 path (k = 4), the single replacement feeds the mod-5 path (k = 3).
std::vector<Substitution> substitutions_mod7_path();
std::vector<Substitution> substitutions_mod5_path();

/// Express the quasimodular rank-moment combination (degree a = 2k) in the
/// crank spanning set {delta_q^m C_{2j}} for both residual cranks (plus the
/// cusp companion F when k = 4), then rewrite coefficientwise and eliminate
/// the intermediate rank moments through the lower-k relations, producing
/// the printed normal form: N_{2k}(n) = polynomial-in-n combination of
/// N_2(n) and crank moments. k in {2, 3, 4}; k >= 5 is refused because the
/// collection is smaller than the space it would need to span.
SolvedRelation reconstruct_relation(int k, RankVariant variant,
                                    const std::vector<Substitution>& subs = {});

/// A statement sum_i c_i(n) * moment_i(n) == 0 (mod p), coefficients in
/// [0, p).
struct CongruenceStatement {
    int p = 0;
    std::map<TermKey, std::vector<long>> polys;

    /// Equal up to a nonzero scalar mod p.
    bool equivalent_to(const CongruenceStatement& other) const;
    std::string to_string() const;
};

/// Multiply the relation by p^s (s = 0 or 1, chosen from the p-adic
/// valuations; deeper denominators are an error), reduce mod p, and fold
/// moment exponents with m^(p-1) == 1: order k collapses to k - (p-1) while
/// that stays >= 2. Surviving non-moment terms are an error.
CongruenceStatement congruence_reduce(const SolvedRelation& relation, int p);

// Reference coefficient tables for the printed relations and congruences,
// used by the --compare-paper diff and by the tests.
namespace reference {
SolvedRelation k2_dyson();    // N_4 relation
SolvedRelation k2_m2();       // N2_4 relation
SolvedRelation k3_dyson();    // N_6 relation
SolvedRelation k3_m2();       // N2_6 relation
SolvedRelation k4_dyson();    // N_8 relation
CongruenceStatement mod5_crank();      // (2n^2+n+2) M_2 + (n^2+4n+3) M2_2 == 0 (5)
CongruenceStatement mod7_crank();      // (2+6n) M_2 + 6 M_4 + (2+4n) M2_2 == 0 (7)
CongruenceStatement mod5_rank_crank(); // (1-n^2) N2_2 == (2n^2+3) M_2 (5)
CongruenceStatement mod3_m2();         // (2n+2) N2_2 == (2n+2) M2_2 (3)
}  // namespace reference

/// Exact diff between a solved relation and a reference table; empty when
/// coefficients match exactly.
std::vector<std::string> diff_against_reference(const SolvedRelation& got,
                                                const SolvedRelation& expected);

}  // namespace qmoments
