#include "qmoments/relations.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qmoments/linalg.hpp"
#include "qmoments/quasimod.hpp"

namespace qmoments {

std::string product_name(ProductId id) {
    switch (id) {
        case ProductId::C2C4OverPbar:
            return "C_2*C_4/P";
        case ProductId::C2C6OverPbar:
            return "C_2*C_6/P";
    }
    return "?";
}

std::string TermKey::name() const {
    switch (kind) {
        case Kind::CuspF:
            return "a_F";
        case Kind::Product:
            return product_name(product);
        case Kind::Moment:
            break;
    }
    std::string fam;
    switch (family) {
        case MomentFamily::Rank:
            fam = "N";
            break;
        case MomentFamily::M2Rank:
            fam = "N2";
            break;
        case MomentFamily::Crank1:
            fam = "M";
            break;
        case MomentFamily::Crank2:
            fam = "M2";
            break;
    }
    return fam + "_" + std::to_string(order);
}

NPoly npoly_add(const NPoly& a, const NPoly& b) {
    NPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

NPoly npoly_mul(const NPoly& a, const NPoly& b) {
    if (a.empty() || b.empty()) return {};
    NPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

NPoly npoly_scale(const NPoly& a, const Rational& c) {
    NPoly r = a;
    for (auto& v : r) v *= c;
    return r;
}

Rational npoly_eval(const NPoly& p, std::int64_t n) {
    Rational acc = 0;
    const Rational nn(static_cast<long>(n));
    for (std::size_t i = p.size(); i-- > 0;) {
        acc *= nn;
        acc += p[i];
    }
    return acc;
}

bool npoly_is_zero(const NPoly& p) {
    return std::all_of(p.begin(), p.end(), [](const Rational& c) { return c == 0; });
}

std::string npoly_to_string(const NPoly& p) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        if (!first) os << " + ";
        os << "(" << to_fraction_string(p[i]) << ")";
        if (i == 1) os << "n";
        if (i > 1) os << "n^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

void nf_accumulate(RelationNF& nf, const TermKey& key, const NPoly& poly) {
    if (npoly_is_zero(poly)) return;
    auto [it, inserted] = nf.try_emplace(key, poly);
    if (!inserted) it->second = npoly_add(it->second, poly);
    if (npoly_is_zero(it->second)) nf.erase(key);
}

/// One element of the spanning collection fed to the solver.
struct SpanElement {
    enum class Kind { CrankDeriv, CuspF, Product } kind = Kind::CrankDeriv;
    MomentFamily family = MomentFamily::Crank1;
    int two_j = 0;
    int m = 0;
    ProductId product = ProductId::C2C4OverPbar;

    std::string name() const {
        switch (kind) {
            case Kind::CuspF:
                return "F";
            case Kind::Product:
                return product_name(product);
            case Kind::CrankDeriv:
                break;
        }
        std::string base = (family == MomentFamily::Crank1 ? "C_" : "C2_") +
                           std::to_string(two_j);
        if (m == 1) base = "dq(" + base + ")";
        if (m > 1) base = "dq^" + std::to_string(m) + "(" + base + ")";
        return base;
    }
};

/// Substitute every occurrence of `target` (as a term of `rel.rhs`) by the
/// right side of `sub`, scaled by the coefficient polynomial.
void eliminate_term(SolvedRelation& rel, const SolvedRelation& sub) {
    const auto it = rel.rhs.find(sub.target);
    if (it == rel.rhs.end()) return;
    const NPoly factor = it->second;
    rel.rhs.erase(it);
    for (const auto& [key, poly] : sub.rhs) nf_accumulate(rel.rhs, key, npoly_mul(factor, poly));
}

}  // namespace

std::vector<Substitution> substitutions_mod7_path() {
    return {{MomentFamily::Crank1, 4, 1, ProductId::C2C4OverPbar},
            {MomentFamily::Crank1, 4, 2, ProductId::C2C6OverPbar}};
}

std::vector<Substitution> substitutions_mod5_path() {
    return {{MomentFamily::Crank2, 2, 2, ProductId::C2C4OverPbar}};
}

SolvedRelation reconstruct_relation(int k, RankVariant variant,
                                    const std::vector<Substitution>& subs) {
    if (k < 2) throw std::invalid_argument("reconstruct_relation: k must be >= 2");
    if (k > 4) {
        // 2 * k(k+1)/2 crank functions (+ F) against dimension 33, 49, ...
        const std::int64_t have = static_cast<std::int64_t>(k) * (k + 1) + 1;
        const std::string dim = k <= 6 ? std::to_string(expected_dimension(k)) : ">49";
        throw std::invalid_argument(
            "reconstruct_relation: for k = " + std::to_string(k) + " the collection has only " +
            std::to_string(have) + " functions but the space has dimension " + dim +
            "; no spanning set is available");
    }

    // Spanning collection: delta_q^m C_{2j} for both residual cranks,
    // j + m <= k, with requested substitutions applied; F joins at k = 4.
    std::vector<SpanElement> span;
    for (MomentFamily fam : {MomentFamily::Crank1, MomentFamily::Crank2}) {
        for (int j = 1; j <= k; ++j) {
            for (int m = 0; j + m <= k; ++m) {
                SpanElement el;
                el.kind = SpanElement::Kind::CrankDeriv;
                el.family = fam;
                el.two_j = 2 * j;
                el.m = m;
                for (const auto& s : subs) {
                    if (s.family == fam && s.two_j == 2 * j && s.m == m) {
                        el.kind = SpanElement::Kind::Product;
                        el.product = s.product;
                    }
                }
                span.push_back(el);
            }
        }
    }
    if (k == 4) span.push_back({SpanElement::Kind::CuspF});

    const std::int64_t n_work = 3 * static_cast<std::int64_t>(span.size());
    const std::int64_t margin = 20;
    const std::int64_t depth = n_work + margin;

    const int a = 2 * k;
    const QSeries target = rank_combination(variant, k, depth);

    // expansions of the collection
    const auto crank1 = moment_family(MomentFamily::Crank1, a, depth, depth);
    const auto crank2 = moment_family(MomentFamily::Crank2, a, depth, depth);
    const QSeries pbar_inv = qs_invert(pbar_series(depth));
    auto product_series = [&](ProductId id) {
        const QSeries& left = crank1[2];
        const QSeries& right = id == ProductId::C2C4OverPbar ? crank1[4] : crank1[6];
        return qs_mul(qs_mul(left, right), pbar_inv);
    };

    std::vector<QSeries> expansions;
    for (const auto& el : span) {
        switch (el.kind) {
            case SpanElement::Kind::CuspF:
                expansions.push_back(cusp_f_series(depth));
                break;
            case SpanElement::Kind::Product:
                expansions.push_back(product_series(el.product));
                break;
            case SpanElement::Kind::CrankDeriv: {
                QSeries s = (el.family == MomentFamily::Crank1 ? crank1 : crank2)
                                [static_cast<std::size_t>(el.two_j)];
                for (int i = 0; i < el.m; ++i) s = delta_q(s);
                expansions.push_back(std::move(s));
                break;
            }
        }
    }

    // independence of the substituted collection
    {
        std::vector<Row> rows;
        for (const auto& e : expansions) {
            Row r;
            for (std::int64_t t = 1; t <= n_work; ++t) r.push_back(e.coeff(t));
            rows.push_back(std::move(r));
        }
        if (auto w = find_dependency(rows)) {
            std::ostringstream os;
            os << "reconstruct_relation: collection is linearly dependent: "
               << span[w->row_index].name() << " =";
            for (std::size_t i = 0; i < w->combination.size(); ++i) {
                if (w->combination[i] == 0) continue;
                os << " + (" << to_fraction_string(w->combination[i]) << ")*" << span[i].name();
            }
            throw std::domain_error(os.str());
        }
    }

    // exact solve on exponents 1..n_work, margin re-check after
    RowEchelonSolver solver(span.size());
    for (std::int64_t t = 1; t <= n_work; ++t) {
        Row row;
        row.reserve(span.size() + 1);
        for (const auto& e : expansions) row.push_back(e.coeff(t));
        row.push_back(target.coeff(t));
        if (solver.add_row(std::move(row)) == RowEchelonSolver::AddResult::Inconsistent)
            throw std::domain_error(
                "reconstruct_relation: combination is not in the span (first failure at q^" +
                std::to_string(t) + ")");
    }
    if (!solver.solved())
        throw std::logic_error("reconstruct_relation: solver rank deficient");
    const std::vector<Rational> x = solver.solution();
    for (std::int64_t t = n_work + 1; t <= depth; ++t) {
        Rational acc = 0;
        for (std::size_t i = 0; i < span.size(); ++i) {
            if (x[i] == 0) continue;
            acc += x[i] * expansions[i].coeff(t);
        }
        if (acc != target.coeff(t))
            throw std::domain_error("reconstruct_relation: margin residual nonzero at q^" +
                                    std::to_string(t));
    }

    const MomentFamily rank_family =
        variant == RankVariant::Dyson ? MomentFamily::Rank : MomentFamily::M2Rank;

    // Coefficientwise: lead * N_a(n) + sum_i (plain_i + delta_i * n) N_{a-2i}(n)
    //                = sum over span of x_i * n^{m_i} * (crank moment / a_F / product)(n)
    SolvedRelation rel;
    rel.target = TermKey::moment(rank_family, a);
    rel.residual_checked_to = depth;
    for (std::size_t i = 0; i < span.size(); ++i)
        rel.coordinates.emplace_back(span[i].name(), x[i]);

    const Rational lead = combination_leading_coeff(a);
    const Rational lead_inv = Rational(1) / lead;
    for (std::size_t i = 0; i < span.size(); ++i) {
        if (x[i] == 0) continue;
        TermKey key;
        NPoly poly;
        switch (span[i].kind) {
            case SpanElement::Kind::CuspF:
                key = TermKey::cusp_f();
                poly = {x[i]};
                break;
            case SpanElement::Kind::Product:
                key = TermKey::product_term(span[i].product);
                poly = {x[i]};
                break;
            case SpanElement::Kind::CrankDeriv:
                key = TermKey::moment(span[i].family, span[i].two_j);
                poly.assign(static_cast<std::size_t>(span[i].m) + 1, Rational(0));
                poly[static_cast<std::size_t>(span[i].m)] = x[i];
                break;
        }
        nf_accumulate(rel.rhs, key, npoly_scale(poly, lead_inv));
    }
    for (int i = 1; i <= a / 2 - 1; ++i) {
        NPoly poly = {combination_plain_coeff(a, i), combination_delta_coeff(variant, a, i)};
        nf_accumulate(rel.rhs, TermKey::moment(rank_family, a - 2 * i),
                      npoly_scale(poly, -lead_inv));
    }

    // Eliminate the intermediate rank moments through the lower-k relations.
    if (k >= 3) eliminate_term(rel, reconstruct_relation(2, variant));
    if (k >= 4) eliminate_term(rel, reconstruct_relation(3, variant));
    return rel;
}

bool CongruenceStatement::equivalent_to(const CongruenceStatement& other) const {
    if (p != other.p) return false;
    if (polys.size() != other.polys.size()) return false;
    long unit = 0;
    for (const auto& [key, poly] : polys) {
        const auto it = other.polys.find(key);
        if (it == other.polys.end()) return false;
        const auto& q = it->second;
        const std::size_t len = std::max(poly.size(), q.size());
        for (std::size_t i = 0; i < len; ++i) {
            const long lhs = i < poly.size() ? poly[i] : 0;
            const long rhs = i < q.size() ? q[i] : 0;
            if ((lhs == 0) != (rhs == 0)) return false;
            if (lhs == 0) continue;
            // candidate unit: rhs * lhs^{-1}
            long inv = 1, base = lhs, e = p - 2;
            while (e > 0) {
                if (e & 1) inv = (inv * base) % p;
                base = (base * base) % p;
                e >>= 1;
            }
            const long u = (rhs * inv) % p;
            if (unit == 0)
                unit = u;
            else if (unit != u)
                return false;
        }
    }
    return true;
}

std::string CongruenceStatement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, poly] : polys) {
        if (!first) os << " + ";
        os << "[";
        bool pf = true;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            if (poly[i] == 0) continue;
            if (!pf) os << " + ";
            os << poly[i];
            if (i == 1) os << "n";
            if (i > 1) os << "n^" << i;
            pf = false;
        }
        if (pf) os << "0";
        os << "]*" << key.name();
        first = false;
    }
    os << " == 0 (mod " << p << ")";
    return os.str();
}

CongruenceStatement congruence_reduce(const SolvedRelation& relation, int p) {
    if (p != 3 && p != 5 && p != 7)
        throw std::invalid_argument("congruence_reduce: p must be one of 3, 5, 7");

    // Homogenize: 0 = rhs - target.
    RelationNF nf = relation.rhs;
    nf_accumulate(nf, relation.target, NPoly{Rational(-1)});

    long worst = 0;
    for (const auto& [key, poly] : nf) {
        for (const auto& c : poly) {
            if (c == 0) continue;
            worst = std::max(worst, -p_valuation(c, p));
        }
    }
    if (worst > 1)
        throw std::domain_error(
            "congruence_reduce: a coefficient has a denominator divisible by " +
            std::to_string(p) + "^" + std::to_string(worst) +
            "; the single multiplication by p cannot clear it");
    const Rational scale = worst == 1 ? Rational(static_cast<long>(p)) : Rational(1);

    CongruenceStatement st;
    st.p = p;
    for (const auto& [key, poly] : nf) {
        std::vector<long> reduced(poly.size(), 0);
        bool nonzero = false;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Rational c = poly[i] * scale;
            const long v = c == 0 ? 0 : mod_p(c, p);
            reduced[i] = v;
            nonzero = nonzero || v != 0;
        }
        if (!nonzero) continue;

        TermKey folded = key;
        if (key.kind == TermKey::Kind::Moment) {
            while (folded.order - (p - 1) >= 2) folded.order -= p - 1;
        } else {
            throw std::domain_error("congruence_reduce: non-moment term " + key.name() +
                                    " survives mod " + std::to_string(p));
        }
        auto [it, inserted] = st.polys.try_emplace(folded, reduced);
        if (!inserted) {
            auto& acc = it->second;
            if (acc.size() < reduced.size()) acc.resize(reduced.size(), 0);
            for (std::size_t i = 0; i < reduced.size(); ++i)
                acc[i] = (acc[i] + reduced[i]) % p;
        }
    }
    // drop terms that cancelled during folding
    std::erase_if(st.polys, [](const auto& kv) {
        return std::all_of(kv.second.begin(), kv.second.end(), [](long c) { return c == 0; });
    });
    return st;
}

std::string SolvedRelation::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = "qmoments.solved-relation/1";
    j["target"] = target.name();
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [key, poly] : rhs) {
        nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
        for (const auto& c : poly) coeffs.push_back(to_fraction_string(c));
        terms.push_back({{"term", key.name()}, {"poly", coeffs}});
    }
    j["terms"] = terms;
    nlohmann::ordered_json coords = nlohmann::ordered_json::array();
    for (const auto& [name, value] : coordinates)
        coords.push_back({{"basis", name}, {"value", to_fraction_string(value)}});
    j["coordinates"] = coords;
    j["residual_checked_to"] = residual_checked_to;
    return j.dump(2);
}

std::vector<std::string> diff_against_reference(const SolvedRelation& got,
                                                const SolvedRelation& expected) {
    std::vector<std::string> diffs;
    if (got.target != expected.target)
        diffs.push_back("target " + got.target.name() + " != " + expected.target.name());
    auto describe = [](const TermKey& k, const NPoly& a, const NPoly& b) {
        return k.name() + ": " + npoly_to_string(a) + " != " + npoly_to_string(b);
    };
    for (const auto& [key, poly] : expected.rhs) {
        const auto it = got.rhs.find(key);
        if (it == got.rhs.end()) {
            diffs.push_back("missing term " + key.name());
            continue;
        }
        const NPoly delta = npoly_add(it->second, npoly_scale(poly, Rational(-1)));
        if (!npoly_is_zero(delta)) diffs.push_back(describe(key, it->second, poly));
    }
    for (const auto& [key, poly] : got.rhs) {
        if (!expected.rhs.contains(key)) diffs.push_back("unexpected term " + key.name());
    }
    return diffs;
}

}  // namespace qmoments
