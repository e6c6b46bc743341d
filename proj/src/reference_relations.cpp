#include "qmoments/relations.hpp"

// Stored coefficient tables for the published moment relations and their
// mod-p reductions; the solver output is diffed against these exactly.

namespace qmoments::reference {

namespace {

NPoly poly(std::initializer_list<const char*> coeffs) {
    NPoly p;
    for (const char* c : coeffs) p.push_back(rational_from_string(c));
    return p;
}

TermKey N(int k) { return TermKey::moment(MomentFamily::Rank, k); }
TermKey N2(int k) { return TermKey::moment(MomentFamily::M2Rank, k); }
TermKey M(int k) { return TermKey::moment(MomentFamily::Crank1, k); }
TermKey M2(int k) { return TermKey::moment(MomentFamily::Crank2, k); }

}  // namespace

SolvedRelation k2_dyson() {
    SolvedRelation r;
    r.target = N(4);
    r.rhs[N(2)] = poly({"-1", "-8"});
    r.rhs[M(2)] = poly({"-216/77", "24/77"});
    r.rhs[M(4)] = poly({"192/77"});
    r.rhs[M2(2)] = poly({"260/77", "184/77"});
    r.rhs[M2(4)] = poly({"-40/11"});
    return r;
}

SolvedRelation k2_m2() {
    SolvedRelation r;
    r.target = N2(4);
    r.rhs[N2(2)] = poly({"-1", "-2"});
    r.rhs[M(2)] = poly({"-27/77", "3/77"});
    r.rhs[M(4)] = poly({"24/77"});
    r.rhs[M2(2)] = poly({"71/77", "-131/77"});
    r.rhs[M2(4)] = poly({"-16/11"});
    return r;
}

SolvedRelation k3_dyson() {
    SolvedRelation r;
    r.target = N(6);
    r.rhs[N(2)] = poly({"3", "20", "48"});
    r.rhs[M(2)] = poly({"2192796/274505", "123276/7595", "-5185344/1921535"});
    r.rhs[M(4)] = poly({"-445728/54901", "-5730048/384307"});
    r.rhs[M(6)] = poly({"5376/3565"});
    r.rhs[M2(2)] = poly({"-386988/39215", "-54556468/1921535", "-30679392/1921535"});
    r.rhs[M2(4)] = poly({"96204/7843", "1412352/54901"});
    r.rhs[M2(6)] = poly({"-9056/3565"});
    return r;
}

SolvedRelation k3_m2() {
    SolvedRelation r;
    r.target = N2(6);
    r.rhs[N2(2)] = poly({"3", "5", "3"});
    r.rhs[M(2)] = poly({"249003/274505", "36273/83545", "-162042/1921535"});
    r.rhs[M(4)] = poly({"-46014/54901", "-179064/384307"});
    r.rhs[M(6)] = poly({"168/3565"});
    r.rhs[M2(2)] = poly({"-765123/274505", "6826601/1921535", "4805874/1921535"});
    r.rhs[M2(4)] = poly({"39102/7843", "44136/54901"});
    r.rhs[M2(6)] = poly({"-3848/3565"});
    return r;
}

SolvedRelation k4_dyson() {
    SolvedRelation r;
    r.target = N(8);
    r.rhs[N(2)] = poly({"-17", "-112", "-224", "-256"});
    r.rhs[TermKey::cusp_f()] = poly({"15815680/70153149"});
    r.rhs[M(2)] = poly({"-3743678558672/83365325395", "-141447890442736/1750671833295",
                        "-135995781048448/1750671833295", "9269071448192/583557277765"});
    r.rhs[M(4)] = poly({"772193500416/16673065079", "9412063348224/116711455553",
                        "9106119501824/116711455553"});
    r.rhs[M(6)] = poly({"-75923065344/7578665945", "-737849634816/83365325395"});
    r.rhs[M(8)] = poly({"2715648/2125853"});
    r.rhs[M2(2)] = poly({"4640559869932/83365325395", "260410320833296/1750671833295",
                         "345677277049024/1750671833295", "50935374262656/583557277765"});
    r.rhs[M2(4)] = poly({"-1173668372016/16673065079", "-2419446071808/16673065079",
                         "-2390306267136/16673065079"});
    r.rhs[M2(6)] = poly({"130253841984/7578665945", "1671243657216/83365325395"});
    r.rhs[M2(8)] = poly({"-4858240/2125853"});
    return r;
}

CongruenceStatement mod5_crank() {
    CongruenceStatement s;
    s.p = 5;
    s.polys[M(2)] = {2, 1, 2};
    s.polys[M2(2)] = {3, 4, 1};
    return s;
}

CongruenceStatement mod7_crank() {
    CongruenceStatement s;
    s.p = 7;
    s.polys[M(2)] = {2, 6};
    s.polys[M(4)] = {6};
    s.polys[M2(2)] = {2, 4};
    return s;
}

CongruenceStatement mod5_rank_crank() {
    // (1 - n^2) N2_2 == (2n^2 + 3) M_2 (mod 5), homogenized.
    CongruenceStatement s;
    s.p = 5;
    s.polys[N2(2)] = {1, 0, 4};
    s.polys[M(2)] = {2, 0, 3};
    return s;
}

CongruenceStatement mod3_m2() {
    // (2n + 2) N2_2 == (2n + 2) M2_2 (mod 3), homogenized.
    CongruenceStatement s;
    s.p = 3;
    s.polys[N2(2)] = {2, 2};
    s.polys[M2(2)] = {1, 1};
    return s;
}

}  // namespace qmoments::reference
