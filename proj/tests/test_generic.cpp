#include <catch2/catch_amalgamated.hpp>

#include "macq/generic_e.hpp"

using namespace macq;

namespace {

std::vector<Weight> by_height(const RootSystem& rs, int hmax) {
        std::vector<Weight> out;
        for (const auto& b : weights_in_ball(rs, Frac(2 * hmax * hmax))) {
                int h = 0;
                for (int l : b)
                        h += std::abs(l);
                if (h <= hmax)
                        out.push_back(b);
        }
        return out;
}

/* ceil of sum |alpha-coordinate|: bounds the cone height of any sum of
 * weights through the triangle inequality, even across P/Q cosets */
long long habs(const RootSystem& rs, const Weight& w) {
        std::vector<Frac> m;
        rs.in_root_lattice(w, &m);
        Frac h(0);
        for (const auto& x : m)
                h += x < Frac(0) ? Frac(0) - x : x;
        return -((Frac(0) - h).floor());
}

/* largest |height bound| over the supports of a family of polynomials */
long long support_height(GenericEngine& G, const std::vector<Weight>& wts) {
        long long h = 0;
        for (const auto& b : wts)
                for (const auto& [w, s] : G.epoly(b).m)
                        h = std::max(h, habs(G.rs, w));
        return h;
}

const TParam kBase{mpq_class(5) / 7, 1, 1};
const TParam kReseed{mpq_class(3) / 5, 2, 1};

} /* namespace */

TEST_CASE("generic eigenfunctions at a rational point") {
        for (const TParam& t : {kBase, kReseed}) {
                GenericEngine G('A', 1, t, Frac(8));
                mpq_class tv = t.tpow(1, Frac(1));
                CHECK(CharSeries::agree(G.epoly({0}), CharSeries::one(1)));
                CHECK(CharSeries::agree(
                    G.epoly({1}),
                    CharSeries::monomial({1}, QSeries::one())));
                /* E_{-1} = X_{-1} + (1-t)/(1-qt) X_1 */
                const CharSeries& E = G.epoly({-1});
                QSeries want = QSeries::monomial(1 - tv, Frac(0)) *
                               one_minus(tv, Frac(1)).inverse(G.Dwork);
                CHECK(QSeries::agree(E.coeff({1}), want));
                CHECK(QSeries::agree(E.coeff({-1}), QSeries::one()));

                /* starred tower: monic at X_{+1}, coefficient is the star */
                GenericEngine Gs('A', 1, t, Frac(8), true);
                const CharSeries& Es = Gs.epoly({-1});
                CHECK(QSeries::agree(Es.coeff({1}), QSeries::one()));
                /* star[(1-t)/(1-qt)] = q(1-1/t)/(q-1/t) = q(t-1)/(qt-1) */
                QSeries wants =
                    QSeries::monomial(1 - mpq_class(1) / tv, Frac(0)) *
                    one_minus(mpq_class(1) / tv, Frac(-1)).inverse(Gs.Dwork);
                CHECK(QSeries::agree(Es.coeff({-1}), wants));
        }
        /* minuscule dominant weights stay monomials in rank two */
        GenericEngine G2('A', 2, kBase, Frac(6));
        CHECK(CharSeries::agree(
            G2.epoly({1, 0}), CharSeries::monomial({1, 0}, QSeries::one())));
        CHECK(CharSeries::agree(
            G2.epoly({0, 1}), CharSeries::monomial({0, 1}, QSeries::one())));
}

TEST_CASE("evaluation at the base point matches the lambda-set product") {
        auto run = [](char ty, int rk, const TParam& t, int hmax) {
                for (bool star : {false, true}) {
                        GenericEngine G(ty, rk, t, Frac(8), star);
                        for (const auto& b : by_height(G.rs, hmax)) {
                                CAPTURE(ty, rk, star, b);
                                QSeries lhs =
                                    G.eval_point(G.epoly(b), Weight(rk, 0));
                                CHECK(QSeries::agree(lhs,
                                                     G.eval_norm_closed(b)));
                        }
                }
        };
        run('A', 1, kBase, 3);
        run('A', 1, kReseed, 3);
        run('A', 2, kBase, 3);
        run('A', 2, kReseed, 3);
}

TEST_CASE("duality of the spherical normalizations") {
        auto run = [](char ty, int rk, const TParam& t, int hmax) {
                GenericEngine G(ty, rk, t, Frac(8));
                auto wts = by_height(G.rs, hmax);
                for (const auto& b : wts)
                        for (const auto& c : wts) {
                                CAPTURE(ty, rk, b, c);
                                /* cross-multiplied:
                                 * E_b(q^{c#}) N_c = E_c(q^{b#}) N_b */
                                QSeries lhs = G.eval_point(G.epoly(b), c) *
                                              G.eval_norm_closed(c);
                                QSeries rhs = G.eval_point(G.epoly(c), b) *
                                              G.eval_norm_closed(b);
                                CHECK(QSeries::agree(lhs, rhs));
                        }
        };
        run('A', 1, kBase, 3);
        run('A', 1, kReseed, 3);
        run('A', 2, kBase, 3);
        run('A', 2, kReseed, 2);
}

TEST_CASE("norm formula and biorthogonality against the measure") {
        auto run = [](char ty, int rk, const TParam& t, int hmax) {
                Frac D(8), Dmu = D + Frac(2);
                GenericEngine G(ty, rk, t, D);
                GenericEngine Gs(ty, rk, t, D, true);
                auto wts = by_height(G.rs, hmax);
                long long need =
                    support_height(G, wts) + support_height(Gs, wts);
                CharSeries mu = G.measure(Dmu, need);
                for (const auto& b : wts)
                        for (const auto& c : wts) {
                                CAPTURE(ty, rk, b, c);
                                QSeries lhs = ct_triple(G.epoly(b),
                                                        Gs.epoly(c), mu);
                                REQUIRE(lhs.cut >= D);
                                QSeries want = b == c ? G.norm_closed(b)
                                                      : QSeries::zero(D);
                                CHECK(QSeries::agree(lhs.truncated(D),
                                                     want.truncated(D)));
                        }
        };
        run('A', 1, kBase, 3);
        run('A', 1, kReseed, 3);
        run('A', 2, kBase, 3);
        run('A', 2, kReseed, 2);
}

TEST_CASE("theta constant term and the two expansion identities") {
        auto run = [](char ty, int rk, const TParam& t, int hmax) {
                Frac D(8), Dmu = D + Frac(2);
                GenericEngine G(ty, rk, t, D);
                GenericEngine Gs(ty, rk, t, D, true);
                auto wts = by_height(G.rs, hmax);
                CharSeries th = theta(G.rs, Dmu);
                long long hth = 0;
                for (const auto& [w, s] : th.m)
                        hth = std::max(hth, habs(G.rs, w));
                long long need = support_height(G, wts) +
                                 support_height(Gs, wts) + hth;
                CharSeries mu = G.measure(Dmu, need);

                /* the normalized constant term equals the closed product */
                QSeries M = G.mehta_ct(Dmu);
                CHECK(QSeries::agree(ct_against(th, mu), M));

                Twist triv = Twist::trivial(G.rs);
                Twist sgn = Twist::signchar(G.rs);
                for (const Twist* v : {&triv, &sgn}) {
                        CharSeries thv = theta(G.rs, Dmu, v);
                        for (const auto& b : wts)
                                for (const auto& c : wts) {
                                        CAPTURE(ty, rk, b, c);
                                        Weight bm = G.comb.bminus(b);
                                        Weight cm = G.comb.bminus(c);
                                        Frac en = (G.rs.norm2(bm) +
                                                   G.rs.norm2(cm)) /
                                                  Frac(2);
                                        mpq_class tf = eval_rho(
                                            G.rs, t, wadd(bm, cm), -1);
                                        QSeries scale =
                                            (QSeries::monomial(tf, en) *
                                             G.eval_norm_closed(b) * M);
                                        /* plain-plain pairing */
                                        QSeries lhs = ct_triple(
                                                          G.epoly(b).mul(
                                                              G.epoly(c)),
                                                          thv, mu)
                                                          .scaled((*v)(
                                                              wadd(b, c)));
                                        QSeries rhs =
                                            G.eval_point(G.epoly(c), b) *
                                            scale;
                                        REQUIRE(lhs.cut >= D);
                                        CHECK(QSeries::agree(
                                            lhs.truncated(D),
                                            rhs.truncated(D)));
                                        /* plain-starred pairing */
                                        QSeries lhs2 =
                                            ct_triple(G.epoly(b).mul(
                                                          Gs.epoly(c)),
                                                      thv, mu)
                                                .scaled((*v)(wsub(b, c)));
                                        QSeries rhs2 =
                                            G.eval_point(Gs.epoly(c), b) *
                                            scale;
                                        REQUIRE(lhs2.cut >= D);
                                        CHECK(QSeries::agree(
                                            lhs2.truncated(D),
                                            rhs2.truncated(D)));
                                }
                }
        };
        run('A', 1, kBase, 2);
        run('A', 1, kReseed, 2);
        run('A', 2, kBase, 2);
        run('A', 2, kReseed, 1);
}
