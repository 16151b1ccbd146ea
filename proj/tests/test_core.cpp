/* Base layers: exact fractions, truncated q-series, root systems, finite and
 * affine Weyl groups, and the operator primitives. */

#include <catch2/catch_amalgamated.hpp>

#include "macq/char_ops.hpp"
#include "macq/mu_theta.hpp"

using namespace macq;

TEST_CASE("Frac arithmetic and ordering") {
        REQUIRE(Frac(1, 2) + Frac(1, 3) == Frac(5, 6));
        REQUIRE(Frac(-4, 8) == Frac(-1, 2));
        REQUIRE(Frac(1, 2) < Frac(2, 3));
        REQUIRE(Frac::inf() > Frac(1000000));
        REQUIRE(Frac::inf() + Frac(3) == Frac::inf());
        REQUIRE(min(Frac::inf(), Frac(2)) == Frac(2));
        REQUIRE(Frac(-7, 2).floor() == -4);
        REQUIRE(Frac(7, 2).floor() == 3);
}

TEST_CASE("QSeries ring operations and truncation bookkeeping") {
        QSeries a = QSeries::monomial(1, Frac(0));
        a.add_term(Frac(1), 1); /* 1 + q */
        QSeries b = one_minus(1, Frac(1)); /* 1 - q */
        QSeries p = a * b;
        REQUIRE(p.coeff(Frac(0)) == 1);
        REQUIRE(p.coeff(Frac(1)) == 0);
        REQUIRE(p.coeff(Frac(2)) == -1);
        REQUIRE(p.is_exact());

        /* (1-q)^{-1} to degree 5 */
        QSeries inv = b.inverse(Frac(5));
        for (int k = 0; k <= 5; ++k)
                REQUIRE(inv.coeff(Frac(k)) == 1);
        REQUIRE(inv.cut == Frac(5));
        REQUIRE(QSeries::agree(inv * b, QSeries::one()));

        /* cut of a product: min(cut_a + val_b, cut_b + val_a) */
        QSeries t = QSeries::monomial(1, Frac(2), Frac(7)); /* q^2, cut 7 */
        QSeries prod = inv * t;
        REQUIRE(prod.cut == Frac(7));

        /* exact division with remainder check */
        QSeries f = one_minus(1, Frac(3)); /* 1 - q^3 */
        QSeries g = one_minus(1, Frac(1));
        QSeries q = f.div_exact(g);
        REQUIRE(q.coeff(Frac(0)) == 1);
        REQUIRE(q.coeff(Frac(1)) == 1);
        REQUIRE(q.coeff(Frac(2)) == 1);
        REQUIRE_THROWS(g.div_exact(f));

        /* star on Laurent polynomials */
        QSeries l = QSeries::monomial(3, Frac(-1, 2));
        l.add_term(Frac(2), 5);
        QSeries ls = l.star();
        REQUIRE(ls.coeff(Frac(1, 2)) == 3);
        REQUIRE(ls.coeff(Frac(-2)) == 5);
}

TEST_CASE("Cartan tables match the standard conventions") {
        RootSystem b2('B', 2);
        REQUIRE(b2.A == std::vector<std::vector<int>>{{2, -1}, {-2, 2}});
        REQUIRE(b2.nu == std::vector<int>{2, 1});
        RootSystem c3('C', 3);
        REQUIRE(c3.A[1][2] == -2);
        REQUIRE(c3.A[2][1] == -1);
        REQUIRE(c3.nu == std::vector<int>{1, 1, 2});
        RootSystem g2('G', 2);
        REQUIRE(g2.A == std::vector<std::vector<int>>{{2, -3}, {-1, 2}});
        REQUIRE(g2.nu == std::vector<int>{1, 3});
        RootSystem f4('F', 4);
        REQUIRE(f4.A[2][1] == -2);
        REQUIRE(f4.nu == std::vector<int>{2, 2, 1, 1});

        /* Gram symmetry and short-root normalization */
        for (const RootSystem& rs : {RootSystem('A', 2), b2, g2}) {
                for (int i = 0; i < rs.n; ++i)
                        for (int j = 0; j < rs.n; ++j)
                                REQUIRE(rs.G[i][j] == rs.G[j][i]);
                REQUIRE(rs.root_norm2(rs.theta) == 2);
                REQUIRE(rs.dominant(rs.theta_w));
        }
}

TEST_CASE("positive root counts") {
        REQUIRE(RootSystem('A', 3).pos.size() == 6);
        REQUIRE(RootSystem('B', 2).pos.size() == 4);
        REQUIRE(RootSystem('C', 3).pos.size() == 9);
        REQUIRE(RootSystem('D', 4).pos.size() == 12);
        REQUIRE(RootSystem('G', 2).pos.size() == 6);
        REQUIRE(RootSystem('F', 4).pos.size() == 24);
        REQUIRE(RootSystem('E', 6).pos.size() == 36);
}

TEST_CASE("highest short root") {
        RootSystem b2('B', 2);
        /* B2: theta_s = alpha_1 + alpha_2 */
        REQUIRE(b2.theta == RootA{1, 1});
        RootSystem g2('G', 2);
        REQUIRE(g2.theta == RootA{2, 1});
        RootSystem a2('A', 2);
        REQUIRE(a2.theta == RootA{1, 1});
        RootSystem c2('C', 2);
        /* C2: short roots alpha_1, alpha_1+alpha_2; the dominant one */
        REQUIRE(c2.root_norm2(c2.theta) == 2);
        REQUIRE(c2.dominant(c2.theta_w));
}

TEST_CASE("weight pairings") {
        RootSystem a1('A', 1);
        Weight w{1};
        REQUIRE(a1.norm2(w) == Frac(1, 2));
        RootSystem a2('A', 2);
        Weight rho{1, 1};
        REQUIRE(a2.norm2(rho) == Frac(2));
        REQUIRE(a2.pair(Weight{1, 0}, Weight{0, 1}) == Frac(1, 3));
        /* (omega_i, alpha_j^vee) = delta_ij */
        for (int i = 0; i < 2; ++i) {
                Weight o(2, 0);
                o[i] = 1;
                RootA a1c{1, 0}, a2c{0, 1};
                REQUIRE(a2.pair_coroot(o, a1c) == (i == 0 ? 1 : 0));
                REQUIRE(a2.pair_coroot(o, a2c) == (i == 1 ? 1 : 0));
        }
        RootSystem g2('G', 2);
        /* theta_w of G2 is omega_1 */
        REQUIRE(g2.theta_w == Weight{1, 0});
        REQUIRE(g2.norm2(g2.theta_w) == Frac(2));
}

TEST_CASE("minuscule weights and cosets") {
        REQUIRE(RootSystem('A', 2).minuscule == std::vector<int>{1, 2});
        REQUIRE(RootSystem('B', 2).minuscule == std::vector<int>{2});
        REQUIRE(RootSystem('G', 2).minuscule.empty());
        RootSystem a2('A', 2);
        REQUIRE(a2.coset(Weight{1, 1}) == 0);
        REQUIRE(a2.coset(Weight{1, 0}) == 1);
        REQUIRE(a2.coset(Weight{-1, 0}) == 2); /* -omega_1 = omega_2 mod Q */
        REQUIRE(a2.in_Qplus(Weight{1, 1}));
        REQUIRE_FALSE(a2.in_Qplus(Weight{-1, -1}));
        REQUIRE(a2.q_height(Weight{1, 1}) == 2);
}

TEST_CASE("Weyl group enumeration") {
        RootSystem a2('A', 2);
        WeylGroup W(a2);
        REQUIRE(W.size() == 6);
        REQUIRE(W.len[W.w0] == 3);
        RootSystem b2('B', 2);
        WeylGroup Wb(b2);
        REQUIRE(Wb.size() == 8);
        RootSystem g2('G', 2);
        WeylGroup Wg(g2);
        REQUIRE(Wg.size() == 12);
        REQUIRE(Wg.len[Wg.w0] == 6);
        /* w0 of A2 is -iota */
        Weight w{2, 1};
        Weight img = mat_apply(W.mo[W.w0], w);
        REQUIRE(img == Weight{-1, -2});
        /* inverses */
        for (int g = 0; g < W.size(); ++g)
                REQUIRE(mat_mul(W.mo[g], W.mo[W.invof[g]]) == mat_id(2));
}

TEST_CASE("Bruhat order sanity") {
        RootSystem a2('A', 2);
        WeylGroup W(a2);
        int id = 0;
        for (int g = 0; g < W.size(); ++g) {
                REQUIRE(W.leq(id, g));
                REQUIRE(W.leq(g, W.w0));
                REQUIRE((W.leq(g, g)));
        }
        /* the two simple reflections are incomparable */
        std::vector<int> simples;
        for (int g = 0; g < W.size(); ++g)
                if (W.len[g] == 1)
                        simples.push_back(g);
        REQUIRE(simples.size() == 2);
        REQUIRE_FALSE(W.leq(simples[0], simples[1]));
        REQUIRE_FALSE(W.leq(simples[1], simples[0]));
}

TEST_CASE("u_b is the minimal element with u_b(b) antidominant") {
        for (const char* spec : {"A2", "B2", "G2"}) {
                RootSystem rs(spec[0], spec[1] - '0');
                WeylGroup W(rs);
                for (const auto& b : weights_in_ball(rs, Frac(6))) {
                        UB u = compute_ub(rs, b);
                        REQUIRE(rs.antidominant(u.bminus));
                        REQUIRE(mat_apply(u.mo, b) == u.bminus);
                        int best = -1;
                        for (int g = 0; g < W.size(); ++g)
                                if (mat_apply(W.mo[g], b) == u.bminus &&
                                    (best < 0 || W.len[g] < W.len[best]))
                                        best = g;
                        REQUIRE(W.mo[best] == u.mo);
                        REQUIRE((int)u.word.size() == W.len[best]);
                }
        }
}

TEST_CASE("affine lengths and greedy words") {
        RootSystem a2('A', 2);
        for (const auto& b : weights_in_ball(a2, Frac(4))) {
                AffW tb = AffW::translation(a2, b);
                /* l(t_b) = sum_{alpha>0} |(b, alpha^vee)| */
                long long expect = 0;
                for (const auto& m : a2.pos)
                        expect += std::llabs(a2.pair_coroot(b, m));
                REQUIRE(aff_length(a2, tb) == expect);

                AffWord gw = greedy_word(a2, tb);
                REQUIRE((long long)gw.word.size() == expect);
                REQUIRE(aff_length(a2, gw.pi) == 0);
                /* reconstruct */
                AffW acc = gw.pi;
                for (auto it = gw.word.rbegin(); it != gw.word.rend(); ++it)
                        acc = AffW::simple(a2, *it) * acc;
                REQUIRE(acc == tb);
        }
}

TEST_CASE("pi_b avoids finite inversions and t_b = pi_b u_b") {
        RootSystem b2('B', 2);
        for (const auto& b : weights_in_ball(b2, Frac(4))) {
                AffW pi = pi_element(b2, b);
                /* lambda(pi_b) contains no level-zero roots, and
                 * l(pi_b) = l(t_b) - l(u_b) */
                for (const auto& r : lambda_set(b2, pi))
                        REQUIRE(r.lev != 0);
                REQUIRE(aff_length(b2, pi) ==
                        aff_length(b2, AffW::translation(b2, b)) -
                            (int)compute_ub(b2, b).word.size());
                UB u = compute_ub(b2, b);
                AffW ub;
                ub.t = Weight(b2.n, 0);
                ub.mo = u.mo;
                ub.ma = mat_id(b2.n);
                for (int i : u.word)
                        ub.ma = mat_mul(ub.ma, srefl_mat_alpha(b2, i));
                REQUIRE(pi * ub == AffW::translation(b2, b));
        }
}

TEST_CASE("lambda'(pi_b) has l(pi_b) elements") {
        for (const char* spec : {"A1", "A2", "B2"}) {
                RootSystem rs(spec[0], spec[1] - '0');
                for (const auto& b : weights_in_ball(rs, Frac(5))) {
                        AffW pi = pi_element(rs, b);
                        REQUIRE(jb_set(rs, b).size() == (size_t)aff_length(rs, pi));
                }
        }
}

/* ---------------- operator primitives ---------------- */

static CharSeries xmono(const RootSystem& rs, const Weight& w) {
        return CharSeries::monomial(w, QSeries::one());
}

TEST_CASE("geometric primitive inverts its defining relation") {
        /* (X_{alpha_i} - 1) geo(f) = s_i(f) - f, for both conventions */
        for (const char* spec : {"A2", "B2"}) {
                RootSystem rs(spec[0], spec[1] - '0');
                for (const auto& b : weights_in_ball(rs, Frac(4)))
                        for (int i = 0; i <= rs.n; ++i)
                                for (const OpConv& cv : {kMultiplicative, kCharacter}) {
                                        CharSeries f = xmono(rs, b);
                                        CharSeries g = geo(rs, i, f, cv);
                                        CharSeries lhs =
                                            mul_step(rs, i, g, cv) - g;
                                        CharSeries rhs =
                                            s_affine(rs, i, f, cv) - f;
                                        REQUIRE(CharSeries::agree(lhs, rhs));
                                }
        }
}

TEST_CASE("Demazure operators are idempotent") {
        for (const char* spec : {"A1", "A2", "B2"}) {
                RootSystem rs(spec[0], spec[1] - '0');
                for (const auto& b : weights_in_ball(rs, Frac(4)))
                        for (int i = 0; i <= rs.n; ++i) {
                                CharSeries f = demazure_T(rs, i, xmono(rs, b));
                                REQUIRE(CharSeries::agree(
                                    demazure_T(rs, i, f), f));
                        }
        }
}

TEST_CASE("Hecke quadratic relation (T_i - t^{1/2})(T_i + t^{-1/2}) = 0") {
        TParam t{mpq_class(2, 5), 1, 1};
        for (const char* spec : {"A1", "B2"}) {
                RootSystem rs(spec[0], spec[1] - '0');
                for (const auto& b : weights_in_ball(rs, Frac(3)))
                        for (int i = 0; i <= rs.n; ++i) {
                                int nuv = i == 0 ? 1 : rs.nu[i - 1];
                                mpq_class th = t.thalf(nuv);
                                CharSeries f = xmono(rs, b);
                                CharSeries Tf = hecke_T(rs, i, f, t);
                                CharSeries lhs = hecke_T(rs, i, Tf, t) -
                                                 Tf.scaled(th - mpq_class(1) / th) -
                                                 f;
                                lhs.trim();
                                REQUIRE(lhs.is_zero());
                        }
        }
}

TEST_CASE("braid relations for T_i") {
        TParam t{mpq_class(3, 7), 1, 1};
        auto Ti = [&](const RootSystem& rs, int i, const CharSeries& f) {
                return hecke_T(rs, i, f, t);
        };
        SECTION("A2: T1 T2 T1 = T2 T1 T2") {
                RootSystem rs('A', 2);
                for (const auto& b : weights_in_ball(rs, Frac(3))) {
                        CharSeries f = xmono(rs, b);
                        CharSeries l = Ti(rs, 1, Ti(rs, 2, Ti(rs, 1, f)));
                        CharSeries r = Ti(rs, 2, Ti(rs, 1, Ti(rs, 2, f)));
                        REQUIRE(CharSeries::agree(l, r));
                }
        }
        SECTION("B2: (T1 T2)^2 = (T2 T1)^2") {
                RootSystem rs('B', 2);
                for (const auto& b : weights_in_ball(rs, Frac(3))) {
                        CharSeries f = xmono(rs, b);
                        CharSeries l =
                            Ti(rs, 1, Ti(rs, 2, Ti(rs, 1, Ti(rs, 2, f))));
                        CharSeries r =
                            Ti(rs, 2, Ti(rs, 1, Ti(rs, 2, Ti(rs, 1, f))));
                        REQUIRE(CharSeries::agree(l, r));
                }
        }
        SECTION("A1 affine: T0 T1 acts consistently with translations") {
                /* (T1 T0)(X_b) for b = 0 must equal t^{1/2} * Y-eigenvalue
                 * behaviour checked later; here just exercise i=0 path */
                RootSystem rs('A', 1);
                CharSeries f = xmono(rs, Weight{0});
                CharSeries g = Ti(rs, 0, f);
                REQUIRE_FALSE(g.is_zero());
        }
}

TEST_CASE("bar and dag intertwiner actions on monomials") {
        RootSystem a1('A', 1);
        CharSeries X = xmono(a1, Weight{1});
        CharSeries Xm = xmono(a1, Weight{-1});
        /* Tbar'(X) = X + X^{-1} (pairing k=1) */
        CharSeries tb = tbar_prime(a1, 1, X);
        REQUIRE(CharSeries::agree(tb, X + Xm));
        /* Tbar' fixes X + X^{-1} */
        REQUIRE(CharSeries::agree(tbar_prime(a1, 1, tb), tb));
        /* Tdag'(X_{-1}) = X_1 mod lower; exact: X + 1 - 1? compute */
        CharSeries td = tdag_prime(a1, 1, Xm);
        /* k = -1: geo = X_{-1}, times X_alpha = X_{1}: Tdag'(X^{-1}) = X */
        REQUIRE(CharSeries::agree(td, X));
        /* Tdag'(X) = -X - 1 + ... : k = 1: geo(X) = -X M^{-1} = -X^{-1},
         * mul X_alpha -> -X; so Tdag'(X) = -X */
        REQUIRE(CharSeries::agree(tdag_prime(a1, 1, X), -X));
        /* zero pairing kills both correction terms */
        CharSeries c0 = xmono(a1, Weight{0});
        REQUIRE(geo(a1, 1, c0, kMultiplicative).is_zero());
}

TEST_CASE("mu-bar constant term matches the eta-like product") {
        for (const char* spec : {"A1", "A2", "B2"}) {
                RootSystem rs(spec[0], spec[1] - '0');
                Frac D(8);
                CharSeries mb = mu_bar(rs, D);
                QSeries ct = mb.ct();
                QSeries expect = eta_product(rs, D).inverse(D);
                REQUIRE(QSeries::agree(ct, expect));
                /* normalized measure has constant term 1 */
                CharSeries mc = mu_bar_circ(rs, D);
                REQUIRE(QSeries::agree(mc.ct(), QSeries::one()));
        }
}

TEST_CASE("theta and theta-hat basics") {
        RootSystem a1('A', 1);
        Frac D(4);
        CharSeries th = theta(a1, D);
        /* coefficient of X_n is q^{n^2/4} */
        REQUIRE(QSeries::agree(th.coeff(Weight{2}), QSeries::monomial(1, Frac(1), D)));
        REQUIRE(QSeries::agree(th.coeff(Weight{3}),
                               QSeries::monomial(1, Frac(9, 4), D)));
        /* sign twist */
        Twist sgn = Twist::signchar(a1);
        CharSeries ths = theta(a1, D, &sgn);
        REQUIRE(QSeries::agree(ths.coeff(Weight{1}),
                               QSeries::monomial(-1, Frac(1, 4), D)));
        REQUIRE(QSeries::agree(ths.coeff(Weight{2}), QSeries::monomial(1, Frac(1), D)));
        /* coset split: theta = sum over cosets */
        RootSystem a2('A', 2);
        CharSeries total = theta(a2, D);
        CharSeries sum;
        for (int c : {0, 1, 2})
                sum += theta(a2, D, nullptr, c);
        REQUIRE(CharSeries::agree(total, sum));
        /* <theta mu-bar-circ> = eta product */
        for (const char* spec : {"A1", "A2"}) {
                RootSystem rs(spec[0], spec[1] - '0');
                QSeries lhs = ct_against(theta(rs, Frac(6)), mu_bar_circ(rs, Frac(6)));
                REQUIRE(QSeries::agree(lhs, eta_product(rs, Frac(6))));
        }
}
