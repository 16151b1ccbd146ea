/* Macdonald polynomials at a generic rational t-point, built as joint
 * eigenfunctions of the commuting translation operators.
 *
 * For each fundamental weight omega_i the group element t_{omega_i} has a
 * greedy reduced decomposition  s_{i_1} ... s_{i_l} pi  ending in a
 * length-zero element; the corresponding operator is
 *      Y_i = T_{i_1} ... T_{i_l} pi        (apply pi first),
 * acting on X-monomials with the multiplicative convention q = e^{delta}.
 * E_b is the eigenvector with
 *      Y_i E_b = X_i(q^{-b_sharp}) E_b,   b_sharp = b - u_b^{-1}(rho_k),
 * normalized monic at X_b; its support lies in {b} u {c succ b}, so it is
 * found by back-substitution along the sorted support list.  For every
 * target component some Y_i separates the eigenvalues by the q-exponent
 * alone (-(omega_i, c) = -(omega_i, b) for all i forces c = b), so a pivot
 * always exists at a generic t; the full eigenvalue equations for all i are
 * re-verified on the result and any failure is a hard error.
 *
 * The starred family E*_b = star(E_b) (star: X -> X^{-1}, q -> 1/q,
 * t -> 1/t) is produced by the same solve run on the star-conjugates of the
 * elementary operators.  Conjugation by star fixes s_i and the length-zero
 * elements and sends T_i to T_i^{-1} = T_i - (t_i^{1/2} - t_i^{-1/2}) by
 * the quadratic relation, so the starred tower needs no separate operator
 * convention — only the inverse Hecke steps and the starred eigenvalues.
 *
 * Evaluations X_a -> q^{(a,c)} prod_nu t_nu^{-p_nu(u_c(a))} realize the
 * points q^{c_sharp}; c = 0 gives q^{-rho_k}.  The closed product over
 * lambda'(pi_b) for E_b(q^{-rho_k}) and for the diagonal norm, and the
 * normalized constant term <theta mu_circ>, are provided as independent
 * oracles for the evaluation / norm / duality checks.
 */

#pragma once

#include "expansion.hpp"

namespace macq {

class GenericEngine {
 public:
        Engine comb;   /* order/orbit utilities; its t->0 data is unused */
        const RootSystem& rs;
        const WeylGroup& W;
        TParam t;
        Frac D;        /* certification target */
        Frac Dwork;    /* internal cutoff for series division */
        bool starred;  /* build E*_b instead of E_b */

        GenericEngine(char type, int rank, const TParam& tp, Frac qdeg,
                      bool star = false)
            : comb(type, rank, Frac(0)), rs(comb.rs), W(comb.W), t(tp),
              D(qdeg), Dwork(qdeg + Frac(8)), starred(star) {
                for (int i = 1; i <= rs.n; ++i) {
                        Weight om(rs.n, 0);
                        om[i - 1] = 1;
                        words_.push_back(
                            greedy_word(rs, AffW::translation(rs, om)));
                }
        }

        /* Y_i (or its star-conjugate) applied to f */
        CharSeries apply_y(int i, const CharSeries& f) const {
                const AffWord& gw = words_[i - 1];
                CharSeries g = f.act(rs, gw.pi, +1);
                for (auto it = gw.word.rbegin(); it != gw.word.rend(); ++it) {
                        CharSeries h = hecke_T(rs, *it, g, t);
                        if (starred) {
                                int nuv = *it == 0 ? 1 : rs.nu[*it - 1];
                                mpq_class th = t.thalf(nuv);
                                h -= g.scaled(th - mpq_class(1) / th);
                        }
                        g = std::move(h);
                }
                return g;
        }

        /* eigenvalue of Y_i on E_b: X_i(q^{-b_sharp}) as an exact monomial
         * (starred tower: its image under star) */
        QSeries eigenvalue(int i, const Weight& b) const {
                Weight om(rs.n, 0);
                om[i - 1] = 1;
                UB u = compute_ub(rs, b);
                Weight uom = mat_apply(u.mo, om);
                Frac e = -rs.pair(om, b);
                if (starred)
                        return QSeries::monomial(eval_rho(rs, t, uom, -1), -e);
                return QSeries::monomial(eval_rho(rs, t, uom, +1), e);
        }

        const CharSeries& epoly(const Weight& b) {
                auto hit = cache_.find(b);
                if (hit != cache_.end())
                        return hit->second;
                std::vector<Weight> S = comb.succ_set(b);
                int N = (int)S.size();
                auto wc = [&](int k) { return starred ? wneg(S[k]) : S[k]; };
                std::map<Weight, int> pos;
                for (int k = 0; k < N; ++k)
                        pos.emplace(wc(k), k);

                /* columns Y_i(X_{wc(j)}), per needed operator index */
                std::map<int, std::vector<std::vector<QSeries>>> cols;
                auto column_of = [&](int i)
                    -> const std::vector<std::vector<QSeries>>& {
                        auto it = cols.find(i);
                        if (it != cols.end())
                                return it->second;
                        std::vector<std::vector<QSeries>> col(
                            N, std::vector<QSeries>(N));
                        for (int j = 0; j < N; ++j) {
                                CharSeries y = apply_y(
                                    i, CharSeries::monomial(wc(j),
                                                            QSeries::one()));
                                for (const auto& [w, s] : y.m) {
                                        auto p = pos.find(w);
                                        if (p == pos.end())
                                                throw std::logic_error(
                                                    "generic epoly: operator "
                                                    "leaves the support cone");
                                        col[j][p->second] = s;
                                }
                        }
                        return cols.emplace(i, std::move(col)).first->second;
                };

                std::vector<QSeries> a(N);
                a[0] = QSeries::one();
                for (int k = 1; k < N; ++k) {
                        /* a pivot i whose eigenvalues at b and S[k] differ in
                         * the q-exponent; exists whenever S[k] != b */
                        int piv = -1;
                        for (int i = 1; i <= rs.n; ++i) {
                                Weight om(rs.n, 0);
                                om[i - 1] = 1;
                                if (rs.pair(om, S[k]) != rs.pair(om, b)) {
                                        piv = i;
                                        break;
                                }
                        }
                        if (piv < 0)
                                throw std::logic_error(
                                    "generic epoly: no separating operator");
                        const auto& col = column_of(piv);
                        QSeries num = QSeries::zero();
                        for (int j = 0; j < k; ++j)
                                if (!a[j].is_zero() && !col[j][k].is_zero())
                                        num += a[j] * col[j][k];
                        QSeries diff = eigenvalue(piv, b) - col[k][k];
                        if (diff.is_zero())
                                throw std::logic_error(
                                    "generic epoly: spectral collision, "
                                    "retry with another t");
                        a[k] = (num * diff.inverse(Dwork)).truncated(Dwork);
                }

                CharSeries E;
                for (int k = 0; k < N; ++k)
                        if (!(a[k].is_zero() && a[k].cut.is_inf()))
                                E.add_series(wc(k), a[k]);
                /* certify: every eigenvalue equation, all i */
                for (int i = 1; i <= rs.n; ++i) {
                        CharSeries lhs = apply_y(i, E);
                        CharSeries rhs = E.scaled(eigenvalue(i, b));
                        if (!CharSeries::agree(lhs, rhs))
                                throw std::logic_error(
                                    "generic epoly: eigenvalue equation "
                                    "fails on the result");
                }
                return cache_.emplace(b, std::move(E)).first->second;
        }

        /* mu_circ expanded so that every component of positive cone height
         * <= need is exact to the cut.  The geometric factors climb the cone
         * freely at q^0, and descending costs one power of q per unit of
         * theta-height, so intermediates up to need + cut*height(theta) can
         * still fold back into the needed box within the cut. */
        CharSeries measure(Frac cut, long long need) const {
                long long hth = 0;
                for (int x : rs.theta)
                        hth += x;
                return mu_circ_generic(rs, t, cut,
                                       need + cut.floor() * hth);
        }

        /* ---------------- evaluations ---------------- */

        /* f(q^{c_sharp}); c = 0 is the point q^{-rho_k} */
        QSeries eval_point(const CharSeries& f, const Weight& c) const {
                UB u = compute_ub(rs, c);
                return eval_at(rs, f, c, t, u.mo, -1);
        }

        /* closed product for E_b(q^{-rho_k}) — or its star when the tower is
         * starred, using star[(1-q^e t x)/(1-q^e x)] = t^{-1}(1-q^e tx)/(1-q^e x)
         * at x = X_alpha(q^{rho_k}) and star[q^{(rho_k,b_-)}] = t^{-p(b_-)} */
        QSeries eval_norm_closed(const Weight& b) const {
                mpq_class pre =
                    eval_rho(rs, t, comb.bminus(b), starred ? -1 : +1);
                QSeries num = QSeries::monomial(pre, Frac(0), Dwork);
                QSeries den = QSeries::monomial(1, Frac(0), Dwork);
                for (const auto& [k, j] : jb_set(rs, b)) {
                        int nua = rs.pos_nu[k];
                        mpq_class x = eval_rho(
                            rs, t, rs.root_to_weight(rs.pos[k]), +1);
                        mpq_class ta = t.tpow(nua, Frac(1));
                        num *= one_minus(ta * x, Frac((long long)nua * j));
                        den *= one_minus(x, Frac((long long)nua * j));
                        if (starred)
                                num = num.scaled(mpq_class(1) / ta);
                }
                return (num * den.inverse(Dwork)).truncated(Dwork);
        }

        /* closed product for the diagonal norm <E_b, E_b> */
        QSeries norm_closed(const Weight& b) const {
                QSeries num = QSeries::monomial(1, Frac(0), Dwork);
                QSeries den = num;
                for (const auto& [k, j] : jb_set(rs, b)) {
                        int nua = rs.pos_nu[k];
                        mpq_class x = eval_rho(
                            rs, t, rs.root_to_weight(rs.pos[k]), +1);
                        mpq_class ta = t.tpow(nua, Frac(1));
                        Frac e((long long)nua * j);
                        num *= one_minus(x / ta, e);
                        num *= one_minus(x * ta, e);
                        den *= one_minus(x, e);
                        den *= one_minus(x, e);
                }
                return (num * den.inverse(Dwork)).truncated(Dwork);
        }

        /* <theta mu_circ> as the closed double product */
        QSeries mehta_ct(Frac cut) const {
                QSeries r = QSeries::monomial(1, Frac(0), cut);
                for (size_t k = 0; k < rs.pos.size(); ++k) {
                        int nua = rs.pos_nu[k];
                        mpq_class x =
                            eval_rho(rs, t, rs.root_to_weight(rs.pos[k]), +1);
                        mpq_class ta = t.tpow(nua, Frac(1));
                        for (long long j = 1; Frac(nua * j) <= cut; ++j) {
                                Frac e(nua * j);
                                r *= one_minus(x / ta, e);
                                r *= one_minus(x, e).inverse(cut);
                                r = r.truncated(cut);
                        }
                }
                return r;
        }

 private:
        std::vector<AffWord> words_;
        std::map<Weight, CharSeries> cache_;
};

} /* namespace macq */
