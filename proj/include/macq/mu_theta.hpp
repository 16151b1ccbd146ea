/* Measures and theta functions.
 *
 * bar measure (t -> 0 specialization):
 *      mu-bar = prod_{alpha>0} prod_{j>=0} (1 - X_alpha q_alpha^j)
 *                                          (1 - X_alpha^{-1} q_alpha^{j+1}),
 * with q_alpha = q^{nu_alpha}.  Its constant term is
 * prod_i prod_{j>=1} (1 - q_i^j)^{-1}, and mu-bar-circ = mu-bar / <mu-bar>.
 * Only the j = 0 factors sit at q-degree zero, so the truncated support is
 * finite without any weight window.
 *
 * generic-t measure:
 *      mu = prod_{alpha>0} prod_{j>=0}
 *              (1-X_alpha q_alpha^j)(1-X_alpha^{-1} q_alpha^{j+1})
 *            / (1-t_alpha X_alpha q_alpha^j)(1-t_alpha X_alpha^{-1} q_alpha^{j+1}).
 * The factor 1/(1-t X_alpha) contributes unbounded X-powers at q^0, so the
 * expansion takes an explicit cap on the positive root-cone height; the
 * caller chooses the cap from the weights it will pair against (every
 * negative-direction unit costs at least one power of q).
 *
 * theta_v = sum_b v(b) q^{(b,b)/2} X_b over P (or over a single coset), and
 * theta-hat = theta / <theta mu-circ>; at t -> 0 the normalizer is the
 * eta-like product prod_i prod_{j>=1}(1 - q_i^j).
 */

#pragma once

#include "char_ops.hpp"

namespace macq {

/* all weights with (b,b) <= bound.  Coordinate box from Cauchy-Schwarz:
 * l_i = (b, alpha_i^vee), |alpha_i^vee|^2 = 2/nu_i <= 2, so l_i^2 <= 2(b,b). */
inline std::vector<Weight> weights_in_ball(const RootSystem& rs, Frac bound) {
        std::vector<Weight> out;
        if (bound < Frac(0))
                return out;
        long long L = 0;
        while (Frac((L + 1) * (L + 1)) <= Frac(2) * bound)
                ++L;
        Weight w(rs.n, 0);
        std::function<void(int)> rec = [&](int i) {
                if (i == rs.n) {
                        if (rs.norm2(w) <= bound)
                                out.push_back(w);
                        return;
                }
                for (long long l = -L; l <= L; ++l) {
                        w[i] = (int)l;
                        rec(i + 1);
                }
        };
        rec(0);
        return out;
}

/* prod_{i=1..n} prod_{j=1..} (1 - q^{nu_i j}) truncated at D */
inline QSeries eta_product(const RootSystem& rs, Frac D) {
        QSeries p = QSeries::monomial(1, Frac(0), D);
        for (int i = 0; i < rs.n; ++i)
                for (long long j = 1; Frac(rs.nu[i] * j) <= D; ++j)
                        p *= one_minus(1, Frac(rs.nu[i] * j));
        return p;
}

inline CharSeries mu_bar(const RootSystem& rs, Frac D) {
        CharSeries f = CharSeries::monomial(Weight(rs.n, 0),
                                            QSeries::monomial(1, Frac(0), D));
        for (size_t k = 0; k < rs.pos.size(); ++k) {
                Weight a = rs.root_to_weight(rs.pos[k]);
                long long nua = rs.pos_nu[k];
                for (long long j = 0; Frac(nua * j) <= D; ++j) {
                        CharSeries fac = CharSeries::one(rs.n);
                        fac.add_term(a, Frac(nua * j), -1);
                        CharSeries fac2 = CharSeries::one(rs.n);
                        fac2.add_term(wneg(a), Frac(nua * (j + 1)), -1);
                        f = (f * fac * fac2).truncated(D);
                }
        }
        return f;
}

/* mu-bar normalized to constant term 1 */
inline CharSeries mu_bar_circ(const RootSystem& rs, Frac D) {
        CharSeries f = mu_bar(rs, D);
        QSeries ct = f.ct();
        return f.scaled(ct.inverse(D));
}

/* character of P/Q with values +-1, tabulated on coset labels {0} u minuscule */
struct Twist {
        const RootSystem* rs;
        std::map<int, int> sign; /* coset label -> +-1 */

        static Twist trivial(const RootSystem& R) {
                Twist v{&R, {}};
                v.sign[0] = 1;
                for (int r : R.minuscule)
                        v.sign[r] = 1;
                return v;
        }
        /* the nontrivial sign character when P/Q is cyclic of even order;
         * falls back to trivial when none exists */
        static Twist signchar(const RootSystem& R) {
                /* enumerate +-1 assignments, keep homomorphisms, pick the
                 * first nontrivial one (deterministic order) */
                std::vector<int> labels{0};
                for (int r : R.minuscule)
                        labels.push_back(r);
                int k = (int)labels.size();
                for (int mask = 1; mask < (1 << k); ++mask) {
                        Twist v{&R, {}};
                        bool ok = true;
                        for (int idx = 0; idx < k; ++idx)
                                v.sign[labels[idx]] = (mask >> idx) & 1 ? -1 : 1;
                        if (v.sign[0] != 1)
                                continue;
                        /* homomorphism test on all pairs */
                        for (int a = 0; a < k && ok; ++a)
                                for (int b = 0; b < k && ok; ++b) {
                                        Weight wa(R.n, 0), wb(R.n, 0);
                                        if (labels[a])
                                                wa[labels[a] - 1] = 1;
                                        if (labels[b])
                                                wb[labels[b] - 1] = 1;
                                        int c = R.coset(wadd(wa, wb));
                                        if (v.sign[labels[a]] * v.sign[labels[b]] !=
                                            v.sign[c])
                                                ok = false;
                                }
                        bool nontriv = false;
                        for (auto& [l, s] : v.sign)
                                if (s == -1)
                                        nontriv = true;
                        if (ok && nontriv)
                                return v;
                }
                return trivial(R);
        }

        int operator()(const Weight& b) const { return sign.at(rs->coset(b)); }
};

/* theta_v truncated at D; coset >= 0 restricts to that P/Q coset */
inline CharSeries theta(const RootSystem& rs, Frac D, const Twist* v = nullptr,
                        int coset = -1) {
        CharSeries f;
        for (const auto& b : weights_in_ball(rs, Frac(2) * D)) {
                Frac e = rs.norm2(b) / Frac(2);
                if (e > D)
                        continue;
                if (coset >= 0 && rs.coset(b) != coset)
                        continue;
                int s = v ? (*v)(b) : 1;
                f.add_term(b, e, s);
        }
        for (auto& [w, s] : f.m)
                s.cut = D;
        return f;
}

/* theta-hat at the t->0 point: theta / prod(1-q_i^j) */
inline CharSeries theta_hat(const RootSystem& rs, Frac D, const Twist* v = nullptr,
                            int coset = -1) {
        return theta(rs, D, v, coset).scaled(eta_product(rs, D).inverse(D));
}

/* ---------------- generic t ---------------- */

/* per-root factor as a Laurent series in one variable X_alpha, then lifted;
 * mcap bounds the positive X_alpha powers. */
inline CharSeries mu_generic(const RootSystem& rs, const TParam& t, Frac D,
                             long long hcap) {
        CharSeries f = CharSeries::monomial(Weight(rs.n, 0),
                                            QSeries::monomial(1, Frac(0), D));
        long long th_height = 0;
        for (int x : rs.theta)
                th_height += x;
        for (size_t k = 0; k < rs.pos.size(); ++k) {
                long long h = 0;
                for (int x : rs.pos[k])
                        h += x;
                long long mcap = hcap / h + 1;
                long long nua = rs.pos_nu[k];
                mpq_class ta = t.tpow((int)nua, Frac(1));
                /* factor = prod_j (1-Xq^je)(1-X^{-1}q^{(j+1)e})
                 *               / (1-tXq^{je})(1-tX^{-1}q^{(j+1)e}) */
                std::map<long long, QSeries> fac; /* X_alpha power -> series */
                fac[0] = QSeries::monomial(1, Frac(0), D);
                auto mul_lin = [&](long long xpow, Frac qe, const mpq_class& coef) {
                        /* multiply by (1 + coef X^xpow q^qe) */
                        std::map<long long, QSeries> out = fac;
                        for (const auto& [p, s] : fac) {
                                long long p2 = p + xpow;
                                if (p2 > mcap)
                                        continue;
                                QSeries add = s.shifted(qe).scaled(coef).truncated(D);
                                if (add.c.empty() && add.cut.is_inf())
                                        continue;
                                auto it = out.find(p2);
                                if (it == out.end())
                                        out.emplace(p2, add);
                                else
                                        it->second += add;
                        }
                        fac = std::move(out);
                };
                auto mul_geo = [&](long long xpow, Frac qe, const mpq_class& coef) {
                        /* multiply by 1/(1 - coef X^xpow q^qe): repeated
                         * linear factors of the geometric expansion, capped */
                        long long reps = xpow > 0 ? mcap : (qe > Frac(0)
                                ? D.floor() / std::max(1LL, qe.floor()) + 1
                                : 0);
                        /* (1 - y)^{-1} = prod over nothing — expand directly */
                        std::map<long long, QSeries> out;
                        for (const auto& [p, s] : fac) {
                                mpq_class cpow = 1;
                                for (long long m = 0; m <= reps; ++m) {
                                        long long p2 = p + m * xpow;
                                        Frac e2 = qe * Frac(m);
                                        if (p2 > mcap || e2 > D)
                                                break;
                                        QSeries add =
                                            s.shifted(e2).scaled(cpow).truncated(D);
                                        cpow *= coef;
                                        if (add.c.empty() && add.cut.is_inf())
                                                continue;
                                        auto it = out.find(p2);
                                        if (it == out.end())
                                                out.emplace(p2, add);
                                        else
                                                it->second += add;
                                }
                        }
                        fac = std::move(out);
                };
                for (long long j = 0; Frac(nua * j) <= D; ++j) {
                        mul_lin(1, Frac(nua * j), -1);
                        mul_lin(-1, Frac(nua * (j + 1)), -1);
                        mul_geo(1, Frac(nua * j), ta);
                        mul_geo(-1, Frac(nua * (j + 1)), ta);
                }
                /* lift to CharSeries and fold into the running product.
                 * Partial products are pruned by cone height: the final
                 * height is at most hcap - D*height(theta) and every
                 * negative unit costs at least one power of q, so partial
                 * heights outside [-D*h_theta, hcap] cannot contribute. */
                CharSeries lift;
                Weight aw = rs.root_to_weight(rs.pos[k]);
                for (const auto& [p, s] : fac) {
                        Weight w(rs.n, 0);
                        for (int j = 0; j < rs.n; ++j)
                                w[j] = (int)(p * aw[j]);
                        if (!(s.c.empty() && s.cut.is_inf()))
                                lift.add_series(w, s);
                }
                long long hneg = D.floor() * th_height;
                f = f.mul(lift, [&](const Weight& w) {
                        long long h = rs.q_height(w);
                        return h <= hcap && h >= -hneg;
                });
                f = f.truncated(D);
        }
        return f;
}

inline CharSeries mu_circ_generic(const RootSystem& rs, const TParam& t, Frac D,
                                  long long hcap) {
        CharSeries f = mu_generic(rs, t, D, hcap);
        return f.scaled(f.ct().inverse(D));
}

} /* namespace macq */
