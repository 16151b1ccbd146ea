/* The two degenerate Macdonald families and their combinatorial shadows.
 *
 * bar family (t -> 0):  constructed by the affine Demazure-operator chain on
 * level -1 characters.  For b with iota(b) = -w0(b) = c, take the greedy
 * reduced decomposition pi_c = s_{i_1} ... s_{i_L} pi_r; start from the
 * one-dimensional character  q^{-(omega_r,omega_r)/2} X_{-omega_r}, apply the
 * idempotent Demazure operators right-to-left, multiply by q^{(b,b)/2} and
 * apply w0.  The result is monic at X_b with coefficients in Z>=0[q].
 *
 * dag family (t -> oo), starred:  E-dag-star_b = sum_d zeta_d X_{-d} is cut
 * out by orthogonality against the bar family under the bar measure,
 *      < Ebar_d  E-dag-star_b  mu-circ >  =  delta_{d b} h0_d,
 * which is triangular in the refined order "prec" because the monomial basis
 * is unitriangular over the dag basis.  The solve runs at cutoff D+2 and the
 * result is certified complete when the top window (D, D+2] is empty; the
 * independent orbit recursion route cross-checks this.
 *
 * h0_b = prod over the simple-root entries [alpha_i, j] of lambda'(pi_b) of
 * (1 - q_i^j); equivalently the maltese-count product (asserted equal).
 */

#pragma once

#include <cassert>
#include <optional>

#include "mu_theta.hpp"

namespace macq {

class Engine {
 public:
        RootSystem rs;
        WeylGroup W;
        Frac D;        /* user cutoff */
        Frac Dwork;    /* internal solve cutoff = D + 2 */
        CharSeries muc; /* mu-bar-circ at Dwork */

        Engine(char type, int rank, Frac qdeg)
            : rs(type, rank), W(rs), D(qdeg), Dwork(qdeg + Frac(2)),
              muc(mu_bar_circ(rs, qdeg + Frac(2))) {}

        /* ---------------- order utilities ---------------- */

        Weight bminus(const Weight& b) const { return compute_ub(rs, b).bminus; }
        Weight iota(const Weight& b) const {
                return wneg(mat_apply(W.mo[W.w0], b));
        }

        /* strict refined order b prec c */
        bool prec(const Weight& b, const Weight& c) const {
                Weight bm = bminus(b), cm = bminus(c);
                Weight d = wsub(cm, bm);
                if (!is_zero(d))
                        return rs.in_Qplus(d);
                Weight e = wsub(c, b);
                return !is_zero(e) && rs.in_Qplus(e);
        }

        std::vector<Weight> orbit(const Weight& b) const {
                std::set<Weight> out;
                for (int g = 0; g < W.size(); ++g)
                        out.insert(mat_apply(W.mo[g], b));
                return {out.begin(), out.end()};
        }

        /* S(b) = {b} u {c : c succ b}, finite, sorted compatibly with prec:
         * primary key height(c_- - b_-), secondary height(c - c_-). */
        std::vector<Weight> succ_set(const Weight& b) const {
                Weight bm = bminus(b);
                std::vector<Weight> out;
                for (const auto& mu : weights_in_ball(rs, rs.norm2(bm))) {
                        if (!rs.antidominant(mu))
                                continue;
                        Weight d = wsub(mu, bm);
                        if (!rs.in_Qplus(d))
                                continue;
                        for (const auto& c : orbit(mu))
                                if (c == b || prec(b, c))
                                        out.push_back(c);
                }
                std::sort(out.begin(), out.end(),
                          [&](const Weight& x, const Weight& y) {
                                  long long hx1 = rs.q_height(wsub(bminus(x), bm));
                                  long long hy1 = rs.q_height(wsub(bminus(y), bm));
                                  if (hx1 != hy1)
                                          return hx1 < hy1;
                                  long long hx2 = rs.q_height(wsub(x, bminus(x)));
                                  long long hy2 = rs.q_height(wsub(y, bminus(y)));
                                  if (hx2 != hy2)
                                          return hx2 < hy2;
                                  return x < y;
                          });
                return out;
        }

        /* ---------------- norms h0 ---------------- */

        QSeries h0(const Weight& b) const {
                QSeries p = QSeries::one();
                for (const auto& [k, j] : jb_set(rs, b)) {
                        /* keep only simple-root entries */
                        const RootA& m = rs.pos[k];
                        int ones = 0, idx = -1;
                        for (int i = 0; i < rs.n; ++i) {
                                if (m[i] == 1) {
                                        ++ones;
                                        idx = i;
                                }
                                else if (m[i] != 0)
                                        ones += 2;
                        }
                        if (ones == 1)
                                p *= one_minus(1, Frac(rs.nu[idx] * j));
                }
                return p;
        }

        /* maltese-count recipe for the same product */
        QSeries h0_maltese(const Weight& b) const {
                UB u = compute_ub(rs, b);
                Mat uainv = mat_id(rs.n);
                for (auto it = u.word.rbegin(); it != u.word.rend(); ++it)
                        uainv = mat_mul(uainv, srefl_mat_alpha(rs, *it));
                QSeries p = QSeries::one();
                for (int i = 0; i < rs.n; ++i) {
                        RootA e(rs.n, 0);
                        e[i] = 1;
                        RootA img = mat_apply(uainv, e);
                        bool pos = false;
                        for (int x : img)
                                if (x != 0) {
                                        pos = x > 0;
                                        break;
                                }
                        long long cnt = -u.bminus[i] - (pos ? 0 : 1);
                        for (long long j = 1; j <= cnt; ++j)
                                p *= one_minus(1, Frac(rs.nu[i] * j));
                }
                return p;
        }

        /* ---------------- bar family ---------------- */

        /* graded character of the thin Demazure module attached to b:
         * idempotent divided differences along the greedy affine word of
         * pi_b, seeded with the one-dimensional character of the terminal
         * length-zero element. */
        CharSeries gch_demazure(const Weight& b) const {
                AffWord gw = greedy_word(rs, pi_element(rs, b));
                const Weight& om = gw.pi.t; /* omega_r or 0 */
                CharSeries f = CharSeries::monomial(
                    wneg(om), QSeries::monomial(1, -(rs.norm2(om) / Frac(2))));
                for (auto wit = gw.word.rbegin(); wit != gw.word.rend(); ++wit)
                        f = demazure_T(rs, *wit, f);
                return f;
        }

        const CharSeries& ebar(const Weight& b) {
                auto it = ebar_cache_.find(b);
                if (it != ebar_cache_.end())
                        return it->second;
                CharSeries f = gch_demazure(iota(b))
                                   .shifted_q(rs.norm2(b) / Frac(2))
                                   .act_lin(W.mo[W.w0]);
                /* sanity: monic at X_b, coefficients in Z>=0[q], support
                 * inside {b} u {c succ b} */
                for (const auto& [w, s] : f.m) {
                        if (w == b) {
                                if (!(s.c.size() == 1 && s.coeff(Frac(0)) == 1))
                                        throw std::logic_error("ebar: not monic");
                                continue;
                        }
                        if (!prec(b, w))
                                throw std::logic_error("ebar: support outside cone");
                        for (const auto& [e, v] : s.c)
                                if (e < Frac(0) || v < 0 ||
                                    v.get_den() != 1)
                                        throw std::logic_error("ebar: bad coefficient");
                }
                return ebar_cache_.emplace(b, std::move(f)).first->second;
        }

        /* Independent reconstruction of Ebar_b that never touches the
         * Demazure chain: the true polynomial X_b + sum_{c succ b} a_c X_c
         * pairs to zero with X_{-d} under mu-circ for every d succ b
         * (the monomial basis is unitriangular over the dag-star basis and
         * the pairing is diagonal on bar x dag-star).  Restricting d to
         * S(b)\{b} gives a square system whose matrix
         *      N[d][c] = coeff of X_{d-c} in mu-circ
         * has constant term supported on d - c in Q+, hence is unipotent
         * upper-triangular once the unknowns are sorted by cone height. */
        CharSeries ebar_orthogonal(const Weight& b) {
                std::vector<Weight> m;
                for (const auto& c : succ_set(b))
                        if (!(c == b))
                                m.push_back(c);
                std::sort(m.begin(), m.end(),
                          [&](const Weight& x, const Weight& y) {
                                  long long hx = rs.q_height(wsub(x, b));
                                  long long hy = rs.q_height(wsub(y, b));
                                  if (hx != hy)
                                          return hx < hy;
                                  return x < y;
                          });
                int n = (int)m.size();
                auto N = [&](const Weight& c, const Weight& d) {
                        return muc.coeff(wsub(d, c)).truncated(Dwork);
                };
                std::vector<std::vector<QSeries>> A(n, std::vector<QSeries>(n));
                std::vector<QSeries> rhs(n);
                for (int k = 0; k < n; ++k) {
                        for (int j = 0; j < n; ++j)
                                A[k][j] = N(m[j], m[k]);
                        rhs[k] = -N(b, m[k]);
                }
                for (int k = 0; k < n; ++k) {
                        QSeries inv = A[k][k].inverse(Dwork);
                        for (int j = k; j < n; ++j)
                                A[k][j] = (A[k][j] * inv).truncated(Dwork);
                        rhs[k] = (rhs[k] * inv).truncated(Dwork);
                        for (int r = 0; r < n; ++r) {
                                if (r == k)
                                        continue;
                                QSeries f = A[r][k];
                                if (f.is_zero())
                                        continue;
                                for (int j = k; j < n; ++j)
                                        A[r][j] = (A[r][j] - f * A[k][j])
                                                      .truncated(Dwork);
                                rhs[r] = (rhs[r] - f * rhs[k]).truncated(Dwork);
                        }
                }
                CharSeries out = CharSeries::monomial(
                    b, QSeries::monomial(1, Frac(0), Dwork));
                for (int j = 0; j < n; ++j)
                        out.add_series(m[j], rhs[j]);
                out.trim();
                return out;
        }

        /* ---------------- dag family (starred) ---------------- */

        /* < Ebar_d X_{-d2} mu-circ > */
        const QSeries& pairing_bar_mono(const Weight& d, const Weight& d2) {
                auto key = std::make_pair(d, d2);
                auto it = pair_cache_.find(key);
                if (it != pair_cache_.end())
                        return it->second;
                const CharSeries& eb = ebar(d);
                QSeries r = QSeries::zero(Dwork);
                for (const auto& [a, s] : eb.m) {
                        QSeries mu = muc.coeff(wsub(d2, a));
                        if (!mu.c.empty())
                                r += s * mu;
                }
                r = r.truncated(Dwork);
                return pair_cache_.emplace(key, std::move(r)).first->second;
        }

        const CharSeries& edag_star(const Weight& b) {
                auto it = edag_cache_.find(b);
                if (it != edag_cache_.end())
                        return it->second;
                std::vector<Weight> S = succ_set(b);
                std::map<Weight, QSeries> zeta;
                zeta[b] = QSeries::one();
                for (const auto& d2 : S) {
                        if (d2 == b)
                                continue;
                        QSeries acc = QSeries::zero(Dwork);
                        for (const auto& d : S) {
                                if (d == d2 || zeta.find(d) == zeta.end())
                                        continue;
                                if (!(d == b) && !prec(d, d2))
                                        continue;
                                if (d == b || prec(d, d2))
                                        acc += zeta[d] * pairing_bar_mono(d2, d);
                        }
                        QSeries z = (-acc) * h0(d2).inverse(Dwork);
                        z = z.truncated(Dwork);
                        if (!z.c.empty())
                                zeta[d2] = z;
                }
                /* completion certificate: nothing in the window (D, Dwork] */
                CharSeries out;
                for (auto& [d, z] : zeta) {
                        for (const auto& [e, v] : z.c) {
                                if (e > D)
                                        throw std::logic_error(
                                            "edag_star: cutoff too small to certify");
                                if (v < 0 || v.get_den() != 1 || e < Frac(0))
                                        throw std::logic_error(
                                            "edag_star: coefficient outside Z>=0[q]");
                        }
                        z.cut = Frac::inf(); /* certified complete */
                        out.m.emplace(wneg(d), z);
                }
                out.trim();
                return edag_cache_.emplace(b, std::move(out)).first->second;
        }

        CharSeries edag(const Weight& b) { return edag_star(b).star(); }

        /* independent route: orbit recursion from the antidominant seed.
         *   (c, alpha_i) < 0:
         *   E-dag_{s_i c} = (T-dag')(E-dag_c), divided by (1 - q^{(c,alpha_i)})
         *   when u_c(alpha_i) is simple. */
        CharSeries edag_recursive(const Weight& b) {
                Weight bm = bminus(b);
                std::map<Weight, CharSeries> done;
                done[bm] = edag(bm);
                std::vector<Weight> frontier{bm};
                while (done.find(b) == done.end()) {
                        std::vector<Weight> next;
                        for (const auto& c : frontier)
                                for (int i = 1; i <= rs.n; ++i) {
                                        if (c[i - 1] >= 0)
                                                continue; /* need (c,alpha_i)<0 */
                                        Weight c2 = rs.srefl(i - 1, c);
                                        if (done.count(c2))
                                                continue;
                                        CharSeries f =
                                            tdag_prime(rs, i, done.at(c));
                                        if (uc_alpha_simple(c, i)) {
                                                Frac e((long long)rs.nu[i - 1] *
                                                       c[i - 1]);
                                                QSeries den = one_minus(1, e);
                                                CharSeries g;
                                                for (const auto& [w, s] : f.m)
                                                        g.m.emplace(
                                                            w, s.div_exact(den));
                                                f = std::move(g);
                                        }
                                        done.emplace(c2, std::move(f));
                                        next.push_back(c2);
                                }
                        if (next.empty() && done.find(b) == done.end())
                                throw std::logic_error("edag_recursive: stuck");
                        frontier = std::move(next);
                }
                return done.at(b);
        }

        /* is u_c(alpha_i) a simple root? */
        bool uc_alpha_simple(const Weight& c, int i) const {
                UB u = compute_ub(rs, c);
                Mat ua = mat_id(rs.n);
                for (int k : u.word)
                        ua = mat_mul(ua, srefl_mat_alpha(rs, k));
                RootA e(rs.n, 0);
                e[i - 1] = 1;
                RootA img = mat_apply(ua, e);
                int nz = 0, val = 0;
                for (int x : img) {
                        if (x != 0) {
                                ++nz;
                                val = x;
                        }
                }
                return nz == 1 && val == 1;
        }

        /* ---------------- exponent tables ---------------- */

        /* n_c(a) for all c, a in W(cm), cm antidominant; absent = the orbit
         * monomial vanishes.  Base row read off E-dag-star(cm) (monomiality
         * is a hard assertion), other rows by the wall-crossing recursion. */
        using NRow = std::map<Weight, long long>;
        const std::map<Weight, NRow>& n_table(const Weight& cm_in) {
                Weight cm = bminus(cm_in);
                auto it = ntab_cache_.find(cm);
                if (it != ntab_cache_.end())
                        return it->second;
                std::map<Weight, NRow> tab;
                std::vector<Weight> orb = orbit(cm);
                NRow base;
                const CharSeries& E = edag_star(cm);
                for (const auto& a : orb) {
                        QSeries s = E.coeff(wneg(a));
                        if (s.c.empty())
                                continue;
                        if (s.c.size() != 1 || s.c.begin()->second != 1)
                                throw std::logic_error(
                                    "n_table: orbit coefficient not a monomial");
                        base[a] = -s.c.begin()->first.as_integer();
                }
                tab[cm] = base;
                std::vector<Weight> frontier{cm};
                while (!frontier.empty()) {
                        std::vector<Weight> next;
                        for (const auto& c : frontier)
                                for (int i = 1; i <= rs.n; ++i) {
                                        if (c[i - 1] >= 0)
                                                continue;
                                        Weight c2 = rs.srefl(i - 1, c);
                                        if (tab.count(c2))
                                                continue;
                                        const NRow& rc = tab.at(c);
                                        NRow r2;
                                        for (const auto& a : orb) {
                                                long long pai =
                                                    (long long)rs.nu[i - 1] *
                                                    a[i - 1];
                                                if (pai <= 0)
                                                        continue;
                                                Weight sa = rs.srefl(i - 1, a);
                                                auto ia = rc.find(a);
                                                auto isa = rc.find(sa);
                                                bool ha = ia != rc.end();
                                                bool hsa = isa != rc.end();
                                                if (!hsa)
                                                        continue;
                                                if (ha && ia->second == isa->second)
                                                        continue;
                                                r2[a] = isa->second;
                                        }
                                        tab.emplace(c2, std::move(r2));
                                        next.push_back(c2);
                                }
                        frontier = std::move(next);
                }
                return ntab_cache_.emplace(cm, std::move(tab)).first->second;
        }

        /* m_c(b) = -n_c(u_b^{-1}(c_-)); nullopt encodes q^{-infinity} = 0 */
        std::optional<long long> m_exp(const Weight& c, const Weight& b) {
                Weight cm = bminus(c);
                const auto& tab = n_table(cm);
                UB ub = compute_ub(rs, b);
                int uidx = W.index.at(ub.mo);
                Weight a = mat_apply(W.mo[W.invof[uidx]], cm);
                const NRow& row = tab.at(c);
                auto it = row.find(a);
                if (it == row.end())
                        return std::nullopt;
                return -it->second;
        }

        /* Bruhat indicator sigma_b(a) = [u_a >= u_b] */
        bool sigma(const Weight& b, const Weight& a) {
                int ua = W.index.at(compute_ub(rs, a).mo);
                int ub = W.index.at(compute_ub(rs, b).mo);
                return W.leq(ub, ua);
        }

 private:
        std::map<Weight, CharSeries> ebar_cache_;
        std::map<Weight, CharSeries> edag_cache_;
        std::map<std::pair<Weight, Weight>, QSeries> pair_cache_;
        std::map<Weight, std::map<Weight, NRow>> ntab_cache_;
};

} /* namespace macq */
