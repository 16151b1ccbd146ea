/* Extended affine Weyl group \hat W = W x P in the twisted normalization.
 *
 * Elements are pairs w = (a, u) = t_a u with a in P and u in W, composing by
 * (a,u)(b,v) = (a + u(b), uv).  The affine roots are [z, m] with z a finite
 * root and level m in nu_z Z; positivity is m > 0, or m = 0 and z > 0.
 * The action is w([z,m]) = [u(z), m - (u(z), a)].
 *
 * The affine simple reflections are s_i = (0, s_i) for i >= 1 and
 * s_0 = t_theta s_theta, with theta the highest short root.  Pi = length-zero
 * elements pi_b = t_b u_b^{-1}; the greedy word routine peels simple
 * reflections off the left and terminates in an element of Pi.
 */

#pragma once

#include "weyl.hpp"

namespace macq {

struct ARoot {
        RootA z;
        long long lev;
        bool positive(const RootSystem& rs) const {
                if (lev != 0)
                        return lev > 0;
                for (int x : z)
                        if (x != 0)
                                return x > 0;
                return false;
        }
};

struct AffW {
        Weight t;  /* translation part, omega-coordinates */
        Mat mo;    /* finite part on omega-coordinates */
        Mat ma;    /* finite part on alpha-coordinates */

        static AffW identity(const RootSystem& rs) {
                return AffW{Weight(rs.n, 0), mat_id(rs.n), mat_id(rs.n)};
        }
        static AffW translation(const RootSystem& rs, const Weight& b) {
                return AffW{b, mat_id(rs.n), mat_id(rs.n)};
        }
        static AffW simple(const RootSystem& rs, int i) {
                if (i >= 1)
                        return AffW{Weight(rs.n, 0), srefl_mat_omega(rs, i - 1),
                                    srefl_mat_alpha(rs, i - 1)};
                /* s_0 = t_theta s_theta */
                int n = rs.n;
                Mat mo = mat_id(n), ma = mat_id(n);
                Weight tw = rs.theta_w;
                for (int j = 0; j < n; ++j) {
                        Weight ej(n, 0);
                        ej[j] = 1;
                        long long k = rs.pair_coroot(ej, rs.theta);
                        for (int r = 0; r < n; ++r)
                                mo[r][j] -= (int)(k * tw[r]);
                }
                for (int j = 0; j < n; ++j) {
                        /* (alpha_j, theta^vee); nu_theta = 1 */
                        long long k = 0;
                        for (int i2 = 0; i2 < n; ++i2)
                                k += (long long)rs.nu[j] * rs.A[j][i2] * rs.theta[i2];
                        for (int r = 0; r < n; ++r)
                                ma[r][j] -= (int)(k * rs.theta[r]);
                }
                return AffW{tw, mo, ma};
        }

        friend AffW operator*(const AffW& a, const AffW& b) {
                return AffW{wadd(a.t, mat_apply(a.mo, b.t)),
                            mat_mul(a.mo, b.mo), mat_mul(a.ma, b.ma)};
        }
        AffW inverse() const {
                /* (a,u)^{-1} = (-u^{-1} a, u^{-1}); matrices invert by power
                 * (finite order) — cheap at these ranks. */
                int n = (int)mo.size();
                Mat id = mat_id(n);
                Mat io = id, ia = id;
                Mat po = mo, pa = ma;
                while (po != id) {
                        io = po;
                        ia = pa;
                        po = mat_mul(po, mo);
                        pa = mat_mul(pa, ma);
                }
                /* io = mo^{order-1} = mo^{-1} (or id when mo == id) */
                AffW r;
                r.mo = io;
                r.ma = ia;
                r.t = wneg(mat_apply(io, t));
                return r;
        }

        Weight act(const Weight& b) const { return wadd(mat_apply(mo, b), t); }
        /* linear part only (for weights considered modulo translation) */
        Weight lin(const Weight& b) const { return mat_apply(mo, b); }

        ARoot act(const RootSystem& rs, const ARoot& r) const {
                ARoot out;
                out.z = mat_apply(ma, r.z);
                out.lev = r.lev - rs.pair_root(t, out.z);
                return out;
        }

        bool is_finite_identity() const { return mo == mat_id((int)mo.size()); }
        friend bool operator==(const AffW& a, const AffW& b) {
                return a.t == b.t && a.mo == b.mo;
        }
};

/* affine simple roots: alpha_0 = [-theta, 1], alpha_i = [alpha_i, 0] */
inline ARoot affine_simple(const RootSystem& rs, int i) {
        if (i == 0) {
                RootA z(rs.n, 0);
                for (int j = 0; j < rs.n; ++j)
                        z[j] = -rs.theta[j];
                return ARoot{z, 1};
        }
        RootA z(rs.n, 0);
        z[i - 1] = 1;
        return ARoot{z, 0};
}

/* l(s_i w) < l(w)  iff  w^{-1}(tilde alpha_i) < 0.
 * With w = (t,u):  w^{-1}([z,m]) = [u^{-1} z, m + (z, t)]. */
inline bool left_descent(const RootSystem& rs, const AffW& w, const AffW& winv,
                         int i) {
        ARoot a = affine_simple(rs, i);
        ARoot b;
        b.z = mat_apply(winv.ma, a.z);
        b.lev = a.lev + rs.pair_root(w.t, a.z);
        return !b.positive(rs);
}

/* lambda(w) = { positive affine roots made negative by w }, enumerated
 * brute-force over bounded levels.  Serves as the length oracle. */
inline std::vector<ARoot> lambda_set(const RootSystem& rs, const AffW& w) {
        std::vector<ARoot> out;
        long long M = 1;
        for (const auto& m : rs.pos) {
                long long p = rs.pair_root(w.t, m);
                M = std::max(M, std::llabs(p) + 1);
        }
        for (const auto& m : rs.pos)
                for (int sign = 0; sign < 2; ++sign) {
                        RootA z = m;
                        if (sign)
                                for (auto& x : z)
                                        x = -x;
                        long long nuz = rs.root_norm2(m) / 2;
                        for (long long j = 0; j <= M; ++j) {
                                ARoot r{z, j * nuz};
                                if (!r.positive(rs))
                                        continue;
                                if (!w.act(rs, r).positive(rs))
                                        out.push_back(r);
                        }
                }
        return out;
}

inline int aff_length(const RootSystem& rs, const AffW& w) {
        return (int)lambda_set(rs, w).size();
}

/* Greedy reduced word: w = s_{i_1} ... s_{i_L} pi with pi length-zero.
 * Returns the word (application order right-to-left, stored left-to-right)
 * and the terminal Pi element. */
struct AffWord {
        std::vector<int> word;
        AffW pi;
};

inline AffWord greedy_word(const RootSystem& rs, AffW w) {
        AffWord out;
        AffW winv = w.inverse();
        for (;;) {
                int found = -1;
                for (int i = 0; i <= rs.n; ++i)
                        if (left_descent(rs, w, winv, i)) {
                                found = i;
                                break;
                        }
                if (found < 0)
                        break;
                out.word.push_back(found);
                w = AffW::simple(rs, found) * w;
                winv = w.inverse();
        }
        out.pi = w;
        return out;
}

/* pi_b = t_b u_b^{-1}; u_b from the finite greedy descent. */
inline AffW pi_element(const RootSystem& rs, const Weight& b) {
        UB u = compute_ub(rs, b);
        AffW tb = AffW::translation(rs, b);
        AffW uw;
        uw.mo = u.mo;
        uw.t = Weight(rs.n, 0);
        /* alpha action of u from its word */
        uw.ma = mat_id(rs.n);
        for (int i : u.word)
                uw.ma = mat_mul(uw.ma, srefl_mat_alpha(rs, i));
        return tb * uw.inverse();
}

/* lambda'(pi_b): pairs [alpha, j] with alpha in R_+,
 *   0 < j <  -(b_-, alpha^vee)  when u_b^{-1}(alpha) < 0,
 *   0 < j <= -(b_-, alpha^vee)  when u_b^{-1}(alpha) > 0.
 * Entries are returned as (positive-root index, j). */
inline std::vector<std::pair<int, long long>>
jb_set(const RootSystem& rs, const Weight& b) {
        UB u = compute_ub(rs, b);
        Mat uainv;
        {
                /* alpha action of u_b^{-1}: reversed word */
                uainv = mat_id(rs.n);
                for (auto it = u.word.rbegin(); it != u.word.rend(); ++it)
                        uainv = mat_mul(uainv, srefl_mat_alpha(rs, *it));
        }
        std::vector<std::pair<int, long long>> out;
        for (size_t k = 0; k < rs.pos.size(); ++k) {
                long long top = -rs.pair_coroot(u.bminus, rs.pos[k]);
                RootA img = mat_apply(uainv, rs.pos[k]);
                bool neg = false;
                for (int x : img)
                        if (x != 0) {
                                neg = x < 0;
                                break;
                        }
                long long hi = neg ? top - 1 : top;
                for (long long j = 1; j <= hi; ++j)
                        out.emplace_back((int)k, j);
        }
        return out;
}

} /* namespace macq */
