/* Intertwining and divided-difference operators on CharSeries.
 *
 * Everything is built from one monomial primitive.  For i in {0,...,n} let
 * M_i be the "affine simple root monomial":
 *      i >= 1 :  M_i = X_{alpha_i}                     (q-power 0)
 *      i  = 0 :  M_0 = q^{sigma} X_{-theta}
 * with sigma = +1 in the multiplicative convention (q = e^delta, where
 * X_0 = q X_theta^{-1}) and sigma = -1 on the character side (q = e^{-delta}).
 * For a monomial X_b q^s put k = (b, alpha_i^vee) for i >= 1 and
 * k = level - (b, theta) for i = 0 (level = 0 in the multiplicative
 * convention; the Demazure chains act on level -1 characters).
 *
 * Then  s_i(X_b q^s) = X_b q^s M_i^{-k}  and the geometric primitive
 *      geo = (X_{alpha_i} - 1)^{-1} (s_i - 1)
 * acts by
 *      geo(X_b q^s) = - sum_{m=1..k}    X_b q^s M_i^{-m}   (k > 0)
 *                   = + sum_{m=0..-k-1} X_b q^s M_i^{ m}   (k < 0)
 *                   = 0                                    (k = 0).
 * Derived operators:
 *      T_i       = t_i^{1/2} s_i + (t_i^{1/2} - t_i^{-1/2}) geo
 *      T-dag_i   = 1 + X_{alpha_i} geo          (idempotent divided difference)
 *      T-dag'_i  = X_{alpha_i} geo              (= T-dag_i - 1)
 *      T-bar'_i  = 1 - geo
 */

#pragma once

#include "char_series.hpp"

namespace macq {

/* t-parameters: t_nu^{1/2} = r^{m_nu} for a base rational r, keeping all
 * half-integral powers of t_short/t_long rational. */
struct TParam {
        mpq_class r;
        int mshort = 1;
        int mlong = 1;

        int mexp(int nuv) const { return nuv == 1 ? mshort : mlong; }
        /* t_nu^{e} for e in (1/2)Z: r^{2 m e} */
        mpq_class tpow(int nuv, Frac e) const {
                Frac p = Frac(2 * mexp(nuv)) * e;
                long long k = p.as_integer();
                mpq_class out = 1;
                mpq_class base = k >= 0 ? r : mpq_class(1) / r;
                for (long long i = 0; i < std::llabs(k); ++i)
                        out *= base;
                return out;
        }
        mpq_class thalf(int nuv) const { return tpow(nuv, Frac(1, 2)); }
};

struct OpConv {
        int qsign;   /* sigma above: +1 multiplicative, -1 character side */
        long long level;
};
inline constexpr OpConv kMultiplicative{+1, 0};
inline constexpr OpConv kCharacter{-1, -1};

/* weight and q-shift of M_i */
struct StepMono {
        Weight w;
        Frac q;
};
inline StepMono step_monomial(const RootSystem& rs, int i, const OpConv& cv) {
        if (i >= 1)
                return {rs.root_to_weight(RootA{[&] {
                                RootA e(rs.n, 0);
                                e[i - 1] = 1;
                                return e;
                        }()}),
                        Frac(0)};
        return {wneg(rs.theta_w), Frac(cv.qsign)};
}

inline long long step_pairing(const RootSystem& rs, int i, const Weight& b,
                              const OpConv& cv) {
        if (i >= 1)
                return b[i - 1];
        return cv.level - rs.pair_root(b, rs.theta);
}

/* the geometric primitive, monomial by monomial */
inline CharSeries geo(const RootSystem& rs, int i, const CharSeries& f,
                      const OpConv& cv) {
        StepMono M = step_monomial(rs, i, cv);
        CharSeries out;
        for (const auto& [b, s] : f.m) {
                long long k = step_pairing(rs, i, b, cv);
                if (k > 0) {
                        Weight w = b;
                        Frac sh(0);
                        for (long long m = 1; m <= k; ++m) {
                                w = wsub(w, M.w);
                                sh -= M.q;
                                out.add_series(w, -s.shifted(sh));
                        }
                }
                else if (k < 0) {
                        Weight w = b;
                        Frac sh(0);
                        for (long long m = 0; m < -k; ++m) {
                                out.add_series(w, s.shifted(sh));
                                w = wadd(w, M.w);
                                sh += M.q;
                        }
                }
        }
        out.trim();
        return out;
}

inline CharSeries s_affine(const RootSystem& rs, int i, const CharSeries& f,
                           const OpConv& cv) {
        StepMono M = step_monomial(rs, i, cv);
        CharSeries out;
        for (const auto& [b, s] : f.m) {
                long long k = step_pairing(rs, i, b, cv);
                Weight w = b;
                Frac sh(0);
                for (long long m = 0; m < std::llabs(k); ++m)
                        if (k > 0) {
                                w = wsub(w, M.w);
                                sh -= M.q;
                        }
                        else {
                                w = wadd(w, M.w);
                                sh += M.q;
                        }
                out.add_series(w, s.shifted(sh));
        }
        out.trim();
        return out;
}

/* Hecke operator T_i (multiplicative convention), i in {0..n} */
inline CharSeries hecke_T(const RootSystem& rs, int i, const CharSeries& f,
                          const TParam& t) {
        int nuv = i == 0 ? 1 : rs.nu[i - 1];
        mpq_class th = t.thalf(nuv);
        CharSeries out = s_affine(rs, i, f, kMultiplicative).scaled(th);
        out += geo(rs, i, f, kMultiplicative).scaled(th - mpq_class(1) / th);
        return out;
}

/* multiply by M_i */
inline CharSeries mul_step(const RootSystem& rs, int i, const CharSeries& f,
                           const OpConv& cv) {
        StepMono M = step_monomial(rs, i, cv);
        CharSeries out;
        for (const auto& [b, s] : f.m)
                out.add_series(wadd(b, M.w), s.shifted(M.q));
        return out;
}

/* idempotent Demazure operator on characters (level -1 for i = 0) */
inline CharSeries demazure_T(const RootSystem& rs, int i, const CharSeries& f) {
        return f + mul_step(rs, i, geo(rs, i, f, kCharacter), kCharacter);
}

/* (T-dag_i)' = X_{alpha_i} geo, finite i only (orbit recursion) */
inline CharSeries tdag_prime(const RootSystem& rs, int i, const CharSeries& f) {
        return mul_step(rs, i, geo(rs, i, f, kMultiplicative), kMultiplicative);
}

/* (T-bar_i)' = 1 - geo, finite i only */
inline CharSeries tbar_prime(const RootSystem& rs, int i, const CharSeries& f) {
        return f - geo(rs, i, f, kMultiplicative);
}

/* --------- evaluations --------- */

/* p_nu(z) = (1/2) sum_{alpha>0, nu_alpha = nu} (alpha^vee, z) */
inline Frac p_nu(const RootSystem& rs, int nuv, const Weight& z) {
        Frac s(0);
        for (size_t k = 0; k < rs.pos.size(); ++k)
                if (rs.pos_nu[k] == nuv)
                        s += Frac(rs.pair_coroot(z, rs.pos[k]));
        return s / Frac(2);
}

/* X_a(q^{rho_k}) = prod_nu t_nu^{p_nu(a)} as a pure t-number */
inline mpq_class eval_rho(const RootSystem& rs, const TParam& t, const Weight& a,
                          int sign = +1) {
        mpq_class out = 1;
        std::set<int> nus(rs.pos_nu.begin(), rs.pos_nu.end());
        for (int nuv : nus) {
                Frac p = p_nu(rs, nuv, a);
                out *= t.tpow(nuv, sign > 0 ? p : -p);
        }
        return out;
}

/* evaluate f at X_a -> q^{(a,c)} * prod_nu t_nu^{tsign p_nu(u(a))} where u is
 * a finite Weyl matrix (pass identity for plain rho_k shifts). */
inline QSeries eval_at(const RootSystem& rs, const CharSeries& f, const Weight& c,
                       const TParam& t, const Mat& u, int tsign) {
        QSeries out = QSeries::zero(f.cut());
        for (const auto& [a, s] : f.m) {
                Frac e = rs.pair(a, c);
                mpq_class coef = eval_rho(rs, t, mat_apply(u, a), tsign);
                out += s.shifted(e, coef);
        }
        return out.truncated(f.cut());
}

} /* namespace macq */
