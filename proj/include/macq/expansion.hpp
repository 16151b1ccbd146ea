/* Iterated theta-function expansions.
 *
 * One application of a normalized theta function moves a label y to a label z
 * with transfer coefficient (all pre-divided by h0_z)
 *
 *   dag    :  q^{(z- - y-)^2/2 + m_y(z)} / (v(z-y) h0_z)
 *   bar    :  q^{(y- - z-)^2/2 + m_z(y)} / (v(y-z) h0_z)
 *   switch :  sigma_z(u_y^{-1} w0(z-)) q^{(z- + w0 y-)^2/2} / (v(z+y) h0_z),
 *
 * where m is the table exponent (absent = the term vanishes) and sigma the
 * Bruhat indicator.  The dag kernel expands E-dag-star_y, the bar kernel
 * expands Ebar_y, and the switch kernel re-expands Ebar_y over the dag-star
 * basis; a mixed chain runs r bar steps, one switch, then dag steps.
 *
 * Chains are enumerated with the energy bound sum (z-_{k-1} - z-_k)^2/2 <= D:
 * every kernel's q-valuation dominates its energy term (m >= 0 and h0 is a
 * unit), so contributions beyond the budget cannot reach the cutoff.
 *
 * Twists are either +-1 characters of P/Q or a single-coset restriction of
 * the theta function (dag route only); the theta normalizer is the full
 * eta-type product in both modes.
 */

#pragma once

#include "epoly.hpp"

namespace macq {

enum class Route { dag, bar, mixed };

struct StepTwist {
        const Twist* v = nullptr; /* +-1 character; nullptr = trivial */
        int coset = -1;           /* >= 0: coset-restricted theta, no v */
};

/* <A B M> as a constant term, without forming the triple product */
inline QSeries ct_triple(const CharSeries& A, const CharSeries& B,
                         const CharSeries& M) {
        QSeries r;
        for (const auto& [wa, sa] : A.m)
                for (const auto& [wb, sb] : B.m) {
                        auto it = M.m.find(wneg(wadd(wa, wb)));
                        if (it != M.m.end())
                                r += sa * sb * it->second;
                }
        return r;
}

class Expander {
 public:
        Engine& E;
        bool check_pruning = true;
        /* chain-energy budget: exponents <= budget are certified in chain
         * outputs; defaults to the engine cutoff but may be lowered to keep
         * enumeration small when the engine runs at a high cutoff purely for
         * certification of the polynomials themselves */
        Frac budget;

        explicit Expander(Engine& e) : E(e), budget(e.D) {}

        /* label -> accumulated coefficient (divisions by h0 included) */
        using Coef = std::map<Weight, QSeries>;

        Coef seed(const Weight& c) const {
                Coef out;
                out.emplace(c, QSeries::monomial(1, Frac(0), E.Dwork));
                return out;
        }

        enum class StepKind { dag, bar, swit };

        Coef step(const Coef& in, StepKind kind, const StepTwist& tw) {
                if (tw.coset >= 0 && kind != StepKind::dag)
                        throw std::domain_error(
                            "coset-restricted theta: dag route only");
                const Mat& w0m = E.W.mo[E.W.w0];
                Coef out;
                for (const auto& [y, s] : in) {
                        /* a coefficient that is zero up to its cut can only
                         * feed exponents above the budget */
                        if (s.c.empty())
                                continue;
                        Frac bgt = budget - s.val();
                        if (bgt < Frac(0))
                                continue;
                        Weight ym = E.bminus(y);
                        /* reference antidominant point for the energy */
                        Weight ref = kind == StepKind::swit
                                         ? wneg(mat_apply(w0m, ym))
                                         : ym;
                        Frac bound =
                            Frac(2) * E.rs.norm2(ref) + Frac(4) * bgt;
                        UB uy = compute_ub(E.rs, y);
                        int uyi = E.W.index.at(uy.mo);
                        const Mat& uyinv = E.W.mo[E.W.invof[uyi]];
                        for (const auto& z : weights_in_ball(E.rs, bound)) {
                                Weight zm = E.bminus(z);
                                Frac en = E.rs.norm2(wsub(zm, ref)) / Frac(2);
                                if (en > bgt)
                                        continue;
                                if (tw.coset >= 0 &&
                                    E.rs.coset(wsub(y, z)) != tw.coset)
                                        continue;
                                QSeries fac;
                                if (kind == StepKind::swit) {
                                        if (!E.sigma(z, mat_apply(
                                                            uyinv,
                                                            mat_apply(w0m, zm))))
                                                continue;
                                        fac = QSeries::monomial(1, en, E.Dwork);
                                }
                                else {
                                        auto m = kind == StepKind::dag
                                                     ? E.m_exp(y, z)
                                                     : E.m_exp(z, y);
                                        if (check_pruning) {
                                                bool ya = y == ym, za = z == zm;
                                                if (kind == StepKind::dag &&
                                                    za && !ya && m)
                                                        throw std::logic_error(
                                                            "dag pruning violated");
                                                if (kind == StepKind::bar &&
                                                    ya && !za && m)
                                                        throw std::logic_error(
                                                            "bar pruning violated");
                                                if (ya && za && m && *m != 0)
                                                        throw std::logic_error(
                                                            "antidominant m != 0");
                                        }
                                        if (!m)
                                                continue;
                                        fac = QSeries::monomial(
                                            1, en + Frac(*m), E.Dwork);
                                }
                                int sg = 1;
                                if (tw.v && tw.coset < 0) {
                                        Weight d = kind == StepKind::swit
                                                       ? wadd(z, y)
                                                       : wsub(z, y);
                                        sg = (*tw.v)(d);
                                }
                                /* contributions with energy beyond the budget
                                 * are dropped, so the output is certified only
                                 * up to the budget */
                                QSeries add = (s * fac *
                                               E.h0(z).inverse(E.Dwork))
                                                  .truncated(budget);
                                if (sg < 0)
                                        add = -add;
                                auto it = out.find(z);
                                if (it == out.end())
                                        out.emplace(z, add);
                                else
                                        it->second += add;
                        }
                }
                for (auto it = out.begin(); it != out.end();)
                        it = it->second.c.empty() && it->second.cut.is_inf()
                                 ? out.erase(it)
                                 : std::next(it);
                return out;
        }

        /* For dag/bar, c0 is the starting label of that family.  For mixed,
         * c0 is the BAR label (the chain expands Ebar_{c0} and ends in the
         * dag-star basis); switch happens at step r+1, 0 <= r < p. */
        Coef chain(const Weight& c0, const std::vector<StepTwist>& tws,
                   Route route, int r = 0) {
                int p = (int)tws.size();
                if (route == Route::mixed && (r < 0 || r >= p))
                        throw std::domain_error("switch index out of range");
                Coef cur = seed(c0);
                for (int k = 0; k < p; ++k) {
                        StepKind kind =
                            route == Route::dag   ? StepKind::dag
                            : route == Route::bar ? StepKind::bar
                            : k < r               ? StepKind::bar
                            : k == r              ? StepKind::swit
                                                  : StepKind::dag;
                        cur = step(cur, kind, tws[k]);
                }
                return cur;
        }

        /* Xi = (coefficient of the target basis element) * h0_target */
        QSeries xi(const Coef& C, const Weight& a) {
                auto it = C.find(a);
                if (it == C.end())
                        return QSeries::zero(budget);
                return (it->second * E.h0(a)).truncated(E.Dwork);
        }

        CharSeries assemble(const Coef& C, bool dag_basis) {
                CharSeries out;
                for (const auto& [a, s] : C)
                        out += (dag_basis ? E.edag_star(a) : E.ebar(a)).scaled(s);
                return out;
        }

        /* normalized theta factor of one twist */
        CharSeries theta_factor(const StepTwist& tw) const {
                return theta(E.rs, E.Dwork, tw.coset >= 0 ? nullptr : tw.v,
                             tw.coset)
                    .scaled(eta_product(E.rs, E.Dwork).inverse(E.Dwork));
        }

        /* brute-force oracle: Xi as the constant term
         * < (start polynomial) prod theta-hat (dual of target) mu-circ >. */
        QSeries xi_direct(const Weight& c0, const Weight& a,
                          const std::vector<StepTwist>& tws, Route route) {
                CharSeries F =
                    route == Route::dag ? E.edag_star(c0) : E.ebar(c0);
                for (const auto& tw : tws)
                        F = F.mul(theta_factor(tw)).truncated(E.Dwork);
                const CharSeries& dual =
                    route == Route::bar ? E.edag_star(a) : E.ebar(a);
                return ct_triple(F, dual, E.muc).truncated(E.Dwork);
        }

        /* ---------------- rank-one closed form ---------------- */

        /* Good sequences n_0 = c, ..., n_p = a: integers that never return
         * from positive to nonpositive; the single transition (only when
         * c <= 0 < a) contributes the extra exponent |last nonpositive|.
         * Xi = sum q^{sum (|n_{k-1}|-|n_k|)^2/4 + eta}
         *          * prod_k sign_k^(n_k - n_{k-1})
         *          / prod_{k=1}^{p-1} prod_{j=1}^{|n_k|'} (1-q^j),
         * with |m|' = m-1 for m > 0 and |m|' = -m otherwise. */
        static QSeries a1_closed_form(long long c, long long a, int p,
                                      const std::vector<int>& sgn, Frac D) {
                if ((int)sgn.size() != p)
                        throw std::domain_error("one sign per theta factor");
                QSeries total = QSeries::zero(D);
                std::vector<long long> n(p + 1);
                n[0] = c;
                n[p] = a;
                long long L = std::max(std::llabs(c), std::llabs(a));
                while (Frac(L * L, 4) <= D)
                        ++L;
                L += std::max(std::llabs(c), std::llabs(a));
                std::function<void(int, Frac)> rec = [&](int k, Frac en) {
                        if (k == p) {
                                if (n[p - 1] > 0 && a <= 0)
                                        return;
                                long long d =
                                    std::llabs(n[p - 1]) - std::llabs(a);
                                Frac e2 = en + Frac(d * d, 4);
                                if (e2 > D)
                                        return;
                                long long eta = 0;
                                if (c <= 0 && a > 0)
                                        for (int i = 0; i < p; ++i)
                                                if (n[i] <= 0)
                                                        eta = -n[i];
                                int sg = 1;
                                for (int i = 0; i < p; ++i)
                                        if (sgn[i] < 0 &&
                                            ((n[i + 1] - n[i]) & 1))
                                                sg = -sg;
                                QSeries term =
                                    QSeries::monomial(sg, e2 + Frac(eta), D);
                                for (int i = 1; i < p; ++i) {
                                        long long lim = n[i] > 0 ? n[i] - 1
                                                                 : -n[i];
                                        QSeries den = QSeries::one();
                                        for (long long j = 1; j <= lim; ++j)
                                                den *= one_minus(1, Frac(j));
                                        term = (term * den.inverse(D))
                                                   .truncated(D);
                                }
                                total += term;
                                return;
                        }
                        for (long long v = -L; v <= L; ++v) {
                                if (n[k - 1] > 0 && v <= 0)
                                        continue;
                                long long d =
                                    std::llabs(n[k - 1]) - std::llabs(v);
                                Frac e2 = en + Frac(d * d, 4);
                                if (e2 > D)
                                        continue;
                                n[k] = v;
                                rec(k + 1, e2);
                        }
                };
                if (p == 0)
                        return QSeries::monomial(c == a ? 1 : 0, Frac(0), D);
                rec(1, Frac(0));
                return total;
        }

        /* ---------------- modular corollary sum ---------------- */

        /* Xi^{0,a} for a = 0 or -a minuscule: the chain collapses to
         * antidominant labels b_1,...,b_{p-1} with full-product denominators
         * prod_i prod_{j=1}^{-(b_k, alpha_i^vee)} (1 - q_i^j). */
        QSeries modular_sum(int p, const std::vector<StepTwist>& tws,
                            const Weight& a) {
                if ((int)tws.size() != p)
                        throw std::domain_error("one twist per theta factor");
                bool ok = is_zero(a);
                for (int r : E.rs.minuscule) {
                        Weight w(E.rs.n, 0);
                        w[r - 1] = 1;
                        if (wneg(a) == w)
                                ok = true;
                }
                if (!ok)
                        throw std::domain_error(
                            "modular sum needs a = 0 or -a minuscule");
                for (const auto& tw : tws)
                        if (tw.coset >= 0)
                                throw std::domain_error(
                                    "modular sum: character twists only");
                if (p == 0)
                        return QSeries::monomial(is_zero(a) ? 1 : 0, Frac(0),
                                                 budget);
                QSeries total = QSeries::zero(budget);
                std::vector<Weight> b(p + 1, Weight(E.rs.n, 0));
                b[p] = a; /* a is antidominant (minus a minuscule weight) */
                std::function<void(int, Frac, int, QSeries)> rec2 =
                    [&](int k, Frac en, int sg, QSeries prod) {
                            if (k == p) {
                                    Frac e2 = en + E.rs.norm2(wsub(
                                                       b[p], b[p - 1])) /
                                                       Frac(2);
                                    if (e2 > budget)
                                            return;
                                    int s2 = sg;
                                    if (tws[p - 1].v &&
                                        (*tws[p - 1].v)(
                                            wsub(b[p], b[p - 1])) < 0)
                                            s2 = -s2;
                                    QSeries t = prod.shifted(e2, s2);
                                    total += t.truncated(budget);
                                    return;
                            }
                            Frac bound = Frac(2) * E.rs.norm2(b[k - 1]) +
                                         Frac(4) * (budget - en);
                            for (const auto& z :
                                 weights_in_ball(E.rs, bound)) {
                                    if (!E.rs.antidominant(z))
                                            continue;
                                    Frac e2 = en + E.rs.norm2(wsub(
                                                       z, b[k - 1])) /
                                                       Frac(2);
                                    if (e2 > budget)
                                            continue;
                                    int sg2 = sg;
                                    if (tws[k - 1].v &&
                                        (*tws[k - 1].v)(wsub(z, b[k - 1])) < 0)
                                            sg2 = -sg2;
                                    b[k] = z;
                                    QSeries den = QSeries::one();
                                    for (int i = 0; i < E.rs.n; ++i)
                                            for (long long j = 1; j <= -z[i];
                                                 ++j)
                                                    den *= one_minus(
                                                        1,
                                                        Frac(E.rs.nu[i] * j));
                                    rec2(k + 1, e2, sg2,
                                         (prod * den.inverse(E.Dwork))
                                             .truncated(E.Dwork));
                            }
                    };
                rec2(1, Frac(0), 1, QSeries::monomial(1, Frac(0), E.Dwork));
                return total.truncated(budget);
        }

        /* ---------------- Demazure slices ---------------- */

        struct SliceTable {
                std::map<Weight, QSeries> mult; /* slice label -> multiplicity */
                CharSeries gch_thick;           /* graded character, thick side */
        };

        /* graded character of the slice attached to c */
        CharSeries gch_slice(const Weight& c) {
                return E.edag_star(E.iota(c))
                    .act_lin(E.W.mo[E.W.w0])
                    .shifted_q(E.rs.norm2(c) / Frac(2))
                    .scaled(E.h0(c).inverse(E.Dwork));
        }

        /* Multiplicities of slices in (thick Demazure module) x (level-one
         * module)^{x p} at character level: the r = 0 mixed chain from the
         * bar label iota(b).  Sanity (hard): the multiplicities re-assemble
         * the product character. */
        SliceTable slice_multiplicities(const Weight& b, int p) {
                SliceTable out;
                Weight y0 = E.iota(b);
                Frac bn = E.rs.norm2(b);
                Coef C;
                if (p == 0) {
                        /* no theta factor: triangular extraction of Ebar_{y0}
                         * over the dag-star basis */
                        const CharSeries& F = E.ebar(y0);
                        Frac bound = Frac(2) * E.rs.norm2(E.bminus(y0)) +
                                     Frac(4) * budget;
                        for (const auto& z : weights_in_ball(E.rs, bound)) {
                                QSeries A = ct_triple(F, E.ebar(z), E.muc);
                                A = (A * E.h0(z).inverse(E.Dwork))
                                        .truncated(E.Dwork);
                                if (!A.c.empty())
                                        C.emplace(z, A);
                        }
                }
                else {
                        std::vector<StepTwist> tws(p);
                        C = chain(y0, tws, Route::mixed, 0);
                }
                for (const auto& [z, s] : C) {
                        Weight c = E.iota(z);
                        QSeries m =
                            (s * E.h0(z))
                                .shifted(-(bn + E.rs.norm2(c)) / Frac(2));
                        m = m.truncated(E.Dwork - bn);
                        if (!m.c.empty() || !m.cut.is_inf())
                                out.mult.emplace(c, m);
                }
                out.gch_thick = E.gch_demazure(b);
                /* hard sanity: sum mult * slice character = product character */
                CharSeries lhs;
                for (const auto& [c, m] : out.mult)
                        lhs += gch_slice(c).scaled(m);
                CharSeries rhs = out.gch_thick;
                StepTwist triv;
                for (int k = 0; k < p; ++k)
                        rhs = rhs.mul(theta_factor(triv)).truncated(E.Dwork - bn);
                if (!CharSeries::agree(lhs, rhs))
                        throw std::logic_error(
                            "slice multiplicities: assembly identity failed");
                return out;
        }
};

} /* namespace macq */
