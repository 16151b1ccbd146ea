/* Weight-graded q-series: finite sums  sum_b f_b(q) X_b  with f_b truncated
 * q-series.  This is the common container for the polynomials E-bar, E-dag,
 * the measures, theta functions and characters.
 *
 * Monomial action of t_a u (multiplicative convention q = e^{delta}):
 *      X_b q^k  ->  X_{u(b)} q^{k - (u(b), a)}.
 * The character-side convention q = e^{-delta} flips the sign of the q-shift;
 * pass qsign = -1 for that.
 */

#pragma once

#include <functional>
#include <map>

#include "affine.hpp"
#include "qseries.hpp"

namespace macq {

struct CharSeries {
        std::map<Weight, QSeries> m;

        bool is_zero() const { return m.empty(); }

        void trim() {
                for (auto it = m.begin(); it != m.end();) {
                        it->second.trim();
                        if (it->second.c.empty() && it->second.cut.is_inf())
                                it = m.erase(it);
                        else
                                ++it;
                }
        }

        /* least cutoff over all stored components (inf when exact) */
        Frac cut() const {
                Frac c = Frac::inf();
                for (const auto& [w, s] : m)
                        c = min(c, s.cut);
                return c;
        }

        void add_term(const Weight& w, Frac e, const mpq_class& v) {
                auto& s = m[w];
                s.add_term(e, v);
                if (s.c.empty() && s.cut.is_inf())
                        m.erase(w);
        }
        void add_series(const Weight& w, const QSeries& s) {
                auto it = m.find(w);
                if (it == m.end())
                        m.emplace(w, s);
                else
                        it->second += s;
        }

        static CharSeries monomial(const Weight& w, const QSeries& s) {
                CharSeries f;
                if (!(s.c.empty() && s.cut.is_inf()))
                        f.m.emplace(w, s);
                return f;
        }
        static CharSeries one(int rank) {
                return monomial(Weight(rank, 0), QSeries::one());
        }

        QSeries coeff(const Weight& w) const {
                auto it = m.find(w);
                if (it != m.end())
                        return it->second;
                /* absent weight: zero, certified to the global cutoff */
                return QSeries::zero(cut());
        }

        CharSeries& operator+=(const CharSeries& o) {
                for (const auto& [w, s] : o.m)
                        add_series(w, s);
                trim();
                return *this;
        }
        CharSeries& operator-=(const CharSeries& o) {
                for (const auto& [w, s] : o.m)
                        add_series(w, -s);
                trim();
                return *this;
        }
        friend CharSeries operator+(CharSeries a, const CharSeries& b) { return a += b; }
        friend CharSeries operator-(CharSeries a, const CharSeries& b) { return a -= b; }
        CharSeries operator-() const {
                CharSeries r;
                for (const auto& [w, s] : m)
                        r.m.emplace(w, -s);
                return r;
        }

        /* product, with optional weight filter to keep supports bounded */
        CharSeries mul(const CharSeries& o,
                       const std::function<bool(const Weight&)>& keep = nullptr) const {
                CharSeries r;
                for (const auto& [wa, sa] : m)
                        for (const auto& [wb, sb] : o.m) {
                                Weight w = wadd(wa, wb);
                                if (keep && !keep(w))
                                        continue;
                                QSeries p = sa * sb;
                                if (!(p.c.empty() && p.cut.is_inf()))
                                        r.add_series(w, p);
                        }
                r.trim();
                return r;
        }
        friend CharSeries operator*(const CharSeries& a, const CharSeries& b) {
                return a.mul(b);
        }

        /* multiply every component by a scalar q-series */
        CharSeries scaled(const QSeries& k) const {
                CharSeries r;
                for (const auto& [w, s] : m)
                        r.add_series(w, s * k);
                r.trim();
                return r;
        }
        CharSeries scaled(const mpq_class& k) const {
                CharSeries r;
                if (k == 0)
                        return r;
                for (const auto& [w, s] : m)
                        r.m.emplace(w, s.scaled(k));
                return r;
        }
        CharSeries shifted_q(Frac e) const {
                CharSeries r;
                for (const auto& [w, s] : m)
                        r.m.emplace(w, s.shifted(e));
                return r;
        }
        CharSeries truncated(Frac D) const {
                CharSeries r;
                for (const auto& [w, s] : m)
                        r.m.emplace(w, s.truncated(D));
                r.trim();
                return r;
        }

        /* star: X_b -> X_{-b}, q -> q^{-1}; exact input required */
        CharSeries star() const {
                CharSeries r;
                for (const auto& [w, s] : m)
                        r.m.emplace(wneg(w), s.star());
                return r;
        }

        /* action of t_a u on monomials (see header comment) */
        CharSeries act(const RootSystem& rs, const AffW& g, int qsign = 1) const {
                CharSeries r;
                for (const auto& [w, s] : m) {
                        Weight w2 = g.lin(w);
                        Frac shift = -rs.pair(w2, g.t);
                        if (qsign < 0)
                                shift = -shift;
                        r.add_series(w2, s.shifted(shift));
                }
                r.trim();
                return r;
        }
        /* finite Weyl element action (no q-shift) */
        CharSeries act_lin(const Mat& mo) const {
                CharSeries r;
                for (const auto& [w, s] : m)
                        r.add_series(mat_apply(mo, w), s);
                return r;
        }

        /* constant term in X */
        QSeries ct() const { return coeff(Weight(m.empty() ? 0 : m.begin()->first.size(), 0)); }

        static bool agree(const CharSeries& a, const CharSeries& b) {
                Frac D = min(a.cut(), b.cut());
                std::set<Weight> ws;
                for (const auto& [w, s] : a.m)
                        ws.insert(w);
                for (const auto& [w, s] : b.m)
                        ws.insert(w);
                for (const auto& w : ws) {
                        QSeries d = a.coeff(w).truncated(D) - b.coeff(w).truncated(D);
                        d.trim();
                        if (!d.c.empty())
                                return false;
                }
                return true;
        }

        std::string str() const {
                std::string out;
                for (const auto& [w, s] : m) {
                        out += "X[";
                        for (size_t i = 0; i < w.size(); ++i)
                                out += (i ? "," : "") + std::to_string(w[i]);
                        out += "]*(" + s.str() + ")\n";
                }
                return out.empty() ? "0\n" : out;
        }
};

/* sum_w A_w(q) B_{-w}(q) truncated — the workhorse for constant terms of
 * products against a measure without forming the full product. */
inline QSeries ct_against(const CharSeries& a, const CharSeries& b) {
        Frac D = min(a.cut(), b.cut());
        QSeries r = QSeries::zero(D);
        for (const auto& [w, s] : a.m) {
                auto it = b.m.find(wneg(w));
                if (it != b.m.end())
                        r += s * it->second;
        }
        return r.truncated(D);
}

} /* namespace macq */
