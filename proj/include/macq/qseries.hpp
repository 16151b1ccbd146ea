/* Truncated q-series with exact rational coefficients.
 *
 * A QSeries is a finite sum  sum_e  c_e q^e  with c_e in Q (GMP rationals)
 * and exponents e in Q (type Frac), together with a certification cutoff:
 * terms with exponent <= cut are exact, nothing is known beyond it.
 * cut == Frac::inf() means the series is an exact (Laurent-type) polynomial.
 *
 * Truncation bookkeeping for products:
 *   the unknown tail of a starts strictly above a.cut; multiplied with b it
 *   pollutes exponents > a.cut + val(b).  Hence
 *       cut(a*b) = min(a.cut + val(b), b.cut + val(a))
 *   (val of an empty series is +inf, making exact factors transparent).
 *
 * Inversion uses the geometric series around the lowest term; exact division
 * of polynomials is a separate routine that insists on zero remainder.
 */

#pragma once

#include <gmpxx.h>

#include <map>
#include <sstream>
#include <stdexcept>

#include "frac.hpp"

namespace macq {

struct QSeries {
        std::map<Frac, mpq_class> c;
        Frac cut = Frac::inf();

        QSeries() = default;
        explicit QSeries(Frac cutoff) : cut(cutoff) {}

        static QSeries zero(Frac cutoff = Frac::inf()) { return QSeries(cutoff); }
        static QSeries monomial(const mpq_class& coeff, Frac exp,
                                Frac cutoff = Frac::inf()) {
                QSeries s(cutoff);
                if (coeff != 0 && exp <= cutoff)
                        s.c[exp] = coeff;
                return s;
        }
        static QSeries one() { return monomial(1, Frac(0)); }

        bool is_zero() const { return c.empty(); }
        bool is_exact() const { return cut.is_inf(); }

        /* valuation = lowest occurring exponent; +inf when nothing occurs */
        Frac val() const { return c.empty() ? Frac::inf() : c.begin()->first; }
        Frac top() const {
                if (c.empty())
                        throw std::domain_error("QSeries: top of zero");
                return c.rbegin()->first;
        }

        void trim() {
                for (auto it = c.begin(); it != c.end();) {
                        if (it->second == 0 || it->first > cut)
                                it = c.erase(it);
                        else
                                ++it;
                }
        }

        QSeries truncated(Frac new_cut) const {
                QSeries r(min(cut, new_cut));
                for (const auto& [e, v] : c)
                        if (e <= r.cut)
                                r.c[e] = v;
                return r;
        }

        void add_term(Frac e, const mpq_class& v) {
                if (e > cut)
                        return;
                auto [it, fresh] = c.try_emplace(e, v);
                if (!fresh) {
                        it->second += v;
                        if (it->second == 0)
                                c.erase(it);
                }
                else if (it->second == 0)
                        c.erase(it);
        }

        QSeries& operator+=(const QSeries& o) {
                cut = min(cut, o.cut);
                trim();
                for (const auto& [e, v] : o.c)
                        add_term(e, v);
                return *this;
        }
        QSeries& operator-=(const QSeries& o) {
                cut = min(cut, o.cut);
                trim();
                for (const auto& [e, v] : o.c)
                        add_term(e, -v);
                return *this;
        }
        friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
        friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
        QSeries operator-() const {
                QSeries r(cut);
                for (const auto& [e, v] : c)
                        r.c[e] = -v;
                return r;
        }

        friend QSeries operator*(const QSeries& a, const QSeries& b) {
                QSeries r(min(a.cut + b.val(), b.cut + a.val()));
                for (const auto& [ea, va] : a.c) {
                        if (ea + b.val() > r.cut)
                                break;
                        for (const auto& [eb, vb] : b.c) {
                                Frac e = ea + eb;
                                if (e > r.cut)
                                        break;
                                r.add_term(e, va * vb);
                        }
                }
                return r;
        }
        QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

        QSeries scaled(const mpq_class& k) const {
                QSeries r(cut);
                if (k == 0)
                        return r;
                for (const auto& [e, v] : c)
                        r.c[e] = v * k;
                return r;
        }
        /* multiply by k q^s */
        QSeries shifted(Frac s, const mpq_class& k = 1) const {
                QSeries r(cut.is_inf() ? cut : cut + s);
                if (k == 0)
                        return r;
                for (const auto& [e, v] : c)
                        r.c[e + s] = v * k;
                return r;
        }

        /* q -> q^{-1}; only meaningful for exact polynomials */
        QSeries star() const {
                if (!is_exact())
                        throw std::domain_error("QSeries: star of truncated series");
                QSeries r;
                for (const auto& [e, v] : c)
                        r.c[-e] = v;
                return r;
        }

        mpq_class coeff(Frac e) const {
                auto it = c.find(e);
                return it == c.end() ? mpq_class(0) : it->second;
        }

        /*
         * Inverse to q-degree D.  Write f = l q^v (1 + g) with val(g) > 0;
         * then f^{-1} = l^{-1} q^{-v} sum_k (-g)^k, and the sum is finite
         * once k val(g) exceeds the cutoff.  A series known modulo q^{>cut}
         * with valuation v determines its inverse modulo q^{> cut - 2v}.
         */
        QSeries inverse(Frac D = Frac::inf()) const {
                if (c.empty())
                        throw std::domain_error("QSeries: inverting zero");
                Frac v = val();
                mpq_class l = c.begin()->second;
                Frac icut = cut.is_inf() ? D : min(D, cut - v - v);
                if (icut.is_inf() && c.size() > 1)
                        throw std::domain_error("QSeries: exact inverse of non-monomial");
                /* g = f/(l q^v) - 1, truncated to icut */
                QSeries g = shifted(-v, mpq_class(1) / l).truncated(icut);
                g.add_term(Frac(0), -1);
                QSeries acc = QSeries::monomial(1, Frac(0), icut);
                QSeries term = acc;
                QSeries ng = -g;
                while (!term.is_zero()) {
                        /* re-truncate: the product rule would otherwise keep
                         * extending the certified range with the valuation */
                        term = (term * ng).truncated(icut);
                        acc += term;
                }
                return acc.shifted(-v, mpq_class(1) / l);
        }

        /* Exact division of Laurent polynomials; throws unless remainder 0. */
        QSeries div_exact(const QSeries& g) const {
                if (!is_exact() || !g.is_exact())
                        throw std::domain_error("QSeries: div_exact needs exact operands");
                if (g.c.empty())
                        throw std::domain_error("QSeries: division by zero");
                QSeries rem = *this;
                QSeries quot;
                Frac gv = g.val();
                mpq_class gl = g.c.begin()->second;
                /* For an exact quotient the top exponent is top(f)-top(g)
                 * <= top(f)-val(g); crossing that bound means the division
                 * does not terminate, i.e. f is not a multiple of g. */
                Frac bound = c.empty() ? Frac(0) : top() - gv;
                while (!rem.c.empty()) {
                        Frac e = rem.val() - gv;
                        if (e > bound)
                                throw std::domain_error("QSeries: inexact division");
                        mpq_class k = rem.c.begin()->second / gl;
                        quot.add_term(e, k);
                        rem -= g.shifted(e, k);
                }
                return quot;
        }

        /* equality on the jointly certified range */
        static bool agree(const QSeries& a, const QSeries& b) {
                Frac m = min(a.cut, b.cut);
                QSeries d = a.truncated(m) - b.truncated(m);
                d.trim();
                return d.c.empty();
        }

        std::string str() const {
                if (c.empty())
                        return "0";
                std::ostringstream os;
                bool first = true;
                for (const auto& [e, v] : c) {
                        if (!first)
                                os << " + ";
                        first = false;
                        os << v.get_str();
                        if (e != Frac(0))
                                os << "*q^" << e.str();
                }
                if (!cut.is_inf())
                        os << " [cut " << cut.str() << "]";
                return os.str();
        }
};

/* 1 - k q^e as an exact polynomial */
inline QSeries one_minus(const mpq_class& k, Frac e) {
        QSeries s = QSeries::one();
        s.add_term(e, -k);
        return s;
}

} /* namespace macq */
