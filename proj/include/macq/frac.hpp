/* Small exact rational type for q-exponents, pairings and lattice data.
 *
 * All exponents that occur live in (1/(2e))Z for a fixed small e, and all
 * pairings (b,c) are sums of products of single-digit integers, so a
 * long-long numerator/denominator pair never comes close to overflow.
 * Coefficient arithmetic (which does grow) uses GMP elsewhere; keeping the
 * exponent type trivially copyable makes the series maps cheap.
 *
 * A single point at infinity (den == 0) is admitted and used as the
 * "no truncation" cutoff sentinel.  inf compares greater than everything,
 * absorbs addition, and refuses multiplication/division.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace macq {

struct Frac {
        long long num;
        long long den;          /* > 0, or 0 for +infinity (num == 1) */

        constexpr Frac() : num(0), den(1) {}
        constexpr Frac(long long n) : num(n), den(1) {}
        Frac(long long n, long long d) : num(n), den(d) { normalize(); }

        static constexpr Frac inf() {
                Frac f;
                f.num = 1;
                f.den = 0;
                return f;
        }
        bool is_inf() const { return den == 0; }

        void normalize() {
                if (den == 0)
                        throw std::domain_error("Frac: zero denominator");
                if (den < 0) {
                        num = -num;
                        den = -den;
                }
                long long g = std::gcd(num < 0 ? -num : num, den);
                if (g > 1) {
                        num /= g;
                        den /= g;
                }
        }

        friend Frac operator+(const Frac& a, const Frac& b) {
                if (a.is_inf() || b.is_inf())
                        return inf();
                return Frac(a.num * b.den + b.num * a.den, a.den * b.den);
        }
        friend Frac operator-(const Frac& a, const Frac& b) {
                if (a.is_inf())
                        return inf();
                if (b.is_inf())
                        throw std::domain_error("Frac: inf subtrahend");
                return Frac(a.num * b.den - b.num * a.den, a.den * b.den);
        }
        Frac operator-() const {
                if (is_inf())
                        throw std::domain_error("Frac: negating inf");
                Frac f;
                f.num = -num;
                f.den = den;
                return f;
        }
        friend Frac operator*(const Frac& a, const Frac& b) {
                if (a.is_inf() || b.is_inf())
                        throw std::domain_error("Frac: inf factor");
                return Frac(a.num * b.num, a.den * b.den);
        }
        friend Frac operator/(const Frac& a, const Frac& b) {
                if (a.is_inf() || b.is_inf() || b.num == 0)
                        throw std::domain_error("Frac: bad division");
                return Frac(a.num * b.den, a.den * b.num);
        }
        Frac& operator+=(const Frac& o) { return *this = *this + o; }
        Frac& operator-=(const Frac& o) { return *this = *this - o; }

        /* Total order; inf is the unique maximum.  Finite comparison by
         * cross multiplication (denominators are positive). */
        friend std::strong_ordering operator<=>(const Frac& a, const Frac& b) {
                if (a.is_inf() && b.is_inf())
                        return std::strong_ordering::equal;
                if (a.is_inf())
                        return std::strong_ordering::greater;
                if (b.is_inf())
                        return std::strong_ordering::less;
                return a.num * b.den <=> b.num * a.den;
        }
        friend bool operator==(const Frac& a, const Frac& b) {
                return a.num == b.num && a.den == b.den;
        }

        bool is_integer() const { return den == 1; }
        long long as_integer() const {
                if (den != 1)
                        throw std::domain_error("Frac: not an integer: " + str());
                return num;
        }
        /* floor(a/b) for finite values */
        long long floor() const {
                if (is_inf())
                        throw std::domain_error("Frac: floor(inf)");
                long long q = num / den;
                if (num % den != 0 && num < 0)
                        --q;
                return q;
        }

        std::string str() const {
                if (is_inf())
                        return "inf";
                if (den == 1)
                        return std::to_string(num);
                return std::to_string(num) + "/" + std::to_string(den);
        }
};

inline Frac min(const Frac& a, const Frac& b) { return a < b ? a : b; }
inline Frac max(const Frac& a, const Frac& b) { return a < b ? b : a; }

} /* namespace macq */
