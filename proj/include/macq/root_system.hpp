/* Reduced simple root systems in the short-root normalization (alpha,alpha)=2
 * for short alpha, Bourbaki labeling.
 *
 * Conventions used throughout:
 *   - Cartan matrix            A[i][j] = (alpha_j, alpha_i^vee),
 *   - simple-root norms        nu_i = (alpha_i,alpha_i)/2 in {1,2,3},
 *   - roots are stored in alpha-coordinates (integer vectors m, root = sum
 *     m_j alpha_j), weights in omega-coordinates (l_i = (b, alpha_i^vee)),
 *   - the omega-coordinates of alpha_j form column j of A, so the coordinate
 *     map Q -> P is l = A m,
 *   - bilinear form on alpha-coordinates B[i][j] = (alpha_i,alpha_j)
 *     = nu_i A[i][j], on omega-coordinates G[i][j] = (omega_i,omega_j)
 *     = nu_i (A^{-1})[i][j].
 *
 * theta below is always the highest SHORT root (the affine node of the
 * twisted extension), not the highest root.
 */

#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "frac.hpp"

namespace macq {

using Weight = std::vector<int>;   /* omega-coordinates */
using RootA = std::vector<int>;    /* alpha-coordinates */

inline Weight wadd(const Weight& a, const Weight& b) {
        Weight r(a.size());
        for (size_t i = 0; i < a.size(); ++i)
                r[i] = a[i] + b[i];
        return r;
}
inline Weight wsub(const Weight& a, const Weight& b) {
        Weight r(a.size());
        for (size_t i = 0; i < a.size(); ++i)
                r[i] = a[i] - b[i];
        return r;
}
inline Weight wneg(const Weight& a) {
        Weight r(a.size());
        for (size_t i = 0; i < a.size(); ++i)
                r[i] = -a[i];
        return r;
}
inline bool is_zero(const Weight& a) {
        return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

struct RootSystem {
        char type;                       /* 'A'..'G' */
        int n;                           /* rank */
        std::vector<std::vector<int>> A; /* Cartan matrix */
        std::vector<int> nu;             /* per simple root */
        std::vector<std::vector<Frac>> Ainv;
        std::vector<std::vector<Frac>> G; /* Gram matrix of the omega_i */
        std::vector<RootA> pos;           /* positive roots */
        std::vector<int> pos_nu;          /* nu per positive root */
        RootA theta;                      /* highest short root, alpha-coords */
        Weight theta_w;                   /* and its omega-coordinates */
        int e2;                           /* 2e: q-exponents live in (1/e2)Z */
        std::vector<int> minuscule;       /* r with omega_r minuscule (1-based) */

        RootSystem(char t, int rank) : type(t), n(rank) {
                build_cartan();
                invert_cartan();
                build_roots();
                find_theta();
                find_minuscule();
                compute_e();
        }

        /* ---------------- Cartan data ---------------- */

        void build_cartan() {
                auto chain = [&](int len) {
                        A.assign(len, std::vector<int>(len, 0));
                        for (int i = 0; i < len; ++i) {
                                A[i][i] = 2;
                                if (i + 1 < len)
                                        A[i][i + 1] = A[i + 1][i] = -1;
                        }
                };
                nu.assign(n, 1);
                switch (type) {
                case 'A':
                        if (n < 1 || n > 8)
                                throw std::domain_error("A rank out of range");
                        chain(n);
                        break;
                case 'B':
                        /* alpha_n short, the rest long */
                        if (n < 2)
                                throw std::domain_error("B rank < 2");
                        chain(n);
                        A[n - 1][n - 2] = -2;
                        for (int i = 0; i + 1 < n; ++i)
                                nu[i] = 2;
                        break;
                case 'C':
                        /* alpha_n long, the rest short */
                        if (n < 2)
                                throw std::domain_error("C rank < 2");
                        chain(n);
                        A[n - 2][n - 1] = -2;
                        nu[n - 1] = 2;
                        break;
                case 'D':
                        if (n < 4)
                                throw std::domain_error("D rank < 4");
                        chain(n - 1);
                        A.resize(n);
                        for (auto& row : A)
                                row.resize(n, 0);
                        A[n - 1][n - 1] = 2;
                        A[n - 2][n - 1] = A[n - 1][n - 2] = 0;
                        A[n - 3][n - 1] = A[n - 1][n - 3] = -1;
                        break;
                case 'E': {
                        if (n < 6 || n > 8)
                                throw std::domain_error("E rank not 6..8");
                        /* branch node 4 carries node 2; chain 1-3-4-5-...-n */
                        A.assign(n, std::vector<int>(n, 0));
                        for (int i = 0; i < n; ++i)
                                A[i][i] = 2;
                        auto link = [&](int a, int b) {
                                A[a - 1][b - 1] = A[b - 1][a - 1] = -1;
                        };
                        link(1, 3);
                        link(3, 4);
                        link(2, 4);
                        for (int k = 4; k < n; ++k)
                                link(k, k + 1);
                        break;
                }
                case 'F':
                        if (n != 4)
                                throw std::domain_error("F rank != 4");
                        chain(4);
                        /* alpha_1, alpha_2 long; alpha_3, alpha_4 short */
                        A[2][1] = -2;
                        A[1][2] = -1;
                        nu[0] = nu[1] = 2;
                        break;
                case 'G':
                        if (n != 2)
                                throw std::domain_error("G rank != 2");
                        A = {{2, -3}, {-1, 2}};
                        nu = {1, 3};
                        break;
                default:
                        throw std::domain_error("unknown type");
                }
        }

        void invert_cartan() {
                /* Gauss-Jordan over Frac */
                std::vector<std::vector<Frac>> m(n, std::vector<Frac>(2 * n, Frac(0)));
                for (int i = 0; i < n; ++i) {
                        for (int j = 0; j < n; ++j)
                                m[i][j] = Frac(A[i][j]);
                        m[i][n + i] = Frac(1);
                }
                for (int col = 0; col < n; ++col) {
                        int piv = -1;
                        for (int r = col; r < n; ++r)
                                if (m[r][col].num != 0) {
                                        piv = r;
                                        break;
                                }
                        if (piv < 0)
                                throw std::logic_error("singular Cartan matrix");
                        std::swap(m[col], m[piv]);
                        Frac d = m[col][col];
                        for (int j = 0; j < 2 * n; ++j)
                                m[col][j] = m[col][j] / d;
                        for (int r = 0; r < n; ++r) {
                                if (r == col || m[r][col].num == 0)
                                        continue;
                                Frac f = m[r][col];
                                for (int j = 0; j < 2 * n; ++j)
                                        m[r][j] -= f * m[col][j];
                        }
                }
                Ainv.assign(n, std::vector<Frac>(n));
                G.assign(n, std::vector<Frac>(n));
                for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j) {
                                Ainv[i][j] = m[i][n + j];
                                G[i][j] = Frac(nu[i]) * m[i][n + j];
                        }
        }

        /* ---------------- roots ---------------- */

        int root_norm2(const RootA& m) const {
                /* (beta,beta) = sum m_i nu_i A[i][j] m_j */
                long long s = 0;
                for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j)
                                s += (long long)m[i] * nu[i] * A[i][j] * m[j];
                return (int)s;
        }

        /* s_i on alpha-coordinates: alpha_j -> alpha_j - A[i][j] alpha_i */
        RootA srefl_root(int i, const RootA& m) const {
                long long k = 0;
                for (int j = 0; j < n; ++j)
                        k += (long long)A[i][j] * m[j];
                RootA r = m;
                r[i] -= (int)k;
                return r;
        }

        void build_roots() {
                std::set<RootA> all;
                std::vector<RootA> stack;
                for (int i = 0; i < n; ++i) {
                        RootA e(n, 0);
                        e[i] = 1;
                        all.insert(e);
                        stack.push_back(e);
                }
                while (!stack.empty()) {
                        RootA m = stack.back();
                        stack.pop_back();
                        for (int i = 0; i < n; ++i) {
                                RootA r = srefl_root(i, m);
                                if (all.insert(r).second)
                                        stack.push_back(r);
                        }
                }
                for (const auto& m : all) {
                        bool nonneg = std::all_of(m.begin(), m.end(),
                                                  [](int x) { return x >= 0; });
                        if (nonneg) {
                                pos.push_back(m);
                                pos_nu.push_back(root_norm2(m) / 2);
                        }
                }
        }

        Weight root_to_weight(const RootA& m) const {
                Weight l(n, 0);
                for (int i = 0; i < n; ++i) {
                        long long s = 0;
                        for (int j = 0; j < n; ++j)
                                s += (long long)A[i][j] * m[j];
                        l[i] = (int)s;
                }
                return l;
        }

        void find_theta() {
                int minnu = *std::min_element(pos_nu.begin(), pos_nu.end());
                if (minnu != 1)
                        throw std::logic_error("no short root of norm 2");
                bool found = false;
                for (size_t k = 0; k < pos.size(); ++k) {
                        if (pos_nu[k] != 1)
                                continue;
                        Weight l = root_to_weight(pos[k]);
                        if (std::all_of(l.begin(), l.end(),
                                        [](int x) { return x >= 0; })) {
                                theta = pos[k];
                                theta_w = l;
                                found = true;
                        }
                }
                if (!found)
                        throw std::logic_error("no dominant short root");
        }

        /* ---------------- pairings ---------------- */

        /* (b, alpha^vee) for a root in alpha-coordinates */
        long long pair_coroot(const Weight& b, const RootA& m) const {
                long long s = 0;
                for (int j = 0; j < n; ++j)
                        s += (long long)m[j] * nu[j] * b[j];
                long long na = root_norm2(m) / 2;
                if (s % na != 0)
                        throw std::logic_error("non-integral coroot pairing");
                return s / na;
        }
        /* (b, alpha) for a root */
        long long pair_root(const Weight& b, const RootA& m) const {
                long long s = 0;
                for (int j = 0; j < n; ++j)
                        s += (long long)m[j] * nu[j] * b[j];
                return s;
        }
        /* (b, c) for weights */
        Frac pair(const Weight& b, const Weight& c) const {
                Frac s(0);
                for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j)
                                if (b[i] && c[j])
                                        s += Frac((long long)b[i] * c[j]) * G[i][j];
                return s;
        }
        Frac norm2(const Weight& b) const { return pair(b, b); }

        /* s_i on omega-coordinates */
        Weight srefl(int i, const Weight& b) const {
                Weight r = b;
                for (int k = 0; k < n; ++k)
                        r[k] -= b[i] * A[k][i];
                return r;
        }
        /* reflection by an arbitrary root */
        Weight refl_by_root(const RootA& m, const Weight& b) const {
                long long k = pair_coroot(b, m);
                Weight mv = root_to_weight(m);
                Weight r = b;
                for (int j = 0; j < n; ++j)
                        r[j] -= (int)(k * mv[j]);
                return r;
        }

        bool antidominant(const Weight& b) const {
                return std::all_of(b.begin(), b.end(), [](int x) { return x <= 0; });
        }
        bool dominant(const Weight& b) const {
                return std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; });
        }

        /* alpha-coordinates of a lattice vector, if it lies in Q */
        bool in_root_lattice(const Weight& l, std::vector<Frac>* out = nullptr) const {
                bool ok = true;
                std::vector<Frac> m(n, Frac(0));
                for (int i = 0; i < n; ++i) {
                        for (int j = 0; j < n; ++j)
                                if (l[j])
                                        m[i] += Ainv[i][j] * Frac(l[j]);
                        if (!m[i].is_integer())
                                ok = false;
                }
                if (out)
                        *out = m;
                return ok;
        }
        /* b in Q_+ ? (all alpha-coordinates nonnegative integers) */
        bool in_Qplus(const Weight& l) const {
                std::vector<Frac> m;
                if (!in_root_lattice(l, &m))
                        return false;
                return std::all_of(m.begin(), m.end(),
                                   [](const Frac& x) { return x.num >= 0; });
        }
        /* height sum of alpha-coordinates (requires membership in Q) */
        long long q_height(const Weight& l) const {
                std::vector<Frac> m;
                if (!in_root_lattice(l, &m))
                        throw std::domain_error("q_height: not in root lattice");
                long long h = 0;
                for (const auto& x : m)
                        h += x.as_integer();
                return h;
        }

        /* ---------------- lattice extras ---------------- */

        void find_minuscule() {
                for (int r = 0; r < n; ++r) {
                        Weight w(n, 0);
                        w[r] = 1;
                        bool ok = true;
                        for (const auto& m : pos)
                                if (pair_coroot(w, m) > 1)
                                        ok = false;
                        if (ok)
                                minuscule.push_back(r + 1);
                }
        }

        /* coset of b in P/Q: 0 for Q itself, else the minuscule r with
         * b - omega_r in Q; every nonzero coset has such a representative. */
        int coset(const Weight& b) const {
                if (in_root_lattice(b))
                        return 0;
                for (int r : minuscule) {
                        Weight w = b;
                        w[r - 1] -= 1;
                        if (in_root_lattice(w))
                                return r;
                }
                throw std::logic_error("coset: no minuscule representative");
        }

        void compute_e() {
                /* lattice of q-exponents: 1/(2e) Z with e = 4 for D_{2k},
                 * e = 2 for B_{2k} and C_k, otherwise 2 |P/Q| */
                long long npq;     /* |P/Q| = det A */
                {
                        /* det over Frac via Ainv: det(A) = 1/det(Ainv); easier:
                         * integer determinant by fraction-free elimination on a copy */
                        std::vector<std::vector<Frac>> m(n, std::vector<Frac>(n));
                        for (int i = 0; i < n; ++i)
                                for (int j = 0; j < n; ++j)
                                        m[i][j] = Frac(A[i][j]);
                        Frac det(1);
                        for (int col = 0; col < n; ++col) {
                                int piv = -1;
                                for (int r = col; r < n; ++r)
                                        if (m[r][col].num != 0) {
                                                piv = r;
                                                break;
                                        }
                                if (piv != col) {
                                        std::swap(m[col], m[piv]);
                                        det = -det;
                                }
                                det = det * m[col][col];
                                for (int r = col + 1; r < n; ++r) {
                                        Frac f = m[r][col] / m[col][col];
                                        for (int j = col; j < n; ++j)
                                                m[r][j] -= f * m[col][j];
                                }
                        }
                        npq = det.as_integer();
                }
                long long e;
                if (type == 'D' && n % 2 == 0)
                        e = 4;
                else if ((type == 'B' && n % 2 == 0) || type == 'C')
                        e = 2;
                else
                        e = 2 * npq;
                if (e > (long long)1 << 30)
                        throw std::logic_error("e overflow");
                e2 = (int)(2 * e);
        }

        std::string name() const { return std::string(1, type) + std::to_string(n); }
};

} /* namespace macq */
