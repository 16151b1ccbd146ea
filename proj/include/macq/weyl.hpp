/* Finite Weyl group machinery: enumeration (small ranks), Bruhat order,
 * longest element, and the minimal-length elements u_b with u_b(b) = b_-.
 *
 * Elements are stored as their integer matrices acting on omega-coordinates
 * (column-major action: (w b)_k = sum_j M[k][j] b_j) together with the
 * matrix of the action on alpha-coordinates, one reduced word, and the
 * length.  Everything is built by breadth-first search from the identity,
 * which also certifies the word lengths.
 */

#pragma once

#include <map>
#include <queue>
#include <vector>

#include "root_system.hpp"

namespace macq {

using Mat = std::vector<std::vector<int>>;

inline Mat mat_id(int n) {
        Mat m(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i)
                m[i][i] = 1;
        return m;
}
inline Mat mat_mul(const Mat& a, const Mat& b) {
        int n = (int)a.size();
        Mat r(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) {
                        if (a[i][k] == 0)
                                continue;
                        for (int j = 0; j < n; ++j)
                                r[i][j] += a[i][k] * b[k][j];
                }
        return r;
}
inline std::vector<int> mat_apply(const Mat& m, const std::vector<int>& v) {
        int n = (int)m.size();
        std::vector<int> r(n, 0);
        for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                        r[i] += m[i][j] * v[j];
        return r;
}

/* matrix of s_i on omega-coordinates: column i is e_i - (column i of A) */
inline Mat srefl_mat_omega(const RootSystem& rs, int i) {
        Mat m = mat_id(rs.n);
        for (int k = 0; k < rs.n; ++k)
                m[k][i] -= rs.A[k][i];
        return m;
}
/* matrix of s_i on alpha-coordinates: entry [i][j] = delta - A[i][j] */
inline Mat srefl_mat_alpha(const RootSystem& rs, int i) {
        Mat m = mat_id(rs.n);
        for (int j = 0; j < rs.n; ++j)
                m[i][j] -= rs.A[i][j];
        return m;
}

struct WeylGroup {
        const RootSystem* rs;
        std::vector<Mat> mo;               /* omega action */
        std::vector<Mat> ma;               /* alpha action */
        std::vector<int> len;
        std::vector<std::vector<int>> word; /* one reduced word, left-to-right */
        std::vector<int> invof;
        std::map<Mat, int> index;
        int w0;                             /* longest element */
        std::vector<std::vector<bool>> bruhat_leq;

        explicit WeylGroup(const RootSystem& R) : rs(&R) {
                int n = R.n;
                std::vector<Mat> so(n), sa(n);
                for (int i = 0; i < n; ++i) {
                        so[i] = srefl_mat_omega(R, i);
                        sa[i] = srefl_mat_alpha(R, i);
                }
                mo.push_back(mat_id(n));
                ma.push_back(mat_id(n));
                len.push_back(0);
                word.push_back({});
                index[mo[0]] = 0;
                std::queue<int> bfs;
                bfs.push(0);
                while (!bfs.empty()) {
                        int w = bfs.front();
                        bfs.pop();
                        for (int i = 0; i < n; ++i) {
                                Mat m = mat_mul(mo[w], so[i]); /* w s_i */
                                auto [it, fresh] = index.try_emplace(m, (int)mo.size());
                                if (!fresh)
                                        continue;
                                mo.push_back(m);
                                ma.push_back(mat_mul(ma[w], sa[i]));
                                len.push_back(len[w] + 1);
                                auto wd = word[w];
                                wd.push_back(i);
                                word.push_back(wd);
                                bfs.push(it->second);
                        }
                }
                /* inverses and longest element */
                invof.resize(size());
                w0 = 0;
                for (int w = 0; w < size(); ++w) {
                        Mat inv = mo[w];
                        /* W-matrices are orthogonal w.r.t. the form; invert by
                         * composing the reversed reduced word */
                        Mat m = mat_id(n);
                        const auto& wd = word[w];
                        for (auto it = wd.rbegin(); it != wd.rend(); ++it)
                                m = mat_mul(m, so[*it]);
                        invof[w] = index.at(m);
                        if (len[w] > len[w0])
                                w0 = w;
                }
                build_bruhat();
        }

        int size() const { return (int)mo.size(); }

        /* Bruhat order from reflection covers: u <| u t_beta when the length
         * rises by exactly one; leq = reflexive-transitive closure. */
        void build_bruhat() {
                int N = size(), n = rs->n;
                std::vector<Mat> reflo;
                for (const auto& m : rs->pos) {
                        Mat r = mat_id(n);
                        Weight mv = rs->root_to_weight(m);
                        /* b -> b - (b,beta^vee) beta */
                        for (int j = 0; j < n; ++j) {
                                /* (e_j basis weight, beta^vee) */
                                Weight ej(n, 0);
                                ej[j] = 1;
                                long long k = rs->pair_coroot(ej, m);
                                for (int t = 0; t < n; ++t)
                                        r[t][j] -= (int)(k * mv[t]);
                        }
                        reflo.push_back(r);
                }
                bruhat_leq.assign(N, std::vector<bool>(N, false));
                std::vector<std::vector<int>> covers_up(N);
                for (int w = 0; w < N; ++w) {
                        bruhat_leq[w][w] = true;
                        for (const auto& r : reflo) {
                                int w2 = index.at(mat_mul(mo[w], r));
                                if (len[w2] == len[w] + 1)
                                        covers_up[w].push_back(w2);
                        }
                }
                /* close upward in length order */
                std::vector<int> order(N);
                for (int i = 0; i < N; ++i)
                        order[i] = i;
                std::sort(order.begin(), order.end(),
                          [&](int a, int b) { return len[a] < len[b]; });
                for (int idx = N - 1; idx >= 0; --idx) {
                        int w = order[idx];
                        for (int up : covers_up[w])
                                for (int z = 0; z < N; ++z)
                                        if (bruhat_leq[up][z])
                                                bruhat_leq[w][z] = true;
                }
        }

        bool leq(int a, int b) const { return bruhat_leq[a][b]; }
};

/* Greedy descent to the antidominant chamber.  Returns the matrix (omega
 * action) of u_b, the minimal-length element with u_b(b) = b_-, and its
 * reduced word (left-to-right: u_b = s_{w[0]} s_{w[1]} ...). */
struct UB {
        Mat mo;
        std::vector<int> word;
        Weight bminus;
};

inline UB compute_ub(const RootSystem& rs, const Weight& b) {
        UB u;
        u.mo = mat_id(rs.n);
        u.bminus = b;
        /* left-multiplying by s_i at each step: u := s_i u, b := s_i b */
        std::vector<int> rev;
        for (;;) {
                int i = -1;
                for (int k = 0; k < rs.n; ++k)
                        if (u.bminus[k] > 0) {
                                i = k;
                                break;
                        }
                if (i < 0)
                        break;
                u.bminus = rs.srefl(i, u.bminus);
                u.mo = mat_mul(srefl_mat_omega(rs, i), u.mo);
                rev.push_back(i);
        }
        u.word.assign(rev.rbegin(), rev.rend());
        return u;
}

} /* namespace macq */
