#pragma once

// Dense exact linear algebra over Z and Q.

#include "ballcalc/scalars.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ballcalc {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;
using ZVec = std::vector<Integer>;
using ZMat = std::vector<ZVec>;

template <class T>
std::vector<std::vector<T>> identity_matrix(std::size_t n) {
    std::vector<std::vector<T>> m(n, std::vector<T>(n, T(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = T(1);
    return m;
}

template <class T>
std::vector<std::vector<T>> transpose(const std::vector<std::vector<T>>& a) {
    if (a.empty()) return {};
    std::vector<std::vector<T>> t(a[0].size(), std::vector<T>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

template <class T>
std::vector<std::vector<T>> matmul(const std::vector<std::vector<T>>& a, const std::vector<std::vector<T>>& b) {
    if (a.empty()) return {};
    std::size_t n = a.size(), m = b.size(), p = b.empty() ? 0 : b[0].size();
    if (a[0].size() != m) throw std::invalid_argument("matmul: dimension mismatch");
    std::vector<std::vector<T>> c(n, std::vector<T>(p, T(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < p; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

template <class T>
std::vector<T> matvec(const std::vector<std::vector<T>>& a, const std::vector<T>& v) {
    std::vector<T> out(a.size(), T(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

// x^T G y
inline Rational bilinear(const QMat& g, const QVec& x, const QVec& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * g[i][j] * y[j];
    }
    return s;
}

inline QMat to_qmat(const ZMat& z) {
    QMat q(z.size());
    for (std::size_t i = 0; i < z.size(); ++i)
        for (const auto& e : z[i]) q[i].push_back(Rational(e));
    return q;
}

inline bool is_integral(const QMat& m) {
    for (const auto& r : m)
        for (const auto& e : r)
            if (!is_integer(e)) return false;
    return true;
}

inline ZMat to_zmat(const QMat& q) {
    ZMat z(q.size());
    for (std::size_t i = 0; i < q.size(); ++i)
        for (const auto& e : q[i]) {
            if (!is_integer(e)) throw std::domain_error("to_zmat: non-integral entry");
            z[i].push_back(e.get_num());
        }
    return z;
}

// Row reduction to reduced echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(QMat& a) {
    std::vector<std::size_t> pivots;
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        Rational inv = 1 / a[r][c];
        for (auto& e : a[r]) e *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank_q(QMat a) { return rref(a).size(); }

inline Rational det_q(QMat a) {
    std::size_t n = a.size();
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return d;
}

inline QMat inverse_q(const QMat& a) {
    std::size_t n = a.size();
    QMat aug(n, QVec(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("inverse_q: singular matrix");
    QMat inv(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

// Basis of the right kernel {x : a x = 0}.
inline std::vector<QVec> kernel_q(QMat a) {
    std::size_t cols = a.empty() ? 0 : a[0].size();
    auto piv = rref(a);
    std::vector<bool> is_piv(cols, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<QVec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        QVec v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
        basis.push_back(v);
    }
    return basis;
}

// Inertia (positive, negative, zero) of a symmetric rational matrix via
// congruence diagonalisation.
struct Inertia {
    int pos = 0, neg = 0, zero = 0;
};

inline Inertia signature(QMat a) {
    std::size_t n = a.size();
    Inertia s;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][p] == 0) ++p;
        if (p == n) {
            // all diagonal entries vanish; look for an off-diagonal entry
            std::size_t i0 = n, j0 = n;
            for (std::size_t i = k; i < n && i0 == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (a[i][j] != 0) {
                        i0 = i;
                        j0 = j;
                        break;
                    }
            if (i0 == n) {
                s.zero += static_cast<int>(n - k);
                return s;
            }
            // replace basis vector i0 by e_i0 + e_j0
            for (std::size_t t = 0; t < n; ++t) a[i0][t] += a[j0][t];
            for (std::size_t t = 0; t < n; ++t) a[t][i0] += a[t][j0];
            p = i0;
        }
        if (p != k) {
            std::swap(a[p], a[k]);
            for (auto& row : a) std::swap(row[p], row[k]);
        }
        Rational piv = a[k][k];
        (piv > 0 ? s.pos : s.neg)++;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rational f = a[i][k] / piv;
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
        // the trailing block is now the (symmetric) Schur complement
    }
    return s;
}

// Smith normal form: u * a * v = d with d diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
    ZMat u, v, d;
};

inline SmithForm smith_normal_form(const ZMat& a) {
    std::size_t m = a.size(), n = m ? a[0].size() : 0;
    SmithForm s{identity_matrix<Integer>(m), identity_matrix<Integer>(n), a};
    auto& D = s.d;
    auto row_op = [&](std::size_t dst, std::size_t src, const Integer& q) {  // row dst -= q row src
        for (std::size_t j = 0; j < n; ++j) D[dst][j] -= q * D[src][j];
        for (std::size_t j = 0; j < m; ++j) s.u[dst][j] -= q * s.u[src][j];
    };
    auto col_op = [&](std::size_t dst, std::size_t src, const Integer& q) {  // col dst -= q col src
        for (std::size_t i = 0; i < m; ++i) D[i][dst] -= q * D[i][src];
        for (std::size_t i = 0; i < n; ++i) s.v[i][dst] -= q * s.v[i][src];
    };
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        while (true) {
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (D[i][j] != 0 && (pi == m || abs(D[i][j]) < abs(D[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == m) return s;
            if (pi != t) {
                std::swap(D[pi], D[t]);
                std::swap(s.u[pi], s.u[t]);
            }
            if (pj != t) {
                for (auto& r : D) std::swap(r[pj], r[t]);
                for (auto& r : s.v) std::swap(r[pj], r[t]);
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D[i][t] == 0) continue;
                Integer q = D[i][t] / D[t][t];
                row_op(i, t, q);
                if (D[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D[t][j] == 0) continue;
                Integer q = D[t][j] / D[t][t];
                col_op(j, t, q);
                if (D[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D[i][j] % D[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            row_op(t, bad, Integer(-1));
        }
        if (D[t][t] < 0) {
            for (auto& e : D[t]) e = -e;
            for (auto& e : s.u[t]) e = -e;
        }
    }
    return s;
}

// Basis (rows) of the Z-module spanned by integer row vectors, in Hermite
// normal form.
inline ZMat hermite_basis(ZMat rows) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::size_t r = 0;
    std::vector<std::size_t> pivcols;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        while (true) {
            std::size_t p = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i)
                if (rows[i][c] != 0 && (p == rows.size() || abs(rows[i][c]) < abs(rows[p][c]))) p = i;
            if (p == rows.size()) break;
            std::swap(rows[p], rows[r]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Integer q = rows[i][c] / rows[r][c];
                for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (r < rows.size() && rows[r][c] != 0) {
            if (rows[r][c] < 0)
                for (auto& e : rows[r]) e = -e;
            for (std::size_t i = 0; i < r; ++i) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
                for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
            }
            pivcols.push_back(c);
            ++r;
        }
    }
    rows.resize(r);
    return rows;
}

}  // namespace ballcalc
