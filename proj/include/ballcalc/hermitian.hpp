#pragma once

// Hermitian lattices over the Eisenstein integers Z[w]. Forms are linear in
// the first argument and conjugate linear in the second.

#include "ballcalc/lattices.hpp"

namespace ballcalc {

using CVec = std::vector<CycNum>;
using CMat = std::vector<CVec>;

struct HermLattice {
    CMat gram;

    std::size_t rank() const { return gram.size(); }

    CycNum form(const CVec& x, const CVec& y) const {
        CycNum s(0);
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < y.size(); ++j)
                if (!y[j].is_zero()) s += x[i] * gram[i][j] * y[j].conj();
        }
        return s;
    }

    bool is_hermitian() const {
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j)
                if (gram[i][j] != gram[j][i].conj()) return false;
        return true;
    }

    // Every entry lies in (1/sqrt(-3)) Z[w].
    bool entries_in_inverse_different() const {
        for (const auto& r : gram)
            for (const auto& e : r)
                if (!(e * CycNum::sqrt_m3()).is_eisenstein_integer()) return false;
        return true;
    }
};

inline CMat block_sum(const CMat& a, const CMat& b) {
    std::size_t n = a.size(), m = b.size();
    CMat out(n + m, CVec(n + m, CycNum(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out[n + i][n + j] = b[i][j];
    return out;
}

// The rank 10 lattice: a hyperbolic 2x2 block and two copies of a
// definite 4x4 block, all with entries in (1/sqrt(-3)) Z[w].
inline HermLattice eisenstein_dm_lattice() {
    const CycNum s = CycNum::sqrt_m3();
    const CycNum is = s.inverse();
    CMat hyp = {{CycNum(0), is}, {-is, CycNum(0)}};
    CMat n4 = {{s, CycNum(0), CycNum(-1), CycNum(-1)},
               {CycNum(0), s, CycNum(-1), CycNum(1)},
               {CycNum(1), CycNum(1), s, CycNum(0)},
               {CycNum(1), CycNum(-1), CycNum(0), s}};
    for (auto& r : n4)
        for (auto& e : r) e = -(is * e);
    return {block_sum(hyp, block_sum(n4, n4))};
}

// Z-lattice on the basis v_1, w v_1, ..., v_n, w v_n with form Tr h.
inline Lattice trace_lattice(const HermLattice& h) {
    std::size_t n = h.rank();
    QMat g(2 * n, QVec(2 * n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    // h(w^a v_i, w^b v_j) = w^a conj(w^b) h_ij
                    CycNum z = CycNum::w_pow(a) * CycNum::w_pow(-b) * h.gram[i][j];
                    g[2 * i + a][2 * j + b] = 2 * z.a - z.b;  // z + conj(z)
                }
    return {g, "trace"};
}

struct HermSignature {
    int pos = 0, neg = 0;
};

inline HermSignature hermitian_signature(const HermLattice& h) {
    auto s = signature(trace_lattice(h).gram);
    if (s.zero) throw std::domain_error("degenerate Hermitian form");
    return {s.pos / 2, s.neg / 2};
}

inline bool is_unit(const CycNum& x) { return x.is_eisenstein_integer() && x.norm() == 1; }

struct ReflectionReport {
    bool preserves_lattice = false;
    bool preserves_form = false;
    long order = 0;
    CMat matrix;  // columns are images of the basis vectors
};

// r -> r - (1 - xi) h(r, l) / h(l, l) * l for a (-1)-vector l.
inline ReflectionReport unitary_reflection(const HermLattice& h, const CVec& l, const CycNum& xi) {
    std::size_t n = h.rank();
    if (l.size() != n) throw std::invalid_argument("unitary_reflection: dimension mismatch");
    for (const auto& c : l)
        if (!c.is_eisenstein_integer()) throw std::invalid_argument("unitary_reflection: l is not a lattice vector");
    if (h.form(l, l) != CycNum(-1)) throw std::invalid_argument("unitary_reflection: l is not a (-1)-vector");
    if (!is_unit(xi) || xi == CycNum(1)) throw std::invalid_argument("unitary_reflection: xi must be a unit other than 1");
    CycNum ll = h.form(l, l);
    auto apply = [&](const CVec& r) {
        CycNum c = (CycNum(1) - xi) * h.form(r, l) / ll;
        CVec out = r;
        for (std::size_t i = 0; i < n; ++i) out[i] -= c * l[i];
        return out;
    };
    ReflectionReport rep;
    rep.matrix.assign(n, CVec(n));
    std::vector<CVec> images;
    for (std::size_t j = 0; j < n; ++j) {
        CVec e(n, CycNum(0));
        e[j] = 1;
        images.push_back(apply(e));
        for (std::size_t i = 0; i < n; ++i) rep.matrix[i][j] = images[j][i];
    }
    rep.preserves_lattice = true;
    for (const auto& im : images)
        for (const auto& c : im)
            if (!c.is_eisenstein_integer()) rep.preserves_lattice = false;
    rep.preserves_form = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (h.form(images[i], images[j]) != h.gram[i][j]) rep.preserves_form = false;
    CMat id(n, CVec(n, CycNum(0)));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    CMat p = rep.matrix;
    for (long k = 1; k <= 12; ++k) {
        if (p == id) {
            rep.order = k;
            break;
        }
        p = matmul(p, rep.matrix);
    }
    return rep;
}

}  // namespace ballcalc
