#pragma once

// Fincke-Pohst enumeration of dual-coset vectors in negative definite
// lattices. Floating point only sizes the loops; every acceptance test is
// exact.

#include "ballcalc/lattices.hpp"

#include <cmath>
#include <map>

namespace ballcalc {

namespace detail {

// Q(z) = sum_i c[i][i] (z_i + sum_{j>i} c[i][j] z_j)^2 for positive definite p.
inline QMat rational_cholesky(const QMat& p) {
    std::size_t n = p.size();
    QMat q = p;
    for (std::size_t i = 0; i < n; ++i) {
        if (q[i][i] <= 0) throw std::domain_error("lattice is not definite");
        for (std::size_t j = i + 1; j < n; ++j) {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
    }
    return q;
}

}  // namespace detail

// Calls f(x, -<x,x>) for every x in center + Z^n with -<x,x> <= bound.
template <class F>
void enumerate_short(const Lattice& m, const QVec& center, const Rational& bound, F&& f) {
    std::size_t n = m.rank();
    QMat p = m.gram;
    for (auto& r : p)
        for (auto& e : r) e = -e;
    QMat c = detail::rational_cholesky(p);
    QVec z(n);
    std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t level, const Rational& used) {
        std::size_t i = level - 1;
        Rational s = center[i];
        for (std::size_t j = i + 1; j < n; ++j) s += c[i][j] * z[j];
        Rational room = bound - used;
        double r = std::sqrt(std::max(0.0, Rational(room / c[i][i]).get_d()));
        double mid = -s.get_d();
        long lo = static_cast<long>(std::ceil(mid - r)) - 1, hi = static_cast<long>(std::floor(mid + r)) + 1;
        for (long y = lo; y <= hi; ++y) {
            Rational t = Rational(y) + s;
            Rational next = used + c[i][i] * t * t;
            if (next > bound) continue;
            z[i] = center[i] + y;
            if (i == 0)
                f(static_cast<const QVec&>(z), next);
            else
                rec(i, next);
        }
    };
    if (n == 0) {
        f(z, Rational(0));
        return;
    }
    rec(n, Rational(0));
}

struct CosetCount {
    long count = 0;
    std::vector<QVec> vectors;
};

inline CosetCount count_coset_vectors(const Lattice& m, const DiscGroup::Elem& coset, const Rational& norm,
                                      bool list = false) {
    if (!m.negative_definite()) throw std::invalid_argument("count_coset_vectors: lattice not negative definite");
    if (norm >= 0) throw std::invalid_argument("count_coset_vectors: norm must be negative");
    DiscGroup a(m);
    if (mod_q(norm - a.q(coset), 2) != 0) throw std::invalid_argument("count_coset_vectors: norm/coset parity mismatch");
    CosetCount out;
    Rational target = -norm;
    enumerate_short(m, a.lift(coset), target, [&](const QVec& x, const Rational& q) {
        if (q != target) return;
        ++out.count;
        if (list) out.vectors.push_back(x);
    });
    return out;
}

// Counts of coset vectors by norm for all norms n with -bound <= n.
inline std::map<Rational, long> coset_norm_counts(const Lattice& m, const QVec& lift, const Rational& bound) {
    std::map<Rational, long> out;
    enumerate_short(m, lift, bound, [&](const QVec&, const Rational& q) { out[-q]++; });
    return out;
}

inline std::pair<long, long> root_data(const Lattice& m) {
    if (!m.even() || !m.negative_definite()) throw std::invalid_argument("root_data: need an even negative definite lattice");
    long roots = 0;
    enumerate_short(m, QVec(m.rank(), Rational(0)), Rational(2), [&](const QVec&, const Rational& q) {
        if (q == 2) ++roots;
    });
    if (roots % 2) throw std::logic_error("root_data: odd root count");
    return {roots, roots / 2};
}

}  // namespace ballcalc
