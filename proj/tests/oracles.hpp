#pragma once

// Independent oracles shared by the property suite and the acceptance binary.
// Nothing here calls the library routine it is meant to check.

#include "ballcalc/borcherds.hpp"
#include "ballcalc/kirwan.hpp"
#include "ballcalc/ledger.hpp"
#include "ballcalc/luna.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using namespace ballcalc;

constexpr unsigned kSeed = 20240611;

inline long uniform(std::mt19937& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

inline CycNum random_cyc(std::mt19937& g) {
    return CycNum(rat(uniform(g, -9, 9), uniform(g, 1, 4)), rat(uniform(g, -9, 9), uniform(g, 1, 4)));
}

// Random series on the grid (1/n)Z with a few terms, known below a random truncation.
inline QSeries random_series(std::mt19937& g, bool unit_leading = false) {
    long n = uniform(g, 0, 1) ? 1 : 3;
    long lead = uniform(g, -3, 3);
    Rational trunc = rat(lead + uniform(g, 4, 9), n);
    QSeries s(n, trunc);
    for (long k = lead; rat(k, n) < trunc; ++k)
        if (uniform(g, 0, 2)) s.set(rat(k, n), random_cyc(g));
    if (unit_leading) {
        CycNum c = random_cyc(g);
        while (c.is_zero()) c = random_cyc(g);
        s.set(rat(lead, n), c);
    }
    return s;
}

// Failures among the ring axioms and inversion on `trials` random inputs.
inline int qseries_law_failures(std::mt19937& g, int trials) {
    int bad = 0;
    const QSeries one = QSeries::constant(CycNum(1));
    for (int t = 0; t < trials; ++t) {
        QSeries a = random_series(g), b = random_series(g), c = random_series(g);
        bool ok = (a + b).agrees_with(b + a) && (a * b).agrees_with(b * a) && ((a + b) + c).agrees_with(a + (b + c)) &&
                  ((a * b) * c).agrees_with(a * (b * c)) && (a * (b + c)).agrees_with(a * b + a * c) &&
                  (a - a).is_zero() && (a * one).agrees_with(a);
        QSeries u = random_series(g, true);
        QSeries p = u * u.inverse();
        ok = ok && p.truncation() && *p.truncation() == *u.truncation() - *u.leading_exponent() && p.agrees_with(one) &&
             u.inverse().inverse().agrees_with(u);
        bad += !ok;
    }
    return bad;
}

inline Lattice random_negative_definite(std::mt19937& g, std::size_t n) {
    while (true) {
        QMat b(n, QVec(n));
        for (auto& r : b)
            for (auto& e : r) e = uniform(g, -2, 2);
        if (det_q(b) == 0) continue;
        QMat gram = matmul(transpose(b), b);
        for (auto& r : gram)
            for (auto& e : r) e = -2 * e;
        return {gram, "random"};
    }
}

// Counts x in center + Z^n with -<x,x> <= bound, keyed by <x,x>, by scanning
// the box |x_i| <= sqrt(bound * (P^-1)_ii) with P = -gram.
inline std::map<Rational, long> box_counts(const Lattice& m, const QVec& center, const Rational& bound) {
    std::size_t n = m.rank();
    QMat p = m.gram;
    for (auto& r : p)
        for (auto& e : r) e = -e;
    QMat pinv = inverse_q(p);
    std::vector<long> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        double r = std::sqrt(Rational(bound * pinv[i][i]).get_d()) + 1;
        lo[i] = static_cast<long>(std::floor(-r - center[i].get_d()));
        hi[i] = static_cast<long>(std::ceil(r - center[i].get_d()));
    }
    std::map<Rational, long> out;
    std::vector<long> z = lo;
    while (true) {
        QVec x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = center[i] + z[i];
        Rational nx = m.norm(x);
        if (-nx <= bound) out[nx]++;
        std::size_t i = 0;
        while (i < n && ++z[i] > hi[i]) {
            z[i] = lo[i];
            ++i;
        }
        if (i == n) break;
    }
    return out;
}

// Rank 1..4 random lattices, zero coset and one random coset each.
inline int short_vector_failures(std::mt19937& g, int trials) {
    int bad = 0;
    for (int t = 0; t < trials; ++t) {
        Lattice m = random_negative_definite(g, static_cast<std::size_t>(uniform(g, 1, 4)));
        DiscGroup a(m);
        auto elems = a.elements();
        auto pick = elems[static_cast<std::size_t>(uniform(g, 0, static_cast<long>(elems.size()) - 1))];
        for (const auto& e : {a.zero(), pick}) {
            QVec c = a.lift(e);
            bad += coset_norm_counts(m, c, 6) != box_counts(m, c, 6);
        }
    }
    return bad;
}

// Random totally isotropic glue on lattices with nontrivial discriminant;
// checks det(M_H) |H|^2 = det(M), evenness, and M inside M_H.
struct GlueResult {
    int failures = 0;
    int nontrivial = 0;
};

inline GlueResult overlattice_law(std::mt19937& g, int trials) {
    static const std::vector<std::string> pool = {"A2^4", "E6+A2", "D4^2", "A2^2+E6", "A1^8", "A2^3+E6", "D4+A1^4"};
    GlueResult res;
    for (int t = 0; t < trials; ++t) {
        Lattice m = build_standard(pool[static_cast<std::size_t>(uniform(g, 0, static_cast<long>(pool.size()) - 1))]);
        DiscGroup a(m);
        std::vector<DiscGroup::Elem> iso;
        for (const auto& e : a.elements())
            if (!a.is_zero(e) && a.q(e) == 0) iso.push_back(e);
        std::shuffle(iso.begin(), iso.end(), g);
        std::vector<DiscGroup::Elem> gens;
        long want = uniform(g, 1, 3);
        for (const auto& x : iso) {
            if (static_cast<long>(gens.size()) == want) break;
            bool orthogonal = a.q(x) == 0;
            for (const auto& y : gens) orthogonal = orthogonal && a.b(x, y) == 0;
            if (orthogonal) gens.push_back(x);
        }
        Overlattice o = overlattice(m, gens);
        Rational h = o.glue_order;
        bool ok = o.lattice.det() * h * h == m.det() && o.lattice.even() && is_integral(o.lattice.gram) &&
                  is_integral(inverse_q(o.basis));
        res.failures += !ok;
        res.nontrivial += h > 1;
    }
    return res;
}

// Sum over (c, d) = (a1, a2) mod 3, (c, d) != 0, of (c tau + d)^-k, divided by
// (-2 pi i)^k / (3^k (k-1)!).
inline std::complex<double> eisenstein_lattice_sum(long k, long a1, long a2, std::complex<double> tau) {
    const long C = 90, D = 3000;
    std::complex<double> s = 0;
    auto congruent = [](long x, long r) { return ((x - r) % 3 + 3) % 3 == 0; };
    for (long c = -C; c <= C; ++c) {
        if (!congruent(c, a1)) continue;
        for (long d = -D; d <= D; ++d) {
            if (!congruent(d, a2) || (c == 0 && d == 0)) continue;
            s += std::pow(double(c) * tau + double(d), -static_cast<int>(k));
        }
    }
    const double pi = 3.141592653589793;
    std::complex<double> ck = std::pow(std::complex<double>(0, -2 * pi), static_cast<int>(k)) / std::pow(3.0, double(k));
    for (long j = 2; j < k; ++j) ck /= double(j);
    return s / ck;
}

// Largest relative error of the q-expansions against the lattice sums at tau = 2i.
inline double eisenstein_max_relative_error() {
    const std::complex<double> tau(0, 2);
    const std::pair<long, long> labels[] = {{0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}};
    double worst = 0;
    for (long k : {6L, 10L})
        for (auto [a1, a2] : labels) {
            std::complex<double> series = eisenstein_level3(k, a1, a2, 8).evaluate(tau);
            std::complex<double> direct = eisenstein_lattice_sum(k, a1, a2, tau);
            worst = std::max(worst, std::abs(series - direct) / std::abs(direct));
        }
    return worst;
}

using UPoly = std::vector<Rational>;  // coefficient of x^i at index i

inline void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline UPoly remainder(UPoly f, const UPoly& g) {
    trim(f);
    while (f.size() >= g.size()) {
        Rational q = f.back() / g.back();
        std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] -= q * g[i];
        f.pop_back();
        trim(f);
    }
    return f;
}

// Res(f, g) = (-1)^(mn) lc(g)^(m - k) Res(g, f mod g), k = deg(f mod g)
inline Rational euclid_resultant(UPoly f, UPoly g) {
    trim(f);
    trim(g);
    long m = static_cast<long>(f.size()) - 1, n = static_cast<long>(g.size()) - 1;
    if (n == 0) return pow_q(g[0], m);
    UPoly r = remainder(f, g);
    if (r.empty()) return 0;
    long k = static_cast<long>(r.size()) - 1;
    Rational sign = (m * n) % 2 ? -1 : 1;
    return sign * pow_q(g.back(), m - k) * euclid_resultant(g, r);
}

inline Rational euclid_discriminant(const UPoly& f) {
    long n = static_cast<long>(f.size()) - 1;
    UPoly d;
    for (long i = 1; i <= n; ++i) d.push_back(f[static_cast<std::size_t>(i)] * i);
    Rational sign = (n * (n - 1) / 2) % 2 ? -1 : 1;
    return sign * euclid_resultant(f, d) / f.back();
}

// Coefficients of (1 - t^26) / ((1 - t^2)(1 - t^4)) below t^cutoff.
inline std::vector<long> closed_form_equivariant(int cutoff) {
    std::vector<long> a(static_cast<std::size_t>(cutoff), 0);
    a[0] = 1;
    if (26 < cutoff) a[26] = -1;
    for (int i = 2; i < cutoff; ++i) a[i] += a[i - 2];
    for (int i = 4; i < cutoff; ++i) a[i] += a[i - 4];
    return a;
}

}  // namespace oracle
