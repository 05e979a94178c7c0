#pragma once

// Theta series, Weil representations, the dimension formula for vector
// valued modular forms, level 3 Eisenstein series and the obstruction
// space for the lattice U + U(3) + E8 + E8.

#include "ballcalc/hermitian.hpp"
#include "ballcalc/qseries.hpp"
#include "ballcalc/shortvec.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>

namespace ballcalc {

// sum over x in M* with x + M = coset of q^(-<x,x>/2), known below prec.
inline QSeries theta_series(const Lattice& m, const DiscGroup::Elem& coset, const Rational& prec) {
    if (!m.negative_definite()) throw std::invalid_argument("theta_series: lattice not negative definite");
    DiscGroup a(m);
    QSeries out(1, prec);
    Rational bound = 2 * prec;
    enumerate_short(m, a.lift(coset), bound, [&](const QVec&, const Rational& q) {
        Rational e = q / 2;
        if (e < prec) out.set(e, out.coeff(e) + CycNum(1));
    });
    return out;
}

// ---------------------------------------------------------------------------
// Weil representation

inline std::size_t rank_c(CMat a) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        CycNum inv = a[r][c].inverse();
        for (auto& e : a[r]) e = e * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            CycNum f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

inline CMat identity_c(std::size_t n) {
    CMat m(n, CVec(n, CycNum(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline CMat conj(const CMat& a) {
    CMat out = a;
    for (auto& r : out)
        for (auto& e : r) e = e.conj();
    return out;
}

struct WeilRep {
    std::vector<DiscGroup::Elem> elements;
    std::vector<std::string> labels;  // type label per element
    int b_plus = 0, b_minus = 0;
    CMat matT, matS;  // columns are images of the basis vectors e_alpha
    bool dual = false;
};

// rho(T) e_a = e(q(a)/2) e_a,
// rho(S) e_a = e((b- - b+)/8) / sqrt|A| * sum_b e(-b(a, b)) e_b;
// the dual representation is the complex conjugate.
inline WeilRep weil_rep(const Lattice& m, bool dual) {
    DiscGroup a(m);
    auto in = m.inertia();
    WeilRep w;
    w.b_plus = in.pos;
    w.b_minus = in.neg;
    w.dual = dual;
    w.elements = a.elements(2000);
    for (const auto& e : w.elements) w.labels.push_back(disc_type_label(a, e));
    std::size_t n = w.elements.size();
    // prefactor e((b- - b+)/8) / sqrt(n), supported only inside Q(w)
    long sig = ((w.b_plus - w.b_minus) % 8 + 8) % 8;
    Integer root;
    CycNum pref;
    if (sig % 4 == 0) {
        if (!mpz_perfect_square_p(Integer(n).get_mpz_t())) throw std::domain_error("weil_rep: prefactor not in Q(w)");
        root = sqrt(Integer(n));
        pref = CycNum(rat(sig == 0 ? 1 : -1, 1) / Rational(root));
    } else if (sig % 4 == 2) {
        // e(-sig/8) = -+i ; i / sqrt(3 m^2) = sqrt(-3) / (3m)
        if (n % 3 != 0 || !mpz_perfect_square_p(Integer(n / 3).get_mpz_t()))
            throw std::domain_error("weil_rep: prefactor not in Q(w)");
        root = sqrt(Integer(n / 3));
        CycNum i_over = CycNum::sqrt_m3() * CycNum(1 / (3 * Rational(root)));
        pref = sig == 6 ? i_over : -i_over;  // e((b- - b+)/8) = e(-sig/8)
    } else {
        throw std::domain_error("weil_rep: prefactor not in Q(w)");
    }
    w.matT.assign(n, CVec(n, CycNum(0)));
    w.matS.assign(n, CVec(n, CycNum(0)));
    for (std::size_t i = 0; i < n; ++i) {
        w.matT[i][i] = CycNum::exp_pi_i(a.q(w.elements[i]));
        for (std::size_t j = 0; j < n; ++j) w.matS[j][i] = pref * CycNum::exp_pi_i(-2 * a.b(w.elements[i], w.elements[j]));
    }
    if (dual) {
        w.matT = conj(w.matT);
        w.matS = conj(w.matS);
    }
    return w;
}

struct SymRep {
    std::vector<std::string> basis;  // class labels, E_t = sum of e_a over class t
    CMat matT, matS;
};

// Matrices of the representation on the span of class sums; throws when
// that span is not invariant.
inline SymRep symmetrize(const WeilRep& w, const std::vector<std::string>& order) {
    std::size_t n = w.elements.size(), k = order.size();
    std::vector<CVec> sums;
    for (const auto& t : order) {
        CVec v(n, CycNum(0));
        for (std::size_t i = 0; i < n; ++i)
            if (w.labels[i] == t) v[i] = 1;
        sums.push_back(v);
    }
    auto express = [&](const CMat& mat) {
        CMat out(k, CVec(k, CycNum(0)));
        for (std::size_t j = 0; j < k; ++j) {
            CVec img = matvec(mat, sums[j]);
            for (std::size_t t = 0; t < k; ++t) {
                std::optional<CycNum> val;
                for (std::size_t i = 0; i < n; ++i) {
                    if (w.labels[i] != order[t]) continue;
                    if (val && *val != img[i]) throw std::domain_error("symmetrize: class sums not invariant");
                    val = img[i];
                }
                out[t][j] = val.value_or(CycNum(0));
            }
            for (std::size_t i = 0; i < n; ++i)
                if (std::find(order.begin(), order.end(), w.labels[i]) == order.end() && !img[i].is_zero())
                    throw std::domain_error("symmetrize: image leaves the class span");
        }
        return out;
    };
    return {order, express(w.matT), express(w.matS)};
}

inline const std::vector<std::string>& ldm_type_order() {
    static const std::vector<std::string> order = {"00", "0", "4/3", "2/3"};
    return order;
}

inline SymRep ldm_dual_rep() { return symmetrize(weil_rep(build_standard("L_dm"), true), ldm_type_order()); }

// ---------------------------------------------------------------------------
// Dimension formula

namespace detail {

using CxMat = Eigen::MatrixXcd;

inline CxMat to_eigen(const CMat& m) {
    CxMat out(m.size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m[i][j].to_complex();
    return out;
}

// sum of t in [0, 1) over eigenvalues e^(2 pi i t), rounded to 1/(12 dim)
inline Rational alpha_invariant(const CxMat& m) {
    Eigen::ComplexEigenSolver<CxMat> es(m);
    if (es.info() != Eigen::Success) throw std::runtime_error("alpha: eigenvalue computation failed");
    auto ev = es.eigenvalues();
    if (static_cast<std::size_t>(ev.size()) != static_cast<std::size_t>(m.rows()))
        throw std::logic_error("alpha: eigenvalue multiplicities do not sum to the dimension");
    const double two_pi = 6.283185307179586;
    double sum = 0;
    for (int i = 0; i < ev.size(); ++i) {
        if (std::abs(std::abs(ev[i]) - 1) > 1e-8) throw std::logic_error("alpha: eigenvalue off the unit circle");
        double t = std::arg(ev[i]) / two_pi;
        if (t < -1e-10) t += 1;
        if (t > 1 - 1e-10) t -= 1;
        if (t < 0) t = 0;
        sum += t;
    }
    long grid = 12 * m.rows();
    long k = std::lround(sum * grid);
    if (std::abs(sum * grid - k) > 1e-6) throw std::logic_error("alpha: value not on the rounding grid");
    return rat(k, grid);
}

}  // namespace detail

struct DimensionReport {
    Rational total, eisenstein, cusp;
    long d = 0;
    Rational alpha_S, alpha_ST, alpha_T;
};

// dim M_k(rho) = d + d k/12 - alpha(e^(k pi i/2) S) - alpha((e^(k pi i/3) S T)^(-1)) - alpha(T)
// where d = dim{x : Z x = (-1)^k x} for Z = S^2, the image of -I.
inline DimensionReport vvmf_dimension(long k, const CMat& matT, const CMat& matS) {
    if (k <= 2) throw std::invalid_argument("vvmf_dimension: weight must exceed 2");
    std::size_t n = matT.size();
    CMat z = matmul(matS, matS);
    CycNum sign = (k % 2) ? CycNum(-1) : CycNum(1);
    CMat zm = z;
    for (std::size_t i = 0; i < n; ++i) zm[i][i] -= sign;
    DimensionReport r;
    r.d = static_cast<long>(n - rank_c(zm));
    const double pi = 3.141592653589793;
    std::complex<double> eS = std::polar(1.0, k * pi / 2), eST = std::polar(1.0, k * pi / 3);
    auto S = detail::to_eigen(matS), T = detail::to_eigen(matT);
    r.alpha_S = detail::alpha_invariant(eS * S);
    detail::CxMat st = eST * (S * T);
    r.alpha_ST = detail::alpha_invariant(st.inverse());
    r.alpha_T = detail::alpha_invariant(T);
    r.total = Rational(r.d) + Rational(r.d * k, 12) - r.alpha_S - r.alpha_ST - r.alpha_T;
    r.total.canonicalize();
    // Eisenstein part: T-invariant vectors in the (-1)^k eigenspace of Z
    CMat stacked = zm;
    for (std::size_t i = 0; i < n; ++i) {
        CVec row(n, CycNum(0));
        for (std::size_t j = 0; j < n; ++j) row[j] = matT[i][j] - (i == j ? CycNum(1) : CycNum(0));
        stacked.push_back(row);
    }
    r.eisenstein = Rational(static_cast<long>(n - rank_c(stacked)));
    r.cusp = r.total - r.eisenstein;
    return r;
}

// ---------------------------------------------------------------------------
// Level 3 Eisenstein series, normalised by c_k = (-2 pi i)^k / (3^k (k-1)!)

inline Rational eisenstein_level3_constant(long k, long a1, long a2) {
    if (((a1 % 3) + 3) % 3 != 0) return 0;
    if (((a2 % 3) + 3) % 3 == 0) throw std::invalid_argument("eisenstein_level3: label (0,0)");
    // (1 - 3^-k) zeta(k) / c_k = -(3^k - 1) B_k / (2k) for even k
    auto B = bernoulli_numbers(static_cast<int>(k));
    return -Rational(pow_z(3, k) - 1) * B[k] / (2 * k);
}

inline QSeries eisenstein_level3(long k, long a1, long a2, const Rational& prec) {
    if (k != 2 && k != 6 && k != 10) throw std::invalid_argument("eisenstein_level3: weight must be 2, 6 or 10");
    a1 = ((a1 % 3) + 3) % 3;
    a2 = ((a2 % 3) + 3) % 3;
    if (a1 == 0 && a2 == 0) throw std::invalid_argument("eisenstein_level3: label (0,0)");
    QSeries out(3, prec);
    out.set(Rational(0), CycNum(eisenstein_level3_constant(k, a1, a2)));
    for (long n = 1; Rational(n, 3) < prec; ++n) {
        CycNum c(0);
        for (long d = 1; d <= n; ++d) {
            if (n % d) continue;
            long e = n / d;
            Rational dk(pow_z(d, k - 1));
            if (e % 3 == a1) c += CycNum(dk) * CycNum::w_pow(a2 * d);
            if (e % 3 == (3 - a1) % 3) c += CycNum((k % 2 ? -1 : 1) * dk) * CycNum::w_pow(-a2 * d);
        }
        out.set(rat(n, 3), c);
    }
    return out;
}

// E_1..E_4 of the obstruction space use the labels (0,1), (1,0), (1,1), (1,2).
inline std::array<QSeries, 4> eisenstein_quadruple(long k, const Rational& prec) {
    return {eisenstein_level3(k, 0, 1, prec), eisenstein_level3(k, 1, 0, prec), eisenstein_level3(k, 1, 1, prec),
            eisenstein_level3(k, 1, 2, prec)};
}

// Weight 2 series carry a label independent non-holomorphic term; only
// combinations whose coefficients sum to zero are meaningful.
inline QSeries weight2_combination(const std::array<QSeries, 4>& g, const std::array<CycNum, 4>& c) {
    CycNum s(0);
    for (const auto& x : c) s += x;
    if (!s.is_zero()) throw std::logic_error("weight 2 combination does not cancel the non-holomorphic part");
    QSeries out = c[0] * g[0];
    for (int i = 1; i < 4; ++i) out = out + c[i] * g[i];
    return out;
}

// ---------------------------------------------------------------------------
// Vector valued forms on the four type classes of A_L

struct VVForm {
    std::vector<std::string> labels;
    std::map<std::string, QSeries> comp;
    Rational weight;
    bool dual = true;

    const QSeries& operator[](const std::string& t) const { return comp.at(t); }
};

// Every exponent of the component for class t lies in -+q_t/2 + Z
// (minus for the dual representation).
inline bool satisfies_t_law(const VVForm& f) {
    for (const auto& [t, s] : f.comp) {
        Rational q = t == "00" ? Rational(0) : parse_rational(t);
        Rational shift = f.dual ? Rational(-q / 2) : Rational(q / 2);
        for (const auto& [k, c] : s.terms()) {
            Rational e = rat(k, s.grid());
            if (!is_integer(Rational(e - shift))) return false;
        }
    }
    return true;
}

// Components of a VVForm are class totals, sum over gamma in class t of the
// e_gamma coordinate. In those coordinates rho(S) acts by the transpose of
// the class-sum matrix. Returns the largest deviation from
// F(-1/tau) = tau^k rho(S) F(tau) at the fixed point tau = i.
inline double s_law_residual(const VVForm& f, const SymRep& rep) {
    std::size_t n = f.labels.size();
    if (rep.basis != f.labels) throw std::invalid_argument("s_law_residual: label order mismatch");
    Eigen::VectorXcd x(n);
    for (std::size_t i = 0; i < n; ++i) x(i) = f[f.labels[i]].evaluate({0, 1});
    std::complex<double> ik = std::pow(std::complex<double>(0, 1), f.weight.get_d());
    Eigen::VectorXcd y = ik * (detail::to_eigen(rep.matS).transpose() * x);
    return (x - y).cwiseAbs().maxCoeff();
}

// Holomorphic Eisenstein tuple of weight 10 for the dual representation,
// scaled so that the zero component has constant term -1/2.
inline VVForm obstruction_eisenstein(const Rational& prec) {
    auto E = eisenstein_quadruple(10, prec);
    const CycNum w = CycNum::w(), w2 = CycNum::w2();
    QSeries sum = E[1] + E[2] + E[3];
    QSeries h00 = E[0] + CycNum(rat(1, 3)) * sum;
    Rational scale = rat(-1, 2) / h00.coeff(0).a;
    VVForm f;
    f.labels = ldm_type_order();
    f.weight = 10;
    f.comp["00"] = CycNum(scale) * h00;
    f.comp["0"] = CycNum(scale * rat(4, 3)) * sum;
    f.comp["4/3"] = CycNum(scale * rat(2, 3)) * (E[1] + w2 * E[2] + w * E[3]);
    f.comp["2/3"] = CycNum(scale * rat(2, 3)) * (E[1] + w * E[2] + w2 * E[3]);
    return f;
}

struct CuspBasis {
    VVForm case_a, case_b;
};

// Case A: eta^8 times weight 6 Eisenstein combinations.
// Case B: eta^16 times cancelling weight 2 combinations.
inline CuspBasis obstruction_cusp_basis(const Rational& prec) {
    const CycNum w = CycNum::w(), w2 = CycNum::w2();
    // eta^8 starts at q^(1/3), eta^16 at q^(2/3); compute the factors a bit
    // further so the products are known below prec.
    auto F = eisenstein_quadruple(6, prec);
    QSeries e8 = eta_power(8, prec + 1);
    CuspBasis b;
    b.case_a.labels = ldm_type_order();
    b.case_a.weight = 10;
    QSeries a00 = e8 * (F[1] + w * F[2] + w2 * F[3]);
    b.case_a.comp["00"] = a00.truncate(prec);
    b.case_a.comp["0"] = (CycNum(-2) * a00).truncate(prec);
    b.case_a.comp["4/3"] = (e8 * (CycNum(3) * F[0] - F[1] - F[2] - F[3])).truncate(prec);
    b.case_a.comp["2/3"] = (CycNum(2) * (e8 * (F[1] + w2 * F[2] + w * F[3]))).truncate(prec);

    auto G = eisenstein_quadruple(2, prec);
    QSeries e16 = eta_power(16, prec + 1);
    b.case_b.labels = ldm_type_order();
    b.case_b.weight = 10;
    QSeries g00 = weight2_combination(G, {CycNum(0), CycNum(1), w2, w});
    b.case_b.comp["00"] = (e16 * g00).truncate(prec);
    b.case_b.comp["0"] = (CycNum(-2) * (e16 * g00)).truncate(prec);
    b.case_b.comp["4/3"] = (e16 * weight2_combination(G, {CycNum(0), CycNum(2), 2 * w, 2 * w2})).truncate(prec);
    b.case_b.comp["2/3"] = (e16 * weight2_combination(G, {CycNum(3), CycNum(-1), CycNum(-1), CycNum(-1)})).truncate(prec);
    return b;
}

}  // namespace ballcalc
