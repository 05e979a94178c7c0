#pragma once

// Local computations at the strictly semistable point x0^6 x1^6 of binary
// forms of degree 12: the Luna slice, the discriminant of the versal sextic
// and the vanishing order of the degree 12 discriminant along slice lines.

#include "ballcalc/scalars.hpp"
#include "ballcalc/matrix.hpp"

#include <map>
#include <algorithm>
#include <random>
#include <set>

namespace ballcalc {

// Polynomial with rational coefficients in named variables.
class MultiPoly {
public:
    using Exp = std::vector<int>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(const std::vector<std::string>& vars, const Rational& c) {
        MultiPoly p(vars);
        p.add_term(Exp(vars.size(), 0), c);
        return p;
    }
    static MultiPoly variable(const std::vector<std::string>& vars, std::size_t i, const Rational& c = 1) {
        MultiPoly p(vars);
        Exp e(vars.size(), 0);
        e.at(i) = 1;
        p.add_term(e, c);
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exp, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Exp& e, const Rational& c) {
        if (e.size() != vars_.size()) throw std::invalid_argument("MultiPoly: exponent length mismatch");
        Rational& x = terms_[e];
        x += c;
        if (x == 0) terms_.erase(e);
    }

    Rational coeff(const Exp& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    static int total_degree(const Exp& e) {
        int s = 0;
        for (int x : e) s += x;
        return s;
    }
    int min_total_degree() const {
        if (terms_.empty()) throw std::domain_error("MultiPoly: zero polynomial has no degree");
        int m = total_degree(terms_.begin()->first);
        for (const auto& [e, c] : terms_) m = std::min(m, total_degree(e));
        return m;
    }

    MultiPoly operator-() const {
        MultiPoly out(vars_);
        for (const auto& [e, c] : terms_) out.terms_[e] = -c;
        return out;
    }
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        check_same(a, b);
        MultiPoly out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        check_same(a, b);
        MultiPoly out(a.vars_);
        Exp e(a.vars_.size());
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }
    friend MultiPoly operator*(const Rational& k, const MultiPoly& a) {
        MultiPoly out(a.vars_);
        if (k != 0)
            for (const auto& [e, c] : a.terms_) out.terms_[e] = k * c;
        return out;
    }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

    // a / d when d divides a exactly; throws otherwise. Uses the lex order
    // of exponent vectors.
    friend MultiPoly exact_div(const MultiPoly& a, const MultiPoly& d) {
        check_same(a, d);
        if (d.is_zero()) throw std::domain_error("MultiPoly: division by zero");
        MultiPoly q(a.vars_), r = a;
        const auto& [ed, cd] = *d.terms_.rbegin();
        Exp m(a.vars_.size());
        while (!r.is_zero()) {
            const auto& [er, cr] = *r.terms_.rbegin();
            for (std::size_t i = 0; i < m.size(); ++i) {
                m[i] = er[i] - ed[i];
                if (m[i] < 0) throw std::domain_error("MultiPoly: inexact division");
            }
            Rational c = cr / cd;
            MultiPoly mono(a.vars_);
            mono.add_term(m, c);
            q.add_term(m, c);
            r = r - mono * d;
        }
        return q;
    }

    Rational evaluate(const std::vector<Rational>& x) const {
        if (x.size() != vars_.size()) throw std::invalid_argument("MultiPoly: wrong number of values");
        Rational s = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i]) t *= pow_q(x[i], e[i]);
            s += t;
        }
        return s;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            bool neg = c < 0;
            Rational a = neg ? Rational(-c) : c;
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (!e[i]) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i] + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
            }
            std::string cs = ballcalc::to_string(a);
            std::string term = mono.empty() ? cs : (a == 1 ? mono : cs + "*" + mono);
            out += out.empty() ? (neg ? "-" + term : term) : (neg ? " - " : " + ") + term;
        }
        return out;
    }

private:
    static void check_same(const MultiPoly& a, const MultiPoly& b) {
        if (a.vars_ != b.vars_) throw std::invalid_argument("MultiPoly: variable lists differ");
    }

    std::vector<std::string> vars_;
    std::map<Exp, Rational> terms_;
};

using PolyMat = std::vector<std::vector<MultiPoly>>;

// Fraction-free Gaussian elimination; every division is exact.
inline MultiPoly bareiss_det(PolyMat m) {
    std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("bareiss_det: empty matrix");
    const auto vars = m[0][0].vars();
    MultiPoly prev = MultiPoly::constant(vars, 1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return MultiPoly(vars);
            std::swap(m[p], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = MultiPoly(vars);
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// Coefficients are listed from the leading term down.
inline PolyMat sylvester_matrix(const std::vector<MultiPoly>& f, const std::vector<MultiPoly>& g) {
    if (f.size() < 2 || g.size() < 2) throw std::invalid_argument("sylvester_matrix: degrees must be positive");
    std::size_t m = f.size() - 1, n = g.size() - 1, s = m + n;
    const auto& vars = f[0].vars();
    PolyMat out(s, std::vector<MultiPoly>(s, MultiPoly(vars)));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j <= m; ++j) out[r][r + j] = f[j];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j <= n; ++j) out[n + r][r + j] = g[j];
    return out;
}

inline MultiPoly resultant(const std::vector<MultiPoly>& f, const std::vector<MultiPoly>& g) {
    return bareiss_det(sylvester_matrix(f, g));
}

inline std::vector<MultiPoly> derivative(const std::vector<MultiPoly>& f) {
    std::size_t n = f.size() - 1;
    std::vector<MultiPoly> d;
    for (std::size_t j = 0; j < n; ++j) d.push_back(Rational(static_cast<long>(n - j)) * f[j]);
    return d;
}

// (-1)^(n(n-1)/2) Res(f, f') / a_n for f of degree n with leading coefficient a_n.
inline MultiPoly discriminant(const std::vector<MultiPoly>& f) {
    std::size_t n = f.size() - 1;
    if (n < 2) throw std::invalid_argument("discriminant: degree must be at least 2");
    if (f[0].is_zero()) throw std::invalid_argument("discriminant: zero leading coefficient");
    MultiPoly r = exact_div(resultant(f, derivative(f)), f[0]);
    return (n * (n - 1) / 2) % 2 ? -r : r;
}

// ---------------------------------------------------------------------------
// Slice data

struct SliceData {
    std::vector<int> exponents;  // i in x0^(12-i) x1^i
    std::vector<int> weights;    // 12 - 2i
    bool spans_normal_space = false;
    Rational diagonal_scalar, antidiagonal_scalar;
};

// Binary form of degree d as coefficients a_i of x0^(d-i) x1^i, acted on
// by substitution (x0, x1) -> (a x0 + b x1, c x0 + d x1).
inline QVec act_on_binary_form(const QVec& f, const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    std::size_t deg = f.size() - 1;
    // powers of the two linear forms as coefficient vectors
    auto linpow = [&](const Rational& p, const Rational& q, std::size_t e) {
        QVec out(e + 1, Rational(0));
        for (std::size_t k = 0; k <= e; ++k) out[k] = Rational(binomial(e, k)) * pow_q(p, static_cast<long>(e - k)) * pow_q(q, static_cast<long>(k));
        return out;
    };
    QVec out(deg + 1, Rational(0));
    for (std::size_t i = 0; i <= deg; ++i) {
        if (f[i] == 0) continue;
        QVec u = linpow(a, b, deg - i), v = linpow(c, d, i);
        for (std::size_t j = 0; j < u.size(); ++j)
            for (std::size_t k = 0; k < v.size(); ++k) out[j + k] += f[i] * u[j] * v[k];
    }
    return out;
}

inline SliceData slice_data() {
    SliceData s;
    for (int i = 0; i <= 12; ++i) {
        if (i >= 5 && i <= 7) continue;
        s.exponents.push_back(i);
        s.weights.push_back(12 - 2 * i);
    }
    // Orbit tangent at x0^6 x1^6: x0 d/dx1 and x1 d/dx0 give i = 5 and 7,
    // scaling gives i = 6. Together with the slice they span all 13 slots.
    QMat span;
    for (int i : s.exponents) {
        QVec v(13, Rational(0));
        v[i] = 1;
        span.push_back(v);
    }
    for (int i : {5, 6, 7}) {
        QVec v(13, Rational(0));
        v[i] = 6;
        span.push_back(v);
    }
    s.spans_normal_space = rank_q(span) == 13;
    QVec p(13, Rational(0));
    p[6] = 1;
    const Rational lam = rat(3, 7);
    QVec dq = act_on_binary_form(p, lam, 0, 0, 1 / lam);
    QVec aq = act_on_binary_form(p, 0, lam, -1 / lam, 0);
    auto scalar_of = [&](const QVec& img) {
        for (int i = 0; i <= 12; ++i)
            if (i != 6 && img[i] != 0) throw std::logic_error("slice_data: stabilizer moves x0^6 x1^6");
        return img[6];
    };
    s.diagonal_scalar = scalar_of(dq);
    s.antidiagonal_scalar = scalar_of(aq);
    return s;
}

// ---------------------------------------------------------------------------
// Discriminants

inline const std::vector<std::string>& sextic_vars() {
    static const std::vector<std::string> v = {"alpha", "beta", "gamma", "delta", "epsilon"};
    return v;
}

// Discriminant of x^6 + alpha x^4 + beta x^3 + gamma x^2 + delta x + epsilon.
inline MultiPoly sextic_discriminant() {
    const auto& v = sextic_vars();
    std::vector<MultiPoly> f = {MultiPoly::constant(v, 1), MultiPoly(v)};
    for (std::size_t i = 0; i < 5; ++i) f.push_back(MultiPoly::variable(v, i));
    return discriminant(f);
}

// Weighted degree with weight i for the coefficient of x^(6-i).
inline std::set<int> sextic_isobaric_weights(const MultiPoly& d) {
    const int w[5] = {2, 3, 4, 5, 6};
    std::set<int> out;
    for (const auto& [e, c] : d.terms()) {
        int s = 0;
        for (int i = 0; i < 5; ++i) s += w[i] * e[i];
        out.insert(s);
    }
    return out;
}

// Discriminant in t of x0^6 x1^6 + t * sum_i c_i x0^(12-i) x1^i over the slice.
inline MultiPoly disc12_along(const std::map<int, Rational>& direction) {
    const std::vector<std::string> v = {"t"};
    std::vector<MultiPoly> f(13, MultiPoly(v));
    f[6] = MultiPoly::constant(v, 1);
    for (const auto& [i, c] : direction) {
        if (i < 0 || i > 12 || (i >= 5 && i <= 7)) throw std::invalid_argument("disc12_along: exponent off the slice");
        f[i] = MultiPoly::variable(v, 0, c);
    }
    if (f[0].is_zero()) throw std::invalid_argument("disc12_along: direction must move the x0^12 coefficient");
    return discriminant(f);
}

inline int t_order(const MultiPoly& p) { return p.min_total_degree(); }

struct VanishingOrder {
    int order = 0;
    unsigned seed = 0;
    std::vector<std::map<int, Rational>> directions;
    std::vector<int> orders;
};

// Order of vanishing at t = 0 along pseudo-random slice lines. The generic
// order is the minimum, so further directions are drawn until two agree.
inline VanishingOrder disc12_vanishing_order(unsigned seed = 20240611, int max_tries = 6) {
    std::mt19937 gen(seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    VanishingOrder out;
    out.seed = seed;
    for (int k = 0; k < max_tries; ++k) {
        std::map<int, Rational> dir;
        for (int i : slice_data().exponents) {
            int n = 0;
            while (n == 0) n = num(gen);
            dir[i] = rat(n, den(gen));
        }
        out.directions.push_back(dir);
        out.orders.push_back(t_order(disc12_along(dir)));
        int m = *std::min_element(out.orders.begin(), out.orders.end());
        if (std::count(out.orders.begin(), out.orders.end(), m) >= 2) {
            out.order = m;
            return out;
        }
    }
    throw std::runtime_error("disc12_vanishing_order: no two directions agree");
}

}  // namespace ballcalc
