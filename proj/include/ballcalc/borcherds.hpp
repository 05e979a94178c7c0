#pragma once

// Borcherds lifts as bookkeeping: weight and Heegner divisor of a lift,
// existence of a product with a prescribed divisor via the obstruction
// pairing, quasi-pullback arithmetic, the Ma input form and restriction to
// the ball.

#include "ballcalc/modforms.hpp"

#include <map>

namespace ballcalc {

// Norm of a discriminant class as a rational in [0, 2), read off its label.
inline Rational label_norm(const std::string& t) { return t == "00" ? Rational(0) : parse_rational(t); }

// Multiplicities of Heegner divisors D_{t,n}, keyed by (class label, norm).
// One entry stands for the orbit {alpha, -alpha} of a class.
class HeegnerCombo {
public:
    using Key = std::pair<std::string, Rational>;

    HeegnerCombo() = default;
    explicit HeegnerCombo(std::string context) : context_(std::move(context)) {}

    const std::string& context() const { return context_; }
    const std::map<Key, Rational>& entries() const { return entries_; }

    void add(const std::string& label, const Rational& norm, const Rational& mult) {
        if (norm >= 0) throw std::invalid_argument("HeegnerCombo: norm must be negative");
        if (mod_q(norm - label_norm(label), 2) != 0)
            throw std::invalid_argument("HeegnerCombo: norm " + to_string(norm) + " not congruent to q(" + label + ") mod 2");
        Rational& m = entries_[{label, norm}];
        m += mult;
        if (m == 0) entries_.erase({label, norm});
    }

    Rational get(const std::string& label, const Rational& norm) const {
        auto it = entries_.find({label, norm});
        return it == entries_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const { return entries_.empty(); }

    friend bool operator==(const HeegnerCombo& a, const HeegnerCombo& b) { return a.entries_ == b.entries_; }

private:
    std::string context_;
    std::map<Key, Rational> entries_;
};

// m00 on D_{00,-2}, m43 on D_{4/3,-2/3}, m23 on D_{2/3,-4/3}.
inline HeegnerCombo ldm_combo(const Rational& m00, const Rational& m43, const Rational& m23) {
    HeegnerCombo c("L_dm");
    if (m00 != 0) c.add("00", -2, m00);
    if (m43 != 0) c.add("4/3", rat(-2, 3), m43);
    if (m23 != 0) c.add("2/3", rat(-4, 3), m23);
    return c;
}

struct LiftData {
    Rational weight;
    HeegnerCombo divisor;
};

// Weight c00(0)/2; every principal part term c q^e of component t gives
// D_{t,2e} with multiplicity c.
inline LiftData lift_weight_divisor(const VVForm& f, const std::string& context) {
    LiftData out{Rational(0), HeegnerCombo(context)};
    auto it = f.comp.find("00");
    if (it == f.comp.end()) throw std::invalid_argument("lift_weight_divisor: missing the 00 component");
    CycNum c0 = it->second.coeff(Rational(0));
    if (!c0.is_rational() || !is_integer(c0.a)) throw std::invalid_argument("lift_weight_divisor: non-integral constant term");
    if (Integer(c0.a.get_num() % 2) != 0) throw std::invalid_argument("lift_weight_divisor: odd constant term");
    out.weight = c0.a / 2;
    for (const auto& [t, s] : f.comp) {
        for (const auto& [k, c] : s.terms()) {
            Rational e = rat(k, s.grid());
            if (e >= 0) continue;
            if (!c.is_rational() || !is_integer(c.a))
                throw std::invalid_argument("lift_weight_divisor: non-integral principal part in component " + t);
            out.divisor.add(t, 2 * e, c.a);
        }
    }
    return out;
}

struct ProductCertificate {
    bool exists = false;
    Rational weight;  // meaningful only when exists
    std::vector<std::pair<std::string, Rational>> violated_pairings;
};

namespace detail {

inline Rational pair_with(const VVForm& g, const HeegnerCombo& c) {
    CycNum s(0);
    for (const auto& [key, m] : c.entries()) {
        const auto& [t, n] = key;
        s += g[t].coeff(-n / 2) * CycNum(m);
    }
    if (!s.is_rational()) throw std::logic_error("obstruction pairing left Q");
    return s.a;
}

}  // namespace detail

// A combo on A_{L_dm} is a divisor of a meromorphic form iff it pairs to zero
// with both cusp tuples; the weight then comes from the Eisenstein tuple.
inline ProductCertificate product_existence(const HeegnerCombo& c) {
    Rational top(1);
    for (const auto& [key, m] : c.entries()) {
        if (std::find(ldm_type_order().begin(), ldm_type_order().end(), key.first) == ldm_type_order().end())
            throw std::invalid_argument("product_existence: unknown class " + key.first);
        top = std::max(top, Rational(-key.second / 2 + 1));
    }
    auto cusp = obstruction_cusp_basis(top);
    ProductCertificate cert;
    Rational a = detail::pair_with(cusp.case_a, c), b = detail::pair_with(cusp.case_b, c);
    if (a != 0) cert.violated_pairings.push_back({"case_a", a});
    if (b != 0) cert.violated_pairings.push_back({"case_b", b});
    cert.exists = cert.violated_pairings.empty();
    if (cert.exists) cert.weight = detail::pair_with(obstruction_eisenstein(top), c);
    return cert;
}

struct QuasiPullback {
    Rational weight;
    long positive_roots = 0;
    HeegnerCombo divisor;
};

// Quasi-pullback of the weight 12 form along a complement R: the weight
// rises by the positive roots of R, and every R* vector of norm n_R in
// (-2, 0) leaves a divisor of norm -2 - n_R, counted once per +-pair.
inline QuasiPullback quasi_pullback(const Lattice& r) {
    QuasiPullback out;
    out.divisor = HeegnerCombo(r.name);
    out.divisor.add("00", -2, 1);
    if (r.rank() == 0) {
        out.weight = 12;
        return out;
    }
    if (!r.even() || !r.negative_definite()) throw std::invalid_argument("quasi_pullback: need an even negative definite lattice");
    out.positive_roots = root_data(r).second;
    out.weight = 12 + out.positive_roots;
    DiscGroup a(r);
    std::map<Rational, long> counts;
    for (const auto& g : a.elements(100000)) {
        if (a.is_zero(g)) continue;
        for (const auto& [n, cnt] : coset_norm_counts(r, a.lift(g), Rational(2)))
            if (n > -2 && n < 0) counts[n] += cnt;
    }
    for (const auto& [n, cnt] : counts) {
        if (cnt % 2) throw std::logic_error("quasi_pullback: unpaired dual vectors");
        Rational ln = -2 - n;
        out.divisor.add(to_string(mod_q(ln, 2)), ln, Rational(cnt / 2));
    }
    return out;
}

// The L_dm input form, each component a theta product over Delta.
inline VVForm ma_input(const Rational& prec) {
    Lattice a2 = root_lattice('A', 2), e6 = root_lattice('E', 6);
    DiscGroup da(a2), de(e6);
    // generator cosets; A2 has order 3 and E6 has order 3
    DiscGroup::Elem ga = da.zero(), ge = de.zero();
    ga[0] = 1;
    ge[0] = 1;
    Rational p = prec + 1;
    QSeries ta = theta_series(a2, da.zero(), p), ta1 = theta_series(a2, ga, p);
    QSeries te = theta_series(e6, de.zero(), p), te1 = theta_series(e6, ge, p);
    QSeries inv = delta_series(p + 1).inverse();
    VVForm f;
    f.labels = ldm_type_order();
    f.weight = -2;
    f.dual = false;
    f.comp["00"] = (ta * te * inv).truncate(prec);
    f.comp["0"] = (ta1 * te1 * inv).truncate(prec);
    f.comp["4/3"] = (te1 * inv).truncate(prec);
    f.comp["2/3"] = (ta1 * inv).truncate(prec);
    return f;
}

struct BallDivisor {
    Rational nodal, hyperelliptic, vertical;
    friend bool operator==(const BallDivisor&, const BallDivisor&) = default;
};

// Restriction to the ball triples multiplicities. D_{-2} meets both the
// nodal and the hyperelliptic components, D_{-2/3} only the hyperelliptic
// one and D_{-4/3} the vertical one.
inline BallDivisor ball_divisor(const HeegnerCombo& c) {
    BallDivisor b;
    for (const auto& [key, m] : c.entries()) {
        const auto& [t, n] = key;
        if (t == "00" && n == -2) {
            b.nodal += 3 * m;
            b.hyperelliptic += 3 * m;
        } else if (t == "4/3" && n == rat(-2, 3)) {
            b.hyperelliptic += 3 * m;
        } else if (t == "2/3" && n == rat(-4, 3)) {
            b.vertical += 3 * m;
        } else {
            throw std::invalid_argument("ball_divisor: no ball component for D_{" + t + "," + to_string(n) + "}");
        }
    }
    return b;
}

struct CubeRootForm {
    Rational weight, multiplicity;
};

// Allcock's form is a cube root of the E8 quasi-pullback; its data is
// derived by division, not by construction.
inline CubeRootForm allcock_form() {
    auto q = quasi_pullback(root_lattice('E', 8));
    Rational on_ball = 3 * q.divisor.get("00", -2);
    return {q.weight / 3, on_ball / 3};
}

}  // namespace ballcalc
