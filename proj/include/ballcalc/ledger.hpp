#pragma once

// Linear bookkeeping for divisor classes. A RelationSet is the free Q-module
// on named classes modulo its relations; a distinguished set of basis
// classes is declared independent, and a system is inconsistent exactly
// when its relations force a nonzero combination of basis classes to vanish.

#include "ballcalc/matrix.hpp"

#include <map>
#include <set>

namespace ballcalc {

class DivisorExpr {
public:
    DivisorExpr() = default;
    DivisorExpr(std::initializer_list<std::pair<const std::string, Rational>> terms) {
        for (const auto& [s, c] : terms) add(s, c);
    }
    static DivisorExpr symbol(const std::string& s, const Rational& c = 1) {
        DivisorExpr e;
        e.add(s, c);
        return e;
    }

    const std::map<std::string, Rational>& coeffs() const { return c_; }
    Rational operator[](const std::string& s) const {
        auto it = c_.find(s);
        return it == c_.end() ? Rational(0) : it->second;
    }
    bool is_zero() const { return c_.empty(); }

    void add(const std::string& s, const Rational& c) {
        Rational& x = c_[s];
        x += c;
        if (x == 0) c_.erase(s);
    }

    DivisorExpr& operator+=(const DivisorExpr& o) {
        for (const auto& [s, c] : o.c_) add(s, c);
        return *this;
    }
    friend DivisorExpr operator+(DivisorExpr a, const DivisorExpr& b) { return a += b; }
    friend DivisorExpr operator*(const Rational& k, const DivisorExpr& a) {
        DivisorExpr out;
        if (k != 0)
            for (const auto& [s, c] : a.c_) out.c_[s] = k * c;
        return out;
    }
    friend DivisorExpr operator-(const DivisorExpr& a, const DivisorExpr& b) { return a + Rational(-1) * b; }
    friend bool operator==(const DivisorExpr&, const DivisorExpr&) = default;

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (const auto& [s, c] : c_) {
            bool neg = c < 0;
            Rational a = neg ? Rational(-c) : c;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            out += (a == 1 ? "" : ballcalc::to_string(a) + "*") + s;
        }
        return out;
    }

private:
    std::map<std::string, Rational> c_;
};

// Linear map on classes given on generators; pulls back expressions from
// one universe of classes into another.
struct PullbackMap {
    std::string name;
    std::map<std::string, DivisorExpr> images;

    DivisorExpr operator()(const DivisorExpr& e) const {
        DivisorExpr out;
        for (const auto& [s, c] : e.coeffs()) {
            auto it = images.find(s);
            if (it == images.end()) throw std::invalid_argument(name + ": no image for class " + s);
            out += c * it->second;
        }
        return out;
    }
};

struct Relation {
    std::string name;
    DivisorExpr left, right;
    DivisorExpr difference() const { return left - right; }
};

// An unknown coefficient x_u multiplying a fixed class expression.
struct UnknownTerm {
    std::string unknown;
    DivisorExpr expr;
};

struct SolveResult {
    bool consistent = false;
    bool unique = false;
    std::map<std::string, Rational> values;
};

struct Repair {
    std::string relation;
    std::string symbol;        // class whose coefficient was freed
    Rational printed, repaired;  // as coefficients on the right hand side
};

struct ConsistencyReport {
    bool consistent = true;
    std::vector<DivisorExpr> forced_basis_relations;  // nonzero basis combinations forced to vanish
    std::vector<std::string> conflicting;             // relations whose removal restores consistency
    std::vector<Repair> repairs;
};

class RelationSet {
public:
    RelationSet() = default;
    RelationSet(std::set<std::string> universe, std::set<std::string> basis) : universe_(std::move(universe)), basis_(std::move(basis)) {
        for (const auto& b : basis_)
            if (!universe_.count(b)) throw std::invalid_argument("RelationSet: basis class " + b + " not declared");
    }

    const std::set<std::string>& universe() const { return universe_; }
    const std::set<std::string>& basis() const { return basis_; }
    const std::vector<Relation>& relations() const { return rels_; }

    void add(const std::string& name, const DivisorExpr& left, const DivisorExpr& right) {
        check(left);
        check(right);
        rels_.push_back({name, left, right});
    }

    RelationSet without(std::size_t i) const {
        RelationSet r = *this;
        r.rels_.erase(r.rels_.begin() + static_cast<long>(i));
        return r;
    }

    // Reduces e modulo the relations to a combination of non-pivot classes.
    DivisorExpr normal_form(const DivisorExpr& e) const {
        check(e);
        auto ech = echelon();
        QVec v = to_vec(e);
        for (const auto& [col, row] : ech.pivots) {
            if (v[col] == 0) continue;
            Rational f = v[col];
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
        }
        return from_vec(v);
    }

    // Relations forced among basis classes only; empty iff consistent.
    std::vector<DivisorExpr> forced_basis_relations() const {
        std::vector<DivisorExpr> out;
        for (const auto& [col, row] : echelon().pivots)
            if (basis_.count(order()[col])) out.push_back(from_vec(row));
        return out;
    }

    bool consistent() const { return forced_basis_relations().empty(); }

    // Solves sum_u x_u expr_u == target modulo the relations.
    SolveResult solve(const DivisorExpr& target, const std::vector<UnknownTerm>& unknowns) const {
        SolveResult res;
        if (!consistent()) return res;
        DivisorExpr t = normal_form(target);
        std::vector<DivisorExpr> cols;
        for (const auto& u : unknowns) cols.push_back(normal_form(u.expr));
        std::set<std::string> syms;
        for (const auto& [s, c] : t.coeffs()) syms.insert(s);
        for (const auto& c : cols)
            for (const auto& [s, x] : c.coeffs()) syms.insert(s);
        std::size_t n = unknowns.size();
        QMat aug;
        for (const auto& s : syms) {
            QVec row(n + 1);
            for (std::size_t j = 0; j < n; ++j) row[j] = cols[j][s];
            row[n] = t[s];
            aug.push_back(row);
        }
        QMat r = aug;
        rref(r);
        std::size_t rank = 0;
        std::vector<long> pivot_of(n, -1);
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::size_t j = 0;
            while (j <= n && r[i][j] == 0) ++j;
            if (j > n) continue;
            if (j == n) return res;  // 0 = nonzero
            pivot_of[j] = static_cast<long>(i);
            ++rank;
        }
        res.consistent = true;
        res.unique = rank == n;
        if (res.unique)
            for (std::size_t j = 0; j < n; ++j) res.values[unknowns[j].unknown] = r[pivot_of[j]][n];
        return res;
    }

    // Unique value of one unknown coefficient in target == x * expr.
    Rational solve_unknown(const DivisorExpr& target, const DivisorExpr& expr, const std::string& name = "x") const {
        auto r = solve(target, {{name, expr}});
        if (!r.consistent) throw std::domain_error("solve_unknown: inconsistent system");
        if (!r.unique) throw std::domain_error("solve_unknown: underdetermined system");
        return r.values.at(name);
    }

    ConsistencyReport consistency_report() const {
        ConsistencyReport rep;
        rep.forced_basis_relations = forced_basis_relations();
        rep.consistent = rep.forced_basis_relations.empty();
        if (rep.consistent) return rep;
        for (std::size_t i = 0; i < rels_.size(); ++i) {
            RelationSet rest = without(i);
            if (!rest.consistent()) continue;
            rep.conflicting.push_back(rels_[i].name);
            // Free one coefficient of the culprit at a time.
            DivisorExpr d = rels_[i].difference();
            for (const auto& [s, c] : d.coeffs()) {
                DivisorExpr base = d;
                base.add(s, -c);
                auto r = rest.solve(Rational(-1) * base, {{"x", DivisorExpr::symbol(s)}});
                if (r.consistent && r.unique) {
                    // the repaired relation must not break consistency
                    RelationSet fixed = rest;
                    DivisorExpr rd = base;
                    rd.add(s, r.values["x"]);
                    fixed.rels_.push_back({rels_[i].name, rd, {}});
                    if (fixed.consistent()) rep.repairs.push_back({rels_[i].name, s, -c, -r.values["x"]});
                }
            }
        }
        return rep;
    }

private:
    struct Echelon {
        std::vector<std::pair<std::size_t, QVec>> pivots;  // pivot column and its reduced row
    };

    void check(const DivisorExpr& e) const {
        for (const auto& [s, c] : e.coeffs())
            if (!universe_.count(s)) throw std::invalid_argument("RelationSet: undeclared class " + s);
    }

    // Non-basis classes come first so that they are eliminated in favour of
    // basis classes.
    std::vector<std::string> order() const {
        std::vector<std::string> o;
        for (const auto& s : universe_)
            if (!basis_.count(s)) o.push_back(s);
        for (const auto& s : universe_)
            if (basis_.count(s)) o.push_back(s);
        return o;
    }

    QVec to_vec(const DivisorExpr& e) const {
        auto o = order();
        QVec v(o.size());
        for (std::size_t j = 0; j < o.size(); ++j) v[j] = e[o[j]];
        return v;
    }

    DivisorExpr from_vec(const QVec& v) const {
        auto o = order();
        DivisorExpr e;
        for (std::size_t j = 0; j < o.size(); ++j)
            if (v[j] != 0) e.add(o[j], v[j]);
        return e;
    }

    Echelon echelon() const {
        QMat m;
        for (const auto& r : rels_) m.push_back(to_vec(r.difference()));
        Echelon out;
        if (m.empty()) return out;
        auto piv = rref(m);
        for (std::size_t i = 0; i < piv.size(); ++i) out.pivots.push_back({piv[i], m[i]});
        return out;
    }

    std::set<std::string> universe_, basis_;
    std::vector<Relation> rels_;
};

// ---------------------------------------------------------------------------
// Twelve points on the line

// Coefficient of the boundary divisor D_k in K of M_{0,n} bar.
inline Rational mbar0n_canonical_coefficient(long n, long k) {
    if (n < 4 || k < 2 || 2 * k > n) throw std::invalid_argument("mbar0n_canonical_coefficient: need 2 <= k <= n/2");
    return rat(k * (n - k), n - 1) - 2;
}

// Weighted spaces 12 (1/(l+2) + eps), l = 0..4: level 0 is the ordered GIT
// quotient, level 1 the ordered Kirwan blow-up, level 4 is M_{0,12} bar.
inline std::string dclass(long k, long level) { return "D" + std::to_string(k) + "^(" + std::to_string(level) + ")"; }
inline std::string kclass(long level) { return "K^(" + std::to_string(level) + ")"; }

// Boundary divisors present at a level: D_2 and the D_k with k >= 7 - level.
inline std::vector<long> boundary_indices(long level) {
    std::vector<long> out = {2};
    for (long k = std::max(3L, 7 - level); k <= 6; ++k) out.push_back(k);
    return out;
}

// Canonical class formulas for the five spaces together with
// phi_1^* D_2^(0) = D_2^(1) + 15 D_6^(1).
struct HassettKeelLedger {
    RelationSet rels;
    PullbackMap phi1;
};

inline HassettKeelLedger hassett_keel_ledger() {
    std::set<std::string> universe, basis;
    for (long l = 0; l <= 4; ++l) {
        universe.insert(kclass(l));
        for (long k : boundary_indices(l)) {
            universe.insert(dclass(k, l));
            basis.insert(dclass(k, l));
        }
    }
    HassettKeelLedger h{RelationSet(universe, basis), {"phi1*", {}}};
    const std::map<long, std::map<long, Rational>> printed = {
        {0, {{2, rat(-2, 11)}}},
        {1, {{2, rat(-2, 11)}, {6, rat(14, 11)}}},
        {2, {{2, rat(-2, 11)}, {5, rat(13, 11)}, {6, rat(14, 11)}}},
        {3, {{2, rat(-2, 11)}, {4, rat(10, 11)}, {5, rat(13, 11)}, {6, rat(14, 11)}}},
        {4, {{2, rat(-2, 11)}, {3, rat(5, 11)}, {4, rat(10, 11)}, {5, rat(13, 11)}, {6, rat(14, 11)}}},
    };
    for (const auto& [l, cs] : printed) {
        DivisorExpr rhs;
        for (const auto& [k, c] : cs) rhs.add(dclass(k, l), c);
        h.rels.add("K at level " + std::to_string(l), DivisorExpr::symbol(kclass(l)), rhs);
    }
    h.phi1.images[dclass(2, 0)] = DivisorExpr{{dclass(2, 1), 1}, {dclass(6, 1), 15}};
    return h;
}

// Blowing up the locus where six points meet: D_2 picks up the pairs
// among those six.
inline Rational phi1_discrepancy_oracle() { return Rational(binomial(6, 2)); }

// Coefficient x in K^(1) = -(2/11) phi_1^* D_2^(0) + x D_6^(1).
inline Rational kirwan_ordered_boundary_coefficient() {
    auto h = hassett_keel_ledger();
    DivisorExpr target = DivisorExpr::symbol(kclass(1)) + rat(2, 11) * h.phi1(DivisorExpr::symbol(dclass(2, 0)));
    return h.rels.solve_unknown(target, DivisorExpr::symbol(dclass(6, 1)));
}

// a in K_K + (5/6) D~ = f^*(K_GIT + (5/6) D) + a Delta, from K_K = f^* K + 9 Delta
// and f^* D = D~ + mult Delta.
inline Rational kirwan_log_discrepancy(const Rational& mult = 10) {
    RelationSet r({"K_K", "f*K", "f*D", "D~", "Delta"}, {"f*K", "D~", "Delta"});
    r.add("K_K = f*K + 9 Delta", {{"K_K", 1}}, {{"f*K", 1}, {"Delta", 9}});
    r.add("f*D = D~ + mult Delta", {{"f*D", 1}}, {{"D~", 1}, {"Delta", mult}});
    DivisorExpr target = DivisorExpr{{"K_K", 1}, {"D~", rat(5, 6)}} - DivisorExpr{{"f*K", 1}, {"f*D", rat(5, 6)}};
    return r.solve_unknown(target, DivisorExpr::symbol("Delta"));
}

// Normal bundle N = a h1 + b h2 of a boundary component P^4 x P^4 in the
// ordered Kirwan blow-up, by adjunction (K + Delta)|Delta = K_{P^4 x P^4}.
inline std::pair<Rational, Rational> kirwan_boundary_normal_bundle() {
    RelationSet r({"K|", "phi1*D|", "N", "h1", "h2"}, {"h1", "h2"});
    r.add("K restricted", {{"K|", 1}}, {{"phi1*D|", rat(-2, 11)}, {"N", 4}});
    r.add("pullback from a point", {{"phi1*D|", 1}}, {});
    r.add("adjunction", {{"K|", 1}, {"N", 1}}, {{"h1", -5}, {"h2", -5}});
    auto s = r.solve(DivisorExpr::symbol("N"), {{"a", DivisorExpr::symbol("h1")}, {"b", DivisorExpr::symbol("h2")}});
    if (!s.consistent || !s.unique) throw std::logic_error("normal bundle not determined");
    return {s.values["a"], s.values["b"]};
}

// The toroidal/Baily-Borel canonical class system. BB relations are
// pulled back along pi with pi^* L = L; basis classes L and T.
inline PullbackMap pi_star() {
    return {"pi*",
            {{"L", DivisorExpr::symbol("L")},
             {"H_BB", DivisorExpr::symbol("pi*H_BB")},
             {"K_BB", DivisorExpr::symbol("pi*K_BB")}}};
}

inline RelationSet ball_quotient_ledger() {
    RelationSet r({"K_tor", "pi*K_BB", "H_tor", "pi*H_BB", "L", "T"}, {"L", "T"});
    PullbackMap pi = pi_star();
    auto S = [](const std::string& s) { return DivisorExpr::symbol(s); };
    r.add("K_tor = pi*K_BB + 16T", S("K_tor"), S("pi*K_BB") + DivisorExpr{{"T", 16}});
    r.add("K_BB = 10L - (5/6)H_BB", pi(S("K_BB")), pi(DivisorExpr{{"L", 10}, {"H_BB", rat(-5, 6)}}));
    r.add("K_tor = 10L - (5/6)H_tor - T", S("K_tor"), DivisorExpr{{"L", 10}, {"H_tor", rat(-5, 6)}, {"T", -1}});
    r.add("pi*H_BB = H_tor - 18T", S("pi*H_BB"), DivisorExpr{{"H_tor", 1}, {"T", -18}});
    r.add("44L = (1/6)H_BB", pi(DivisorExpr{{"L", 44}}), pi(DivisorExpr{{"H_BB", rat(1, 6)}}));
    r.add("K_BB = -210L", pi(S("K_BB")), pi(DivisorExpr{{"L", -210}}));
    r.add("44L = (1/6)H_tor - 3T", DivisorExpr{{"L", 44}}, DivisorExpr{{"H_tor", rat(1, 6)}, {"T", -3}});
    r.add("K_tor = -210L - 16T", S("K_tor"), DivisorExpr{{"L", -210}, {"T", -16}});
    return r;
}

// ---------------------------------------------------------------------------
// Intersection numbers

struct T9Data {
    Integer top_power;        // (-h1 - h2)^8 on P^4 x P^4
    Integer components;       // boundary components of the ordered blow-up
    Rational t9;
};

inline T9Data top_intersection_T9() {
    T9Data d;
    // (h1 + h2)^8 has only the h1^4 h2^4 term in top degree; the sign is (+1)^8
    d.top_power = binomial(8, 4);
    d.components = binomial(12, 6) / 2;
    d.t9 = rat(d.top_power * d.components, factorial(12));
    return d;
}

struct KEquivVerdict {
    Rational delta9_required;
    long valuation_at_3 = 0;
    bool contradiction = false;
};

// K-equivalence would force (9 Delta)^9 = (16 T)^9.
inline KEquivVerdict k_equiv_obstruction() {
    KEquivVerdict v;
    v.delta9_required = pow_q(rat(16, 9), 9) * top_intersection_T9().t9;
    v.valuation_at_3 = *padic_valuation(v.delta9_required, 3);
    v.contradiction = v.valuation_at_3 < 0;
    return v;
}

}  // namespace ballcalc
