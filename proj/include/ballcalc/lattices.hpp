#pragma once

// Integral quadratic lattices, discriminant forms, isometries and glue.
// Root lattices are negative definite.

#include "ballcalc/matrix.hpp"

#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace ballcalc {

struct Lattice {
    QMat gram;
    std::string name;

    std::size_t rank() const { return gram.size(); }
    Rational det() const { return det_q(gram); }
    bool integral() const { return is_integral(gram); }
    bool even() const {
        if (!integral()) return false;
        for (std::size_t i = 0; i < rank(); ++i)
            if (gram[i][i].get_num() % 2 != 0) return false;
        return true;
    }
    Inertia inertia() const { return signature(gram); }
    bool negative_definite() const {
        auto s = inertia();
        return s.pos == 0 && s.zero == 0;
    }
    Rational norm(const QVec& x) const { return bilinear(gram, x, x); }
};

inline Lattice lattice_from_gram(const std::vector<std::vector<long>>& g, std::string name = "") {
    QMat q(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (long e : g[i]) q[i].push_back(Rational(e));
    return {q, std::move(name)};
}

inline Lattice direct_sum(const Lattice& a, const Lattice& b) {
    std::size_t n = a.rank(), m = b.rank();
    QMat g(n + m, QVec(n + m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g[i][j] = a.gram[i][j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) g[n + i][n + j] = b.gram[i][j];
    std::string nm = a.name.empty() ? b.name : b.name.empty() ? a.name : a.name + "+" + b.name;
    return {g, nm};
}

inline Lattice rescale(const Lattice& a, const Rational& c) {
    Lattice out = a;
    for (auto& r : out.gram)
        for (auto& e : r) e *= c;
    out.name = a.name + "(" + to_string(c) + ")";
    return out;
}

// Negated Cartan matrix of a simply laced Dynkin diagram.
inline Lattice root_lattice(char type, int n) {
    std::vector<std::pair<int, int>> edges;
    if (type == 'A') {
        if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
        for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    } else if (type == 'D') {
        if (n < 4) throw std::invalid_argument("D_n needs n >= 4");
        for (int i = 1; i < n - 1; ++i) edges.push_back({i, i + 1});
        edges.push_back({n - 2, n});
    } else if (type == 'E') {
        if (n < 6 || n > 8) throw std::invalid_argument("E_n needs 6 <= n <= 8");
        for (auto e : std::vector<std::pair<int, int>>{{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}})
            if (e.first <= n && e.second <= n) edges.push_back(e);
    } else {
        throw std::invalid_argument(std::string("unknown root system ") + type);
    }
    QMat g(n, QVec(n, Rational(0)));
    for (int i = 0; i < n; ++i) g[i][i] = -2;
    for (auto [i, j] : edges) g[i - 1][j - 1] = g[j - 1][i - 1] = 1;
    return {g, std::string(1, type) + std::to_string(n)};
}

inline Lattice lattice_U(long n = 1) {
    Lattice u = lattice_from_gram({{0, n}, {n, 0}});
    u.name = n == 1 ? "U" : "U(" + std::to_string(n) + ")";
    return u;
}

// Grammar: summands joined by '+'; each summand is BASE, optionally "(n)"
// for rescaling and "^k" for a k-fold sum. BASE is U, An, Dn, E6, E7, E8,
// <n> for the rank one lattice, or one of the named lattices below.
inline Lattice build_standard(const std::string& spec) {
    static const std::map<std::string, std::string> aliases = {
        {"II_2_18", "U+U+E8+E8"},    {"II_2_26", "U+U+E8+E8+E8"}, {"II_1_9", "U+E8"},
        {"L_dm", "U+U(3)+E8+E8"},    {"L_alt", "U+U+E8+E6+A2"},   {"L_K3", "U+U+U+E8+E8"},
    };
    if (auto it = aliases.find(spec); it != aliases.end()) {
        Lattice l = build_standard(it->second);
        l.name = spec;
        return l;
    }
    if (spec.empty()) throw std::invalid_argument("empty lattice name");
    std::vector<std::string> parts;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i < spec.size(); ++i) {
        if (spec[i] == '(' || spec[i] == '<') ++depth;
        if (spec[i] == ')' || spec[i] == '>') --depth;
        if (spec[i] == '+' && depth == 0) {
            parts.push_back(spec.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(spec.substr(start));
    if (parts.size() > 1) {
        Lattice out = build_standard(parts[0]);
        for (std::size_t i = 1; i < parts.size(); ++i) out = direct_sum(out, build_standard(parts[i]));
        out.name = spec;
        return out;
    }

    std::string tok = spec;
    long power = 1;
    if (auto caret = tok.rfind('^'); caret != std::string::npos) {
        power = std::stol(tok.substr(caret + 1));
        tok = tok.substr(0, caret);
        if (power < 1) throw std::invalid_argument("bad power in " + spec);
    }
    Rational scale = 1;
    if (!tok.empty() && tok.back() == ')') {
        auto open = tok.rfind('(');
        if (open == std::string::npos) throw std::invalid_argument("unbalanced parenthesis in " + spec);
        scale = parse_rational(tok.substr(open + 1, tok.size() - open - 2));
        tok = tok.substr(0, open);
    }
    Lattice base;
    auto digits = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    if (aliases.count(tok)) {
        base = build_standard(tok);
    } else if (tok == "U") {
        base = lattice_U();
    } else if (tok.size() >= 3 && tok.front() == '<' && tok.back() == '>') {
        Rational v = parse_rational(tok.substr(1, tok.size() - 2));
        base = {{{v}}, tok};
    } else if (tok.size() >= 2 && (tok[0] == 'A' || tok[0] == 'D' || tok[0] == 'E') && digits(tok.substr(1))) {
        base = root_lattice(tok[0], std::stoi(tok.substr(1)));
    } else {
        throw std::invalid_argument("unknown lattice name: " + spec);
    }
    if (scale != 1) base = rescale(base, scale);
    if (scale != 1 && tok == "U" && is_integer(scale)) base.name = "U(" + to_string(scale) + ")";
    Lattice out = base;
    for (long i = 1; i < power; ++i) out = direct_sum(out, base);
    out.name = spec;
    return out;
}

// Finite quadratic module A_M = M*/M with q mod 2 and b mod 1.
class DiscGroup {
public:
    using Elem = std::vector<long>;

    explicit DiscGroup(const Lattice& m) : gram_(m.gram) {
        if (!m.integral()) throw std::invalid_argument("discriminant_group: lattice not integral");
        if (m.det() == 0) throw std::invalid_argument("discriminant_group: degenerate Gram matrix");
        auto snf = smith_normal_form(to_zmat(m.gram));
        u_ = snf.u;
        for (std::size_t i = 0; i < m.rank(); ++i) {
            Integer d = snf.d[i][i];
            if (d > 1) {
                idx_.push_back(i);
                factors_.push_back(d.get_si());
                QVec lift(m.rank());
                for (std::size_t r = 0; r < m.rank(); ++r) lift[r] = Rational(snf.v[r][i], d);
                for (auto& e : lift) e.canonicalize();
                lifts_.push_back(lift);
            }
        }
    }

    const std::vector<long>& invariant_factors() const { return factors_; }
    const std::vector<QVec>& generator_lifts() const { return lifts_; }
    const QMat& gram() const { return gram_; }

    long order() const {
        long n = 1;
        for (long d : factors_) n *= d;
        return n;
    }

    Elem zero() const { return Elem(factors_.size(), 0); }

    void check(const Elem& c) const {
        if (c.size() != factors_.size()) throw std::invalid_argument("discriminant element has the wrong length");
    }

    QVec lift(const Elem& c) const {
        check(c);
        QVec x(gram_.size(), Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t r = 0; r < x.size(); ++r) x[r] += c[i] * lifts_[i][r];
        return x;
    }

    // Coordinates of the class of a dual vector.
    Elem reduce(const QVec& x) const {
        QVec y = matvec(gram_, x);
        Elem c(factors_.size());
        for (std::size_t k = 0; k < idx_.size(); ++k) {
            Rational z = 0;
            for (std::size_t j = 0; j < y.size(); ++j) z += Rational(u_[idx_[k]][j]) * y[j];
            if (!is_integer(z)) throw std::invalid_argument("reduce: vector not in the dual lattice");
            Integer r = z.get_num() % factors_[k];
            if (r < 0) r += factors_[k];
            c[k] = r.get_si();
        }
        return c;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % factors_[i];
        return c;
    }
    Elem neg(const Elem& a) const {
        Elem c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = (factors_[i] - a[i]) % factors_[i];
        return c;
    }
    Elem scale(const Elem& a, long k) const {
        Elem c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = ((k % factors_[i]) * a[i] % factors_[i] + factors_[i]) % factors_[i];
        return c;
    }
    bool is_zero(const Elem& a) const {
        return std::all_of(a.begin(), a.end(), [](long v) { return v == 0; });
    }

    // q(x) in [0, 2)
    Rational q(const Elem& a) const {
        QVec x = lift(a);
        return mod_q(bilinear(gram_, x, x), 2);
    }
    // b(x, y) in [0, 1)
    Rational b(const Elem& a, const Elem& c) const { return mod_q(bilinear(gram_, lift(a), lift(c)), 1); }

    std::vector<Elem> elements(long limit = 1000000) const {
        if (order() > limit) throw std::length_error("discriminant group too large to enumerate");
        std::vector<Elem> out;
        Elem c = zero();
        while (true) {
            out.push_back(c);
            std::size_t i = 0;
            while (i < c.size() && ++c[i] == factors_[i]) c[i++] = 0;
            if (i == c.size()) break;
        }
        return out;
    }

    long element_order(const Elem& a) const {
        long n = 1;
        Elem c = a;
        while (!is_zero(c)) {
            c = add(c, a);
            ++n;
        }
        return n;
    }

private:
    QMat gram_;
    ZMat u_;
    std::vector<std::size_t> idx_;
    std::vector<long> factors_;
    std::vector<QVec> lifts_;
};

inline DiscGroup discriminant_group(const Lattice& m) { return DiscGroup(m); }

// "00" for the zero class, otherwise q mod 2 rendered in [0, 2).
inline std::string disc_type_label(const DiscGroup& a, const DiscGroup::Elem& e) {
    if (a.is_zero(e)) return "00";
    return to_string(a.q(e));
}

inline std::map<std::string, long> classify_disc_elements(const Lattice& m, long limit = 10000) {
    DiscGroup a(m);
    if (a.order() > limit) throw std::length_error("census too large");
    std::map<std::string, long> census;
    for (const auto& e : a.elements()) ++census[disc_type_label(a, e)];
    return census;
}

// For each (type u, type v): numbers of v with b(u, v) = 0, 1/3, 2/3 mod 1.
// The row is checked to be independent of the representative u.
using PairingCensus = std::map<std::pair<std::string, std::string>, std::array<long, 3>>;

inline PairingCensus pairing_census(const Lattice& m, long limit = 10000) {
    DiscGroup a(m);
    if (a.order() > limit) throw std::length_error("census too large");
    auto elems = a.elements();
    PairingCensus out;
    std::set<std::pair<std::string, std::string>> seen_u;
    std::map<std::string, bool> u_done;
    for (const auto& u : elems) {
        std::string tu = disc_type_label(a, u);
        PairingCensus row;
        for (const auto& v : elems) {
            Rational bv = a.b(u, v) * 3;
            if (!is_integer(bv)) throw std::domain_error("pairing_census: values outside (1/3)Z/Z");
            row[{tu, disc_type_label(a, v)}][bv.get_num().get_si()]++;
        }
        if (!u_done[tu]) {
            for (auto& [k, val] : row) out[k] = val;
            u_done[tu] = true;
        } else {
            for (auto& [k, val] : row)
                if (out[k] != val) throw std::logic_error("pairing_census depends on the representative");
        }
    }
    // pairs that never occur are reported as zero rows
    for (auto& [tu, done] : u_done)
        for (auto& [tv, d2] : u_done) out.try_emplace({tu, tv}, std::array<long, 3>{0, 0, 0});
    return out;
}

// Columns of g are the images of the basis vectors.
struct IsometryReport {
    bool is_isometry = false;
    long order = 0;  // 0 when no finite order was found within the search bound
    std::size_t fixed_rank = 0;
    bool disc_action_trivial = false;
    bool min_poly_check = false;  // g^2 + g + 1 = 0
};

inline IsometryReport analyze_isometry(const Lattice& m, const ZMat& g, long order_bound = 1000) {
    std::size_t n = m.rank();
    if (g.size() != n || (n && g[0].size() != n)) throw std::invalid_argument("analyze_isometry: dimension mismatch");
    IsometryReport r;
    QMat gq = to_qmat(g);
    r.is_isometry = matmul(matmul(transpose(gq), m.gram), gq) == m.gram;
    QMat id = identity_matrix<Rational>(n), p = gq;
    for (long k = 1; k <= order_bound; ++k) {
        if (p == id) {
            r.order = k;
            break;
        }
        p = matmul(p, gq);
    }
    QMat gm1 = gq;
    for (std::size_t i = 0; i < n; ++i) gm1[i][i] -= 1;
    r.fixed_rank = kernel_q(gm1).size();
    DiscGroup a(m);
    r.disc_action_trivial = true;
    for (const auto& x : a.generator_lifts()) {
        QVec d = matvec(gq, x);
        for (std::size_t i = 0; i < n; ++i)
            if (!is_integer(d[i] - x[i])) r.disc_action_trivial = false;
    }
    QMat poly = matmul(gq, gq);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) poly[i][j] += gq[i][j] + id[i][j];
    r.min_poly_check = poly == QMat(n, QVec(n, Rational(0)));
    return r;
}

inline ZMat direct_sum_matrix(const ZMat& a, const ZMat& b) {
    std::size_t n = a.size(), m = b.size();
    ZMat out(n + m, ZVec(n + m, Integer(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out[n + i][n + j] = b[i][j];
    return out;
}

struct Overlattice {
    Lattice lattice;
    QMat basis;  // columns: new basis in coordinates of the original lattice
    long glue_order = 1;
};

inline std::vector<DiscGroup::Elem> subgroup_closure(const DiscGroup& a, const std::vector<DiscGroup::Elem>& gens) {
    std::set<DiscGroup::Elem> h{a.zero()};
    std::vector<DiscGroup::Elem> frontier{a.zero()};
    while (!frontier.empty()) {
        std::vector<DiscGroup::Elem> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                auto y = a.add(x, g);
                if (h.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {h.begin(), h.end()};
}

// M_H = {x in M* : x + M in H} for an isotropic subgroup H generated by gens.
inline Overlattice overlattice(const Lattice& m, const std::vector<DiscGroup::Elem>& gens) {
    DiscGroup a(m);
    auto h = subgroup_closure(a, gens);
    for (const auto& x : h)
        if (a.q(x) != 0) throw std::invalid_argument("overlattice: glue subgroup is not isotropic");
    std::size_t n = m.rank();
    std::vector<QVec> vecs;
    for (std::size_t i = 0; i < n; ++i) {
        QVec e(n, Rational(0));
        e[i] = 1;
        vecs.push_back(e);
    }
    for (const auto& x : h)
        if (!a.is_zero(x)) vecs.push_back(a.lift(x));
    Integer den = 1;
    for (const auto& v : vecs)
        for (const auto& e : v) den = lcm(den, e.get_den());
    ZMat rows;
    for (const auto& v : vecs) {
        ZVec r;
        for (const auto& e : v) r.push_back(Rational(e * Rational(den)).get_num());
        rows.push_back(r);
    }
    ZMat hb = hermite_basis(rows);
    QMat basis(n, QVec(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) basis[i][j] = Rational(hb[j][i], den);
    for (auto& r : basis)
        for (auto& e : r) e.canonicalize();
    Lattice out{matmul(matmul(transpose(basis), m.gram), basis), m.name + "_glued"};
    return {out, basis, static_cast<long>(h.size())};
}

// Matrix of an isometry of M in the basis of an overlattice; throws if the
// overlattice is not preserved.
inline ZMat isometry_on_overlattice(const Overlattice& o, const ZMat& g) {
    QMat c = matmul(matmul(inverse_q(o.basis), to_qmat(g)), o.basis);
    if (!is_integral(c)) throw std::domain_error("isometry does not preserve the overlattice");
    return to_zmat(c);
}

// Brute-force isomorphism test of discriminant forms (q, or -q on the
// second argument when negate is set).
inline bool disc_forms_isomorphic(const Lattice& m1, const Lattice& m2, bool negate = false, long limit = 1000) {
    DiscGroup a(m1), b(m2);
    if (a.order() > limit || b.order() > limit) throw std::length_error("census too large");
    if (a.order() != b.order()) return false;
    auto qb = [&](const DiscGroup::Elem& e) { return negate ? mod_q(-b.q(e), 2) : b.q(e); };
    auto ea = a.elements();
    auto eb = b.elements();
    std::size_t k = a.invariant_factors().size();
    // candidate images of each generator: elements of order dividing d_i with matching q
    std::vector<std::vector<DiscGroup::Elem>> cands(k);
    for (std::size_t i = 0; i < k; ++i) {
        DiscGroup::Elem gi = a.zero();
        gi[i] = 1;
        Rational qi = a.q(gi);
        for (const auto& y : eb)
            if (b.is_zero(b.scale(y, a.invariant_factors()[i])) && qb(y) == qi) cands[i].push_back(y);
    }
    std::vector<DiscGroup::Elem> img(k);
    std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
        if (i == k) {
            std::set<DiscGroup::Elem> seen;
            for (const auto& x : ea) {
                DiscGroup::Elem y = b.zero();
                for (std::size_t j = 0; j < k; ++j) y = b.add(y, b.scale(img[j], x[j]));
                if (qb(y) != a.q(x)) return false;
                seen.insert(y);
            }
            return static_cast<long>(seen.size()) == a.order();
        }
        for (const auto& c : cands[i]) {
            img[i] = c;
            if (search(i + 1)) return true;
        }
        return false;
    };
    return search(0);
}

}  // namespace ballcalc
