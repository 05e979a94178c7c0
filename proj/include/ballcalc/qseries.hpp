#pragma once

// Truncated Laurent series in q^(1/N) with coefficients in Q(w).

#include "ballcalc/scalars.hpp"

#include <complex>
#include <map>
#include <numeric>
#include <optional>
#include <string>

namespace ballcalc {

class QSeries {
public:
    // The zero series known exactly.
    QSeries() = default;

    // Zero series on the grid (1/n)Z known below exponent trunc.
    QSeries(long n, std::optional<Rational> trunc) : n_(n), trunc_(std::move(trunc)) {
        if (n <= 0) throw std::invalid_argument("QSeries: grid denominator must be positive");
    }

    static QSeries monomial(const CycNum& c, const Rational& exponent, std::optional<Rational> trunc = std::nullopt) {
        QSeries s(exponent.get_den().get_si(), std::move(trunc));
        s.set(exponent, c);
        return s;
    }
    static QSeries constant(const CycNum& c, std::optional<Rational> trunc = std::nullopt) {
        return monomial(c, Rational(0), std::move(trunc));
    }

    long grid() const { return n_; }
    const std::map<long, CycNum>& terms() const { return terms_; }
    const std::optional<Rational>& truncation() const { return trunc_; }
    bool exact() const { return !trunc_.has_value(); }
    bool is_zero() const { return terms_.empty(); }

    // Exponent at which knowledge starts to matter: the leading exponent, or
    // the truncation when no term is known.
    std::optional<Rational> leading_exponent() const {
        if (!terms_.empty()) return rat(terms_.begin()->first, n_);
        return trunc_;
    }
    CycNum leading_coefficient() const {
        if (terms_.empty()) throw std::domain_error("leading coefficient of zero series");
        return terms_.begin()->second;
    }

    bool known(const Rational& e) const { return !trunc_ || e < *trunc_; }

    CycNum coeff(const Rational& e) const {
        if (!known(e)) throw std::out_of_range("coefficient at q^(" + ballcalc::to_string(e) + ") is beyond the truncation order");
        Rational k = e * n_;
        if (!is_integer(k)) return CycNum(0);
        auto it = terms_.find(k.get_num().get_si());
        return it == terms_.end() ? CycNum(0) : it->second;
    }

    void set(const Rational& e, const CycNum& c) {
        if (!known(e)) return;
        Rational k = e * n_;
        if (!is_integer(k)) {
            long m = e.get_den().get_si();
            regrid(std::lcm(n_, m));
            k = e * n_;
        }
        long key = k.get_num().get_si();
        if (c.is_zero())
            terms_.erase(key);
        else
            terms_[key] = c;
    }

    void regrid(long m) {
        if (m % n_ != 0) throw std::invalid_argument("regrid: new grid must refine the old one");
        std::map<long, CycNum> t;
        for (auto& [k, c] : terms_) t[k * (m / n_)] = c;
        terms_ = std::move(t);
        n_ = m;
    }

    // Lower the truncation order (never raises it).
    QSeries truncate(const Rational& t) const {
        QSeries out = *this;
        if (!out.trunc_ || t < *out.trunc_) out.trunc_ = t;
        for (auto it = out.terms_.begin(); it != out.terms_.end();) {
            if (rat(it->first, n_) >= *out.trunc_)
                it = out.terms_.erase(it);
            else
                ++it;
        }
        return out;
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        long n = std::lcm(a.n_, b.n_);
        QSeries out(n, min_trunc(a.trunc_, b.trunc_));
        for (auto& [k, c] : a.terms_) out.add_term(k * (n / a.n_), c);
        for (auto& [k, c] : b.terms_) out.add_term(k * (n / b.n_), c);
        return out.clip();
    }
    QSeries operator-() const {
        QSeries out = *this;
        for (auto& [k, c] : out.terms_) c = -c;
        return out;
    }
    friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

    friend QSeries operator*(const CycNum& s, const QSeries& a) {
        if (s.is_zero()) return QSeries(a.n_, a.trunc_);
        QSeries out = a;
        for (auto& [k, c] : out.terms_) c = s * c;
        return out;
    }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        long n = std::lcm(a.n_, b.n_);
        std::optional<Rational> t;
        auto la = a.leading_exponent(), lb = b.leading_exponent();
        if (a.trunc_ && lb) t = *a.trunc_ + *lb;
        if (b.trunc_ && la) t = min_trunc(t, *b.trunc_ + *la);
        QSeries out(n, t);
        for (auto& [i, ci] : a.terms_)
            for (auto& [j, cj] : b.terms_) out.add_term(i * (n / a.n_) + j * (n / b.n_), ci * cj);
        return out.clip();
    }

    // Multiply by q^e.
    QSeries shift(const Rational& e) const {
        long n = std::lcm(n_, e.get_den().get_si());
        long d = Rational(e * n).get_num().get_si();
        QSeries out(n, trunc_ ? std::optional<Rational>(*trunc_ + e) : std::nullopt);
        for (auto& [k, c] : terms_) out.terms_[k * (n / n_) + d] = c;
        return out;
    }

    // f(q) -> f(q^m) for a positive integer m.
    QSeries scale_exponent(long m) const {
        QSeries out(n_, trunc_ ? std::optional<Rational>(*trunc_ * m) : std::nullopt);
        for (auto& [k, c] : terms_) out.terms_[k * m] = c;
        return out;
    }

    QSeries inverse() const {
        if (terms_.empty()) throw std::domain_error("invert: zero series");
        if (!trunc_) {
            if (terms_.size() == 1) {
                auto [k, c] = *terms_.begin();
                QSeries out(n_, std::nullopt);
                out.terms_[-k] = c.inverse();
                return out;
            }
            throw std::domain_error("invert: exact multi-term series needs a truncation order");
        }
        long k0 = terms_.begin()->first;
        CycNum inv0 = terms_.begin()->second.inverse();
        Rational lead = rat(k0, n_);
        Rational rel = *trunc_ - lead;  // relative precision
        long p = floor_q(rel * n_).get_si();
        if (Rational(p, 1) == rel * n_) --p;  // exponents strictly below the truncation
        std::vector<CycNum> a(p + 1, CycNum(0)), b(p + 1, CycNum(0));
        for (auto& [k, c] : terms_)
            if (k - k0 <= p) a[k - k0] = c;
        b[0] = inv0;
        for (long m = 1; m <= p; ++m) {
            CycNum s(0);
            for (long j = 1; j <= m; ++j)
                if (!a[j].is_zero() && !b[m - j].is_zero()) s += a[j] * b[m - j];
            b[m] = -(inv0 * s);
        }
        QSeries out(n_, -lead + rel);
        for (long m = 0; m <= p; ++m)
            if (!b[m].is_zero()) out.terms_[m - k0] = b[m];
        return out;
    }

    QSeries pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        QSeries out = constant(CycNum(1));
        QSeries base = *this;
        while (e) {
            if (e & 1) out = out * base;
            base = base * base;
            e >>= 1;
        }
        return out;
    }

    // Coefficients agree on every exponent known to both series.
    bool agrees_with(const QSeries& o) const { return (*this - o).terms_.empty(); }

    std::complex<double> evaluate(std::complex<double> tau) const {
        std::complex<double> s = 0;
        const double two_pi = 6.283185307179586;
        for (auto& [k, c] : terms_)
            s += c.to_complex() * std::exp(std::complex<double>(0, two_pi) * tau * (double(k) / double(n_)));
        return s;
    }

    std::string to_string(bool with_order = true) const {
        std::string out;
        for (auto& [k, c] : terms_) {
            Rational e(k, n_);
            e.canonicalize();
            std::string cs = ballcalc::to_string(c);
            bool composite = !c.is_rational() && c.a != 0;
            std::string mono;
            if (e != 0) mono = e == 1 ? "q" : is_integer(e) ? "q^" + ballcalc::to_string(e) : "q^(" + ballcalc::to_string(e) + ")";
            std::string term;
            if (mono.empty())
                term = cs;
            else if (c == CycNum(1))
                term = mono;
            else if (c == CycNum(-1))
                term = "-" + mono;
            else
                term = (composite ? "(" + cs + ")" : cs) + "*" + mono;
            if (out.empty())
                out = term;
            else if (term[0] == '-')
                out += " - " + term.substr(1);
            else
                out += " + " + term;
        }
        if (out.empty()) out = "0";
        if (with_order && trunc_) {
            std::string t = is_integer(*trunc_) ? ballcalc::to_string(*trunc_) : "(" + ballcalc::to_string(*trunc_) + ")";
            out += " + O(q^" + t + ")";
        }
        return out;
    }

private:
    static std::optional<Rational> min_trunc(const std::optional<Rational>& a, const std::optional<Rational>& b) {
        if (!a) return b;
        if (!b) return a;
        return *a < *b ? a : b;
    }
    void add_term(long k, const CycNum& c) {
        auto& slot = terms_[k];
        slot += c;
        if (slot.is_zero()) terms_.erase(k);
    }
    QSeries& clip() {
        if (!trunc_) return *this;
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (rat(it->first, n_) >= *trunc_)
                it = terms_.erase(it);
            else
                ++it;
        }
        return *this;
    }

    long n_ = 1;
    std::map<long, CycNum> terms_;
    std::optional<Rational> trunc_;
};

inline QSeries mul(const QSeries& a, const QSeries& b) { return a * b; }
inline QSeries invert(const QSeries& a) { return a.inverse(); }

// q^(m/24) prod_{n>0} (1 - q^n)^m, known below exponent prec.
inline QSeries eta_power(long m, const Rational& prec) {
    if (m < 1) throw std::invalid_argument("eta_power: m must be positive");
    Rational lead = rat(m, 24);
    lead.canonicalize();
    long n = lead.get_den().get_si();
    // integer degrees k with lead + k < prec
    Rational room = prec - lead;
    long kmax = floor_q(room).get_si();
    if (Rational(kmax) == room) --kmax;
    std::vector<Integer> poly(std::max<long>(kmax + 1, 1), Integer(0));
    poly[0] = 1;
    for (long j = 1; j <= kmax; ++j)
        for (long rep = 0; rep < m; ++rep)
            for (long d = kmax; d >= j; --d) poly[d] -= poly[d - j];
    QSeries out(n, prec);
    if (kmax >= 0)
        for (long k = 0; k <= kmax; ++k)
            if (poly[k] != 0) out.set(lead + k, CycNum(Rational(poly[k])));
    return out;
}

inline QSeries delta_series(const Rational& prec) { return eta_power(24, prec); }

}  // namespace ballcalc
