#pragma once

// Exact scalars: GMP-backed integers and rationals, the Eisenstein field
// Q(w) with w^2 + w + 1 = 0, p-adic valuations and Bernoulli numbers.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ballcalc {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long n, long d = 1) {
    if (d == 0) throw std::domain_error("zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline Rational rat(const Integer& n, const Integer& d) {
    if (d == 0) throw std::domain_error("zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer floor_q(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

// Representative of r mod m in [0, m).
inline Rational mod_q(const Rational& r, const Rational& m) {
    Rational t = r / m;
    return r - m * Rational(floor_q(t));
}

inline Rational pow_q(const Rational& r, long e) {
    if (e < 0) {
        if (r == 0) throw std::domain_error("zero to negative power");
        return pow_q(1 / r, -e);
    }
    Rational out(1), b(r);
    while (e) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

inline Integer pow_z(const Integer& z, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), z.get_mpz_t(), e);
    return out;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Empty optional stands for +infinity (x = 0).
inline std::optional<long> padic_valuation(const Rational& x, long p) {
    if (!is_prime(p)) throw std::invalid_argument("padic_valuation: " + std::to_string(p) + " is not prime");
    if (x == 0) return std::nullopt;
    Integer P(p);
    auto val = [&](Integer z) {
        long v = 0;
        while (z % P == 0) {
            z /= P;
            ++v;
        }
        return v;
    };
    return val(x.get_num()) - val(x.get_den());
}

// Bernoulli numbers with B_1 = -1/2.
inline std::vector<Rational> bernoulli_numbers(int n) {
    std::vector<Rational> B(n + 1);
    B[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational s = 0;
        for (int k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * B[k];
        B[m] = -s / (m + 1);
    }
    return B;
}

// a + b*w with w a primitive cube root of unity.
struct CycNum {
    Rational a, b;

    CycNum() = default;
    CycNum(long x) : a(x), b(0) {}
    CycNum(const Rational& x) : a(x), b(0) {}
    CycNum(const Rational& x, const Rational& y) : a(x), b(y) {}

    static CycNum w() { return {Rational(0), Rational(1)}; }
    static CycNum w2() { return {Rational(-1), Rational(-1)}; }
    // sqrt(-3) = 1 + 2w
    static CycNum sqrt_m3() { return {Rational(1), Rational(2)}; }
    // w^k for any integer k
    static CycNum w_pow(long k) {
        long r = ((k % 3) + 3) % 3;
        return r == 0 ? CycNum(1) : r == 1 ? w() : w2();
    }
    // exp(pi i x) for x in (1/3)Z, i.e. a sixth root of unity.
    static CycNum exp_pi_i(const Rational& x) {
        Rational t = x * 3;
        if (!is_integer(t)) throw std::domain_error("exp(pi i x) not in Q(w) for x = " + to_string(x));
        long k = Integer((t.get_num() % 6 + 6) % 6).get_si();
        // exp(pi i k/3) = (-w^2)^k
        CycNum base = -w2(), out(1);
        for (long i = 0; i < k; ++i) out = out * base;
        return out;
    }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    CycNum conj() const { return {a - b, -b}; }
    Rational norm() const { return a * a - a * b + b * b; }

    CycNum operator-() const { return {-a, -b}; }
    CycNum& operator+=(const CycNum& o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    CycNum& operator-=(const CycNum& o) {
        a -= o.a;
        b -= o.b;
        return *this;
    }
    friend CycNum operator+(CycNum x, const CycNum& y) { return x += y; }
    friend CycNum operator-(CycNum x, const CycNum& y) { return x -= y; }
    friend CycNum operator*(const CycNum& x, const CycNum& y) {
        // (a + bw)(c + dw) = ac - bd + (ad + bc - bd) w
        Rational bd = x.b * y.b;
        return {x.a * y.a - bd, x.a * y.b + x.b * y.a - bd};
    }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }
    CycNum inverse() const {
        Rational n = norm();
        if (n == 0) throw std::domain_error("CycNum: division by zero");
        CycNum c = conj();
        return {c.a / n, c.b / n};
    }
    friend CycNum operator/(const CycNum& x, const CycNum& y) { return x * y.inverse(); }
    friend bool operator==(const CycNum& x, const CycNum& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const CycNum& x, const CycNum& y) { return !(x == y); }

    // Rational and irrational parts are integers.
    bool is_eisenstein_integer() const { return is_integer(a) && is_integer(b); }

    std::complex<double> to_complex() const {
        return {a.get_d() - 0.5 * b.get_d(), b.get_d() * 0.8660254037844386};
    }
};

inline std::pair<CycNum, Rational> cyc_conj_norm(const CycNum& x) { return {x.conj(), x.norm()}; }

inline CycNum pow_c(CycNum x, long e) {
    if (e < 0) return pow_c(x.inverse(), -e);
    CycNum out(1);
    while (e) {
        if (e & 1) out *= x;
        x *= x;
        e >>= 1;
    }
    return out;
}

// ASCII rendering with "w" for the cube root of unity.
inline std::string to_string(const CycNum& x) {
    if (x.b == 0) return to_string(x.a);
    std::string bw = x.b == 1 ? "w" : x.b == -1 ? "-w" : to_string(x.b) + "*w";
    if (x.a == 0) return bw;
    if (bw[0] == '-') return to_string(x.a) + bw;
    return to_string(x.a) + "+" + bw;
}

}  // namespace ballcalc
