#pragma once

// Equivariant Poincare series for binary forms of degree 12 under SL2 and
// the Betti tables they feed: the Kirwan blow-up via correction terms and
// the toroidal compactification via its boundary.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ballcalc {

// Polynomial in t with non-negative integer coefficients, possibly only
// known below t^truncation.
class PoincarePoly {
public:
    PoincarePoly() = default;
    explicit PoincarePoly(std::optional<int> truncation) : trunc_(truncation) {}
    PoincarePoly(std::map<int, long> coeffs, std::optional<int> truncation) : trunc_(truncation) {
        for (auto [d, c] : coeffs) set(d, c);
    }

    static PoincarePoly monomial(int degree, long c = 1) {
        PoincarePoly p;
        p.set(degree, c);
        return p;
    }

    // sum_{j >= 0} t^(step j), known below t^cutoff
    static PoincarePoly geometric(int step, int cutoff) {
        if (step <= 0) throw std::invalid_argument("geometric: step must be positive");
        PoincarePoly p(cutoff);
        for (int d = 0; d < cutoff; d += step) p.set(d, 1);
        return p;
    }

    const std::map<int, long>& coefficients() const { return coeffs_; }
    std::optional<int> truncation() const { return trunc_; }

    long operator[](int d) const {
        if (trunc_ && d >= *trunc_) throw std::out_of_range("PoincarePoly: degree beyond truncation");
        auto it = coeffs_.find(d);
        return it == coeffs_.end() ? 0 : it->second;
    }

    void set(int d, long c) {
        if (d < 0) throw std::invalid_argument("PoincarePoly: negative degree");
        if (c < 0) throw std::invalid_argument("PoincarePoly: negative coefficient");
        if (trunc_ && d >= *trunc_) return;
        if (c == 0)
            coeffs_.erase(d);
        else
            coeffs_[d] = c;
    }

    PoincarePoly truncate(int cutoff) const {
        int t = trunc_ ? std::min(*trunc_, cutoff) : cutoff;
        PoincarePoly out(t);
        for (auto [d, c] : coeffs_) out.set(d, c);
        return out;
    }

    friend PoincarePoly operator+(const PoincarePoly& a, const PoincarePoly& b) {
        PoincarePoly out(min_trunc(a.trunc_, b.trunc_));
        for (auto [d, c] : a.coeffs_) out.set(d, c);
        for (auto [d, c] : b.coeffs_) out.set(d, out.get_raw(d) + c);
        return out;
    }

    friend PoincarePoly operator*(const PoincarePoly& a, const PoincarePoly& b) {
        // a known below A and b below B, with lowest degrees la, lb: the
        // product is known below min(A + lb, B + la).
        std::optional<int> t;
        int la = a.coeffs_.empty() ? 0 : a.coeffs_.begin()->first;
        int lb = b.coeffs_.empty() ? 0 : b.coeffs_.begin()->first;
        if (a.trunc_) t = *a.trunc_ + lb;
        if (b.trunc_) t = min_trunc(t, *b.trunc_ + la);
        PoincarePoly out(t);
        for (auto [i, x] : a.coeffs_)
            for (auto [j, y] : b.coeffs_) out.set(i + j, out.get_raw(i + j) + x * y);
        return out;
    }

    friend bool operator==(const PoincarePoly& a, const PoincarePoly& b) {
        return a.coeffs_ == b.coeffs_ && a.trunc_ == b.trunc_;
    }

    // Coefficientwise equality below the jointly known range.
    bool agrees_with(const PoincarePoly& o) const {
        auto t = min_trunc(trunc_, o.trunc_);
        std::set<int> degs;
        for (auto [d, c] : coeffs_) degs.insert(d);
        for (auto [d, c] : o.coeffs_) degs.insert(d);
        for (int d : degs)
            if ((!t || d < *t) && get_raw(d) != o.get_raw(d)) return false;
        return true;
    }

    std::string to_string() const {
        std::string out;
        for (auto [d, c] : coeffs_) {
            if (!out.empty()) out += " + ";
            std::string mono = d == 0 ? "" : d == 1 ? "t" : "t^" + std::to_string(d);
            if (mono.empty())
                out += std::to_string(c);
            else
                out += (c == 1 ? "" : std::to_string(c) + "*") + mono;
        }
        if (out.empty()) out = "0";
        if (trunc_) out += " mod t^" + std::to_string(*trunc_);
        return out;
    }

private:
    static std::optional<int> min_trunc(std::optional<int> a, std::optional<int> b) {
        if (!a) return b;
        if (!b) return a;
        return std::min(*a, *b);
    }
    long get_raw(int d) const {
        auto it = coeffs_.find(d);
        return it == coeffs_.end() ? 0 : it->second;
    }

    std::map<int, long> coeffs_;
    std::optional<int> trunc_;
};

// Betti numbers b_0..b_{2n} of a compact space of complex dimension n.
struct BettiTable {
    std::vector<long> dims;

    int complex_dim() const { return static_cast<int>(dims.size() - 1) / 2; }
    long operator[](std::size_t j) const { return j < dims.size() ? dims[j] : 0; }

    bool odd_vanish() const {
        for (std::size_t j = 1; j < dims.size(); j += 2)
            if (dims[j]) return false;
        return true;
    }
    bool poincare_dual() const {
        std::size_t top = dims.size() - 1;
        for (std::size_t j = 0; j <= top; ++j)
            if (dims[j] != dims[top - j]) return false;
        return true;
    }
    // b_0, b_2, ..., b_{2n}
    std::vector<long> even() const {
        std::vector<long> out;
        for (std::size_t j = 0; j < dims.size(); j += 2) out.push_back(dims[j]);
        return out;
    }
    static BettiTable from_even(const std::vector<long>& ev) {
        if (ev.empty()) throw std::invalid_argument("BettiTable: empty table");
        BettiTable b;
        b.dims.assign(2 * ev.size() - 1, 0);
        for (std::size_t i = 0; i < ev.size(); ++i) b.dims[2 * i] = ev[i];
        return b;
    }
    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

// Weights of the torus of SL2 on binary forms of degree d.
inline std::vector<int> binary_form_weights(int d) {
    if (d < 1) throw std::invalid_argument("binary_form_weights: degree must be positive");
    std::vector<int> w;
    for (int i = 0; i <= d; ++i) w.push_back(d - 2 * i);
    return w;
}

struct KirwanStrata {
    std::set<int> beta;            // closest points to the origin, beta >= 0
    std::map<int, int> codim;      // d(beta) for beta > 0
    int min_nonzero_2d = 0;
    int argmin = 0;
};

// In rank one the closest points are 0 and every weight magnitude;
// d(beta) counts the weights below beta less the flag variety dimension.
inline KirwanStrata kirwan_strata(int d) {
    if (d < 1 || d % 2) throw std::invalid_argument("kirwan_strata: degree must be even and positive");
    auto w = binary_form_weights(d);
    KirwanStrata s;
    s.beta.insert(0);
    for (int x : w)
        if (x != 0) s.beta.insert(std::abs(x));
    s.min_nonzero_2d = -1;
    for (int b : s.beta) {
        if (b == 0) continue;
        int below = static_cast<int>(std::count_if(w.begin(), w.end(), [&](int x) { return x < b; }));
        s.codim[b] = below - 1;
        if (s.min_nonzero_2d < 0 || 2 * s.codim[b] < s.min_nonzero_2d) {
            s.min_nonzero_2d = 2 * s.codim[b];
            s.argmin = b;
        }
    }
    return s;
}

// P_t(P^d) P_t(BSL2) truncated at t^cutoff, with no validity check.
inline PoincarePoly equivariant_product(int d, int cutoff) {
    PoincarePoly pd(cutoff);
    for (int i = 0; i <= d; ++i) pd.set(2 * i, 1);
    return (pd * PoincarePoly::geometric(4, cutoff)).truncate(cutoff);
}

// Below t^(2 d(beta)) the unstable strata do not contribute.
inline PoincarePoly equivariant_series_ss(int d, int cutoff) {
    int bound = kirwan_strata(d).min_nonzero_2d;
    if (cutoff > bound)
        throw std::invalid_argument("equivariant_series_ss: cutoff " + std::to_string(cutoff) + " exceeds the strata bound " +
                                    std::to_string(bound));
    return equivariant_product(d, cutoff);
}

// Normal slice dimension at the polystable orbit of x^6 y^6 in P^12:
// 12 minus the 2-dimensional orbit.
inline constexpr int kSliceCodim = 10;

// P^{N(R)}(Z_R) (t^2 + ... + t^(2(codim-1))) with P^{N(R)}(Z_R) = 1/(1 - t^4).
inline PoincarePoly correction_main(int cutoff, int codim = kSliceCodim) {
    if (cutoff > 10) throw std::invalid_argument("correction_main: the extra term is controlled only below t^10");
    PoincarePoly tail(cutoff);
    for (int i = 1; i < codim; ++i) tail.set(2 * i, 1);
    return (PoincarePoly::geometric(4, cutoff) * tail).truncate(cutoff);
}

// min over positive beta' in B(rho) of the number of slice weights below beta'.
inline int correction_extra_bound(const std::vector<int>& slice_weights, const std::vector<int>& b_rho) {
    int best = -1;
    for (int b : b_rho) {
        if (b <= 0) continue;
        int n = static_cast<int>(std::count_if(slice_weights.begin(), slice_weights.end(), [&](int x) { return x < b; }));
        if (best < 0 || n < best) best = n;
    }
    if (best < 0) throw std::invalid_argument("correction_extra_bound: B(rho) has no positive element");
    return best;
}

// Slice weights at x^6 y^6 once the orbit directions {0, +-2} are removed.
inline std::vector<int> slice_weights_12() { return {-12, -10, -8, -6, -4, 4, 6, 8, 10, 12}; }

// B(rho) as used for the slice at x^6 y^6, taken as given.
inline std::vector<int> b_rho_12() { return {-10, -8, -6, -4, -2, 2, 4, 6, 8, 10}; }

// Fills degrees above the middle by Poincare duality.
inline BettiTable betti_complete(const PoincarePoly& p, int complex_dim) {
    if (complex_dim < 0) throw std::invalid_argument("betti_complete: negative dimension");
    int top = 2 * complex_dim;
    if (p.truncation() && *p.truncation() <= complex_dim)
        throw std::invalid_argument("betti_complete: series not known up to the middle degree");
    BettiTable b;
    b.dims.assign(top + 1, 0);
    for (int j = 0; j <= complex_dim; ++j) b.dims[j] = p[j];
    for (int j = complex_dim + 1; j <= top; ++j) b.dims[j] = b.dims[top - j];
    if (!b.odd_vanish()) throw std::logic_error("betti_complete: odd Betti numbers");
    return b;
}

// Invariants of the swap on Q[x]/(x^(d+1)) (x) Q[y]/(y^(d+1)).
inline BettiTable invariant_product_cohomology(int d) {
    if (d < 0) throw std::invalid_argument("invariant_product_cohomology: negative d");
    std::vector<long> ev(2 * d + 1, 0);
    for (int i = 0; i <= d; ++i)
        for (int j = i; j <= d; ++j) ++ev[i + j];
    return BettiTable::from_even(ev);
}

// Decomposition for a single cusp: above the middle degree add the boundary,
// below it reflect.
inline BettiTable toroidal_betti(const BettiTable& ih_bb, const BettiTable& boundary) {
    if (ih_bb.dims.size() % 2 == 0 || boundary.dims.size() + 2 != ih_bb.dims.size())
        throw std::invalid_argument("toroidal_betti: boundary must have complex dimension one less");
    int top = static_cast<int>(ih_bb.dims.size()) - 1;
    int mid = top / 2;
    BettiTable out;
    out.dims.assign(top + 1, 0);
    for (int j = mid + 1; j <= top; ++j) out.dims[j] = ih_bb[j] + boundary[j];
    for (int j = 0; j < mid; ++j) out.dims[j] = out.dims[top - j];
    out.dims[mid] = ih_bb[mid] + boundary[mid];
    return out;
}

// Cited Betti tables for related moduli spaces, not recomputed here.
struct BettiFixture {
    std::string space;
    std::string source;
    BettiTable table;
};

inline const std::vector<BettiFixture>& cited_betti_fixtures() {
    static const std::vector<BettiFixture> f = {
        {"H(M_ord^K)", "Kirwan-Lee-Weintraub, Table III",
         BettiTable::from_even({1, 474, 991, 1618, 2410, 2410, 1618, 991, 474, 1})},
        {"IH(M_ord^GIT)", "Kirwan-Lee-Weintraub, Theorem 8.6", BettiTable::from_even({1, 12, 67, 232, 562, 562, 232, 67, 12, 1})},
        {"H(M^GIT)", "Kirwan 1989, table on p. 40", BettiTable::from_even({1, 1, 2, 2, 3, 3, 2, 2, 1, 1})},
        {"IH(BB)", "Kirwan 1989, table on p. 40", BettiTable::from_even({1, 1, 2, 2, 3, 3, 2, 2, 1, 1})},
    };
    return f;
}

inline const BettiTable& cited_ih_bb() { return cited_betti_fixtures()[3].table; }

// Betti numbers of the Kirwan blow-up: semistable series plus the main
// correction, completed by duality.
inline BettiTable kirwan_blowup_betti() {
    PoincarePoly p = equivariant_series_ss(12, 10) + correction_main(10);
    return betti_complete(p, 9);
}

inline BettiTable toroidal_compactification_betti() { return toroidal_betti(cited_ih_bb(), invariant_product_cohomology(4)); }

}  // namespace ballcalc
