#pragma once

// Exact analysis of Frobenius characteristic polynomials: Newton polygons,
// Graeffe root-squaring, weight normalization, cyclotomic-product detection,
// wedge squares, and Weil sanity checks.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ssprime/arith.hpp"
#include "ssprime/intpoly.hpp"

namespace ssp {

// Characteristic polynomial of Frobenius on weight-w cohomology at a prime
// of good reduction. q = #F_v (equal to p over Q). Monic of degree n.
struct FrobeniusData {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    int w = 1;               // cohomological weight: 1 for H^1, 2 for K3 H^2
    int n = 0;               // degree
    IntPoly phi;             // coeffs ascending, phi.c[n] == 1

    static FrobeniusData make(std::uint64_t p, int w, IntPoly phi) {
        FrobeniusData f;
        f.p = p;
        f.q = p;
        f.w = w;
        f.n = phi.degree();
        f.phi = std::move(phi);
        if (!f.phi.is_monic()) throw std::invalid_argument("FrobeniusData: polynomial must be monic");
        return f;
    }
};

// Multiset of root valuations (Newton slopes), non-decreasing.
struct NewtonProfile {
    std::vector<std::pair<Rational, int>> entries;  // (slope, multiplicity)

    int total_multiplicity() const {
        int t = 0;
        for (const auto& [s, m] : entries) t += m;
        return t;
    }
    bool all_equal(Rational s) const {
        for (const auto& [slope, m] : entries)
            if (!(slope == s)) return false;
        return !entries.empty();
    }
    // Sum of slope * multiplicity; equals v_p(constant term) for a monic
    // polynomial with nonzero constant term.
    Rational weighted_sum() const {
        Rational t{0};
        for (const auto& [s, m] : entries) t = t + Rational(s.num * m, s.den);
        return t;
    }
};

// Root valuations of phi at p, read off the lower convex hull of the
// points (i, v_p(a_i)): a hull segment from (i1,v1) to (i2,v2) contributes
// i2-i1 roots of valuation -(v2-v1)/(i2-i1). Convention fixed by T - p
// having the single slope 1.
inline NewtonProfile newton_slopes(const FrobeniusData& f) {
    if (!f.phi.is_monic()) throw std::invalid_argument("newton_slopes: polynomial must be monic");
    if (f.phi.coeff(0) == 0) throw std::invalid_argument("newton_slopes: zero constant term");

    struct Pt { std::int64_t i, v; };
    std::vector<Pt> pts;
    for (int i = 0; i <= f.n; ++i) {
        const bigint& a = f.phi.coeff(i);
        if (a == 0) continue;  // infinite valuation, never on the lower hull
        pts.push_back({i, p_adic_valuation(a, f.p).v});
    }
    // lower hull, left to right (points already sorted by i)
    std::vector<Pt> hull;
    for (const Pt& p : pts) {
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull[hull.size() - 1];
            // keep b only if it lies strictly below segment a->p
            if ((b.v - a.v) * (p.i - a.i) < (p.v - a.v) * (b.i - a.i)) break;
            hull.pop_back();
        }
        hull.push_back(p);
    }

    NewtonProfile prof;
    for (std::size_t k = 1; k < hull.size(); ++k) {
        std::int64_t di = hull[k].i - hull[k - 1].i;
        std::int64_t dv = hull[k].v - hull[k - 1].v;
        prof.entries.emplace_back(Rational(-dv, di), static_cast<int>(di));
    }
    // hull slopes increase left to right, so negate-and-reverse sorts ascending
    std::reverse(prof.entries.begin(), prof.entries.end());
    return prof;
}

inline bool is_slope_supersingular(const NewtonProfile& prof, int w) {
    return prof.all_equal(Rational(w, 2));
}

// Monic polynomial whose roots are the squares of f's roots:
// f(T) * f(-T) = (-1)^n * g(T^2).
inline IntPoly graeffe_square(const IntPoly& f) {
    if (!f.is_monic()) throw std::invalid_argument("graeffe_square: polynomial must be monic");
    IntPoly prod = f * f.negate_variable();
    int n = f.degree();
    std::vector<bigint> g(static_cast<std::size_t>(n) + 1);
    int sign = (n % 2 == 0) ? 1 : -1;
    for (int i = 0; i <= n; ++i) g[static_cast<std::size_t>(i)] = sign * prod.coeff(2 * i);
    return IntPoly(std::move(g));
}

// Q(T) = g(p^w T) / p^{n w}: roots are beta^2 / p^w. The flag reports
// whether Q has integer coefficients, i.e. p^{w(n-i)} | g_i for all i.
inline std::pair<RatPoly, bool> normalize_squared(const IntPoly& g, std::uint64_t p, int w) {
    if (!g.is_monic()) throw std::invalid_argument("normalize_squared: polynomial must be monic");
    int n = g.degree();
    RatPoly q;
    q.c.resize(static_cast<std::size_t>(n) + 1);
    bigint scale = 1;  // p^{w(n-i)}
    for (int i = n; i >= 0; --i) {
        q.c[static_cast<std::size_t>(i)] = bigrat(g.coeff(i), scale);
        if (i > 0) for (int k = 0; k < w; ++k) scale *= p;
    }
    return {q, q.all_integral()};
}

// True iff q is a product of cyclotomic polynomials. Bounded trial
// division: every cyclotomic factor Phi_m needs phi(m) <= n, and
// phi(m) >= sqrt(m/2) makes m <= 2n^2 + 1 a safe cutoff.
inline bool is_cyclotomic_product(const IntPoly& q) {
    if (q.is_zero() || !q.is_monic() || q.degree() < 1)
        throw std::invalid_argument("is_cyclotomic_product: input must be monic of degree >= 1");
    IntPoly rest = q;
    std::uint64_t n = static_cast<std::uint64_t>(q.degree());
    std::uint64_t bound = 2 * n * n + 1;
    for (std::uint64_t m = 1; m <= bound && rest.degree() > 0; ++m) {
        if (euler_phi(m) > n) continue;
        IntPoly quot;
        while (rest.degree() > 0 && divide_exact(rest, cyclotomic(m), &quot)) rest = quot;
    }
    return rest.is_one();
}

// Weil sanity check: reciprocal functional equation
// coeffs[i] = coeffs[n-i] * q^{w(n/2 - i)} for i <= n/2, and the
// archimedean bounds |coeffs[n-k]| <= C(n,k) * q^{k w / 2} (compared
// squared to stay in integers).
inline bool weil_check(const FrobeniusData& f) {
    int n = f.n;
    if (n <= 0 || n % 2 != 0 || !f.phi.is_monic()) return false;
    bigint qw = 1;  // q^w
    for (int k = 0; k < f.w; ++k) qw *= f.q;

    bigint scale = 1;  // q^{w(n/2 - i)}
    for (int i = n / 2; i >= 0; --i) {
        if (f.phi.coeff(i) != f.phi.coeff(n - i) * scale) return false;
        scale *= qw;
    }
    bigint binom = 1, qpow = 1;
    for (int k = 0; k <= n; ++k) {
        const bigint& a = f.phi.coeff(n - k);
        if (a * a > binom * binom * qpow) return false;
        binom = binom * (n - k) / (k + 1);
        qpow *= qw;
    }
    return true;
}

// The paper's test set, exactly: true iff every normalized eigenvalue
// beta / q^{w/2} is a root of unity (Frobenius torus equals the
// homotheties). Squaring via Graeffe keeps the computation in Z even
// for odd weight, then Kronecker reduces the check to cyclotomic
// divisibility.
inline bool torus_is_Gm(const FrobeniusData& f) {
    if (!weil_check(f)) throw std::invalid_argument("torus_is_Gm: input fails the Weil check");
    IntPoly g = graeffe_square(f.phi);
    auto [q, integral] = normalize_squared(g, f.q, f.w);
    if (!integral) return false;
    return is_cyclotomic_product(q.to_int_poly());
}

// Monic sextic with root multiset {beta_i * beta_j : i < j} for a quartic
// f. Power sums of the pairs come from power sums of the roots,
// P_k = (p_k^2 - p_{2k}) / 2, and Newton's identities convert back to
// elementary symmetric functions (the divisions are exact over Z).
inline IntPoly wedge_square(const IntPoly& f) {
    if (f.degree() != 4 || !f.is_monic()) throw std::invalid_argument("wedge_square: quartic monic input required");
    // elementary symmetric functions of the roots
    bigint e[5];
    e[0] = 1;
    for (int k = 1; k <= 4; ++k) e[k] = (k % 2 ? -1 : 1) * f.coeff(4 - k);

    // power sums p_1..p_12 of the roots
    std::vector<bigint> ps(13);
    for (int k = 1; k <= 12; ++k) {
        bigint s = 0;
        for (int i = 1; i <= std::min(k - 1, 4); ++i) s += (i % 2 ? e[i] : -e[i]) * ps[static_cast<std::size_t>(k - i)];
        if (k <= 4) s += (k % 2 ? 1 : -1) * k * e[k];
        ps[static_cast<std::size_t>(k)] = s;
    }
    // power sums of the 6 pairwise products
    bigint P[7];
    for (int k = 1; k <= 6; ++k) {
        bigint num = ps[static_cast<std::size_t>(k)] * ps[static_cast<std::size_t>(k)] - ps[static_cast<std::size_t>(2 * k)];
        P[k] = num / 2;
    }
    // elementary symmetric functions of the pairs
    bigint E[7];
    E[0] = 1;
    for (int k = 1; k <= 6; ++k) {
        bigint s = 0;
        for (int i = 1; i <= k; ++i) s += (i % 2 ? E[k - i] : -E[k - i]) * P[i];
        E[k] = s / k;
    }
    std::vector<bigint> out(7);
    for (int i = 0; i <= 6; ++i) out[static_cast<std::size_t>(i)] = ((6 - i) % 2 ? -E[6 - i] : E[6 - i]);
    return IntPoly(std::move(out));
}

inline IntPoly wedge_square(const FrobeniusData& f) {
    if (f.n != 4 || f.w != 1) throw std::invalid_argument("wedge_square: expects a weight-1 quartic");
    return wedge_square(f.phi);
}

}  // namespace ssp
