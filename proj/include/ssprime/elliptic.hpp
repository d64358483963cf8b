#pragma once

// Elliptic curves y^2 = x^3 + a x + b over Q: reduction type, trace of
// Frobenius by character sum or by baby-step giant-step order finding,
// and supersingularity classification.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ssprime/arith.hpp"
#include "ssprime/classification.hpp"

namespace ssp {

struct EllipticCurveSpec {
    std::int64_t a = 0;
    std::int64_t b = 0;

    bigint discriminant() const {
        bigint A = a, B = b;
        return -16 * (4 * A * A * A + 27 * B * B);
    }
    void validate() const {
        if (discriminant() == 0) throw std::invalid_argument("EllipticCurveSpec: singular curve (zero discriminant)");
    }
};

enum class Reduction { good, bad };

// p <= 3 is always skipped: the a_p = 0 criterion needs p >= 5 and finitely
// many skips cannot move a density. Minimality of the model is not checked.
inline Reduction reduce_ec(const EllipticCurveSpec& E, std::uint64_t p) {
    if (p <= 3) return Reduction::bad;
    if (E.discriminant() % p == 0) return Reduction::bad;
    return Reduction::good;
}

namespace detail {

// Quadratic-character table for F_p: chi[x] = legendre(x, p), built by
// marking squares. O(p) time and memory.
inline std::vector<std::int8_t> chi_table(std::uint64_t p) {
    std::vector<std::int8_t> chi(p, -1);
    chi[0] = 0;
    for (std::uint64_t x = 1; x <= p / 2; ++x) chi[mulmod(x, x, p)] = 1;
    return chi;
}

struct EcPoint {
    std::uint64_t x = 0, y = 0;
    bool inf = true;
};

struct EcGroup {
    std::uint64_t p, a, b;

    EcPoint add(const EcPoint& P, const EcPoint& Q) const {
        if (P.inf) return Q;
        if (Q.inf) return P;
        std::uint64_t lambda;
        if (P.x == Q.x) {
            if ((P.y + Q.y) % p == 0) return {};  // inverse points (covers 2-torsion)
            std::uint64_t num = (3 * mulmod(P.x, P.x, p) % p + a) % p;
            lambda = mulmod(num, invmod(2 * P.y % p, p), p);
        } else {
            std::uint64_t dx = (Q.x + p - P.x) % p;
            std::uint64_t dy = (Q.y + p - P.y) % p;
            lambda = mulmod(dy, invmod(dx, p), p);
        }
        std::uint64_t x3 = (mulmod(lambda, lambda, p) + 2 * p - P.x - Q.x) % p;
        std::uint64_t y3 = (mulmod(lambda, (P.x + p - x3) % p, p) + p - P.y) % p;
        return {x3, y3, false};
    }
    EcPoint neg(const EcPoint& P) const {
        if (P.inf) return P;
        return {P.x, (p - P.y) % p, false};
    }
    EcPoint mul(std::uint64_t k, EcPoint P) const {
        EcPoint R;
        while (k) {
            if (k & 1) R = add(R, P);
            P = add(P, P);
            k >>= 1;
        }
        return R;
    }
};

inline std::uint64_t isqrt_u64(std::uint64_t n) {
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Smallest M in a given search window with M*P = O, by baby-step
// giant-step around p + 1; returns 0 when none is found (cannot happen
// for a genuine curve point).
inline std::uint64_t bsgs_annihilator(const EcGroup& G, const EcPoint& P, std::uint64_t W) {
    std::uint64_t m = isqrt_u64(2 * W + 1) + 1;
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> baby;  // x -> (j, y)
    baby.reserve(m + 1);
    EcPoint B;  // j*P
    for (std::uint64_t j = 0; j <= m; ++j) {
        if (B.inf) {
            // j is already the order of P
            if (j > 0) return j;
        } else {
            baby.emplace(B.x, std::make_pair(j, B.y));
        }
        B = G.add(B, P);
    }
    EcPoint giant = G.mul(m, P);
    std::uint64_t A = (W + m) / m + 1;
    EcPoint Q = G.mul(G.p + 1, P);
    EcPoint R = G.add(Q, G.mul(A, G.neg(giant)));  // Q - A*giant
    for (std::uint64_t k = 0; k <= 2 * A; ++k) {
        std::int64_t am = (static_cast<std::int64_t>(k) - static_cast<std::int64_t>(A)) * static_cast<std::int64_t>(m);
        if (R.inf) {
            std::int64_t M = static_cast<std::int64_t>(G.p) + 1 + am;
            if (M > 0) return static_cast<std::uint64_t>(M);
        } else {
            auto it = baby.find(R.x);
            if (it != baby.end()) {
                auto [j, y] = it->second;
                // R = j*P or R = -j*P; Q + am*P = ±j*P
                std::int64_t M = static_cast<std::int64_t>(G.p) + 1 + am + (R.y == y ? -static_cast<std::int64_t>(j) : static_cast<std::int64_t>(j));
                if (M > 0 && G.mul(static_cast<std::uint64_t>(M), P).inf) return static_cast<std::uint64_t>(M);
                M = static_cast<std::int64_t>(G.p) + 1 + am + (R.y == y ? static_cast<std::int64_t>(j) : -static_cast<std::int64_t>(j));
                if (M > 0 && G.mul(static_cast<std::uint64_t>(M), P).inf) return static_cast<std::uint64_t>(M);
            }
        }
        R = G.add(R, giant);
    }
    return 0;
}

// Exact order of P given an annihilator M.
inline std::uint64_t point_order(const EcGroup& G, const EcPoint& P, std::uint64_t M) {
    std::uint64_t o = M;
    std::uint64_t rest = M;
    for (std::uint64_t f = 2; f * f <= rest; ++f) {
        while (rest % f == 0) {
            rest /= f;
            while (o % f == 0 && G.mul(o / f, P).inf) o /= f;
        }
    }
    if (rest > 1) {
        while (o % rest == 0 && G.mul(o / rest, P).inf) o /= rest;
    }
    return o;
}

}  // namespace detail

// a_p by the character sum -sum_x chi(x^3 + a x + b). O(p).
inline std::int64_t ap_legendre(const EllipticCurveSpec& E, std::uint64_t p) {
    if (reduce_ec(E, p) != Reduction::good) throw std::invalid_argument("ap_legendre: bad reduction");
    std::vector<std::int8_t> chi = detail::chi_table(p);
    std::uint64_t a = static_cast<std::uint64_t>(((E.a % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(p));
    std::uint64_t b = static_cast<std::uint64_t>(((E.b % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(p));
    std::int64_t s = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t v = (mulmod(mulmod(x, x, p), x, p) + mulmod(a, x, p) + b) % p;
        s += chi[v];
    }
    return -s;
}

// a_p by order finding: lcm of random point orders until a unique
// multiple lies in the Hasse interval, falling back to the quadratic
// twist and finally to the character sum. The returned value is
// deterministic even though the path is randomized.
inline std::int64_t ap_bsgs(const EllipticCurveSpec& E, std::uint64_t p, std::uint64_t seed = 0x5353505249ull) {
    if (reduce_ec(E, p) != Reduction::good) throw std::invalid_argument("ap_bsgs: bad reduction");
    if (p < 5) throw std::invalid_argument("ap_bsgs: requires p >= 5");
    if (p < 230) return ap_legendre(E, p);  // tiny groups: order finding cannot separate candidates

    std::uint64_t a = static_cast<std::uint64_t>(((E.a % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(p));
    std::uint64_t b = static_cast<std::uint64_t>(((E.b % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(p));
    std::uint64_t W = detail::isqrt_u64(4 * p);  // |t| <= 2*sqrt(p)
    std::uint64_t lo = p + 1 - W, hi = p + 1 + W;
    std::mt19937_64 rng(seed ^ (p * 0x9e3779b97f4a7c15ull));

    auto try_curve = [&](std::uint64_t ca, std::uint64_t cb, std::uint64_t* order_out) -> bool {
        detail::EcGroup G{p, ca, cb};
        std::uint64_t L = 1;
        for (int attempts = 0; attempts < 20; ++attempts) {
            std::uint64_t x = rng() % p;
            std::uint64_t rhs = (mulmod(mulmod(x, x, p), x, p) + mulmod(ca, x, p) + cb) % p;
            if (rhs != 0 && powmod(rhs, (p - 1) / 2, p) != 1) continue;
            detail::EcPoint P{x, sqrt_mod(rhs, p), false};
            std::uint64_t M = detail::bsgs_annihilator(G, P, W);
            if (M == 0) continue;
            std::uint64_t o = detail::point_order(G, P, M);
            L = std::lcm(L, o);
            // count multiples of L in [lo, hi]
            std::uint64_t first = ((lo + L - 1) / L) * L;
            if (first > hi) continue;  // inconsistent, keep sampling
            if (first + L > hi) {
                *order_out = first;
                return true;
            }
        }
        return false;
    };

    std::uint64_t N = 0;
    if (try_curve(a, b, &N)) return static_cast<std::int64_t>(p) + 1 - static_cast<std::int64_t>(N);
    // quadratic twist by the smallest non-residue d: orders sum to 2p + 2
    std::uint64_t d = smallest_nonresidue(p);
    std::uint64_t d2 = mulmod(d, d, p), d3 = mulmod(d2, d, p);
    std::uint64_t Nt = 0;
    if (try_curve(mulmod(a, d2, p), mulmod(b, d3, p), &Nt))
        return static_cast<std::int64_t>(Nt) - static_cast<std::int64_t>(p) - 1;
    return ap_legendre(E, p);
}

// Frobenius polynomial T^2 - a_p T + p as weight-1 data.
inline FrobeniusData frobenius_poly_ec(std::int64_t ap, std::uint64_t p) {
    IntPoly phi(std::vector<bigint>{bigint(p), bigint(-ap), bigint(1)});
    FrobeniusData f = FrobeniusData::make(p, 1, std::move(phi));
    if (!weil_check(f)) throw std::runtime_error("frobenius_poly_ec: Weil check failed (counting bug)");
    return f;
}

// Supersingular iff p | a_p, which for p >= 5 is a_p = 0 by Hasse.
inline Classification classify_ec(const EllipticCurveSpec& E, std::uint64_t p,
                                  std::uint64_t seed = 0x5353505249ull, bool use_bsgs = true) {
    if (reduce_ec(E, p) != Reduction::good)
        return Classification::skip(p, p <= 3 ? "policy: p <= 3" : "bad reduction: p | disc");
    std::int64_t ap = use_bsgs ? ap_bsgs(E, p, seed) : ap_legendre(E, p);
    return Classification::from_frobenius(frobenius_poly_ec(ap, p));
}

}  // namespace ssp
