#pragma once

// Hyperelliptic genus-2 curves y^2 = f(x), f monic quintic: character-sum
// point counting over F_p and F_{p^2}, assembly of the quartic Frobenius
// polynomial of the Jacobian, and supersingularity classification.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ssprime/arith.hpp"
#include "ssprime/classification.hpp"
#include "ssprime/elliptic.hpp"

namespace ssp {

struct Genus2CurveSpec {
    // f(x) = x^5 + c[4] x^4 + c[3] x^3 + c[2] x^2 + c[1] x + c[0]
    std::array<std::int64_t, 5> f_coeffs{};

    // disc(f) = res(f, f') up to the standard sign (+ for degree 5).
    bigint discriminant() const;
    void validate() const {
        if (discriminant() == 0) throw std::invalid_argument("Genus2CurveSpec: singular model (zero discriminant)");
    }
};

namespace detail {

// Determinant by fraction-free (Bareiss) elimination.
inline bigint bareiss_det(std::vector<std::vector<bigint>> m) {
    const std::size_t n = m.size();
    bigint prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace detail

inline bigint Genus2CurveSpec::discriminant() const {
    // Sylvester matrix of f (degree 5) and f' (degree 4): 9x9.
    std::array<bigint, 6> f{bigint(f_coeffs[0]), bigint(f_coeffs[1]), bigint(f_coeffs[2]),
                            bigint(f_coeffs[3]), bigint(f_coeffs[4]), bigint(1)};
    std::array<bigint, 5> df;
    for (int i = 1; i <= 5; ++i) df[static_cast<std::size_t>(i - 1)] = i * f[static_cast<std::size_t>(i)];
    std::vector<std::vector<bigint>> m(9, std::vector<bigint>(9, bigint(0)));
    for (int r = 0; r < 4; ++r)
        for (int i = 0; i <= 5; ++i) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + 5 - i)] = f[static_cast<std::size_t>(i)];
    for (int r = 0; r < 5; ++r)
        for (int i = 0; i <= 4; ++i) m[static_cast<std::size_t>(4 + r)][static_cast<std::size_t>(r + 4 - i)] = df[static_cast<std::size_t>(i)];
    // disc = res(f, f') / lc(f); lc = 1, and deg 5 gives sign (+).
    return detail::bareiss_det(std::move(m));
}

// p = 2 is always skipped (the model is wrong in characteristic 2).
inline Reduction reduce_g2(const Genus2CurveSpec& C, std::uint64_t p) {
    if (p == 2) return Reduction::bad;
    if (C.discriminant() % p == 0) return Reduction::bad;
    return Reduction::good;
}

// #C(F_q) for q = p (ext_degree 1) or q = p^2 (ext_degree 2), including
// the single point at infinity: 1 + sum_x (1 + chi_q(f(x))).
inline std::uint64_t count_points(const Genus2CurveSpec& C, std::uint64_t p, int ext_degree) {
    if (reduce_g2(C, p) != Reduction::good) throw std::invalid_argument("count_points: bad reduction");
    if (ext_degree != 1 && ext_degree != 2) throw std::invalid_argument("count_points: extension degree must be 1 or 2");
    std::uint64_t c[5];
    for (int i = 0; i < 5; ++i)
        c[i] = static_cast<std::uint64_t>(((C.f_coeffs[static_cast<std::size_t>(i)] % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(p));

    std::vector<std::int8_t> chi = detail::chi_table(p);
    std::int64_t s = 0;
    if (ext_degree == 1) {
        for (std::uint64_t x = 0; x < p; ++x) {
            std::uint64_t v = 1;
            for (int i = 4; i >= 0; --i) v = (mulmod(v, x, p) + c[i]) % p;
            s += chi[v];
        }
        return static_cast<std::uint64_t>(static_cast<std::int64_t>(p) + 1 + s);
    }
    // F_{p^2} = F_p(delta), delta^2 = d; chi_{p^2}(u) = chi_p(norm u).
    std::uint64_t d = smallest_nonresidue(p);
    for (std::uint64_t xa = 0; xa < p; ++xa) {
        for (std::uint64_t xb = 0; xb < p; ++xb) {
            // Horner: v = x^5 + c4 x^4 + ... + c0 over F_{p^2}
            std::uint64_t va = 1, vb = 0;
            for (int i = 4; i >= 0; --i) {
                std::uint64_t na = (mulmod(va, xa, p) + mulmod(d, mulmod(vb, xb, p), p)) % p;
                std::uint64_t nb = (mulmod(va, xb, p) + mulmod(vb, xa, p)) % p;
                va = (na + c[i]) % p;
                vb = nb;
            }
            if (va == 0 && vb == 0) continue;  // chi = 0
            std::uint64_t norm = (mulmod(va, va, p) + p - mulmod(d, mulmod(vb, vb, p), p)) % p;
            s += chi[norm];
        }
    }
    std::uint64_t q = p * p;
    return static_cast<std::uint64_t>(static_cast<std::int64_t>(q) + 1 + s);
}

// Phi = T^4 - s1 T^3 + s2 T^2 - p s1 T + p^2 from the two point counts.
// Any inconsistency here signals a counting bug, not bad input.
inline FrobeniusData frobenius_poly_g2(std::uint64_t N1, std::uint64_t N2, std::uint64_t p) {
    std::int64_t s1 = static_cast<std::int64_t>(p) + 1 - static_cast<std::int64_t>(N1);
    std::int64_t num = s1 * s1 - (static_cast<std::int64_t>(p * p) + 1 - static_cast<std::int64_t>(N2));
    if (num % 2 != 0) throw std::runtime_error("frobenius_poly_g2: non-integral s2 (counting bug)");
    std::int64_t s2 = num / 2;
    bigint P(p);
    IntPoly phi(std::vector<bigint>{P * P, -P * s1, bigint(s2), bigint(-s1), bigint(1)});
    FrobeniusData f = FrobeniusData::make(p, 1, std::move(phi));
    if (!weil_check(f)) throw std::runtime_error("frobenius_poly_g2: Weil check failed (counting bug)");
    return f;
}

inline FrobeniusData frobenius_g2(const Genus2CurveSpec& C, std::uint64_t p) {
    std::uint64_t N1 = count_points(C, p, 1);
    std::uint64_t N2 = count_points(C, p, 2);
    return frobenius_poly_g2(N1, N2, p);
}

// Supersingular iff all four Newton slopes are 1/2 (equivalently
// p | s1 and p | s2); exactly Oort's notion for abelian surfaces.
inline Classification classify_g2(const Genus2CurveSpec& C, std::uint64_t p) {
    if (reduce_g2(C, p) != Reduction::good)
        return Classification::skip(p, p == 2 ? "policy: p = 2" : "bad reduction: p | disc");
    return Classification::from_frobenius(frobenius_g2(C, p));
}

}  // namespace ssp
