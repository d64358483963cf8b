#pragma once

// Modular arithmetic, prime sieving, quadratic characters over F_p and
// F_{p^2}, and p-adic valuations. Everything here is pure and reentrant.

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ssp {

using bigint = boost::multiprecision::cpp_int;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Inverse of a mod m for gcd(a, m) = 1.
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw std::invalid_argument("invmod: arguments not coprime");
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

struct PrimeRange {
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> primes;  // strictly increasing, complete up to limit
};

inline constexpr std::uint64_t kSieveCapacity = 1'000'000'000ull;

// Segmented sieve of Eratosthenes. Segment size fixed at 2^18 to bound
// working memory independently of x.
inline PrimeRange primes_up_to(std::uint64_t x) {
    if (x > kSieveCapacity) throw std::length_error("primes_up_to: limit exceeds supported range");
    PrimeRange out;
    out.limit = x;
    if (x < 2) return out;

    std::uint64_t root = 1;
    while ((root + 1) * (root + 1) <= x) ++root;
    std::vector<std::uint64_t> base;
    std::vector<bool> small(root + 1, true);
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (std::uint64_t j = i * i; j <= root; j += i) small[j] = false;
    }

    constexpr std::uint64_t kSegment = 1u << 18;
    std::vector<bool> seg;
    for (std::uint64_t lo = 2; lo <= x; lo += kSegment) {
        std::uint64_t hi = std::min(x, lo + kSegment - 1);
        seg.assign(hi - lo + 1, true);
        for (std::uint64_t p : base) {
            if (p * p > hi) break;
            std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
            for (std::uint64_t j = start; j <= hi; j += p) seg[j - lo] = false;
        }
        for (std::uint64_t v = lo; v <= hi; ++v) {
            if (seg[v - lo]) out.primes.push_back(v);
        }
    }
    return out;
}

// Legendre symbol (a/p) by Euler's criterion. Requires p an odd prime.
inline int legendre_symbol(std::int64_t a, std::uint64_t p) {
    if (p < 3 || !is_prime_u64(p)) throw std::invalid_argument("legendre_symbol: modulus must be an odd prime");
    std::int64_t r = a % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    if (r == 0) return 0;
    std::uint64_t e = powmod(static_cast<std::uint64_t>(r), (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

// Smallest positive quadratic non-residue mod p; fixes the model of F_{p^2}.
inline std::uint64_t smallest_nonresidue(std::uint64_t p) {
    for (std::uint64_t d = 2; d < p; ++d) {
        if (powmod(d, (p - 1) / 2, p) == p - 1) return d;
    }
    throw std::invalid_argument("smallest_nonresidue: no non-residue (p must be an odd prime)");
}

// Element a + b*delta of F_{p^2} with delta^2 = d, d the smallest non-residue.
struct Fp2Element {
    std::uint64_t p;
    std::uint64_t d;
    std::uint64_t a;
    std::uint64_t b;
};

inline Fp2Element fp2_make(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
    return {p, smallest_nonresidue(p), a % p, b % p};
}

inline Fp2Element fp2_mul(const Fp2Element& u, const Fp2Element& v) {
    std::uint64_t p = u.p;
    std::uint64_t a = (mulmod(u.a, v.a, p) + mulmod(u.d, mulmod(u.b, v.b, p), p)) % p;
    std::uint64_t b = (mulmod(u.a, v.b, p) + mulmod(u.b, v.a, p)) % p;
    return {p, u.d, a, b};
}

inline Fp2Element fp2_add_scalar(const Fp2Element& u, std::uint64_t c) {
    return {u.p, u.d, (u.a + c % u.p) % u.p, u.b};
}

inline bool fp2_is_zero(const Fp2Element& u) { return u.a == 0 && u.b == 0; }

// Quadratic character of F_{p^2}: chi(u) = u^{(p^2-1)/2}, which factors
// through the norm, chi(u) = legendre(N(u), p) with N(a + b*delta) = a^2 - d*b^2.
inline int fp2_chi(const Fp2Element& u) {
    if (fp2_is_zero(u)) return 0;
    std::uint64_t p = u.p;
    std::uint64_t norm = (mulmod(u.a, u.a, p) + p - mulmod(u.d, mulmod(u.b, u.b, p), p) % p) % p;
    // norm != 0 for nonzero u since delta^2 = d is a non-residue
    std::uint64_t e = powmod(norm, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

inline bool fp2_is_square(const Fp2Element& u) { return fp2_chi(u) >= 0; }

// p-adic valuation. The valuation of 0 is a distinguished infinite value
// that never takes part in arithmetic.
struct Valuation {
    bool infinite = false;
    std::int64_t v = 0;

    static Valuation infinity() { return {true, 0}; }
    static Valuation finite(std::int64_t v) { return {false, v}; }
    bool operator==(const Valuation&) const = default;
};

inline Valuation p_adic_valuation(const bigint& n, std::uint64_t p) {
    if (n == 0) return Valuation::infinity();
    bigint m = n < 0 ? bigint(-n) : n;
    std::int64_t e = 0;
    while (m % p == 0) { m /= p; ++e; }
    return Valuation::finite(e);
}

inline Valuation p_adic_valuation(std::int64_t n, std::uint64_t p) {
    return p_adic_valuation(bigint(n), p);
}

// Tonelli-Shanks square root mod an odd prime. Requires (a/p) != -1.
inline std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    std::uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    std::uint64_t z = smallest_nonresidue(p);
    std::uint64_t m = static_cast<std::uint64_t>(s);
    std::uint64_t c = powmod(z, q, p);
    std::uint64_t t = powmod(a, q, p);
    std::uint64_t r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) { tt = mulmod(tt, tt, p); ++i; }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

}  // namespace ssp
