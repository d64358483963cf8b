#pragma once

// Exact polynomial arithmetic over arbitrary-precision integers and
// rationals, small exact fractions for Newton slopes, and cyclotomic
// polynomials by iterated exact division.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ssprime/arith.hpp"

namespace ssp {

using bigrat = boost::multiprecision::cpp_rational;

// Small exact fraction, used for Newton slopes and bound exponents.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }
    friend Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

// Dense integer polynomial, coefficients in ascending degree order.
struct IntPoly {
    std::vector<bigint> c;  // c[i] multiplies T^i; empty = zero polynomial

    IntPoly() = default;
    explicit IntPoly(std::vector<bigint> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const bigint& coeff(int i) const {
        static const bigint zero = 0;
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<std::size_t>(i)] : zero;
    }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<bigint> out(a.c.size() + b.c.size() - 1, bigint(0));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j)
                out[i + j] += a.c[i] * b.c[j];
        return IntPoly(std::move(out));
    }

    // f(-T)
    IntPoly negate_variable() const {
        IntPoly out = *this;
        for (std::size_t i = 1; i < out.c.size(); i += 2) out.c[i] = -out.c[i];
        return out;
    }

    std::string str(const std::string& var = "T") const;
};

// Exact division by a monic divisor; returns quotient only when the
// remainder vanishes.
inline bool divide_exact(const IntPoly& num, const IntPoly& den, IntPoly* quotient) {
    if (den.is_zero() || !den.is_monic()) throw std::invalid_argument("divide_exact: divisor must be monic");
    std::vector<bigint> rem = num.c;
    int dn = num.degree(), dd = den.degree();
    if (dn < dd) {
        if (!num.is_zero()) return false;
        if (quotient) *quotient = {};
        return true;
    }
    std::vector<bigint> q(static_cast<std::size_t>(dn - dd + 1), bigint(0));
    for (int k = dn; k >= dd; --k) {
        bigint f = rem[static_cast<std::size_t>(k)];
        if (f == 0) continue;
        q[static_cast<std::size_t>(k - dd)] = f;
        for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k - dd + i)] -= f * den.coeff(i);
    }
    for (const bigint& r : rem)
        if (r != 0) return false;
    if (quotient) *quotient = IntPoly(std::move(q));
    return true;
}

inline std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const bigint& a = coeff(i);
        if (a == 0) continue;
        bigint mag = a < 0 ? bigint(-a) : a;
        if (out.empty()) {
            if (a < 0) out += "-";
        } else {
            out += a < 0 ? " - " : " + ";
        }
        bool unit = mag == 1 && i > 0;
        if (!unit) out += mag.str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

inline std::uint64_t euler_phi(std::uint64_t m) {
    std::uint64_t result = m;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

// m-th cyclotomic polynomial: (T^m - 1) / prod of the proper-divisor
// cyclotomics, computed recursively with exact division.
inline const IntPoly& cyclotomic(std::uint64_t m) {
    static thread_local std::map<std::uint64_t, IntPoly> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<bigint> xm(static_cast<std::size_t>(m) + 1, bigint(0));
    xm[0] = -1;
    xm[static_cast<std::size_t>(m)] = 1;
    IntPoly num(std::move(xm));
    for (std::uint64_t d = 1; d < m; ++d) {
        if (m % d) continue;
        IntPoly q;
        if (!divide_exact(num, cyclotomic(d), &q))
            throw std::logic_error("cyclotomic: inexact division");
        num = std::move(q);
    }
    return cache.emplace(m, std::move(num)).first->second;
}

// Rational polynomial, same layout as IntPoly.
struct RatPoly {
    std::vector<bigrat> c;

    bool all_integral() const {
        return std::all_of(c.begin(), c.end(),
                           [](const bigrat& q) { return boost::multiprecision::denominator(q) == 1; });
    }
    IntPoly to_int_poly() const {
        std::vector<bigint> out;
        out.reserve(c.size());
        for (const bigrat& q : c) {
            if (boost::multiprecision::denominator(q) != 1)
                throw std::invalid_argument("RatPoly::to_int_poly: non-integral coefficient");
            out.push_back(boost::multiprecision::numerator(q));
        }
        return IntPoly(std::move(out));
    }
};

}  // namespace ssp
