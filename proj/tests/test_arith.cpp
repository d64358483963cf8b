#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "ssprime/arith.hpp"

using namespace ssp;

namespace {

// Independent oracle: trial-division sieve.
std::vector<std::uint64_t> trial_division_primes(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; n <= x; ++n) {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) { prime = false; break; }
        if (prime) out.push_back(n);
    }
    return out;
}

}  // namespace

TEST_CASE("primes_up_to basics") {
    CHECK(primes_up_to(10).primes == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(primes_up_to(100).primes.size() == 25);
    CHECK(primes_up_to(1).primes.empty());
    CHECK(primes_up_to(2).primes == std::vector<std::uint64_t>{2});
    CHECK_THROWS_AS(primes_up_to(kSieveCapacity + 1), std::length_error);
}

TEST_CASE("primes_up_to agrees with trial division up to 10^4") {
    CHECK(primes_up_to(10'000).primes == trial_division_primes(10'000));
}

TEST_CASE("primes_up_to(10^6) has 78498 entries") {
    CHECK(primes_up_to(1'000'000).primes.size() == 78498);
}

TEST_CASE("legendre_symbol basics") {
    CHECK(legendre_symbol(1, 7) == 1);
    CHECK(legendre_symbol(0, 5) == 0);
    CHECK(legendre_symbol(3, 7) == -1);  // squares mod 7 are {1,2,4}
    CHECK(legendre_symbol(-1, 7) == -1);
    CHECK_THROWS_AS(legendre_symbol(3, 8), std::invalid_argument);
    CHECK_THROWS_AS(legendre_symbol(3, 15), std::invalid_argument);
    CHECK_THROWS_AS(legendre_symbol(3, 2), std::invalid_argument);
}

TEST_CASE("legendre_symbol is multiplicative") {
    std::mt19937_64 rng(7);
    for (std::uint64_t p : {5ull, 13ull, 101ull, 997ull}) {
        for (int i = 0; i < 200; ++i) {
            std::int64_t a = static_cast<std::int64_t>(rng() % (p - 1)) + 1;
            std::int64_t b = static_cast<std::int64_t>(rng() % (p - 1)) + 1;
            CHECK(legendre_symbol(a, p) * legendre_symbol(b, p) == legendre_symbol(a * b, p));
        }
    }
}

TEST_CASE("exactly (p-1)/2 residues are squares, p <= 200") {
    for (std::uint64_t p : primes_up_to(200).primes) {
        if (p == 2) continue;
        std::uint64_t squares = 0;
        for (std::uint64_t a = 1; a < p; ++a)
            if (legendre_symbol(static_cast<std::int64_t>(a), p) == 1) ++squares;
        CHECK(squares == (p - 1) / 2);
    }
}

TEST_CASE("fp2 squares agree with exhaustive enumeration, p <= 13") {
    for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull}) {
        std::uint64_t d = smallest_nonresidue(p);
        std::set<std::pair<std::uint64_t, std::uint64_t>> squares;
        for (std::uint64_t a = 0; a < p; ++a)
            for (std::uint64_t b = 0; b < p; ++b) {
                Fp2Element u{p, d, a, b};
                Fp2Element u2 = fp2_mul(u, u);
                squares.insert({u2.a, u2.b});
            }
        for (std::uint64_t a = 0; a < p; ++a)
            for (std::uint64_t b = 0; b < p; ++b)
                CHECK(fp2_is_square(Fp2Element{p, d, a, b}) == (squares.count({a, b}) > 0));
    }
}

TEST_CASE("fp2 character matches direct exponentiation") {
    for (std::uint64_t p : {7ull, 11ull, 13ull}) {
        std::uint64_t d = smallest_nonresidue(p);
        for (std::uint64_t a = 0; a < p; ++a)
            for (std::uint64_t b = 0; b < p; ++b) {
                Fp2Element u{p, d, a, b};
                if (fp2_is_zero(u)) {
                    CHECK(fp2_chi(u) == 0);
                    continue;
                }
                Fp2Element acc{p, d, 1, 0};
                for (std::uint64_t k = 0; k < (p * p - 1) / 2; ++k) acc = fp2_mul(acc, u);
                CHECK((fp2_chi(u) == 1) == (acc.a == 1 && acc.b == 0));
            }
    }
}

TEST_CASE("fp2 conventions") {
    CHECK(fp2_is_square(fp2_make(7, 1, 0)));
    CHECK(fp2_is_square(fp2_make(7, 0, 0)));  // zero counts as a square
    // delta itself: norm(delta) = -d, so chi(delta) = legendre(-d, p)
    Fp2Element delta = fp2_make(7, 0, 1);
    CHECK(fp2_chi(delta) == legendre_symbol(-static_cast<std::int64_t>(delta.d), 7));
}

TEST_CASE("p-adic valuation") {
    CHECK(p_adic_valuation(12, 2) == Valuation::finite(2));
    CHECK(p_adic_valuation(7, 7) == Valuation::finite(1));
    CHECK(p_adic_valuation(1, 5) == Valuation::finite(0));
    CHECK(p_adic_valuation(-250, 5) == Valuation::finite(3));
    CHECK(p_adic_valuation(0, 3).infinite);
}

TEST_CASE("sqrt_mod round-trips") {
    for (std::uint64_t p : {5ull, 13ull, 17ull, 97ull, 10007ull}) {
        for (std::uint64_t a = 1; a < 50 && a < p; ++a) {
            if (legendre_symbol(static_cast<std::int64_t>(a), p) != 1) continue;
            std::uint64_t r = sqrt_mod(a, p);
            CHECK(mulmod(r, r, p) == a % p);
        }
    }
}
