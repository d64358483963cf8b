#include <doctest.h>

#include <cstdint>
#include <map>

#include "ssprime/k3.hpp"

using namespace ssp;

namespace {
const KummerSpec kK3x5p1{Genus2CurveSpec{{1, 0, 0, 0, 0}}};
const KummerSpec kK3x5xp1{Genus2CurveSpec{{1, 1, 0, 0, 0}}};
}  // namespace

TEST_CASE("kummer_newton_profile: supersingular base gives all slopes 1") {
    // x^5 + 1 is supersingular at p = 7
    NewtonProfile prof = kummer_newton_profile(kK3x5p1, 7);
    REQUIRE(prof.entries.size() == 1);
    CHECK(prof.entries[0] == std::pair{Rational(1), 22});
}

TEST_CASE("kummer_newton_profile: ordinary base") {
    // x^5 + 1 at p = 11: s1 = 4, s2 = 6, ordinary (slopes {0,0,1,1})
    NewtonProfile base = newton_slopes(frobenius_g2(kK3x5p1.base, 11));
    REQUIRE(base.entries.size() == 2);
    CHECK(base.entries[0] == std::pair{Rational(0), 2});
    CHECK(base.entries[1] == std::pair{Rational(1), 2});

    NewtonProfile prof = kummer_newton_profile(kK3x5p1, 11);
    // wedge slopes {0,1,1,1,1,2} plus 1 x16
    std::map<Rational, int> got;
    for (const auto& [s, m] : prof.entries) got[s] += m;
    CHECK(got == std::map<Rational, int>{{Rational(0), 1}, {Rational(1), 20}, {Rational(2), 1}});
    CHECK(prof.total_multiplicity() == 22);
}

TEST_CASE("kummer profile invariants: symmetry about 1 and total valuation 22") {
    for (std::uint64_t p : primes_up_to(100).primes) {
        if (reduce_g2(kK3x5xp1.base, p) != Reduction::good) continue;
        NewtonProfile prof = kummer_newton_profile(kK3x5xp1, p);
        CHECK(prof.total_multiplicity() == 22);
        CHECK(prof.weighted_sum() == Rational(22));
        std::map<Rational, int> mult;
        for (const auto& [s, m] : prof.entries) mult[s] += m;
        for (const auto& [s, m] : mult) {
            Rational mirror = Rational(2) + Rational(-s.num, s.den);
            CHECK(mult[mirror] == m);
        }
    }
}

TEST_CASE("classify_kummer equals classify_g2 on good primes <= 200") {
    for (const KummerSpec& K : {kK3x5p1, kK3x5xp1}) {
        for (std::uint64_t p : primes_up_to(200).primes) {
            Classification ck = classify_kummer(K, p);
            Classification cg = classify_g2(K.base, p);
            CHECK(ck.verdict == cg.verdict);
            if (ck.classified()) {
                CHECK(ck.slope_ss == ck.torus_ss);
                CHECK(ck.frobenius->w == 2);
                CHECK(ck.frobenius->n == 6);
            }
        }
    }
}

TEST_CASE("bad primes are skipped or rejected") {
    CHECK(classify_kummer(kK3x5p1, 2).verdict == Verdict::skipped);
    CHECK(classify_kummer(kK3x5p1, 5).verdict == Verdict::skipped);
    CHECK_THROWS_AS(kummer_newton_profile(kK3x5p1, 5), std::invalid_argument);
}
