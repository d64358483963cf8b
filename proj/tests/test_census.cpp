#include <doctest.h>

#include <cstdint>

#include "ssprime/census.hpp"
#include "ssprime/report_io.hpp"

using namespace ssp;

TEST_CASE("bound_profile: abelian families") {
    BoundProfile a1 = bound_profile_abelian(1);
    CHECK(a1.dim_g == 4);
    CHECK(a1.rk_g == 2);
    CHECK(a1.alpha1 == Rational(1, 4));
    CHECK(a1.alpha2 == Rational(1, 4));
    CHECK(*a1.gamma_cdss == Rational(1, 2));  // 1/(2g^2-g+1), g=1

    BoundProfile a2 = bound_profile_abelian(2);
    CHECK(a2.dim_g == 11);
    CHECK(a2.rk_g == 3);
    CHECK(a2.alpha1 == Rational(1, 11));
    CHECK(a2.alpha2 == Rational(2, 11));
    CHECK(*a2.gamma_cdss == Rational(1, 8));

    BoundProfile a3 = bound_profile_abelian(3);
    CHECK(a3.dim_g == 22);
    CHECK(a3.rk_g == 4);
    CHECK(*a3.gamma_cdss == Rational(1, 16));

    CHECK_THROWS_AS(bound_profile_abelian(0), std::invalid_argument);
}

TEST_CASE("bound_profile: k3 families") {
    BoundProfile k = bound_profile_k3(22);
    CHECK(k.dim_g == 232);
    CHECK(k.rk_g == 12);
    CHECK(k.alpha1 == Rational(1, 232));
    CHECK(k.alpha2 == Rational(11, 232));
    CHECK_FALSE(k.gamma_cdss.has_value());
    CHECK_THROWS_AS(bound_profile_k3(2), std::invalid_argument);
}

TEST_CASE("run_census: CM curve to 100 marks 12 supersingular primes") {
    CensusResult res = run_census(EllipticCurveSpec{-1, 0}, 100);
    const Checkpoint& final = res.report.checkpoints.back();
    CHECK(final.x == 100);
    CHECK(final.pi_ss == 12);  // good primes = 3 mod 4 in [5, 100]
    for (std::uint64_t p : res.report.ss_primes) CHECK(p % 4 == 3);
    CHECK(final.pi_ss <= final.pi_good);
    CHECK(final.pi_good <= primes_up_to(100).primes.size());
}

TEST_CASE("run_census: capacity guard") {
    CHECK_THROWS_AS(run_census(EllipticCurveSpec{1, 1}, kEllipticCensusCap + 1), std::length_error);
    CHECK_THROWS_AS(run_census(Genus2CurveSpec{{1, 0, 0, 0, 0}}, kGenus2CensusCap + 1), std::length_error);
}

TEST_CASE("run_census: checkpoint monotonicity and cross-criterion identity") {
    CensusResult res = run_census(EllipticCurveSpec{1, 1}, 3000);
    std::uint64_t prev_ss = 0;
    double prev_recip = -1.0;
    for (const Checkpoint& cp : res.report.checkpoints) {
        CHECK(cp.pi_ss >= prev_ss);
        CHECK(cp.recip_sum >= prev_recip);
        prev_ss = cp.pi_ss;
        prev_recip = cp.recip_sum;
    }
    for (const Classification& c : res.rows)
        if (c.classified()) CHECK(c.slope_ss == c.torus_ss);
}

TEST_CASE("run_census: deterministic across worker counts") {
    CensusOptions one, four;
    one.workers = 1;
    four.workers = 4;
    CensusResult a = run_census(EllipticCurveSpec{1, 1}, 5000, one);
    CensusResult b = run_census(EllipticCurveSpec{1, 1}, 5000, four);
    CHECK(emit_to_string(a.report, "csv") == emit_to_string(b.report, "csv"));
    CHECK(emit_to_string(a.report, "json") == emit_to_string(b.report, "json"));
}

TEST_CASE("run_census: genus-2 and kummer small runs agree") {
    Genus2CurveSpec C{{1, 0, 0, 0, 0}};
    CensusResult g = run_census(C, 100);
    CensusResult k = run_census(KummerSpec{C}, 100);
    REQUIRE(g.rows.size() == k.rows.size());
    for (std::size_t i = 0; i < g.rows.size(); ++i) CHECK(g.rows[i].verdict == k.rows[i].verdict);
    CHECK(g.report.ss_primes == k.report.ss_primes);
}

TEST_CASE("recip_sum_trace") {
    CensusResult res = run_census(EllipticCurveSpec{-1, 0}, 300);
    auto trace = recip_sum_trace(res.report);
    REQUIRE(trace.size() == res.report.checkpoints.size());
    double prev = -1.0;
    for (auto [x, s] : trace) {
        CHECK(s >= prev);
        prev = s;
    }
    // curve with no supersingular primes in range: all partial sums zero
    CensusResult none = run_census(EllipticCurveSpec{1, 1}, 6);
    for (auto [x, s] : recip_sum_trace(none.report)) CHECK(s == 0.0);
}

TEST_CASE("emit_report: CSV shape") {
    CensusResult res = run_census(EllipticCurveSpec{-1, 0}, 100);
    std::string csv = emit_to_string(res.report, "csv");
    CHECK(csv.rfind("x,pi_ss,pi_good,lambda_hat,bound_ratio,recip_sum\n", 0) == 0);
    CHECK(csv.find("# ss_primes: 7 11 19") != std::string::npos);
    // rows strictly increasing in x
    std::uint64_t prev = 0;
    std::size_t pos = csv.find('\n') + 1;
    while (pos < csv.size() && csv[pos] != '#') {
        std::uint64_t x = std::stoull(csv.substr(pos));
        CHECK(x > prev);
        prev = x;
        pos = csv.find('\n', pos) + 1;
    }
}

TEST_CASE("emit_report: JSON round trip") {
    CensusResult res = run_census(EllipticCurveSpec{-1, 0}, 100);
    nlohmann::json j = nlohmann::json::parse(emit_to_string(res.report, "json"));
    CHECK(j["family"] == res.report.family);
    CHECK(j["x_max"] == res.report.x_max);
    CHECK(j["alpha"].get<double>() == res.report.alpha);
    REQUIRE(j["checkpoints"].size() == res.report.checkpoints.size());
    for (std::size_t i = 0; i < res.report.checkpoints.size(); ++i) {
        const Checkpoint& cp = res.report.checkpoints[i];
        CHECK(j["checkpoints"][i]["x"].get<std::uint64_t>() == cp.x);
        CHECK(j["checkpoints"][i]["lambda_hat"].get<double>() == cp.lambda_hat);
        CHECK(j["checkpoints"][i]["bound_ratio"].get<double>() == cp.bound_ratio);
        CHECK(j["checkpoints"][i]["recip_sum"].get<double>() == cp.recip_sum);
    }
    CHECK(j["ss_primes"].get<std::vector<std::uint64_t>>() == res.report.ss_primes);
    CHECK_THROWS_AS(emit_to_string(res.report, "xml"), std::invalid_argument);
}
