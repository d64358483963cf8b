#pragma once

// Census driver: classifies every prime up to a bound, accumulates the
// supersingular counting function, density estimates, bound-ratio
// diagnostics, and the reciprocal partial sum. Work fans out over disjoint
// prime blocks; output is deterministic and independent of worker count.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "ssprime/arith.hpp"
#include "ssprime/classification.hpp"
#include "ssprime/elliptic.hpp"
#include "ssprime/genus2.hpp"
#include "ssprime/k3.hpp"

namespace ssp {

using FamilySpec = std::variant<EllipticCurveSpec, Genus2CurveSpec, KummerSpec>;

// Family-level monodromy data and the bound exponents of the asymptotic
// upper bounds on the supersingular counting function.
struct BoundProfile {
    std::string kind;
    int dim_g = 0;
    int rk_g = 0;
    Rational alpha1;              // 1 / dim G
    Rational alpha2;              // (rk G - 1) / dim G
    std::optional<Rational> gamma_cdss;  // abelian families only
};

// abelian(g): general symplectic similitude case, dim = 2g^2 + g + 1,
// rk = g + 1. k3(m): orthogonal similitude of an m-dimensional space,
// dim = m(m-1)/2 + 1, rk = floor(m/2) + 1.
inline BoundProfile bound_profile_abelian(int g) {
    if (g <= 0) throw std::invalid_argument("bound_profile: g must be positive");
    BoundProfile bp;
    bp.kind = "abelian(g=" + std::to_string(g) + ")";
    bp.dim_g = 2 * g * g + g + 1;
    bp.rk_g = g + 1;
    bp.alpha1 = Rational(1, bp.dim_g);
    bp.alpha2 = Rational(bp.rk_g - 1, bp.dim_g);
    bp.gamma_cdss = (g == 2) ? Rational(1, 8) : Rational(1, 2 * g * g - g + 1);
    return bp;
}

inline BoundProfile bound_profile_k3(int m) {
    if (m <= 2) throw std::invalid_argument("bound_profile: m must exceed 2");
    BoundProfile bp;
    bp.kind = "k3(m=" + std::to_string(m) + ")";
    bp.dim_g = m * (m - 1) / 2 + 1;
    bp.rk_g = m / 2 + 1;
    bp.alpha1 = Rational(1, bp.dim_g);
    bp.alpha2 = Rational(bp.rk_g - 1, bp.dim_g);
    return bp;
}

struct Checkpoint {
    std::uint64_t x = 0;
    std::uint64_t pi_ss = 0;
    std::uint64_t pi_good = 0;
    double lambda_hat = 0.0;   // pi_ss(x) * log(x) / x
    double bound_ratio = 0.0;  // pi_ss(x) * log(x)^{1+alpha} / x
    double recip_sum = 0.0;    // sum of 1/p over supersingular p <= x
};

struct CensusReport {
    std::string family;
    std::uint64_t x_max = 0;
    double alpha = 0.0;
    std::vector<Checkpoint> checkpoints;
    std::vector<std::uint64_t> ss_primes;
};

struct CensusResult {
    CensusReport report;
    std::vector<Classification> rows;  // sorted by prime
};

inline constexpr std::uint64_t kEllipticCensusCap = 100'000'000ull;
inline constexpr std::uint64_t kGenus2CensusCap = 20'000ull;

// Log-spaced checkpoint schedule with the endpoint pinned at x_max.
inline std::vector<std::uint64_t> default_schedule(std::uint64_t x_max, int count) {
    std::vector<std::uint64_t> xs;
    if (count < 1) count = 1;
    double lo = std::log(10.0), hi = std::log(static_cast<double>(std::max<std::uint64_t>(x_max, 10)));
    for (int i = 0; i < count; ++i) {
        double t = count == 1 ? hi : lo + (hi - lo) * i / (count - 1);
        std::uint64_t x = static_cast<std::uint64_t>(std::llround(std::exp(t)));
        if (xs.empty() || x > xs.back()) xs.push_back(x);
    }
    if (xs.empty() || xs.back() != x_max) xs.push_back(x_max);
    return xs;
}

struct CensusOptions {
    std::vector<std::uint64_t> schedule;  // empty: default log-spaced
    int checkpoint_count = 20;
    double alpha = 0.25;                  // elliptic default 1/dim GL_2 = 1/4
    unsigned workers = 1;
    std::uint64_t seed = 0x5353505249ull;
    bool alpha_set = false;
};

namespace detail {

inline Classification classify_family(const FamilySpec& fam, std::uint64_t p, std::uint64_t seed) {
    return std::visit(
        [&](const auto& f) -> Classification {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, EllipticCurveSpec>)
                return classify_ec(f, p, seed);
            else if constexpr (std::is_same_v<T, Genus2CurveSpec>)
                return classify_g2(f, p);
            else
                return classify_kummer(f, p);
        },
        fam);
}

inline std::string family_name(const FamilySpec& fam) {
    return std::visit(
        [](const auto& f) -> std::string {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, EllipticCurveSpec>) {
                return "ec(a=" + std::to_string(f.a) + ",b=" + std::to_string(f.b) + ")";
            } else if constexpr (std::is_same_v<T, Genus2CurveSpec>) {
                std::string s = "genus2(f=";
                for (int i = 0; i < 5; ++i) s += std::to_string(f.f_coeffs[static_cast<std::size_t>(i)]) + ",";
                return s + "1)";
            } else {
                std::string s = "kummer(f=";
                for (int i = 0; i < 5; ++i) s += std::to_string(f.base.f_coeffs[static_cast<std::size_t>(i)]) + ",";
                return s + "1)";
            }
        },
        fam);
}

inline double default_alpha(const FamilySpec& fam) {
    if (std::holds_alternative<EllipticCurveSpec>(fam)) return bound_profile_abelian(1).alpha1.to_double();
    // genus-2 Jacobians and their Kummer K3s both default to abelian(2);
    // the true K3 monodromy is family-dependent, hence the CLI override.
    return bound_profile_abelian(2).alpha1.to_double();
}

}  // namespace detail

inline CensusResult run_census(const FamilySpec& fam, std::uint64_t x_max, CensusOptions opt = {}) {
    std::uint64_t cap = std::holds_alternative<EllipticCurveSpec>(fam) ? kEllipticCensusCap : kGenus2CensusCap;
    if (x_max > cap) throw std::length_error("run_census: x_max exceeds family capacity (" + std::to_string(cap) + ")");
    if (!opt.alpha_set) opt.alpha = detail::default_alpha(fam);

    PrimeRange range = primes_up_to(x_max);
    const std::vector<std::uint64_t>& primes = range.primes;

    unsigned workers = std::max(1u, opt.workers);
    std::vector<Classification> rows(primes.size());
    std::vector<std::string> worker_error(workers);
    auto work = [&](unsigned wid) {
        try {
            for (std::size_t i = wid; i < primes.size(); i += workers)
                rows[i] = detail::classify_family(fam, primes[i], opt.seed);
        } catch (const std::exception& e) {
            worker_error[wid] = e.what();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    for (const std::string& err : worker_error)
        if (!err.empty()) throw std::runtime_error("run_census: " + err);

    // Cross-criterion identity: the slope verdict must equal the torus
    // verdict on every classified prime; disagreement is an implementation
    // bug and aborts the census.
    for (const Classification& c : rows) {
        if (c.classified() && c.slope_ss != c.torus_ss)
            throw std::runtime_error("run_census: slope/torus criteria disagree at p = " + std::to_string(c.p));
    }

    CensusReport report;
    report.family = detail::family_name(fam);
    report.x_max = x_max;
    report.alpha = opt.alpha;
    std::vector<std::uint64_t> schedule = opt.schedule.empty() ? default_schedule(x_max, opt.checkpoint_count) : opt.schedule;
    std::sort(schedule.begin(), schedule.end());
    if (schedule.empty() || schedule.back() < x_max) schedule.push_back(x_max);

    std::uint64_t pi_ss = 0, pi_good = 0;
    double recip = 0.0;
    std::size_t i = 0;
    for (std::uint64_t x : schedule) {
        for (; i < rows.size() && rows[i].p <= x; ++i) {
            if (!rows[i].classified()) continue;
            ++pi_good;
            if (rows[i].verdict == Verdict::supersingular) {
                ++pi_ss;
                recip += 1.0 / static_cast<double>(rows[i].p);
                report.ss_primes.push_back(rows[i].p);
            }
        }
        Checkpoint cp;
        cp.x = x;
        cp.pi_ss = pi_ss;
        cp.pi_good = pi_good;
        double lx = std::log(static_cast<double>(x));
        cp.lambda_hat = static_cast<double>(pi_ss) * lx / static_cast<double>(x);
        cp.bound_ratio = static_cast<double>(pi_ss) * std::pow(lx, 1.0 + opt.alpha) / static_cast<double>(x);
        cp.recip_sum = recip;
        report.checkpoints.push_back(cp);
    }

    return {std::move(report), std::move(rows)};
}

// Checkpointed partial sums of 1/p over supersingular primes.
inline std::vector<std::pair<std::uint64_t, double>> recip_sum_trace(const CensusReport& report) {
    std::vector<std::pair<std::uint64_t, double>> out;
    out.reserve(report.checkpoints.size());
    for (const Checkpoint& cp : report.checkpoints) out.emplace_back(cp.x, cp.recip_sum);
    return out;
}

}  // namespace ssp
