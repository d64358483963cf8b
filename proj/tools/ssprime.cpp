// ssprime: supersingular-prime censuses and single-prime classification
// for elliptic curves, genus-2 Jacobians, and Kummer K3 surfaces.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ssprime/census.hpp"
#include "ssprime/elliptic.hpp"
#include "ssprime/genus2.hpp"
#include "ssprime/k3.hpp"
#include "ssprime/report_io.hpp"

namespace {

struct CommonOpts {
    std::string out;
    std::string format = "csv";
    unsigned workers = 1;
    int checkpoints = 20;
    double alpha = 0.0;
    bool alpha_set = false;
    std::uint64_t seed = 0x5353505249ull;
};

void add_common(CLI::App* cmd, CommonOpts* c) {
    cmd->add_option("--out", c->out, "Output file (default: stdout)");
    cmd->add_option("--format", c->format, "Output format: csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--workers", c->workers, "Parallel worker count")->check(CLI::PositiveNumber);
    cmd->add_option("--checkpoints", c->checkpoints, "Number of log-spaced checkpoints")->check(CLI::PositiveNumber);
    cmd->add_option("--alpha", c->alpha, "Bound-ratio exponent override")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", c->seed, "Seed for randomized point selection");
}

ssp::CensusOptions census_options(const CLI::App* cmd, const CommonOpts& c) {
    ssp::CensusOptions opt;
    opt.checkpoint_count = c.checkpoints;
    opt.workers = c.workers;
    opt.seed = c.seed;
    if (cmd->count("--alpha")) {
        opt.alpha = c.alpha;
        opt.alpha_set = true;
    }
    return opt;
}

ssp::Genus2CurveSpec parse_quintic(const std::string& csv) {
    ssp::Genus2CurveSpec C;
    std::stringstream ss(csv);
    std::string tok;
    int i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i >= 5) throw CLI::ValidationError("--f", "expected exactly 5 coefficients c0,...,c4");
        C.f_coeffs[static_cast<std::size_t>(i++)] = std::stoll(tok);
    }
    if (i != 5) throw CLI::ValidationError("--f", "expected exactly 5 coefficients c0,...,c4");
    C.validate();
    return C;
}

int run_family_census(const ssp::FamilySpec& fam, std::uint64_t x_max, const CLI::App* cmd, const CommonOpts& c) {
    ssp::CensusResult res = ssp::run_census(fam, x_max, census_options(cmd, c));
    ssp::emit_report(res.report, c.format, c.out);
    return 0;
}

void print_classification(const ssp::Classification& cls) {
    std::printf("p = %llu\n", static_cast<unsigned long long>(cls.p));
    if (!cls.classified()) {
        std::printf("verdict: skipped (%s)\n", cls.skip_reason.c_str());
        return;
    }
    const ssp::FrobeniusData& f = *cls.frobenius;
    std::printf("Phi_p(T) = %s   (weight %d)\n", f.phi.str().c_str(), f.w);
    ssp::NewtonProfile prof = ssp::newton_slopes(f);
    std::printf("newton slopes:");
    for (const auto& [s, m] : prof.entries) std::printf(" %s x%d", s.str().c_str(), m);
    std::printf("\nslope criterion:  %s\n", cls.slope_ss ? "supersingular" : "not supersingular");
    std::printf("torus criterion:  %s\n", cls.torus_ss ? "supersingular" : "not supersingular");
    std::printf("verdict: %s\n", cls.verdict == ssp::Verdict::supersingular ? "supersingular" : "not supersingular");
}

void print_bound_profile(const ssp::BoundProfile& bp) {
    std::printf("family    %s\n", bp.kind.c_str());
    std::printf("dimG      %d\n", bp.dim_g);
    std::printf("rkG       %d\n", bp.rk_g);
    std::printf("alpha1    %s\n", bp.alpha1.str().c_str());
    std::printf("alpha2    %s\n", bp.alpha2.str().c_str());
    if (bp.gamma_cdss) std::printf("gamma     %s\n", bp.gamma_cdss->str().c_str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"supersingular prime classification and censuses"};
    app.require_subcommand(1);

    // ec census
    auto* ec = app.add_subcommand("ec", "Elliptic-curve census: y^2 = x^3 + a x + b up to xmax");
    std::int64_t ec_a = 0, ec_b = 0;
    std::uint64_t ec_xmax = 1'000'000;
    CommonOpts ec_c;
    ec->add_option("--a", ec_a, "Coefficient a")->required();
    ec->add_option("--b", ec_b, "Coefficient b")->required();
    ec->add_option("--xmax", ec_xmax, "Census bound");
    add_common(ec, &ec_c);

    // genus2 census
    auto* g2 = app.add_subcommand("genus2", "Genus-2 census: y^2 = x^5 + c4 x^4 + ... + c0 up to pmax");
    std::string g2_f;
    std::uint64_t g2_pmax = 2000;
    CommonOpts g2_c;
    g2->add_option("--f", g2_f, "Coefficients c0,c1,c2,c3,c4 (monic quintic, ascending)")->required();
    g2->add_option("--pmax", g2_pmax, "Census bound");
    add_common(g2, &g2_c);

    // kummer census
    auto* ku = app.add_subcommand("kummer", "Kummer K3 census over the Jacobian of y^2 = f(x)");
    std::string ku_f;
    std::uint64_t ku_pmax = 2000;
    CommonOpts ku_c;
    ku->add_option("--f", ku_f, "Base-curve coefficients c0,c1,c2,c3,c4")->required();
    ku->add_option("--pmax", ku_pmax, "Census bound");
    add_common(ku, &ku_c);

    // classify one prime
    auto* cl = app.add_subcommand("classify", "Classify a single prime for one family");
    cl->require_subcommand(1);
    auto* cl_ec = cl->add_subcommand("ec", "Elliptic curve");
    std::int64_t cle_a = 0, cle_b = 0;
    std::uint64_t cle_p = 0, cle_seed = 0x5353505249ull;
    cl_ec->add_option("--a", cle_a)->required();
    cl_ec->add_option("--b", cle_b)->required();
    cl_ec->add_option("--p", cle_p, "Prime to classify")->required();
    cl_ec->add_option("--seed", cle_seed);
    auto* cl_g2 = cl->add_subcommand("genus2", "Genus-2 Jacobian");
    std::string clg_f;
    std::uint64_t clg_p = 0;
    cl_g2->add_option("--f", clg_f)->required();
    cl_g2->add_option("--p", clg_p, "Prime to classify")->required();
    auto* cl_ku = cl->add_subcommand("kummer", "Kummer K3 surface");
    std::string clk_f;
    std::uint64_t clk_p = 0;
    cl_ku->add_option("--f", clk_f)->required();
    cl_ku->add_option("--p", clk_p, "Prime to classify")->required();

    // bound tables
    auto* bd = app.add_subcommand("bounds", "Print the bound-profile table for a family kind");
    bd->require_subcommand(1);
    auto* bd_ab = bd->add_subcommand("abelian", "Abelian variety of dimension g");
    int bd_g = 1;
    bd_ab->add_option("--g", bd_g, "Dimension g")->required();
    auto* bd_k3 = bd->add_subcommand("k3", "K3 with ambient orthogonal size m");
    int bd_m = 22;
    bd_k3->add_option("--m", bd_m, "Orthogonal space dimension m")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (ec->parsed()) {
            ssp::EllipticCurveSpec E{ec_a, ec_b};
            E.validate();
            return run_family_census(E, ec_xmax, ec, ec_c);
        }
        if (g2->parsed()) return run_family_census(parse_quintic(g2_f), g2_pmax, g2, g2_c);
        if (ku->parsed()) return run_family_census(ssp::KummerSpec{parse_quintic(ku_f)}, ku_pmax, ku, ku_c);
        if (cl->parsed()) {
            if (cl_ec->parsed()) {
                if (!ssp::is_prime_u64(cle_p)) throw std::invalid_argument("--p must be prime");
                ssp::EllipticCurveSpec E{cle_a, cle_b};
                E.validate();
                print_classification(ssp::classify_ec(E, cle_p, cle_seed));
            } else if (cl_g2->parsed()) {
                if (!ssp::is_prime_u64(clg_p)) throw std::invalid_argument("--p must be prime");
                print_classification(ssp::classify_g2(parse_quintic(clg_f), clg_p));
            } else {
                if (!ssp::is_prime_u64(clk_p)) throw std::invalid_argument("--p must be prime");
                print_classification(ssp::classify_kummer(ssp::KummerSpec{parse_quintic(clk_f)}, clk_p));
            }
            return 0;
        }
        if (bd->parsed()) {
            print_bound_profile(bd_ab->parsed() ? ssp::bound_profile_abelian(bd_g) : ssp::bound_profile_k3(bd_m));
            return 0;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
