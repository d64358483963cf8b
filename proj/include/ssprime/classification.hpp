#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ssprime/frobpoly.hpp"

namespace ssp {

enum class Verdict { supersingular, not_supersingular, skipped };

// Per-prime verdict with evidence from both criteria. Skips are values,
// not errors; a skipped prime carries no evidence.
struct Classification {
    std::uint64_t p = 0;
    Verdict verdict = Verdict::skipped;
    std::string skip_reason;
    bool slope_ss = false;  // all Newton slopes equal w/2
    bool torus_ss = false;  // Frobenius torus is G_m (Graeffe + cyclotomic)
    std::optional<FrobeniusData> frobenius;

    bool classified() const { return verdict != Verdict::skipped; }

    static Classification skip(std::uint64_t p, std::string reason) {
        Classification c;
        c.p = p;
        c.verdict = Verdict::skipped;
        c.skip_reason = std::move(reason);
        return c;
    }
    static Classification from_frobenius(FrobeniusData f) {
        Classification c;
        c.p = f.p;
        NewtonProfile prof = newton_slopes(f);
        c.slope_ss = is_slope_supersingular(prof, f.w);
        c.torus_ss = torus_is_Gm(f);
        c.verdict = c.slope_ss ? Verdict::supersingular : Verdict::not_supersingular;
        c.frobenius = std::move(f);
        return c;
    }
};

}  // namespace ssp
