#pragma once

// Kummer K3 surfaces of genus-2 Jacobians. H^2 of the K3 splits as the
// wedge square of the Jacobian's H^1 plus 16 exceptional classes, so its
// 22 Newton slopes are the pairwise sums of the base slopes together with
// slope 1 with multiplicity 16 (each exceptional eigenvalue is p times a
// root of unity).

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "ssprime/classification.hpp"
#include "ssprime/genus2.hpp"

namespace ssp {

struct KummerSpec {
    Genus2CurveSpec base;
    void validate() const { base.validate(); }
};

// Weight-2 Newton profile of H^2 from an already-assembled base quartic.
inline NewtonProfile kummer_profile_from_base(const FrobeniusData& base_phi) {
    FrobeniusData wedge = FrobeniusData::make(base_phi.p, 2, wedge_square(base_phi));
    NewtonProfile prof = newton_slopes(wedge);
    prof.entries.emplace_back(Rational(1), 16);
    std::sort(prof.entries.begin(), prof.entries.end());
    // merge adjacent equal slopes
    NewtonProfile merged;
    for (const auto& [s, m] : prof.entries) {
        if (!merged.entries.empty() && merged.entries.back().first == s)
            merged.entries.back().second += m;
        else
            merged.entries.emplace_back(s, m);
    }
    return merged;
}

inline NewtonProfile kummer_newton_profile(const KummerSpec& K, std::uint64_t p) {
    if (reduce_g2(K.base, p) != Reduction::good) throw std::invalid_argument("kummer_newton_profile: bad reduction");
    return kummer_profile_from_base(frobenius_g2(K.base, p));
}

// Supersingular iff all 22 slopes equal w/2 = 1; by construction this
// coincides with the base Jacobian's verdict.
inline Classification classify_kummer(const KummerSpec& K, std::uint64_t p) {
    if (reduce_g2(K.base, p) != Reduction::good)
        return Classification::skip(p, p == 2 ? "policy: p = 2" : "bad reduction: p | disc");
    FrobeniusData base_phi = frobenius_g2(K.base, p);
    NewtonProfile prof = kummer_profile_from_base(base_phi);

    Classification c;
    c.p = p;
    c.slope_ss = is_slope_supersingular(prof, 2);
    FrobeniusData wedge = FrobeniusData::make(p, 2, wedge_square(base_phi));
    c.torus_ss = torus_is_Gm(wedge);  // exceptional classes are roots of unity times p
    c.verdict = c.slope_ss ? Verdict::supersingular : Verdict::not_supersingular;
    c.frobenius = std::move(wedge);
    return c;
}

}  // namespace ssp
