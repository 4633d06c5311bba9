#pragma once

#include <cstdint>
#include <random>

#include "weylmodes/linalg.hpp"
#include "weylmodes/root_system.hpp"

namespace weylmodes::potentials {

using rootsys::Coupling;
using rootsys::LengthClass;
using rootsys::RootSystemData;
using rootsys::RootVec;

struct ConfigPoint {
    Vec coords;
};

enum class PotentialKind { U1, U2 };

// Per-length-class coupling values as used by the potential evaluations.
// Unlike rootsys::Coupling these are plain doubles: the matched classical
// coupling carries a sqrt((alpha,alpha)/2) factor and is irrational for
// the non-simply-laced systems.
struct CouplingValues {
    double g_long = 1.0;
    double g_short = 1.0;

    static CouplingValues from(const Coupling& g) {
        return {g.g_long.to_double(), g.g_short.to_double()};
    }
    double value_for(LengthClass c) const { return c == LengthClass::Long ? g_long : g_short; }
};

// q_alpha = (alpha, q), the Euclidean pairing.
double pairing(const ConfigPoint& q, const RootVec& alpha);

// Strict interior of the Weyl alcove: (q, alpha_j) > 0 and (q, delta) < pi.
bool in_alcove(const RootSystemData& rs, const ConfigPoint& q);

// A guaranteed interior point: (pi / 2h) * sum_j lhat_j, where h is the
// height of the highest root.  Pairs to pi/(2h) with every simple root and
// to pi/2 with the highest root.
ConfigPoint interior_seed(const RootSystemData& rs);

// U1(q) = -sum_{alpha>0} g_alpha log sin(q_alpha), with analytic gradient
// and Hessian.  Throws DomainError if any q_alpha leaves (0, pi).
double u1(const RootSystemData& rs, const CouplingValues& g, const ConfigPoint& q);
Vec grad_u1(const RootSystemData& rs, const CouplingValues& g, const ConfigPoint& q);
Mat hess_u1(const RootSystemData& rs, const CouplingValues& g, const ConfigPoint& q);

// U2(q) = sum_{alpha>0} g_alpha^2 sin^-2(q_alpha), same conventions.
double u2(const RootSystemData& rs, const CouplingValues& g, const ConfigPoint& q);
Vec grad_u2(const RootSystemData& rs, const CouplingValues& g, const ConfigPoint& q);
Mat hess_u2(const RootSystemData& rs, const CouplingValues& g, const ConfigPoint& q);

// log Psi_0 = sum_{alpha>0} kappa_alpha log sin(q_alpha); identically -u1.
double psi0_log(const RootSystemData& rs, const CouplingValues& kappa, const ConfigPoint& q);

// Classical coupling matched to the exponents kappa, h_alpha =
// kappa_alpha * sqrt((alpha,alpha)/2).  Under this map U2(h) equals
// 1/2 |grad(-U1(kappa))|^2 plus a constant, so both potentials share
// their minimum.  Reduces to the identity for simply-laced systems.
CouplingValues matched_coupling(const RootSystemData& rs, const CouplingValues& kappa);
CouplingValues matched_coupling(const RootSystemData& rs, const Coupling& kappa);

// Uniform rejection sampling inside the alcove: draw from the bounding box
// of the alcove vertices, keep in_alcove hits.  An optional wall margin
// shrinks the accepted region for derivative checks that step around q.
ConfigPoint sample_interior(const RootSystemData& rs, std::mt19937_64& rng, double margin = 0.0);

// Seed for reproducible sampling; WEYLMODES_SEED overrides the default.
std::uint64_t sampling_seed();

} // namespace weylmodes::potentials
