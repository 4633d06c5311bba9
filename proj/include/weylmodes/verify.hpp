#pragma once

#include <string>
#include <vector>

#include "weylmodes/equilibrium.hpp"

namespace weylmodes::verify {

using equilibrium::EquilibriumResult;
using equilibrium::MinimizeOptions;
using potentials::ConfigPoint;
using rootsys::Coupling;
using rootsys::RCoefficients;
using rootsys::RootSystemData;
using rootsys::RootSystemId;

// Frequency prediction: sorted eigenvalues of the U1 Hessian against the
// doubled Weyl-vector coefficients in both expansion conventions.  `pass`
// gates on the coroot expansion; the simple-root expansion is recorded as
// a diagnostic (it coincides with the coroot one exactly when the system
// is simply laced).
struct TheoremCheck {
    RootSystemId system;
    Coupling g;
    Vec eigs_computed;
    Vec predicted_coroot; // sorted 2 r^vee_j
    Vec predicted_root;   // sorted 2 r_j
    double max_rel_err_coroot = 0.0;
    double max_rel_err_root = 0.0;
    bool pass = false;
};

struct IdentityCheck {
    long long lhs = 0; // prod d_j (d_j - 1)
    long long rhs = 0; // z * prod r_k at unit coupling
    bool pass = false;
};

struct MacdonaldCheck {
    double lhs = 0.0; // prod sin^2 at the unit-coupling equilibrium
    double rhs = 0.0; // |W| / 2^|R| * prod (d_j/(d_j-1))^(d_j-1)
    double rel_err = 0.0;
    bool pass = false;
};

struct RelationCheck {
    double c = 0.0;
    double residual = 0.0;
    bool pass = false;
};

struct CoincidenceCheck {
    double distance = 0.0;
    bool pass = false;
};

struct GapCheck {
    RatVec linear_parts; // (E_{e_j} - E_0) - 2 (lambda_j, lambda_j)
    RatVec expected;     // 2 r^vee_j
    bool pass = false;   // exact rational equality
};

struct SpectrumQuery {
    std::vector<long long> m; // quantum numbers, one per node, all >= 0
    Coupling kappa;
};

struct SystemReport {
    RootSystemId system;
    bool errored = false;
    std::string error;
    // Static facts carried along so report rendering needs no rebuild.
    int rank = 0;
    std::vector<long long> degrees;
    long long weyl_order = 0;
    long long center_order = 0;
    long long num_pos_roots = 0;
    Vec q_bar_simple_pairings;
    TheoremCheck theorem;
    IdentityCheck identity;
    MacdonaldCheck macdonald;
    RelationCheck relation;
    CoincidenceCheck coincidence;
    GapCheck gaps;
    EquilibriumResult eq;
    RCoefficients rc;

    bool pass() const {
        return !errored && theorem.pass && identity.pass && macdonald.pass && relation.pass &&
               coincidence.pass && gaps.pass;
    }
};

struct VerificationReport {
    std::vector<SystemReport> systems;
    bool pass = true;
};

TheoremCheck check_theorem(const RootSystemData& rs, const Coupling& g, double tol,
                           const EquilibriumResult& eq, bool literal_root_basis = false);

// Exact integer identity prod_j d_j (d_j - 1) = z * prod_k r_k at g = 1.
IdentityCheck check_identity(const RootSystemData& rs);

// Closed form for the maximum of prod sin^2(q_alpha); q_bar must be the
// unit-coupling equilibrium of U1.
MacdonaldCheck check_macdonald(const RootSystemData& rs, const ConfigPoint& q_bar, double tol);

// Energy of the inverse-sine-square eigenproblem at quantum numbers m:
// E_m = 2 (lambda_m + rho(kappa), lambda_m + rho(kappa)), lambda_m in the
// fundamental-weight (coroot-dual) basis.
Rational spectrum_exact(const RootSystemData& rs, const SpectrumQuery& query);
double spectrum(const RootSystemData& rs, const SpectrumQuery& query);

// The linear parts of the first excited gaps must reproduce 2 r^vee_j
// exactly in rational arithmetic.
GapCheck check_gap_consistency(const RootSystemData& rs, const Coupling& kappa);

// Default verification list; deep additionally covers E7 and E8.
std::vector<RootSystemId> default_system_list(bool deep = false);

struct RunOptions {
    double tol = 1e-8;
    bool literal_paper_mode = false; // root-basis prediction, unmatched couplings
    MinimizeOptions minimize;
    int max_rank = rootsys::default_max_rank;
};

// Runs every check per system; failures and per-system errors are recorded,
// never aborting the batch.  Report order follows the input order.
VerificationReport run_all(const std::vector<RootSystemId>& systems, const Coupling& g,
                           const RunOptions& opts = {});

} // namespace weylmodes::verify
