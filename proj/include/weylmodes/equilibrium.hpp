#pragma once

#include "weylmodes/potentials.hpp"

namespace weylmodes::equilibrium {

using potentials::ConfigPoint;
using potentials::CouplingValues;
using potentials::PotentialKind;
using rootsys::Coupling;
using rootsys::RootSystemData;

struct MinimizeOptions {
    double grad_tol = 1e-12;
    int max_iters = 200;
    double backtrack_factor = 0.5;
    double min_step = 1e-16;
};

struct EquilibriumResult {
    ConfigPoint q_bar;
    double u_min = 0.0;
    Mat a1;                // Hessian of U1 at the minimum
    Mat a2;                // Hessian of U2 at the matched coupling
    Vec eigs_a1;           // ascending
    Vec eigs_a2;           // ascending
    double c_fit = 0.0;    // least-squares scalar in a2 ~ c * a1^2
    double relation_residual = 0.0;
    int iterations = 0;
};

// Damped Newton descent of U1 or U2 from interior_seed (or the given
// start): full Newton step, halved until the candidate stays in the
// alcove and strictly decreases the potential.  Throws NoConvergence.
ConfigPoint minimize(const RootSystemData& rs, const CouplingValues& g, PotentialKind kind,
                     const MinimizeOptions& opts = {});
ConfigPoint minimize_from(const RootSystemData& rs, const CouplingValues& g, PotentialKind kind,
                          ConfigPoint start, const MinimizeOptions& opts = {},
                          int* iterations_out = nullptr);

// a1 = hess U1 at g (exponents), a2 = hess U2 at the matched coupling.
std::pair<Mat, Mat> hessians_at(const RootSystemData& rs, const Coupling& g,
                                const ConfigPoint& q_bar);

// Cyclic Jacobi rotations; sweeps until the off-diagonal Frobenius norm
// drops below 1e-13 * ||m||.  Throws NotSymmetric if the input is further
// than 1e-12 from symmetric.
Vec eigenvalues_sym(const Mat& m);

// Same iteration, also accumulating the orthogonal factor: columns of
// `vectors` are eigenvectors matching the ascending `values`.
struct EigenDecomposition {
    Vec values;
    Mat vectors;
};
EigenDecomposition jacobi_eigen(const Mat& m);

// Least-squares scalar c minimizing ||a2 - c a1^2||_F and the relative
// residual of the fit.  Throws SingularInput when a1^2 vanishes.
std::pair<double, double> fit_proportionality(const Mat& a2, const Mat& a1);

// Full pipeline: minimize U1 with exponents g, evaluate both Hessians,
// diagonalize, fit the proportionality constant.  When `matched` is false
// the U2 Hessian is taken at the raw coupling g instead (diagnostic mode).
EquilibriumResult equilibrium_report(const RootSystemData& rs, const Coupling& g,
                                     const MinimizeOptions& opts = {}, bool matched = true);

} // namespace weylmodes::equilibrium
