#include "weylmodes/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "weylmodes/errors.hpp"

namespace weylmodes::equilibrium {

using potentials::grad_u1;
using potentials::grad_u2;
using potentials::hess_u1;
using potentials::hess_u2;
using potentials::in_alcove;
using potentials::interior_seed;
using potentials::matched_coupling;
using potentials::u1;
using potentials::u2;

namespace {

double eval(const RootSystemData& rs, const CouplingValues& g, PotentialKind kind,
            const ConfigPoint& q) {
    return kind == PotentialKind::U1 ? u1(rs, g, q) : u2(rs, g, q);
}

Vec eval_grad(const RootSystemData& rs, const CouplingValues& g, PotentialKind kind,
              const ConfigPoint& q) {
    return kind == PotentialKind::U1 ? grad_u1(rs, g, q) : grad_u2(rs, g, q);
}

Mat eval_hess(const RootSystemData& rs, const CouplingValues& g, PotentialKind kind,
              const ConfigPoint& q) {
    return kind == PotentialKind::U1 ? hess_u1(rs, g, q) : hess_u2(rs, g, q);
}

} // namespace

ConfigPoint minimize_from(const RootSystemData& rs, const CouplingValues& g, PotentialKind kind,
                          ConfigPoint start, const MinimizeOptions& opts, int* iterations_out) {
    if (!in_alcove(rs, start)) throw DomainError(rs.id.name() + ": start point not in the alcove");
    ConfigPoint q = std::move(start);
    double value = eval(rs, g, kind, q);
    for (int iter = 1; iter <= opts.max_iters; ++iter) {
        const Vec grad = eval_grad(rs, g, kind, q);
        if (norm(grad) <= opts.grad_tol * (1.0 + std::abs(value))) {
            if (iterations_out) *iterations_out = iter - 1;
            return q;
        }
        const Mat hess = eval_hess(rs, g, kind, q);
        Vec step = solve(hess, grad);
        for (double& s : step) s = -s;

        double t = 1.0;
        for (;;) {
            ConfigPoint cand{q.coords + t * step};
            if (in_alcove(rs, cand)) {
                const double cand_value = eval(rs, g, kind, cand);
                if (cand_value < value) {
                    q = std::move(cand);
                    value = cand_value;
                    break;
                }
                // Numerically stationary: accept if the gradient test will pass.
                if (cand_value == value &&
                    norm(eval_grad(rs, g, kind, cand)) <= opts.grad_tol * (1.0 + std::abs(cand_value))) {
                    if (iterations_out) *iterations_out = iter;
                    return cand;
                }
            }
            t *= opts.backtrack_factor;
            if (t * norm(step) < opts.min_step)
                throw NoConvergence(rs.id.name() + ": line search step underflow");
        }
    }
    throw NoConvergence(rs.id.name() + ": Newton iteration budget exhausted");
}

ConfigPoint minimize(const RootSystemData& rs, const CouplingValues& g, PotentialKind kind,
                     const MinimizeOptions& opts) {
    return minimize_from(rs, g, kind, interior_seed(rs), opts);
}

std::pair<Mat, Mat> hessians_at(const RootSystemData& rs, const Coupling& g,
                                const ConfigPoint& q_bar) {
    if (!in_alcove(rs, q_bar)) throw DomainError(rs.id.name() + ": point not in the alcove");
    return {hess_u1(rs, CouplingValues::from(g), q_bar),
            hess_u2(rs, matched_coupling(rs, g), q_bar)};
}

EigenDecomposition jacobi_eigen(const Mat& m) {
    const std::size_t n = m.size();
    const double scale = frobenius(m);
    if (max_abs_offdiag_asym(m) > 1e-12 * std::max(1.0, scale))
        throw NotSymmetric("jacobi_eigen: input matrix is not symmetric");

    Mat a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + m(j, i));
    Mat v = Mat::identity(n);

    auto offdiag = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < 64 && offdiag() > 1e-13 * std::max(scale, 1e-300); ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                // Smaller-root tangent keeps the rotation angle below pi/4.
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
    EigenDecomposition out;
    out.values.resize(n);
    out.vectors = Mat(n);
    for (std::size_t col = 0; col < n; ++col) {
        out.values[col] = a(order[col], order[col]);
        for (std::size_t row = 0; row < n; ++row) out.vectors(row, col) = v(row, order[col]);
    }
    return out;
}

Vec eigenvalues_sym(const Mat& m) { return jacobi_eigen(m).values; }

std::pair<double, double> fit_proportionality(const Mat& a2, const Mat& a1) {
    const Mat a1sq = a1 * a1;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a1.size(); ++i)
        for (std::size_t j = 0; j < a1.size(); ++j) {
            num += a2(i, j) * a1sq(i, j);
            den += a1sq(i, j) * a1sq(i, j);
        }
    if (den == 0.0) throw SingularInput("fit_proportionality: a1^2 vanishes");
    const double c = num / den;
    const double ref = frobenius(a2);
    const double residual = ref == 0.0 ? 0.0 : frobenius(a2 - c * a1sq) / ref;
    return {c, residual};
}

EquilibriumResult equilibrium_report(const RootSystemData& rs, const Coupling& g,
                                     const MinimizeOptions& opts, bool matched) {
    EquilibriumResult res;
    const CouplingValues exponents = CouplingValues::from(g);
    res.q_bar = minimize_from(rs, exponents, PotentialKind::U1, interior_seed(rs), opts,
                              &res.iterations);
    res.u_min = u1(rs, exponents, res.q_bar);
    res.a1 = hess_u1(rs, exponents, res.q_bar);
    const CouplingValues g2 = matched ? matched_coupling(rs, g) : exponents;
    res.a2 = hess_u2(rs, g2, res.q_bar);
    res.eigs_a1 = eigenvalues_sym(res.a1);
    res.eigs_a2 = eigenvalues_sym(res.a2);
    std::tie(res.c_fit, res.relation_residual) = fit_proportionality(res.a2, res.a1);
    return res;
}

} // namespace weylmodes::equilibrium
