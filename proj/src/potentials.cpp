#include "weylmodes/potentials.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "weylmodes/errors.hpp"

namespace weylmodes::potentials {

namespace {

constexpr double pi = 3.14159265358979323846;

double checked_pairing(const RootSystemData& rs, const ConfigPoint& q, const RootVec& alpha) {
    const double qa = dot(q.coords, alpha.coords);
    if (!(qa > 0.0 && qa < pi))
        throw DomainError(rs.id.name() + ": pairing " + std::to_string(qa) + " outside (0, pi)");
    return qa;
}

} // namespace

double pairing(const ConfigPoint& q, const RootVec& alpha) { return dot(q.coords, alpha.coords); }

bool in_alcove(const RootSystemData& rs, const ConfigPoint& q) {
    for (const auto& a : rs.simple_roots)
        if (!(pairing(q, a) > 0.0)) return false;
    return pairing(q, rs.highest_root) < pi;
}

ConfigPoint interior_seed(const RootSystemData& rs) {
    RatVec w(rs.rank, Rational(0));
    for (int j = 0; j < rs.rank; ++j)
        for (int k = 0; k < rs.rank; ++k) w[k] += rs.dual_basis_root[j][k];
    const long long h = rs.highest_root.height(); // (w, delta) since (w, alpha_j) = 1
    ConfigPoint q{rs.coords_of(w)};
    const double s = pi / (2.0 * double(h));
    for (double& c : q.coords) c *= s;
    return q;
}

double u1(const RootSystemData& rs, const CouplingValues& g, const ConfigPoint& q) {
    double v = 0.0;
    for (const auto& a : rs.positive_roots) {
        const double ga = g.value_for(a.length_class);
        if (ga == 0.0) continue;
        v -= ga * std::log(std::sin(checked_pairing(rs, q, a)));
    }
    return v;
}

Vec grad_u1(const RootSystemData& rs, const CouplingValues& g, const ConfigPoint& q) {
    Vec grad(rs.rank, 0.0);
    for (const auto& a : rs.positive_roots) {
        const double ga = g.value_for(a.length_class);
        if (ga == 0.0) continue;
        const double qa = checked_pairing(rs, q, a);
        const double w = -ga / std::tan(qa);
        for (int k = 0; k < rs.rank; ++k) grad[k] += w * a.coords[k];
    }
    return grad;
}

Mat hess_u1(const RootSystemData& rs, const CouplingValues& g, const ConfigPoint& q) {
    Mat h(rs.rank);
    for (const auto& a : rs.positive_roots) {
        const double ga = g.value_for(a.length_class);
        if (ga == 0.0) continue;
        const double s = std::sin(checked_pairing(rs, q, a));
        add_outer(h, a.coords, ga / (s * s));
    }
    return h;
}

double u2(const RootSystemData& rs, const CouplingValues& g, const ConfigPoint& q) {
    double v = 0.0;
    for (const auto& a : rs.positive_roots) {
        const double ga = g.value_for(a.length_class);
        if (ga == 0.0) continue;
        const double s = std::sin(checked_pairing(rs, q, a));
        v += ga * ga / (s * s);
    }
    return v;
}

Vec grad_u2(const RootSystemData& rs, const CouplingValues& g, const ConfigPoint& q) {
    Vec grad(rs.rank, 0.0);
    for (const auto& a : rs.positive_roots) {
        const double ga = g.value_for(a.length_class);
        if (ga == 0.0) continue;
        const double qa = checked_pairing(rs, q, a);
        const double s = std::sin(qa);
        const double w = -2.0 * ga * ga * std::cos(qa) / (s * s * s);
        for (int k = 0; k < rs.rank; ++k) grad[k] += w * a.coords[k];
    }
    return grad;
}

Mat hess_u2(const RootSystemData& rs, const CouplingValues& g, const ConfigPoint& q) {
    Mat h(rs.rank);
    for (const auto& a : rs.positive_roots) {
        const double ga = g.value_for(a.length_class);
        if (ga == 0.0) continue;
        const double qa = checked_pairing(rs, q, a);
        const double s2 = std::sin(qa) * std::sin(qa);
        const double c2 = std::cos(qa) * std::cos(qa);
        add_outer(h, a.coords, ga * ga * (6.0 * c2 / (s2 * s2) + 2.0 / s2));
    }
    return h;
}

double psi0_log(const RootSystemData& rs, const CouplingValues& kappa, const ConfigPoint& q) {
    double v = 0.0;
    for (const auto& a : rs.positive_roots) {
        const double ka = kappa.value_for(a.length_class);
        if (ka == 0.0) continue;
        v += ka * std::log(std::sin(checked_pairing(rs, q, a)));
    }
    return v;
}

CouplingValues matched_coupling(const RootSystemData& rs, const CouplingValues& kappa) {
    Rational sq_long(2), sq_short(2);
    for (const auto& a : rs.positive_roots)
        if (a.length_class == LengthClass::Short) sq_short = a.sq_length;
    return {kappa.g_long * std::sqrt(sq_long.to_double() / 2.0),
            kappa.g_short * std::sqrt(sq_short.to_double() / 2.0)};
}

CouplingValues matched_coupling(const RootSystemData& rs, const Coupling& kappa) {
    return matched_coupling(rs, CouplingValues::from(kappa));
}

ConfigPoint sample_interior(const RootSystemData& rs, std::mt19937_64& rng, double margin) {
    // Bounding box of the alcove vertices 0 and pi * lhat_j / n_j(delta).
    const int r = rs.rank;
    Vec lo(r, 0.0), hi(r, 0.0);
    for (int j = 0; j < r; ++j) {
        const Vec v = rs.coords_of(rs.dual_basis_root[j]);
        const double s = pi / double(rs.highest_root.simple_coeffs[j]);
        for (int k = 0; k < r; ++k) {
            lo[k] = std::min(lo[k], s * v[k]);
            hi[k] = std::max(hi[k], s * v[k]);
        }
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (;;) {
        ConfigPoint q;
        q.coords.resize(r);
        for (int k = 0; k < r; ++k) q.coords[k] = lo[k] + (hi[k] - lo[k]) * unit(rng);
        bool ok = true;
        for (const auto& a : rs.simple_roots)
            if (!(pairing(q, a) > margin)) {
                ok = false;
                break;
            }
        if (ok && pairing(q, rs.highest_root) < pi - margin) return q;
    }
}

std::uint64_t sampling_seed() {
    if (const char* env = std::getenv("WEYLMODES_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return 0x5eed00d5u;
}

} // namespace weylmodes::potentials
