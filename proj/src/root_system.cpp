#include "weylmodes/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <queue>
#include <set>

#include "weylmodes/errors.hpp"

namespace weylmodes::rootsys {

namespace {

// Everything beyond this rank would overflow the exact integer identities;
// the configurable ceiling (default_max_rank) sits below it anyway.
constexpr int hard_rank_cap = 12;

void check_rank(RootSystemId id, int max_rank) {
    const int r = id.rank;
    bool ok = false;
    switch (id.family) {
        case Family::A: ok = r >= 1; break;
        case Family::B: ok = r >= 2; break;
        case Family::C: ok = r >= 2; break;
        case Family::D: ok = r >= 4; break;
        case Family::E: ok = r >= 6 && r <= 8; break;
        case Family::F: ok = r == 4; break;
        case Family::G: ok = r == 2; break;
    }
    if (!ok) throw UnsupportedRank("unsupported rank for family " +
                                   std::string(1, family_letter(id.family)) + ": " +
                                   std::to_string(r));
    // The ceiling applies to the classical families; E/F/G are bounded by
    // their own definitions.
    const bool classical = id.family == Family::A || id.family == Family::B ||
                           id.family == Family::C || id.family == Family::D;
    const int cap = std::min(std::max(max_rank, 8), hard_rank_cap);
    if (classical && r > cap)
        throw UnsupportedRank(id.name() + ": rank exceeds ceiling " + std::to_string(cap));
}

std::vector<std::vector<long long>> cartan_matrix(RootSystemId id) {
    const int r = id.rank;
    std::vector<std::vector<long long>> c(r, std::vector<long long>(r, 0));
    for (int i = 0; i < r; ++i) c[i][i] = 2;
    auto bond = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
    switch (id.family) {
        case Family::A:
            for (int i = 0; i + 1 < r; ++i) bond(i, i + 1);
            break;
        case Family::B: // alpha_r short
            for (int i = 0; i + 1 < r; ++i) bond(i, i + 1);
            c[r - 2][r - 1] = -2;
            c[r - 1][r - 2] = -1;
            break;
        case Family::C: // alpha_r long
            for (int i = 0; i + 1 < r; ++i) bond(i, i + 1);
            c[r - 2][r - 1] = -1;
            c[r - 1][r - 2] = -2;
            break;
        case Family::D:
            for (int i = 0; i + 1 < r - 1; ++i) bond(i, i + 1);
            bond(r - 3, r - 1);
            break;
        case Family::E: {
            // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 hangs off node 4.
            const int chain[] = {0, 2, 3, 4, 5, 6, 7};
            for (int i = 0; i + 1 < r - 1; ++i) bond(chain[i], chain[i + 1]);
            bond(1, 3);
            break;
        }
        case Family::F: // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            bond(0, 1);
            bond(1, 2);
            bond(2, 3);
            c[1][2] = -2;
            c[2][1] = -1;
            break;
        case Family::G: // alpha_1 short, alpha_2 long
            c[0][1] = -1;
            c[1][0] = -3;
            break;
    }
    return c;
}

// Squared lengths of the simple roots, recovered from the Cartan matrix by
// walking the Dynkin graph (C[j][k] L_k = C[k][j] L_j) and rescaling so the
// long roots have squared length 2.
RatVec simple_sq_lengths(const std::vector<std::vector<long long>>& cartan) {
    const std::size_t r = cartan.size();
    RatVec len(r, Rational(0));
    len[0] = Rational(1);
    std::queue<std::size_t> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
        const std::size_t j = bfs.front();
        bfs.pop();
        for (std::size_t k = 0; k < r; ++k) {
            if (k == j || cartan[j][k] == 0 || len[k] != Rational(0)) continue;
            len[k] = len[j] * Rational(cartan[k][j]) / Rational(cartan[j][k]);
            bfs.push(k);
        }
    }
    Rational longest(0);
    for (const auto& l : len) {
        if (l == Rational(0)) throw InternalClosureError("Dynkin graph not connected");
        longest = std::max(longest, l);
    }
    const Rational scale = Rational(2) / longest;
    for (auto& l : len) l *= scale;
    return len;
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Order of the Weyl group from the classical closed forms, used to
// cross-check the degree tables.
long long weyl_order_closed_form(RootSystemId id) {
    const int l = id.rank;
    switch (id.family) {
        case Family::A: return factorial(l + 1);
        case Family::B:
        case Family::C: return (1LL << l) * factorial(l);
        case Family::D: return (1LL << (l - 1)) * factorial(l);
        case Family::E: return l == 6 ? 51840LL : (l == 7 ? 2903040LL : 696729600LL);
        case Family::F: return 1152;
        case Family::G: return 12;
    }
    return 0;
}

} // namespace

char family_letter(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
        case Family::E: return 'E';
        case Family::F: return 'F';
        case Family::G: return 'G';
    }
    return '?';
}

std::optional<RootSystemId> parse_system_id(const std::string& spec) {
    if (spec.size() < 2) return std::nullopt;
    const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(spec[0])));
    if (f < 'A' || f > 'G') return std::nullopt;
    int rank = 0;
    for (std::size_t i = 1; i < spec.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(spec[i]))) return std::nullopt;
        rank = rank * 10 + (spec[i] - '0');
        if (rank > 99) return std::nullopt;
    }
    if (rank == 0) return std::nullopt;
    return RootSystemId{static_cast<Family>(f - 'A'), rank};
}

InvariantsTable invariants_table(RootSystemId id, int max_rank) {
    check_rank(id, max_rank);
    const int l = id.rank;
    std::vector<long long> d;
    long long z = 0;
    switch (id.family) {
        case Family::A:
            for (int j = 2; j <= l + 1; ++j) d.push_back(j);
            z = l + 1;
            break;
        case Family::B:
        case Family::C:
            for (int j = 1; j <= l; ++j) d.push_back(2 * j);
            z = 2;
            break;
        case Family::D:
            for (int j = 1; j <= l - 1; ++j) d.push_back(2 * j);
            d.push_back(l);
            std::sort(d.begin(), d.end());
            z = 4;
            break;
        case Family::E:
            if (l == 6) d = {2, 5, 6, 8, 9, 12};
            else if (l == 7) d = {2, 6, 8, 10, 12, 14, 18};
            else d = {2, 8, 12, 14, 18, 20, 24, 30};
            z = (l == 6) ? 3 : (l == 7 ? 2 : 1);
            break;
        case Family::F:
            d = {2, 6, 8, 12};
            z = 1;
            break;
        case Family::G:
            d = {2, 6};
            z = 1;
            break;
    }
    long long prod = 1;
    for (long long dj : d) prod *= dj;
    if (prod != weyl_order_closed_form(id))
        throw InternalClosureError(id.name() + ": degree table disagrees with |W|");
    return {d, prod, z};
}

Vec RootSystemData::coords_of(const RatVec& root_basis) const {
    Vec out(rank, 0.0);
    for (int j = 0; j < rank; ++j) {
        const double c = root_basis[j].to_double();
        if (c == 0.0) continue;
        for (int k = 0; k < rank; ++k) out[k] += c * simple_roots[j].coords[k];
    }
    return out;
}

Rational RootSystemData::pairing_exact(const RatVec& x, const RatVec& y) const {
    return rat_bilinear(x, gram, y);
}

RatVec coroot(const RootVec& alpha) {
    RatVec out;
    out.reserve(alpha.simple_coeffs.size());
    const Rational f = Rational(2) / alpha.sq_length;
    for (long long c : alpha.simple_coeffs) out.push_back(Rational(c) * f);
    return out;
}

RatVec reflect(const RootSystemData& rs, const RatVec& v, const RootVec& alpha) {
    RatVec a(alpha.simple_coeffs.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = Rational(alpha.simple_coeffs[i]);
    const Rational t = Rational(2) * rs.pairing_exact(v, a) / alpha.sq_length;
    RatVec out = v;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= t * a[i];
    return out;
}

Vec reflect(const Vec& v, const RootVec& alpha) {
    const double t = 2.0 * dot(v, alpha.coords) / alpha.sq_length.to_double();
    Vec out = v;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= t * alpha.coords[i];
    return out;
}

RootSystemData build_root_system(RootSystemId id, Normalization normalization, int max_rank) {
    (void)normalization; // single supported convention: long roots squared length 2
    check_rank(id, max_rank);
    const int r = id.rank;

    RootSystemData rs;
    rs.id = id;
    rs.rank = r;
    rs.cartan = cartan_matrix(id);

    const RatVec len = simple_sq_lengths(rs.cartan);
    rs.gram.assign(r, RatVec(r, Rational(0)));
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) rs.gram[j][k] = Rational(rs.cartan[j][k]) * len[k] / Rational(2);
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k)
            if (rs.gram[j][k] != rs.gram[k][j])
                throw InternalClosureError(id.name() + ": Cartan table yields asymmetric Gram matrix");

    const InvariantsTable inv = invariants_table(id, max_rank);
    rs.degrees = inv.degrees;
    rs.weyl_order = inv.weyl_order;
    rs.center_order = inv.center_order;

    // Positive roots: breadth-first closure of the simple roots under the
    // simple reflections s_j(n) = n - (sum_k n_k C[k][j]) e_j, keeping the
    // images with nonnegative coefficients.
    std::set<std::vector<long long>> seen;
    std::queue<std::vector<long long>> work;
    for (int j = 0; j < r; ++j) {
        std::vector<long long> e(r, 0);
        e[j] = 1;
        seen.insert(e);
        work.push(e);
    }
    long long expected = 0;
    for (long long dj : rs.degrees) expected += dj - 1;
    while (!work.empty()) {
        const std::vector<long long> n = work.front();
        work.pop();
        for (int j = 0; j < r; ++j) {
            long long pairing = 0;
            for (int k = 0; k < r; ++k) pairing += n[k] * rs.cartan[k][j];
            std::vector<long long> m = n;
            m[j] -= pairing;
            if (m[j] < 0) continue; // left the positive cone
            if (seen.insert(m).second) work.push(m);
        }
        if ((long long)seen.size() > expected)
            throw InternalClosureError(id.name() + ": closure exceeded expected root count");
    }
    if ((long long)seen.size() != expected)
        throw InternalClosureError(id.name() + ": closure produced " +
                                   std::to_string(seen.size()) + " roots, expected " +
                                   std::to_string(expected));

    std::vector<std::vector<long long>> pos(seen.begin(), seen.end());
    std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
        long long ha = 0, hb = 0;
        for (long long v : a) ha += v;
        for (long long v : b) hb += v;
        if (ha != hb) return ha < hb;
        return a < b;
    });

    // Euclidean realization from the triangular factor of the Gram matrix.
    Mat gram_f(r);
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) gram_f(j, k) = rs.gram[j][k].to_double();
    rs.embed = cholesky(gram_f);
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) {
            double s = 0.0;
            for (int m = 0; m < r; ++m) s += rs.embed(j, m) * rs.embed(k, m);
            if (std::abs(s - gram_f(j, k)) > 1e-12)
                throw InternalClosureError(id.name() + ": embedding does not reproduce Gram matrix");
        }

    auto make_root = [&](const std::vector<long long>& n) {
        RootVec v;
        v.simple_coeffs = n;
        RatVec nr(r);
        for (int i = 0; i < r; ++i) nr[i] = Rational(n[i]);
        v.sq_length = rat_bilinear(nr, rs.gram, nr);
        v.length_class = (v.sq_length == Rational(2)) ? LengthClass::Long : LengthClass::Short;
        v.coords.assign(r, 0.0);
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) v.coords[k] += double(n[j]) * rs.embed(j, k);
        if (std::abs(dot(v.coords, v.coords) - v.sq_length.to_double()) > 1e-12)
            throw InternalClosureError(id.name() + ": embedded root length mismatch");
        return v;
    };

    rs.simple_roots.reserve(r);
    for (int j = 0; j < r; ++j) {
        std::vector<long long> e(r, 0);
        e[j] = 1;
        rs.simple_roots.push_back(make_root(e));
    }
    rs.positive_roots.reserve(pos.size());
    for (const auto& n : pos) rs.positive_roots.push_back(make_root(n));
    rs.num_roots = 2 * (long long)rs.positive_roots.size();

    // Only two length values may occur, and the longest must be 2 exactly.
    std::set<Rational, std::less<Rational>> lengths;
    for (const auto& root : rs.positive_roots) lengths.insert(root.sq_length);
    if (lengths.size() > 2 || *lengths.rbegin() != Rational(2))
        throw InternalClosureError(id.name() + ": unexpected root length spectrum");

    // Highest root: maximal height, then certified by dominance against
    // every positive root, and checked to be the only root that dominates.
    rs.highest_root = rs.positive_roots.back();
    auto dominates = [&](const RootVec& a, const RootVec& b) {
        for (int i = 0; i < r; ++i)
            if (a.simple_coeffs[i] < b.simple_coeffs[i]) return false;
        return true;
    };
    std::size_t dominant_count = 0;
    for (const auto& cand : rs.positive_roots) {
        bool all = true;
        for (const auto& other : rs.positive_roots)
            if (!dominates(cand, other)) {
                all = false;
                break;
            }
        if (all) ++dominant_count;
    }
    if (dominant_count != 1 || !dominates(rs.highest_root, rs.positive_roots.front()))
        throw InternalClosureError(id.name() + ": highest root not unique");
    for (const auto& other : rs.positive_roots)
        if (!dominates(rs.highest_root, other))
            throw InternalClosureError(id.name() + ": highest root fails dominance");

    // Integrality (alpha_i, beta^vee) in Z for every root beta; by linearity
    // this covers (alpha, beta^vee) for all root pairs.  The integer rows it
    // yields drive the exact closure check below.
    std::vector<std::vector<long long>> coroot_rows;
    coroot_rows.reserve(rs.positive_roots.size());
    for (const auto& beta : rs.positive_roots) {
        RatVec nb(r);
        for (int i = 0; i < r; ++i) nb[i] = Rational(beta.simple_coeffs[i]);
        std::vector<long long> row(r);
        for (int i = 0; i < r; ++i) {
            RatVec ei(r, Rational(0));
            ei[i] = Rational(1);
            const Rational p = Rational(2) * rat_bilinear(ei, rs.gram, nb) / beta.sq_length;
            if (!p.is_integer())
                throw InternalClosureError(id.name() + ": Cartan integrality violated");
            row[i] = p.to_integer();
        }
        coroot_rows.push_back(row);
    }

    // Reflection closure: s_beta(alpha) must land in R for every root pair.
    for (std::size_t b = 0; b < rs.positive_roots.size(); ++b) {
        for (const auto& alpha : rs.positive_roots) {
            long long pairing = 0;
            for (int i = 0; i < r; ++i) pairing += alpha.simple_coeffs[i] * coroot_rows[b][i];
            std::vector<long long> img = alpha.simple_coeffs;
            for (int i = 0; i < r; ++i) img[i] -= pairing * rs.positive_roots[b].simple_coeffs[i];
            std::vector<long long> neg(r);
            for (int i = 0; i < r; ++i) neg[i] = -img[i];
            if (!seen.count(img) && !seen.count(neg))
                throw InternalClosureError(id.name() + ": reflection closure violated");
        }
    }

    // Dual bases: fundamental weights are the rows of the inverse Cartan
    // matrix, the root-dual basis the rows of the inverse Gram matrix.
    RatMat cartan_rat(r, RatVec(r));
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) cartan_rat[j][k] = Rational(rs.cartan[j][k]);
    rs.fund_weights_coroot = rat_inverse(cartan_rat);
    rs.dual_basis_root = rat_inverse(rs.gram);
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) {
            RatVec ek(r, Rational(0));
            ek[k] = Rational(1);
            const Rational against_coroot =
                Rational(2) * rs.pairing_exact(rs.fund_weights_coroot[j], ek) / len[k];
            const Rational against_root = rs.pairing_exact(rs.dual_basis_root[j], ek);
            const Rational expect = (j == k) ? Rational(1) : Rational(0);
            if (against_coroot != expect || against_root != expect)
                throw InternalClosureError(id.name() + ": dual basis pairing check failed");
        }

    return rs;
}

std::pair<RatVec, RCoefficients> rho_and_r(const RootSystemData& rs, const Coupling& g) {
    const int r = rs.rank;
    RCoefficients rc;
    rc.r_root.assign(r, Rational(0));
    for (const auto& alpha : rs.positive_roots) {
        const Rational w = g.value_for(alpha.length_class);
        for (int j = 0; j < r; ++j) rc.r_root[j] += w * Rational(alpha.simple_coeffs[j]);
    }
    rc.r_coroot.assign(r, Rational(0));
    for (int j = 0; j < r; ++j)
        rc.r_coroot[j] = rc.r_root[j] * rs.simple_roots[j].sq_length / Rational(2);
    RatVec rho(r);
    for (int j = 0; j < r; ++j) rho[j] = rc.r_root[j] / Rational(2);
    return {rho, rc};
}

} // namespace weylmodes::rootsys
