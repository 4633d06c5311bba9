#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylmodes/linalg.hpp"
#include "weylmodes/rational.hpp"

namespace weylmodes::rootsys {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

struct RootSystemId {
    Family family;
    int rank;

    std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }
};

// Parses "B3", "g2", ... Returns nullopt on anything else.
std::optional<RootSystemId> parse_system_id(const std::string& spec);

enum class LengthClass { Long, Short };

// One root, carried both exactly (integer coefficients over the simple
// roots, rational squared length) and as a point of the Euclidean
// embedding used by the numerics.
struct RootVec {
    std::vector<long long> simple_coeffs;
    Vec coords;
    Rational sq_length;
    LengthClass length_class = LengthClass::Long;

    long long height() const {
        long long h = 0;
        for (long long c : simple_coeffs) h += c;
        return h;
    }
};

// Per-length-class coupling constants, kept exact so that the Weyl-vector
// coefficients they weight stay rational.
struct Coupling {
    Rational g_long{1};
    Rational g_short{1}; // ignored for simply-laced systems

    Rational value_for(LengthClass c) const { return c == LengthClass::Long ? g_long : g_short; }
};

// Coefficients of 2*rho(g) in the simple-root and simple-coroot bases.
struct RCoefficients {
    RatVec r_root;   // 2 rho(g) = sum_j r_root[j] * alpha_j
    RatVec r_coroot; // 2 rho(g) = sum_j r_coroot[j] * alpha_j^vee
};

struct InvariantsTable {
    std::vector<long long> degrees;
    long long weyl_order;
    long long center_order;
};

struct RootSystemData {
    RootSystemId id;
    int rank;
    std::vector<std::vector<long long>> cartan; // cartan[j][k] = 2 (a_j, a_k) / (a_k, a_k)
    RatMat gram;                                // gram[j][k] = (a_j, a_k), long roots normalized to 2
    std::vector<RootVec> simple_roots;
    std::vector<RootVec> positive_roots;
    RootVec highest_root;
    RatMat fund_weights_coroot; // rows lambda_j with (lambda_j, a_k^vee) = delta_jk
    RatMat dual_basis_root;     // rows lhat_j with (lhat_j, a_k) = delta_jk
    std::vector<long long> degrees;
    long long weyl_order = 0;
    long long center_order = 0;
    long long num_roots = 0; // |R| = 2 |R+|
    Mat embed;               // lower-triangular, embed * embed^T = gram

    // Euclidean coordinates of a rational vector given in the simple-root basis.
    Vec coords_of(const RatVec& root_basis) const;

    // Exact pairing of two vectors given in the simple-root basis.
    Rational pairing_exact(const RatVec& x, const RatVec& y) const;
};

// Normalization of the Euclidean realization; only one is implemented
// (long roots have squared length 2), the enum keeps the choice explicit
// at call sites.
enum class Normalization { LongSq2 };

inline constexpr int default_max_rank = 8;

// Builds the full exact data set for one irreducible reduced root system.
// Positive roots come from breadth-first closure of the simple roots under
// simple reflections; every invariant listed in the fields above is checked.
// Throws UnsupportedRank / InternalClosureError.
RootSystemData build_root_system(RootSystemId id,
                                 Normalization normalization = Normalization::LongSq2,
                                 int max_rank = default_max_rank);

// Reflection s_alpha(v) = v - (v, alpha^vee) alpha, exact in the
// simple-root basis.
RatVec reflect(const RootSystemData& rs, const RatVec& v, const RootVec& alpha);

// Euclidean variant of the same reflection.
Vec reflect(const Vec& v, const RootVec& alpha);

// alpha^vee = 2 alpha / (alpha, alpha), in the simple-root basis.
RatVec coroot(const RootVec& alpha);

// Degrees, Weyl order, and center order from the classical tables.
// Cross-validated at build time against the generated root count.
InvariantsTable invariants_table(RootSystemId id, int max_rank = default_max_rank);

// rho(g) = 1/2 sum_{alpha > 0} g_alpha alpha (simple-root basis) together
// with the expansion coefficients of 2 rho(g) in both dual conventions.
std::pair<RatVec, RCoefficients> rho_and_r(const RootSystemData& rs, const Coupling& g);

} // namespace weylmodes::rootsys
