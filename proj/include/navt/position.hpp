#ifndef NAVT_POSITION_HPP
#define NAVT_POSITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "navt/mpoly.hpp"
#include "navt/series.hpp"

namespace navt {

struct HomogeneousForm {
    MPoly poly;  // homogeneous, nonzero
    long degree() const { return poly.total_degree(); }
};

/// Validates homogeneity / nonzero-ness.
HomogeneousForm make_form(MPoly p);

struct Hypersurface {
    std::string name;
    HomogeneousForm form;
};

struct SpaceSpec {
    int N = 0;                            // ambient projective dimension
    std::vector<HomogeneousForm> x_ideal;  // empty => X = P^N
    bool is_full_space() const { return x_ideal.empty(); }
};

struct Caps {
    int max_subset_size = 12;    // subsets of hypersurfaces enumerated
    int max_nullstellensatz_power = 64;
    int hyperplane_lattice_radius = 4;
};

// ---- Groebner engine ----------------------------------------------------

struct GroebnerBasis {
    std::vector<MPoly> basis;  // reduced, monic, deterministic order
    MonOrder order;
    /// rep[i][j]: basis[i] = sum_j rep[i][j] * generators[j]
    std::vector<std::vector<MPoly>> rep;  // filled when tracking requested
};

GroebnerBasis groebner_basis(const std::vector<MPoly>& gens, MonOrder order,
                             bool track_cofactors = false);

/// Remainder of f modulo G; when quotients != nullptr also returns q with
/// f = sum q[i]*G.basis[i] + remainder.
MPoly normal_form(const MPoly& f, const GroebnerBasis& G,
                  std::vector<MPoly>* quotients = nullptr);

bool ideal_contains_one(const GroebnerBasis& G);

/// Krull dimension of the affine cone minus 1; -1 for empty projective locus.
int projective_dimension(const std::vector<MPoly>& gens,
                         MonOrder order = MonOrder::grevlex);

/// f in rad(I)? (Rabinowitsch trick)
bool radical_membership(const MPoly& f, const std::vector<MPoly>& gens);

/// Generator set of I ∩ J (same ring).
std::vector<MPoly> ideal_intersection(const std::vector<MPoly>& I,
                                      const std::vector<MPoly>& J);

/// Radical of a homogeneous ideal with finite projective locus, via
/// chart-wise Seidenberg radicals. X = P^N only.
std::vector<MPoly> radical_of_point_scheme(const std::vector<MPoly>& gens);

/// All rational points of a zero-dimensional (projective) scheme; complete
/// is false when some point may be irrational or the search was inconclusive.
struct RationalPoints {
    std::vector<std::vector<Rational>> points;  // first nonzero coord = 1
    bool complete = false;
};
RationalPoints rational_points_of_point_scheme(const std::vector<MPoly>& gens);

// ---- position invariants ------------------------------------------------

struct PositionProfile {
    int q = 0;
    int n = 0;
    /// t_seq[k] = t_m for m = -1 + k, k = 0..n.
    std::vector<int> t_seq;
    bool general_position = false;

    int t(int m) const;  // t_m for m in [-1, n-1]
    int t_minus1() const { return t(-1); }
    int t_0() const { return t(0); }
};

struct MultiplicityRecord {
    int M = 1;
    enum class Status { certified, assumed } status = Status::assumed;
    std::string witness;
};

struct NullstellensatzCertificate {
    std::vector<long> exponents;           // m_j per target
    std::vector<std::vector<MPoly>> cofactors;  // cofactors[j][i] * gens[i]
    std::vector<MPoly> targets;
    std::vector<MPoly> generators;
    /// target[j]^{m_j} - sum_i cofactors[j][i]*gens[i] == 0, re-expanded.
    bool verify() const;
};

struct SeparatingSystem {
    std::vector<std::vector<Rational>> points;
    std::vector<MPoly> hyperplanes;  // L_i(P_i) = 0, L_i(P_j) != 0 otherwise
};

PositionProfile t_sequence(const SpaceSpec& space,
                           const std::vector<Hypersurface>& hypers,
                           const Caps& caps = {});

/// Gradients of the two forms are independent everywhere on their common
/// zero locus (X = P^N only).
bool transversality_certificate(const HomogeneousForm& a,
                                const HomogeneousForm& b,
                                const SpaceSpec& space);

MultiplicityRecord certify_M(const SpaceSpec& space,
                             const std::vector<Hypersurface>& hypers,
                             const PositionProfile& profile,
                             std::optional<int> candidate = {},
                             const Caps& caps = {});

/// max over subsets of size t_{-1}-t_0 of sum min(M/deg, 1).
Rational alpha(const PositionProfile& profile, const MultiplicityRecord& M,
               const std::vector<long>& degrees);

NullstellensatzCertificate nullstellensatz_certificate(
    const std::vector<MPoly>& gens, const std::vector<MPoly>& targets,
    const Caps& caps = {});

/// Certificate for a single ideal member, cofactors included.
std::optional<std::vector<MPoly>> membership_certificate(
    const MPoly& target, const std::vector<MPoly>& gens);

SeparatingSystem select_separating_hyperplanes(
    const std::vector<std::vector<Rational>>& points,
    const std::function<bool(const MPoly&)>& image_avoids, int nvars,
    const Caps& caps = {});

}  // namespace navt

#endif
