#ifndef NAVT_SMT_HPP
#define NAVT_SMT_HPP

#include "navt/scenario.hpp"

namespace navt {

struct BoundSpec {
    enum class Theorem { quang, levin, new_bound };
    Theorem theorem;
    Rational coefficient;
    bool applicable = true;
    std::string note;
};

struct BoundResult {
    BoundSpec spec;
    Rational c_min;  // least C with lhs <= coeff*T + C on the domain
    bool holds = false;
};

struct VerificationReport {
    PLFun lhs;  // sum of m_j / deg_j
    PLFun T;
    std::vector<PLFun> m_funs;
    std::vector<std::optional<PLFun>> n_funs;
    std::vector<std::optional<Rational>> fmt_constants;
    std::vector<BoundResult> bounds;
    Rational sharpness_ratio;
    PositionProfile profile;
    MultiplicityRecord m_record;
    Rational alpha_value;
    bool fully_certified = false;
    std::vector<std::string> notices;  // "conditionally verified" watermarks

    const BoundResult& bound(BoundSpec::Theorem th) const;
};

struct ProofTrace {
    Rational t;
    // m/deg values sorted descending, ties by original hypersurface index
    struct Entry {
        int index;  // original position in the scenario
        Rational value;
    };
    std::vector<Entry> sorted;
    Rational piece_first, piece_middle, piece_last;

    // inequality on the tail piece: its entries sit under log(C1)/deg
    std::optional<Rational> log_c1;
    bool last_piece_ok = true;

    struct MiddleCheck {
        int index;
        Rational value;       // m/deg at t
        Rational coefficient;  // min(M/deg, 1)
        Rational c_min;        // domain constant for value <= coeff*T + C
    };
    std::vector<MiddleCheck> middle;

    // hyperplane piece: sum of m_f(H_i) <= T + C over a separating system
    struct HyperplaneCheck {
        int index;  // the middle hypersurface it certifies
        Rational sum_at_t;
        Rational c_min;
        size_t num_points;
    };
    std::vector<HyperplaneCheck> hyperplane_checks;
    std::vector<std::string> notices;
};

std::vector<BoundSpec> bound_coefficients(const PositionProfile& profile,
                                          const MultiplicityRecord& M,
                                          const std::vector<long>& degrees,
                                          const SpaceSpec& space);

VerificationReport verify(const Scenario& scenario, const Interval& dom);
VerificationReport verify(const Scenario& scenario);

ProofTrace proof_trace(const Scenario& scenario, const Rational& t);

/// Report rendering (exact rationals as "num/den" strings).
std::string report_to_json(const VerificationReport& r);
std::string trace_to_json(const ProofTrace& tr);

}  // namespace navt

#endif
