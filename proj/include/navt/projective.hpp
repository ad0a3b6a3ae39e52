#ifndef NAVT_PROJECTIVE_HPP
#define NAVT_PROJECTIVE_HPP

#include "navt/position.hpp"
#include "navt/series.hpp"

namespace navt {

struct ContainedInHypersurface : Error {
    using Error::Error;
};
struct UndeterminedRestriction : Error {
    using Error::Error;
};
struct UncertifiedNorm : Error {
    using Error::Error;
};

/// Analytic map K -> P^N given by N+1 coordinate series without common
/// zeros. Polynomial coordinate tuples are reduced by their gcd here;
/// transcendental tuples carry reducedness as an assumption.
struct AnalyticMap {
    std::vector<CertifiedSeries> coords;
    ValuationSpec val;
    bool reducedness_assumed = false;

    int ambient_dim() const { return static_cast<int>(coords.size()) - 1; }
    bool is_polynomial() const;

    static AnalyticMap make(std::vector<CertifiedSeries> coords);
};

/// Q(f_0,...,f_N) as a series; exact for polynomial maps, head-exact to
/// target_order otherwise. Throws ContainedInHypersurface when the result
/// is identically zero, UndeterminedRestriction when only a zero head with
/// unknown tail is available.
CertifiedSeries restrict_form_to_map(const HomogeneousForm& Q,
                                     const AnalyticMap& f,
                                     std::optional<long> target_order = {});

/// T_f: the pointwise max of the coordinate Gauss norms.
GaussNorm characteristic(const AnalyticMap& f, const Interval& dom);

/// m_f(r, D) = deg(D) * log|f|_r - log|Q o f|_r, plus the coefficient norm
/// of Q when normalize_coeffs is set.
GaussNorm proximity(const AnalyticMap& f, const Hypersurface& D,
                    const Interval& dom, bool normalize_coeffs = false);

/// N_f(r, D): integrated zero count of Q o f, based at t_min.
PLFun counting(const AnalyticMap& f, const Hypersurface& D,
               const Interval& dom);

struct FmtDefect {
    PLFun fn;          // m + N - deg(D)*T, constant by the First Main Theorem
    Rational constant;
};

/// Asserts constancy (a non-constant difference is an internal error).
FmtDefect fmt_defect(const AnalyticMap& f, const Hypersurface& D,
                     const Interval& dom);

}  // namespace navt

#endif
