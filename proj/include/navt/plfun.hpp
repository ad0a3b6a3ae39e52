#ifndef NAVT_PLFUN_HPP
#define NAVT_PLFUN_HPP

#include <vector>

#include "navt/rational.hpp"

namespace navt {

/// Closed interval of the log-radius variable t.
struct Interval {
    Rational lo, hi;
    bool operator==(const Interval&) const = default;
    bool nondegenerate() const { return lo < hi; }
    bool contains(const Rational& t) const { return lo <= t && t <= hi; }
};

/// A line s*t + b, used as an envelope ingredient.
struct Line {
    Rational slope, intercept;
    Rational at(const Rational& t) const { return slope * t + intercept; }
};

/// Exact piecewise-linear function of t on a closed rational interval.
/// Stored in canonical form: breakpoints strictly increasing, endpoints
/// included, no interior breakpoint where the slope is unchanged.
/// Structural equality of canonical forms is pointwise equality.
class PLFun {
public:
    PLFun() = default;

    /// Canonicalizes: xs strictly increasing including both domain endpoints.
    PLFun(std::vector<Rational> xs, std::vector<Rational> ys);

    static PLFun constant(const Rational& c, const Interval& dom);
    static PLFun linear(const Rational& slope, const Rational& intercept,
                        const Interval& dom);
    /// Pointwise maximum of a nonempty set of lines, clipped to dom.
    static PLFun upper_envelope(const std::vector<Line>& lines,
                                const Interval& dom);

    Interval domain() const { return {xs_.front(), xs_.back()}; }
    const std::vector<Rational>& breakpoints() const { return xs_; }
    const std::vector<Rational>& values() const { return ys_; }

    Rational eval(const Rational& t) const;
    Rational right_slope() const;
    Rational left_slope() const;
    bool is_constant() const { return xs_.size() == 2 && ys_[0] == ys_[1]; }

    bool operator==(const PLFun&) const = default;

private:
    std::vector<Rational> xs_, ys_;
};

PLFun pl_max(const PLFun& a, const PLFun& b);
PLFun pl_add(const PLFun& a, const PLFun& b);
PLFun pl_scale(const PLFun& a, const Rational& c);
PLFun pl_sub(const PLFun& a, const PLFun& b);

/// Least C with lhs <= rhs + C on the common domain.
Rational pl_min_constant_dominating(const PLFun& lhs, const PLFun& rhs);

/// max over the domain of |a|.
Rational pl_max_abs(const PLFun& a);

}  // namespace navt

#endif
