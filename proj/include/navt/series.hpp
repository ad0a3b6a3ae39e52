#ifndef NAVT_SERIES_HPP
#define NAVT_SERIES_HPP

#include <optional>
#include <vector>

#include "navt/plfun.hpp"
#include "navt/rational.hpp"

namespace navt {

/// The base field's valuation: p-adic on the rationals, or trivial.
struct ValuationSpec {
    enum class Kind { padic, trivial };
    Kind kind = Kind::trivial;
    Int p = 0;

    static ValuationSpec padic(const Int& p);
    static ValuationSpec trivial() { return ValuationSpec{}; }

    /// v(x); nullopt encodes +infinity (x == 0).
    std::optional<Rational> valuation(const Rational& x) const;

    bool operator==(const ValuationSpec&) const = default;
};

/// Lower bound tau(n) = quad*n^2 + lin*n + cst on the valuation of every
/// coefficient beyond the stored head. `declared` marks bounds supplied as
/// scenario data rather than derived by the library.
struct TailBound {
    Rational quad, lin, cst;
    bool declared = false;

    bool operator==(const TailBound&) const = default;

    Rational at(long n) const {
        Rational nn(n);
        return quad * nn * nn + lin * nn + cst;
    }
};

/// A valued power series: exact rational head coefficients 0..order plus a
/// tail classification. Polynomial means the tail is identically zero.
struct CertifiedSeries {
    enum class Tail { polynomial, bounded, unknown };

    std::vector<Rational> coeffs;  // index 0..order
    Tail tail = Tail::polynomial;
    std::optional<TailBound> bound;  // present iff tail == bounded
    ValuationSpec val;

    long order() const { return static_cast<long>(coeffs.size()) - 1; }
    bool is_polynomial() const { return tail == Tail::polynomial; }
    bool head_is_zero() const;
    /// Index of first nonzero head coefficient; -1 when head is zero.
    long ord_at_zero() const;

    static CertifiedSeries polynomial(std::vector<Rational> coeffs,
                                      const ValuationSpec& val);
    static CertifiedSeries constant(const Rational& c,
                                    const ValuationSpec& val);
    /// The monomial z^k.
    static CertifiedSeries monomial(long k, const ValuationSpec& val);
};

struct NewtonSegment {
    Rational slope;  // log-radius of the zeros on this segment
    long length;     // their number, with multiplicity
};

struct NewtonPolygon {
    std::vector<NewtonSegment> segments;  // slopes strictly increasing
    long ord_at_zero = 0;
    bool certified = false;  // tail cannot add slopes <= the requested cap
    long total_zeros() const;
};

struct GaussNorm {
    PLFun fn;
    bool certified = false;
    bool uses_declared_tail = false;
};

/// Step data for the unintegrated zero count n(t).
struct ZeroCount {
    long base = 0;  // zeros of log-radius <= t_min, including ord_at_zero
    std::vector<std::pair<Rational, long>> jumps;  // (log-radius, multiplicity)
    PLFun integrated;                              // N(t), base N(t_min) = 0
    long at(const Rational& t) const;
};

/// -v(a_n); nullopt encodes -infinity (zero coefficient).
std::optional<Rational> coefficient_log_norm(const CertifiedSeries& s, long n);

/// log|f|_r in valuation units as a function of t = log_p r: the exact
/// upper envelope of the lines n*t - v(a_n) over the head, certified when
/// the tail bound keeps every higher index strictly below it on dom.
GaussNorm gauss_norm(const CertifiedSeries& s, const Interval& dom);

/// Newton polygon of the head; certified for slopes <= slope_cap when the
/// tail cannot contribute there (always, for polynomials).
NewtonPolygon newton_polygon(const CertifiedSeries& s,
                             const std::optional<Rational>& slope_cap = {});

/// Zero counting on dom; requires the polygon certified up to dom.hi.
ZeroCount zero_counting(const CertifiedSeries& s, const Interval& dom);

/// max over dom of |log|f|_r - log|f|_{r_min} - N(t)|; exactly 0 by Jensen.
Rational jensen_check(const CertifiedSeries& s, const Interval& dom);

CertifiedSeries series_add(const CertifiedSeries& a, const CertifiedSeries& b);
CertifiedSeries series_mul(const CertifiedSeries& a, const CertifiedSeries& b,
                           std::optional<long> target_order = {});
CertifiedSeries series_compose(const CertifiedSeries& outer,
                               const CertifiedSeries& inner,
                               long target_order);

}  // namespace navt

#endif
