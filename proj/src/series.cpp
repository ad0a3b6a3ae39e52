#include "navt/series.hpp"

#include <algorithm>

namespace navt {

namespace {

Int rfloor(const Rational& x) {
    Int n = numerator(x), d = denominator(x);
    Int q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

// sup over integers n > order of (n*t - tau(n)); nullopt when unbounded.
std::optional<Rational> tail_sup(const TailBound& tau, long order,
                                 const Rational& t) {
    long n0 = order + 1;
    auto value = [&](long n) { return Rational(n) * t - tau.at(n); };
    if (tau.quad == 0) {
        if (tau.lin <= t) return std::nullopt;  // grows without bound
        return value(n0);
    }
    // Concave in n; vertex at (t - lin) / (2*quad).
    Rational vertex = (t - tau.lin) / (2 * tau.quad);
    if (vertex <= Rational(n0)) return value(n0);
    Int fl = rfloor(vertex);
    long a = static_cast<long>(fl);
    Rational best = value(std::max(a, n0));
    best = std::max(best, value(std::max(a + 1, n0)));
    return best;
}

}  // namespace

ValuationSpec ValuationSpec::padic(const Int& p) {
    if (!is_prime(p)) throw Error("p must be prime");
    ValuationSpec v;
    v.kind = Kind::padic;
    v.p = p;
    return v;
}

std::optional<Rational> ValuationSpec::valuation(const Rational& x) const {
    if (x == 0) return std::nullopt;
    if (kind == Kind::trivial) return Rational(0);
    return Rational(padic_valuation(x, p));
}

bool CertifiedSeries::head_is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(),
                       [](const Rational& c) { return c == 0; });
}

long CertifiedSeries::ord_at_zero() const {
    for (long n = 0; n <= order(); ++n)
        if (coeffs[n] != 0) return n;
    return -1;
}

CertifiedSeries CertifiedSeries::polynomial(std::vector<Rational> coeffs,
                                            const ValuationSpec& val) {
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.empty()) coeffs.push_back(Rational(0));
    CertifiedSeries s;
    s.coeffs = std::move(coeffs);
    s.tail = Tail::polynomial;
    s.val = val;
    return s;
}

CertifiedSeries CertifiedSeries::constant(const Rational& c,
                                          const ValuationSpec& val) {
    return polynomial({c}, val);
}

CertifiedSeries CertifiedSeries::monomial(long k, const ValuationSpec& val) {
    std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
    c.back() = 1;
    return polynomial(std::move(c), val);
}

long NewtonPolygon::total_zeros() const {
    long n = ord_at_zero;
    for (const auto& seg : segments) n += seg.length;
    return n;
}

std::optional<Rational> coefficient_log_norm(const CertifiedSeries& s, long n) {
    if (n < 0) throw Error("negative coefficient index");
    if (n > s.order()) {
        if (s.is_polynomial()) return std::nullopt;
        throw Error("coefficient index beyond truncation");
    }
    auto v = s.val.valuation(s.coeffs[n]);
    if (!v) return std::nullopt;
    return -*v;
}

GaussNorm gauss_norm(const CertifiedSeries& s, const Interval& dom) {
    if (!dom.nondegenerate()) throw Error("degenerate domain");
    if (s.head_is_zero()) {
        if (s.is_polynomial()) throw Error("gauss norm of the zero series");
        throw Error("all head coefficients zero: norm undetermined");
    }
    std::vector<Line> lines;
    for (long n = 0; n <= s.order(); ++n)
        if (auto w = coefficient_log_norm(s, n))
            lines.push_back({Rational(n), *w});
    GaussNorm g;
    g.fn = PLFun::upper_envelope(lines, dom);
    switch (s.tail) {
        case CertifiedSeries::Tail::polynomial:
            g.certified = true;
            break;
        case CertifiedSeries::Tail::unknown:
            g.certified = false;
            break;
        case CertifiedSeries::Tail::bounded: {
            g.certified = true;
            g.uses_declared_tail = s.bound->declared;
            // Envelope minus any tail line is convex PL, so checking strict
            // dominance at the envelope breakpoints covers the whole domain.
            for (size_t i = 0; i < g.fn.breakpoints().size(); ++i) {
                auto sup = tail_sup(*s.bound, s.order(), g.fn.breakpoints()[i]);
                if (!sup || !(*sup < g.fn.values()[i])) {
                    g.certified = false;
                    break;
                }
            }
            break;
        }
    }
    return g;
}

NewtonPolygon newton_polygon(const CertifiedSeries& s,
                             const std::optional<Rational>& slope_cap) {
    NewtonPolygon np;
    long ord = s.ord_at_zero();
    if (ord < 0) {
        if (s.is_polynomial()) {  // the zero polynomial: no zeros at all
            np.ord_at_zero = 0;
            throw Error("newton polygon of the zero series");
        }
        throw Error("all head coefficients zero: polygon undetermined");
    }
    np.ord_at_zero = ord;
    // Lower convex hull of (n, v(a_n)) over the nonzero head coefficients.
    std::vector<std::pair<long, Rational>> pts;
    for (long n = ord; n <= s.order(); ++n)
        if (auto v = s.val.valuation(s.coeffs[n])) pts.push_back({n, *v});
    std::vector<std::pair<long, Rational>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // keep b only if it is strictly below chord a-p
            if ((b.second - a.second) * (p.first - a.first) <
                (p.second - a.second) * (b.first - a.first))
                break;
            hull.pop_back();
        }
        hull.push_back(p);
    }
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        Rational sl = (hull[i + 1].second - hull[i].second) /
                      Rational(hull[i + 1].first - hull[i].first);
        np.segments.push_back({sl, hull[i + 1].first - hull[i].first});
    }
    switch (s.tail) {
        case CertifiedSeries::Tail::polynomial:
            np.certified = true;
            break;
        case CertifiedSeries::Tail::unknown:
            np.certified = false;
            break;
        case CertifiedSeries::Tail::bounded: {
            if (!slope_cap) {
                np.certified = false;
                break;
            }
            // A tail point can alter slopes <= cap only by attaching to a
            // hull vertex; rule that out via the declared bound.
            np.certified = true;
            Rational cap = *slope_cap;
            auto sup = tail_sup(*s.bound, s.order(), cap);
            if (!sup) {
                np.certified = false;
                break;
            }
            Rational best = cap * Rational(hull[0].first) - hull[0].second;
            for (const auto& vtx : hull)
                best = std::min(best,
                                cap * Rational(vtx.first) - vtx.second);
            if (!(*sup < best)) np.certified = false;
            break;
        }
    }
    return np;
}

ZeroCount zero_counting(const CertifiedSeries& s, const Interval& dom) {
    NewtonPolygon np = newton_polygon(s, dom.hi);
    if (!np.certified)
        throw Error("newton polygon not certified on the requested range");
    ZeroCount zc;
    zc.base = np.ord_at_zero;
    std::vector<std::pair<Rational, long>> in_window;
    for (const auto& seg : np.segments) {
        if (seg.slope > dom.hi) continue;
        if (seg.slope <= dom.lo)
            zc.base += seg.length;
        else
            in_window.push_back({seg.slope, seg.length});
        zc.jumps.push_back({seg.slope, seg.length});
    }
    std::vector<Rational> xs{dom.lo};
    std::vector<Rational> ys{Rational(0)};
    long slope = zc.base;
    for (const auto& [tau, mult] : in_window) {
        if (tau < dom.hi) {
            xs.push_back(tau);
            ys.push_back(ys.back() + Rational(slope) * (tau - xs[xs.size() - 2]));
            slope += mult;
        }
    }
    xs.push_back(dom.hi);
    ys.push_back(ys.back() + Rational(slope) * (dom.hi - xs[xs.size() - 2]));
    zc.integrated = PLFun(std::move(xs), std::move(ys));
    return zc;
}

long ZeroCount::at(const Rational& t) const {
    long n = base;
    for (const auto& [tau, mult] : jumps)
        if (tau <= t && tau > integrated.domain().lo) n += mult;
    return n;
}

Rational jensen_check(const CertifiedSeries& s, const Interval& dom) {
    GaussNorm g = gauss_norm(s, dom);
    if (!g.certified) throw Error("jensen check requires a certified norm");
    ZeroCount zc = zero_counting(s, dom);
    PLFun diff = pl_sub(g.fn, zc.integrated);
    Rational base = g.fn.eval(dom.lo);
    Rational worst(0);
    for (const auto& y : diff.values()) worst = std::max(worst, Rational(abs(y - base)));
    return worst;
}

namespace {

void require_same_field(const CertifiedSeries& a, const CertifiedSeries& b) {
    if (!(a.val == b.val)) throw Error("valuation mismatch");
}

long poly_degree(const CertifiedSeries& p) {
    long d = -1;
    for (long n = 0; n <= p.order(); ++n)
        if (p.coeffs[n] != 0) d = n;
    return d;
}

CertifiedSeries head_only(std::vector<Rational> coeffs,
                          const ValuationSpec& val) {
    CertifiedSeries s;
    s.coeffs = std::move(coeffs);
    s.tail = CertifiedSeries::Tail::unknown;
    s.val = val;
    return s;
}

}  // namespace

CertifiedSeries series_add(const CertifiedSeries& a, const CertifiedSeries& b) {
    require_same_field(a, b);
    using Tail = CertifiedSeries::Tail;
    if (a.is_polynomial() && b.is_polynomial()) {
        std::vector<Rational> c(
            std::max(a.coeffs.size(), b.coeffs.size()), Rational(0));
        for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
        for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
        return CertifiedSeries::polynomial(std::move(c), a.val);
    }
    // polynomial + bounded keeps the tail bound when the polynomial's
    // degree stays inside the stored head
    const CertifiedSeries* poly = nullptr;
    const CertifiedSeries* other = nullptr;
    if (a.is_polynomial()) poly = &a, other = &b;
    if (b.is_polynomial()) poly = &b, other = &a;
    if (poly && other->tail == Tail::bounded &&
        poly_degree(*poly) <= other->order()) {
        CertifiedSeries s = *other;
        for (long n = 0; n <= poly_degree(*poly); ++n)
            s.coeffs[n] += poly->coeffs[n];
        return s;
    }
    if (poly) {
        // the polynomial is exactly zero past its degree, so the head stays
        // known up to the other operand's order
        long ord = other->order();
        std::vector<Rational> c(static_cast<size_t>(ord) + 1, Rational(0));
        for (long n = 0; n <= ord; ++n) {
            c[n] = other->coeffs[n];
            if (n < static_cast<long>(poly->coeffs.size()))
                c[n] += poly->coeffs[n];
        }
        return head_only(std::move(c), a.val);
    }
    long ord = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(ord) + 1);
    for (long n = 0; n <= ord; ++n) c[n] = a.coeffs[n] + b.coeffs[n];
    return head_only(std::move(c), a.val);
}

CertifiedSeries series_mul(const CertifiedSeries& a, const CertifiedSeries& b,
                           std::optional<long> target_order) {
    require_same_field(a, b);
    // constant scaling shifts every tail valuation by v(c)
    auto scaled = [](const CertifiedSeries& s,
                     const Rational& c) -> CertifiedSeries {
        if (c == 0) return CertifiedSeries::constant(0, s.val);
        CertifiedSeries r = s;
        for (auto& x : r.coeffs) x *= c;
        if (r.bound) r.bound->cst += *s.val.valuation(c);
        return r;
    };
    if (a.is_polynomial() && poly_degree(a) <= 0) return scaled(b, a.coeffs[0]);
    if (b.is_polynomial() && poly_degree(b) <= 0) return scaled(a, b.coeffs[0]);
    if (a.is_polynomial() && b.is_polynomial()) {
        long da = poly_degree(a), db = poly_degree(b);
        std::vector<Rational> c(static_cast<size_t>(da + db) + 1, Rational(0));
        for (long i = 0; i <= da; ++i)
            for (long j = 0; j <= db; ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
        if (target_order && *target_order < da + db)
            c.resize(static_cast<size_t>(*target_order) + 1);
        auto r = CertifiedSeries::polynomial(std::move(c), a.val);
        if (target_order && *target_order < da + db)
            r.tail = CertifiedSeries::Tail::unknown;
        return r;
    }
    long ord = std::min(a.order(), b.order());
    if (target_order) ord = std::min(ord, *target_order);
    std::vector<Rational> c(static_cast<size_t>(ord) + 1, Rational(0));
    for (long i = 0; i <= ord; ++i)
        for (long j = 0; i + j <= ord; ++j)
            if (i <= a.order() && j <= b.order())
                c[i + j] += a.coeffs[i] * b.coeffs[j];
    return head_only(std::move(c), a.val);
}

CertifiedSeries series_compose(const CertifiedSeries& outer,
                               const CertifiedSeries& inner,
                               long target_order) {
    require_same_field(outer, inner);
    bool inner_origin = inner.coeffs[0] == 0;
    if (!outer.is_polynomial() && !inner_origin)
        throw Error(
            "composition needs a polynomial outer or an inner fixing 0");
    long mmax = outer.is_polynomial() ? poly_degree(outer)
                                      : std::min(outer.order(), target_order);
    if (!outer.is_polynomial() && target_order > outer.order())
        throw Error("target order beyond outer truncation");
    bool exact = outer.is_polynomial() && inner.is_polynomial();
    std::optional<long> cap;
    if (!exact) cap = target_order;
    // Horner over the outer coefficients.
    CertifiedSeries acc = CertifiedSeries::constant(0, outer.val);
    for (long m = mmax; m >= 0; --m) {
        acc = series_mul(acc, inner, cap);
        acc = series_add(acc,
                         CertifiedSeries::constant(outer.coeffs[m], outer.val));
    }
    if (!exact && acc.is_polynomial()) {
        // head-only result: the dropped tail is not controlled
        acc.tail = CertifiedSeries::Tail::unknown;
        if (acc.order() < target_order)
            acc.coeffs.resize(static_cast<size_t>(target_order) + 1,
                              Rational(0));
    }
    return acc;
}

}  // namespace navt
