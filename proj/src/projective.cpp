#include "navt/projective.hpp"

#include <algorithm>

namespace navt {

namespace {

using UPoly = std::vector<Rational>;

UPoly utrimmed(UPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

UPoly urem(UPoly a, const UPoly& b) {
    a = utrimmed(std::move(a));
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a = utrimmed(std::move(a));
    }
    return a;
}

UPoly ugcd(UPoly a, UPoly b) {
    a = utrimmed(std::move(a));
    b = utrimmed(std::move(b));
    while (!b.empty()) {
        UPoly r = urem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lc = a.back();
        for (auto& c : a) c /= lc;
    }
    return a;
}

UPoly udiv_exact(UPoly a, const UPoly& b) {
    a = utrimmed(std::move(a));
    UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a = utrimmed(std::move(a));
    }
    if (!a.empty()) throw Error("inexact coordinate gcd division");
    return q;
}

}  // namespace

bool AnalyticMap::is_polynomial() const {
    return std::all_of(coords.begin(), coords.end(),
                       [](const CertifiedSeries& c) {
                           return c.is_polynomial();
                       });
}

AnalyticMap AnalyticMap::make(std::vector<CertifiedSeries> coords) {
    if (coords.size() < 2) throw Error("map needs at least two coordinates");
    for (size_t i = 1; i < coords.size(); ++i)
        if (!(coords[i].val == coords[0].val))
            throw Error("coordinate valuation mismatch");
    bool any_nonzero_head = false;
    for (const auto& c : coords)
        if (!c.head_is_zero()) any_nonzero_head = true;
    if (!any_nonzero_head) throw Error("all map coordinates are zero");
    AnalyticMap f;
    f.val = coords[0].val;
    bool poly = std::all_of(coords.begin(), coords.end(),
                            [](const CertifiedSeries& c) {
                                return c.is_polynomial();
                            });
    if (poly) {
        // reduce by the coordinate gcd so the representative has no
        // common zeros
        UPoly g;
        for (const auto& c : coords)
            if (!c.head_is_zero()) g = ugcd(g, c.coeffs);
        if (g.size() > 1) {
            for (auto& c : coords)
                if (!c.head_is_zero())
                    c = CertifiedSeries::polynomial(udiv_exact(c.coeffs, g),
                                                    c.val);
        }
        f.reducedness_assumed = false;
    } else {
        f.reducedness_assumed = true;
    }
    f.coords = std::move(coords);
    return f;
}

CertifiedSeries restrict_form_to_map(const HomogeneousForm& Q,
                                     const AnalyticMap& f,
                                     std::optional<long> target_order) {
    const int nvars = Q.poly.nvars;
    if (nvars != f.ambient_dim() + 1)
        throw Error("form variable count does not match the map");
    std::optional<long> cap;
    if (!f.is_polynomial()) {
        // truncation caps come from the non-polynomial coordinates only
        long t = -1;
        for (const auto& c : f.coords)
            if (!c.is_polynomial())
                t = (t < 0) ? c.order() : std::min(t, c.order());
        if (target_order) t = std::min(t, *target_order);
        cap = t;
    }
    CertifiedSeries acc = CertifiedSeries::constant(0, f.val);
    for (const auto& [mono, coef] : Q.poly.terms) {
        CertifiedSeries term = CertifiedSeries::constant(coef, f.val);
        for (int v = 0; v < nvars; ++v)
            for (int e = 0; e < mono[v]; ++e)
                term = series_mul(term, f.coords[v], cap);
        acc = series_add(acc, term);
    }
    if (acc.head_is_zero()) {
        if (acc.is_polynomial())
            throw ContainedInHypersurface("map contained in hypersurface");
        throw UndeterminedRestriction(
            "restriction head is zero with unknown tail");
    }
    return acc;
}

GaussNorm characteristic(const AnalyticMap& f, const Interval& dom) {
    GaussNorm out;
    bool first = true;
    for (const auto& c : f.coords) {
        if (c.head_is_zero() && c.is_polynomial()) continue;  // zero coord
        GaussNorm g = gauss_norm(c, dom);
        if (!g.certified)
            throw UncertifiedNorm("coordinate gauss norm not certified");
        out.uses_declared_tail |= g.uses_declared_tail;
        out.fn = first ? g.fn : pl_max(out.fn, g.fn);
        first = false;
    }
    out.certified = true;
    return out;
}

GaussNorm proximity(const AnalyticMap& f, const Hypersurface& D,
                    const Interval& dom, bool normalize_coeffs) {
    GaussNorm T = characteristic(f, dom);
    CertifiedSeries rest = restrict_form_to_map(D.form, f);
    GaussNorm qn = gauss_norm(rest, dom);
    if (!qn.certified)
        throw UncertifiedNorm("restricted form norm not certified");
    GaussNorm m;
    m.fn = pl_sub(pl_scale(T.fn, Rational(D.form.degree())), qn.fn);
    if (normalize_coeffs) {
        Rational w = D.form.poly.max_coeff_log_norm(
            [&](const Rational& c) { return f.val.valuation(c); });
        m.fn = pl_add(m.fn, PLFun::constant(w, dom));
    }
    m.certified = true;
    m.uses_declared_tail = T.uses_declared_tail || qn.uses_declared_tail;
    return m;
}

PLFun counting(const AnalyticMap& f, const Hypersurface& D,
               const Interval& dom) {
    CertifiedSeries rest = restrict_form_to_map(D.form, f);
    return zero_counting(rest, dom).integrated;
}

FmtDefect fmt_defect(const AnalyticMap& f, const Hypersurface& D,
                     const Interval& dom) {
    GaussNorm m = proximity(f, D, dom, false);
    PLFun N = counting(f, D, dom);
    GaussNorm T = characteristic(f, dom);
    PLFun diff = pl_sub(pl_add(m.fn, N),
                        pl_scale(T.fn, Rational(D.form.degree())));
    if (!diff.is_constant())
        throw Error("first main theorem defect is not constant (bug)");
    return FmtDefect{diff, diff.values().front()};
}

}  // namespace navt
