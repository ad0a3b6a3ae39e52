#include "navt/plfun.hpp"

#include <algorithm>

namespace navt {

namespace {

void canonicalize(std::vector<Rational>& xs, std::vector<Rational>& ys) {
    // Drop interior points where incoming and outgoing slopes agree.
    std::vector<Rational> cx, cy;
    const size_t n = xs.size();
    for (size_t i = 0; i < n; ++i) {
        if (i == 0 || i + 1 == n) {
            cx.push_back(xs[i]);
            cy.push_back(ys[i]);
            continue;
        }
        Rational sl = (ys[i] - cy.back()) / (xs[i] - cx.back());
        Rational sr = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
        if (sl != sr) {
            cx.push_back(xs[i]);
            cy.push_back(ys[i]);
        }
    }
    xs = std::move(cx);
    ys = std::move(cy);
}

// Merged breakpoint grid of two functions on a shared domain, plus the
// crossing points of their difference (so max/min are linear between nodes).
std::vector<Rational> merged_grid(const PLFun& a, const PLFun& b) {
    std::vector<Rational> grid;
    grid.insert(grid.end(), a.breakpoints().begin(), a.breakpoints().end());
    grid.insert(grid.end(), b.breakpoints().begin(), b.breakpoints().end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    // Crossings of a-b inside each cell.
    std::vector<Rational> cross;
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        Rational x0 = grid[i], x1 = grid[i + 1];
        Rational d0 = a.eval(x0) - b.eval(x0);
        Rational d1 = a.eval(x1) - b.eval(x1);
        if ((d0 < 0 && d1 > 0) || (d0 > 0 && d1 < 0)) {
            cross.push_back(x0 + (x1 - x0) * (-d0) / (d1 - d0));
        }
    }
    grid.insert(grid.end(), cross.begin(), cross.end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

void check_domains(const PLFun& a, const PLFun& b) {
    if (!(a.domain() == b.domain())) throw Error("PLFun domain mismatch");
}

}  // namespace

PLFun::PLFun(std::vector<Rational> xs, std::vector<Rational> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    if (xs_.size() != ys_.size() || xs_.size() < 2)
        throw Error("PLFun needs matching breakpoint/value lists of size >= 2");
    for (size_t i = 0; i + 1 < xs_.size(); ++i)
        if (!(xs_[i] < xs_[i + 1]))
            throw Error("PLFun breakpoints must be strictly increasing");
    canonicalize(xs_, ys_);
}

PLFun PLFun::constant(const Rational& c, const Interval& dom) {
    if (!dom.nondegenerate()) throw Error("degenerate PLFun domain");
    return PLFun({dom.lo, dom.hi}, {c, c});
}

PLFun PLFun::linear(const Rational& slope, const Rational& intercept,
                    const Interval& dom) {
    if (!dom.nondegenerate()) throw Error("degenerate PLFun domain");
    return PLFun({dom.lo, dom.hi},
                 {slope * dom.lo + intercept, slope * dom.hi + intercept});
}

PLFun PLFun::upper_envelope(const std::vector<Line>& lines,
                            const Interval& dom) {
    if (lines.empty()) throw Error("upper_envelope of empty line set");
    if (!dom.nondegenerate()) throw Error("degenerate PLFun domain");
    // Candidate abscissae: endpoints plus all pairwise crossings in-domain.
    // Quadratic in the line count, which stays small here.
    std::vector<Rational> xs{dom.lo, dom.hi};
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i + 1; j < lines.size(); ++j) {
            if (lines[i].slope == lines[j].slope) continue;
            Rational x = (lines[j].intercept - lines[i].intercept) /
                         (lines[i].slope - lines[j].slope);
            if (dom.lo < x && x < dom.hi) xs.push_back(x);
        }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<Rational> ys;
    ys.reserve(xs.size());
    for (const auto& x : xs) {
        Rational best = lines[0].at(x);
        for (size_t i = 1; i < lines.size(); ++i)
            best = std::max(best, lines[i].at(x));
        ys.push_back(best);
    }
    return PLFun(std::move(xs), std::move(ys));
}

Rational PLFun::eval(const Rational& t) const {
    if (t < xs_.front() || t > xs_.back())
        throw Error("PLFun evaluation outside domain");
    auto it = std::upper_bound(xs_.begin(), xs_.end(), t);
    size_t i = (it == xs_.end()) ? xs_.size() - 2 : (it - xs_.begin()) - 1;
    const Rational &x0 = xs_[i], &x1 = xs_[i + 1];
    return ys_[i] + (ys_[i + 1] - ys_[i]) * (t - x0) / (x1 - x0);
}

Rational PLFun::right_slope() const {
    size_t n = xs_.size();
    return (ys_[n - 1] - ys_[n - 2]) / (xs_[n - 1] - xs_[n - 2]);
}

Rational PLFun::left_slope() const {
    return (ys_[1] - ys_[0]) / (xs_[1] - xs_[0]);
}

PLFun pl_max(const PLFun& a, const PLFun& b) {
    check_domains(a, b);
    auto grid = merged_grid(a, b);
    std::vector<Rational> ys;
    ys.reserve(grid.size());
    for (const auto& x : grid) ys.push_back(std::max(a.eval(x), b.eval(x)));
    return PLFun(std::move(grid), std::move(ys));
}

PLFun pl_add(const PLFun& a, const PLFun& b) {
    check_domains(a, b);
    auto grid = merged_grid(a, b);
    std::vector<Rational> ys;
    ys.reserve(grid.size());
    for (const auto& x : grid) ys.push_back(a.eval(x) + b.eval(x));
    return PLFun(std::move(grid), std::move(ys));
}

PLFun pl_scale(const PLFun& a, const Rational& c) {
    std::vector<Rational> ys;
    ys.reserve(a.values().size());
    for (const auto& y : a.values()) ys.push_back(c * y);
    return PLFun(a.breakpoints(), std::move(ys));
}

PLFun pl_sub(const PLFun& a, const PLFun& b) {
    return pl_add(a, pl_scale(b, Rational(-1)));
}

Rational pl_min_constant_dominating(const PLFun& lhs, const PLFun& rhs) {
    check_domains(lhs, rhs);
    // lhs - rhs is PL; its maximum sits at a breakpoint of the merged grid.
    PLFun d = pl_sub(lhs, rhs);
    Rational best = d.values().front();
    for (const auto& y : d.values()) best = std::max(best, y);
    return best;
}

Rational pl_max_abs(const PLFun& a) {
    Rational best(0);
    for (const auto& y : a.values()) best = std::max(best, Rational(abs(y)));
    return best;
}

}  // namespace navt
