#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "navt/plfun.hpp"

using namespace navt;

namespace {

const Interval kDom{Rational(0), Rational(10)};

// deterministic xorshift for property tests
struct Rng {
    uint64_t s = 0x9e3779b97f4a7c15ull;
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % (hi - lo + 1));
    }
    Rational rat(long lo, long hi) {
        return Rational(range(lo, hi), range(1, 6));
    }
};

PLFun random_pl(Rng& rng, const Interval& dom) {
    std::vector<Line> lines;
    long k = rng.range(1, 5);
    for (long i = 0; i < k; ++i)
        lines.push_back({rng.rat(-8, 8), rng.rat(-20, 20)});
    return PLFun::upper_envelope(lines, dom);
}

std::vector<Rational> sample_points(const Interval& dom, int k) {
    std::vector<Rational> ts;
    for (int i = 0; i <= k; ++i)
        ts.push_back(dom.lo + (dom.hi - dom.lo) * Rational(i, k));
    return ts;
}

}  // namespace

TEST_CASE("constant and linear factories") {
    PLFun c = PLFun::constant(Rational(3), kDom);
    CHECK(c.is_constant());
    CHECK(c.eval(Rational(7)) == Rational(3));
    PLFun l = PLFun::linear(Rational(2), Rational(-1), kDom);
    CHECK(l.eval(Rational(0)) == Rational(-1));
    CHECK(l.eval(Rational(5)) == Rational(9));
    CHECK(l.right_slope() == Rational(2));
    CHECK(l.left_slope() == Rational(2));
}

TEST_CASE("upper envelope of 1 + 2z + 2z^2 weight lines") {
    // lines 0, t-1, 2t-1 (p=2 coefficient weights)
    PLFun f = PLFun::upper_envelope(
        {{Rational(0), Rational(0)},
         {Rational(1), Rational(-1)},
         {Rational(2), Rational(-1)}},
        kDom);
    CHECK(f.eval(Rational(3)) == Rational(5));
    CHECK(f.eval(Rational(0)) == Rational(0));
    // crossing of 0 and t-1 at t=1, of t-1 and 2t-1 at t=0
    CHECK(f.eval(Rational(1)) == Rational(1));
    CHECK(f.right_slope() == Rational(2));
}

TEST_CASE("canonical form removes redundant breakpoints") {
    PLFun a({Rational(0), Rational(5), Rational(10)},
            {Rational(0), Rational(5), Rational(10)});
    PLFun b = PLFun::linear(Rational(1), Rational(0), kDom);
    CHECK(a == b);
    CHECK(a.breakpoints().size() == 2);
}

TEST_CASE("structural equality is pointwise equality") {
    Rng rng;
    for (int it = 0; it < 50; ++it) {
        PLFun f = random_pl(rng, kDom);
        PLFun g = random_pl(rng, kDom);
        bool same = true;
        for (const auto& t : sample_points(kDom, 40))
            if (f.eval(t) != g.eval(t)) same = false;
        // same samples on a fine grid are not proof, but disagreement
        // anywhere must force structural inequality
        if (!same) CHECK(!(f == g));
        CHECK(f == PLFun(f.breakpoints(), f.values()));
    }
}

TEST_CASE("pointwise semantics of max/add/sub/scale") {
    Rng rng;
    for (int it = 0; it < 60; ++it) {
        PLFun f = random_pl(rng, kDom);
        PLFun g = random_pl(rng, kDom);
        Rational c = rng.rat(-5, 5);
        PLFun mx = pl_max(f, g), ad = pl_add(f, g), sb = pl_sub(f, g),
              sc = pl_scale(f, c);
        for (const auto& t : sample_points(kDom, 23)) {
            CHECK(mx.eval(t) == std::max(f.eval(t), g.eval(t)));
            CHECK(ad.eval(t) == f.eval(t) + g.eval(t));
            CHECK(sb.eval(t) == f.eval(t) - g.eval(t));
            CHECK(sc.eval(t) == c * f.eval(t));
        }
    }
}

TEST_CASE("operations also agree at their own breakpoints") {
    Rng rng;
    for (int it = 0; it < 40; ++it) {
        PLFun f = random_pl(rng, kDom);
        PLFun g = random_pl(rng, kDom);
        PLFun mx = pl_max(f, g);
        for (const auto& t : mx.breakpoints())
            CHECK(mx.eval(t) == std::max(f.eval(t), g.eval(t)));
    }
}

TEST_CASE("pl_min_constant_dominating is least and sufficient") {
    Rng rng;
    for (int it = 0; it < 60; ++it) {
        PLFun f = random_pl(rng, kDom);
        PLFun g = random_pl(rng, kDom);
        Rational c = pl_min_constant_dominating(f, g);
        bool tight = false;
        auto pts = sample_points(kDom, 31);
        PLFun d = pl_sub(f, g);
        for (const auto& t : d.breakpoints()) pts.push_back(t);
        for (const auto& t : pts) {
            CHECK(f.eval(t) <= g.eval(t) + c);
            if (f.eval(t) == g.eval(t) + c) tight = true;
        }
        CHECK(tight);  // minimality: the gap closes somewhere
    }
}

TEST_CASE("pl_max_abs") {
    PLFun f = PLFun::linear(Rational(-1), Rational(3), kDom);  // 3-t
    CHECK(pl_max_abs(f) == Rational(7));
    CHECK(pl_max_abs(PLFun::constant(Rational(0), kDom)) == Rational(0));
}

TEST_CASE("domains with negative endpoints") {
    Interval dom{Rational(-2), Rational(0)};
    PLFun f = PLFun::upper_envelope(
        {{Rational(0), Rational(-2)}, {Rational(2), Rational(0)}}, dom);
    CHECK(f.eval(Rational(-1)) == Rational(-2));  // kink at t=-1
    CHECK(f.eval(Rational(0)) == Rational(0));
    CHECK(f.left_slope() == Rational(0));  // constant piece to the left
    CHECK(f.right_slope() == Rational(2));
    CHECK(f.breakpoints().size() == 3);
}
