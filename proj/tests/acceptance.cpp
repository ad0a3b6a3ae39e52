// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "navt/smt.hpp"

using namespace navt;

namespace {

int failures = 0;

struct Criterion {
    int id;
    std::string label;
    bool ok = true;
    std::string detail;
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
    ~Criterion() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": "
                  << label << " (" << ms << " ms)"
                  << (ok ? "" : " -- " + detail) << "\n";
        if (!ok) ++failures;
    }
};

struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed) {}
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % (hi - lo + 1));
    }
};

CertifiedSeries random_poly(Rng& rng, const ValuationSpec& val, long maxdeg) {
    std::vector<Rational> c;
    long d = rng.range(0, maxdeg);
    for (long i = 0; i <= d; ++i)
        c.push_back(Rational(rng.range(-30, 30), rng.range(1, 7)));
    if (c.back() == 0) c.back() = 1;
    return CertifiedSeries::polynomial(std::move(c), val);
}

void criterion1() {
    Criterion c{1, "three-conics exact reproduction (p = 2, 5, 7)"};
    for (long p : {2, 5, 7}) {
        Scenario s = builtin_scenario("three_conics");
        s.val = ValuationSpec::padic(p);
        VerificationReport r = verify(s);
        Interval dom{Rational(0), Rational(10)};
        c.require(r.T == PLFun::linear(1, 0, dom), "T != t");
        c.require(r.m_funs.size() == 3, "missing m functions");
        c.require(r.m_funs[0] == PLFun::linear(1, 0, dom), "m1 != t");
        c.require(r.m_funs[1] == PLFun::linear(2, 0, dom), "m2 != 2t");
        c.require(r.m_funs[2] == PLFun::linear(1, 0, dom), "m3 != t");
        c.require(r.lhs == PLFun::linear(2, 0, dom), "lhs != 2t");
        const auto& nb = r.bound(BoundSpec::Theorem::new_bound);
        const auto& qb = r.bound(BoundSpec::Theorem::quang);
        c.require(nb.c_min == 0, "new-bound C_min != 0");
        c.require(nb.spec.coefficient == 2 && qb.spec.coefficient == 3,
                  "coefficients not (2, 3)");
        c.require(r.profile.t_0() == 1 && r.profile.t_minus1() == 3,
                  "t-sequence wrong");
        c.require(r.alpha_value == 1, "alpha != 1");
        c.require(r.m_record.M == 1 &&
                      r.m_record.status ==
                          MultiplicityRecord::Status::certified,
                  "M != 1 certified");
    }
}

void criterion2() {
    Criterion c{2, "First Main Theorem constancy on 100 random scenarios"};
    Rng rng(0xabcdef12345ull);
    long primes[] = {2, 3, 5};
    Interval dom{Rational(0), Rational(8)};
    int done = 0, guard = 0;
    while (done < 100 && guard < 3000) {
        ++guard;
        auto val = ValuationSpec::padic(primes[rng.range(0, 2)]);
        int N = static_cast<int>(rng.range(1, 3));
        std::vector<CertifiedSeries> coords;
        for (int i = 0; i <= N; ++i) {
            std::vector<Rational> cc;
            for (long k = 0, d = rng.range(0, 3); k <= d; ++k)
                cc.push_back(rng.range(-9, 9));
            coords.push_back(CertifiedSeries::polynomial(cc, val));
        }
        MPoly Q = MPoly::zero(N + 1);
        long deg = rng.range(1, 4);
        for (int t = 0; t < 4; ++t) {
            Monomial m(static_cast<size_t>(N) + 1, 0);
            long left = deg;
            for (int v = 0; v <= N; ++v) {
                long e = rng.range(0, left);
                m[v] = static_cast<int>(e);
                left -= e;
            }
            m[N] += static_cast<int>(left);
            Q += MPoly::term(N + 1, m, Rational(rng.range(-5, 5)));
        }
        if (Q.is_zero()) continue;
        try {
            auto f = AnalyticMap::make(coords);
            auto d = fmt_defect(f, Hypersurface{"D", make_form(Q)}, dom);
            c.require(d.fn.is_constant(), "m + N - d*T not constant");
            ++done;
        } catch (const Error&) {
            continue;
        }
    }
    c.require(done == 100, "could not build 100 scenarios");
}

void criterion3() {
    Criterion c{3, "Gauss multiplicativity and integer-slope law (200 pairs)"};
    Rng rng(0x1122334455ull);
    Interval dom{Rational(0), Rational(10)};
    long primes[] = {2, 3, 5};
    for (int it = 0; it < 200; ++it) {
        auto val = ValuationSpec::padic(primes[it % 3]);
        auto f = random_poly(rng, val, 6);
        auto g = random_poly(rng, val, 6);
        auto prod = series_mul(f, g);
        c.require(gauss_norm(prod, dom).fn ==
                      pl_add(gauss_norm(f, dom).fn, gauss_norm(g, dom).fn),
                  "log|fg| != log|f| + log|g|");
        auto gn = gauss_norm(f, dom);
        auto zc = zero_counting(f, dom);
        const auto& xs = gn.fn.breakpoints();
        for (size_t i = 0; i + 1 < xs.size(); ++i) {
            Rational slope = (gn.fn.eval(xs[i + 1]) - gn.fn.eval(xs[i])) /
                             (xs[i + 1] - xs[i]);
            Rational mid = (xs[i] + xs[i + 1]) / 2;
            c.require(denominator(slope) == 1 && slope >= 0,
                      "non-integer or negative slope");
            c.require(slope == Rational(zc.at(mid)),
                      "slope != zero count at that radius");
        }
    }
}

void criterion4() {
    Criterion c{4, "Jensen identity on 100 random certified polynomials"};
    Rng rng(0x777777777ull);
    long primes[] = {2, 3, 5};
    for (int it = 0; it < 100; ++it) {
        auto val = ValuationSpec::padic(primes[it % 3]);
        auto f = random_poly(rng, val, 6);
        Interval dom{Rational(-rng.range(1, 5)), Rational(rng.range(1, 8))};
        c.require(jensen_check(f, dom) == 0, "jensen_check != 0");
    }
}

void criterion5() {
    Criterion c{5, "trivial-valuation sharpness, d = 100"};
    VerificationReport r = verify(builtin_scenario("trivial_valuation_remark"));
    c.require(r.sharpness_ratio == Rational(149, 50), "ratio != 149/50");
    c.require(r.bound(BoundSpec::Theorem::quang).spec.coefficient == 3,
              "quang coefficient != 3");
    c.require(r.sharpness_ratio >= Rational(3) - Rational(2, 100),
              "ratio < 3 - 2/d");
}

void criterion6() {
    Criterion c{6, "builtin series growth hierarchy: T_g(10) = 25, T_gog(10) = 156"};
    auto v2 = ValuationSpec::padic(2);
    const long order = 80;
    auto g = builtin_series("g", v2, order, std::nullopt);
    auto gg = builtin_series("g_compose_g", v2, order, std::nullopt);
    Interval dom{Rational(0), Rational(10)};
    auto Tg = gauss_norm(g, dom);
    auto Tgg = gauss_norm(gg, dom);
    c.require(Tg.certified && Tgg.certified, "norm not certified");
    c.require(Tg.fn.eval(10) == 25, "T_g(10) != 25");
    c.require(Tgg.fn.eval(10) == 156, "T_gog(10) != 156");
    c.require(Tg.fn.eval(10) / Tgg.fn.eval(10) < Rational(2, 10),
              "growth ratio not < 0.2");

    // independent oracle: direct truncated composition, then brute-force
    // envelope maximization over the head at t = 10
    std::vector<Rational> gh, head(order + 1, Rational(0)), acc{1};
    for (long n = 0; n <= order; ++n)
        gh.push_back(Rational(Int(1) << (n * n)));
    for (long m = 0; m <= 40; ++m) {
        Rational am(Int(1) << (m * m));
        for (size_t i = 0; i < acc.size() && i <= order; ++i)
            head[i] += am * acc[i];
        std::vector<Rational> nxt(
            std::min(acc.size() + gh.size() - 1, static_cast<size_t>(order) + 1),
            Rational(0));
        for (size_t i = 0; i < acc.size(); ++i)
            for (size_t j = 0; j < gh.size() && i + j < nxt.size(); ++j)
                nxt[i + j] += acc[i] * gh[j];
        acc = std::move(nxt);
    }
    Rational best(0);
    for (long n = 0; n <= order; ++n) {
        if (head[n] == 0) continue;
        Rational v = Rational(10 * n) - Rational(*v2.valuation(head[n]));
        best = std::max(best, v);
        if (head[n] != gg.coeffs[n]) c.require(false, "head mismatch");
    }
    c.require(best == 156, "oracle envelope max != 156");
}

void criterion7() {
    Criterion c{7, "position engine vs combinatorial oracle (30 arrangements)"};
    SpaceSpec p2{2, {}};
    int count = 0;
    // pencils: q lines through (0,0,1) -> t_0 = 1, t_{-1} = q
    for (int q = 2; q <= 9; ++q) {
        std::vector<Hypersurface> lines;
        for (int i = 0; i < q; ++i)
            lines.push_back({"L", make_form(parse_form_expr(
                                      i == 0 ? "X0"
                                             : "X0 + " + std::to_string(i) +
                                                   "*X1",
                                      3))});
        auto prof = t_sequence(p2, lines);
        c.require(prof.t_0() == 1 && prof.t_minus1() == q,
                  "pencil invariants wrong (q=" + std::to_string(q) + ")");
        ++count;
    }
    // generic tangent lines to a conic: t_0 = 1, t_{-1} = 2
    for (int q = 3; q <= 9; ++q) {
        std::vector<Hypersurface> lines;
        for (int i = 1; i <= q; ++i)
            lines.push_back(
                {"T", make_form(parse_form_expr(
                          std::to_string(i * i) + "*X0 - " +
                              std::to_string(2 * i) + "*X1 + X2",
                          3))});
        auto prof = t_sequence(p2, lines);
        c.require(prof.t_0() == 1 && prof.t_minus1() == 2 &&
                      prof.general_position,
                  "tangent-family invariants wrong");
        ++count;
    }
    // pencil of size k plus q-k generic tangents: t_{-1} = max(2, k)
    for (int q = 4; q <= 9; ++q)
        for (int k = 2; k <= 4; ++k) {
            std::vector<Hypersurface> lines;
            for (int i = 0; i < k; ++i)
                lines.push_back({"L", make_form(parse_form_expr(
                                          i == 0 ? "X0"
                                                 : "X0 + " +
                                                       std::to_string(i) +
                                                       "*X1",
                                          3))});
            for (int i = 1; i <= q - k; ++i)
                lines.push_back(
                    {"T", make_form(parse_form_expr(
                              std::to_string(i * i) + "*X0 - " +
                                  std::to_string(2 * i) + "*X1 + X2",
                              3))});
            auto prof = t_sequence(p2, lines);
            c.require(prof.t_0() == 1, "mixed-family t_0 wrong");
            c.require(prof.t_minus1() == std::max(2, k),
                      "mixed-family t_{-1} wrong");
            ++count;
        }
    c.require(count >= 30, "fewer than 30 arrangements");
    // order cross-check on every test ideal
    MPoly q1 = parse_form_expr("X0*X1 - X2^2", 3);
    MPoly q2 = parse_form_expr("X0*X2 - X1^2", 3);
    std::vector<std::vector<MPoly>> ideals = {
        {q1, q2},
        {parse_form_expr("X0", 3)},
        {parse_form_expr("X0", 3), parse_form_expr("X1", 3),
         parse_form_expr("X2", 3)},
        {parse_form_expr("X0*X1", 3), parse_form_expr("X1*X2", 3)},
        {q1, parse_form_expr("X1", 3)},
    };
    for (const auto& gens : ideals)
        c.require(projective_dimension(gens, MonOrder::grevlex) ==
                      projective_dimension(gens, MonOrder::lex),
                  "grevlex/lex dimension mismatch");
}

void criterion8() {
    Criterion c{8, "recovery properties over 500 fuzzed triples"};
    Rng rng(0x5eed5eed5ull);
    int checked = 0;
    while (checked < 500) {
        int n = static_cast<int>(rng.range(1, 4));
        int q = static_cast<int>(rng.range(n + 1, n + 6));
        PositionProfile prof;
        prof.q = q;
        prof.n = n;
        bool gp = rng.range(0, 1) == 1;
        if (gp) {
            for (int m = -1; m < n; ++m)
                prof.t_seq.push_back(std::min(n - m - 1, q));
            prof.general_position = true;
        } else {
            int prev = static_cast<int>(rng.range(0, q));
            prof.t_seq.push_back(prev);
            for (int m = 0; m < n; ++m) {
                prev = static_cast<int>(rng.range(0, prev));
                prof.t_seq.push_back(prev);
            }
        }
        if (prof.t_minus1() - prof.t_0() > q) continue;
        MultiplicityRecord M{static_cast<int>(rng.range(1, 3)),
                             MultiplicityRecord::Status::assumed, ""};
        std::vector<long> degs;
        bool all_one = rng.range(0, 3) == 0;
        for (int j = 0; j < q; ++j)
            degs.push_back(all_one ? 1 : rng.range(1, 4));
        Rational a = alpha(prof, M, degs);
        c.require(Rational(prof.t_0()) + a <= Rational(prof.t_minus1()),
                  "t_0 + alpha > t_{-1}");
        auto bounds = bound_coefficients(prof, M, degs, SpaceSpec{2, {}});
        if (prof.general_position) {
            Rational mx(0);
            for (long d : degs)
                mx = std::max(mx, std::min(Rational(M.M, d), Rational(1)));
            c.require(bounds[1].coefficient == Rational(n - 1) + mx,
                      "new != adjusted levin in general position");
            if (all_one)
                c.require(bounds[1].coefficient == Rational(prof.t_minus1()),
                          "degree-1 case: new != t_{-1}");
        }
        ++checked;
    }
}

void criterion9() {
    Criterion c{9, "Nullstellensatz certificates and tangent-line M = 2"};
    Rng rng(0xc0ffee123ull);
    MPoly q1 = parse_form_expr("X0*X1 - X2^2", 3);
    std::vector<MPoly> vars{parse_form_expr("X0", 3),
                            parse_form_expr("X1", 3),
                            parse_form_expr("X2", 3)};
    int done = 0, guard = 0;
    while (done < 20 && guard < 500) {
        ++guard;
        std::vector<MPoly> gens{q1};
        for (int k = 0; k < 2; ++k)
            gens.push_back(parse_form_expr(
                std::to_string(rng.range(-3, 3)) + "*X0 + " +
                    std::to_string(rng.range(-3, 3)) + "*X1 + " +
                    std::to_string(rng.range(1, 3)) + "*X2",
                3));
        if (projective_dimension(gens) != -1) continue;
        auto cert = nullstellensatz_certificate(gens, vars);
        c.require(cert.verify(), "certificate does not re-expand to zero");
        ++done;
    }
    c.require(done == 20, "fewer than 20 empty arrangements");

    VerificationReport r = verify(builtin_scenario("tangent_line_M2"));
    c.require(r.m_record.M == 2 &&
                  r.m_record.status == MultiplicityRecord::Status::certified,
              "tangent-line M != 2 certified");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) {
        // the scenario corpus on disk must match the builtin registry
        Criterion c{0, "scenario corpus round-trips against the registry"};
        for (const auto& name : builtin_scenario_names()) {
            std::ifstream in(std::string(argv[1]) + "/" + name + ".json");
            c.require(in.good(), "missing scenario file " + name);
            if (!in.good()) continue;
            std::stringstream ss;
            ss << in.rdbuf();
            c.require(parse_scenario(ss.str()) == builtin_scenario(name),
                      "scenario file " + name + " differs from the builtin");
        }
    }
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    return failures == 0 ? 0 : 1;
}
