#include "navt/scenario.hpp"

namespace navt {

namespace {

// g(z) = sum_n (a^n z)^n with a = p: coefficient of z^n is p^{n^2}.
CertifiedSeries g_series(const ValuationSpec& val, long order,
                         const std::optional<TailBound>& tail) {
    CertifiedSeries s;
    s.val = val;
    for (long n = 0; n <= order; ++n)
        s.coeffs.push_back(Rational(pow(val.p, static_cast<unsigned>(n * n))));
    s.tail = CertifiedSeries::Tail::bounded;
    // v(coeff n) = n^2 * v(a) exactly, so the quadratic bound is derived.
    s.bound = tail ? *tail : TailBound{Rational(1), Rational(0), Rational(0),
                                       false};
    return s;
}

// g o g via truncated composition. Outer terms beyond degree 40 only touch
// head coefficients at valuation > 1600, far above every head valuation at
// order <= 80, and all contributions are positive, so the head valuations
// are exact.
CertifiedSeries g_compose_g_series(const ValuationSpec& val, long order,
                                   const std::optional<TailBound>& tail) {
    if (!tail && order < 80)
        throw ScenarioError(
            "builtin g_compose_g: the default tail bound needs order >= 80");
    const long outer_cap = 40;
    std::vector<Rational> outer;
    for (long m = 0; m <= outer_cap; ++m)
        outer.push_back(Rational(pow(val.p, static_cast<unsigned>(m * m))));
    CertifiedSeries out = series_compose(
        CertifiedSeries::polynomial(std::move(outer), val),
        g_series(val, order, std::nullopt), order);
    out.tail = CertifiedSeries::Tail::bounded;
    out.bound = tail ? *tail
                     : TailBound{Rational(0), Rational(11), Rational(-225),
                                 true};
    return out;
}

const char* kThreeConics = R"({
  "name": "three_conics",
  "valuation": {"kind": "p-adic", "p": 5},
  "space": {"N": 2},
  "map": {"coords": ["z", "1", "0"]},
  "hypersurfaces": [
    {"name": "D1", "form": "X0*X1 - X2^2"},
    {"name": "D2", "form": "X0*X2 - X1^2"},
    {"name": "D3", "form": "X0*X1 + 3*X0*X2 - 3*X1^2 - X2^2"}
  ],
  "options": {"t_domain": ["0", "10"]}
})";

const char* kQuangSharp = R"({
  "name": "quang_sharp_transcendental",
  "valuation": {"kind": "p-adic", "p": 2},
  "space": {"N": 2},
  "map": {"coords": [
    "1",
    {"builtin": "g", "order": 80},
    {"builtin": "g_compose_g", "order": 80,
     "tail": {"quad": "0", "lin": "11", "cst": "-225"}}
  ]},
  "hypersurfaces": [
    {"name": "H1", "form": "X0"},
    {"name": "H2", "form": "X1"},
    {"name": "H3", "form": "X0 + X1"}
  ],
  "options": {"t_domain": ["0", "10"]}
})";

const char* kTrivialRemark = R"({
  "name": "trivial_valuation_remark",
  "valuation": {"kind": "trivial"},
  "space": {"N": 2},
  "map": {"coords": ["1", "z", "z^100"]},
  "hypersurfaces": [
    {"name": "H1", "form": "X0"},
    {"name": "H2", "form": "X1"},
    {"name": "H3", "form": "X0 + X1"}
  ],
  "options": {"t_domain": ["0", "10"]}
})";

const char* kTangentLine = R"({
  "name": "tangent_line_M2",
  "valuation": {"kind": "p-adic", "p": 5},
  "space": {"N": 2},
  "map": {"coords": ["z", "1", "0"]},
  "hypersurfaces": [
    {"name": "Q", "form": "X0*X1 - X2^2"},
    {"name": "L", "form": "X1"}
  ],
  "options": {"t_domain": ["0", "10"], "assumed_M": 2}
})";

}  // namespace

CertifiedSeries builtin_series(const std::string& name,
                               const ValuationSpec& val, long order,
                               const std::optional<TailBound>& tail_override) {
    if (val.kind != ValuationSpec::Kind::padic)
        throw ScenarioError("builtin series \"" + name +
                            "\" needs a p-adic valuation");
    if (order < 0) throw ScenarioError("builtin series: negative order");
    if (name == "g") return g_series(val, order, tail_override);
    if (name == "g_compose_g")
        return g_compose_g_series(val, order, tail_override);
    throw ScenarioError("unknown builtin series \"" + name + "\"");
}

std::vector<std::string> builtin_scenario_names() {
    return {"three_conics", "quang_sharp_transcendental",
            "trivial_valuation_remark", "tangent_line_M2"};
}

Scenario builtin_scenario(const std::string& name) {
    if (name == "three_conics") return parse_scenario(kThreeConics);
    if (name == "quang_sharp_transcendental")
        return parse_scenario(kQuangSharp);
    if (name == "trivial_valuation_remark")
        return parse_scenario(kTrivialRemark);
    if (name == "tangent_line_M2") return parse_scenario(kTangentLine);
    throw ScenarioError("unknown builtin scenario \"" + name + "\"");
}

}  // namespace navt
