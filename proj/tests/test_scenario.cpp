#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "navt/scenario.hpp"

using namespace navt;

namespace {

const char* kMinimal = R"({
  "valuation": {"kind": "p-adic", "p": 5},
  "space": {"N": 2},
  "map": {"coords": ["z", "1", "0"]},
  "hypersurfaces": [{"name": "D", "form": "X0*X1 - X2^2"}]
})";

std::string patched(const std::string& from, const std::string& to) {
    std::string s = kMinimal;
    auto pos = s.find(from);
    REQUIRE(pos != std::string::npos);
    s.replace(pos, from.size(), to);
    return s;
}

}  // namespace

TEST_CASE("parse a minimal scenario") {
    Scenario s = parse_scenario(kMinimal);
    CHECK(s.val.kind == ValuationSpec::Kind::padic);
    CHECK(s.val.p == 5);
    CHECK(s.N == 2);
    REQUIRE(s.coords.size() == 3);
    CHECK(s.coords[0].poly == std::vector<Rational>{0, 1});
    CHECK(s.coords[1].poly == std::vector<Rational>{1});
    CHECK(s.hypersurfaces.size() == 1);
    CHECK(s.hypersurfaces[0].form.degree() == 2);
    CHECK(s.options.t_domain == Interval{Rational(0), Rational(10)});
    CHECK(!s.options.assumed_M);
}

TEST_CASE("parse diagnostics") {
    CHECK_THROWS_WITH_AS(
        parse_scenario(patched("X0*X1 - X2^2", "X0*X1 - X2^2 + X0")),
        doctest::Contains("inhomogeneous"), ScenarioError);
    CHECK_THROWS_WITH_AS(parse_scenario(patched("\"p\": 5", "\"p\": 4")),
                         doctest::Contains("prime"), ScenarioError);
    CHECK_THROWS_WITH_AS(
        parse_scenario(patched("[\"z\", \"1\", \"0\"]", "[\"z\", \"1\"]")),
        doctest::Contains("N+1"), ScenarioError);
    CHECK_THROWS_AS(parse_scenario(patched("\"z\"", "\"X0\"")),
                    ScenarioError);  // series grammar has only z
    CHECK_THROWS_AS(parse_scenario("{not json"), ScenarioError);
    CHECK_THROWS_WITH_AS(
        parse_scenario(patched("{\"kind\": \"p-adic\", \"p\": 5}",
                               "{\"kind\": \"complex\"}")),
        doctest::Contains("valuation.kind"), ScenarioError);
}

TEST_CASE("options parsing") {
    std::string s = patched(
        "\"hypersurfaces\"",
        "\"options\": {\"t_domain\": [\"-1\", \"7/2\"], \"assumed_M\": 2,"
        " \"normalize_coeffs\": true, \"caps\": {\"max_subset_size\": 9}},"
        " \"hypersurfaces\"");
    Scenario sc = parse_scenario(s);
    CHECK(sc.options.t_domain == Interval{Rational(-1), Rational(7, 2)});
    CHECK(sc.options.assumed_M == 2);
    CHECK(sc.options.normalize_coeffs);
    CHECK(sc.options.caps.max_subset_size == 9);
}

TEST_CASE("round trip: parse, serialize, parse") {
    for (const auto& name : builtin_scenario_names()) {
        Scenario a = builtin_scenario(name);
        Scenario b = parse_scenario(serialize_scenario(a));
        CHECK(a == b);
        Scenario c = parse_scenario(serialize_scenario(b));
        CHECK(b == c);
    }
}

TEST_CASE("builtin registry") {
    auto names = builtin_scenario_names();
    REQUIRE(names.size() == 4);
    CHECK_THROWS_AS(builtin_scenario("nonesuch"), ScenarioError);
    Scenario tc = builtin_scenario("three_conics");
    CHECK(tc.hypersurfaces.size() == 3);
    CHECK(tc.degrees() == std::vector<long>{2, 2, 2});
    auto f = tc.build_map();
    CHECK(f.is_polynomial());

    Scenario qs = builtin_scenario("quang_sharp_transcendental");
    CHECK(qs.coords[1].kind == CoordSource::Kind::builtin);
    CHECK(qs.coords[1].builtin_name == "g");
    CHECK(qs.coords[2].tail.has_value());
    CHECK(qs.coords[2].tail->declared);
}

TEST_CASE("builtin series g") {
    auto v2 = ValuationSpec::padic(2);
    auto g = builtin_series("g", v2, 10, std::nullopt);
    CHECK(g.order() == 10);
    CHECK(*coefficient_log_norm(g, 3) == Rational(-9));
    CHECK(g.tail == CertifiedSeries::Tail::bounded);
    CHECK(!g.bound->declared);
    CHECK(g.bound->quad == 1);
    CHECK_THROWS_AS(builtin_series("g", ValuationSpec::trivial(), 5, {}),
                    ScenarioError);
    CHECK_THROWS_AS(builtin_series("h", v2, 5, {}), ScenarioError);
}

TEST_CASE("builtin composition matches a brute-force oracle") {
    auto v2 = ValuationSpec::padic(2);
    const long order = 12;
    auto gg = builtin_series("g_compose_g", v2, order,
                             TailBound{Rational(0), Rational(1), Rational(0),
                                       true});
    // oracle: sum_{m=0}^{40} 2^{m^2} * (truncated g)^m by repeated
    // convolution, all coefficients taken mod nothing -- exact rationals
    std::vector<Rational> acc{1};  // g_trunc^m, starting with m = 0
    std::vector<Rational> head(static_cast<size_t>(order) + 1, Rational(0));
    std::vector<Rational> gh;
    for (long n = 0; n <= order; ++n)
        gh.push_back(Rational(Int(1) << (n * n)));
    for (long m = 0; m <= 40; ++m) {
        Rational am(Int(1) << (m * m));
        for (size_t i = 0; i < acc.size() && i <= static_cast<size_t>(order);
             ++i)
            head[i] += am * acc[i];
        // acc *= g_trunc, truncated at order
        std::vector<Rational> nxt(
            std::min(acc.size() + gh.size() - 1,
                     static_cast<size_t>(order) + 1),
            Rational(0));
        for (size_t i = 0; i < acc.size(); ++i)
            for (size_t j = 0; j < gh.size() && i + j < nxt.size(); ++j)
                nxt[i + j] += acc[i] * gh[j];
        acc = std::move(nxt);
    }
    REQUIRE(gg.coeffs.size() == head.size());
    for (size_t i = 0; i < head.size(); ++i) CHECK(gg.coeffs[i] == head[i]);
}

TEST_CASE("scenario degrees and space") {
    Scenario tc = builtin_scenario("tangent_line_M2");
    CHECK(tc.degrees() == std::vector<long>{2, 1});
    CHECK(tc.space().is_full_space());
    CHECK(tc.options.assumed_M == 2);
}
