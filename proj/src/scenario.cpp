#include "navt/scenario.hpp"

#include <nlohmann/json.hpp>

namespace navt {

using json = nlohmann::ordered_json;

SpaceSpec Scenario::space() const {
    SpaceSpec s;
    s.N = N;
    for (const auto& g : x_ideal) s.x_ideal.push_back(make_form(g));
    return s;
}

std::vector<long> Scenario::degrees() const {
    std::vector<long> d;
    for (const auto& h : hypersurfaces) d.push_back(h.form.degree());
    return d;
}

AnalyticMap Scenario::build_map() const {
    std::vector<CertifiedSeries> cs;
    for (const auto& c : coords) {
        if (c.kind == CoordSource::Kind::expr)
            cs.push_back(CertifiedSeries::polynomial(c.poly, val));
        else
            cs.push_back(builtin_series(c.builtin_name, val, c.order, c.tail));
    }
    return AnalyticMap::make(std::move(cs));
}

bool Scenario::operator==(const Scenario& o) const {
    if (!(name == o.name && val == o.val && N == o.N &&
          x_ideal == o.x_ideal && coords == o.coords &&
          options == o.options))
        return false;
    if (hypersurfaces.size() != o.hypersurfaces.size()) return false;
    for (size_t i = 0; i < hypersurfaces.size(); ++i)
        if (hypersurfaces[i].name != o.hypersurfaces[i].name ||
            !(hypersurfaces[i].form.poly == o.hypersurfaces[i].form.poly))
            return false;
    return true;
}

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
    throw ScenarioError("scenario field \"" + field + "\": " + what);
}

Rational rat_field(const json& j, const std::string& field) {
    if (!j.is_string()) bad(field, "expected a \"num/den\" string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        bad(field, e.what());
    }
}

TailBound parse_tail(const json& j, const std::string& field) {
    if (!j.is_object()) bad(field, "expected an object {quad, lin, cst}");
    TailBound t;
    t.quad = j.contains("quad") ? rat_field(j["quad"], field + ".quad")
                                : Rational(0);
    t.lin = j.contains("lin") ? rat_field(j["lin"], field + ".lin")
                              : Rational(0);
    t.cst = j.contains("cst") ? rat_field(j["cst"], field + ".cst")
                              : Rational(0);
    t.declared = true;
    return t;
}

json tail_to_json(const TailBound& t) {
    return json{{"quad", rational_to_string(t.quad)},
                {"lin", rational_to_string(t.lin)},
                {"cst", rational_to_string(t.cst)}};
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ScenarioError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ScenarioError("scenario must be a JSON object");
    Scenario s;
    s.name = j.value("name", std::string());

    if (!j.contains("valuation") || !j["valuation"].is_object())
        bad("valuation", "required object {kind, p?}");
    const json& v = j["valuation"];
    std::string kind = v.value("kind", std::string());
    if (kind == "p-adic") {
        if (!v.contains("p")) bad("valuation.p", "required for p-adic");
        Int p;
        if (v["p"].is_number_integer())
            p = Int(v["p"].get<long>());
        else if (v["p"].is_string())
            p = Int(v["p"].get<std::string>());
        else
            bad("valuation.p", "expected an integer");
        if (!is_prime(p)) bad("valuation.p", "p must be prime");
        s.val = ValuationSpec::padic(p);
    } else if (kind == "trivial") {
        s.val = ValuationSpec::trivial();
    } else {
        bad("valuation.kind", "expected \"p-adic\" or \"trivial\"");
    }

    if (!j.contains("space") || !j["space"].is_object())
        bad("space", "required object {N, X_ideal?}");
    const json& sp = j["space"];
    if (!sp.contains("N") || !sp["N"].is_number_integer())
        bad("space.N", "expected an integer");
    s.N = sp["N"].get<int>();
    if (s.N < 1) bad("space.N", "need N >= 1");
    if (sp.contains("X_ideal")) {
        if (!sp["X_ideal"].is_array())
            bad("space.X_ideal", "expected an array of form strings");
        for (const auto& e : sp["X_ideal"]) {
            if (!e.is_string()) bad("space.X_ideal", "expected a string");
            MPoly g = parse_form_expr(e.get<std::string>(), s.N + 1);
            if (!g.is_homogeneous())
                bad("space.X_ideal", "inhomogeneous: " + e.get<std::string>());
            s.x_ideal.push_back(std::move(g));
        }
    }

    if (!j.contains("map") || !j["map"].is_object() ||
        !j["map"].contains("coords") || !j["map"]["coords"].is_array())
        bad("map.coords", "required array of N+1 coordinates");
    for (const auto& e : j["map"]["coords"]) {
        CoordSource c;
        if (e.is_string()) {
            c.kind = CoordSource::Kind::expr;
            c.poly = parse_series_expr(e.get<std::string>());
        } else if (e.is_object()) {
            c.kind = CoordSource::Kind::builtin;
            if (!e.contains("builtin") || !e["builtin"].is_string())
                bad("map.coords", "builtin entry needs a \"builtin\" name");
            c.builtin_name = e["builtin"].get<std::string>();
            if (!e.contains("order") || !e["order"].is_number_integer())
                bad("map.coords", "builtin entry needs an integer \"order\"");
            c.order = e["order"].get<long>();
            if (c.order < 0) bad("map.coords", "order must be nonnegative");
            if (e.contains("tail"))
                c.tail = parse_tail(e["tail"], "map.coords.tail");
        } else {
            bad("map.coords", "expected a string or a builtin object");
        }
        s.coords.push_back(std::move(c));
    }
    if (static_cast<int>(s.coords.size()) != s.N + 1)
        bad("map.coords", "need exactly N+1 coordinates");

    if (!j.contains("hypersurfaces") || !j["hypersurfaces"].is_array() ||
        j["hypersurfaces"].empty())
        bad("hypersurfaces", "required nonempty array of {name, form}");
    for (const auto& e : j["hypersurfaces"]) {
        if (!e.is_object() || !e.contains("name") || !e.contains("form"))
            bad("hypersurfaces", "each entry needs name and form");
        std::string form = e["form"].get<std::string>();
        MPoly p = parse_form_expr(form, s.N + 1);
        if (!p.is_homogeneous()) bad("hypersurfaces", "inhomogeneous: " + form);
        if (p.is_zero()) bad("hypersurfaces", "zero form: " + form);
        s.hypersurfaces.push_back(
            {e["name"].get<std::string>(), make_form(std::move(p))});
    }

    if (j.contains("options")) {
        const json& o = j["options"];
        if (!o.is_object()) bad("options", "expected an object");
        if (o.contains("t_domain")) {
            if (!o["t_domain"].is_array() || o["t_domain"].size() != 2)
                bad("options.t_domain", "expected [\"lo\", \"hi\"]");
            s.options.t_domain = {rat_field(o["t_domain"][0], "t_domain.lo"),
                                  rat_field(o["t_domain"][1], "t_domain.hi")};
            if (!s.options.t_domain.nondegenerate())
                bad("options.t_domain", "need lo < hi");
        }
        if (o.contains("assumed_M")) {
            if (!o["assumed_M"].is_number_integer() ||
                o["assumed_M"].get<int>() < 1)
                bad("options.assumed_M", "expected a positive integer");
            s.options.assumed_M = o["assumed_M"].get<int>();
        }
        if (o.contains("normalize_coeffs")) {
            if (!o["normalize_coeffs"].is_boolean())
                bad("options.normalize_coeffs", "expected a boolean");
            s.options.normalize_coeffs = o["normalize_coeffs"].get<bool>();
        }
        if (o.contains("caps")) {
            const json& c = o["caps"];
            if (!c.is_object()) bad("options.caps", "expected an object");
            if (c.contains("max_subset_size"))
                s.options.caps.max_subset_size =
                    c["max_subset_size"].get<int>();
            if (c.contains("max_nullstellensatz_power"))
                s.options.caps.max_nullstellensatz_power =
                    c["max_nullstellensatz_power"].get<int>();
            if (c.contains("hyperplane_lattice_radius"))
                s.options.caps.hyperplane_lattice_radius =
                    c["hyperplane_lattice_radius"].get<int>();
        }
    }
    return s;
}

std::string serialize_scenario(const Scenario& s) {
    json j;
    if (!s.name.empty()) j["name"] = s.name;
    if (s.val.kind == ValuationSpec::Kind::padic)
        j["valuation"] = {{"kind", "p-adic"}, {"p", s.val.p.str()}};
    else
        j["valuation"] = {{"kind", "trivial"}};
    j["space"] = {{"N", s.N}};
    if (!s.x_ideal.empty()) {
        json arr = json::array();
        for (const auto& g : s.x_ideal) arr.push_back(form_to_expr(g));
        j["space"]["X_ideal"] = arr;
    }
    json coords = json::array();
    for (const auto& c : s.coords) {
        if (c.kind == CoordSource::Kind::expr) {
            coords.push_back(series_to_expr(c.poly));
        } else {
            json e{{"builtin", c.builtin_name}, {"order", c.order}};
            if (c.tail) e["tail"] = tail_to_json(*c.tail);
            coords.push_back(e);
        }
    }
    j["map"] = {{"coords", coords}};
    j["hypersurfaces"] = json::array();
    for (const auto& h : s.hypersurfaces)
        j["hypersurfaces"].push_back(
            {{"name", h.name}, {"form", form_to_expr(h.form.poly)}});
    json o;
    o["t_domain"] = {rational_to_string(s.options.t_domain.lo),
                     rational_to_string(s.options.t_domain.hi)};
    if (s.options.assumed_M) o["assumed_M"] = *s.options.assumed_M;
    if (s.options.normalize_coeffs) o["normalize_coeffs"] = true;
    Caps dflt;
    json caps;
    if (s.options.caps.max_subset_size != dflt.max_subset_size)
        caps["max_subset_size"] = s.options.caps.max_subset_size;
    if (s.options.caps.max_nullstellensatz_power !=
        dflt.max_nullstellensatz_power)
        caps["max_nullstellensatz_power"] =
            s.options.caps.max_nullstellensatz_power;
    if (s.options.caps.hyperplane_lattice_radius !=
        dflt.hyperplane_lattice_radius)
        caps["hyperplane_lattice_radius"] =
            s.options.caps.hyperplane_lattice_radius;
    if (!caps.empty()) o["caps"] = caps;
    j["options"] = o;
    return j.dump(2);
}

}  // namespace navt
