#ifndef NAVT_SCENARIO_HPP
#define NAVT_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include "navt/projective.hpp"

namespace navt {

struct ScenarioError : Error {
    using Error::Error;
};

/// One map coordinate: either a polynomial expression in z, or a named
/// builtin series with a truncation order and optional tail bound override.
struct CoordSource {
    enum class Kind { expr, builtin };
    Kind kind = Kind::expr;
    std::vector<Rational> poly;  // parsed coefficients (kind == expr)
    std::string builtin_name;
    long order = 0;
    std::optional<TailBound> tail;

    bool operator==(const CoordSource&) const = default;
};

struct ScenarioOptions {
    Interval t_domain{Rational(0), Rational(10)};
    std::optional<int> assumed_M;
    bool normalize_coeffs = false;
    Caps caps;

    bool operator==(const ScenarioOptions& o) const {
        return t_domain == o.t_domain && assumed_M == o.assumed_M &&
               normalize_coeffs == o.normalize_coeffs &&
               caps.max_subset_size == o.caps.max_subset_size &&
               caps.max_nullstellensatz_power ==
                   o.caps.max_nullstellensatz_power &&
               caps.hyperplane_lattice_radius ==
                   o.caps.hyperplane_lattice_radius;
    }
};

struct Scenario {
    std::string name;
    ValuationSpec val;
    int N = 0;
    std::vector<MPoly> x_ideal;
    std::vector<CoordSource> coords;  // N+1 entries
    std::vector<Hypersurface> hypersurfaces;
    ScenarioOptions options;

    SpaceSpec space() const;
    AnalyticMap build_map() const;
    std::vector<long> degrees() const;

    bool operator==(const Scenario& o) const;
};

/// Parse / serialize the JSON scenario schema.
Scenario parse_scenario(const std::string& text);
std::string serialize_scenario(const Scenario& s);

/// Builtin example-scenario registry.
std::vector<std::string> builtin_scenario_names();
Scenario builtin_scenario(const std::string& name);

/// Builtin series by name ("g", "g_compose_g"), truncated at `order`.
CertifiedSeries builtin_series(const std::string& name,
                               const ValuationSpec& val, long order,
                               const std::optional<TailBound>& tail_override);

// Expression grammar: integer and num/den literals, X0..XN or z, + - * ^,
// parentheses. Forms parse to MPoly; series to a coefficient list.
MPoly parse_form_expr(const std::string& text, int nvars);
std::vector<Rational> parse_series_expr(const std::string& text);
std::string form_to_expr(const MPoly& p);
std::string series_to_expr(const std::vector<Rational>& coeffs);

}  // namespace navt

#endif
