// navt: scenario runner for non-Archimedean value distribution checks.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "navt/smt.hpp"

namespace {

using namespace navt;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitBoundViolated = 2;
constexpr int kExitUncertified = 3;

Scenario load_scenario(const std::string& path) {
    if (std::ifstream in(path); in) {
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_scenario(buf.str());
    }
    throw Error("cannot read scenario file: " + path);
}

struct Grid {
    std::vector<Rational> ts;
};

Grid parse_grid(const std::string& text, const Interval& dom) {
    auto c1 = text.find(':'), c2 = text.rfind(':');
    if (c1 == std::string::npos || c2 == c1)
        throw Error("grid must be a:b:k");
    Rational a = parse_rational(text.substr(0, c1));
    Rational b = parse_rational(text.substr(c1 + 1, c2 - c1 - 1));
    long k = std::stol(text.substr(c2 + 1));
    if (k < 2 || !(a < b)) throw Error("grid needs a < b and k >= 2");
    if (a < dom.lo || b > dom.hi)
        throw Error("grid exceeds the scenario t-domain");
    Grid g;
    for (long i = 0; i < k; ++i)
        g.ts.push_back(a + (b - a) * Rational(i, k - 1));
    return g;
}

void write_out(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

std::string theorem_label(BoundSpec::Theorem t) {
    switch (t) {
        case BoundSpec::Theorem::quang: return "quang";
        case BoundSpec::Theorem::levin: return "levin";
        case BoundSpec::Theorem::new_bound: return "new";
    }
    return "?";
}

int cmd_invariants(const Scenario& sc, bool as_json) {
    SpaceSpec space = sc.space();
    PositionProfile profile =
        t_sequence(space, sc.hypersurfaces, sc.options.caps);
    MultiplicityRecord M = certify_M(space, sc.hypersurfaces, profile,
                                     sc.options.assumed_M, sc.options.caps);
    Rational a = alpha(profile, M, sc.degrees());
    auto bounds = bound_coefficients(profile, M, sc.degrees(), space);
    if (as_json) {
        std::ostringstream out;
        out << "{\n  \"q\": " << profile.q << ",\n  \"n\": " << profile.n
            << ",\n  \"t_seq\": [";
        for (size_t i = 0; i < profile.t_seq.size(); ++i)
            out << (i ? ", " : "") << profile.t_seq[i];
        out << "],\n  \"general_position\": "
            << (profile.general_position ? "true" : "false")
            << ",\n  \"M\": " << M.M << ",\n  \"M_status\": \""
            << (M.status == MultiplicityRecord::Status::certified
                    ? "certified"
                    : "assumed")
            << "\",\n  \"alpha\": \"" << rational_to_string(a)
            << "\",\n  \"coefficients\": {";
        bool first = true;
        for (const auto& b : bounds) {
            if (!b.applicable) continue;
            out << (first ? "" : ", ") << "\"" << theorem_label(b.theorem)
                << "\": \"" << rational_to_string(b.coefficient) << "\"";
            first = false;
        }
        out << "}\n}\n";
        std::cout << out.str();
        return kExitOk;
    }
    std::cout << "q = " << profile.q << ", n = " << profile.n << "\n";
    for (int m = -1; m < profile.n; ++m)
        std::cout << "t_" << m << " = " << profile.t(m) << "\n";
    std::cout << "general position: "
              << (profile.general_position ? "yes" : "no") << "\n";
    std::cout << "M = " << M.M << " ("
              << (M.status == MultiplicityRecord::Status::certified
                      ? "certified"
                      : "assumed")
              << (M.witness.empty() ? "" : "; " + M.witness) << ")\n";
    std::cout << "alpha = " << rational_to_string(a) << "\n";
    for (const auto& b : bounds) {
        std::cout << theorem_label(b.theorem) << " coefficient: ";
        if (b.applicable)
            std::cout << rational_to_string(b.coefficient) << "\n";
        else
            std::cout << "not applicable (" << b.note << ")\n";
    }
    return kExitOk;
}

int cmd_evaluate(const Scenario& sc, const std::string& grid_spec,
                 const std::string& csv_path) {
    const Interval dom = sc.options.t_domain;
    Grid grid = parse_grid(grid_spec, dom);
    AnalyticMap f = sc.build_map();
    PLFun T = characteristic(f, dom).fn;
    std::vector<PLFun> m, n;
    std::vector<bool> has_n;
    for (const auto& D : sc.hypersurfaces) {
        m.push_back(proximity(f, D, dom, sc.options.normalize_coeffs).fn);
        try {
            n.push_back(counting(f, D, dom));
            has_n.push_back(true);
        } catch (const Error&) {
            n.push_back(PLFun());
            has_n.push_back(false);
        }
    }
    std::ostringstream out;
    out << "t,T";
    for (size_t j = 0; j < m.size(); ++j) out << ",m_" << (j + 1);
    for (size_t j = 0; j < n.size(); ++j) out << ",N_" << (j + 1);
    out << "\n";
    for (const auto& t : grid.ts) {
        out << rational_to_string(t) << "," << rational_to_string(T.eval(t));
        for (const auto& mj : m) out << "," << rational_to_string(mj.eval(t));
        for (size_t j = 0; j < n.size(); ++j)
            out << ","
                << (has_n[j] ? rational_to_string(n[j].eval(t)) : "NA");
        out << "\n";
    }
    write_out(csv_path, out.str());
    return kExitOk;
}

// Display-only rasterization of the exact report.
std::string render_svg(const VerificationReport& r) {
    const double W = 640, H = 400, PAD = 40;
    std::vector<std::pair<std::string, const PLFun*>> curves{{"lhs", &r.lhs}};
    std::vector<PLFun> rhs;
    for (const auto& b : r.bounds)
        if (b.spec.applicable)
            rhs.push_back(pl_add(
                pl_scale(r.T, b.spec.coefficient),
                PLFun::constant(b.c_min, r.T.domain())));
    for (size_t i = 0; i < rhs.size(); ++i)
        curves.push_back({theorem_label(r.bounds[i].spec.theorem), &rhs[i]});
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    auto upd = [&](const PLFun& f) {
        for (size_t i = 0; i < f.breakpoints().size(); ++i) {
            double x = static_cast<double>(f.breakpoints()[i]);
            double y = static_cast<double>(f.values()[i]);
            xmin = std::min(xmin, x), xmax = std::max(xmax, x);
            ymin = std::min(ymin, y), ymax = std::max(ymax, y);
        }
    };
    for (auto& [_, f] : curves) upd(*f);
    if (xmax <= xmin) xmax = xmin + 1;
    if (ymax <= ymin) ymax = ymin + 1;
    auto X = [&](double x) { return PAD + (x - xmin) / (xmax - xmin) * (W - 2 * PAD); };
    auto Y = [&](double y) { return H - PAD - (y - ymin) / (ymax - ymin) * (H - 2 * PAD); };
    const char* colors[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd"};
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
        << "\" height=\"" << H << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    int ci = 0;
    for (auto& [label, f] : curves) {
        out << "<polyline fill=\"none\" stroke=\"" << colors[ci % 4]
            << "\" stroke-width=\"1.5\" points=\"";
        for (size_t i = 0; i < f->breakpoints().size(); ++i)
            out << X(static_cast<double>(f->breakpoints()[i])) << ","
                << Y(static_cast<double>(f->values()[i])) << " ";
        out << "\"/>\n<text x=\"" << (W - PAD + 2) << "\" y=\""
            << Y(static_cast<double>(f->values().back())) << "\" font-size=\"10\" fill=\""
            << colors[ci % 4] << "\">" << label << "</text>\n";
        ++ci;
    }
    out << "</svg>\n";
    return out.str();
}

int cmd_verify(const Scenario& sc, bool as_json, const std::string& svg_path,
               bool require_certified) {
    VerificationReport r = verify(sc);
    if (!svg_path.empty()) write_out(svg_path, render_svg(r));
    if (as_json) {
        std::cout << report_to_json(r) << "\n";
    } else {
        for (const auto& b : r.bounds) {
            std::cout << theorem_label(b.spec.theorem) << ": ";
            if (!b.spec.applicable) {
                std::cout << "not applicable (" << b.spec.note << ")\n";
                continue;
            }
            std::cout << "lhs <= " << rational_to_string(b.spec.coefficient)
                      << "*T + " << rational_to_string(b.c_min) << "  ["
                      << (b.holds ? "holds" : "VIOLATED") << "]\n";
        }
        std::cout << "sharpness ratio: "
                  << rational_to_string(r.sharpness_ratio) << "\n";
        std::cout << (r.fully_certified ? "fully certified"
                                        : "conditionally verified")
                  << "\n";
        for (const auto& msg : r.notices) std::cout << "note: " << msg << "\n";
    }
    for (const auto& b : r.bounds)
        if (b.spec.applicable && !b.holds) return kExitBoundViolated;
    if (require_certified && !r.fully_certified) return kExitUncertified;
    return kExitOk;
}

int cmd_fmt_check(const Scenario& sc) {
    const Interval dom = sc.options.t_domain;
    AnalyticMap f = sc.build_map();
    for (const auto& D : sc.hypersurfaces) {
        try {
            FmtDefect d = fmt_defect(f, D, dom);
            std::cout << D.name
                      << ": m + N - d*T = " << rational_to_string(d.constant)
                      << "\n";
        } catch (const Error& e) {
            std::cout << D.name << ": unavailable (" << e.what() << ")\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-Archimedean value distribution toolkit"};
    app.require_subcommand(1);

    std::string scenario_path, grid = "0:10:11", csv_path, svg_path, at = "1";
    std::string example_name;
    bool as_json = false, require_certified = false;

    auto* inv = app.add_subcommand("invariants", "arrangement invariants");
    inv->add_option("scenario", scenario_path)->required();
    inv->add_flag("--json", as_json);

    auto* ev = app.add_subcommand("evaluate", "sample T, m_j, N_j on a grid");
    ev->add_option("scenario", scenario_path)->required();
    ev->add_option("--grid", grid, "a:b:k");
    ev->add_option("--csv", csv_path, "output file (default stdout)");

    auto* ver = app.add_subcommand("verify", "check the three bounds");
    ver->add_option("scenario", scenario_path)->required();
    ver->add_flag("--json", as_json);
    ver->add_option("--svg", svg_path);
    ver->add_flag("--require-certified", require_certified);

    auto* fmt = app.add_subcommand("fmt-check", "first main theorem defects");
    fmt->add_option("scenario", scenario_path)->required();

    auto* tr = app.add_subcommand("trace", "three-piece proof decomposition");
    tr->add_option("scenario", scenario_path)->required();
    tr->add_option("--at", at, "log-radius t")->required();

    auto* ex = app.add_subcommand("examples", "builtin scenario registry");
    ex->require_subcommand(1);
    ex->add_subcommand("list", "list builtin scenarios");
    auto* exrun = ex->add_subcommand("run", "verify a builtin scenario");
    exrun->add_option("name", example_name)->required();
    exrun->add_flag("--json", as_json);
    exrun->add_option("--svg", svg_path);
    exrun->add_flag("--require-certified", require_certified);

    CLI11_PARSE(app, argc, argv);

    try {
        if (inv->parsed())
            return cmd_invariants(load_scenario(scenario_path), as_json);
        if (ev->parsed())
            return cmd_evaluate(load_scenario(scenario_path), grid, csv_path);
        if (ver->parsed())
            return cmd_verify(load_scenario(scenario_path), as_json, svg_path,
                              require_certified);
        if (fmt->parsed()) return cmd_fmt_check(load_scenario(scenario_path));
        if (tr->parsed()) {
            Scenario sc = load_scenario(scenario_path);
            std::cout << trace_to_json(proof_trace(sc, parse_rational(at)))
                      << "\n";
            return kExitOk;
        }
        if (ex->parsed()) {
            if (ex->get_subcommand("list")->parsed()) {
                for (const auto& n : builtin_scenario_names())
                    std::cout << n << "\n";
                return kExitOk;
            }
            return cmd_verify(builtin_scenario(example_name), as_json,
                              svg_path, require_certified);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
