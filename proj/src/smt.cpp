#include "navt/smt.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace navt {

using nlohmann::json;

const BoundResult& VerificationReport::bound(BoundSpec::Theorem th) const {
    for (const auto& b : bounds)
        if (b.spec.theorem == th) return b;
    throw Error("bound not present in report");
}

std::vector<BoundSpec> bound_coefficients(const PositionProfile& profile,
                                          const MultiplicityRecord& M,
                                          const std::vector<long>& degrees,
                                          const SpaceSpec& space) {
    (void)space;
    std::vector<BoundSpec> out;
    out.push_back({BoundSpec::Theorem::quang, Rational(profile.t_minus1()),
                   true, "t_{-1}"});
    Rational a = alpha(profile, M, degrees);
    out.push_back({BoundSpec::Theorem::new_bound,
                   Rational(profile.t_0()) + a, true, "t_0 + alpha"});
    BoundSpec levin{BoundSpec::Theorem::levin, Rational(0), false,
                    "n - 1 + max M/deg; needs general position"};
    if (profile.general_position && profile.n >= 1) {
        Rational mx(0);
        bool first = true;
        for (long d : degrees) {
            Rational v(M.M, d);
            if (first || v > mx) mx = v;
            first = false;
        }
        levin.coefficient = Rational(profile.n - 1) + mx;
        levin.applicable = true;
    }
    out.push_back(levin);
    return out;
}

namespace {

struct Built {
    AnalyticMap map;
    SpaceSpec space;
    PositionProfile profile;
    MultiplicityRecord m_record;
    std::vector<long> degrees;
    GaussNorm T;
    std::vector<GaussNorm> m;
    PLFun lhs;
    bool declared_tail = false;
};

Built build_scenario(const Scenario& sc, const Interval& dom) {
    Built b{AnalyticMap{}, sc.space(), {}, {}, sc.degrees(), {}, {}, {}};
    b.map = sc.build_map();
    b.profile = t_sequence(b.space, sc.hypersurfaces, sc.options.caps);
    b.m_record = certify_M(b.space, sc.hypersurfaces, b.profile,
                           sc.options.assumed_M, sc.options.caps);
    b.T = characteristic(b.map, dom);
    if (b.T.fn.is_constant() && b.map.is_polynomial())
        throw Error("constant map: the theorems require a nonconstant f");
    b.declared_tail = b.T.uses_declared_tail;
    bool first = true;
    for (size_t j = 0; j < sc.hypersurfaces.size(); ++j) {
        GaussNorm mj = proximity(b.map, sc.hypersurfaces[j], dom,
                                 sc.options.normalize_coeffs);
        b.declared_tail |= mj.uses_declared_tail;
        PLFun scaled = pl_scale(mj.fn, Rational(1, b.degrees[j]));
        b.lhs = first ? scaled : pl_add(b.lhs, scaled);
        first = false;
        b.m.push_back(std::move(mj));
    }
    return b;
}

}  // namespace

VerificationReport verify(const Scenario& sc, const Interval& dom) {
    Built b = build_scenario(sc, dom);
    VerificationReport r;
    r.lhs = b.lhs;
    r.T = b.T.fn;
    r.profile = b.profile;
    r.m_record = b.m_record;
    r.alpha_value = alpha(b.profile, b.m_record, b.degrees);
    for (auto& m : b.m) r.m_funs.push_back(m.fn);
    for (size_t j = 0; j < sc.hypersurfaces.size(); ++j) {
        try {
            r.n_funs.push_back(counting(b.map, sc.hypersurfaces[j], dom));
            FmtDefect d = fmt_defect(b.map, sc.hypersurfaces[j], dom);
            r.fmt_constants.push_back(d.constant);
        } catch (const Error&) {
            r.n_funs.push_back(std::nullopt);
            r.fmt_constants.push_back(std::nullopt);
            r.notices.push_back("counting function unavailable for " +
                                sc.hypersurfaces[j].name);
        }
    }
    for (const auto& spec :
         bound_coefficients(b.profile, b.m_record, b.degrees, b.space)) {
        BoundResult br{spec, Rational(0), false};
        if (spec.applicable) {
            br.c_min = pl_min_constant_dominating(
                r.lhs, pl_scale(r.T, spec.coefficient));
            br.holds = true;
        }
        r.bounds.push_back(std::move(br));
    }
    if (r.T.right_slope() == 0)
        throw Error("characteristic has zero growth on the domain");
    r.sharpness_ratio = r.lhs.right_slope() / r.T.right_slope();
    r.fully_certified =
        (b.m_record.status == MultiplicityRecord::Status::certified) &&
        !b.declared_tail && !b.map.reducedness_assumed;
    if (b.m_record.status == MultiplicityRecord::Status::assumed)
        r.notices.push_back("conditionally verified: M is assumed, not "
                            "certified");
    if (b.declared_tail)
        r.notices.push_back("conditionally verified: a declared tail bound "
                            "was used");
    if (b.map.reducedness_assumed)
        r.notices.push_back("reducedness assumed for transcendental "
                            "coordinates");
    return r;
}

VerificationReport verify(const Scenario& sc) {
    return verify(sc, sc.options.t_domain);
}

ProofTrace proof_trace(const Scenario& sc, const Rational& t) {
    const Interval dom = sc.options.t_domain;
    if (!dom.contains(t)) throw Error("trace point outside t domain");
    Built b = build_scenario(sc, dom);
    const int q = b.profile.q;
    const int t0 = b.profile.t_0();
    const int tm1 = b.profile.t_minus1();

    ProofTrace tr;
    tr.t = t;
    for (int j = 0; j < q; ++j)
        tr.sorted.push_back({j, b.m[j].fn.eval(t) / Rational(b.degrees[j])});
    std::stable_sort(tr.sorted.begin(), tr.sorted.end(),
                     [](const ProofTrace::Entry& a, const ProofTrace::Entry& x) {
                         return a.value > x.value;
                     });
    tr.piece_first = tr.piece_middle = tr.piece_last = 0;
    for (int k = 0; k < q; ++k) {
        if (k < t0)
            tr.piece_first += tr.sorted[k].value;
        else if (k < tm1)
            tr.piece_middle += tr.sorted[k].value;
        else
            tr.piece_last += tr.sorted[k].value;
    }

    // Tail piece: Nullstellensatz constant from the first t_{-1}+1 sorted
    // hypersurfaces (their common locus is empty by definition of t_{-1}).
    if (tm1 < q) {
        std::vector<MPoly> gens;
        for (const auto& f : b.space.x_ideal) gens.push_back(f.poly);
        for (int k = 0; k <= tm1; ++k)
            gens.push_back(
                sc.hypersurfaces[tr.sorted[k].index].form.poly);
        std::vector<MPoly> vars;
        for (int v = 0; v <= b.space.N; ++v)
            vars.push_back(MPoly::variable(b.space.N + 1, v));
        try {
            NullstellensatzCertificate cert =
                nullstellensatz_certificate(gens, vars, sc.options.caps);
            Rational c1(0);
            for (const auto& row : cert.cofactors)
                for (const auto& a : row)
                    if (!a.is_zero())
                        c1 = std::max(c1, a.max_coeff_log_norm(
                                              [&](const Rational& c) {
                                                  return b.map.val.valuation(c);
                                              }));
            tr.log_c1 = c1;
            // the smallest of the chosen t_{-1}+1 values obeys m <= log C1
            Rational deg_k(b.degrees[tr.sorted[tm1].index]);
            if (!(tr.sorted[tm1].value <= c1 / deg_k))
                tr.last_piece_ok = false;
        } catch (const Error& e) {
            tr.notices.push_back(std::string("tail-piece certificate: ") +
                                 e.what());
        }
    }

    // Middle piece: m/deg <= min(M/deg,1) T + O(1), entrywise.
    for (int k = t0; k < std::min(tm1, q); ++k) {
        int j = tr.sorted[k].index;
        Rational coeff =
            std::min(Rational(b.m_record.M, b.degrees[j]), Rational(1));
        Rational c = pl_min_constant_dominating(
            pl_scale(b.m[j].fn, Rational(1, b.degrees[j])),
            pl_scale(b.T.fn, coeff));
        tr.middle.push_back({j, tr.sorted[k].value, coeff, c});
    }

    // Hyperplane diagnostic for each middle index: separating hyperplanes
    // through the support of (top t_0 sorted) + D_j, when that support is
    // rational.
    if (!b.space.is_full_space()) {
        if (t0 < std::min(tm1, q))
            tr.notices.push_back(
                "hyperplane diagnostic skipped: X ideal present");
    } else {
        for (int k = t0; k < std::min(tm1, q); ++k) {
            int j = tr.sorted[k].index;
            std::vector<MPoly> gens;
            for (int a = 0; a < t0; ++a)
                gens.push_back(
                    sc.hypersurfaces[tr.sorted[a].index].form.poly);
            gens.push_back(sc.hypersurfaces[j].form.poly);
            int d;
            try {
                d = projective_dimension(gens);
            } catch (const Error&) {
                continue;
            }
            if (d != 0) {
                tr.notices.push_back(
                    "hyperplane diagnostic skipped for " +
                    sc.hypersurfaces[j].name + ": support not 0-dimensional");
                continue;
            }
            RationalPoints pts = rational_points_of_point_scheme(gens);
            if (!pts.complete || pts.points.empty()) {
                tr.notices.push_back(
                    "hyperplane diagnostic skipped for " +
                    sc.hypersurfaces[j].name + ": support not rational");
                continue;
            }
            try {
                SeparatingSystem sys = select_separating_hyperplanes(
                    pts.points,
                    [&](const MPoly& L) {
                        try {
                            restrict_form_to_map(make_form(L), b.map);
                            return true;
                        } catch (const Error&) {
                            return false;
                        }
                    },
                    b.space.N + 1, sc.options.caps);
                PLFun sum = PLFun::constant(Rational(0), dom);
                for (const auto& L : sys.hyperplanes) {
                    Hypersurface h{"H", make_form(L)};
                    sum = pl_add(sum, proximity(b.map, h, dom, false).fn);
                }
                tr.hyperplane_checks.push_back(
                    {j, sum.eval(t), pl_min_constant_dominating(sum, b.T.fn),
                     pts.points.size()});
            } catch (const Error& e) {
                tr.notices.push_back("hyperplane diagnostic failed for " +
                                     sc.hypersurfaces[j].name + ": " +
                                     e.what());
            }
        }
    }
    return tr;
}

// ---- JSON rendering -----------------------------------------------------

namespace {

json plfun_to_json(const PLFun& f) {
    json xs = json::array(), ys = json::array();
    for (const auto& x : f.breakpoints()) xs.push_back(rational_to_string(x));
    for (const auto& y : f.values()) ys.push_back(rational_to_string(y));
    return json{{"breakpoints", xs}, {"values", ys}};
}

std::string theorem_name(BoundSpec::Theorem t) {
    switch (t) {
        case BoundSpec::Theorem::quang: return "quang";
        case BoundSpec::Theorem::levin: return "levin";
        case BoundSpec::Theorem::new_bound: return "new";
    }
    return "?";
}

}  // namespace

std::string report_to_json(const VerificationReport& r) {
    json j;
    j["lhs"] = plfun_to_json(r.lhs);
    j["T"] = plfun_to_json(r.T);
    j["bounds"] = json::array();
    for (const auto& b : r.bounds) {
        json e{{"theorem", theorem_name(b.spec.theorem)},
               {"applicable", b.spec.applicable},
               {"note", b.spec.note}};
        if (b.spec.applicable) {
            e["coefficient"] = rational_to_string(b.spec.coefficient);
            e["C_min"] = rational_to_string(b.c_min);
            e["C_min_scope"] = "domain-relative";
            e["holds"] = b.holds;
        }
        j["bounds"].push_back(e);
    }
    j["sharpness_ratio"] = rational_to_string(r.sharpness_ratio);
    j["alpha"] = rational_to_string(r.alpha_value);
    j["t_seq"] = r.profile.t_seq;
    j["q"] = r.profile.q;
    j["n"] = r.profile.n;
    j["general_position"] = r.profile.general_position;
    j["M"] = r.m_record.M;
    j["M_status"] =
        r.m_record.status == MultiplicityRecord::Status::certified
            ? "certified"
            : "assumed";
    j["M_witness"] = r.m_record.witness;
    j["m_funs"] = json::array();
    for (const auto& m : r.m_funs) j["m_funs"].push_back(plfun_to_json(m));
    j["n_funs"] = json::array();
    for (const auto& n : r.n_funs)
        j["n_funs"].push_back(n ? plfun_to_json(*n) : json(nullptr));
    j["fmt_constants"] = json::array();
    for (const auto& c : r.fmt_constants)
        j["fmt_constants"].push_back(c ? json(rational_to_string(*c))
                                       : json(nullptr));
    j["fully_certified"] = r.fully_certified;
    j["notices"] = r.notices;
    return j.dump(2);
}

std::string trace_to_json(const ProofTrace& tr) {
    json j;
    j["t"] = rational_to_string(tr.t);
    j["sorted"] = json::array();
    for (const auto& e : tr.sorted)
        j["sorted"].push_back(
            {{"index", e.index}, {"m_over_deg", rational_to_string(e.value)}});
    j["piece_first"] = rational_to_string(tr.piece_first);
    j["piece_middle"] = rational_to_string(tr.piece_middle);
    j["piece_last"] = rational_to_string(tr.piece_last);
    if (tr.log_c1) j["log_C1"] = rational_to_string(*tr.log_c1);
    j["last_piece_ok"] = tr.last_piece_ok;
    j["middle"] = json::array();
    for (const auto& m : tr.middle)
        j["middle"].push_back({{"index", m.index},
                               {"value", rational_to_string(m.value)},
                               {"coefficient", rational_to_string(m.coefficient)},
                               {"C_min", rational_to_string(m.c_min)}});
    j["hyperplane_checks"] = json::array();
    for (const auto& h : tr.hyperplane_checks)
        j["hyperplane_checks"].push_back(
            {{"index", h.index},
             {"sum_at_t", rational_to_string(h.sum_at_t)},
             {"C_min", rational_to_string(h.c_min)},
             {"num_points", h.num_points}});
    j["notices"] = tr.notices;
    return j.dump(2);
}

}  // namespace navt
