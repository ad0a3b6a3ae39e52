#include <algorithm>

#include "navt/position.hpp"

namespace navt {

HomogeneousForm make_form(MPoly p) {
    if (p.is_zero()) throw Error("hypersurface form must be nonzero");
    if (!p.is_homogeneous()) throw Error("inhomogeneous form");
    return HomogeneousForm{std::move(p)};
}

int PositionProfile::t(int m) const {
    if (m < -1 || m > n - 1) throw Error("t_m index out of range");
    return t_seq.at(static_cast<size_t>(m + 1));
}

namespace {

void for_each_subset(int q, int k, const std::function<void(
                                       const std::vector<int>&)>& fn) {
    std::vector<int> idx(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            fn(idx);
            return;
        }
        for (int i = start; i < q; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

std::vector<MPoly> subset_gens(const SpaceSpec& space,
                               const std::vector<Hypersurface>& hypers,
                               const std::vector<int>& idx) {
    std::vector<MPoly> gens;
    for (const auto& f : space.x_ideal) gens.push_back(f.poly);
    for (int i : idx) gens.push_back(hypers[i].form.poly);
    return gens;
}

}  // namespace

PositionProfile t_sequence(const SpaceSpec& space,
                           const std::vector<Hypersurface>& hypers,
                           const Caps& caps) {
    const int q = static_cast<int>(hypers.size());
    if (q == 0) throw Error("no hypersurfaces");
    if (q > caps.max_subset_size)
        throw Error("hypersurface count beyond subset cap");
    const int nvars = space.N + 1;
    for (const auto& h : hypers)
        if (h.form.poly.nvars != nvars)
            throw Error("hypersurface variable count mismatch");

    int n = space.N;
    if (!space.is_full_space()) {
        std::vector<MPoly> xg;
        for (const auto& f : space.x_ideal) xg.push_back(f.poly);
        n = projective_dimension(xg);
        if (n < 0) throw Error("X is empty");
        // X contained in some D_j? (normal-form membership check)
        GroebnerBasis GX = groebner_basis(xg, MonOrder::grevlex);
        for (const auto& h : hypers)
            if (normal_form(h.form.poly, GX).is_zero())
                throw Error("X is contained in hypersurface " + h.name);
    }

    // maxdim[k] = worst dimension over subsets of size k+1.
    std::vector<int> maxdim(q, -2);
    for (int k = 1; k <= q; ++k) {
        int worst = -1;
        for_each_subset(q, k, [&](const std::vector<int>& idx) {
            worst = std::max(
                worst, projective_dimension(subset_gens(space, hypers, idx)));
        });
        maxdim[k - 1] = worst;
    }

    PositionProfile prof;
    prof.q = q;
    prof.n = n;
    for (int m = -1; m <= n - 1; ++m) {
        int tm = q;
        for (int c = 0; c < q; ++c)
            if (maxdim[c] <= m) {
                tm = c;
                break;
            }
        prof.t_seq.push_back(tm);
    }
    // In general position every nonempty k-fold intersection has dimension
    // exactly n-k, which makes t_m = min(n-m-1, q) (e.g. two distinct lines
    // in P^2: t_0 = 1, t_{-1} = 2).
    prof.general_position = true;
    for (int m = -1; m <= n - 1; ++m)
        if (prof.t(m) != std::min(n - m - 1, q)) prof.general_position = false;
    return prof;
}

bool transversality_certificate(const HomogeneousForm& a,
                                const HomogeneousForm& b,
                                const SpaceSpec& space) {
    if (!space.is_full_space())
        throw Error("transversality certificate unsupported with X ideal");
    const int nvars = space.N + 1;
    std::vector<MPoly> gens{a.poly, b.poly};
    for (int i = 0; i < nvars; ++i)
        for (int j = i + 1; j < nvars; ++j)
            gens.push_back(a.poly.derivative(i) * b.poly.derivative(j) -
                           a.poly.derivative(j) * b.poly.derivative(i));
    return projective_dimension(gens) == -1;
}

MultiplicityRecord certify_M(const SpaceSpec& space,
                             const std::vector<Hypersurface>& hypers,
                             const PositionProfile& profile,
                             std::optional<int> candidate, const Caps& caps) {
    auto assumed = [&](const std::string& why) {
        if (!candidate)
            throw Error("no certification path for M and no assumed_M: " + why);
        return MultiplicityRecord{*candidate, MultiplicityRecord::Status::assumed,
                                  why};
    };
    if (!space.is_full_space()) return assumed("X ideal present");
    const int q = profile.q;
    const int k = profile.t_0() + 1;
    if (k > q)
        return MultiplicityRecord{1, MultiplicityRecord::Status::certified,
                                  "no subsets of size t_0+1: vacuous"};

    std::vector<std::vector<int>> zero_dim_subsets;
    bool bad_dim = false;
    for_each_subset(q, k, [&](const std::vector<int>& idx) {
        int d = projective_dimension(subset_gens(space, hypers, idx));
        if (d == 0) zero_dim_subsets.push_back(idx);
        if (d > 0) bad_dim = true;
    });
    if (bad_dim)
        throw Error("a (t_0+1)-subset has positive dimension; profile stale");
    if (zero_dim_subsets.empty())
        return MultiplicityRecord{1, MultiplicityRecord::Status::certified,
                                  "all (t_0+1)-subset intersections empty"};

    // Path (a): M = 1 via a transverse pair generating the subset ideal.
    bool all_reduced = true;
    for (const auto& idx : zero_dim_subsets) {
        bool this_ok = false;
        for (size_t a = 0; a < idx.size() && !this_ok; ++a)
            for (size_t b = a + 1; b < idx.size() && !this_ok; ++b) {
                const auto& fa = hypers[idx[a]].form;
                const auto& fb = hypers[idx[b]].form;
                if (!transversality_certificate(fa, fb, space)) continue;
                GroebnerBasis G =
                    groebner_basis({fa.poly, fb.poly}, MonOrder::grevlex);
                bool members = true;
                for (size_t c = 0; c < idx.size(); ++c) {
                    if (c == a || c == b) continue;
                    if (!normal_form(hypers[idx[c]].form.poly, G).is_zero())
                        members = false;
                }
                if (members) this_ok = true;
            }
        if (!this_ok) {
            all_reduced = false;
            break;
        }
    }
    if (all_reduced)
        return MultiplicityRecord{
            1, MultiplicityRecord::Status::certified,
            "transverse generating pair found for every zero-dimensional "
            "(t_0+1)-subset"};

    // Path (b): verify a candidate via (radical)^M membership.
    if (candidate && *candidate >= 1) {
        bool ok = true;
        for (const auto& idx : zero_dim_subsets) {
            std::vector<MPoly> gens = subset_gens(space, hypers, idx);
            std::vector<MPoly> rad;
            try {
                rad = radical_of_point_scheme(gens);
            } catch (const Error&) {
                ok = false;
                break;
            }
            // sanity: every radical generator vanishes on the subset scheme
            for (const auto& r : rad)
                if (!radical_membership(r, gens)) ok = false;
            GroebnerBasis G = groebner_basis(gens, MonOrder::grevlex);
            // all degree-M products of radical generators must be members
            std::vector<size_t> pick(static_cast<size_t>(*candidate), 0);
            std::function<void(size_t, size_t)> rec = [&](size_t pos,
                                                          size_t lo) {
                if (!ok) return;
                if (pos == pick.size()) {
                    MPoly prod = MPoly::constant(gens[0].nvars, 1);
                    for (size_t t : pick) prod *= rad[t];
                    if (!normal_form(prod, G).is_zero()) ok = false;
                    return;
                }
                for (size_t t = lo; t < rad.size(); ++t) {
                    pick[pos] = t;
                    rec(pos + 1, t);
                }
            };
            rec(0, 0);
            if (!ok) break;
        }
        if (ok)
            return MultiplicityRecord{
                *candidate, MultiplicityRecord::Status::certified,
                "(radical)^M contained in every zero-dimensional "
                "(t_0+1)-subset ideal"};
    }
    return assumed("M=1 reducedness check failed and no verifiable candidate");
}

Rational alpha(const PositionProfile& profile, const MultiplicityRecord& M,
               const std::vector<long>& degrees) {
    int k = profile.t_minus1() - profile.t_0();
    if (k < 0) throw Error("t_{-1} < t_0");
    if (k == 0) return Rational(0);
    std::vector<Rational> vals;
    for (long d : degrees)
        vals.push_back(std::min(Rational(M.M, d), Rational(1)));
    std::sort(vals.begin(), vals.end(), std::greater<>());
    if (static_cast<size_t>(k) > vals.size())
        throw Error("subset size exceeds hypersurface count");
    Rational sum(0);
    for (int i = 0; i < k; ++i) sum += vals[i];
    return sum;
}

bool NullstellensatzCertificate::verify() const {
    for (size_t j = 0; j < targets.size(); ++j) {
        MPoly acc = MPoly::constant(targets[j].nvars, 1);
        for (long e = 0; e < exponents[j]; ++e) acc *= targets[j];
        for (size_t i = 0; i < generators.size(); ++i)
            acc -= cofactors[j][i] * generators[i];
        if (!acc.is_zero()) return false;
    }
    return true;
}

NullstellensatzCertificate nullstellensatz_certificate(
    const std::vector<MPoly>& gens, const std::vector<MPoly>& targets,
    const Caps& caps) {
    NullstellensatzCertificate cert;
    cert.generators = gens;
    cert.targets = targets;
    GroebnerBasis G = groebner_basis(gens, MonOrder::grevlex, true);
    for (const auto& t : targets) {
        MPoly power = MPoly::constant(t.nvars, 1);
        long m = 0;
        std::vector<MPoly> quot;
        bool found = false;
        while (m < caps.max_nullstellensatz_power) {
            power *= t;
            ++m;
            if (normal_form(power, G, &quot).is_zero()) {
                found = true;
                break;
            }
        }
        if (!found) throw Error("nullstellensatz power cap exceeded");
        std::vector<MPoly> cof(gens.size(), MPoly::zero(t.nvars));
        for (size_t g = 0; g < G.basis.size(); ++g)
            for (size_t i = 0; i < gens.size(); ++i)
                cof[i] += quot[g] * G.rep[g][i];
        cert.exponents.push_back(m);
        cert.cofactors.push_back(std::move(cof));
    }
    if (!cert.verify())
        throw Error("internal error: certificate fails to re-expand");
    return cert;
}

std::optional<std::vector<MPoly>> membership_certificate(
    const MPoly& target, const std::vector<MPoly>& gens) {
    GroebnerBasis G = groebner_basis(gens, MonOrder::grevlex, true);
    std::vector<MPoly> quot;
    if (!normal_form(target, G, &quot).is_zero()) return std::nullopt;
    std::vector<MPoly> cof(gens.size(), MPoly::zero(target.nvars));
    for (size_t g = 0; g < G.basis.size(); ++g)
        for (size_t i = 0; i < gens.size(); ++i)
            cof[i] += quot[g] * G.rep[g][i];
    return cof;
}

SeparatingSystem select_separating_hyperplanes(
    const std::vector<std::vector<Rational>>& points,
    const std::function<bool(const MPoly&)>& image_avoids, int nvars,
    const Caps& caps) {
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw Error("duplicate points");
    auto eval_at = [&](const std::vector<Rational>& c,
                       const std::vector<Rational>& p) {
        Rational s(0);
        for (int v = 0; v < nvars; ++v) s += c[v] * p[v];
        return s;
    };
    SeparatingSystem sys;
    sys.points = points;
    for (size_t i = 0; i < points.size(); ++i) {
        bool found = false;
        // deterministic odometer over integer coefficient vectors by radius
        for (int R = 1; R <= caps.hyperplane_lattice_radius && !found; ++R) {
            std::vector<int> c(nvars, -R);
            while (true) {
                int maxabs = 0;
                for (int v : c) maxabs = std::max(maxabs, std::abs(v));
                int first_nz = 0;
                while (first_nz < nvars && c[first_nz] == 0) ++first_nz;
                if (maxabs == R && first_nz < nvars && c[first_nz] > 0) {
                    std::vector<Rational> cr(c.begin(), c.end());
                    bool ok = eval_at(cr, points[i]) == 0;
                    for (size_t j = 0; ok && j < points.size(); ++j)
                        if (j != i && eval_at(cr, points[j]) == 0) ok = false;
                    if (ok) {
                        MPoly L = MPoly::zero(nvars);
                        for (int v = 0; v < nvars; ++v)
                            if (c[v] != 0)
                                L += MPoly::variable(nvars, v)
                                         .scaled(Rational(c[v]));
                        if (image_avoids(L)) {
                            sys.hyperplanes.push_back(std::move(L));
                            found = true;
                            break;
                        }
                    }
                }
                // advance odometer
                int v = nvars - 1;
                while (v >= 0 && c[v] == R) c[v--] = -R;
                if (v < 0) break;
                ++c[v];
            }
        }
        if (!found) throw Error("hyperplane lattice exhausted");
    }
    return sys;
}

}  // namespace navt
