#include <algorithm>
#include <set>

#include "navt/position.hpp"

namespace navt {

namespace {

struct Pair {
    long lcm_deg;
    size_t i, j;
    bool operator<(const Pair& o) const {
        return std::tie(lcm_deg, i, j) < std::tie(o.lcm_deg, o.i, o.j);
    }
};

void make_monic(MPoly& f, std::vector<MPoly>* rep, MonOrder order) {
    const Rational lc = f.leading_coeff(order);
    if (lc == 1) return;
    Rational inv = 1 / lc;
    f = f.scaled(inv);
    if (rep)
        for (auto& r : *rep) r = r.scaled(inv);
}

// Full reduction of f by the current basis; quotients and rep updated when
// tracking. Returns the remainder.
MPoly reduce_full(MPoly f, const std::vector<MPoly>& basis, MonOrder order,
                  const std::vector<std::vector<MPoly>>& reps,
                  std::vector<MPoly>* frep, std::vector<MPoly>* quotients) {
    MPoly rem = MPoly::zero(f.nvars);
    while (!f.is_zero()) {
        const Monomial lm = f.leading_monomial(order);
        const Rational lc = f.terms.at(lm);
        bool reduced = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].is_zero()) continue;
            const Monomial& bm = basis[k].leading_monomial(order);
            if (!monomial_divides(bm, lm)) continue;
            Rational coef = lc / basis[k].terms.at(bm);
            Monomial mono = monomial_div(lm, bm);
            f -= basis[k].mul_term(mono, coef);
            if (quotients)
                (*quotients)[k] += MPoly::term(f.nvars, mono, coef);
            if (frep)
                for (size_t t = 0; t < frep->size(); ++t)
                    (*frep)[t] -= reps[k][t].mul_term(mono, coef);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem += MPoly::term(f.nvars, lm, lc);
            f -= MPoly::term(f.nvars, lm, lc);
        }
    }
    return rem;
}

}  // namespace

GroebnerBasis groebner_basis(const std::vector<MPoly>& gens, MonOrder order,
                             bool track) {
    GroebnerBasis G;
    G.order = order;
    const size_t ngens = gens.size();
    int nvars = 0;
    for (const auto& g : gens) nvars = g.nvars;
    std::vector<MPoly> basis;
    std::vector<std::vector<MPoly>> reps;
    auto unit_rep = [&](size_t i) {
        std::vector<MPoly> r(ngens, MPoly::zero(nvars));
        r[i] = MPoly::constant(nvars, 1);
        return r;
    };
    std::set<Pair> pairs;
    auto push = [&](MPoly f, std::vector<MPoly> rep) {
        make_monic(f, track ? &rep : nullptr, order);
        size_t idx = basis.size();
        for (size_t k = 0; k < idx; ++k)
            pairs.insert({monomial_degree(monomial_lcm(
                              f.leading_monomial(order),
                              basis[k].leading_monomial(order))),
                          k, idx});
        basis.push_back(std::move(f));
        reps.push_back(std::move(rep));
    };
    for (size_t i = 0; i < ngens; ++i) {
        if (gens[i].is_zero()) continue;
        if (gens[i].nvars != nvars) throw Error("variable count mismatch");
        push(gens[i], track ? unit_rep(i) : std::vector<MPoly>{});
    }

    while (!pairs.empty()) {
        Pair p = *pairs.begin();
        pairs.erase(pairs.begin());
        const MPoly &f = basis[p.i], &g = basis[p.j];
        const Monomial &mf = f.leading_monomial(order),
                       &mg = g.leading_monomial(order);
        Monomial lcm = monomial_lcm(mf, mg);
        // Buchberger's coprime criterion.
        if (lcm == monomial_mul(mf, mg)) continue;
        MPoly s = f.mul_term(monomial_div(lcm, mf), 1) -
                  g.mul_term(monomial_div(lcm, mg), 1);
        std::vector<MPoly> srep;
        if (track) {
            srep.assign(ngens, MPoly::zero(nvars));
            for (size_t t = 0; t < ngens; ++t)
                srep[t] = reps[p.i][t].mul_term(monomial_div(lcm, mf), 1) -
                          reps[p.j][t].mul_term(monomial_div(lcm, mg), 1);
        }
        MPoly rem = reduce_full(std::move(s), basis, order, reps,
                                track ? &srep : nullptr, nullptr);
        if (!rem.is_zero()) push(std::move(rem), std::move(srep));
    }

    // Minimalize: drop elements whose leading monomial another divides.
    std::vector<char> keep(basis.size(), 1);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[i] || !keep[j]) continue;
            if (monomial_divides(basis[j].leading_monomial(order),
                                 basis[i].leading_monomial(order))) {
                keep[i] = 0;
                break;
            }
        }
    std::vector<MPoly> minimal;
    std::vector<std::vector<MPoly>> minreps;
    for (size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) {
            minimal.push_back(basis[i]);
            if (track) minreps.push_back(reps[i]);
        }

    // Interreduce tails.
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MPoly> others;
        std::vector<std::vector<MPoly>> orep;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) {
                others.push_back(minimal[j]);
                if (track) orep.push_back(minreps[j]);
            }
        MPoly r = reduce_full(minimal[i], others, order, orep,
                              track ? &minreps[i] : nullptr, nullptr);
        make_monic(r, track ? &minreps[i] : nullptr, order);
        minimal[i] = std::move(r);
    }

    // Deterministic output order: ascending leading monomial.
    std::vector<size_t> idx(minimal.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        return monomial_greater(minimal[b].leading_monomial(order),
                                minimal[a].leading_monomial(order), order);
    });
    for (size_t i : idx) {
        G.basis.push_back(minimal[i]);
        if (track) G.rep.push_back(minreps[i]);
    }
    return G;
}

MPoly normal_form(const MPoly& f, const GroebnerBasis& G,
                  std::vector<MPoly>* quotients) {
    if (quotients) quotients->assign(G.basis.size(), MPoly::zero(f.nvars));
    return reduce_full(f, G.basis, G.order, {}, nullptr, quotients);
}

bool ideal_contains_one(const GroebnerBasis& G) {
    for (const auto& g : G.basis)
        if (!g.is_zero() && g.total_degree() == 0) return true;
    return false;
}

namespace {

int cone_dimension(const std::vector<Monomial>& lts, int nvars) {
    // Largest variable subset S with no leading monomial supported inside S.
    int best = -1;
    for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
        bool ok = true;
        for (const auto& m : lts) {
            bool inside = true;
            for (int v = 0; v < nvars; ++v)
                if (m[v] > 0 && !(mask & (1u << v))) {
                    inside = false;
                    break;
                }
            if (inside) {
                ok = false;
                break;
            }
        }
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

}  // namespace

int projective_dimension(const std::vector<MPoly>& gens, MonOrder order) {
    int nvars = 0;
    bool any = false;
    for (const auto& g : gens) {
        nvars = g.nvars;
        if (!g.is_zero()) any = true;
    }
    if (!any) {
        if (nvars == 0) throw Error("no variables");
        return nvars - 1;  // the zero ideal cuts nothing
    }
    GroebnerBasis G = groebner_basis(gens, order);
    if (ideal_contains_one(G)) return -1;
    std::vector<Monomial> lts;
    for (const auto& g : G.basis)
        if (!g.is_zero()) lts.push_back(g.leading_monomial(order));
    int cone = cone_dimension(lts, nvars);
    return cone - 1;
}

bool radical_membership(const MPoly& f, const std::vector<MPoly>& gens) {
    if (f.is_zero()) return true;
    int nvars = f.nvars;
    std::vector<MPoly> ext;
    for (const auto& g : gens) ext.push_back(g.insert_var(nvars));
    MPoly fe = f.insert_var(nvars);
    MPoly y = MPoly::variable(nvars + 1, nvars);
    ext.push_back(MPoly::constant(nvars + 1, 1) - y * fe);
    return ideal_contains_one(groebner_basis(ext, MonOrder::grevlex));
}

std::vector<MPoly> ideal_intersection(const std::vector<MPoly>& I,
                                      const std::vector<MPoly>& J) {
    int nvars = 0;
    for (const auto& g : I) nvars = g.nvars;
    for (const auto& g : J) nvars = g.nvars;
    // tI + (1-t)J, then eliminate t.
    MPoly t = MPoly::variable(nvars + 1, 0);
    MPoly one_minus_t = MPoly::constant(nvars + 1, 1) - t;
    std::vector<MPoly> gens;
    for (const auto& g : I) gens.push_back(t * g.insert_var(0));
    for (const auto& g : J) gens.push_back(one_minus_t * g.insert_var(0));
    GroebnerBasis G = groebner_basis(gens, MonOrder::elim_first);
    std::vector<MPoly> out;
    for (const auto& g : G.basis) {
        bool uses_t = false;
        for (const auto& [m, c] : g.terms)
            if (m[0] > 0) uses_t = true;
        if (!uses_t && !g.is_zero()) out.push_back(g.drop_var(0));
    }
    return out;
}

// ---- univariate helpers -------------------------------------------------

namespace {

using UPoly = std::vector<Rational>;  // coefficient list, low to high

void utrim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly uderiv(const UPoly& p) {
    UPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(i));
    utrim(d);
    return d;
}

UPoly urem(UPoly a, const UPoly& b) {
    utrim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        utrim(a);
    }
    return a;
}

UPoly ugcd(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly r = urem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lc = a.back();
        for (auto& c : a) c /= lc;
    }
    return a;
}

UPoly udiv_exact(UPoly a, const UPoly& b) {
    UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    utrim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        utrim(a);
    }
    if (!a.empty()) throw Error("inexact univariate division");
    utrim(q);
    return q;
}

UPoly usquarefree(const UPoly& p) {
    UPoly d = uderiv(p);
    if (d.empty()) return p;
    UPoly g = ugcd(p, d);
    if (g.size() <= 1) return p;
    return udiv_exact(p, g);
}

// Rational roots; complete=false when the coefficient factorizations were
// inconclusive so roots may have been missed.
void urational_roots(const UPoly& p_in, std::vector<Rational>& roots,
                     bool& complete) {
    UPoly p = p_in;
    utrim(p);
    complete = true;
    if (p.empty()) throw Error("rational roots of zero polynomial");
    // strip zero roots
    size_t z = 0;
    while (z < p.size() && p[z] == 0) ++z;
    if (z > 0) {
        roots.push_back(Rational(0));
        p.erase(p.begin(), p.begin() + z);
    }
    if (p.size() <= 1) return;
    // clear denominators to a primitive integer polynomial
    Int denlcm = 1;
    for (const auto& c : p) {
        Int d = denominator(c);
        denlcm = denlcm / gcd(denlcm, d) * d;
    }
    std::vector<Int> ip;
    for (const auto& c : p)
        ip.push_back(numerator(c) * (denlcm / denominator(c)));
    auto divisors = [&](Int n, bool& ok) {
        ok = true;
        n = abs(n);
        std::vector<Int> primes;
        std::vector<int> mult;
        for (Int d = 2; d * d <= n && d < 1000000; ++d) {
            if (n % d == 0) {
                primes.push_back(d);
                mult.push_back(0);
                while (n % d == 0) {
                    n /= d;
                    ++mult.back();
                }
            }
        }
        if (n > 1) {
            if (n >= Int(1000000) * 1000000) ok = false;  // may be composite
            primes.push_back(n);
            mult.push_back(1);
        }
        std::vector<Int> divs{1};
        for (size_t i = 0; i < primes.size(); ++i) {
            size_t sz = divs.size();
            Int pw = 1;
            for (int e = 1; e <= mult[i]; ++e) {
                pw *= primes[i];
                for (size_t k = 0; k < sz; ++k) divs.push_back(divs[k] * pw);
            }
        }
        return divs;
    };
    bool ok0 = true, okd = true;
    std::vector<Int> num_c = divisors(ip.front(), ok0);
    std::vector<Int> den_c = divisors(ip.back(), okd);
    if (!ok0 || !okd) complete = false;
    auto eval_zero = [&](const Rational& x) {
        Rational acc(0), pw(1);
        for (const auto& c : ip) {
            acc += Rational(c) * pw;
            pw *= x;
        }
        return acc == 0;
    };
    std::set<Rational> found;
    for (const Int& a : num_c)
        for (const Int& b : den_c)
            for (int sgn : {1, -1}) {
                Rational cand = Rational(sgn * a, b);
                if (found.count(cand)) continue;
                if (eval_zero(cand)) found.insert(cand);
            }
    // A degree-d squarefree polynomial has all roots rational exactly when
    // we find d of them.
    roots.insert(roots.end(), found.begin(), found.end());
    if (found.size() != p.size() - 1) complete = false;
}

// Minimal polynomial of variable `var` in the Artinian quotient by a
// zero-dimensional affine ideal, by linear algebra over the standard
// monomials.
UPoly minimal_polynomial(int var, const GroebnerBasis& G, int nvars) {
    // collect standard monomials
    std::vector<Monomial> lts;
    for (const auto& g : G.basis) lts.push_back(g.leading_monomial(G.order));
    // bound per-variable exponents by the pure-power leading terms
    std::vector<int> cap(nvars, -1);
    for (const auto& m : lts) {
        int v = -1;
        bool pure = true;
        for (int i = 0; i < nvars; ++i)
            if (m[i] > 0) {
                if (v != -1) pure = false;
                v = i;
            }
        if (pure && v != -1) cap[v] = std::max(cap[v], m[v]);
    }
    for (int i = 0; i < nvars; ++i)
        if (cap[i] < 0) throw Error("ideal is not zero-dimensional");
    std::vector<Monomial> std_mons;
    Monomial cur(nvars, 0);
    std::function<void(int)> walk = [&](int i) {
        if (i == nvars) {
            for (const auto& lt : lts)
                if (monomial_divides(lt, cur)) return;
            std_mons.push_back(cur);
            return;
        }
        for (int e = 0; e < cap[i]; ++e) {
            cur[i] = e;
            walk(i + 1);
        }
        cur[i] = 0;
    };
    walk(0);
    std::map<Monomial, size_t> index;
    for (size_t i = 0; i < std_mons.size(); ++i) index[std_mons[i]] = i;

    size_t dim = std_mons.size();
    // rows[k] = NF(x^k) as a vector; run incremental elimination to find
    // the first linear dependence.
    std::vector<std::vector<Rational>> reduced;  // echelon rows
    std::vector<size_t> pivot;
    std::vector<std::vector<Rational>> combo;  // combo over powers 0..k
    MPoly xp = MPoly::constant(nvars, 1);
    MPoly x = MPoly::variable(nvars, var);
    for (size_t k = 0;; ++k) {
        if (k > dim) throw Error("minimal polynomial search overran");
        MPoly nf = normal_form(xp, G);
        std::vector<Rational> row(dim, Rational(0));
        for (const auto& [m, c] : nf.terms) row[index.at(m)] = c;
        std::vector<Rational> cmb(k + 1, Rational(0));
        cmb[k] = 1;
        for (size_t r = 0; r < reduced.size(); ++r) {
            if (row[pivot[r]] == 0) continue;
            Rational f = row[pivot[r]];
            for (size_t c = 0; c < dim; ++c) row[c] -= f * reduced[r][c];
            for (size_t c = 0; c < combo[r].size() && c < cmb.size(); ++c)
                cmb[c] -= f * combo[r][c];
        }
        size_t pv = dim;
        for (size_t c = 0; c < dim; ++c)
            if (row[c] != 0) {
                pv = c;
                break;
            }
        if (pv == dim) {
            utrim(cmb);
            Rational lc = cmb.back();
            for (auto& c : cmb) c /= lc;
            return cmb;  // dependency found: the minimal polynomial
        }
        Rational f = row[pv];
        for (auto& c : row) c /= f;
        for (auto& c : cmb) c /= f;
        reduced.push_back(std::move(row));
        combo.push_back(std::move(cmb));
        pivot.push_back(pv);
        xp = xp * x;
    }
}

MPoly upoly_to_mpoly(const UPoly& p, int nvars, int var) {
    MPoly r = MPoly::zero(nvars);
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        Monomial m(nvars, 0);
        m[var] = static_cast<int>(i);
        r += MPoly::term(nvars, std::move(m), p[i]);
    }
    return r;
}

// Seidenberg: radical of a zero-dimensional affine ideal.
std::vector<MPoly> radical_zero_dim_affine(const std::vector<MPoly>& gens,
                                           int nvars) {
    GroebnerBasis G = groebner_basis(gens, MonOrder::grevlex);
    if (ideal_contains_one(G)) return {MPoly::constant(nvars, 1)};
    std::vector<MPoly> out = gens;
    for (int v = 0; v < nvars; ++v) {
        UPoly mp = minimal_polynomial(v, G, nvars);
        out.push_back(upoly_to_mpoly(usquarefree(mp), nvars, v));
    }
    GroebnerBasis R = groebner_basis(out, MonOrder::grevlex);
    return R.basis;
}

std::vector<MPoly> dehomogenize(const std::vector<MPoly>& gens, int chart) {
    std::vector<MPoly> out;
    for (const auto& g : gens) {
        MPoly a = g.substitute(chart, 1).drop_var(chart);
        if (!a.is_zero()) out.push_back(a);
    }
    return out;
}

}  // namespace

std::vector<MPoly> radical_of_point_scheme(const std::vector<MPoly>& gens) {
    int nvars = 0;
    for (const auto& g : gens) nvars = g.nvars;
    if (projective_dimension(gens) != 0)
        throw Error("radical_of_point_scheme needs a zero-dimensional scheme");
    std::vector<MPoly> acc;  // intersection so far
    bool have = false;
    for (int chart = 0; chart < nvars; ++chart) {
        std::vector<MPoly> aff = dehomogenize(gens, chart);
        GroebnerBasis A = groebner_basis(aff, MonOrder::grevlex);
        if (ideal_contains_one(A)) continue;  // no points in this chart
        std::vector<MPoly> rad = radical_zero_dim_affine(aff, nvars - 1);
        // Homogenizing a GB under a graded order generates the ideal of the
        // (closed) point set of this chart.
        std::vector<MPoly> hom;
        for (const auto& r : rad) {
            MPoly h = r.insert_var(chart);
            hom.push_back(h.homogenize(chart, h.total_degree()));
        }
        if (!have) {
            acc = hom;
            have = true;
        } else {
            acc = ideal_intersection(acc, hom);
        }
    }
    if (!have) throw Error("point scheme has empty support");
    GroebnerBasis R = groebner_basis(acc, MonOrder::grevlex);
    return R.basis;
}

namespace {

void solve_affine(const std::vector<MPoly>& gens, int nvars,
                  std::vector<Rational>& partial,
                  std::vector<std::vector<Rational>>& out, bool& complete) {
    if (nvars == 0) {
        for (const auto& g : gens)
            if (!g.is_zero()) return;  // inconsistent constants
        out.push_back(partial);  // reversed order: last var first
        return;
    }
    std::vector<MPoly> nz;
    for (const auto& g : gens)
        if (!g.is_zero()) nz.push_back(g);
    if (nz.empty()) {
        complete = false;  // positive-dimensional; not expected here
        return;
    }
    GroebnerBasis G = groebner_basis(nz, MonOrder::grevlex);
    if (ideal_contains_one(G)) return;
    UPoly mp;
    try {
        mp = minimal_polynomial(nvars - 1, G, nvars);
    } catch (const Error&) {
        complete = false;
        return;
    }
    std::vector<Rational> roots;
    bool ok = true;
    urational_roots(usquarefree(mp), roots, ok);
    if (!ok) complete = false;
    std::sort(roots.begin(), roots.end());
    for (const auto& r : roots) {
        std::vector<MPoly> sub;
        for (const auto& g : nz) {
            MPoly s = g.substitute(nvars - 1, r).drop_var(nvars - 1);
            sub.push_back(s);
        }
        partial.push_back(r);
        solve_affine(sub, nvars - 1, partial, out, complete);
        partial.pop_back();
    }
}

}  // namespace

RationalPoints rational_points_of_point_scheme(const std::vector<MPoly>& gens) {
    int nvars = 0;
    for (const auto& g : gens) nvars = g.nvars;
    RationalPoints rp;
    rp.complete = true;
    std::set<std::vector<Rational>> seen;
    for (int chart = 0; chart < nvars; ++chart) {
        std::vector<MPoly> aff = dehomogenize(gens, chart);
        GroebnerBasis A = groebner_basis(aff, MonOrder::grevlex);
        if (ideal_contains_one(A)) continue;
        std::vector<std::vector<Rational>> sols;
        std::vector<Rational> partial;
        bool complete = true;
        solve_affine(aff, nvars - 1, partial, sols, complete);
        if (!complete) rp.complete = false;
        for (const auto& s : sols) {
            // s lists values for the non-chart variables, last var first
            std::vector<Rational> pt(nvars);
            pt[chart] = 1;
            size_t k = 0;
            for (int v = nvars - 1; v >= 0; --v) {
                if (v == chart) continue;
                pt[v] = s.at(k++);
            }
            // normalize: first nonzero coordinate = 1
            int fz = 0;
            while (pt[fz] == 0) ++fz;
            Rational lead = pt[fz];
            for (auto& c : pt) c /= lead;
            if (seen.insert(pt).second) rp.points.push_back(pt);
        }
    }
    return rp;
}

}  // namespace navt
