#include "navt/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace navt {

long monomial_degree(const Monomial& m) {
    long d = 0;
    for (int e : m) d += e;
    return d;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial monomial_div(const Monomial& b, const Monomial& a) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool monomial_greater(const Monomial& a, const Monomial& b, MonOrder order) {
    if (order == MonOrder::lex) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
    if (order == MonOrder::elim_first && a[0] != b[0]) return a[0] > b[0];
    long da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da > db;
    // grevlex tie-break: last nonzero entry of a-b is negative
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

MPoly MPoly::constant(int nvars, const Rational& c) {
    MPoly p = zero(nvars);
    if (c != 0) p.terms[Monomial(nvars, 0)] = c;
    return p;
}

MPoly MPoly::variable(int nvars, int index) {
    Monomial m(nvars, 0);
    m[index] = 1;
    return term(nvars, std::move(m), 1);
}

MPoly MPoly::term(int nvars, Monomial m, const Rational& c) {
    MPoly p = zero(nvars);
    if (c != 0) p.terms[std::move(m)] = c;
    return p;
}

long MPoly::total_degree() const {
    long d = -1;
    for (const auto& [m, c] : terms) d = std::max(d, monomial_degree(m));
    return d;
}

bool MPoly::is_homogeneous() const {
    long d = -1;
    for (const auto& [m, c] : terms) {
        long dm = monomial_degree(m);
        if (d == -1) d = dm;
        if (dm != d) return false;
    }
    return true;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms) {
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms) {
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms.erase(it);
        }
    }
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r = MPoly::zero(a.nvars);
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            Monomial m = monomial_mul(ma, mb);
            auto it = r.terms.find(m);
            if (it == r.terms.end()) {
                r.terms.emplace(std::move(m), ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms.erase(it);
            }
        }
    return r;
}

MPoly MPoly::scaled(const Rational& c) const {
    MPoly r = zero(nvars);
    if (c == 0) return r;
    for (const auto& [m, k] : terms) r.terms.emplace(m, k * c);
    return r;
}

MPoly MPoly::mul_term(const Monomial& m, const Rational& c) const {
    MPoly r = zero(nvars);
    if (c == 0) return r;
    for (const auto& [mm, k] : terms)
        r.terms.emplace(monomial_mul(mm, m), k * c);
    return r;
}

MPoly MPoly::derivative(int var) const {
    MPoly r = zero(nvars);
    for (const auto& [m, c] : terms) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.terms.emplace(std::move(d), c * m[var]);
    }
    return r;
}

MPoly MPoly::substitute(int var, const Rational& value) const {
    MPoly r = zero(nvars);
    for (const auto& [m, c] : terms) {
        Rational coeff = c;
        for (int k = 0; k < m[var]; ++k) coeff *= value;
        if (coeff == 0) continue;
        Monomial d = m;
        d[var] = 0;
        auto it = r.terms.find(d);
        if (it == r.terms.end()) {
            r.terms.emplace(std::move(d), coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

MPoly MPoly::drop_var(int var) const {
    MPoly r = zero(nvars - 1);
    for (const auto& [m, c] : terms) {
        if (m[var] != 0) throw Error("drop_var on a term using the variable");
        Monomial d;
        d.reserve(m.size() - 1);
        for (size_t i = 0; i < m.size(); ++i)
            if (static_cast<int>(i) != var) d.push_back(m[i]);
        r.terms.emplace(std::move(d), c);
    }
    return r;
}

MPoly MPoly::insert_var(int var) const {
    MPoly r = zero(nvars + 1);
    for (const auto& [m, c] : terms) {
        Monomial d;
        d.reserve(m.size() + 1);
        for (size_t i = 0; i <= m.size(); ++i) {
            if (static_cast<int>(i) == var) d.push_back(0);
            if (i < m.size()) d.push_back(m[i]);
        }
        r.terms.emplace(std::move(d), c);
    }
    return r;
}

MPoly MPoly::homogenize(int var, long target_degree) const {
    MPoly r = zero(nvars);
    for (const auto& [m, c] : terms) {
        long gap = target_degree - monomial_degree(m);
        if (gap < 0) throw Error("homogenize: target degree too small");
        Monomial d = m;
        d[var] += static_cast<int>(gap);
        r.terms.emplace(std::move(d), c);
    }
    return r;
}

const Monomial& MPoly::leading_monomial(MonOrder order) const {
    if (is_zero()) throw Error("leading monomial of zero");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : terms)
        if (!best || monomial_greater(m, *best, order)) best = &m;
    return *best;
}

const Rational& MPoly::leading_coeff(MonOrder order) const {
    return terms.at(leading_monomial(order));
}

Rational MPoly::max_coeff_log_norm(
    const std::function<std::optional<Rational>(const Rational&)>& val) const {
    if (is_zero()) throw Error("coefficient norm of zero polynomial");
    bool first = true;
    Rational best(0);
    for (const auto& [m, c] : terms) {
        Rational w = -*val(c);
        if (first || w > best) best = w;
        first = false;
    }
    return best;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    // Render in a stable order (grevlex descending).
    std::vector<const Monomial*> ms;
    for (const auto& [m, c] : terms) ms.push_back(&m);
    std::sort(ms.begin(), ms.end(), [](const Monomial* a, const Monomial* b) {
        return monomial_greater(*a, *b, MonOrder::grevlex);
    });
    std::ostringstream out;
    bool first = true;
    for (const Monomial* m : ms) {
        Rational c = terms.at(*m);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        Rational a = abs(c);
        bool unit = (a == 1) && monomial_degree(*m) > 0;
        if (!unit) out << rational_to_string(a);
        bool any = false;
        for (size_t i = 0; i < m->size(); ++i) {
            if ((*m)[i] == 0) continue;
            if (any || !unit) out << "*";
            out << names[i];
            if ((*m)[i] > 1) out << "^" << (*m)[i];
            any = true;
        }
    }
    return out.str();
}

std::string MPoly::to_string() const {
    std::vector<std::string> names;
    for (int i = 0; i < nvars; ++i) names.push_back("X" + std::to_string(i));
    return to_string(names);
}

}  // namespace navt
