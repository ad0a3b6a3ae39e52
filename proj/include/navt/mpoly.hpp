#ifndef NAVT_MPOLY_HPP
#define NAVT_MPOLY_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "navt/rational.hpp"

namespace navt {

using Monomial = std::vector<int>;  // exponent vector

long monomial_degree(const Monomial& m);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
bool monomial_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial monomial_div(const Monomial& b, const Monomial& a);  // b / a
Monomial monomial_lcm(const Monomial& a, const Monomial& b);

// elim_first: exponent of variable 0 dominates, grevlex on the rest
// (an elimination order for variable 0).
enum class MonOrder { grevlex, lex, elim_first };

/// a > b under the order?
bool monomial_greater(const Monomial& a, const Monomial& b, MonOrder order);

/// Sparse multivariate polynomial over the rationals.
struct MPoly {
    int nvars = 0;
    std::map<Monomial, Rational> terms;  // zero coefficients never stored

    static MPoly zero(int nvars) { return MPoly{nvars, {}}; }
    static MPoly constant(int nvars, const Rational& c);
    static MPoly variable(int nvars, int index);
    static MPoly term(int nvars, Monomial m, const Rational& c);

    bool is_zero() const { return terms.empty(); }
    long total_degree() const;  // -1 for zero
    /// Homogeneous of a single degree? (zero counts as homogeneous)
    bool is_homogeneous() const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly scaled(const Rational& c) const;
    MPoly mul_term(const Monomial& m, const Rational& c) const;

    bool operator==(const MPoly&) const = default;

    MPoly derivative(int var) const;
    /// Substitute variable `var` by a constant, keeping the variable count.
    MPoly substitute(int var, const Rational& value) const;
    /// Drop variable `var` (its exponent must be 0 in every term).
    MPoly drop_var(int var) const;
    /// Insert a fresh variable with exponent 0 at position `var`.
    MPoly insert_var(int var) const;
    /// Multiply each term by X_var^(target_degree - term degree).
    MPoly homogenize(int var, long target_degree) const;

    /// Leading monomial/coefficient under the order; polynomial must be nonzero.
    const Monomial& leading_monomial(MonOrder order) const;
    const Rational& leading_coeff(MonOrder order) const;

    /// max over coefficients of -v(c); the log of the coefficient sup-norm.
    Rational max_coeff_log_norm(
        const std::function<std::optional<Rational>(const Rational&)>& val)
        const;

    std::string to_string(const std::vector<std::string>& var_names) const;
    std::string to_string() const;  // X0..Xk names
};

}  // namespace navt

#endif
