#ifndef NAVT_RATIONAL_HPP
#define NAVT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace navt {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw Error("zero denominator");
    return Rational(num, den);
}

/// Multiplicity of p in a nonzero integer.
inline long int_valuation(Int x, const Int& p) {
    if (x == 0) throw Error("valuation of zero integer");
    long v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

/// v_p of a nonzero rational; an integer for rational input.
inline long padic_valuation(const Rational& x, const Int& p) {
    if (x == 0) throw Error("valuation of zero");
    return int_valuation(numerator(x), p) - int_valuation(denominator(x), p);
}

/// Parses "num" or "num/den" with optional sign.
Rational parse_rational(const std::string& text);

/// Renders as "num" or "num/den"; inverse of parse_rational on canonical forms.
std::string rational_to_string(const Rational& x);

/// Deterministic prime test by trial division (inputs here are small).
bool is_prime(const Int& n);

}  // namespace navt

#endif
