#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace k3dn {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// floor division for possibly negative operands
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

inline Int mod_pos(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += (m < 0 ? -m : m);
    return r;
}

// representative of r mod k*Z in [0, k)
inline Rat reduce_mod(const Rat& r, const Int& k) {
    Int n = num(r), d = den(r);
    Int kd = k * d;
    return Rat(mod_pos(n, kd), d);
}

inline Rat mod1(const Rat& r) { return reduce_mod(r, 1); }
inline Rat mod2(const Rat& r) { return reduce_mod(r, 2); }

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::lcm(a, b);
}

inline Int iabs(const Int& a) { return a < 0 ? Int(-a) : a; }

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

// accepts "p", "-p", "p/q"
Rat parse_rat(const std::string& s);
Int parse_int(const std::string& s);

Rat rat_pow(const Rat& base, long e);

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace k3dn
