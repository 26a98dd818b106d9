#pragma once

#include "k3dn/arith.hpp"
#include "k3dn/matrix.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace k3dn {

// "a2" < "a10"
bool natural_less(const std::string& a, const std::string& b);

struct NaturalLess {
    bool operator()(const std::string& a, const std::string& b) const { return natural_less(a, b); }
};

// sorted by parameter name, no zero exponents
using ParamMonomial = std::vector<std::pair<std::string, long>>;

struct ParamMonomialLess {
    bool operator()(const ParamMonomial& a, const ParamMonomial& b) const;
};

// Laurent polynomial over Q in named parameters.
class ParamPolynomial {
public:
    using Terms = std::map<ParamMonomial, Rat, ParamMonomialLess>;

    ParamPolynomial() = default;
    ParamPolynomial(const Rat& c);
    ParamPolynomial(long c) : ParamPolynomial(Rat(c)) {}
    ParamPolynomial(int c) : ParamPolynomial(Rat(c)) {}

    static ParamPolynomial param(const std::string& name, long exp = 1);
    static ParamPolynomial monomial(const ParamMonomial& m, const Rat& c);

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const { return is_constant() && constant() == 1; }
    bool is_monomial() const { return terms_.size() == 1; }
    // throws unless is_constant()
    Rat constant() const;
    std::set<std::string, NaturalLess> parameters() const;

    ParamPolynomial operator-() const;
    ParamPolynomial& operator+=(const ParamPolynomial& o);
    ParamPolynomial& operator-=(const ParamPolynomial& o);
    ParamPolynomial& operator*=(const ParamPolynomial& o);
    friend ParamPolynomial operator+(ParamPolynomial a, const ParamPolynomial& b) { return a += b; }
    friend ParamPolynomial operator-(ParamPolynomial a, const ParamPolynomial& b) { return a -= b; }
    friend ParamPolynomial operator*(const ParamPolynomial& a, const ParamPolynomial& b);
    friend bool operator==(const ParamPolynomial& a, const ParamPolynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ParamPolynomial& a, const ParamPolynomial& b) { return !(a == b); }

    // negative exponents only for monomials
    ParamPolynomial pow(long e) const;
    ParamPolynomial inverse() const;

    // partial substitution of rational values
    ParamPolynomial substitute(const std::map<std::string, Rat>& values) const;
    // substitution of parameters by parameter polynomials (monomials if exponents are negative)
    ParamPolynomial substitute(const std::map<std::string, ParamPolynomial>& values) const;

    std::string str() const;

private:
    void add_term(const ParamMonomial& m, const Rat& c);
    Terms terms_;
};

using Exponent = std::vector<long>;

// Exponent vectors in Z^n to ParamPolynomial coefficients.
class LaurentPolynomial {
public:
    using Terms = std::map<Exponent, ParamPolynomial>;

    explicit LaurentPolynomial(std::size_t n_vars = 0) : n_(n_vars) {}

    static LaurentPolynomial constant(std::size_t n, const ParamPolynomial& c);
    static LaurentPolynomial monomial(const Exponent& e, const ParamPolynomial& c = ParamPolynomial(1));
    static LaurentPolynomial variable(std::size_t n, std::size_t i, long exp = 1);

    std::size_t n_vars() const { return n_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    ParamPolynomial coefficient(const Exponent& e) const;
    ParamPolynomial constant_term() const { return coefficient(Exponent(n_, 0)); }
    std::vector<Exponent> support() const;
    bool is_rational() const;
    std::set<std::string, NaturalLess> parameters() const;

    void add_term(const Exponent& e, const ParamPolynomial& c);

    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator*(const ParamPolynomial& c, const LaurentPolynomial& p);
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) { return !(a == b); }

    // negative powers need exact inversion
    LaurentPolynomial pow(long e) const;
    // multiply by x^e
    LaurentPolynomial shift(const Exponent& e) const;

private:
    void check_dims(const LaurentPolynomial& o) const;
    std::size_t n_;
    Terms terms_;
};

// a / b when the quotient is a Laurent polynomial; throws Error otherwise
LaurentPolynomial divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b);

// x, y, z are variables 1..3 and x1, x2, ... are variables by index; any other identifier is a parameter.
// n_vars = 0 infers the count from the highest variable used.
LaurentPolynomial parse_laurent(const std::string& text, std::size_t n_vars = 0);
std::string format_laurent(const LaurentPolynomial& p);
std::string variable_name(std::size_t n_vars, std::size_t i);

LaurentPolynomial specialize(const LaurentPolynomial& p, const std::map<std::string, Rat>& values);
LaurentPolynomial substitute_params(const LaurentPolynomial& p, const std::map<std::string, ParamPolynomial>& values);

// x_j -> scale_j * x^{column j of A}; exponent e goes to A e
LaurentPolynomial monomial_transform(const LaurentPolynomial& p, const IntegerMatrix& A,
                                     const std::vector<ParamPolynomial>& scalings = {});

// change of variables given by the images of x_1..x_n as monomials, e.g. (y, x^-1, z)
IntegerMatrix substitution_matrix(const std::vector<Exponent>& images);

// "a1=1,a2=-3/2"
std::map<std::string, Rat> parse_assignments(const std::string& text);

}  // namespace k3dn
