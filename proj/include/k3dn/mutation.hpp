#pragma once

#include "k3dn/matrix.hpp"
#include "k3dn/poly.hpp"

#include <vector>

namespace k3dn {

// sum_w p_w g^w, grading terms by w = <m, e>; needs <m, e> = 0 on supp(g)
LaurentPolynomial mutate(const LaurentPolynomial& p, const Exponent& m, const LaurentPolynomial& g);

// x_j -> x^{row j of M}, then z -> z f, then x_j -> x^{row j of N}
struct MutationTriple {
    IntegerMatrix M;
    LaurentPolynomial f;
    IntegerMatrix N;
};

LaurentPolynomial mutate_triple(const LaurentPolynomial& p, const MutationTriple& t);

// constant terms of p^0 .. p^N; p must have rational coefficients
std::vector<Rat> main_period(const LaurentPolynomial& p, int N, unsigned threads = 1);

}  // namespace k3dn
