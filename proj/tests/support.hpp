#pragma once

#include "k3dn/matrix.hpp"
#include "k3dn/poly.hpp"

#include <random>
#include <string>
#include <vector>

#ifndef K3DN_FIXTURES
#error "K3DN_FIXTURES must point at the fixtures directory"
#endif

namespace k3dn::test {

inline std::string fixture(const std::string& rel) { return std::string(K3DN_FIXTURES) + "/" + rel; }

inline IntegerMatrix mat(const std::vector<std::vector<long>>& rows) { return IntegerMatrix::from_rows(rows); }

inline LaurentPolynomial lp(const std::string& s, std::size_t n = 0) { return parse_laurent(s, n); }

inline Rat q(long n, long d = 1) { return Rat(n, d); }

// product of random elementary operations, always unimodular
inline IntegerMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, int steps = 12) {
    IntegerMatrix u = IntegerMatrix::identity(n);
    if (n < 2) return u;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<long> coef(-2, 2);
    for (int s = 0; s < steps; ++s) {
        std::size_t a = pick(rng), b = pick(rng);
        if (a == b) continue;
        u.add_row(a, b, coef(rng));
        if (s % 5 == 0) u.swap_rows(a, b);
    }
    return u;
}

}  // namespace k3dn::test
