#pragma once

#include "k3dn/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3dn {

// Parametrized toric LG models. Targets:
//   dP9 .. dP3          del Pezzo surface of that degree (pair (S, D))
//   dP5~, dP4~, dP3~    the same on the crepant resolution, before coefficient modification
//   quadric-T4, quadric-T2, quadric-T2~
//   2.34 3.27 3.28 4.10 5.3 6.1 7.1 8.1   S x P1, i.e. f_S + z + a_k z^-1
LaurentPolynomial lg_constructor(const std::string& target);
std::vector<std::string> lg_targets();

// change of variables taking lg_constructor(family) to its standard form, as images of (x, y, z)
std::optional<std::vector<Exponent>> standard_change_of_variables(const std::string& family);

}  // namespace k3dn
