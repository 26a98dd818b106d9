#pragma once

#include "k3dn/poly.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace k3dn {

using WPoint = std::vector<ParamPolynomial>;

// (alpha, beta, gamma, delta) of the 2.33 map in the coefficients a0..a5
std::array<ParamPolynomial, 4> modular_invariants_233(const std::array<ParamPolynomial, 6>& a);

// families "2.1" (params c; P(2,3,6)), "2.28" (params c, d; P(2,3,5,6)), "2.33" (params a, b; P(2,3,5,6))
WPoint period_map_eval(const std::string& family, const std::map<std::string, ParamPolynomial>& params,
                       const ParamPolynomial& lambda, const ParamPolynomial& mu);
std::vector<long> period_map_weights(const std::string& family);

// p ~ q in weighted projective space: p_i = t^{w_i} q_i for some nonzero t (over the algebraic closure)
bool wp_equal(const WPoint& p, const WPoint& q, const std::vector<long>& weights);
bool wp_equal(const std::vector<Rat>& p, const std::vector<Rat>& q, const std::vector<long>& weights);

}  // namespace k3dn
