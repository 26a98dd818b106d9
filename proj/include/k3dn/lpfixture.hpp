#pragma once

#include "k3dn/discriminant.hpp"
#include "k3dn/mutation.hpp"
#include "k3dn/textfmt.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3dn {

// one Laurent polynomial, optionally with a change of variables and its expected image
struct LaurentFixture {
    std::string id;
    std::string target;  // lg_constructor target, empty if none
    std::string minkowski;
    LaurentPolynomial poly;
    std::vector<Exponent> images;
    std::optional<LaurentPolynomial> changed;
};

struct ChainStep {
    MutationTriple triple;
    std::string minkowski;
    LaurentPolynomial expected;
};

struct ChainFixture {
    std::string id;
    std::string from;  // id of the LaurentFixture whose changed form starts the chain
    LaurentPolynomial start;
    std::vector<ChainStep> steps;
    std::vector<Exponent> final_images;
    LaurentPolynomial final_expected;
};

LaurentFixture load_laurent(const Document& doc, bool strict = false, std::vector<std::string>* warnings = nullptr);
ChainFixture load_chain(const Document& doc, bool strict = false, std::vector<std::string>* warnings = nullptr);

// exponent vectors of monomial images such as "y^-1", "x^-1*y"
std::vector<Exponent> parse_images(const std::vector<std::string>& images, std::size_t n_vars);

// every parameter set to 1
LaurentPolynomial specialize_ones(const LaurentPolynomial& p);

// constructor output, change of variables, and period invariance at a_i = 1 (first period_terms + 1 terms)
std::vector<SubCheck> check_laurent_fixture(const LaurentFixture& f, int period_terms = 7);
// each mutation step, the final change of variables, and period invariance along the chain
std::vector<SubCheck> check_chain(const ChainFixture& c, int period_terms = 7);

}  // namespace k3dn
