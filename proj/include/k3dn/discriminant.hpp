#pragma once

#include "k3dn/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3dn {

// A finite abelian group presented as a product of cyclic groups Z/o_i,
// one per generator, with b mod 1 and (optionally) q mod 2 on the generators.
struct FiniteQuadraticForm {
    std::vector<Int> orders;
    std::vector<std::vector<Rat>> generators;  // lifts to the dual lattice, may be empty
    std::vector<std::vector<Rat>> bilinear;
    std::vector<Rat> quadratic;
    bool has_quadratic = true;

    std::size_t ngens() const { return orders.size(); }
    Int order() const;
    bool trivial() const { return order() == 1; }
    std::vector<Int> invariant_factors() const;
    // minimal number of generators
    std::size_t length() const { return invariant_factors().size(); }

    Rat b(const std::vector<Int>& x, const std::vector<Int>& y) const;
    Rat q(const std::vector<Int>& x) const;

    // every element as a coefficient vector, mixed radix over orders
    std::vector<std::vector<Int>> elements() const;
};

// validates shapes and reduces values; throws on inconsistent data
FiniteQuadraticForm make_form(std::vector<Int> orders, std::vector<std::vector<Rat>> bilinear,
                              std::vector<Rat> quadratic);

FiniteQuadraticForm discriminant_group(const IntegralLattice& l);
FiniteQuadraticForm negate_form(const FiniteQuadraticForm& f);
FiniteQuadraticForm direct_sum(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b);

// checks q(g+h) = q(g) + q(h) + 2 b(g,h) and b well defined on every pair of elements
bool check_compatibility(const FiniteQuadraticForm& f);

inline const Int kDefaultBruteForceBound = 10000;

bool forms_equivalent(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b,
                      const Int& bound = kDefaultBruteForceBound);

std::vector<Rat> sorted_q_values(const FiniteQuadraticForm& f);

enum class EmbeddingResult { exists_unique, exists, inconclusive };
std::string to_string(EmbeddingResult r);

struct EmbeddingTarget {
    std::size_t pos = 3, neg = 19;
    // slack subtracted from rank(target) - rank(L) for the two answers
    std::size_t unique_slack = 2, exists_slack = 1;
};

EmbeddingResult embedding_criteria(const IntegralLattice& l, const EmbeddingTarget& target = {});

struct GenusSymbol {
    std::size_t rank = 0;
    Signature sig;
    bool even = true;
    FiniteQuadraticForm disc;
};

GenusSymbol genus_of(const IntegralLattice& l);
bool genus_equal(const GenusSymbol& a, const GenusSymbol& b);

struct SubCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct DualReport {
    std::vector<SubCheck> checks;
    bool pass() const;
};

DualReport dn_dual_verify(const IntegralLattice& ls, const IntegralLattice& pic);

}  // namespace k3dn
