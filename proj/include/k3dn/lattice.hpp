#pragma once

#include "k3dn/matrix.hpp"
#include "k3dn/textfmt.hpp"

#include <string>
#include <vector>

namespace k3dn {

struct IntegralLattice {
    IntegerMatrix gram;
    std::vector<std::string> labels;

    std::size_t rank() const { return gram.rows(); }
};

// positive-definite Cartan matrices; D_n branches at node n-2, E_n uses the Bourbaki numbering
IntegerMatrix cartan_matrix(char type, int n);

IntegralLattice root_lattice(char type, int n);
IntegralLattice hyperbolic_plane();
IntegralLattice rescale(const IntegralLattice& l, const Int& k);
IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b);
IntegralLattice from_gram(const IntegerMatrix& gram, std::vector<std::string> labels = {});

bool is_even(const IntegerMatrix& gram);

struct BasicInvariants {
    std::size_t rank = 0;
    Int det;
    Signature sig;
    bool even = true;
};

BasicInvariants basic_invariants(const IntegralLattice& l);

// saturated complement of the integer radical; rank equals rank(m)
IntegralLattice radical_quotient(const IntegerMatrix& m);

// integer basis (as rows) of the kernel {x : m x = 0}; always saturated
IntegerMatrix integer_kernel(const IntegerMatrix& m);

// rows of sub_basis must span a primitive sublattice
IntegralLattice orthogonal_complement(const IntegerMatrix& sub_basis, const IntegralLattice& m);

// Gram of the sublattice spanned by the rows of basis
IntegerMatrix restrict_gram(const IntegerMatrix& gram, const IntegerMatrix& basis);

// [lattice] gram = [[..]], optional labels = [..]
IntegralLattice load_lattice(const Document& doc, bool strict = false,
                             std::vector<std::string>* warnings = nullptr);

}  // namespace k3dn
