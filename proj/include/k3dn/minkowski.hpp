#pragma once

#include "k3dn/polytope.hpp"

#include <string>
#include <vector>

namespace k3dn {

struct MinkowskiPart {
    LatticePolytope summand;  // translated so its lexicographically smallest vertex is 0
    long multiplicity = 1;
};

// lattice Minkowski decomposition of one face: the face is the sum of multiplicity copies of each summand
struct MinkowskiDatum {
    std::vector<MinkowskiPart> parts;

    bool is_trivial() const { return parts.size() == 1 && parts[0].multiplicity == 1; }
    std::string str() const;
};

MinkowskiDatum trivial_datum(const LatticePolytope& face);

// every lattice Minkowski decomposition of a polytope of dimension <= 2, trivial one first
std::vector<MinkowskiDatum> minkowski_decompositions(const LatticePolytope& polygon);

// Minkowski sum and lattice-point condition, checked by direct point-set summation
bool is_lattice_decomposition(const LatticePolytope& polygon, const MinkowskiDatum& datum);

// m1 refines m2
bool refines(const MinkowskiDatum& m1, const MinkowskiDatum& m2);

struct FaceDecomposition {
    LatticePolytope face;
    MinkowskiDatum datum;
    std::vector<LaurentPolynomial> witness;  // one h per part
};

struct MinkowskiCheck {
    bool ok = false;
    std::string reason;
    std::vector<FaceDecomposition> witness;  // facets only
};

// Newton polytope must be reflexive of dimension 3
MinkowskiCheck is_minkowski_polynomial(const LaurentPolynomial& p);

struct MCheck {
    bool ok = true;
    std::vector<std::string> failures;
};

// p_face = prod h_i^{n_i} x^nu for every listed face, with Newton(h_i) a translate of the summand
MCheck verify_M_polynomial(const LaurentPolynomial& p, const std::vector<FaceDecomposition>& data);

// every proper face with its trivial decomposition and witness h = p_face
std::vector<FaceDecomposition> trivial_decompositions(const LaurentPolynomial& p);

// summand shapes used by Minkowski polynomials
bool is_unit_segment(const LatticePolytope& s);
// triangle with edge lengths {n,1,1} and no interior lattice points; returns n or 0
long an_triangle_index(const LatticePolytope& s);

}  // namespace k3dn
