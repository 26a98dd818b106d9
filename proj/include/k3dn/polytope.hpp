#pragma once

#include "k3dn/poly.hpp"

#include <string>
#include <vector>

namespace k3dn {

using Point = std::vector<long>;

// <normal, x> >= offset
struct Facet {
    Point normal;
    long offset = 0;
    friend bool operator==(const Facet&, const Facet&) = default;
};

// Convex lattice polytope of ambient dimension <= 3. Lower-dimensional polytopes carry a local
// lattice frame: the saturated lattice of the affine hull, origin + span(basis).
class LatticePolytope {
public:
    LatticePolytope() = default;

    std::size_t ambient() const { return ambient_; }
    int dim() const { return dim_; }
    bool empty() const { return vertices_.empty(); }
    bool full_dimensional() const { return dim_ == static_cast<int>(ambient_); }

    // sorted
    const std::vector<Point>& vertices() const { return vertices_; }
    // ambient facet inequalities, full-dimensional polytopes only
    const std::vector<Facet>& facets() const;

    const Point& origin() const { return origin_; }
    const std::vector<Point>& basis() const { return basis_; }
    const std::vector<Point>& local_vertices() const { return local_vertices_; }
    const std::vector<Facet>& local_facets() const { return local_facets_; }

    // nullopt-free: throws if p is off the affine lattice
    Point to_local(const Point& p) const;
    Point from_local(const Point& q) const;
    bool in_affine_lattice(const Point& p) const;
    bool contains(const Point& p) const;

    std::vector<Point> lattice_points() const;
    // translate so the lexicographically smallest vertex is at the origin
    LatticePolytope normalized() const;
    bool same_up_to_translation(const LatticePolytope& o) const;

    std::string str() const;

    friend LatticePolytope convex_hull(const std::vector<Point>& points, std::size_t ambient);
    friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
        return a.ambient_ == b.ambient_ && a.vertices_ == b.vertices_;
    }

private:
    std::size_t ambient_ = 0;
    int dim_ = -1;
    std::vector<Point> vertices_;
    std::vector<Facet> facets_;
    Point origin_;
    std::vector<Point> basis_;
    std::vector<Point> to_local_;  // ambient x dim, columns of V
    std::vector<Facet> local_facets_;
    std::vector<Point> local_vertices_;
};

LatticePolytope convex_hull(const std::vector<Point>& points, std::size_t ambient);
LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b);
// k-fold Minkowski sum, same as dilation for convex polytopes
LatticePolytope dilate(const LatticePolytope& a, long k);

long lattice_length(const Point& v);
Point primitive(const Point& v);

// counter-clockwise boundary vertices of a 2-dimensional polytope, in local coordinates
std::vector<Point> ccw_local_vertices(const LatticePolytope& p);
// boundary lattice points of a polygon in ambient coordinates, cyclically ordered
std::vector<Point> boundary_cycle(const LatticePolytope& p);

struct Face {
    int dim = 0;
    std::vector<Point> vertices;
    LatticePolytope polytope() const;
};

// all proper nonempty faces, ordered by dimension (descending) then vertex lists
std::vector<Face> faces(const LatticePolytope& p);

LatticePolytope newton_polytope(const LaurentPolynomial& p);

struct DualResult {
    bool reflexive = false;
    std::string reason;
    LatticePolytope dual;  // hull of the facet normals; only set when reflexive
};

DualResult dual_and_reflexive(const LatticePolytope& p);

// terms of p whose exponents lie on the face
LaurentPolynomial face_polynomial(const LaurentPolynomial& p, const LatticePolytope& face);

}  // namespace k3dn
