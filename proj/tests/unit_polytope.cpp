#include "doctest.h"
#include "support.hpp"

#include "k3dn/minkowski.hpp"
#include "k3dn/polytope.hpp"

#include <algorithm>

using namespace k3dn;
using namespace k3dn::test;

namespace {

LatticePolytope hull(const std::vector<Point>& pts) { return convex_hull(pts, pts.at(0).size()); }

bool has_face(const LatticePolytope& p, std::vector<Point> verts) {
    std::sort(verts.begin(), verts.end());
    for (const auto& f : faces(p)) {
        auto v = f.vertices;
        std::sort(v.begin(), v.end());
        if (v == verts) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("Newton polytopes") {
    auto t = newton_polytope(lp("x + y + a1*x^-1*y^-1"));
    CHECK(t.vertices() == std::vector<Point>{{-1, -1}, {0, 1}, {1, 0}});
    auto p = newton_polytope(lp("x + y + z + a2*x^-1 + a1*y^-1*z^-1"));
    CHECK(p.dim() == 3);
    CHECK(p.vertices().size() == 5);
    auto c = newton_polytope(lp("7", 2));
    CHECK(c.dim() == 0);
    CHECK(c.vertices() == std::vector<Point>{{0, 0}});
    CHECK(newton_polytope(lp("x + x^3 + x^2", 1)).vertices() == std::vector<Point>{{1}, {3}});
}

TEST_CASE("reflexivity and duals") {
    auto t = dual_and_reflexive(hull({{1, 0}, {0, 1}, {-1, -1}}));
    REQUIRE(t.reflexive);
    auto dv = t.dual.vertices();
    CHECK(dv == std::vector<Point>{{-1, -1}, {-1, 2}, {2, -1}});
    auto sq = dual_and_reflexive(hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    CHECK_FALSE(sq.reflexive);
    CHECK_FALSE(sq.reason.empty());
    CHECK_FALSE(dual_and_reflexive(hull({{2, 0}, {0, 2}, {-2, -2}})).reflexive);

    std::vector<Point> cube;
    for (long a : {-1, 1})
        for (long b : {-1, 1})
            for (long c : {-1, 1}) cube.push_back({a, b, c});
    auto d = dual_and_reflexive(hull(cube));
    REQUIRE(d.reflexive);
    CHECK(d.dual.vertices().size() == 6);
    auto back = dual_and_reflexive(d.dual);
    REQUIRE(back.reflexive);
    CHECK(back.dual.vertices() == hull(cube).vertices());
}

TEST_CASE("duality is an involution on fixture polytopes") {
    for (const char* s : {"x + y + z + x^-1*y^-1*z^-1", "x + y + z + x^-1 + y^-1 + z^-1",
                          "x + y + z + x^-1*y^-1*z^-1 + x^-1 + y^-1",
                          "(x*y*z+1)*(x*y*z^2+x*y*z+x+y)/(x*y*z) - 1"}) {
        auto P = newton_polytope(lp(s, 3));
        auto d = dual_and_reflexive(P);
        REQUIRE(d.reflexive);
        auto dd = dual_and_reflexive(d.dual);
        REQUIRE(dd.reflexive);
        CHECK(dd.dual.vertices() == P.vertices());
    }
}

TEST_CASE("lattice points and faces") {
    auto sq = hull({{-1, -1}, {1, -1}, {-1, 1}, {1, 1}});
    CHECK(sq.lattice_points().size() == 9);
    CHECK(faces(sq).size() == 8);
    auto seg = hull({{0, 0, 0}, {2, 2, 0}});
    CHECK(seg.dim() == 1);
    CHECK(seg.lattice_points().size() == 3);
    CHECK(lattice_length({4, -6}) == 2);
    CHECK(primitive({4, -6}) == Point{2, -3});
    auto dil = dilate(hull({{0, 0}, {1, 0}, {0, 1}}), 3);
    CHECK(dil.vertices() == std::vector<Point>{{0, 0}, {0, 3}, {3, 0}});
    auto ms = minkowski_sum(hull({{0, 0}, {1, 0}}), hull({{0, 0}, {0, 1}}));
    CHECK(ms.vertices().size() == 4);
}

TEST_CASE("face polynomials of the 2.28 example polytope") {
    auto p = lp("a0*x + a1*y + a2*x*y*z^2 + a3*y^-1*z^-1 + a4*x^-1*z^-1 + a5*z + a6*x*y*z + a7", 3);
    auto P = newton_polytope(p);
    CHECK(P.vertices().size() == 7);
    REQUIRE(dual_and_reflexive(P).reflexive);
    auto d1 = hull({{0, 1, 0}, {1, 1, 2}, {-1, 0, -1}, {0, 0, 1}});
    CHECK(has_face(P, d1.vertices()));
    CHECK(face_polynomial(p, d1) == lp("a1*y + a2*x*y*z^2 + a4*x^-1*z^-1 + a5*z", 3));
    auto d2 = hull({{1, 0, 0}, {1, 1, 2}, {0, -1, -1}, {0, 0, 1}});
    CHECK(face_polynomial(p, d2) == lp("a0*x + a2*x*y*z^2 + a3*y^-1*z^-1 + a5*z", 3));
    int squares = 0;
    for (const auto& f : faces(P))
        if (f.dim == 2 && f.vertices.size() == 4) ++squares;
    CHECK(squares == 3);
    CHECK(face_polynomial(p, P) == p);
    CHECK(face_polynomial(p, hull({{1, 0, 0}})) == lp("a0*x", 3));
}

TEST_CASE("facet polynomials reconstruct p for reflexive polytopes") {
    for (const char* s : {"x + y + z + a1*x^-1*y^-1*z^-1 + 3", "(x*y*z+1)*(c*x*y*z^2+d*x*y*z+x+y)/(x*y*z) - 1",
                          "x + y + z + x^-1 + y^-1 + z^-1 + 2*x*y + 5"}) {
        auto p = lp(s, 3);
        auto P = newton_polytope(p);
        REQUIRE(dual_and_reflexive(P).reflexive);
        LaurentPolynomial boundary(3);
        for (const auto& e : p.support())
            for (const auto& f : faces(P))
                if (f.dim == 2 && f.polytope().contains(e)) {
                    boundary.add_term(e, p.coefficient(e));
                    break;
                }
        LaurentPolynomial facet_sum(3);
        for (const auto& f : faces(P))
            if (f.dim == 2) facet_sum += face_polynomial(p, f.polytope());
        // boundary points on k facets are counted k times
        LaurentPolynomial overlap = facet_sum - boundary;
        for (const auto& [e, c] : overlap.terms()) {
            int k = 0;
            for (const auto& f : faces(P))
                if (f.dim == 2 && f.polytope().contains(e)) ++k;
            CHECK(c == ParamPolynomial(Rat(k - 1)) * p.coefficient(e));
        }
        CHECK(boundary + LaurentPolynomial::constant(3, p.constant_term()) == p);
    }
}

TEST_CASE("minkowski decompositions of small polygons") {
    auto sq = minkowski_decompositions(hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].is_trivial());
    CHECK(sq[1].parts.size() == 2);
    for (const auto& part : sq[1].parts) CHECK(is_unit_segment(part.summand));

    auto seg = minkowski_decompositions(hull({{0, 0}, {2, 0}}));
    REQUIRE(seg.size() == 3);
    CHECK(seg[0].is_trivial());

    auto a2 = hull({{0, 0}, {1, 0}, {0, 2}});
    auto a2d = minkowski_decompositions(a2);
    CHECK(a2d.size() == 1);
    for (const auto& d : a2d) CHECK(is_lattice_decomposition(a2, d));

    auto hex = hull({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}});
    auto hd = minkowski_decompositions(hex);
    CHECK(hd.size() == 6);
    for (const auto& d : hd) CHECK(is_lattice_decomposition(hex, d));

    CHECK_THROWS_WITH_AS(minkowski_decompositions(hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})),
                         doctest::Contains("only facets supported"), Error);
}

TEST_CASE("the lattice-point condition rejects non-lattice sums") {
    // segments (1,0) and (1,2) sum to a parallelogram with the extra point (1,1)
    auto par = hull({{0, 0}, {1, 0}, {2, 2}, {1, 2}});
    auto ds = minkowski_decompositions(par);
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].is_trivial());
    MinkowskiDatum fake{{{hull({{0, 0}, {1, 0}}), 1}, {hull({{0, 0}, {1, 2}}), 1}}};
    CHECK_FALSE(is_lattice_decomposition(par, fake));
    MinkowskiDatum wrong{{{hull({{0, 0}, {1, 0}}), 1}}};
    CHECK_FALSE(is_lattice_decomposition(par, wrong));
}

TEST_CASE("refinement") {
    auto sqp = hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    auto sq = minkowski_decompositions(sqp);
    CHECK(refines(sq[1], sq[0]));
    CHECK(refines(sq[0], sq[0]));
    auto big = dilate(sqp, 2);
    MinkowskiDatum k{{{sqp, 2}}};
    MinkowskiDatum ones{{{sqp, 1}, {sqp, 1}}};
    CHECK(refines(k, ones));
    MinkowskiDatum segs{{{hull({{0, 0}, {1, 0}}), 2}, {hull({{0, 0}, {0, 1}}), 2}}};
    CHECK(refines(segs, trivial_datum(big)));
    CHECK(refines(segs, k));
    MinkowskiDatum two{{{sqp, 2}}};
    CHECK_FALSE(refines(sq[1], two));
    auto hex = hull({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}});
    for (const auto& d : minkowski_decompositions(hex)) CHECK(refines(d, trivial_datum(hex)));
}
