#include "doctest.h"
#include "support.hpp"

#include "k3dn/lgmodels.hpp"
#include "k3dn/lpfixture.hpp"
#include "k3dn/minkowski.hpp"
#include "k3dn/mutation.hpp"
#include "k3dn/polytope.hpp"

#include <filesystem>

using namespace k3dn;
using namespace k3dn::test;

namespace {

std::vector<Rat> rats(std::vector<long> v) { return {v.begin(), v.end()}; }

Rat brute_constant_term(const LaurentPolynomial& p, int j) {
    return p.pow(j).constant_term().constant();
}

}  // namespace

TEST_CASE("Minkowski polynomials") {
    auto p = lp("(x*y*z+1)*(x*y*z^2+x*y*z+x+y)/(x*y*z) - 1", 3);
    auto r = is_minkowski_polynomial(p);
    CHECK(r.ok);
    CHECK_FALSE(r.witness.empty());
    CHECK(verify_M_polynomial(p, r.witness).ok);

    auto bent = p;
    bent.add_term({1, 0, 0}, 1);
    auto rb = is_minkowski_polynomial(bent);
    CHECK_FALSE(rb.ok);
    CHECK_FALSE(rb.reason.empty());
    CHECK_FALSE(is_minkowski_polynomial(lp("x + y + z + 2*x^-1*y^-1*z^-1")).ok);
    CHECK(is_minkowski_polynomial(lp("x + y + z + x^-1*y^-1*z^-1")).ok);
    CHECK(is_minkowski_polynomial(lp("x + y + z + x^-1 + y^-1 + z^-1")).ok);
    CHECK_THROWS_WITH_AS(is_minkowski_polynomial(lp("x + y + z + 1")), doctest::Contains("non-reflexive"), Error);
    CHECK_THROWS_AS(is_minkowski_polynomial(lp("x + y + x^-1*y^-1")), Error);
}

TEST_CASE("verify_M_polynomial with supplied witnesses") {
    auto p = lp("x + y + z + x^-1*y^-1*z^-1 + 4", 3);
    CHECK(verify_M_polynomial(p, trivial_decompositions(p)).ok);

    auto sqp = lp("x + y + x*y + 1", 2);
    auto sq = newton_polytope(sqp);
    auto ds = minkowski_decompositions(sq);
    REQUIRE(ds.size() == 2);
    FaceDecomposition good{sq, ds[1], {}};
    for (const auto& part : ds[1].parts)
        good.witness.push_back(part.summand.vertices()[1][0] == 1 ? lp("1 + x", 2) : lp("1 + y", 2));
    CHECK(verify_M_polynomial(sqp, {good}).ok);
    FaceDecomposition bad = good;
    bad.witness[0] = bad.witness[0] + lp("x", 2);
    CHECK_FALSE(verify_M_polynomial(sqp, {bad}).ok);
    FaceDecomposition shape = good;
    shape.witness.pop_back();
    CHECK_THROWS_WITH_AS(verify_M_polynomial(sqp, {shape}), doctest::Contains("shape mismatch"), Error);
    CHECK_FALSE(verify_M_polynomial(lp("x + y + 2*x*y + 1", 2), {good}).ok);
}

TEST_CASE("mutation") {
    auto p = lp("x*y + y + (1 + x)*y^-1", 2);
    auto g = lp("1 + x", 2);
    CHECK(mutate(p, {0, 1}, lp("1", 2)) == p);
    auto m = mutate(p, {0, 1}, g);
    CHECK(m == lp("(1 + x)^2*y + y^-1", 2));
    CHECK(mutate(m, {0, -1}, g) == p);
    CHECK_THROWS_WITH_AS(mutate(lp("x + y + x^-1*y^-1", 2), {0, 1}, g), doctest::Contains("not mutable"), Error);
    CHECK_THROWS_AS(mutate(p, {1, 0}, g), Error);
    CHECK(main_period(m, 7) == main_period(p, 7));
}

TEST_CASE("mutation triples") {
    auto p = lp("x + y + z + a1*x^-1*y^-1*z^-1", 3);
    MutationTriple id{IntegerMatrix::identity(3), lp("1", 3), IntegerMatrix::identity(3)};
    CHECK(mutate_triple(p, id) == p);
    MutationTriple bad{IntegerMatrix::identity(3), lp("1 + x", 3), IntegerMatrix::identity(3)};
    CHECK_THROWS_WITH_AS(mutate_triple(p, bad), doctest::Contains("non-Laurent"), Error);
}

TEST_CASE("main period") {
    CHECK(main_period(lp("x + y + x^-1*y^-1", 2), 6) == rats({1, 0, 0, 6, 0, 0, 90}));
    auto bin = main_period(lp("x + x^-1", 1), 10);
    CHECK(bin == rats({1, 0, 2, 0, 6, 0, 20, 0, 70, 0, 252}));
    CHECK(main_period(lp("3", 2), 3) == rats({1, 3, 9, 27}));
    CHECK_THROWS_AS(main_period(lp("a*x + x^-1", 1), 3), Error);
    auto p = lp("x + y + z + x^-1 + y^-1 + z^-1 + x*y^-1 + 2", 3);
    auto serial = main_period(p, 7, 1);
    CHECK(main_period(p, 7, 4) == serial);
    for (int j = 0; j <= 5; ++j) CHECK(serial[j] == brute_constant_term(p, j));
}

TEST_CASE("period is invariant under unimodular substitution") {
    auto p = lp("x + y + z + x^-1*y^-1 + z^-1 + 1", 3);
    auto a = mat({{1, 1, 0}, {0, 1, 0}, {2, -1, 1}});
    CHECK(main_period(monomial_transform(p, a), 7) == main_period(p, 7));
}

TEST_CASE("LG constructors") {
    CHECK(lg_constructor("dP9") == lp("x + y + a1*x^-1*y^-1", 2));
    CHECK(lg_constructor("dP6") == lp("x + y + a1*x^-1*y^-1 + a1*a2*x^-1 + a1*a3*y^-1 + a4*x*y", 2));
    CHECK(lg_constructor("dP3").coefficient({1, 0}) == ParamPolynomial::param("a1") * ParamPolynomial::param("a4") *
                                                               ParamPolynomial::param("a7") *
                                                               (ParamPolynomial::param("a3") + ParamPolynomial::param("a6")) +
                                                           1);
    CHECK(lg_constructor("dP3").size() == 9);
    CHECK(lg_constructor("3.27") == lp("x + a1*x^-1 + y + a2*y^-1 + z + a3*z^-1"));
    CHECK(specialize_ones(lg_constructor("dP9")) == lp("x + y + x^-1*y^-1"));
    CHECK_THROWS_WITH_AS(lg_constructor("dP2"), doctest::Contains("unsupported target"), Error);
    CHECK_THROWS_AS(lg_constructor("dP1"), Error);
    CHECK_THROWS_AS(lg_constructor("11.1"), Error);
    CHECK_FALSE(standard_change_of_variables("3.27").has_value());
    CHECK(standard_change_of_variables("6.1").has_value());
}

TEST_CASE("Laurent fixtures") {
    int seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(fixture("laurent"))) {
        auto doc = Document::load(entry.path().string());
        if (doc.find("chain")) {
            for (const auto& c : check_chain(load_chain(doc, true))) CHECK_MESSAGE(c.ok, c.name << ": " << c.detail);
        } else {
            for (const auto& c : check_laurent_fixture(load_laurent(doc, true)))
                CHECK_MESSAGE(c.ok, entry.path().filename().string() << " " << c.name << ": " << c.detail);
        }
        ++seen;
    }
    CHECK(seen == 22);
}

TEST_CASE("Laurent fixture schema") {
    CHECK_THROWS_AS(load_laurent(Document::parse("[polynomial]\nid = q\n")), ParseError);
    CHECK_THROWS_AS(load_laurent(Document::parse("[polynomial]\nid = q\nn_vars = 2\nexpr = x +\n")), Error);
    CHECK_THROWS_AS(load_laurent(Document::parse("[polynomial]\nid = q\nn_vars = 2\nexpr = x\ncolour = 1\n"), true),
                    ParseError);
    CHECK(parse_images({"y", "x^-1", "z"}, 3) == std::vector<Exponent>{{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}});
    CHECK_THROWS_AS(parse_images({"x + y"}, 2), Error);
}
