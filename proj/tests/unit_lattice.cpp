#include "doctest.h"
#include "support.hpp"

#include "k3dn/discriminant.hpp"
#include "k3dn/lattice.hpp"

using namespace k3dn;
using namespace k3dn::test;

namespace {

bool is_unimodular(const IntegerMatrix& m) {
    Int d = determinant(m);
    return d == 1 || d == -1;
}

FiniteQuadraticForm cyclic(long n, Rat qv) { return make_form({Int(n)}, {{mod1(qv)}}, {qv}); }

}  // namespace

TEST_CASE("smith normal form small cases") {
    auto check = [](const IntegerMatrix& m, std::vector<long> want) {
        SmithForm s = smith_normal_form(m);
        CHECK(s.U * m * s.V == s.D);
        CHECK(is_unimodular(s.U));
        CHECK(is_unimodular(s.V));
        std::vector<Int> d = s.diagonal();
        REQUIRE(d.size() == want.size());
        for (std::size_t i = 0; i < d.size(); ++i) CHECK(d[i] == want[i]);
    };
    check(IntegerMatrix::identity(3), {1, 1, 1});
    check(mat({{2, 0}, {0, 3}}), {1, 6});
    check(mat({{0, 0}, {0, 0}}), {0, 0});
    check(mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), {2, 6, 12});
    SmithForm r = smith_normal_form(mat({{1, 2, 3}, {4, 5, 6}}));
    CHECK(r.U * mat({{1, 2, 3}, {4, 5, 6}}) * r.V == r.D);
    CHECK(r.D.rows() == 2);
    CHECK(r.D.cols() == 3);
}

TEST_CASE("smith normal form random matrices keep the divisibility chain") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> e(-1000, 1000);
    std::uniform_int_distribution<int> sz(1, 6);
    for (int t = 0; t < 150; ++t) {
        std::size_t r = sz(rng), c = sz(rng);
        IntegerMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = t % 3 == 0 ? e(rng) % 4 : e(rng);
        SmithForm s = smith_normal_form(m);
        REQUIRE(s.U * m * s.V == s.D);
        CHECK(is_unimodular(s.U));
        CHECK(is_unimodular(s.V));
        auto d = s.diagonal();
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            CHECK(d[i] >= 0);
            if (d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
            else CHECK(d[i + 1] == 0);
        }
    }
}

TEST_CASE("root lattices follow the printed Cartan conventions") {
    IntegerMatrix e6 = mat({{2, 0, -1, 0, 0, 0},
                            {0, 2, 0, -1, 0, 0},
                            {-1, 0, 2, -1, 0, 0},
                            {0, -1, -1, 2, -1, 0},
                            {0, 0, 0, -1, 2, -1},
                            {0, 0, 0, 0, -1, 2}});
    CHECK(root_lattice('E', 6).gram == e6);
    CHECK(root_lattice('A', 1).gram == mat({{2}}));
    CHECK(rescale(root_lattice('A', 1), -1).gram == mat({{-2}}));
    IntegerMatrix d5 = cartan_matrix('D', 5);
    CHECK(d5(2, 3) == -1);
    CHECK(d5(2, 4) == -1);
    CHECK(d5(3, 4) == 0);
    for (int n = 1; n <= 8; ++n) CHECK(determinant(cartan_matrix('A', n)) == n + 1);
    for (int n = 4; n <= 8; ++n) CHECK(determinant(cartan_matrix('D', n)) == 4);
    CHECK(determinant(cartan_matrix('E', 6)) == 3);
    CHECK(determinant(cartan_matrix('E', 7)) == 2);
    CHECK(determinant(cartan_matrix('E', 8)) == 1);
    CHECK_THROWS_AS(root_lattice('D', 3), Error);
    CHECK_THROWS_AS(root_lattice('E', 5), Error);
    CHECK_THROWS_AS(root_lattice('B', 3), Error);
    CHECK_THROWS_AS(rescale(hyperbolic_plane(), 0), Error);
    CHECK_THROWS_AS(from_gram(mat({{0, 1}, {2, 0}})), Error);
}

TEST_CASE("basic invariants") {
    auto h = basic_invariants(hyperbolic_plane());
    CHECK(h.rank == 2);
    CHECK(h.det == -1);
    CHECK(h.sig == Signature{1, 1, 0});
    CHECK(h.even);

    auto e8 = basic_invariants(rescale(root_lattice('E', 8), -1));
    CHECK(e8.det == 1);
    CHECK(e8.sig == Signature{0, 8, 0});
    CHECK(e8.even);

    auto u = direct_sum(hyperbolic_plane(), rescale(root_lattice('E', 8), -1));
    CHECK(u.rank() == 10);
    CHECK(basic_invariants(u).det == -1);

    CHECK_FALSE(basic_invariants(from_gram(mat({{1}}))).even);
    auto deg = basic_invariants(from_gram(mat({{1, 1}, {1, 1}})));
    CHECK(deg.sig == Signature{1, 0, 1});
}

TEST_CASE("signature is additive and rescaling by a negative number swaps it") {
    auto a = root_lattice('D', 5), b = hyperbolic_plane();
    Signature s = basic_invariants(direct_sum(a, b)).sig;
    CHECK(s.pos == 6);
    CHECK(s.neg == 1);
    Signature r = basic_invariants(rescale(direct_sum(a, b), -3)).sig;
    CHECK(r.pos == 1);
    CHECK(r.neg == 6);
}

TEST_CASE("discriminant groups") {
    CHECK(discriminant_group(hyperbolic_plane()).trivial());
    auto m2 = discriminant_group(from_gram(mat({{-2}})));
    REQUIRE(m2.invariant_factors() == std::vector<Int>{2});
    CHECK(m2.bilinear[0][0] == q(1, 2));
    CHECK(m2.quadratic[0] == q(3, 2));
    auto a2 = discriminant_group(root_lattice('A', 2));
    CHECK(a2.order() == 3);
    CHECK(sorted_q_values(a2) == std::vector<Rat>{0, q(2, 3), q(2, 3)});
    CHECK_THROWS_WITH_AS(discriminant_group(from_gram(mat({{1, 1}, {1, 1}}))), doctest::Contains("radical nonzero"),
                         Error);
}

TEST_CASE("negate_form") {
    CHECK(negate_form(discriminant_group(hyperbolic_plane())).trivial());
    auto z9 = cyclic(9, q(16, 9));
    CHECK(negate_form(z9).quadratic[0] == q(2, 9));
    CHECK(negate_form(cyclic(2, q(3, 2))).quadratic[0] == q(1, 2));
    CHECK(forms_equivalent(negate_form(negate_form(z9)), z9));
}

TEST_CASE("forms_equivalent") {
    CHECK(forms_equivalent(cyclic(5, q(2, 5)), cyclic(5, q(8, 5))));
    CHECK_FALSE(forms_equivalent(cyclic(5, q(2, 5)), cyclic(5, q(4, 5))));
    CHECK(forms_equivalent(discriminant_group(hyperbolic_plane()), discriminant_group(hyperbolic_plane())));
    CHECK_FALSE(forms_equivalent(cyclic(4, q(1, 2)), direct_sum(cyclic(2, q(1, 2)), cyclic(2, q(1, 2)))));
    // u(2) versus v(2): same group, different forms
    auto u2 = discriminant_group(rescale(hyperbolic_plane(), 2));
    auto v2 = discriminant_group(rescale(root_lattice('D', 4), 1));
    CHECK(u2.order() == 4);
    CHECK(v2.order() == 4);
    CHECK_FALSE(forms_equivalent(u2, v2));
    auto big = discriminant_group(from_gram(mat({{20000}})));
    CHECK_THROWS_WITH_AS(forms_equivalent(big, big, 100), doctest::Contains("brute-force bound exceeded"), Error);
}

TEST_CASE("discriminant of a direct sum is the sum of discriminants") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> e(-6, 6);
    int tested = 0;
    while (tested < 20) {
        long a = 2 * e(rng), b = e(rng), c = 2 * e(rng), d = 2 * e(rng);
        auto l1 = from_gram(mat({{a, b}, {b, c}}));
        auto l2 = from_gram(mat({{d}}));
        Int det = determinant(l1.gram) * d;
        if (det == 0 || iabs(det) > 200) continue;
        ++tested;
        auto lhs = discriminant_group(direct_sum(l1, l2));
        auto rhs = direct_sum(discriminant_group(l1), discriminant_group(l2));
        CHECK(lhs.order() == iabs(det));
        CHECK(check_compatibility(lhs));
        CHECK(forms_equivalent(lhs, rhs));
    }
}

TEST_CASE("discriminant form is independent of the basis") {
    std::mt19937_64 rng(3);
    auto l = direct_sum(root_lattice('A', 2), direct_sum(from_gram(mat({{-4}})), root_lattice('D', 4)));
    auto base = discriminant_group(l);
    for (int t = 0; t < 10; ++t) {
        IntegerMatrix u = random_unimodular(l.rank(), rng);
        auto moved = from_gram(u * l.gram * u.transpose());
        CHECK(forms_equivalent(discriminant_group(moved), base));
    }
}

TEST_CASE("embedding criteria") {
    CHECK(embedding_criteria(hyperbolic_plane()) == EmbeddingResult::exists_unique);
    CHECK(embedding_criteria(from_gram(mat({{0, 3}, {3, 4}}))) == EmbeddingResult::exists_unique);
    // rank 20 with two-generator discriminant group
    auto l = direct_sum(from_gram(mat({{2, 0}, {0, -2}})),
                        direct_sum(rescale(root_lattice('E', 8), -1), rescale(root_lattice('E', 8), -1)));
    l = direct_sum(l, rescale(hyperbolic_plane(), 1));
    CHECK(l.rank() == 20);
    CHECK(embedding_criteria(l) == EmbeddingResult::inconclusive);
    CHECK_THROWS_AS(embedding_criteria(from_gram(mat({{1}}))), Error);
}

TEST_CASE("orthogonal complement") {
    auto m = from_gram(mat({{2, 0}, {0, -2}}));
    auto c = orthogonal_complement(mat({{1, 0}}), m);
    CHECK(c.gram == mat({{-2}}));
    CHECK(orthogonal_complement(IntegerMatrix::identity(2), m).rank() == 0);
    CHECK_THROWS_WITH_AS(orthogonal_complement(mat({{2, 0}}), m), doctest::Contains("saturate input first"), Error);
}

TEST_CASE("radical quotient and kernels") {
    IntegerMatrix m = mat({{2, 1, 3}, {1, 2, 3}, {3, 3, 6}});
    CHECK(rank(m) == 2);
    auto l = radical_quotient(m);
    CHECK(l.rank() == 2);
    CHECK(determinant(l.gram) != 0);
    IntegerMatrix k = integer_kernel(m);
    REQUIRE(k.rows() == 1);
    CHECK((k * m).is_zero());
    auto same = radical_quotient(mat({{0, 1}, {1, 0}}));
    CHECK(basic_invariants(same).det == -1);
}

TEST_CASE("dn_dual_verify rejects a rank mismatch") {
    auto r = dn_dual_verify(hyperbolic_plane(), hyperbolic_plane());
    CHECK_FALSE(r.pass());
    bool named = false;
    for (const auto& c : r.checks)
        if (c.name == "rank_sum") named = !c.ok;
    CHECK(named);
}

TEST_CASE("lattice text format") {
    auto l = load_lattice(Document::load(fixture("lattices/e8.lat")));
    CHECK(l.rank() == 8);
    CHECK(basic_invariants(l).det == 1);
    auto t = load_lattice(Document::load(fixture("lattices/table-a-2.33.lat")));
    CHECK(t.gram == mat({{0, 3}, {3, 4}}));
    CHECK_THROWS_AS(load_lattice(Document::parse("[lattice]\ngram = [[1, 2], [3, 4]]\n")), Error);
    CHECK_THROWS_AS(load_lattice(Document::parse("[lattice]\ngram = [[1, 2], [2]]\n")), Error);
    CHECK_THROWS_AS(load_lattice(Document::parse("[lattice]\n")), ParseError);
    CHECK_THROWS_AS(load_lattice(Document::parse("")), ParseError);
    CHECK_THROWS_AS(load_lattice(Document::parse("[lattice]\ngram = [[1]]\ncolour = red\n"), true), ParseError);
    CHECK_NOTHROW(Document::parse("# fixture format version 1\n[lattice]\ngram = [[2]]\n"));
    CHECK_THROWS_WITH_AS(Document::parse("# fixture format version 2\n[lattice]\ngram = [[2]]\n"),
                         doctest::Contains("unsupported fixture format version"), ParseError);
    std::vector<std::string> warnings;
    load_lattice(Document::parse("[lattice]\ngram = [[2]]\ncolour = red\n"), false, &warnings);
    CHECK(warnings.size() == 1);
}
