#include "doctest.h"
#include "support.hpp"

#include "k3dn/fano.hpp"
#include "k3dn/pencil.hpp"
#include "k3dn/periodmap.hpp"

using namespace k3dn;
using namespace k3dn::test;

namespace {

IntegerMatrix pic_table(const std::string& id) { return load_family_file(fixture("families/" + id + ".fam")).pic.gram; }

bool genus_eq(const IntegralLattice& a, const IntegerMatrix& b) {
    return genus_equal(genus_of(a), genus_of(from_gram(b)));
}

Int det3_cofactor(const IntegerMatrix& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

}  // namespace

TEST_CASE("anticanonical pairings of products") {
    CHECK(anticanonical_gram(product_of_projective_spaces({1, 1, 1})).gram == mat({{0, 2, 2}, {2, 0, 2}, {2, 2, 0}}));
    CHECK(anticanonical_gram(product_of_projective_spaces({3})).gram == mat({{4}}));
    CHECK(anticanonical_gram(product_of_projective_spaces({1, 2})).gram == mat({{0, 3}, {3, 2}}));
    auto t = product_of_projective_spaces({1, 2});
    t.minus_K = {Int(1)};
    CHECK_THROWS_AS(anticanonical_gram(t), Error);
}

TEST_CASE("triple intersection files") {
    auto p12 = load_triple(Document::load(fixture("fano/p1p2.tri")), true);
    CHECK(anticanonical_gram(p12).gram == pic_table("2.34"));
    auto p3 = load_triple(Document::load(fixture("fano/p3.tri")), true);
    CHECK(anticanonical_gram(p3).gram == mat({{4}}));
    auto p111 = load_triple(Document::load(fixture("fano/p1p1p1.tri")), true);
    CHECK(anticanonical_gram(p111).gram == pic_table("3.27"));
    CHECK_THROWS_AS(load_triple(Document::parse("[triple]\nlabels = [H]\nminus_K = [4]\nentry = [1, 1, 2, 1]\n")),
                    ParseError);
}

TEST_CASE("blow-ups use 2g - 2 on the exceptional class") {
    auto p3 = anticanonical_gram(product_of_projective_spaces({3}));
    auto line = blowup_extend(p3, {{Int(1)}, Int(0)});
    CHECK(line.gram == mat({{4, 1}, {1, -2}}));
    CHECK(genus_eq(line, pic_table("2.33")));
    auto quartic = blowup_extend(p3, {{Int(4)}, Int(1)});
    CHECK(quartic.gram == mat({{4, 4}, {4, 0}}));
    CHECK(genus_eq(quartic, pic_table("2.25")));
    CHECK(blowup_extend(p3, {{Int(7)}, Int(1)}).gram(1, 1) == 0);
}

TEST_CASE("blow-up determinant identity") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> e(-5, 5);
    for (int t = 0; t < 40; ++t) {
        long a = e(rng), b = e(rng), c = e(rng);
        IntegerMatrix g = mat({{2 * a, b}, {b, 2 * c}});
        std::vector<Int> y{Int(e(rng)), Int(e(rng))};
        Int genus = (t % 4);
        auto ext = blowup_extend(from_gram(g), {y, genus});
        // adj of a 2x2 matrix
        IntegerMatrix adj = mat({{2 * c, -b}, {-b, 2 * a}});
        std::vector<Int> ay = adj * y;
        Int quad = y[0] * ay[0] + y[1] * ay[1];
        CHECK(determinant(ext.gram) == determinant(g) * (2 * genus - 2) - quad);
        CHECK(determinant(ext.gram) == det3_cofactor(ext.gram));
    }
}

TEST_CASE("double covers") {
    auto base = product_of_projective_spaces({1, 2});
    auto x218 = double_cover_gram(base, {Int(1), Int(2)});
    CHECK(x218.gram == mat({{0, 4}, {4, 2}}));
    CHECK(genus_eq(x218, pic_table("2.18")));
    auto x22 = double_cover_gram(base, {Int(1), Int(1)});
    CHECK(x22.gram == mat({{0, 2}, {2, 2}}));
    CHECK(genus_eq(x22, pic_table("2.2")));
    CHECK(double_cover_gram(base, {Int(0), Int(0)}).gram.is_zero());
}

TEST_CASE("projective bundles over P2") {
    CHECK(projective_bundle_gram(2, {Int(0), Int(2)}).gram == mat({{2, 5}, {5, 10}}));
    auto b1 = projective_bundle_gram(2, {Int(0), Int(1)});
    CHECK(b1.gram == mat({{2, 4}, {4, 4}}));
    CHECK(genus_eq(b1, pic_table("2.35")));
    auto b0 = projective_bundle_gram(2, {Int(0), Int(0)});
    CHECK(b0.gram == mat({{2, 3}, {3, 0}}));
    CHECK(genus_eq(b0, pic_table("2.34")));
    CHECK_THROWS_AS(projective_bundle_gram(5, {Int(0), Int(0)}), Error);
}

TEST_CASE("product del Pezzo lattices") {
    CHECK(product_dp_lattice(1).gram == mat({{-2, 0, -1}, {0, 2, 3}, {-1, 3, 0}}));
    auto n6 = product_dp_lattice(6).gram;
    CHECK(n6.rows() == 8);
    CHECK(n6(5, 5) == -2);
    CHECK(n6(6, 6) == 2);
    CHECK(n6(7, 7) == 0);
    for (int d = 1; d <= 6; ++d) {
        auto inv = basic_invariants(product_dp_lattice(d));
        CHECK(inv.rank == static_cast<std::size_t>(d) + 2);
        CHECK(inv.even);
        CHECK(inv.sig.pos == 1);
    }
    CHECK_THROWS_AS(product_dp_lattice(9), Error);
}

TEST_CASE("H + R(2) identification") {
    for (int d = 1; d <= 6; ++d) CHECK(dp_root_identification(d).genus_equal);
    CHECK_FALSE(dp_compare(3, "A6", root_lattice('A', 6)).genus_equal);
    CHECK_FALSE(dp_compare(6, "E6", root_lattice('E', 6)).genus_equal);
}

TEST_CASE("complement of the classes 3R_i - G in N_6") {
    auto n = product_dp_lattice(6);
    IntegerMatrix sub(6, 8);
    for (std::size_t i = 0; i < 6; ++i) {
        sub(i, i) = 3;
        sub(i, 6) = -1;
    }
    CHECK_THROWS_WITH_AS(orthogonal_complement(sub, n), doctest::Contains("saturate"), Error);
    IntegerMatrix saturated = integer_kernel(integer_kernel(sub));
    CHECK(saturated.rows() == 6);
    auto c = orthogonal_complement(saturated, n);
    CHECK(c.rank() == 2);
    std::vector<Int> v(8, Int(0));
    v[6] = 3;
    v[7] = -1;
    std::vector<Int> nv = n.gram * v;
    for (std::size_t i = 0; i < 6; ++i) {
        Int dot = 0;
        for (std::size_t j = 0; j < 8; ++j) dot += sub(i, j) * nv[j];
        CHECK(dot == 0);
    }
    CHECK(basic_invariants(c).sig.pos == 1);
}
