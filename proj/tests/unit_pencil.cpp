#include "doctest.h"
#include "support.hpp"

#include "k3dn/pencil.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace k3dn;
using namespace k3dn::test;

namespace {

PencilConfig family(const std::string& id) { return load_family_file(fixture("families/" + id + ".fam"), true); }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string failing(const LatticeReport& r) {
    if (!r.error.empty()) return "error";
    for (const auto& c : r.checks)
        if (!c.ok) return c.name;
    return "";
}

}  // namespace

TEST_CASE("loading family 2.33") {
    auto cfg = family("2.33");
    CHECK(cfg.family_id == "2.33");
    REQUIRE(cfg.singularities.size() == 5);
    std::string types;
    for (const auto& s : cfg.singularities) types += s.type + std::to_string(s.rank) + " ";
    CHECK(types == "A2 A6 A3 A2 A2 ");
    CHECK(cfg.curve_labels.size() == 3);
    CHECK(cfg.pic.gram == mat({{0, 3}, {3, 4}}));
}

TEST_CASE("assemble_gram") {
    auto g = assemble_gram(family("2.32"));
    CHECK(g.gram.rows() == 18);
    CHECK(determinant(g.gram) != 0);
    CHECK(g.gram.is_symmetric());

    auto g1 = assemble_gram(family("2.1"));
    CHECK(g1.gram.rows() == 19);
    CHECK(rank(g1.gram) == 18);
    CHECK(g1.labels.front() == "E1_1");
    CHECK(g1.labels.back() == "H2");

    PencilConfig one;
    one.family_id = "single";
    one.singularities = {{"P1", 'A', 1, ""}};
    one.mixed_B = IntegerMatrix(0, 1);
    one.mixed_C = IntegerMatrix(0, 0);
    CHECK(assemble_gram(one).gram == mat({{-2}}));

    one.mixed_B = IntegerMatrix(0, 2);
    CHECK_THROWS_AS(assemble_gram(one), Error);
}

TEST_CASE("assemble_gram is covariant under reordering singular points") {
    auto cfg = family("2.33");
    auto base = assemble_gram(cfg);
    auto swapped = cfg;
    std::swap(swapped.singularities[0], swapped.singularities[1]);
    // move the matching B columns: P1 has 2 exceptional curves, P2 has 6
    IntegerMatrix b(cfg.mixed_B.rows(), cfg.mixed_B.cols());
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) {
            std::size_t src = c < 6 ? c + 2 : (c < 8 ? c - 6 : c);
            b(r, c) = cfg.mixed_B(r, src);
        }
    swapped.mixed_B = b;
    auto moved = assemble_gram(swapped);
    // exceptional labels travel with their singular point, so compare entries by label
    REQUIRE(moved.labels.size() == base.labels.size());
    auto pos = [&](const std::string& l) {
        auto it = std::find(base.labels.begin(), base.labels.end(), l);
        REQUIRE(it != base.labels.end());
        return static_cast<std::size_t>(it - base.labels.begin());
    };
    CHECK(moved.labels.front() == "E2_1");
    for (std::size_t i = 0; i < moved.labels.size(); ++i)
        for (std::size_t j = 0; j < moved.labels.size(); ++j)
            CHECK(moved.gram(i, j) == base.gram(pos(moved.labels[i]), pos(moved.labels[j])));
    CHECK(genus_equal(genus_of(build_LS(swapped)), genus_of(build_LS(cfg))));
}

TEST_CASE("galois_invariant") {
    auto cfg = family("2.33");
    auto m = assemble_gram(cfg);
    std::vector<std::vector<std::string>> singletons;
    for (const auto& l : m.labels) singletons.push_back({l});
    auto same = galois_invariant(m, singletons);
    CHECK(same.gram == m.gram);
    CHECK(galois_invariant(same, singletons).gram == same.gram);

    auto g12 = family("2.12");
    CHECK(galois_invariant(assemble_gram(g12), g12.galois_orbits).gram.rows() == 20);
    auto g10 = family("10.1");
    CHECK(galois_invariant(assemble_gram(g10), g10.galois_orbits).gram.rows() == 11);
    CHECK_THROWS_WITH_AS(galois_invariant(m, {{"nope"}}), doctest::Contains("unknown label"), Error);
}

TEST_CASE("build_LS ranks") {
    CHECK(build_LS(family("2.33")).rank() == 18);
    CHECK(build_LS(family("10.1")).rank() == 10);
    CHECK(build_LS(family("4.1")).rank() == 16);
    CHECK(build_LS(family("9.1")).rank() == 11);
    auto l21 = build_LS(family("2.1"));
    CHECK(l21.rank() == 18);
    CHECK(discriminant_group(l21).trivial());
}

TEST_CASE("radical quotient determinant divides the nonzero elementary divisors") {
    auto m = assemble_gram(family("2.1")).gram;
    auto l = radical_quotient(m);
    Int prod = 1;
    for (const auto& d : smith_normal_form(m).diagonal())
        if (d != 0) prod *= d;
    CHECK(prod % determinant(l.gram) == 0);
}

TEST_CASE("verify_family on printed data") {
    auto r4 = verify_family(family("2.4"));
    CHECK(r4.pass());
    CHECK(r4.invariant_factors == std::vector<Int>{9});
    CHECK(verify_family(family("3.27")).pass());
    CHECK(verify_family(family("2.1")).pass());
}

TEST_CASE("a flipped sign is caught and named") {
    auto cfg = family("2.33");
    cfg.mixed_C(2, 2) = -cfg.mixed_C(2, 2);
    auto r = verify_family(cfg);
    CHECK_FALSE(r.pass());
    CHECK_FALSE(failing(r).empty());

    auto c2 = family("2.4");
    for (std::size_t j = 0; j < c2.mixed_B.cols(); ++j)
        if (c2.mixed_B(0, j) != 0) {
            c2.mixed_B(0, j) = -c2.mixed_B(0, j);
            break;
        }
    CHECK_FALSE(verify_family(c2).pass());
}

TEST_CASE("schema errors") {
    CHECK_THROWS_AS(load_family(Document::parse("", "empty.fam")), ParseError);
    std::string text = slurp(fixture("families/2.33.fam"));
    std::string bad = text;
    bad.replace(bad.find("C = [[-2, 0, 1]"), 15, "C = [[-2, 0, 2]");
    CHECK_THROWS_WITH_AS(load_family(Document::parse(bad, "bad.fam")), doctest::Contains("not symmetric"), ParseError);
    std::string unknown = text + "\n[family2]\nfoo = 1\n";
    CHECK_THROWS_AS(load_family(Document::parse(unknown, "u.fam"), true), ParseError);
    std::vector<std::string> warnings;
    CHECK_NOTHROW(load_family(Document::parse(unknown, "u.fam"), false, &warnings));
    CHECK_FALSE(warnings.empty());
    std::string dup = text;
    dup.replace(dup.find("P2 = A6"), 2, "P1");
    CHECK_THROWS_WITH_AS(load_family(Document::parse(dup, "d.fam")), doctest::Contains("duplicate"), ParseError);
}

TEST_CASE("parse errors carry a location") {
    try {
        load_lattice(Document::parse("[lattice]\n\ngram = [[1, 2]\n", "loc.fam"));
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).rfind("loc.fam:3", 0) == 0);
    }
}
