#include "k3dn/lpfixture.hpp"

#include "k3dn/lgmodels.hpp"

namespace k3dn {

namespace {

const std::vector<std::pair<std::string, std::vector<std::string>>> kLaurentSchema = {
    {"polynomial", {"id", "target", "n_vars", "minkowski", "expr"}},
    {"change", {"images", "expr"}},
};

const std::vector<std::pair<std::string, std::vector<std::string>>> kChainSchema = {
    {"chain", {"id", "from", "n_vars", "expr"}},
    {"step1", {"M", "f", "N", "minkowski", "expr"}},
    {"step2", {"M", "f", "N", "minkowski", "expr"}},
    {"step3", {"M", "f", "N", "minkowski", "expr"}},
    {"step4", {"M", "f", "N", "minkowski", "expr"}},
    {"step5", {"M", "f", "N", "minkowski", "expr"}},
    {"final", {"images", "expr"}},
};

std::size_t n_vars(const Document& doc, const std::string& section) {
    const Entry& e = doc.require(section, "n_vars");
    Int n = doc.get_int(e);
    if (n < 1 || n > 3) doc.fail(e, "n_vars must be 1, 2 or 3");
    return n.convert_to<std::size_t>();
}

LaurentPolynomial expr(const Document& doc, const Entry& e, std::size_t n) {
    try {
        return parse_laurent(e.raw, n);
    } catch (const Error& err) {
        doc.fail(e, err.what());
    }
}

std::string optional_raw(const Document& doc, const std::string& section, const std::string& key) {
    const Entry* e = doc.require(section).find(key);
    return e ? e->raw : std::string();
}

std::vector<Exponent> images(const Document& doc, const Entry& e, std::size_t n) {
    try {
        return parse_images(doc.get_string_list(e), n);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& err) {
        doc.fail(e, err.what());
    }
}

}  // namespace

std::vector<Exponent> parse_images(const std::vector<std::string>& list, std::size_t n) {
    if (list.size() != n) throw Error("need one image per variable");
    std::vector<Exponent> out;
    for (const auto& s : list) {
        LaurentPolynomial m = parse_laurent(s, n);
        if (!m.is_monomial() || m.terms().begin()->second != ParamPolynomial(1))
            throw Error("image '" + s + "' is not a monomial");
        out.push_back(m.terms().begin()->first);
    }
    return out;
}

LaurentFixture load_laurent(const Document& doc, bool strict, std::vector<std::string>* warnings) {
    doc.check_keys(kLaurentSchema, strict, warnings);
    LaurentFixture f;
    std::size_t n = n_vars(doc, "polynomial");
    f.id = doc.require("polynomial", "id").raw;
    f.target = optional_raw(doc, "polynomial", "target");
    f.minkowski = optional_raw(doc, "polynomial", "minkowski");
    f.poly = expr(doc, doc.require("polynomial", "expr"), n);
    if (doc.find("change")) {
        f.images = images(doc, doc.require("change", "images"), n);
        f.changed = expr(doc, doc.require("change", "expr"), n);
    }
    return f;
}

ChainFixture load_chain(const Document& doc, bool strict, std::vector<std::string>* warnings) {
    doc.check_keys(kChainSchema, strict, warnings);
    ChainFixture c;
    std::size_t n = n_vars(doc, "chain");
    if (n != 3) doc.fail(doc.require("chain", "n_vars"), "mutation chains need three variables");
    c.id = doc.require("chain", "id").raw;
    c.from = optional_raw(doc, "chain", "from");
    c.start = expr(doc, doc.require("chain", "expr"), n);
    for (int i = 1; doc.find("step" + std::to_string(i)); ++i) {
        std::string s = "step" + std::to_string(i);
        ChainStep st;
        const Entry& me = doc.require(s, "M");
        const Entry& ne = doc.require(s, "N");
        st.triple.M = doc.get_int_matrix(me);
        st.triple.N = doc.get_int_matrix(ne);
        for (const auto* e : {&me, &ne}) {
            const IntegerMatrix& A = e == &me ? st.triple.M : st.triple.N;
            if (A.rows() != 3 || A.cols() != 3) doc.fail(*e, "expected a 3x3 matrix");
            Int d = determinant(A);
            if (d != 1 && d != -1) doc.fail(*e, "matrix is not unimodular");
        }
        st.triple.f = expr(doc, doc.require(s, "f"), n);
        st.minkowski = optional_raw(doc, s, "minkowski");
        st.expected = expr(doc, doc.require(s, "expr"), n);
        c.steps.push_back(std::move(st));
    }
    if (c.steps.empty()) doc.fail(doc.require("chain").line, "chain has no steps");
    c.final_images = images(doc, doc.require("final", "images"), n);
    c.final_expected = expr(doc, doc.require("final", "expr"), n);
    return c;
}

LaurentPolynomial specialize_ones(const LaurentPolynomial& p) {
    std::map<std::string, Rat> ones;
    for (const auto& name : p.parameters()) ones[name] = 1;
    return specialize(p, ones);
}

namespace {

SubCheck equality(const std::string& name, const LaurentPolynomial& got, const LaurentPolynomial& want) {
    if (got == want) return {name, true, ""};
    LaurentPolynomial diff = got - want;
    return {name, false, "differs by " + format_laurent(diff)};
}

SubCheck period_check(const std::string& name, const std::vector<LaurentPolynomial>& polys, int terms) {
    std::vector<Rat> first = main_period(specialize_ones(polys[0]), terms);
    for (std::size_t i = 1; i < polys.size(); ++i)
        if (main_period(specialize_ones(polys[i]), terms) != first)
            return {name, false, "period changes at stage " + std::to_string(i)};
    std::string s;
    for (const auto& r : first) s += (s.empty() ? "" : ",") + to_string(r);
    return {name, true, s};
}

template <class F>
SubCheck guarded(const std::string& name, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        return {name, false, e.what()};
    }
}

}  // namespace

std::vector<SubCheck> check_laurent_fixture(const LaurentFixture& f, int period_terms) {
    std::vector<SubCheck> out;
    if (!f.target.empty())
        out.push_back(guarded("constructor", [&] { return equality("constructor", lg_constructor(f.target), f.poly); }));
    if (f.changed) {
        out.push_back(guarded("change of variables", [&] {
            return equality("change of variables", monomial_transform(f.poly, substitution_matrix(f.images)),
                            *f.changed);
        }));
        if (auto table = standard_change_of_variables(f.id))
            out.push_back({"change table", *table == f.images, *table == f.images ? "" : "images differ"});
        out.push_back(guarded("period invariance",
                              [&] { return period_check("period invariance", {f.poly, *f.changed}, period_terms); }));
    }
    return out;
}

std::vector<SubCheck> check_chain(const ChainFixture& c, int period_terms) {
    std::vector<SubCheck> out;
    std::vector<LaurentPolynomial> stages{c.start};
    LaurentPolynomial p = c.start;
    bool ok = true;
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
        std::string name = "step " + std::to_string(i + 1);
        if (!c.steps[i].minkowski.empty()) name += " (" + c.steps[i].minkowski + ")";
        try {
            p = mutate_triple(p, c.steps[i].triple);
        } catch (const Error& e) {
            out.push_back({name, false, e.what()});
            ok = false;
            break;
        }
        out.push_back(equality(name, p, c.steps[i].expected));
        stages.push_back(p);
    }
    if (ok) {
        out.push_back(guarded("final change", [&] {
            LaurentPolynomial q = monomial_transform(p, substitution_matrix(c.final_images));
            stages.push_back(q);
            return equality("final change", q, c.final_expected);
        }));
        out.push_back(guarded("period invariance", [&] { return period_check("period invariance", stages, period_terms); }));
    }
    return out;
}

}  // namespace k3dn
