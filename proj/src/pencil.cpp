#include "k3dn/pencil.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace k3dn {

std::string SingularPoint::exceptional_label(int j) const {
    return "E" + label.substr(1) + "_" + std::to_string(j);
}

std::size_t PencilConfig::exceptional_count() const {
    std::size_t n = 0;
    for (const auto& s : singularities) n += static_cast<std::size_t>(s.rank);
    return n;
}

LabeledMatrix assemble_gram(const PencilConfig& cfg) {
    std::size_t ne = cfg.exceptional_count(), nc = cfg.curve_labels.size();
    if (cfg.mixed_B.rows() != nc || cfg.mixed_B.cols() != ne)
        throw Error("mixed matrix B is " + std::to_string(cfg.mixed_B.rows()) + "x" +
                    std::to_string(cfg.mixed_B.cols()) + ", expected " + std::to_string(nc) + "x" +
                    std::to_string(ne));
    if (cfg.mixed_C.rows() != nc || cfg.mixed_C.cols() != nc) throw Error("mixed matrix C has wrong size");
    if (!cfg.mixed_C.is_symmetric()) throw Error("mixed matrix C is not symmetric");
    LabeledMatrix out{IntegerMatrix(ne + nc, ne + nc), {}};
    std::size_t off = 0;
    for (const auto& s : cfg.singularities) {
        IntegerMatrix c = cartan_matrix(s.type, s.rank);
        for (int i = 0; i < s.rank; ++i) {
            for (int j = 0; j < s.rank; ++j) out.gram(off + i, off + j) = -c(i, j);
            out.labels.push_back(s.exceptional_label(i + 1));
        }
        off += static_cast<std::size_t>(s.rank);
    }
    for (std::size_t i = 0; i < nc; ++i) {
        for (std::size_t j = 0; j < ne; ++j) out.gram(ne + i, j) = out.gram(j, ne + i) = cfg.mixed_B(i, j);
        for (std::size_t j = 0; j < nc; ++j) out.gram(ne + i, ne + j) = cfg.mixed_C(i, j);
        out.labels.push_back(cfg.curve_labels[i]);
    }
    return out;
}

LabeledMatrix galois_invariant(const LabeledMatrix& m, const std::vector<std::vector<std::string>>& orbits) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < m.labels.size(); ++i) index[m.labels[i]] = i;
    std::map<std::string, std::size_t> orbit_of;
    for (std::size_t o = 0; o < orbits.size(); ++o)
        for (const auto& l : orbits[o]) {
            if (!index.count(l)) throw Error("orbit references unknown label '" + l + "'");
            if (orbit_of.count(l)) throw Error("label '" + l + "' appears in two orbits");
            orbit_of[l] = o;
        }
    std::vector<std::vector<std::size_t>> groups;
    std::vector<std::string> names;
    std::set<std::size_t> seen;
    for (const auto& l : m.labels) {
        auto it = orbit_of.find(l);
        if (it == orbit_of.end()) {
            groups.push_back({index[l]});
            names.push_back(l);
            continue;
        }
        if (!seen.insert(it->second).second) continue;
        std::vector<std::size_t> g;
        std::string name;
        for (const auto& member : orbits[it->second]) {
            g.push_back(index[member]);
            name += (name.empty() ? "" : "+") + member;
        }
        groups.push_back(g);
        names.push_back(name);
    }
    LabeledMatrix out{IntegerMatrix(groups.size(), groups.size()), names};
    for (std::size_t a = 0; a < groups.size(); ++a)
        for (std::size_t b = 0; b < groups.size(); ++b) {
            Int s = 0;
            for (auto i : groups[a])
                for (auto j : groups[b]) s += m.gram(i, j);
            out.gram(a, b) = s;
        }
    return out;
}

IntegralLattice build_LS(const PencilConfig& cfg) {
    IntegralLattice ls = radical_quotient(galois_invariant(assemble_gram(cfg), cfg.galois_orbits).gram);
    std::size_t want = 20 - std::min<std::size_t>(20, cfg.pic.rank());
    if (ls.rank() != want)
        throw Error("rank(L_S) = " + std::to_string(ls.rank()) + " but 20 - rank(Pic) = " + std::to_string(want));
    return ls;
}

bool LatticeReport::pass() const {
    if (!error.empty() || checks.empty()) return false;
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

LatticeReport verify_family(const PencilConfig& cfg) {
    LatticeReport r;
    r.family_id = cfg.family_id;
    try {
        IntegralLattice ls = radical_quotient(galois_invariant(assemble_gram(cfg), cfg.galois_orbits).gram);
        r.rank = ls.rank();
        std::size_t want = 20 - std::min<std::size_t>(20, cfg.pic.rank());
        r.checks.push_back({"rank", ls.rank() == want,
                            std::to_string(ls.rank()) + " vs 20 - " + std::to_string(cfg.pic.rank())});
        if (determinant(ls.gram) == 0) {
            r.error = "L_S is degenerate";
            return r;
        }
        FiniteQuadraticForm d = discriminant_group(ls);
        r.invariant_factors = d.invariant_factors();
        r.q_values = d.quadratic;
        if (cfg.expected) {
            r.checks.push_back({"expected_LS", forms_equivalent(d, cfg.expected->ls), ""});
            FiniteQuadraticForm dh = discriminant_group(direct_sum(hyperbolic_plane(), cfg.pic));
            r.checks.push_back({"expected_dual", forms_equivalent(dh, cfg.expected->dual), ""});
        }
        for (auto& c : dn_dual_verify(ls, cfg.pic).checks) r.checks.push_back(std::move(c));
    } catch (const Error& e) {
        r.error = e.what();
    }
    return r;
}

namespace {

const std::vector<std::pair<std::string, std::vector<std::string>>> kFamilySchema = {
    {"family", {"id", "rank_pic", "parametrized"}},
    {"pic", {"gram"}},
    {"singularities", {"*"}},
    {"curves", {"order"}},
    {"mixed", {"B", "C"}},
    {"galois", {"orbit"}},
    {"expected", {"orders", "bilinear", "Q", "orders_dual", "bilinear_dual", "Q_dual"}},
};

SingularPoint parse_singularity(const Document& doc, const Entry& e) {
    SingularPoint p;
    p.label = e.key;
    if (p.label.size() < 2 || p.label[0] != 'P' ||
        !std::all_of(p.label.begin() + 1, p.label.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        doc.fail(e, "singular point labels have the form P<n>");
    std::string v = e.raw;
    auto semi = v.find(';');
    if (semi != std::string::npos) {
        p.note = v.substr(semi + 1);
        while (!p.note.empty() && p.note.front() == ' ') p.note.erase(p.note.begin());
        v = v.substr(0, semi);
    }
    while (!v.empty() && v.back() == ' ') v.pop_back();
    if (v.size() < 2 || (v[0] != 'A' && v[0] != 'D' && v[0] != 'E')) doc.fail(e, "expected an ADE type such as A3");
    p.type = v[0];
    try {
        p.rank = std::stoi(v.substr(1));
        cartan_matrix(p.type, p.rank);
    } catch (const std::exception& ex) {
        doc.fail(e, std::string("bad ADE type '") + v + "': " + ex.what());
    }
    return p;
}

FiniteQuadraticForm expected_form(const Document& doc, const Section& s, const std::string& orders_key,
                                  const std::string& b_key, const std::string& q_key) {
    const Entry* oe = s.find(orders_key);
    if (!oe) doc.fail(s.line, "missing key '" + orders_key + "' in [expected]");
    std::vector<Int> orders = doc.get_int_vector(*oe);
    std::vector<std::vector<Rat>> b;
    std::vector<Rat> q;
    if (const Entry* be = s.find(b_key)) b = doc.get_rat_matrix(*be);
    if (const Entry* qe = s.find(q_key)) q = doc.get_rat_vector(*qe);
    if (!orders.empty() && (b.empty() || q.empty()))
        doc.fail(*oe, "'" + b_key + "' and '" + q_key + "' are required for a nontrivial group");
    try {
        return make_form(orders, b, q);
    } catch (const Error& ex) {
        doc.fail(*oe, ex.what());
    }
}

}  // namespace

PencilConfig load_family(const Document& doc, bool strict, std::vector<std::string>* warnings) {
    doc.check_keys(kFamilySchema, strict, warnings);
    PencilConfig cfg;
    const Entry& id = doc.require("family", "id");
    cfg.family_id = id.raw;
    const Entry& rp = doc.require("family", "rank_pic");
    if (const Entry* pe = doc.require("family").find("parametrized")) {
        if (pe->raw != "true" && pe->raw != "false") doc.fail(*pe, "expected true or false");
        cfg.parametrized = pe->raw == "true";
    }

    const Entry& ge = doc.require("pic", "gram");
    IntegerMatrix pic = doc.get_int_matrix(ge);
    if (!pic.is_symmetric()) doc.fail(ge, "Pic Gram matrix is not symmetric");
    cfg.pic = from_gram(pic);
    if (doc.get_int(rp) != Int(pic.rows())) doc.fail(rp, "rank_pic does not match the Pic Gram size");

    const Section& sing = doc.require("singularities");
    std::set<std::string> seen;
    for (const auto& e : sing.entries) {
        if (!seen.insert(e.key).second) doc.fail(e, "duplicate singular point '" + e.key + "'");
        cfg.singularities.push_back(parse_singularity(doc, e));
    }

    const Entry& oe = doc.require("curves", "order");
    cfg.curve_labels = doc.get_string_list(oe);
    std::set<std::string> labels;
    for (const auto& s : cfg.singularities)
        for (int j = 1; j <= s.rank; ++j) labels.insert(s.exceptional_label(j));
    for (const auto& c : cfg.curve_labels)
        if (!labels.insert(c).second) doc.fail(oe, "duplicate label '" + c + "'");

    const Entry& be = doc.require("mixed", "B");
    const Entry& ce = doc.require("mixed", "C");
    cfg.mixed_B = doc.get_int_matrix(be);
    cfg.mixed_C = doc.get_int_matrix(ce);
    std::size_t nc = cfg.curve_labels.size(), ne = cfg.exceptional_count();
    if (cfg.mixed_B.rows() != nc || (nc > 0 && cfg.mixed_B.cols() != ne))
        doc.fail(be, "B must be " + std::to_string(nc) + "x" + std::to_string(ne));
    if (nc == 0) cfg.mixed_B = IntegerMatrix(0, ne);
    if (cfg.mixed_C.rows() != nc || cfg.mixed_C.cols() != nc) doc.fail(ce, "C must be square of size " + std::to_string(nc));
    if (!cfg.mixed_C.is_symmetric()) doc.fail(ce, "C is not symmetric");

    if (const Section* gs = doc.find("galois")) {
        std::set<std::string> used;
        for (const auto* e : gs->find_all("orbit")) {
            auto orbit = doc.get_string_list(*e);
            for (const auto& l : orbit) {
                if (!labels.count(l)) doc.fail(*e, "orbit references unknown label '" + l + "'");
                if (!used.insert(l).second) doc.fail(*e, "label '" + l + "' appears in two orbits");
            }
            cfg.galois_orbits.push_back(orbit);
        }
    }

    if (const Section* ex = doc.find("expected")) {
        ExpectedDisc d;
        d.ls = expected_form(doc, *ex, "orders", "bilinear", "Q");
        d.dual = expected_form(doc, *ex, "orders_dual", "bilinear_dual", "Q_dual");
        cfg.expected = d;
    }
    return cfg;
}

PencilConfig load_family_file(const std::string& path, bool strict, std::vector<std::string>* warnings) {
    return load_family(Document::load(path), strict, warnings);
}

}  // namespace k3dn
