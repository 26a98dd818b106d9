#include "k3dn/fano.hpp"
#include "k3dn/lgmodels.hpp"
#include "k3dn/lpfixture.hpp"
#include "k3dn/minkowski.hpp"
#include "k3dn/mutation.hpp"
#include "k3dn/pencil.hpp"
#include "k3dn/periodmap.hpp"
#include "k3dn/polytope.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace k3dn;
using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    bool json = false;
    bool strict = false;
    unsigned parallel = 1;
};

// usage or input problems, reported with exit status 2
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void print(const Options& o, const json& j, const std::string& text) {
    if (o.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

void warn(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

std::string point_str(const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

json points_json(const std::vector<Point>& pts) {
    json a = json::array();
    for (const auto& p : pts) a.push_back(p);
    return a;
}

json int_vector_json(const std::vector<Int>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

json rat_vector_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

json matrix_json(const IntegerMatrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_string(m(i, j)));
        a.push_back(r);
    }
    return a;
}

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

template <class T, class F>
std::string join_map(const std::vector<T>& v, F f, const std::string& sep = ", ") {
    std::vector<std::string> s;
    for (const auto& x : v) s.push_back(f(x));
    return join(s, sep);
}

std::string sig_str(const Signature& s) {
    std::string r = "(" + std::to_string(s.pos) + "," + std::to_string(s.neg) + ")";
    if (s.zero) r += " radical " + std::to_string(s.zero);
    return r;
}

Document load_document(const std::string& path) {
    if (!fs::exists(path)) throw UsageError("cannot open " + path);
    return Document::load(path);
}

IntegerMatrix matrix_arg(const std::string& text, const std::string& what) {
    Document d = Document::parse("[arg]\nvalue = " + text + "\n", what);
    return d.get_int_matrix(d.require("arg", "value"));
}

std::vector<Int> vector_arg(const std::string& text, const std::string& what) {
    std::string t = text;
    if (t.empty() || t.front() != '[') t = "[" + t + "]";
    Document d = Document::parse("[arg]\nvalue = " + t + "\n", what);
    return d.get_int_vector(d.require("arg", "value"));
}

// ---- lattice

json lattice_json(const IntegralLattice& l, const FiniteQuadraticForm& q, const BasicInvariants& b) {
    json j;
    j["rank"] = b.rank;
    j["determinant"] = to_string(b.det);
    j["signature"] = {b.sig.pos, b.sig.neg};
    j["radical"] = b.sig.zero;
    j["even"] = b.even;
    j["gram"] = matrix_json(l.gram);
    j["discriminant_group"] = int_vector_json(q.invariant_factors());
    j["q_values"] = rat_vector_json(sorted_q_values(q));
    return j;
}

std::string lattice_text(const IntegralLattice& l, const FiniteQuadraticForm& q, const BasicInvariants& b) {
    std::ostringstream s;
    s << "gram " << l.gram.str() << "\n";
    s << "rank " << b.rank << "\n";
    s << "determinant " << to_string(b.det) << "\n";
    s << "signature " << sig_str(b.sig) << "\n";
    s << "parity " << (b.even ? "even" : "odd") << "\n";
    auto inv = q.invariant_factors();
    s << "discriminant group " << (inv.empty() ? "trivial" : join_map(inv, [](const Int& x) { return "Z/" + to_string(x); }, " + ")) << "\n";
    if (b.even) s << "q values [" << join_map(sorted_q_values(q), [](const Rat& r) { return to_string(r); }) << "]\n";
    return s.str();
}

IntegralLattice named_lattice(const std::string& name) {
    if (name == "U" || name == "H") return hyperbolic_plane();
    if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'D' || name[0] == 'E')) {
        int n = 0;
        try {
            n = std::stoi(name.substr(1));
        } catch (const std::exception&) {
            throw UsageError("bad root lattice name " + name);
        }
        return root_lattice(name[0], n);
    }
    throw UsageError("unknown lattice " + name + " (expected U, An, Dn or En)");
}

int cmd_lattice(const Options& o, const std::string& file, const std::string& root, long scale) {
    IntegralLattice l;
    if (!file.empty()) {
        std::vector<std::string> w;
        l = load_lattice(load_document(file), o.strict, &w);
        warn(w);
    } else if (!root.empty()) {
        l = named_lattice(root);
    } else {
        throw UsageError("lattice needs a file or --root");
    }
    if (scale != 1) l = rescale(l, scale);
    BasicInvariants b = basic_invariants(l);
    json j;
    std::string text;
    if (b.sig.zero == 0) {
        FiniteQuadraticForm q = discriminant_group(l);
        j = lattice_json(l, q, b);
        text = lattice_text(l, q, b);
        EmbeddingResult e = embedding_criteria(l);
        j["k3_embedding"] = to_string(e);
        text += "primitive embedding into the K3 lattice: " + to_string(e) + "\n";
    } else {
        j["rank"] = b.rank;
        j["signature"] = {b.sig.pos, b.sig.neg};
        j["radical"] = b.sig.zero;
        text = "degenerate form: signature " + sig_str(b.sig) + "\n";
    }
    print(o, j, text);
    return 0;
}

// ---- family

struct FamilyResult {
    std::string id;
    std::string file;
    bool load_failed = false;
    std::string error;
    LatticeReport report;
    std::vector<SubCheck> checks;  // Laurent fixtures
    bool laurent = false;

    bool pass() const {
        if (load_failed) return false;
        if (laurent) return std::all_of(checks.begin(), checks.end(), [](const SubCheck& c) { return c.ok; });
        return report.pass();
    }
};

FamilyResult run_fixture(const std::string& path, bool strict, std::vector<std::string>* warnings) {
    FamilyResult r;
    r.file = fs::path(path).filename().string();
    r.id = fs::path(path).stem().string();
    bool laurent = fs::path(path).extension() == ".lp";
    r.laurent = laurent;
    try {
        Document doc = Document::load(path);
        if (laurent && doc.find("chain")) {
            ChainFixture c = load_chain(doc, strict, warnings);
            r.id = c.id + " chain";
            r.checks = check_chain(c);
        } else if (laurent) {
            LaurentFixture f = load_laurent(doc, strict, warnings);
            r.id = f.id;
            r.checks = check_laurent_fixture(f);
        } else {
            PencilConfig cfg = load_family(doc, strict, warnings);
            r.id = cfg.family_id;
            r.report = verify_family(cfg);
        }
    } catch (const std::exception& e) {
        r.load_failed = true;
        r.error = e.what();
    }
    return r;
}

std::string status(const FamilyResult& r) {
    if (r.load_failed) return "FAIL(load)";
    return r.pass() ? "PASS" : "FAIL";
}

json result_json(const FamilyResult& r) {
    json j;
    j["id"] = r.id;
    j["file"] = r.file;
    j["status"] = status(r);
    if (r.load_failed) {
        j["error"] = r.error;
        return j;
    }
    const auto& checks = r.laurent ? r.checks : r.report.checks;
    if (!r.laurent) {
        j["rank_LS"] = r.report.rank;
        j["discriminant_group"] = int_vector_json(r.report.invariant_factors);
        j["q_values"] = rat_vector_json(r.report.q_values);
        if (!r.report.error.empty()) j["error"] = r.report.error;
    }
    json cs = json::array();
    for (const auto& c : checks) cs.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    j["checks"] = cs;
    return j;
}

std::string result_text(const FamilyResult& r, bool verbose) {
    std::ostringstream s;
    s << status(r) << " " << r.id;
    if (r.load_failed) {
        s << ": " << r.error << "\n";
        return s.str();
    }
    if (!r.laurent) {
        s << " rank(L_S)=" << r.report.rank << " disc=["
          << join_map(r.report.invariant_factors, [](const Int& x) { return to_string(x); }) << "]";
        if (!r.report.error.empty()) s << " error: " << r.report.error;
    }
    s << "\n";
    const auto& checks = r.laurent ? r.checks : r.report.checks;
    for (const auto& c : checks)
        if (verbose || !c.ok)
            s << "  " << (c.ok ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    return s.str();
}

std::vector<FamilyResult> run_all(const std::vector<std::string>& paths, const Options& o) {
    std::vector<FamilyResult> results(paths.size());
    std::vector<std::vector<std::string>> warnings(paths.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < paths.size();) results[i] = run_fixture(paths[i], o.strict, &warnings[i]);
    };
    unsigned n = std::max(1u, std::min<unsigned>(o.parallel, static_cast<unsigned>(paths.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (const auto& w : warnings[i]) std::cerr << "warning: " << results[i].file << ": " << w << "\n";
    std::sort(results.begin(), results.end(), [](const FamilyResult& a, const FamilyResult& b) {
        if (a.id != b.id) return natural_less(a.id, b.id);
        return a.file < b.file;
    });
    return results;
}

int report(const Options& o, const std::vector<FamilyResult>& results, bool verbose) {
    std::size_t pass = 0;
    for (const auto& r : results) pass += r.pass();
    json j;
    json arr = json::array();
    std::string text;
    for (const auto& r : results) {
        arr.push_back(result_json(r));
        text += result_text(r, verbose);
    }
    j["results"] = arr;
    j["summary"] = {{"total", results.size()}, {"pass", pass}, {"fail", results.size() - pass}};
    text += "summary: " + std::to_string(pass) + "/" + std::to_string(results.size()) + " PASS\n";
    print(o, j, text);
    return pass == results.size() ? 0 : kExitFail;
}

int cmd_family(const Options& o, const std::vector<std::string>& files, bool verbose) {
    for (const auto& f : files)
        if (!fs::is_regular_file(f)) throw UsageError("cannot open " + f);
    return report(o, run_all(files, o), verbose);
}

int cmd_verify_all(const Options& o, const std::string& dir, bool verbose) {
    if (!fs::is_directory(dir)) throw UsageError("not a directory: " + dir);
    std::vector<std::string> paths;
    for (const auto& e : fs::recursive_directory_iterator(dir)) {
        auto ext = e.path().extension();
        if (e.is_regular_file() && (ext == ".fam" || ext == ".lp")) paths.push_back(e.path().string());
    }
    std::sort(paths.begin(), paths.end());
    return report(o, run_all(paths, o), verbose);
}

// ---- fano

int lattice_out(const Options& o, const IntegralLattice& l, const std::string& title, const std::string& compare,
                json extra = json::object(), std::string extra_text = "") {
    BasicInvariants b = basic_invariants(l);
    json j = extra;
    j["constructor"] = title;
    std::string text = title + "\n" + extra_text;
    FiniteQuadraticForm q = discriminant_group(l);
    j["lattice"] = lattice_json(l, q, b);
    text += lattice_text(l, q, b);
    int code = 0;
    if (!compare.empty()) {
        std::vector<std::string> w;
        IntegralLattice other = load_lattice(load_document(compare), o.strict, &w);
        warn(w);
        bool eq = genus_equal(genus_of(l), genus_of(other));
        j["compare"] = {{"file", compare}, {"genus_equal", eq}, {"entry_equal", l.gram.rows() == other.gram.rows() && [&] {
                             for (std::size_t r = 0; r < l.gram.rows(); ++r)
                                 for (std::size_t c = 0; c < l.gram.cols(); ++c)
                                     if (l.gram(r, c) != other.gram(r, c)) return false;
                             return true;
                         }()}};
        text += std::string(eq ? "PASS" : "FAIL") + " genus-equal to " + compare + "\n";
        code = eq ? 0 : kExitFail;
    }
    print(o, j, text);
    return code;
}

// ---- laurent

LaurentPolynomial read_poly(const std::string& poly, const std::string& file, const std::string& assign,
                            const Options& o) {
    LaurentPolynomial p;
    if (!poly.empty() && !file.empty()) throw UsageError("give either --poly or --file");
    if (!poly.empty()) {
        p = parse_laurent(poly);
    } else if (!file.empty()) {
        if (fs::path(file).extension() == ".lp") {
            std::vector<std::string> w;
            Document d = load_document(file);
            p = d.find("chain") ? load_chain(d, o.strict, &w).start : load_laurent(d, o.strict, &w).poly;
            warn(w);
        } else {
            std::ifstream in(file);
            if (!in) throw UsageError("cannot open " + file);
            std::stringstream ss;
            ss << in.rdbuf();
            std::string text = ss.str();
            while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
            p = parse_laurent(text);
        }
    } else {
        throw UsageError("need --poly or --file");
    }
    if (!assign.empty()) p = specialize(p, parse_assignments(assign));
    return p;
}

json polytope_json(const LatticePolytope& P) {
    json j;
    j["dim"] = P.dim();
    j["vertices"] = points_json(P.vertices());
    j["lattice_points"] = P.lattice_points().size();
    if (P.full_dimensional()) {
        json f = json::array();
        for (const auto& fa : P.facets()) f.push_back({{"normal", fa.normal}, {"offset", fa.offset}});
        j["facets"] = f;
    }
    return j;
}

std::string polytope_text(const LatticePolytope& P) {
    std::ostringstream s;
    s << "dimension " << P.dim() << "\n";
    s << "vertices " << P.vertices().size() << ": " << join_map(P.vertices(), point_str, " ") << "\n";
    s << "lattice points " << P.lattice_points().size() << "\n";
    if (P.full_dimensional())
        for (const auto& f : P.facets()) s << "facet <" << point_str(f.normal) << ", x> >= " << f.offset << "\n";
    return s.str();
}

json datum_json(const MinkowskiDatum& d) {
    json a = json::array();
    for (const auto& p : d.parts) a.push_back({{"summand", points_json(p.summand.vertices())}, {"multiplicity", p.multiplicity}});
    return a;
}

int cmd_minkowski(const Options& o, const LaurentPolynomial& p) {
    LatticePolytope P = newton_polytope(p);
    json j;
    std::ostringstream s;
    json facets = json::array();
    for (const Face& f : faces(P)) {
        if (f.dim != P.dim() - 1 || f.dim > 2) continue;
        LatticePolytope fp = f.polytope();
        auto ds = minkowski_decompositions(fp);
        json fj;
        fj["face"] = points_json(fp.vertices());
        fj["face_polynomial"] = format_laurent(face_polynomial(p, fp));
        json dj = json::array();
        s << "facet " << fp.str() << ": " << format_laurent(face_polynomial(p, fp)) << "\n";
        for (const auto& d : ds) {
            dj.push_back(datum_json(d));
            s << "  " << d.str() << "\n";
        }
        fj["decompositions"] = dj;
        facets.push_back(fj);
    }
    j["facets"] = facets;
    int code = 0;
    if (p.n_vars() == 3) {
        try {
            MinkowskiCheck m = is_minkowski_polynomial(p);
            j["minkowski_polynomial"] = m.ok;
            if (!m.ok) j["reason"] = m.reason;
            s << (m.ok ? "Minkowski polynomial" : "not a Minkowski polynomial: " + m.reason) << "\n";
            if (m.ok)
                for (const auto& w : m.witness)
                    s << "  " << w.face.str() << " = "
                      << join_map(w.witness, [](const LaurentPolynomial& h) { return "(" + format_laurent(h) + ")"; }, " * ")
                      << " up to a monomial, multiplicities " << w.datum.str() << "\n";
            code = m.ok ? 0 : kExitFail;
        } catch (const Error& e) {
            j["minkowski_polynomial"] = false;
            j["reason"] = e.what();
            s << "not a Minkowski polynomial: " << e.what() << "\n";
            code = kExitFail;
        }
    }
    print(o, j, s.str());
    return code;
}

int cmd_classify(const Options& o, const LaurentPolynomial& p, int terms) {
    LatticePolytope P = newton_polytope(p);
    json j;
    std::ostringstream s;
    j["n_vars"] = p.n_vars();
    j["terms"] = p.size();
    auto params = p.parameters();
    std::vector<std::string> names(params.begin(), params.end());
    j["parameters"] = names;
    j["newton"] = polytope_json(P);
    s << "variables " << p.n_vars() << ", terms " << p.size() << "\n";
    if (!names.empty()) s << "parameters " << join(names) << "\n";
    s << "Newton polytope: dimension " << P.dim() << ", " << P.vertices().size() << " vertices, "
      << P.lattice_points().size() << " lattice points\n";
    bool reflexive = false;
    if (P.full_dimensional()) {
        DualResult d = dual_and_reflexive(P);
        reflexive = d.reflexive;
        j["reflexive"] = d.reflexive;
        s << (d.reflexive ? "reflexive" : "not reflexive: " + d.reason) << "\n";
    }
    if (reflexive && p.n_vars() == 3 && !p.is_rational()) {
        s << "Minkowski test skipped: coefficients involve parameters\n";
    } else if (reflexive && p.n_vars() == 3) {
        MinkowskiCheck m = is_minkowski_polynomial(p);
        j["minkowski_polynomial"] = m.ok;
        s << (m.ok ? "Minkowski polynomial" : "not a Minkowski polynomial: " + m.reason) << "\n";
    }
    if (p.is_rational()) {
        auto per = main_period(p, terms, o.parallel);
        j["period"] = rat_vector_json(per);
        s << "period [" << join_map(per, [](const Rat& r) { return to_string(r); }) << "]\n";
    }
    print(o, j, s.str());
    return 0;
}

Exponent exponent_arg(const std::string& text, std::size_t n) {
    auto v = vector_arg(text, "--direction");
    if (v.size() != n) throw UsageError("--direction needs " + std::to_string(n) + " entries");
    Exponent e;
    for (const auto& x : v) e.push_back(x.convert_to<long>());
    return e;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"K3 lattice duality and toric LG toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "machine-readable output");
    app.add_flag("--strict", o.strict, "reject unknown fixture keys");
    app.add_option("--parallel", o.parallel, "worker threads")->check(CLI::PositiveNumber);
    bool verbose = false;
    app.add_flag("-v,--verbose", verbose, "list every sub-check");

    std::function<int()> run;

    // lattice
    auto* lat = app.add_subcommand("lattice", "invariants and discriminant form of a lattice");
    std::string lat_file, lat_root;
    long lat_scale = 1;
    lat->add_option("file", lat_file, "lattice file");
    lat->add_option("--root", lat_root, "named lattice: U, An, Dn, En");
    lat->add_option("--rescale", lat_scale, "multiply the form by k");
    lat->callback([&] { run = [&] { return cmd_lattice(o, lat_file, lat_root, lat_scale); }; });

    // family
    auto* fam = app.add_subcommand("family", "verify family fixtures");
    std::vector<std::string> fam_files;
    fam->add_option("files", fam_files, "family fixture files")->required();
    fam->callback([&] { run = [&] { return cmd_family(o, fam_files, verbose); }; });

    // verify-all
    auto* va = app.add_subcommand("verify-all", "verify every fixture under a directory");
    std::string va_dir;
    va->add_option("dir", va_dir, "fixture directory")->required();
    va->callback([&] { run = [&] { return cmd_verify_all(o, va_dir, verbose); }; });

    // fano
    auto* fano = app.add_subcommand("fano", "Picard lattice constructors");
    fano->require_subcommand(1);
    std::string compare;
    auto* fb = fano->add_subcommand("blowup", "blow up a smooth curve");
    std::string fb_lat, fb_deg;
    long fb_genus = 0;
    fb->add_option("--lattice", fb_lat, "lattice file of X")->required();
    fb->add_option("--degrees", fb_deg, "D_i . Y, comma separated")->required();
    fb->add_option("--genus", fb_genus, "genus of Y");
    fb->add_option("--compare", compare, "lattice file to compare against");
    fb->callback([&] {
        run = [&] {
            std::vector<std::string> w;
            IntegralLattice x = load_lattice(load_document(fb_lat), o.strict, &w);
            warn(w);
            CurveOnFano c{vector_arg(fb_deg, "--degrees"), fb_genus};
            if (c.degrees.size() != x.rank()) throw UsageError("--degrees needs one entry per generator");
            return lattice_out(o, blowup_extend(x, c), "blow-up", compare);
        };
    });
    auto* fbu = fano->add_subcommand("bundle", "projectivization of a split bundle");
    int fbu_base = 2;
    std::string fbu_deg;
    fbu->add_option("--base", fbu_base, "1 or 2 (P1 or P2)")->required();
    fbu->add_option("--degrees", fbu_deg, "line bundle degrees")->required();
    fbu->add_option("--compare", compare, "lattice file to compare against");
    fbu->callback([&] {
        run = [&] { return lattice_out(o, projective_bundle_gram(fbu_base, vector_arg(fbu_deg, "--degrees")), "projective bundle", compare); };
    });
    auto* fdp = fano->add_subcommand("product-dp", "P1 x S_d against H + R_d(-2)");
    int fdp_deg = 0;
    std::string fdp_root;
    fdp->add_option("--degree", fdp_deg, "del Pezzo degree 1..6")->required();
    fdp->add_option("--root", fdp_root, "compare against this root lattice instead");
    fdp->callback([&] {
        run = [&] {
            DpIdentification r = fdp_root.empty() ? dp_root_identification(fdp_deg)
                                                  : dp_compare(fdp_deg, fdp_root, named_lattice(fdp_root));
            json j{{"degree", r.degree}, {"root", r.root_name}, {"N", matrix_json(r.n_lattice.gram)},
                   {"target", matrix_json(r.target.gram)}, {"genus_equal", r.genus_equal}};
            std::string text = "N_" + std::to_string(9 - r.degree) + " " + r.n_lattice.gram.str() + "\nH + " +
                               (r.root_name.find('+') == std::string::npos ? r.root_name : "(" + r.root_name + ")") + "(-2) " + r.target.gram.str() + "\n" +
                               (r.genus_equal ? "PASS" : "FAIL") + " genus-equal\n";
            print(o, j, text);
            return r.genus_equal ? 0 : kExitFail;
        };
    });
    auto* ft = fano->add_subcommand("triple", "anticanonical pairing from triple intersections");
    std::string ft_file, ft_cover;
    ft->add_option("file", ft_file, "triple intersection file")->required();
    ft->add_option("--double-cover", ft_cover, "pullback of -K for a double cover");
    ft->add_option("--compare", compare, "lattice file to compare against");
    ft->callback([&] {
        run = [&] {
            std::vector<std::string> w;
            TripleIntersectionData t = load_triple(load_document(ft_file), o.strict, &w);
            warn(w);
            if (ft_cover.empty()) return lattice_out(o, anticanonical_gram(t), "anticanonical pairing", compare);
            auto k = vector_arg(ft_cover, "--double-cover");
            if (k.size() != t.size()) throw UsageError("--double-cover needs one entry per generator");
            return lattice_out(o, double_cover_gram(t, k), "double cover", compare);
        };
    });

    // laurent
    auto* lau = app.add_subcommand("laurent", "Laurent polynomial tools");
    lau->require_subcommand(1);
    std::string poly, file, assign;
    int terms = 8;
    auto common = [&](CLI::App* c) {
        c->add_option("--poly", poly, "polynomial expression");
        c->add_option("--file", file, "fixture (.lp) or expression file");
        c->add_option("--assign", assign, "parameter values, e.g. a1=1,a2=-3/2");
    };
    auto* ln = lau->add_subcommand("newton", "Newton polytope");
    common(ln);
    ln->callback([&] {
        run = [&] {
            LatticePolytope P = newton_polytope(read_poly(poly, file, assign, o));
            print(o, polytope_json(P), polytope_text(P));
            return 0;
        };
    });
    auto* ld = lau->add_subcommand("dual", "reflexivity and dual polytope");
    common(ld);
    ld->callback([&] {
        run = [&] {
            LatticePolytope P = newton_polytope(read_poly(poly, file, assign, o));
            if (!P.full_dimensional()) throw Error("Newton polytope is not full-dimensional");
            DualResult d = dual_and_reflexive(P);
            json j{{"reflexive", d.reflexive}};
            std::string text = d.reflexive ? "reflexive\n" : "not reflexive: " + d.reason + "\n";
            if (d.reflexive) {
                j["dual"] = points_json(d.dual.vertices());
                text += "dual " + d.dual.str() + "\n";
            } else {
                j["reason"] = d.reason;
            }
            print(o, j, text);
            return d.reflexive ? 0 : kExitFail;
        };
    });
    auto* lm = lau->add_subcommand("mutate", "mutation along (m, g)");
    common(lm);
    std::string direction, factor;
    lm->add_option("--direction", direction, "m, e.g. 0,1")->required();
    lm->add_option("--factor", factor, "g, a Laurent polynomial")->required();
    lm->callback([&] {
        run = [&] {
            LaurentPolynomial p = read_poly(poly, file, assign, o);
            LaurentPolynomial g = parse_laurent(factor, p.n_vars());
            LaurentPolynomial r = mutate(p, exponent_arg(direction, p.n_vars()), g);
            print(o, json{{"result", format_laurent(r)}}, format_laurent(r) + "\n");
            return 0;
        };
    });
    auto* lt = lau->add_subcommand("mutate-triple", "mutation given by (M, f, N), or a chain fixture");
    common(lt);
    std::string mM, mf, mN;
    lt->add_option("--M", mM, "3x3 matrix [[..],[..],[..]]");
    lt->add_option("--f", mf, "factor f(x, y)");
    lt->add_option("--N", mN, "3x3 matrix");
    lt->callback([&] {
        run = [&]() -> int {
            if (mM.empty() && mf.empty() && mN.empty()) {
                if (file.empty()) throw UsageError("give --M, --f, --N or a chain --file");
                std::vector<std::string> w;
                Document d = load_document(file);
                if (!d.find("chain")) throw UsageError(file + " has no [chain] section");
                ChainFixture c = load_chain(d, o.strict, &w);
                warn(w);
                FamilyResult r;
                r.id = c.id + " chain";
                r.file = fs::path(file).filename().string();
                r.laurent = true;
                r.checks = check_chain(c);
                print(o, result_json(r), result_text(r, true));
                return r.pass() ? 0 : kExitFail;
            }
            if (mM.empty() || mf.empty() || mN.empty()) throw UsageError("--M, --f and --N go together");
            LaurentPolynomial p = read_poly(poly, file, assign, o);
            MutationTriple t{matrix_arg(mM, "--M"), parse_laurent(mf, 3), matrix_arg(mN, "--N")};
            LaurentPolynomial r = mutate_triple(p, t);
            print(o, json{{"result", format_laurent(r)}}, format_laurent(r) + "\n");
            return 0;
        };
    });
    auto* lp = lau->add_subcommand("period", "main period coefficients");
    common(lp);
    lp->add_option("--terms", terms, "compute constant terms of p^0..p^N")->check(CLI::Range(0, 40));
    lp->callback([&] {
        run = [&] {
            auto per = main_period(read_poly(poly, file, assign, o), terms, o.parallel);
            print(o, json{{"period", rat_vector_json(per)}},
                  join_map(per, [](const Rat& r) { return to_string(r); }) + "\n");
            return 0;
        };
    });
    auto* lk = lau->add_subcommand("minkowski", "facet decompositions and the Minkowski polynomial test");
    common(lk);
    lk->callback([&] { run = [&] { return cmd_minkowski(o, read_poly(poly, file, assign, o)); }; });
    auto* lc = lau->add_subcommand("classify", "summary of a polynomial");
    common(lc);
    lc->add_option("--terms", terms, "period length")->check(CLI::Range(0, 40));
    lc->callback([&] { run = [&] { return cmd_classify(o, read_poly(poly, file, assign, o), terms); }; });
    auto* lg = lau->add_subcommand("construct", "parametrized LG model");
    std::string target;
    bool change = false, list = false;
    lg->add_option("--target", target, "dP3..dP9, dP5~, quadric-T4, 6.1, ...");
    lg->add_flag("--change", change, "apply the standard change of variables");
    lg->add_flag("--list", list, "list targets");
    lg->add_option("--assign", assign, "parameter values");
    lg->callback([&] {
        run = [&] {
            if (list) {
                print(o, json(lg_targets()), join(lg_targets(), "\n") + "\n");
                return 0;
            }
            if (target.empty()) throw UsageError("construct needs --target");
            LaurentPolynomial p = lg_constructor(target);
            if (change) {
                auto im = standard_change_of_variables(target);
                if (!im) throw UsageError("no change of variables recorded for " + target);
                p = monomial_transform(p, substitution_matrix(*im));
            }
            if (!assign.empty()) p = specialize(p, parse_assignments(assign));
            print(o, json{{"target", target}, {"polynomial", format_laurent(p)}}, format_laurent(p) + "\n");
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    try {
        return run ? run() : kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}
