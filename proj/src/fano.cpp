#include "k3dn/fano.hpp"

#include <functional>
#include <tuple>

namespace k3dn {

TripleIntersectionData::TripleIntersectionData(std::size_t n) : n_(n), t_(n * n * n, Int(0)) {
    minus_K.assign(n, Int(0));
}

void TripleIntersectionData::set(std::size_t i, std::size_t j, std::size_t k, const Int& v) {
    if (i >= n_ || j >= n_ || k >= n_) throw Error("triple intersection index out of range");
    for (auto [a, b, c] : {std::tuple{i, j, k}, {i, k, j}, {j, i, k}, {j, k, i}, {k, i, j}, {k, j, i}})
        t_[idx(a, b, c)] = v;
}

TripleIntersectionData product_of_projective_spaces(const std::vector<int>& dims) {
    int total = 0;
    for (int d : dims) total += d;
    if (total != 3) throw Error("product of projective spaces must be a threefold");
    std::size_t n = dims.size();
    TripleIntersectionData t(n);
    // H_1^{e_1} ... H_n^{e_n} = 1 exactly when e = dims
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k) {
                std::vector<int> e(n, 0);
                ++e[i];
                ++e[j];
                ++e[k];
                if (e == dims) t.set(i, j, k, 1);
            }
    for (std::size_t i = 0; i < n; ++i) {
        t.minus_K[i] = dims[i] + 1;
        t.labels.push_back("H" + std::to_string(i + 1));
    }
    return t;
}

IntegralLattice anticanonical_gram(const TripleIntersectionData& data) {
    std::size_t n = data.size();
    if (data.minus_K.size() != n) throw Error("anticanonical vector has wrong dimension");
    IntegerMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) g(i, j) += data.minus_K[k] * data.T(i, j, k);
    return {g, data.labels};
}

IntegralLattice blowup_extend(const IntegralLattice& gram_x, const CurveOnFano& curve) {
    std::size_t n = gram_x.rank();
    if (curve.degrees.size() != n) throw Error("curve intersection vector has wrong dimension");
    IntegerMatrix g(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) g(i, j) = gram_x.gram(i, j);
        g(i, n) = g(n, i) = curve.degrees[i];
    }
    g(n, n) = 2 * curve.genus - 2;
    IntegralLattice out{g, gram_x.labels};
    if (!out.labels.empty()) out.labels.push_back("Y");
    return out;
}

IntegralLattice double_cover_gram(const TripleIntersectionData& base, const std::vector<Int>& minus_K_pullback) {
    TripleIntersectionData t = base;
    if (minus_K_pullback.size() != base.size()) throw Error("anticanonical vector has wrong dimension");
    t.minus_K = minus_K_pullback;
    IntegralLattice l = anticanonical_gram(t);
    l.gram = Int(2) * l.gram;
    return l;
}

TripleIntersectionData projective_bundle_data(int b, const std::vector<Int>& d) {
    int r = static_cast<int>(d.size());
    if (b != 1 && b != 2) throw Error("unsupported base: only P^1 and P^2");
    if (r + b - 1 != 3) throw Error("bundle rank must make the total space a threefold");
    // elementary symmetric functions of the degrees: c_i = e_i H^i
    std::vector<Int> e(r + 1, Int(0));
    e[0] = 1;
    for (const auto& x : d)
        for (int i = r; i >= 1; --i) e[i] += e[i - 1] * x;
    // zeta^r = sum_{i>=1} (-1)^{i+1} c_i zeta^{r-i}, normalized by H^b zeta^{r-1} = 1
    std::function<Int(int, int)> I = [&](int a, int c) -> Int {
        if (a > b) return 0;
        if (c < r) return (a == b && c == r - 1) ? Int(1) : Int(0);
        Int s = 0;
        for (int i = 1; i <= r; ++i) {
            Int term = e[i] * I(a + i, c - i);
            s += (i % 2 == 1) ? term : Int(-term);
        }
        return s;
    };
    TripleIntersectionData t(2);
    t.labels = {"H", "zeta"};
    // generator 0 = p*H, 1 = zeta
    for (int i = 0; i < 2; ++i)
        for (int j = i; j < 2; ++j)
            for (int k = j; k < 2; ++k) {
                int a = (i == 0) + (j == 0) + (k == 0);
                t.set(i, j, k, I(a, 3 - a));
            }
    t.minus_K = {Int(b + 1) - e[1], Int(r)};
    return t;
}

IntegralLattice projective_bundle_gram(int base_dim, const std::vector<Int>& degrees) {
    return anticanonical_gram(projective_bundle_data(base_dim, degrees));
}

IntegralLattice product_dp_lattice(int k) {
    if (k < 0 || k > 8) throw Error("number of blown-up points must be in 0..8");
    std::size_t n = static_cast<std::size_t>(k) + 2;
    IntegerMatrix g(n, n);
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) {
        g(i, i) = -2;
        g(i, n - 1) = g(n - 1, i) = -1;
        labels.push_back("R" + std::to_string(i + 1));
    }
    g(n - 2, n - 2) = 2;
    g(n - 2, n - 1) = g(n - 1, n - 2) = 3;
    labels.push_back("G");
    labels.push_back("S");
    return {g, labels};
}

std::pair<std::string, IntegralLattice> dp_root_lattice(int degree) {
    switch (degree) {
    case 1: return {"E8", root_lattice('E', 8)};
    case 2: return {"E7", root_lattice('E', 7)};
    case 3: return {"E6", root_lattice('E', 6)};
    case 4: return {"D5", root_lattice('D', 5)};
    case 5: return {"A4", root_lattice('A', 4)};
    case 6: return {"A2+A1", direct_sum(root_lattice('A', 2), root_lattice('A', 1))};
    default: throw Error("del Pezzo degree must be in 1..6");
    }
}

DpIdentification dp_compare(int degree, const std::string& root_name, const IntegralLattice& root) {
    if (degree < 1 || degree > 6) throw Error("del Pezzo degree must be in 1..6");
    DpIdentification r;
    r.degree = degree;
    r.root_name = root_name;
    r.n_lattice = product_dp_lattice(9 - degree);
    r.target = direct_sum(hyperbolic_plane(), rescale(root, -2));
    r.genus_equal = genus_equal(genus_of(r.n_lattice), genus_of(r.target));
    return r;
}

DpIdentification dp_root_identification(int degree) {
    auto [name, root] = dp_root_lattice(degree);
    return dp_compare(degree, name, root);
}

TripleIntersectionData load_triple(const Document& doc, bool strict, std::vector<std::string>* warnings) {
    doc.check_keys({{"triple", {"labels", "minus_K", "entry"}}}, strict, warnings);
    const Entry& le = doc.require("triple", "labels");
    auto labels = doc.get_string_list(le);
    TripleIntersectionData t(labels.size());
    t.labels = labels;
    const Entry& ke = doc.require("triple", "minus_K");
    t.minus_K = doc.get_int_vector(ke);
    if (t.minus_K.size() != labels.size()) doc.fail(ke, "minus_K length differs from the label count");
    for (const Entry* e : doc.require("triple").find_all("entry")) {
        auto v = doc.get_int_vector(*e);
        if (v.size() != 4) doc.fail(*e, "entry must be [i, j, k, value]");
        for (int a = 0; a < 3; ++a)
            if (v[a] < 1 || v[a] > Int(labels.size())) doc.fail(*e, "entry index out of range");
        t.set(v[0].convert_to<std::size_t>() - 1, v[1].convert_to<std::size_t>() - 1,
              v[2].convert_to<std::size_t>() - 1, v[3]);
    }
    return t;
}

}  // namespace k3dn
