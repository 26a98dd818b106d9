#include "k3dn/lattice.hpp"

#include <utility>

namespace k3dn {

IntegerMatrix cartan_matrix(char type, int n) {
    std::vector<std::pair<int, int>> edges;
    switch (type) {
    case 'A':
        if (n < 1) throw Error("A_n requires n >= 1");
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        break;
    case 'D':
        if (n < 4) throw Error("D_n requires n >= 4");
        for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(n - 3, n - 1);
        break;
    case 'E':
        if (n < 6 || n > 8) throw Error("E_n requires n in {6,7,8}");
        edges = {{0, 2}, {1, 3}, {2, 3}, {3, 4}};
        for (int k = 4; k + 1 < n; ++k) edges.emplace_back(k, k + 1);
        break;
    default:
        throw Error(std::string("unknown root system type '") + type + "'");
    }
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 2;
    for (auto [a, b] : edges) m(a, b) = m(b, a) = -1;
    return m;
}

IntegralLattice root_lattice(char type, int n) {
    return {cartan_matrix(type, n), {}};
}

IntegralLattice hyperbolic_plane() {
    return {IntegerMatrix::from_rows(std::vector<std::vector<long>>{{0, 1}, {1, 0}}), {}};
}

IntegralLattice rescale(const IntegralLattice& l, const Int& k) {
    if (k == 0) throw Error("rescale by zero");
    return {k * l.gram, l.labels};
}

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b) {
    IntegralLattice r{block_diagonal(a.gram, b.gram), {}};
    if (!a.labels.empty() || !b.labels.empty()) {
        for (std::size_t i = 0; i < a.rank(); ++i)
            r.labels.push_back(i < a.labels.size() ? a.labels[i] : "u" + std::to_string(i + 1));
        for (std::size_t i = 0; i < b.rank(); ++i)
            r.labels.push_back(i < b.labels.size() ? b.labels[i] : "v" + std::to_string(i + 1));
    }
    return r;
}

IntegralLattice from_gram(const IntegerMatrix& gram, std::vector<std::string> labels) {
    if (!gram.is_symmetric()) throw Error("Gram matrix is not symmetric");
    if (!labels.empty() && labels.size() != gram.rows())
        throw Error("label count does not match Gram dimension");
    return {gram, std::move(labels)};
}

bool is_even(const IntegerMatrix& gram) {
    for (std::size_t i = 0; i < gram.rows(); ++i)
        if (gram(i, i) % 2 != 0) return false;
    return true;
}

BasicInvariants basic_invariants(const IntegralLattice& l) {
    return {l.rank(), determinant(l.gram), signature(l.gram), is_even(l.gram)};
}

IntegerMatrix integer_kernel(const IntegerMatrix& m) {
    SmithForm s = smith_normal_form(m);
    std::size_t r = 0;
    while (r < s.D.rows() && r < s.D.cols() && s.D(r, r) != 0) ++r;
    std::size_t n = m.cols();
    IntegerMatrix k(n - r, n);
    for (std::size_t i = r; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) k(i - r, j) = s.V(j, i);
    return k;
}

IntegerMatrix restrict_gram(const IntegerMatrix& gram, const IntegerMatrix& basis) {
    return basis * gram * basis.transpose();
}

IntegralLattice radical_quotient(const IntegerMatrix& m) {
    if (!m.is_symmetric()) throw Error("radical_quotient needs a symmetric matrix");
    IntegerMatrix k = integer_kernel(m);
    if (k.rows() == 0) return {m, {}};
    std::size_t n = m.rows(), kr = k.rows();
    // the kernel is saturated, so its Smith form is [I 0] and V^{-1} extends it to a basis
    SmithForm s = smith_normal_form(k);
    IntegerMatrix w = unimodular_inverse(s.V);
    IntegerMatrix comp(n - kr, n);
    for (std::size_t i = kr; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) comp(i - kr, j) = w(i, j);
    return {restrict_gram(m, comp), {}};
}

IntegralLattice orthogonal_complement(const IntegerMatrix& sub_basis, const IntegralLattice& m) {
    if (sub_basis.cols() != m.rank()) throw Error("sub_basis dimension mismatch");
    if (sub_basis.rows() == 0) return m;
    SmithForm s = smith_normal_form(sub_basis);
    for (std::size_t i = 0; i < sub_basis.rows(); ++i)
        if (s.D(i, i) != 1) throw Error("saturate input first");
    IntegerMatrix k = integer_kernel(sub_basis * m.gram);
    if (k.rows() == 0) return {IntegerMatrix(), {}};
    return {restrict_gram(m.gram, k), {}};
}

IntegralLattice load_lattice(const Document& doc, bool strict, std::vector<std::string>* warnings) {
    doc.check_keys({{"lattice", {"gram", "labels"}}}, strict, warnings);
    const Entry& ge = doc.require("lattice", "gram");
    IntegerMatrix g = doc.get_int_matrix(ge);
    if (!g.is_symmetric()) doc.fail(ge, "Gram matrix is not symmetric");
    std::vector<std::string> labels;
    if (const Entry* le = doc.require("lattice").find("labels")) {
        labels = doc.get_string_list(*le);
        if (labels.size() != g.rows()) doc.fail(*le, "label count does not match Gram size");
    }
    return from_gram(g, labels);
}

}  // namespace k3dn
