#pragma once

#include "k3dn/discriminant.hpp"
#include "k3dn/textfmt.hpp"

#include <string>
#include <vector>

namespace k3dn {

// Symmetric trilinear intersection form on generators D_1..D_n of H^2.
class TripleIntersectionData {
public:
    TripleIntersectionData() = default;
    explicit TripleIntersectionData(std::size_t n);

    std::size_t size() const { return n_; }
    const Int& T(std::size_t i, std::size_t j, std::size_t k) const { return t_[idx(i, j, k)]; }
    // sets all six permutations
    void set(std::size_t i, std::size_t j, std::size_t k, const Int& v);

    std::vector<std::string> labels;
    std::vector<Int> minus_K;

private:
    std::size_t idx(std::size_t i, std::size_t j, std::size_t k) const { return (i * n_ + j) * n_ + k; }
    std::size_t n_ = 0;
    std::vector<Int> t_;
};

// product of projective spaces P^{n_1} x ... with hyperplane pullbacks as generators
TripleIntersectionData product_of_projective_spaces(const std::vector<int>& dims);

// Gram(i,j) = sum_k (-K)_k T(i,j,k)
IntegralLattice anticanonical_gram(const TripleIntersectionData& data);

struct CurveOnFano {
    std::vector<Int> degrees;  // D_i . Y
    Int genus = 0;
};

// border D.Y, corner 2g - 2
IntegralLattice blowup_extend(const IntegralLattice& gram_x, const CurveOnFano& curve);

// 2 * sum_k (minus_K_pullback)_k T(i,j,k)
IntegralLattice double_cover_gram(const TripleIntersectionData& base, const std::vector<Int>& minus_K_pullback);

// P(O(d_1) + ... + O(d_r)) over P^b with r + b - 1 = 3; basis (p*H, zeta)
TripleIntersectionData projective_bundle_data(int base_dim, const std::vector<Int>& degrees);
IntegralLattice projective_bundle_gram(int base_dim, const std::vector<Int>& degrees);

// N_k for P^1 x (P^2 blown up in k points), k = 0..8, basis R_1..R_k, G, S
IntegralLattice product_dp_lattice(int points);

// root lattice R_d for del Pezzo degree d = 1..6, as (name, positive-definite Gram)
std::pair<std::string, IntegralLattice> dp_root_lattice(int degree);

struct DpIdentification {
    int degree = 0;
    std::string root_name;
    IntegralLattice n_lattice;
    IntegralLattice target;  // H + R(-2)
    bool genus_equal = false;
};

// N_{9-d} against H + R_d(-2)
DpIdentification dp_root_identification(int degree);
// same comparison with an explicitly named root lattice (for negative controls)
DpIdentification dp_compare(int degree, const std::string& root_name, const IntegralLattice& root);

// [triple] labels = [...], minus_K = [...], entry = [i, j, k, v] (1-based, repeated)
TripleIntersectionData load_triple(const Document& doc, bool strict = false,
                                   std::vector<std::string>* warnings = nullptr);

}  // namespace k3dn
