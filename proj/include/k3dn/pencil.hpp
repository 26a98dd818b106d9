#pragma once

#include "k3dn/discriminant.hpp"
#include "k3dn/textfmt.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3dn {

struct SingularPoint {
    std::string label;  // "P3"
    char type = 'A';
    int rank = 1;
    std::string note;

    std::string exceptional_label(int j) const;  // "E3_j"
};

struct ExpectedDisc {
    FiniteQuadraticForm ls;    // printed G'/B'/Q'
    FiniteQuadraticForm dual;  // printed G''/B''/Q''
};

struct PencilConfig {
    std::string family_id;
    bool parametrized = false;
    std::vector<SingularPoint> singularities;
    std::vector<std::string> curve_labels;
    IntegerMatrix mixed_B;  // curves x exceptional curves
    IntegerMatrix mixed_C;  // curves x curves
    std::vector<std::vector<std::string>> galois_orbits;
    IntegralLattice pic;
    std::optional<ExpectedDisc> expected;

    std::size_t exceptional_count() const;
};

struct LabeledMatrix {
    IntegerMatrix gram;
    std::vector<std::string> labels;
};

LabeledMatrix assemble_gram(const PencilConfig& cfg);
LabeledMatrix galois_invariant(const LabeledMatrix& m, const std::vector<std::vector<std::string>>& orbits);
IntegralLattice build_LS(const PencilConfig& cfg);

struct LatticeReport {
    std::string family_id;
    std::size_t rank = 0;
    std::vector<Int> invariant_factors;
    std::vector<Rat> q_values;  // q on the computed generators
    std::vector<SubCheck> checks;
    std::string error;          // set when a sub-operation threw

    bool pass() const;
};

LatticeReport verify_family(const PencilConfig& cfg);

PencilConfig load_family(const Document& doc, bool strict = false, std::vector<std::string>* warnings = nullptr);
PencilConfig load_family_file(const std::string& path, bool strict = false,
                              std::vector<std::string>* warnings = nullptr);

}  // namespace k3dn
