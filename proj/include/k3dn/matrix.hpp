#pragma once

#include "k3dn/arith.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace k3dn {

class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(const std::vector<std::vector<Int>>& rows);
    static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Int& at(std::size_t i, std::size_t j);
    const Int& at(std::size_t i, std::size_t j) const;

    std::vector<Int> row(std::size_t i) const;
    std::vector<Int> col(std::size_t j) const;

    IntegerMatrix transpose() const;
    bool is_symmetric() const;
    bool is_zero() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row a += k * row b
    void add_row(std::size_t a, std::size_t b, const Int& k);
    void add_col(std::size_t a, std::size_t b, const Int& k);
    void negate_row(std::size_t a);

    IntegerMatrix submatrix(const std::vector<std::size_t>& rows,
                            const std::vector<std::size_t>& cols) const;

    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator*(const Int& k, const IntegerMatrix& a);
std::vector<Int> operator*(const IntegerMatrix& a, const std::vector<Int>& v);

IntegerMatrix block_diagonal(const IntegerMatrix& a, const IntegerMatrix& b);

Int determinant(const IntegerMatrix& m);
std::size_t rank(const IntegerMatrix& m);

using RatMatrix = std::vector<std::vector<Rat>>;

RatMatrix to_rational(const IntegerMatrix& m);
// throws on singular input
RatMatrix rational_inverse(const IntegerMatrix& m);

struct SmithForm {
    IntegerMatrix U, D, V;
    std::vector<Int> diagonal() const;
};

// U * M * V = D, U and V unimodular, diagonal entries nonnegative with d_i | d_{i+1}
SmithForm smith_normal_form(const IntegerMatrix& m);

// unimodular inverse; throws unless det = +-1
IntegerMatrix unimodular_inverse(const IntegerMatrix& m);

struct Signature {
    std::size_t pos = 0, neg = 0, zero = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

// exact congruence diagonalization over Q
Signature signature(const IntegerMatrix& sym);

}  // namespace k3dn
