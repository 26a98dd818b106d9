#include "k3dn/matrix.hpp"

#include <sstream>
#include <utility>

namespace k3dn {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return IntegerMatrix();
    IntegerMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw Error("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Int>> r;
    for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
    return from_rows(r);
}

Int& IntegerMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw Error("matrix index out of range");
    return (*this)(i, j);
}

const Int& IntegerMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw Error("matrix index out of range");
    return (*this)(i, j);
}

std::vector<Int> IntegerMatrix::row(std::size_t i) const {
    return std::vector<Int>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

std::vector<Int> IntegerMatrix::col(std::size_t j) const {
    std::vector<Int> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntegerMatrix::is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool IntegerMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row(std::size_t a, std::size_t b, const Int& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += k * (*this)(b, j);
}

void IntegerMatrix::add_col(std::size_t a, std::size_t b, const Int& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) += k * (*this)(i, b);
}

void IntegerMatrix::negate_row(std::size_t a) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
}

IntegerMatrix IntegerMatrix::submatrix(const std::vector<std::size_t>& rs,
                                       const std::vector<std::size_t>& cs) const {
    IntegerMatrix m(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = at(rs[i], cs[j]);
    return m;
}

std::string IntegerMatrix::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ", ";
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << (*this)(i, j);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows()) throw Error("matrix product dimension mismatch");
    IntegerMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix sum dimension mismatch");
    IntegerMatrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
    return c;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a + Int(-1) * b;
}

IntegerMatrix operator*(const Int& k, const IntegerMatrix& a) {
    IntegerMatrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= k;
    return c;
}

std::vector<Int> operator*(const IntegerMatrix& a, const std::vector<Int>& v) {
    if (a.cols() != v.size()) throw Error("matrix-vector dimension mismatch");
    std::vector<Int> r(a.rows(), Int(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
    return r;
}

IntegerMatrix block_diagonal(const IntegerMatrix& a, const IntegerMatrix& b) {
    IntegerMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

// Bareiss fraction-free elimination
Int determinant(const IntegerMatrix& m) {
    if (!m.square()) throw Error("determinant of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntegerMatrix& m) {
    IntegerMatrix a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(r, p);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, c) == 0) continue;
            Int f = a(i, c), g = a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = a(i, j) * g - a(r, j) * f;
            Int h = 0;
            for (std::size_t j = c; j < a.cols(); ++j) h = int_gcd(h, a(i, j));
            if (h > 1)
                for (std::size_t j = c; j < a.cols(); ++j) a(i, j) /= h;
        }
        ++r;
    }
    return r;
}

RatMatrix to_rational(const IntegerMatrix& m) {
    RatMatrix r(m.rows(), std::vector<Rat>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = Rat(m(i, j));
    return r;
}

RatMatrix rational_inverse(const IntegerMatrix& m) {
    if (!m.square()) throw Error("inverse of non-square matrix");
    std::size_t n = m.rows();
    RatMatrix a = to_rational(m);
    RatMatrix inv(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw Error("singular matrix");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rat piv = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& m) {
    RatMatrix r = rational_inverse(m);
    IntegerMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (den(r[i][j]) != 1) throw Error("matrix is not unimodular");
            out(i, j) = num(r[i][j]);
        }
    return out;
}

std::vector<Int> SmithForm::diagonal() const {
    std::vector<Int> d;
    for (std::size_t i = 0; i < D.rows() && i < D.cols(); ++i) d.push_back(D(i, i));
    return d;
}

SmithForm smith_normal_form(const IntegerMatrix& m) {
    std::size_t R = m.rows(), C = m.cols();
    IntegerMatrix D = m, U = IntegerMatrix::identity(R), V = IntegerMatrix::identity(C);

    for (std::size_t t = 0; t < R && t < C; ++t) {
        // bring the smallest nonzero entry of the trailing block to (t,t)
        auto place_min = [&](bool whole_block) {
            std::size_t bi = R, bj = C;
            for (std::size_t i = t; i < R; ++i)
                for (std::size_t j = t; j < C; ++j) {
                    if (!whole_block && i != t && j != t) continue;
                    if (D(i, j) == 0) continue;
                    if (bi == R || iabs(D(i, j)) < iabs(D(bi, bj))) {
                        bi = i;
                        bj = j;
                    }
                }
            if (bi == R) return false;
            D.swap_rows(t, bi);
            U.swap_rows(t, bi);
            D.swap_cols(t, bj);
            V.swap_cols(t, bj);
            return true;
        };
        if (!place_min(true)) break;

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (D(i, t) == 0) continue;
                Int q = D(i, t) / D(t, t);
                D.add_row(i, t, -q);
                U.add_row(i, t, -q);
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (D(t, j) == 0) continue;
                Int q = D(t, j) / D(t, t);
                D.add_col(j, t, -q);
                V.add_col(j, t, -q);
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) {
                place_min(false);
                continue;
            }
            std::size_t bad = R;
            for (std::size_t i = t + 1; i < R && bad == R; ++i)
                for (std::size_t j = t + 1; j < C; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == R) break;
            D.add_row(t, bad, 1);
            U.add_row(t, bad, 1);
        }
        if (D(t, t) < 0) {
            D.negate_row(t);
            U.negate_row(t);
        }
    }
    return {U, D, V};
}

Signature signature(const IntegerMatrix& sym) {
    if (!sym.is_symmetric()) throw Error("signature of non-symmetric matrix");
    std::size_t n = sym.rows();
    RatMatrix a = to_rational(sym);
    Signature s;
    auto sym_swap = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        for (auto& row : a) std::swap(row[i], row[j]);
    };
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t j = k + 1;
            while (j < n && a[j][j] == 0) ++j;
            if (j < n) {
                sym_swap(k, j);
            } else {
                j = k + 1;
                while (j < n && a[k][j] == 0) ++j;
                if (j == n) {
                    ++s.zero;
                    continue;
                }
                // e_k <- e_k + e_j gives diagonal 2 a_kj
                for (std::size_t c = 0; c < n; ++c) a[k][c] += a[j][c];
                for (std::size_t r = 0; r < n; ++r) a[r][k] += a[r][j];
            }
        }
        Rat piv = a[k][k];
        if (piv > 0)
            ++s.pos;
        else
            ++s.neg;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat f = a[i][k] / piv;
            for (std::size_t c = k; c < n; ++c) a[i][c] -= f * a[k][c];
            for (std::size_t r = k; r < n; ++r)
                if (r != i) a[r][i] = a[i][r];
        }
    }
    return s;
}

}  // namespace k3dn
