#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "admcube/rings.hpp"

namespace admcube {

// Dense matrix of ring elements, row-major. Zero dimensions are legal and
// identify zero modules and zero maps.
class Matrix {
  public:
    Matrix(Ring ring, int rows, int cols);  // zero-filled
    static Matrix identity(const Ring& ring, int n);
    static Matrix scalar(const Ring& ring, int n, const Elem& a);
    // Row-major integer literals, handy in tests and builders.
    static Matrix from_int_rows(const Ring& ring, int rows, int cols,
                                std::initializer_list<long> entries);

    const Ring& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Elem& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    void set(int i, int j, Elem v);

    Matrix transpose() const;
    Matrix hcat(const Matrix& o) const;
    Matrix vcat(const Matrix& o) const;
    Matrix cols_subset(const std::vector<int>& idx) const;
    Matrix rows_subset(const std::vector<int>& idx) const;
    Matrix submatrix(const std::vector<int>& ri, const std::vector<int>& ci) const;
    Matrix minor_matrix(int drop_row, int drop_col) const;

    Matrix mul(const Matrix& o) const;
    Matrix add(const Matrix& o) const;
    Matrix sub(const Matrix& o) const;
    Matrix negate() const;
    Matrix scaled(const Elem& a) const;

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    std::string to_string() const;  // compact [[..],[..]] text, for witnesses

  private:
    Ring ring_;
    int rows_, cols_;
    std::vector<Elem> e_;
};

// u * a * v = d with u, v invertible over the ring; d diagonal with
// d_1 | d_2 | ...; over Z the diagonal is nonnegative, over Z/m it is the
// canonical divisor gcd(d, m), over fields it is 0/1. uinv and vinv are the
// exact inverses of u and v.
struct SnfResult {
    Matrix u, uinv, d, v, vinv;
};

SnfResult smith_normal_form(const Matrix& a);

// Canonical invariant-factor diagonal only (entries of d, padded with the
// convention that absent diagonal positions are zero).
std::vector<Elem> snf_diagonal(const Matrix& a);

// Columns generate {x : a*x = 0} as a module over the ring (a full
// generating set, not merely a basis; over Z/m annihilator generators are
// included).
Matrix kernel_basis(const Matrix& a);

// One exact solution x with a*x = b (columnwise), or nullopt.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// Canonical row Hermite form: over Z row-style HNF with positive pivots and
// entries above pivots reduced into [0, pivot); over fields the reduced row
// echelon form. Zero rows are dropped. Not defined over Z/m (callers lift).
Matrix row_hermite(const Matrix& a);

// Determinant by fraction-free column-subset expansion (exact over every
// supported ring; 0x0 determinant is 1).
Elem det(const Matrix& a);

// All t x t minors in lexicographic row-subset-major, column-subset order.
std::vector<Elem> minors(const Matrix& a, int t);

// adj(a) with adj(a)*a = a*adj(a) = det(a)*I; adj of 0x0 is 0x0, of 1x1 is [1].
Matrix adjugate(const Matrix& a);

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets_lex(int n, int k);

}  // namespace admcube
