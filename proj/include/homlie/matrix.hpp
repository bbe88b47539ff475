#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "homlie/rational.hpp"

namespace homlie {

using Vec = std::vector<Rat>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rat& k, const Vec& a);
bool vec_is_zero(const Vec& a);

// Dense matrix over the rationals, row-major. Everything is exact; there is
// no floating point anywhere in this library.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
    Matrix(int rows, int cols, std::initializer_list<Rat> entries);

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
    static Matrix from_columns(int rows, const std::vector<Vec>& cols);
    static Matrix column(const Vec& v);
    static Matrix diagonal(const Vec& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    Vec col(int j) const;
    Vec row(int i) const;
    void set_col(int j, const Vec& v);

    Matrix transpose() const;
    Vec apply(const Vec& v) const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rat& k, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    // [A | B] side by side, resp. A over B.
    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix block_diag(const Matrix& a, const Matrix& b);

    Matrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> a_;
};

// Determinant by fraction-free-ish Gaussian elimination; used for the small
// minors that show up in wedge-power (compound) matrices.
Rat determinant(const Matrix& m);

}  // namespace homlie
