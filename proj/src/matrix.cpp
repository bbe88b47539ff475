#include "homlie/matrix.hpp"

#include <sstream>

namespace homlie {

Vec vec_add(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("vec_add: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("vec_sub: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Rat& k, const Vec& a)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = k * a[i];
    return r;
}

bool vec_is_zero(const Vec& a)
{
    for (const Rat& x : a)
        if (x != 0)
            return false;
    return true;
}

Matrix::Matrix(int rows, int cols, std::initializer_list<Rat> entries) : Matrix(rows, cols)
{
    if (static_cast<int>(entries.size()) != rows * cols)
        throw std::invalid_argument("Matrix: entry count does not match shape");
    std::size_t k = 0;
    for (const Rat& e : entries)
        a_[k++] = e;
}

Matrix Matrix::identity(int n)
{
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(int rows, const std::vector<Vec>& cols)
{
    Matrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols_; ++j) {
        if (static_cast<int>(cols[j].size()) != rows)
            throw std::invalid_argument("from_columns: column length mismatch");
        for (int i = 0; i < rows; ++i)
            m(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::column(const Vec& v)
{
    return from_columns(static_cast<int>(v.size()), {v});
}

Matrix Matrix::diagonal(const Vec& d)
{
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i)
        m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

Vec Matrix::col(int j) const
{
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

Vec Matrix::row(int i) const
{
    Vec v(cols_);
    for (int j = 0; j < cols_; ++j)
        v[j] = (*this)(i, j);
    return v;
}

void Matrix::set_col(int j, const Vec& v)
{
    if (static_cast<int>(v.size()) != rows_)
        throw std::invalid_argument("set_col: length mismatch");
    for (int i = 0; i < rows_; ++i)
        (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Vec Matrix::apply(const Vec& v) const
{
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("apply: dimension mismatch");
    Vec r(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0 && v[j] != 0)
                r[i] += (*this)(i, j) * v[j];
    return r;
}

bool Matrix::is_zero() const
{
    for (const Rat& x : a_)
        if (x != 0)
            return false;
    return true;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("Matrix +: shape mismatch");
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.a_.size(); ++k)
        r.a_[k] = a.a_[k] + b.a_[k];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("Matrix -: shape mismatch");
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.a_.size(); ++k)
        r.a_[k] = a.a_[k] - b.a_[k];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("Matrix *: shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rat& aik = a(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < b.cols_; ++j)
                if (b(k, j) != 0)
                    r(i, j) += aik * b(k, j);
        }
    return r;
}

Matrix operator*(const Rat& k, const Matrix& a)
{
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i)
        r.a_[i] = k * a.a_[i];
    return r;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_)
        throw std::invalid_argument("hstack: row mismatch");
    Matrix r(a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j)
            r(i, j) = a(i, j);
        for (int j = 0; j < b.cols_; ++j)
            r(i, a.cols_ + j) = b(i, j);
    }
    return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.cols_)
        throw std::invalid_argument("vstack: column mismatch");
    Matrix r(a.rows_ + b.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j)
            r(i, j) = a(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j)
            r(a.rows_ + i, j) = b(i, j);
    return r;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b)
{
    Matrix r(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j)
            r(i, j) = a(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j)
            r(a.rows_ + i, a.cols_ + j) = b(i, j);
    return r;
}

Matrix Matrix::submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const
{
    Matrix r(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            r(static_cast<int>(i), static_cast<int>(j)) = (*this)(row_idx[i], col_idx[j]);
    return r;
}

std::string Matrix::to_string() const
{
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j)
            os << (j ? " " : "[") << rat_to_string((*this)(i, j));
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

Rat determinant(const Matrix& m)
{
    if (!m.is_square())
        throw std::invalid_argument("determinant: matrix not square");
    const int n = m.rows();
    Matrix a = m;
    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (a(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            return Rat(0);
        if (pivot != col) {
            for (int j = 0; j < n; ++j)
                std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (a(i, col) == 0)
                continue;
            Rat f = a(i, col) / a(col, col);
            for (int j = col; j < n; ++j)
                a(i, j) -= f * a(col, j);
        }
    }
    return det;
}

}  // namespace homlie
