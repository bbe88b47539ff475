#include "homlie/linalg.hpp"

namespace homlie {

std::vector<int> rref_in_place(Matrix& m)
{
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        Rat inv = Rat(1) / m(r, c);
        for (int j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            Rat f = m(i, c);
            for (int j = c; j < m.cols(); ++j)
                m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(const Matrix& m)
{
    Matrix copy = m;
    return static_cast<int>(rref_in_place(copy).size());
}

std::optional<Vec> solve_affine(const Matrix& a, const Vec& b)
{
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("solve_affine: dimension mismatch");
    Matrix aug = Matrix::hstack(a, Matrix::column(b));
    std::vector<int> pivots = rref_in_place(aug);
    // A pivot in the last column signals inconsistency.
    if (!pivots.empty() && pivots.back() == a.cols())
        return std::nullopt;
    Vec x(a.cols(), Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = aug(static_cast<int>(i), a.cols());
    return x;
}

std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw std::invalid_argument("solve_matrix: dimension mismatch");
    Matrix x(a.cols(), b.cols());
    for (int j = 0; j < b.cols(); ++j) {
        auto sol = solve_affine(a, b.col(j));
        if (!sol)
            return std::nullopt;
        x.set_col(j, *sol);
    }
    return x;
}

Subspace Subspace::span(int ambient_dim, const std::vector<Vec>& vectors)
{
    Matrix rows(static_cast<int>(vectors.size()), ambient_dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (static_cast<int>(vectors[i].size()) != ambient_dim)
            throw std::invalid_argument("Subspace::span: vector length mismatch");
        for (int j = 0; j < ambient_dim; ++j)
            rows(static_cast<int>(i), j) = vectors[i][j];
    }
    std::vector<int> pivots = rref_in_place(rows);
    Subspace s;
    s.ambient_ = ambient_dim;
    s.pivots_ = pivots;
    s.basis_ = Matrix(ambient_dim, static_cast<int>(pivots.size()));
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (int j = 0; j < ambient_dim; ++j)
            s.basis_(j, static_cast<int>(k)) = rows(static_cast<int>(k), j);
    return s;
}

Subspace Subspace::span_columns(const Matrix& columns)
{
    std::vector<Vec> vs;
    vs.reserve(columns.cols());
    for (int j = 0; j < columns.cols(); ++j)
        vs.push_back(columns.col(j));
    return span(columns.rows(), vs);
}

Subspace Subspace::full(int ambient_dim)
{
    std::vector<Vec> vs;
    for (int i = 0; i < ambient_dim; ++i) {
        Vec e(ambient_dim, Rat(0));
        e[i] = 1;
        vs.push_back(e);
    }
    return span(ambient_dim, vs);
}

bool Subspace::contains(const Vec& v) const
{
    return coordinates(v).has_value();
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const
{
    if (static_cast<int>(v.size()) != ambient_)
        throw std::invalid_argument("Subspace: ambient dimension mismatch");
    // Reduced echelon basis: coordinates read off at the pivot positions.
    Vec coords(dim());
    Vec rem = v;
    for (int k = 0; k < dim(); ++k) {
        coords[k] = rem[pivots_[k]];
        if (coords[k] != 0)
            for (int j = 0; j < ambient_; ++j)
                rem[j] -= coords[k] * basis_(j, k);
    }
    if (!vec_is_zero(rem))
        return std::nullopt;
    return coords;
}

bool Subspace::contains(const Subspace& other) const
{
    for (int j = 0; j < other.dim(); ++j)
        if (!contains(other.basis_vector(j)))
            return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const
{
    if (ambient_ != other.ambient_)
        throw std::invalid_argument("Subspace::sum: ambient dimension mismatch");
    std::vector<Vec> vs;
    for (int j = 0; j < dim(); ++j)
        vs.push_back(basis_vector(j));
    for (int j = 0; j < other.dim(); ++j)
        vs.push_back(other.basis_vector(j));
    return span(ambient_, vs);
}

Subspace Subspace::intersect(const Subspace& other) const
{
    if (ambient_ != other.ambient_)
        throw std::invalid_argument("Subspace::intersect: ambient dimension mismatch");
    if (dim() == 0 || other.dim() == 0)
        return Subspace(ambient_);
    // v in both spans iff v = U a = V b; solve [U | -V] (a,b)^T = 0.
    Matrix sys = Matrix::hstack(basis_, Rat(-1) * other.basis_);
    Subspace ker = kernel_basis(sys);
    std::vector<Vec> vs;
    for (int j = 0; j < ker.dim(); ++j) {
        Vec ab = ker.basis_vector(j);
        Vec a(ab.begin(), ab.begin() + dim());
        vs.push_back(basis_.apply(a));
    }
    return span(ambient_, vs);
}

std::vector<Vec> Subspace::quotient_representatives(const Subspace& other) const
{
    std::vector<Vec> reps;
    Subspace cur = *this;
    for (int j = 0; j < other.dim(); ++j) {
        Vec v = other.basis_vector(j);
        if (!cur.contains(v)) {
            reps.push_back(v);
            std::vector<Vec> vs = {v};
            for (int k = 0; k < cur.dim(); ++k)
                vs.push_back(cur.basis_vector(k));
            cur = span(ambient_, vs);
        }
    }
    return reps;
}

Subspace Subspace::preimage(const Matrix& a) const
{
    if (a.rows() != ambient_)
        throw std::invalid_argument("Subspace::preimage: shape mismatch");
    QuotientSpace q(*this);
    return kernel_basis(q.proj() * a);
}

Subspace Subspace::image_under(const Matrix& a) const
{
    if (a.cols() != ambient_)
        throw std::invalid_argument("Subspace::image_under: shape mismatch");
    std::vector<Vec> vs;
    for (int j = 0; j < dim(); ++j)
        vs.push_back(a.apply(basis_vector(j)));
    return span(a.rows(), vs);
}

Subspace kernel_basis(const Matrix& a)
{
    Matrix red = a;
    std::vector<int> pivots = rref_in_place(red);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int p : pivots)
        is_pivot[p] = true;
    std::vector<Vec> vs;
    for (int c = 0; c < a.cols(); ++c) {
        if (is_pivot[c])
            continue;
        Vec v(a.cols(), Rat(0));
        v[c] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -red(static_cast<int>(i), c);
        vs.push_back(v);
    }
    return Subspace::span(a.cols(), vs);
}

QuotientSpace::QuotientSpace(const Subspace& s) : sub_(s)
{
    const int n = s.ambient_dim();
    std::vector<bool> is_pivot(n, false);
    for (int p : s.pivots())
        is_pivot[p] = true;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c])
            reps_.push_back(c);
    const int q = static_cast<int>(reps_.size());
    proj_ = Matrix(q, n);
    section_ = Matrix(n, q);
    for (int j = 0; j < q; ++j)
        section_(reps_[j], j) = 1;
    // Reduce each standard basis vector modulo the canonical basis, then read
    // off the representative coordinates.
    for (int c = 0; c < n; ++c) {
        Vec e(n, Rat(0));
        e[c] = 1;
        for (int k = 0; k < s.dim(); ++k) {
            Rat coef = e[s.pivots()[k]];
            if (coef != 0)
                for (int j = 0; j < n; ++j)
                    e[j] -= coef * s.basis()(j, k);
        }
        for (int j = 0; j < q; ++j)
            proj_(j, c) = e[reps_[j]];
    }
}

}  // namespace homlie
