#pragma once

#include <optional>
#include <vector>

#include "homlie/matrix.hpp"

namespace homlie {

// In-place reduced row echelon form with the fixed pivot rule "first nonzero
// entry in column order". Returns the pivot column indices. Deterministic:
// identical input grids give identical output grids.
std::vector<int> rref_in_place(Matrix& m);

int rank(const Matrix& m);

// One solution of Ax = b with free variables pinned to zero (under the fixed
// column order), or nullopt when the system is inconsistent.
std::optional<Vec> solve_affine(const Matrix& a, const Vec& b);

// Solve AX = B column by column; nullopt if any column is inconsistent.
std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b);

// A linear subspace of Q^n held in canonical form: the basis columns, read as
// rows, are in reduced row echelon form. Two subspaces are equal iff their
// canonical grids are identical, so operator== decides subspace equality.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(ambient_dim, 0) {}

    // Canonicalizes an arbitrary spanning set.
    static Subspace span(int ambient_dim, const std::vector<Vec>& vectors);
    static Subspace span_columns(const Matrix& columns);
    static Subspace full(int ambient_dim);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }
    Vec basis_vector(int j) const { return basis_.col(j); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    // Coordinates of v in the canonical basis; nullopt if v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    // Representatives extending this subspace to this + other: the canonical
    // basis vectors of `other` that enlarge the span, in order.
    std::vector<Vec> quotient_representatives(const Subspace& other) const;

    // Preimage {x : A x in this}, for A mapping into this subspace's ambient.
    Subspace preimage(const Matrix& a) const;
    // Image {A x : x in this}, for A defined on this subspace's ambient.
    Subspace image_under(const Matrix& a) const;

private:
    int ambient_ = 0;
    Matrix basis_;              // ambient_ x dim, canonical
    std::vector<int> pivots_;   // leading coordinate of each basis vector
};

// Canonical basis of {v : Av = 0}.
Subspace kernel_basis(const Matrix& a);

// Coordinates on the quotient Q^n / S: classes are identified with the
// non-pivot coordinates of S's canonical basis, in ambient order. `proj` is
// the projection Q^n -> Q^(n-k); `section` embeds the chosen representatives
// (standard basis vectors at non-pivot positions), so proj * section = I.
class QuotientSpace {
public:
    explicit QuotientSpace(const Subspace& s);

    int ambient_dim() const { return sub_.ambient_dim(); }
    int dim() const { return proj_.rows(); }
    const Matrix& proj() const { return proj_; }
    const Matrix& section() const { return section_; }
    const Subspace& subspace() const { return sub_; }
    const std::vector<int>& representative_indices() const { return reps_; }

private:
    Subspace sub_;
    Matrix proj_;
    Matrix section_;
    std::vector<int> reps_;
};

}  // namespace homlie
