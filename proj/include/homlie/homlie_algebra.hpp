#pragma once

#include <string>
#include <vector>

#include "homlie/linalg.hpp"
#include "homlie/tensor.hpp"

namespace homlie {

// A finite-dimensional algebra (L, [-,-], alpha): structure constants
// c(i,j,k) for [e_i, e_j] plus the twist matrix. Both (i,j) and (j,i) entries
// are stored; validation compares them instead of assuming skew-symmetry.
struct HomLieAlgebra {
    int dim = 0;
    Tensor3 c;      // dim x dim x dim
    Matrix alpha;   // dim x dim

    static HomLieAlgebra abelian(int dim, const Matrix& alpha);
    static HomLieAlgebra zero() { return abelian(0, Matrix(0, 0)); }

    Vec bracket(const Vec& x, const Vec& y) const { return c.eval(x, y); }
    Vec bracket_basis(int i, int j) const { return c.at(i, j); }

    friend bool operator==(const HomLieAlgebra& a, const HomLieAlgebra& b) = default;
};

struct AlgebraReport {
    bool dims_ok = false;
    bool skew = false;
    bool hom_jacobi = false;
    bool multiplicative = false;
    bool regular = false;
    // Hom-Lie algebra in the sense of the defining identities; the
    // multiplicative and regular flags are extra properties on top.
    bool valid() const { return dims_ok && skew && hom_jacobi; }
};

// Flags are residual checks over all basis tuples: skew-symmetry
// c(i,j,.) = -c(j,i,.), the Hom-Jacobi identity
// [a(x),[y,z]] + [a(z),[x,y]] + [a(y),[z,x]] = 0, bracket preservation by
// alpha, and (for `regular`) invertibility of alpha.
AlgebraReport validate_hom_lie(const HomLieAlgebra& L);

// Both homomorphism conditions: f[x,y] = [fx,fy] and f∘alpha_L = alpha_L'∘f.
bool check_hom_morphism(const Matrix& f, const HomLieAlgebra& L, const HomLieAlgebra& Lp);

// Twist by an endomorphism s (bracket-preserving, commuting with alpha):
// the bracket becomes s∘[-,-] and the twist s∘alpha. For a Lie algebra
// (alpha = Id) this is the classical construction producing ([-,-]_s, s).
HomLieAlgebra yau_twist(const HomLieAlgebra& g, const Matrix& s);

struct HomAssociative {
    int dim = 0;
    Tensor3 mu;
    Matrix alpha;
};

// Commutator bracket mu(x,y) - mu(y,x) with the same twist.
HomLieAlgebra commutator_hom_lie(const HomAssociative& A);

// Smallest alpha-invariant, bracket-absorbing subspace containing S:
// fixed point of U -> U + [U, L] + alpha(U).
Subspace ideal_closure(const HomLieAlgebra& L, const Subspace& S);

bool is_ideal(const HomLieAlgebra& L, const Subspace& S);

struct QuotientAlgebra {
    HomLieAlgebra algebra;
    Matrix projection;  // quotient dim x L dim
    Matrix section;     // L dim x quotient dim (chosen representatives)
};

// Quotient by a Hom-ideal, with cosets represented by the non-pivot ambient
// basis vectors under the fixed order.
QuotientAlgebra quotient_algebra(const HomLieAlgebra& L, const Subspace& ideal);

// Quotient by the ideal generated by alpha[x,y] - [alpha x, alpha y]; the
// result is multiplicative and the projection is a surjective morphism.
QuotientAlgebra multiplicativize(const HomLieAlgebra& L);

struct Abelianisation {
    Subspace commutator;       // the ideal [L, L]
    QuotientAlgebra quotient;  // L^ab
};

Abelianisation commutator_and_abelianisation(const HomLieAlgebra& L);

// Z(L) = {x : [alpha^n(x), y] = 0 for all y and n >= 0}, computed as the
// stable value of V_{k+1} = V_0 ∩ alpha^{-1}(V_k) with V_0 = ker(ad).
Subspace centre(const HomLieAlgebra& L);

// Restriction of the structure to an invariant subspace (bracket-closed and
// alpha-invariant); throws if the subspace is not closed.
HomLieAlgebra subalgebra_on(const HomLieAlgebra& L, const Subspace& S);

}  // namespace homlie
