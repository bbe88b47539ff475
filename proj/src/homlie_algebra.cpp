#include "homlie/homlie_algebra.hpp"

namespace homlie {

HomLieAlgebra HomLieAlgebra::abelian(int dim, const Matrix& alpha)
{
    HomLieAlgebra L;
    L.dim = dim;
    L.c = Tensor3(dim, dim, dim);
    L.alpha = alpha;
    return L;
}

AlgebraReport validate_hom_lie(const HomLieAlgebra& L)
{
    AlgebraReport rep;
    const int n = L.dim;
    rep.dims_ok = L.c.left() == n && L.c.right() == n && L.c.out() == n &&
                  L.alpha.rows() == n && L.alpha.cols() == n;
    if (!rep.dims_ok)
        throw std::invalid_argument("validate_hom_lie: dimension mismatch");

    rep.skew = true;
    for (int i = 0; i < n && rep.skew; ++i)
        for (int j = 0; j < n && rep.skew; ++j)
            for (int k = 0; k < n; ++k)
                if (L.c(i, j, k) != -L.c(j, i, k)) {
                    rep.skew = false;
                    break;
                }

    rep.hom_jacobi = true;
    for (int i = 0; i < n && rep.hom_jacobi; ++i) {
        Vec ai = L.alpha.col(i);
        for (int j = 0; j < n && rep.hom_jacobi; ++j) {
            Vec aj = L.alpha.col(j);
            for (int k = 0; k < n; ++k) {
                Vec ak = L.alpha.col(k);
                Vec ei(n, Rat(0)), ej(n, Rat(0)), ek(n, Rat(0));
                ei[i] = 1;
                ej[j] = 1;
                ek[k] = 1;
                Vec term = vec_add(vec_add(L.bracket(ai, L.bracket(ej, ek)),
                                           L.bracket(ak, L.bracket(ei, ej))),
                                   L.bracket(aj, L.bracket(ek, ei)));
                if (!vec_is_zero(term)) {
                    rep.hom_jacobi = false;
                    break;
                }
            }
        }
    }

    rep.multiplicative = true;
    for (int i = 0; i < n && rep.multiplicative; ++i)
        for (int j = 0; j < n; ++j) {
            Vec lhs = L.alpha.apply(L.bracket_basis(i, j));
            Vec rhs = L.bracket(L.alpha.col(i), L.alpha.col(j));
            if (lhs != rhs) {
                rep.multiplicative = false;
                break;
            }
        }

    // Regular: the twist is an automorphism, so it must preserve the bracket
    // and be invertible.
    rep.regular = rep.valid() && rep.multiplicative && rank(L.alpha) == n;
    return rep;
}

bool check_hom_morphism(const Matrix& f, const HomLieAlgebra& L, const HomLieAlgebra& Lp)
{
    if (f.cols() != L.dim || f.rows() != Lp.dim)
        throw std::invalid_argument("check_hom_morphism: dimension mismatch");
    for (int i = 0; i < L.dim; ++i)
        for (int j = 0; j < L.dim; ++j) {
            Vec lhs = f.apply(L.bracket_basis(i, j));
            Vec rhs = Lp.bracket(f.col(i), f.col(j));
            if (lhs != rhs)
                return false;
        }
    return f * L.alpha == Lp.alpha * f;
}

HomLieAlgebra yau_twist(const HomLieAlgebra& g, const Matrix& s)
{
    if (!check_hom_morphism(s, g, g))
        throw std::invalid_argument("yau_twist: s is not an endomorphism");
    HomLieAlgebra t;
    t.dim = g.dim;
    t.alpha = s * g.alpha;
    t.c = Tensor3(g.dim, g.dim, g.dim);
    for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j)
            t.c.set_at(i, j, s.apply(g.bracket_basis(i, j)));
    return t;
}

HomLieAlgebra commutator_hom_lie(const HomAssociative& A)
{
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            Vec lhs = A.alpha.apply(A.mu.at(i, j));
            Vec rhs = A.mu.eval(A.alpha.col(i), A.alpha.col(j));
            if (lhs != rhs)
                throw std::invalid_argument("commutator_hom_lie: alpha does not preserve mu");
        }
    HomLieAlgebra L;
    L.dim = A.dim;
    L.alpha = A.alpha;
    L.c = Tensor3(A.dim, A.dim, A.dim);
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j)
            L.c.set_at(i, j, vec_sub(A.mu.at(i, j), A.mu.at(j, i)));
    return L;
}

Subspace ideal_closure(const HomLieAlgebra& L, const Subspace& S)
{
    if (S.ambient_dim() != L.dim)
        throw std::invalid_argument("ideal_closure: ambient mismatch");
    Subspace cur = S;
    // Strict dimension growth bounds the iteration by dim L.
    for (int iter = 0; iter <= L.dim; ++iter) {
        std::vector<Vec> gen;
        for (int j = 0; j < cur.dim(); ++j) {
            Vec u = cur.basis_vector(j);
            gen.push_back(u);
            gen.push_back(L.alpha.apply(u));
            for (int k = 0; k < L.dim; ++k) {
                Vec ek(L.dim, Rat(0));
                ek[k] = 1;
                gen.push_back(L.bracket(u, ek));
            }
        }
        Subspace next = Subspace::span(L.dim, gen);
        if (next == cur)
            return cur;
        cur = next;
    }
    return cur;
}

bool is_ideal(const HomLieAlgebra& L, const Subspace& S)
{
    for (int j = 0; j < S.dim(); ++j) {
        Vec u = S.basis_vector(j);
        if (!S.contains(L.alpha.apply(u)))
            return false;
        for (int k = 0; k < L.dim; ++k) {
            Vec ek(L.dim, Rat(0));
            ek[k] = 1;
            if (!S.contains(L.bracket(u, ek)))
                return false;
        }
    }
    return true;
}

QuotientAlgebra quotient_algebra(const HomLieAlgebra& L, const Subspace& ideal)
{
    if (!is_ideal(L, ideal))
        throw std::invalid_argument("quotient_algebra: subspace is not a Hom-ideal");
    QuotientSpace q(ideal);
    QuotientAlgebra out;
    out.projection = q.proj();
    out.section = q.section();
    HomLieAlgebra Q;
    Q.dim = q.dim();
    Q.alpha = q.proj() * L.alpha * q.section();
    Q.c = Tensor3(Q.dim, Q.dim, Q.dim);
    for (int i = 0; i < Q.dim; ++i)
        for (int j = 0; j < Q.dim; ++j)
            Q.c.set_at(i, j, q.proj().apply(L.bracket(q.section().col(i), q.section().col(j))));
    out.algebra = Q;
    return out;
}

QuotientAlgebra multiplicativize(const HomLieAlgebra& L)
{
    AlgebraReport rep = validate_hom_lie(L);
    if (!rep.skew || !rep.hom_jacobi)
        throw std::invalid_argument("multiplicativize: input fails skew or Hom-Jacobi");
    std::vector<Vec> gen;
    for (int i = 0; i < L.dim; ++i)
        for (int j = 0; j < L.dim; ++j) {
            Vec d = vec_sub(L.alpha.apply(L.bracket_basis(i, j)),
                            L.bracket(L.alpha.col(i), L.alpha.col(j)));
            gen.push_back(d);
        }
    Subspace I = ideal_closure(L, Subspace::span(L.dim, gen));
    return quotient_algebra(L, I);
}

Abelianisation commutator_and_abelianisation(const HomLieAlgebra& L)
{
    std::vector<Vec> gen;
    for (int i = 0; i < L.dim; ++i)
        for (int j = 0; j < L.dim; ++j)
            gen.push_back(L.bracket_basis(i, j));
    Abelianisation ab;
    ab.commutator = ideal_closure(L, Subspace::span(L.dim, gen));
    ab.quotient = quotient_algebra(L, ab.commutator);
    return ab;
}

Subspace centre(const HomLieAlgebra& L)
{
    // V0 = {x : [x, y] = 0 for all y}: kernel of the stacked adjoint maps.
    Matrix ad(L.dim * L.dim, L.dim);
    for (int j = 0; j < L.dim; ++j) {
        Vec ej(L.dim, Rat(0));
        ej[j] = 1;
        for (int i = 0; i < L.dim; ++i) {
            Vec ei(L.dim, Rat(0));
            ei[i] = 1;
            Vec b = L.bracket(ei, ej);
            for (int k = 0; k < L.dim; ++k)
                ad(j * L.dim + k, i) = b[k];
        }
    }
    Subspace v0 = kernel_basis(ad);
    Subspace cur = v0;
    for (int iter = 0; iter <= L.dim; ++iter) {
        Subspace next = v0.intersect(cur.preimage(L.alpha));
        if (next == cur)
            return cur;
        cur = next;
    }
    return cur;
}

HomLieAlgebra subalgebra_on(const HomLieAlgebra& L, const Subspace& S)
{
    const int d = S.dim();
    HomLieAlgebra H;
    H.dim = d;
    H.alpha = Matrix(d, d);
    H.c = Tensor3(d, d, d);
    for (int j = 0; j < d; ++j) {
        auto im = S.coordinates(L.alpha.apply(S.basis_vector(j)));
        if (!im)
            throw std::invalid_argument("subalgebra_on: subspace not alpha-invariant");
        H.alpha.set_col(j, *im);
    }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            auto im = S.coordinates(L.bracket(S.basis_vector(i), S.basis_vector(j)));
            if (!im)
                throw std::invalid_argument("subalgebra_on: subspace not bracket-closed");
            H.c.set_at(i, j, *im);
        }
    return H;
}

}  // namespace homlie
