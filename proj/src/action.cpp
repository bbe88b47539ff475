#include "homlie/action.hpp"

namespace homlie {

ActionReport validate_action(const HomAction& act)
{
    if (!act.dims_ok())
        throw std::invalid_argument("validate_action: dimension mismatch");
    const HomLieAlgebra& L = act.actor;
    const HomLieAlgebra& M = act.target;
    ActionReport rep;

    rep.axiom_a = true;
    for (int i = 0; i < L.dim && rep.axiom_a; ++i)
        for (int j = 0; j < L.dim && rep.axiom_a; ++j)
            for (int k = 0; k < M.dim; ++k) {
                Vec amk = M.alpha.col(k);
                Vec mk(M.dim, Rat(0));
                mk[k] = 1;
                Vec lhs = act.act.eval(L.bracket_basis(i, j), amk);
                Vec ei(L.dim, Rat(0)), ej(L.dim, Rat(0));
                ei[i] = 1;
                ej[j] = 1;
                Vec rhs = vec_sub(act.apply(L.alpha.col(i), act.apply(ej, mk)),
                                  act.apply(L.alpha.col(j), act.apply(ei, mk)));
                if (lhs != rhs) {
                    rep.axiom_a = false;
                    break;
                }
            }

    rep.axiom_b = true;
    for (int i = 0; i < L.dim && rep.axiom_b; ++i)
        for (int j = 0; j < M.dim && rep.axiom_b; ++j)
            for (int k = 0; k < M.dim; ++k) {
                Vec ei(L.dim, Rat(0));
                ei[i] = 1;
                Vec mj(M.dim, Rat(0)), mk(M.dim, Rat(0));
                mj[j] = 1;
                mk[k] = 1;
                Vec lhs = act.apply(L.alpha.col(i), M.bracket_basis(j, k));
                Vec rhs = vec_add(M.bracket(act.apply(ei, mj), M.alpha.col(k)),
                                  M.bracket(M.alpha.col(j), act.apply(ei, mk)));
                if (lhs != rhs) {
                    rep.axiom_b = false;
                    break;
                }
            }

    rep.axiom_c = true;
    for (int i = 0; i < L.dim && rep.axiom_c; ++i)
        for (int j = 0; j < M.dim; ++j) {
            Vec ei(L.dim, Rat(0));
            ei[i] = 1;
            Vec mj(M.dim, Rat(0));
            mj[j] = 1;
            Vec lhs = M.alpha.apply(act.apply(ei, mj));
            Vec rhs = act.apply(L.alpha.col(i), M.alpha.col(j));
            if (lhs != rhs) {
                rep.axiom_c = false;
                break;
            }
        }

    rep.target_abelian = M.c.is_zero();
    return rep;
}

HomAction adjoint_action(const HomLieAlgebra& L, bool as_module)
{
    HomAction a;
    a.actor = L;
    a.target = L;
    if (as_module)
        a.target.c = Tensor3(L.dim, L.dim, L.dim);
    a.act = L.c;
    return a;
}

HomAction trivial_action(const HomLieAlgebra& L, const HomLieAlgebra& target)
{
    HomAction a;
    a.actor = L;
    a.target = target;
    a.act = Tensor3(L.dim, target.dim, target.dim);
    return a;
}

HomAction ideal_action(const HomLieAlgebra& L, const Subspace& ideal)
{
    HomAction a;
    a.actor = L;
    a.target = subalgebra_on(L, ideal);
    a.act = Tensor3(L.dim, ideal.dim(), ideal.dim());
    for (int i = 0; i < L.dim; ++i) {
        Vec ei(L.dim, Rat(0));
        ei[i] = 1;
        for (int j = 0; j < ideal.dim(); ++j) {
            auto im = ideal.coordinates(L.bracket(ei, ideal.basis_vector(j)));
            if (!im)
                throw std::invalid_argument("ideal_action: subspace is not an ideal");
            a.act.set_at(i, j, *im);
        }
    }
    return a;
}

HomAction pullback_action(const HomAction& act, const Matrix& pi, const HomLieAlgebra& E)
{
    if (pi.rows() != act.actor.dim || pi.cols() != E.dim)
        throw std::invalid_argument("pullback_action: shape mismatch");
    HomAction a;
    a.actor = E;
    a.target = act.target;
    a.act = Tensor3(E.dim, act.target.dim, act.target.dim);
    for (int i = 0; i < E.dim; ++i)
        for (int j = 0; j < act.target.dim; ++j) {
            Vec mj(act.target.dim, Rat(0));
            mj[j] = 1;
            a.act.set_at(i, j, act.apply(pi.col(i), mj));
        }
    return a;
}

SemidirectProduct semidirect(const HomAction& act, const Matrix& s)
{
    ActionReport rep = validate_action(act);
    if (!rep.valid())
        throw std::invalid_argument("semidirect: action does not satisfy the Hom-action axioms");
    if (!check_hom_morphism(s, act.actor, act.actor))
        throw std::invalid_argument("semidirect: s is not an endomorphism of the actor");

    const HomLieAlgebra& L = act.actor;
    const HomLieAlgebra& M = act.target;
    const int m = M.dim, n = L.dim, d = m + n;

    SemidirectProduct out;
    out.alg.dim = d;
    out.alg.alpha = Matrix::block_diag(M.alpha, L.alpha);
    out.alg.c = Tensor3(d, d, d);

    auto embed = [&](const Vec& mm, const Vec& ll) {
        Vec v(d, Rat(0));
        for (int i = 0; i < m; ++i)
            v[i] = mm[i];
        for (int i = 0; i < n; ++i)
            v[m + i] = ll[i];
        return v;
    };
    Vec zm(m, Rat(0)), zl(n, Rat(0));

    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            out.alg.c.set_at(i, j, embed(M.bracket_basis(i, j), zl));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            Vec mi(m, Rat(0));
            mi[i] = 1;
            Vec v = embed(vec_scale(Rat(-1), act.apply(s.col(j), mi)), zl);
            out.alg.c.set_at(i, m + j, v);
            out.alg.c.set_at(m + j, i, vec_scale(Rat(-1), v));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.alg.c.set_at(m + i, m + j, embed(zm, L.bracket_basis(i, j)));

    AlgebraReport check = validate_hom_lie(out.alg);
    if (!check.skew || !check.hom_jacobi || !check.multiplicative)
        throw std::logic_error("semidirect: constructed algebra fails validation");

    out.incl_target = Matrix(d, m);
    for (int i = 0; i < m; ++i)
        out.incl_target(i, i) = 1;
    out.proj_actor = Matrix(n, d);
    for (int i = 0; i < n; ++i)
        out.proj_actor(i, m + i) = 1;
    out.sect_actor = Matrix(d, n);
    for (int i = 0; i < n; ++i)
        out.sect_actor(m + i, i) = 1;
    return out;
}

SemidirectProduct semidirect(const HomAction& act)
{
    return semidirect(act, Matrix::identity(act.actor.dim));
}

Vec vec_of_matrix(const Matrix& m)
{
    Vec v(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i)
            v[static_cast<std::size_t>(j) * m.rows() + i] = m(i, j);
    return v;
}

Matrix matrix_of_vec(int rows, int cols, const Vec& v)
{
    if (static_cast<int>(v.size()) != rows * cols)
        throw std::invalid_argument("matrix_of_vec: size mismatch");
    Matrix m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i)
            m(i, j) = v[static_cast<std::size_t>(j) * rows + i];
    return m;
}

Subspace derivation_space(const HomAction& act, const Matrix& s)
{
    const HomLieAlgebra& L = act.actor;
    const HomLieAlgebra& M = act.target;
    if (s.rows() != L.dim || s.cols() != L.dim)
        throw std::invalid_argument("derivation_space: s has wrong shape");
    const int m = M.dim, n = L.dim;
    const int unknowns = m * n;
    std::vector<Vec> rows;

    // d[e_i, e_j] = s(e_i).d(e_j) - s(e_j).d(e_i), for i < j.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec cij = L.bracket_basis(i, j);
            Vec si = s.col(i), sj = s.col(j);
            for (int r = 0; r < m; ++r) {
                Vec row(unknowns, Rat(0));
                for (int l = 0; l < n; ++l)
                    if (cij[l] != 0)
                        row[static_cast<std::size_t>(l) * m + r] += cij[l];
                for (int q = 0; q < m; ++q) {
                    Rat cj(0), ci(0);
                    for (int p = 0; p < n; ++p) {
                        if (si[p] != 0)
                            cj += si[p] * act.act(p, q, r);
                        if (sj[p] != 0)
                            ci += sj[p] * act.act(p, q, r);
                    }
                    row[static_cast<std::size_t>(j) * m + q] -= cj;
                    row[static_cast<std::size_t>(i) * m + q] += ci;
                }
                rows.push_back(row);
            }
        }

    // alpha_M ∘ d = d ∘ alpha_L.
    for (int jc = 0; jc < n; ++jc)
        for (int r = 0; r < m; ++r) {
            Vec row(unknowns, Rat(0));
            for (int q = 0; q < m; ++q)
                if (M.alpha(r, q) != 0)
                    row[static_cast<std::size_t>(jc) * m + q] += M.alpha(r, q);
            for (int l = 0; l < n; ++l)
                if (L.alpha(l, jc) != 0)
                    row[static_cast<std::size_t>(l) * m + r] -= L.alpha(l, jc);
            rows.push_back(row);
        }

    Matrix sys(static_cast<int>(rows.size()), unknowns);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < unknowns; ++j)
            sys(static_cast<int>(i), j) = rows[i][j];
    return kernel_basis(sys);
}

static Subspace fixed_vectors(const Matrix& alpha)
{
    return kernel_basis(alpha - Matrix::identity(alpha.rows()));
}

Subspace inner_alpha_derivations(const HomAction& act)
{
    const int m = act.target.dim, n = act.actor.dim;
    Subspace fix = fixed_vectors(act.target.alpha);
    std::vector<Vec> gens;
    for (int k = 0; k < fix.dim(); ++k) {
        Vec mv = fix.basis_vector(k);
        Matrix d(m, n);
        for (int j = 0; j < n; ++j)
            d.set_col(j, act.apply(act.actor.alpha.col(j), mv));
        gens.push_back(vec_of_matrix(d));
    }
    return Subspace::span(m * n, gens);
}

Subspace coboundary_derivations(const HomAction& act)
{
    const int m = act.target.dim, n = act.actor.dim;
    Subspace fix = fixed_vectors(act.target.alpha);
    std::vector<Vec> gens;
    for (int k = 0; k < fix.dim(); ++k) {
        Vec mv = fix.basis_vector(k);
        Matrix d(m, n);
        for (int j = 0; j < n; ++j) {
            Vec ej(n, Rat(0));
            ej[j] = 1;
            d.set_col(j, act.apply(ej, mv));
        }
        gens.push_back(vec_of_matrix(d));
    }
    return Subspace::span(m * n, gens);
}

}  // namespace homlie
