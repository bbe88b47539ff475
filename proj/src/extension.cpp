#include "homlie/extension.hpp"

namespace homlie {

namespace {

int pair_index(int n, int i, int j)
{
    // position of (i,j), i<j, in the lexicographic list of 2-tuples
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Vec cochain_pair_value(const Cochain& w, int n, int i, int j)
{
    if (i == j)
        return Vec(w.values.rows(), Rat(0));
    if (i < j)
        return w.values.col(pair_index(n, i, j));
    return vec_scale(Rat(-1), w.values.col(pair_index(n, j, i)));
}

Vec unit(int n, int k)
{
    Vec v(n, Rat(0));
    v[k] = 1;
    return v;
}

// Preimage under an injective matrix; nullopt if v is outside the image.
std::optional<Vec> preimage_vec(const Matrix& a, const Vec& v)
{
    return solve_affine(a, v);
}

}  // namespace

ExtensionReport validate_extension(const AbelianExtension& ext)
{
    ExtensionReport rep;
    const int m = ext.module_dim();
    rep.dims_ok = ext.i.rows() == ext.E.dim && ext.pi.cols() == ext.E.dim &&
                  ext.pi.rows() == ext.L.dim && ext.sigma.rows() == ext.E.dim &&
                  ext.sigma.cols() == ext.L.dim && ext.alpha_M.rows() == m &&
                  ext.alpha_M.cols() == m;
    if (!rep.dims_ok)
        return rep;
    rep.i_injective = rank(ext.i) == m;
    rep.i_equivariant = ext.i * ext.alpha_M == ext.E.alpha * ext.i;
    rep.kernel_abelian = true;
    for (int a = 0; a < m && rep.kernel_abelian; ++a)
        for (int b = 0; b < m; ++b)
            if (!vec_is_zero(ext.E.bracket(ext.i.col(a), ext.i.col(b)))) {
                rep.kernel_abelian = false;
                break;
            }
    rep.pi_surjective = rank(ext.pi) == ext.L.dim;
    rep.pi_morphism = check_hom_morphism(ext.pi, ext.E, ext.L);
    rep.exact = Subspace::span_columns(ext.i) == kernel_basis(ext.pi);
    rep.section_splits = ext.pi * ext.sigma == Matrix::identity(ext.L.dim);
    rep.section_equivariant = ext.sigma * ext.L.alpha == ext.E.alpha * ext.sigma;
    return rep;
}

ExtensionReport validate_extension(const AbelianExtension& ext, const HomAction& module,
                                   const Matrix& s)
{
    ExtensionReport rep = validate_extension(ext);
    if (!rep.dims_ok)
        return rep;
    rep.s_condition = true;
    for (int j = 0; j < ext.L.dim && rep.s_condition; ++j)
        for (int k = 0; k < ext.module_dim(); ++k) {
            Vec lhs = ext.E.bracket(ext.sigma.col(j), ext.i.col(k));
            Vec rhs = ext.i.apply(module.apply(s.col(j), unit(ext.module_dim(), k)));
            if (lhs != rhs) {
                rep.s_condition = false;
                break;
            }
        }
    return rep;
}

std::optional<Matrix> find_section(const Matrix& pi, const Matrix& alpha_X, const Matrix& alpha_Y)
{
    const int x = pi.cols(), y = pi.rows();
    if (rank(pi) != y)
        throw std::invalid_argument("find_section: pi is not surjective");
    // Unknown sigma: X x Y. Conditions pi*sigma = I and alpha_X*sigma = sigma*alpha_Y.
    const int unknowns = x * y;
    std::vector<Vec> rows;
    Vec rhs;
    for (int r = 0; r < y; ++r)
        for (int c = 0; c < y; ++c) {
            Vec row(unknowns, Rat(0));
            for (int q = 0; q < x; ++q)
                if (pi(r, q) != 0)
                    row[static_cast<std::size_t>(c) * x + q] = pi(r, q);
            rows.push_back(row);
            rhs.push_back(r == c ? Rat(1) : Rat(0));
        }
    for (int r = 0; r < x; ++r)
        for (int c = 0; c < y; ++c) {
            Vec row(unknowns, Rat(0));
            for (int q = 0; q < x; ++q)
                if (alpha_X(r, q) != 0)
                    row[static_cast<std::size_t>(c) * x + q] += alpha_X(r, q);
            for (int d = 0; d < y; ++d)
                if (alpha_Y(d, c) != 0)
                    row[static_cast<std::size_t>(d) * x + r] -= alpha_Y(d, c);
            rows.push_back(row);
            rhs.push_back(Rat(0));
        }
    Matrix sys(static_cast<int>(rows.size()), unknowns);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < unknowns; ++j)
            sys(static_cast<int>(i), j) = rows[i][j];
    auto sol = solve_affine(sys, rhs);
    if (!sol)
        return std::nullopt;
    return matrix_of_vec(x, y, *sol);
}

std::vector<Matrix> section_offsets(const AbelianExtension& ext)
{
    const int e = ext.E.dim, n = ext.L.dim;
    const int unknowns = e * n;
    std::vector<Vec> rows;
    for (int r = 0; r < ext.L.dim; ++r)
        for (int c = 0; c < n; ++c) {
            Vec row(unknowns, Rat(0));
            for (int q = 0; q < e; ++q)
                if (ext.pi(r, q) != 0)
                    row[static_cast<std::size_t>(c) * e + q] = ext.pi(r, q);
            rows.push_back(row);
        }
    for (int r = 0; r < e; ++r)
        for (int c = 0; c < n; ++c) {
            Vec row(unknowns, Rat(0));
            for (int q = 0; q < e; ++q)
                if (ext.E.alpha(r, q) != 0)
                    row[static_cast<std::size_t>(c) * e + q] += ext.E.alpha(r, q);
            for (int d = 0; d < n; ++d)
                if (ext.L.alpha(d, c) != 0)
                    row[static_cast<std::size_t>(d) * e + r] -= ext.L.alpha(d, c);
            rows.push_back(row);
        }
    Matrix sys(static_cast<int>(rows.size()), unknowns);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < unknowns; ++j)
            sys(static_cast<int>(i), j) = rows[i][j];
    Subspace ker = kernel_basis(sys);
    std::vector<Matrix> out;
    for (int k = 0; k < ker.dim(); ++k)
        out.push_back(matrix_of_vec(e, n, ker.basis_vector(k)));
    return out;
}

static HomAction induced_action(const AbelianExtension& ext, const Matrix& sigma)
{
    const int m = ext.module_dim();
    HomAction act;
    act.actor = ext.L;
    act.target = HomLieAlgebra::abelian(m, ext.alpha_M);
    act.act = Tensor3(ext.L.dim, m, m);
    for (int j = 0; j < ext.L.dim; ++j)
        for (int k = 0; k < m; ++k) {
            Vec br = ext.E.bracket(sigma.col(j), ext.i.col(k));
            auto pre = preimage_vec(ext.i, br);
            if (!pre)
                throw std::invalid_argument("action_from_extension: bracket leaves the kernel");
            act.act.set_at(j, k, *pre);
        }
    return act;
}

HomAction action_from_extension(const AbelianExtension& ext)
{
    return induced_action(ext, ext.sigma);
}

bool action_section_independent(const AbelianExtension& ext)
{
    HomAction base = action_from_extension(ext);
    for (const Matrix& off : section_offsets(ext)) {
        HomAction alt = induced_action(ext, ext.sigma + off);
        if (!(alt.act == base.act))
            return false;
    }
    return true;
}

AbelianExtension extension_from_cocycle(const HomAction& module, const Cochain& w)
{
    if (w.degree != 2)
        throw std::invalid_argument("extension_from_cocycle: cochain degree must be 2");
    if (!is_cocycle(module, w))
        throw std::invalid_argument(
            "extension_from_cocycle: w fails the 2-cocycle (Hom-Jacobi) condition");
    const HomLieAlgebra& L = module.actor;
    const int m = module.target.dim, n = L.dim, d = m + n;

    AbelianExtension ext;
    ext.L = L;
    ext.alpha_M = module.target.alpha;
    ext.E.dim = d;
    ext.E.alpha = Matrix::block_diag(module.target.alpha, L.alpha);
    ext.E.c = Tensor3(d, d, d);
    auto embed = [&](const Vec& mm, const Vec& ll) {
        Vec v(d, Rat(0));
        for (int a = 0; a < m; ++a)
            v[a] = mm[a];
        for (int a = 0; a < n; ++a)
            v[m + a] = ll[a];
        return v;
    };
    Vec zl(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            // [(0,e_i),(m_j,0)] = (alpha(e_i).m_j, 0)
            Vec v = embed(module.apply(L.alpha.col(i), unit(m, j)), zl);
            ext.E.c.set_at(m + i, j, v);
            ext.E.c.set_at(j, m + i, vec_scale(Rat(-1), v));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            ext.E.c.set_at(m + i, m + j,
                           embed(cochain_pair_value(w, n, i, j), L.bracket_basis(i, j)));

    ext.i = Matrix(d, m);
    for (int a = 0; a < m; ++a)
        ext.i(a, a) = 1;
    ext.pi = Matrix(n, d);
    for (int a = 0; a < n; ++a)
        ext.pi(a, m + a) = 1;
    ext.sigma = Matrix(d, n);
    for (int a = 0; a < n; ++a)
        ext.sigma(m + a, a) = 1;

    AlgebraReport check = validate_hom_lie(ext.E);
    if (!check.skew || !check.hom_jacobi || !check.multiplicative)
        throw std::logic_error("extension_from_cocycle: constructed algebra fails validation");
    return ext;
}

Cochain cocycle_from_extension(const AbelianExtension& ext)
{
    const int n = ext.L.dim;
    auto tuples = wedge_tuples(n, 2);
    Cochain w;
    w.degree = 2;
    w.values = Matrix(ext.module_dim(), static_cast<int>(tuples.size()));
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        int i = tuples[t][0], j = tuples[t][1];
        Vec br = vec_sub(ext.E.bracket(ext.sigma.col(i), ext.sigma.col(j)),
                         ext.sigma.apply(ext.L.bracket_basis(i, j)));
        auto pre = preimage_vec(ext.i, br);
        if (!pre)
            throw std::invalid_argument("cocycle_from_extension: defect leaves the kernel");
        w.values.set_col(static_cast<int>(t), *pre);
    }
    return w;
}

AbelianExtension trivial_s_extension(const HomAction& module, const Matrix& s)
{
    SemidirectProduct sp = semidirect(module, s);
    AbelianExtension ext;
    ext.E = sp.alg;
    ext.L = module.actor;
    ext.alpha_M = module.target.alpha;
    ext.i = sp.incl_target;
    ext.pi = sp.proj_actor;
    ext.sigma = sp.sect_actor;
    return ext;
}

std::optional<Equivalence> equivalent_extensions(const AbelianExtension& a,
                                                 const AbelianExtension& b,
                                                 const HomAction& module)
{
    Cochain wa = cocycle_from_extension(a);
    Cochain wb = cocycle_from_extension(b);
    auto theta = cohomologous(module, wa, wb);
    if (!theta)
        return std::nullopt;
    const int m = a.module_dim(), n = a.L.dim;
    // Normal-form map (m,l) -> (m + theta(l), l), transported to E_a -> E_b
    // along (m,l) -> i(m) + sigma(l).
    Matrix shear = Matrix::identity(m + n);
    for (int j = 0; j < n; ++j)
        for (int r = 0; r < m; ++r)
            shear(r, m + j) = theta->values(r, j);
    Matrix psi_a = Matrix::hstack(a.i, a.sigma);
    Matrix psi_b = Matrix::hstack(b.i, b.sigma);
    auto inv_a = solve_matrix(psi_a, Matrix::identity(a.E.dim));
    if (!inv_a)
        throw std::invalid_argument("equivalent_extensions: extension is not exact");
    Equivalence eq;
    eq.phi = psi_b * shear * (*inv_a);
    eq.theta = *theta;
    return eq;
}

AbelianExtension backward_induced(const AbelianExtension& ext, const Matrix& gamma,
                                  const HomLieAlgebra& Lp)
{
    if (gamma.rows() != ext.L.dim || gamma.cols() != Lp.dim)
        throw std::invalid_argument("backward_induced: gamma shape mismatch");
    if (!check_hom_morphism(gamma, Lp, ext.L))
        throw std::invalid_argument("backward_induced: gamma is not a morphism");
    HomLieAlgebra D = direct_product(ext.E, Lp);
    // E_gamma = {(e, l') : pi e = gamma l'}
    Matrix cond = Matrix::hstack(ext.pi, Rat(-1) * gamma);
    Subspace K = kernel_basis(cond);
    HomLieAlgebra Eg = subalgebra_on(D, K);

    auto embed = [&](const Vec& e, const Vec& l) {
        Vec v(ext.E.dim + Lp.dim, Rat(0));
        for (int a = 0; a < ext.E.dim; ++a)
            v[a] = e[a];
        for (int a = 0; a < Lp.dim; ++a)
            v[ext.E.dim + a] = l[a];
        return v;
    };

    AbelianExtension out;
    out.E = Eg;
    out.L = Lp;
    out.alpha_M = ext.alpha_M;
    out.i = Matrix(Eg.dim, ext.module_dim());
    for (int k = 0; k < ext.module_dim(); ++k) {
        auto coords = K.coordinates(embed(ext.i.col(k), Vec(Lp.dim, Rat(0))));
        if (!coords)
            throw std::logic_error("backward_induced: kernel does not embed");
        out.i.set_col(k, *coords);
    }
    out.pi = Matrix(Lp.dim, Eg.dim);
    for (int j = 0; j < Eg.dim; ++j) {
        Vec amb = K.basis_vector(j);
        for (int r = 0; r < Lp.dim; ++r)
            out.pi(r, j) = amb[ext.E.dim + r];
    }
    out.sigma = Matrix(Eg.dim, Lp.dim);
    for (int j = 0; j < Lp.dim; ++j) {
        auto coords = K.coordinates(embed(ext.sigma.apply(gamma.col(j)), unit(Lp.dim, j)));
        if (!coords)
            throw std::logic_error("backward_induced: section does not land in the pullback");
        out.sigma.set_col(j, *coords);
    }
    return out;
}

AbelianExtension backward_induced(const AbelianExtension& ext, const Matrix& gamma,
                                  const HomLieAlgebra& Lp, const Matrix& s,
                                  const Matrix& s_prime)
{
    if (!(gamma * s_prime == s * gamma))
        throw std::invalid_argument("backward_induced: gamma∘s' != s∘gamma");
    return backward_induced(ext, gamma, Lp);
}

std::optional<Matrix> splitting_through(const AbelianExtension& ext, const HomAction& module,
                                        const Matrix& s, const Matrix& gamma,
                                        const HomLieAlgebra& Lp)
{
    const int m = ext.module_dim(), np = Lp.dim;
    Cochain w = cocycle_from_extension(ext);
    // psi = i∘u + sigma∘gamma is a morphism iff
    //   u[x,y] - s(gx).u(y) + s(gy).u(x) = w(gx, gy) and u∘alpha_Lp = alpha_M∘u.
    const int unknowns = m * np;
    std::vector<Vec> rows;
    Vec rhs;
    for (int i = 0; i < np; ++i)
        for (int j = i + 1; j < np; ++j) {
            Vec cij = Lp.bracket_basis(i, j);
            Vec sgi = s.apply(gamma.col(i)), sgj = s.apply(gamma.col(j));
            Matrix args(ext.L.dim, 2);
            args.set_col(0, gamma.col(i));
            args.set_col(1, gamma.col(j));
            Vec wg = eval_cochain(w, args);
            for (int r = 0; r < m; ++r) {
                Vec row(unknowns, Rat(0));
                for (int l = 0; l < np; ++l)
                    if (cij[l] != 0)
                        row[static_cast<std::size_t>(l) * m + r] += cij[l];
                for (int q = 0; q < m; ++q) {
                    Rat cj(0), ci(0);
                    for (int p = 0; p < ext.L.dim; ++p) {
                        if (sgi[p] != 0)
                            cj += sgi[p] * module.act(p, q, r);
                        if (sgj[p] != 0)
                            ci += sgj[p] * module.act(p, q, r);
                    }
                    row[static_cast<std::size_t>(j) * m + q] -= cj;
                    row[static_cast<std::size_t>(i) * m + q] += ci;
                }
                rows.push_back(row);
                rhs.push_back(wg[r]);
            }
        }
    for (int jc = 0; jc < np; ++jc)
        for (int r = 0; r < m; ++r) {
            Vec row(unknowns, Rat(0));
            for (int q = 0; q < m; ++q)
                if (ext.alpha_M(r, q) != 0)
                    row[static_cast<std::size_t>(jc) * m + q] += ext.alpha_M(r, q);
            for (int l = 0; l < np; ++l)
                if (Lp.alpha(l, jc) != 0)
                    row[static_cast<std::size_t>(l) * m + r] -= Lp.alpha(l, jc);
            rows.push_back(row);
            rhs.push_back(Rat(0));
        }
    Matrix sys(static_cast<int>(rows.size()), unknowns);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < unknowns; ++j)
            sys(static_cast<int>(i), j) = rows[i][j];
    auto sol = solve_affine(sys, rhs);
    if (!sol)
        return std::nullopt;
    Matrix u = matrix_of_vec(m, np, *sol);
    Matrix psi = ext.i * u + ext.sigma * gamma;
    if (!check_hom_morphism(psi, Lp, ext.E) || !(ext.pi * psi == gamma))
        throw std::logic_error("splitting_through: candidate failed verification");
    return psi;
}

AbelianExtension forward_induced(const AbelianExtension& ext, const Matrix& delta,
                                 const HomAction& module_prime, const Matrix& s,
                                 const Matrix& s_prime)
{
    const int m = ext.module_dim();
    const int mp = module_prime.target.dim;
    if (delta.rows() != mp || delta.cols() != m)
        throw std::invalid_argument("forward_induced: delta shape mismatch");
    if (!(ext.pi * s_prime == s * ext.pi))
        throw std::invalid_argument("forward_induced: pi∘s' != s∘pi");
    HomAction e_on_mp = pullback_action(module_prime, ext.pi, ext.E);
    SemidirectProduct sp = semidirect(e_on_mp, s_prime);

    std::vector<Vec> tgen;
    for (int k = 0; k < m; ++k) {
        Vec v(mp + ext.E.dim, Rat(0));
        Vec dm = delta.col(k);
        Vec im = ext.i.col(k);
        for (int a = 0; a < mp; ++a)
            v[a] = dm[a];
        for (int a = 0; a < ext.E.dim; ++a)
            v[mp + a] = -im[a];
        tgen.push_back(v);
    }
    Subspace T = Subspace::span(mp + ext.E.dim, tgen);
    if (!is_ideal(sp.alg, T))
        throw std::invalid_argument("forward_induced: T is not an ideal (precondition violated)");
    QuotientAlgebra q = quotient_algebra(sp.alg, T);

    AbelianExtension out;
    out.E = q.algebra;
    out.L = ext.L;
    out.alpha_M = module_prime.target.alpha;
    out.i = q.projection * sp.incl_target;
    // pi'' (class of (m', e)) = pi(e); well defined since pi kills i(M).
    Matrix proj_E(ext.E.dim, mp + ext.E.dim);
    for (int a = 0; a < ext.E.dim; ++a)
        proj_E(a, mp + a) = 1;
    out.pi = ext.pi * proj_E * q.section;
    Matrix incl_E = proj_E.transpose();
    out.sigma = q.projection * incl_E * ext.sigma;
    return out;
}

std::optional<Matrix> forward_splitting(const AbelianExtension& ext,
                                        const HomAction& module_prime, const Matrix& delta,
                                        const Matrix& s_prime)
{
    HomAction e_on_mp = pullback_action(module_prime, ext.pi, ext.E);
    // psi' in Der_{s'}(E, M') with psi'∘i = delta: intersect the derivation
    // space with the affine constraint.
    Subspace der = derivation_space(e_on_mp, s_prime);
    const int mp = module_prime.target.dim, e = ext.E.dim, m = ext.module_dim();
    // Write psi' = sum c_k D_k and solve the linear system psi'∘i = delta.
    Matrix sys(mp * m, der.dim());
    Vec rhs(static_cast<std::size_t>(mp) * m);
    for (int k = 0; k < der.dim(); ++k) {
        Matrix dk = matrix_of_vec(mp, e, der.basis_vector(k));
        Matrix dki = dk * ext.i;
        Vec v = vec_of_matrix(dki);
        for (int r = 0; r < mp * m; ++r)
            sys(r, k) = v[r];
    }
    Vec target = vec_of_matrix(delta);
    for (int r = 0; r < mp * m; ++r)
        rhs[r] = target[r];
    auto sol = solve_affine(sys, rhs);
    if (!sol)
        return std::nullopt;
    Matrix psi(mp, e);
    for (int k = 0; k < der.dim(); ++k)
        if ((*sol)[k] != 0)
            psi = psi + (*sol)[k] * matrix_of_vec(mp, e, der.basis_vector(k));
    return psi;
}

HomLieAlgebra direct_product(const HomLieAlgebra& a, const HomLieAlgebra& b)
{
    HomLieAlgebra d;
    d.dim = a.dim + b.dim;
    d.alpha = Matrix::block_diag(a.alpha, b.alpha);
    d.c = Tensor3(d.dim, d.dim, d.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            Vec v = a.bracket_basis(i, j);
            Vec w(d.dim, Rat(0));
            for (int k = 0; k < a.dim; ++k)
                w[k] = v[k];
            d.c.set_at(i, j, w);
        }
    for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < b.dim; ++j) {
            Vec v = b.bracket_basis(i, j);
            Vec w(d.dim, Rat(0));
            for (int k = 0; k < b.dim; ++k)
                w[a.dim + k] = v[k];
            d.c.set_at(a.dim + i, a.dim + j, w);
        }
    return d;
}

static AbelianExtension direct_sum_extension(const AbelianExtension& a, const AbelianExtension& b)
{
    AbelianExtension out;
    out.E = direct_product(a.E, b.E);
    out.L = direct_product(a.L, b.L);
    out.alpha_M = Matrix::block_diag(a.alpha_M, b.alpha_M);
    Matrix za(a.E.dim, b.module_dim());
    Matrix zb(b.E.dim, a.module_dim());
    out.i = Matrix::vstack(Matrix::hstack(a.i, za), Matrix::hstack(zb, b.i));
    out.pi = Matrix::block_diag(a.pi, b.pi);
    out.sigma = Matrix::block_diag(a.sigma, b.sigma);
    return out;
}

AbelianExtension baer_sum_categorical(const AbelianExtension& a, const AbelianExtension& b,
                                      const HomAction& module)
{
    AbelianExtension sum = direct_sum_extension(a, b);
    const int n = a.L.dim, m = a.module_dim();
    Matrix diag = Matrix::vstack(Matrix::identity(n), Matrix::identity(n));
    AbelianExtension pulled = backward_induced(sum, diag, a.L);
    // Codiagonal M (+) M -> M; push forward with s' = the twist of the
    // pulled-back middle algebra (compatible since pi is a morphism).
    Matrix nabla = Matrix::hstack(Matrix::identity(m), Matrix::identity(m));
    return forward_induced(pulled, nabla, module, a.L.alpha, pulled.E.alpha);
}

AbelianExtension baer_scalar_categorical(const AbelianExtension& a, const Rat& k,
                                         const HomAction& module)
{
    Matrix km = k * Matrix::identity(a.module_dim());
    return forward_induced(a, km, module, a.L.alpha, a.E.alpha);
}

Cochain baer_sum_cocycle(const Cochain& wa, const Cochain& wb)
{
    Cochain w;
    w.degree = 2;
    w.values = wa.values + wb.values;
    return w;
}

Cochain baer_scalar_cocycle(const Cochain& w, const Rat& k)
{
    Cochain out;
    out.degree = 2;
    out.values = k * w.values;
    return out;
}

FiveTermReport five_term_report(const HomLieAlgebra& N, const HomLieAlgebra& E,
                                const HomLieAlgebra& L, const Matrix& xi, const Matrix& pi,
                                const Matrix& sigma, const HomAction& A_module)
{
    FiveTermReport rep;
    // Input sequence sanity.
    rep.input_valid = rank(xi) == N.dim && rank(pi) == L.dim &&
                      Subspace::span_columns(xi) == kernel_basis(pi) &&
                      check_hom_morphism(xi, N, E) && check_hom_morphism(pi, E, L) &&
                      pi * sigma == Matrix::identity(L.dim) &&
                      sigma * L.alpha == E.alpha * sigma;
    if (!rep.input_valid)
        return rep;

    const int a = A_module.target.dim;

    Subspace der_L = derivation_space(A_module, L.alpha);
    HomAction actE = pullback_action(A_module, pi, E);
    Subspace der_E = derivation_space(actE, E.alpha);
    rep.dim_der_L = der_L.dim();
    rep.dim_der_E = der_E.dim();

    // Der(pi): d -> d∘pi, written in the canonical derivation bases.
    Matrix DP(der_E.dim(), der_L.dim());
    for (int k = 0; k < der_L.dim(); ++k) {
        Matrix d = matrix_of_vec(a, L.dim, der_L.basis_vector(k));
        auto coords = der_E.coordinates(vec_of_matrix(d * pi));
        if (!coords)
            throw std::logic_error("five_term_report: d∘pi is not an E-derivation");
        DP.set_col(k, *coords);
    }
    rep.der_pi_injective = kernel_basis(DP).dim() == 0;

    // ab(E): quotient by the ideal generated by the brackets of xi(N).
    std::vector<Vec> brackets;
    for (int i = 0; i < N.dim; ++i)
        for (int j = 0; j < N.dim; ++j)
            brackets.push_back(E.bracket(xi.col(i), xi.col(j)));
    Subspace K = ideal_closure(E, Subspace::span(E.dim, brackets));
    QuotientAlgebra Ebar = quotient_algebra(E, K);
    Matrix proj_xi = Ebar.projection * xi;
    Subspace Nab = Subspace::span_columns(proj_xi);
    const int r = Nab.dim();
    rep.dim_hom_nab = 0;

    Matrix sigma_bar = Ebar.projection * sigma;

    // Conjugation action of L on N^ab and its twist.
    Matrix alpha_nab(r, r);
    for (int j = 0; j < r; ++j) {
        auto c = Nab.coordinates(Ebar.algebra.alpha.apply(Nab.basis_vector(j)));
        if (!c)
            throw std::logic_error("five_term_report: N^ab not twist-invariant");
        alpha_nab.set_col(j, *c);
    }
    Tensor3 conj(L.dim, r, r);
    for (int i = 0; i < L.dim; ++i)
        for (int j = 0; j < r; ++j) {
            auto c = Nab.coordinates(Ebar.algebra.bracket(sigma_bar.col(i), Nab.basis_vector(j)));
            if (!c)
                throw std::logic_error("five_term_report: conjugation leaves N^ab");
            conj.set_at(i, j, *c);
        }

    // Hom(N^ab, A): f∘alpha_nab = alpha_A∘f and f(x.n) = alpha_L(x).f(n).
    {
        const int unknowns = a * r;
        std::vector<Vec> rows;
        for (int jc = 0; jc < r; ++jc)
            for (int rr = 0; rr < a; ++rr) {
                Vec row(unknowns, Rat(0));
                for (int q = 0; q < a; ++q)
                    if (A_module.target.alpha(rr, q) != 0)
                        row[static_cast<std::size_t>(jc) * a + q] += A_module.target.alpha(rr, q);
                for (int l = 0; l < r; ++l)
                    if (alpha_nab(l, jc) != 0)
                        row[static_cast<std::size_t>(l) * a + rr] -= alpha_nab(l, jc);
                rows.push_back(row);
            }
        for (int i = 0; i < L.dim; ++i)
            for (int j = 0; j < r; ++j) {
                Vec xn = conj.at(i, j);
                Vec al = L.alpha.col(i);
                for (int rr = 0; rr < a; ++rr) {
                    Vec row(unknowns, Rat(0));
                    for (int l = 0; l < r; ++l)
                        if (xn[l] != 0)
                            row[static_cast<std::size_t>(l) * a + rr] += xn[l];
                    for (int q = 0; q < a; ++q) {
                        Rat coef(0);
                        for (int p = 0; p < L.dim; ++p)
                            if (al[p] != 0)
                                coef += al[p] * A_module.act(p, q, rr);
                        row[static_cast<std::size_t>(j) * a + q] -= coef;
                    }
                    rows.push_back(row);
                }
            }
        Matrix sys(static_cast<int>(rows.size()), unknowns);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < unknowns; ++j)
                sys(static_cast<int>(i), j) = rows[i][j];
        Subspace homs = kernel_basis(sys);
        rep.dim_hom_nab = homs.dim();

        // zeta(d) = d restricted to xi(N), pushed through N -> N^ab.
        // Representatives of the N^ab basis inside xi(N): solve
        // (proj∘xi) u = basis vector.
        Matrix reps(N.dim, r);
        for (int j = 0; j < r; ++j) {
            auto u = solve_affine(proj_xi, Nab.basis_vector(j));
            if (!u)
                throw std::logic_error("five_term_report: N^ab representative missing");
            reps.set_col(j, *u);
        }
        Matrix Z(homs.dim(), der_E.dim());
        for (int k = 0; k < der_E.dim(); ++k) {
            Matrix d = matrix_of_vec(a, E.dim, der_E.basis_vector(k));
            Matrix f = d * xi * reps;  // a x r
            auto coords = homs.coordinates(vec_of_matrix(f));
            if (!coords)
                throw std::logic_error("five_term_report: zeta image leaves Hom(N^ab, A)");
            Z.set_col(k, *coords);
        }
        rep.exact_at_der_E = kernel_basis(Z) == Subspace::span_columns(DP);

        // Conjugation 2-cochain of ab(E), with values in N^ab.
        auto tuples = wedge_tuples(L.dim, 2);
        Matrix wbar(r, static_cast<int>(tuples.size()));
        for (std::size_t t = 0; t < tuples.size(); ++t) {
            int i = tuples[t][0], j = tuples[t][1];
            Vec v = vec_sub(Ebar.algebra.bracket(sigma_bar.col(i), sigma_bar.col(j)),
                            sigma_bar.apply(L.bracket_basis(i, j)));
            auto c = Nab.coordinates(v);
            if (!c)
                throw std::logic_error("five_term_report: section defect leaves N^ab");
            wbar.set_col(static_cast<int>(t), *c);
        }

        // theta*: f -> class of f∘wbar in H^2_a(L, A).
        CochainSpace c2L = cochain_basis(A_module, 2);
        CohomologyGroup h2L = cohomology_group(A_module, 2);
        rep.dim_h2_L = h2L.dim;
        Matrix Theta(c2L.dim(), homs.dim());
        for (int k = 0; k < homs.dim(); ++k) {
            Matrix f = matrix_of_vec(a, r, homs.basis_vector(k));
            Cochain fw;
            fw.degree = 2;
            fw.values = f * wbar;
            auto coords = c2L.coords(fw);
            if (!coords)
                throw std::logic_error("five_term_report: theta* image not equivariant");
            if (!is_cocycle(A_module, fw))
                throw std::logic_error("five_term_report: theta* image not a cocycle");
            Theta.set_col(k, *coords);
        }
        // ker(theta* into H^2) = {f : Theta f is a coboundary}.
        QuotientSpace modB2L(h2L.coboundaries);
        Subspace ker_theta = kernel_basis(modB2L.proj() * Theta);
        Subspace im_zeta = Subspace::span_columns(Z);
        rep.exact_at_hom = ker_theta == im_zeta;

        // pi*: precomposition of 2-cochains with pi ^ pi.
        CochainSpace c2E = cochain_basis(actE, 2);
        CohomologyGroup h2E = cohomology_group(actE, 2);
        rep.dim_h2_E = h2E.dim;
        auto tuplesE = wedge_tuples(E.dim, 2);
        Matrix P2(c2E.dim(), c2L.dim());
        for (int k = 0; k < c2L.dim(); ++k) {
            Vec unitv(c2L.dim(), Rat(0));
            unitv[k] = 1;
            Cochain wl = c2L.member(unitv);
            Cochain we;
            we.degree = 2;
            we.values = Matrix(a, static_cast<int>(tuplesE.size()));
            for (std::size_t t = 0; t < tuplesE.size(); ++t) {
                Matrix args(L.dim, 2);
                args.set_col(0, pi.col(tuplesE[t][0]));
                args.set_col(1, pi.col(tuplesE[t][1]));
                we.values.set_col(static_cast<int>(t), eval_cochain(wl, args));
            }
            auto coords = c2E.coords(we);
            if (!coords)
                throw std::logic_error("five_term_report: pi* image not equivariant");
            P2.set_col(k, *coords);
        }
        // Exactness at H^2(L, A): {z in Z^2 : pi* z in B^2(E)} = span(Theta) + B^2(L).
        Subspace ker_pi_star = h2L.cocycles.intersect(h2E.coboundaries.preimage(P2));
        Subspace im_theta = Subspace::span_columns(Theta).sum(h2L.coboundaries);
        rep.exact_at_h2 = ker_pi_star == im_theta;
    }
    return rep;
}

}  // namespace homlie
