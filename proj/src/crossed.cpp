#include "homlie/crossed.hpp"

namespace homlie {

namespace {

Vec unit(int n, int k)
{
    Vec v(n, Rat(0));
    v[k] = 1;
    return v;
}

// Basis of {d : alpha_tgt∘d = d∘alpha_src and killer∘d = 0}, maps written as
// tgt_dim x src_dim matrices with src twist alpha_src.
std::vector<Matrix> equivariant_maps_killed_by(const Matrix& alpha_src, const Matrix& alpha_tgt,
                                               const Matrix& killer)
{
    const int src = alpha_src.cols(), tgt = alpha_tgt.rows();
    const int unknowns = tgt * src;
    std::vector<Vec> rows;
    for (int r = 0; r < killer.rows(); ++r)
        for (int c = 0; c < src; ++c) {
            Vec row(unknowns, Rat(0));
            for (int q = 0; q < tgt; ++q)
                if (killer(r, q) != 0)
                    row[static_cast<std::size_t>(c) * tgt + q] = killer(r, q);
            rows.push_back(row);
        }
    for (int r = 0; r < tgt; ++r)
        for (int c = 0; c < src; ++c) {
            Vec row(unknowns, Rat(0));
            for (int q = 0; q < tgt; ++q)
                if (alpha_tgt(r, q) != 0)
                    row[static_cast<std::size_t>(c) * tgt + q] += alpha_tgt(r, q);
            for (int d = 0; d < src; ++d)
                if (alpha_src(d, c) != 0)
                    row[static_cast<std::size_t>(d) * tgt + r] -= alpha_src(d, c);
            rows.push_back(row);
        }
    Matrix sys(static_cast<int>(rows.size()), unknowns);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < unknowns; ++j)
            sys(static_cast<int>(i), j) = rows[i][j];
    Subspace ker = kernel_basis(sys);
    std::vector<Matrix> out;
    for (int k = 0; k < ker.dim(); ++k)
        out.push_back(matrix_of_vec(tgt, src, ker.basis_vector(k)));
    return out;
}

}  // namespace

CrossedReport validate_crossed(const CrossedModuleData& cm, CrossedFlavor flavor)
{
    CrossedReport rep;
    rep.action = validate_action(cm.action);
    if (!rep.action.valid())
        throw std::invalid_argument("validate_crossed: the action fails the Hom-action axioms");
    const HomLieAlgebra& M = cm.M();
    const HomLieAlgebra& L = cm.L();
    if (cm.mu.rows() != L.dim || cm.mu.cols() != M.dim)
        throw std::invalid_argument("validate_crossed: mu shape mismatch");

    rep.mu_morphism = check_hom_morphism(cm.mu, M, L);

    rep.equivariance = true;
    for (int i = 0; i < L.dim && rep.equivariance; ++i)
        for (int j = 0; j < M.dim; ++j) {
            Vec l = flavor == CrossedFlavor::alpha ? L.alpha.col(i) : unit(L.dim, i);
            Vec lhs = cm.mu.apply(cm.action.apply(l, unit(M.dim, j)));
            Vec rhs = L.bracket(unit(L.dim, i), cm.mu.col(j));
            if (lhs != rhs) {
                rep.equivariance = false;
                break;
            }
        }

    rep.peiffer = true;
    for (int j = 0; j < M.dim && rep.peiffer; ++j)
        for (int k = 0; k < M.dim; ++k) {
            Vec m = flavor == CrossedFlavor::alpha ? M.alpha.col(j) : unit(M.dim, j);
            Vec lhs = cm.action.apply(cm.mu.apply(m), unit(M.dim, k));
            Vec rhs = M.bracket_basis(j, k);
            if (lhs != rhs) {
                rep.peiffer = false;
                break;
            }
        }

    // Derived structure.
    Subspace image = Subspace::span_columns(cm.mu);
    rep.image_is_ideal = is_ideal(L, image);
    Subspace kernel = kernel_basis(cm.mu);
    rep.kernel_central = centre(M).contains(kernel);

    rep.coker_module = false;
    if (rep.image_is_ideal && rep.kernel_central) {
        // ker mu must be closed under the action, killed by im mu, and the
        // induced coker(mu)-action must satisfy the module axioms.
        bool closed = true;
        for (int i = 0; i < L.dim && closed; ++i)
            for (int k = 0; k < kernel.dim(); ++k)
                if (!kernel.contains(cm.action.apply(unit(L.dim, i), kernel.basis_vector(k)))) {
                    closed = false;
                    break;
                }
        bool killed = true;
        for (int u = 0; u < image.dim() && killed; ++u)
            for (int k = 0; k < kernel.dim(); ++k)
                if (!vec_is_zero(cm.action.apply(image.basis_vector(u), kernel.basis_vector(k)))) {
                    killed = false;
                    break;
                }
        if (closed && killed) {
            QuotientAlgebra coker = quotient_algebra(L, image);
            HomAction induced;
            induced.actor = coker.algebra;
            induced.target = HomLieAlgebra::abelian(
                kernel.dim(), [&] {
                    Matrix am(kernel.dim(), kernel.dim());
                    for (int k = 0; k < kernel.dim(); ++k) {
                        auto c = kernel.coordinates(M.alpha.apply(kernel.basis_vector(k)));
                        if (!c)
                            return Matrix(kernel.dim(), kernel.dim());
                        am.set_col(k, *c);
                    }
                    return am;
                }());
            induced.act = Tensor3(coker.algebra.dim, kernel.dim(), kernel.dim());
            bool ok = true;
            for (int i = 0; i < coker.algebra.dim && ok; ++i)
                for (int k = 0; k < kernel.dim(); ++k) {
                    auto c = kernel.coordinates(
                        cm.action.apply(coker.section.col(i), kernel.basis_vector(k)));
                    if (!c) {
                        ok = false;
                        break;
                    }
                    induced.act.set_at(i, k, *c);
                }
            rep.coker_module = ok && validate_action(induced).is_module();
        }
    }
    return rep;
}

bool validate_crossed_via_semidirect(const CrossedModuleData& cm)
{
    const HomLieAlgebra& M = cm.M();
    const HomLieAlgebra& L = cm.L();
    SemidirectProduct ml = semidirect(cm.action);
    SemidirectProduct ll = semidirect(adjoint_action(L, false));
    SemidirectProduct mm = semidirect(pullback_action(cm.action, cm.mu, M));

    // (mu, 1): M x| L -> L x| L.
    Matrix mu1(2 * L.dim, M.dim + L.dim);
    for (int r = 0; r < L.dim; ++r)
        for (int c = 0; c < M.dim; ++c)
            mu1(r, c) = cm.mu(r, c);
    for (int r = 0; r < L.dim; ++r)
        mu1(L.dim + r, M.dim + r) = 1;

    // (1, mu): M x| M -> M x| L.
    Matrix one_mu(M.dim + L.dim, 2 * M.dim);
    for (int r = 0; r < M.dim; ++r)
        one_mu(r, r) = 1;
    for (int r = 0; r < L.dim; ++r)
        for (int c = 0; c < M.dim; ++c)
            one_mu(M.dim + r, M.dim + c) = cm.mu(r, c);

    return check_hom_morphism(mu1, ml.alg, ll.alg) && check_hom_morphism(one_mu, mm.alg, ml.alg);
}

Cat1Report validate_cat1(const Cat1Data& c)
{
    Cat1Report rep;
    try {
        subalgebra_on(c.P, c.N);
        rep.n_subalgebra = true;
    } catch (const std::invalid_argument&) {
        rep.n_subalgebra = false;
    }
    rep.s_morphism = check_hom_morphism(c.s, c.P, c.P);
    rep.t_morphism = check_hom_morphism(c.t, c.P, c.P);
    rep.maps_into_n =
        c.N.contains(Subspace::span_columns(c.s)) && c.N.contains(Subspace::span_columns(c.t));
    rep.fixes_n = true;
    for (int j = 0; j < c.N.dim(); ++j) {
        Vec b = c.N.basis_vector(j);
        if (c.s.apply(b) != b || c.t.apply(b) != b) {
            rep.fixes_n = false;
            break;
        }
    }
    Subspace ker_s = kernel_basis(c.s);
    Subspace ker_t = kernel_basis(c.t);
    rep.kernels_commute = true;
    for (int i = 0; i < ker_s.dim() && rep.kernels_commute; ++i)
        for (int j = 0; j < ker_t.dim(); ++j)
            if (!vec_is_zero(c.P.bracket(ker_s.basis_vector(i), ker_t.basis_vector(j)))) {
                rep.kernels_commute = false;
                break;
            }
    return rep;
}

CrossedModuleData functor_P(const Cat1Data& c)
{
    Cat1Report rep = validate_cat1(c);
    if (!rep.valid())
        throw std::invalid_argument("functor_P: input is not a cat1 object");
    Subspace ker_s = kernel_basis(c.s);
    HomLieAlgebra Mker = subalgebra_on(c.P, ker_s);
    HomLieAlgebra Nalg = subalgebra_on(c.P, c.N);

    CrossedModuleData cm;
    cm.action.actor = Nalg;
    cm.action.target = Mker;
    cm.action.act = Tensor3(Nalg.dim, Mker.dim, Mker.dim);
    for (int i = 0; i < Nalg.dim; ++i)
        for (int j = 0; j < Mker.dim; ++j) {
            auto coords =
                ker_s.coordinates(c.P.bracket(c.N.basis_vector(i), ker_s.basis_vector(j)));
            if (!coords)
                throw std::logic_error("functor_P: bracket action leaves ker s");
            cm.action.act.set_at(i, j, *coords);
        }
    cm.mu = Matrix(Nalg.dim, Mker.dim);
    for (int j = 0; j < Mker.dim; ++j) {
        auto coords = c.N.coordinates(c.t.apply(ker_s.basis_vector(j)));
        if (!coords)
            throw std::logic_error("functor_P: t does not map into N");
        cm.mu.set_col(j, *coords);
    }
    return cm;
}

Cat1Data functor_S(const CrossedModuleData& cm)
{
    const int m = cm.M().dim, n = cm.L().dim;
    SemidirectProduct sp = semidirect(cm.action);
    Cat1Data c;
    c.P = sp.alg;
    c.N = Subspace::span_columns(sp.sect_actor);
    c.s = sp.sect_actor * sp.proj_actor;
    Matrix proj_m(m, m + n);
    for (int a = 0; a < m; ++a)
        proj_m(a, a) = 1;
    c.t = sp.sect_actor * (cm.mu * proj_m + sp.proj_actor);
    return c;
}

bool check_crossed_morphism(const Matrix& f, const Matrix& phi, const CrossedModuleData& cm,
                            const CrossedModuleData& cmp)
{
    if (!check_hom_morphism(f, cm.M(), cmp.M()) || !check_hom_morphism(phi, cm.L(), cmp.L()))
        return false;
    if (!(phi * cm.mu == cmp.mu * f))
        return false;
    for (int i = 0; i < cm.L().dim; ++i)
        for (int j = 0; j < cm.M().dim; ++j) {
            Vec lhs = f.apply(cm.action.apply(unit(cm.L().dim, i), unit(cm.M().dim, j)));
            Vec rhs = cmp.action.apply(phi.col(i), f.col(j));
            if (lhs != rhs)
                return false;
        }
    return true;
}

bool check_cat1_morphism(const Matrix& F, const Cat1Data& a, const Cat1Data& b)
{
    if (!check_hom_morphism(F, a.P, b.P))
        return false;
    if (!b.N.contains(a.N.image_under(F)))
        return false;
    return b.s * F == F * a.s && b.t * F == F * a.t;
}

std::optional<CrossedIso> find_crossed_isomorphism(const CrossedModuleData& cm,
                                                   const CrossedModuleData& cmp,
                                                   const std::vector<CrossedIso>& seeds)
{
    const int m = cm.M().dim, n = cm.L().dim;
    if (cmp.M().dim != m || cmp.L().dim != n)
        return std::nullopt;
    auto good = [&](const CrossedIso& cand) {
        return rank(cand.f) == m && rank(cand.phi) == n &&
               check_crossed_morphism(cand.f, cand.phi, cm, cmp);
    };
    for (const CrossedIso& s : seeds)
        if (good(s))
            return s;

    // Linear part of the morphism constraints: phi∘mu = mu'∘f plus the two
    // twist-intertwining conditions. Unknowns: f (m x m) then phi (n x n).
    const int uf = m * m, up = n * n, unknowns = uf + up;
    std::vector<Vec> rows;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < m; ++c) {
            Vec row(unknowns, Rat(0));
            for (int q = 0; q < n; ++q)
                if (cm.mu(q, c) != 0)
                    row[uf + static_cast<std::size_t>(q) * n + r] += cm.mu(q, c);
            for (int q = 0; q < m; ++q)
                if (cmp.mu(r, q) != 0)
                    row[static_cast<std::size_t>(c) * m + q] -= cmp.mu(r, q);
            rows.push_back(row);
        }
    auto add_intertwine = [&rows](const Matrix& asrc, const Matrix& atgt, int dim, int offset) {
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) {
                Vec row;
                row.resize(rows.empty() ? 0 : rows[0].size(), Rat(0));
                for (int q = 0; q < dim; ++q) {
                    if (atgt(r, q) != 0)
                        row[offset + static_cast<std::size_t>(c) * dim + q] += atgt(r, q);
                    if (asrc(q, c) != 0)
                        row[offset + static_cast<std::size_t>(q) * dim + r] -= asrc(q, c);
                }
                rows.push_back(row);
            }
    };
    add_intertwine(cm.M().alpha, cmp.M().alpha, m, 0);
    add_intertwine(cm.L().alpha, cmp.L().alpha, n, uf);

    Matrix sys(static_cast<int>(rows.size()), unknowns);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < unknowns; ++j)
            sys(static_cast<int>(i), j) = rows[i][j];
    Subspace sol = kernel_basis(sys);

    auto candidate_of = [&](const Vec& v) {
        CrossedIso c;
        c.f = matrix_of_vec(m, m, Vec(v.begin(), v.begin() + uf));
        c.phi = matrix_of_vec(n, n, Vec(v.begin() + uf, v.end()));
        return c;
    };
    // Bounded deterministic scan: basis vectors, pairwise sums/differences,
    // then prefix sums.
    std::vector<Vec> trials;
    for (int k = 0; k < sol.dim(); ++k)
        trials.push_back(sol.basis_vector(k));
    for (int a = 0; a < sol.dim(); ++a)
        for (int b = a + 1; b < sol.dim(); ++b) {
            trials.push_back(vec_add(sol.basis_vector(a), sol.basis_vector(b)));
            trials.push_back(vec_sub(sol.basis_vector(a), sol.basis_vector(b)));
        }
    if (sol.dim() > 2) {
        Vec total(unknowns, Rat(0));
        for (int k = 0; k < sol.dim(); ++k) {
            total = vec_add(total, sol.basis_vector(k));
            trials.push_back(total);
        }
    }
    for (const Vec& v : trials) {
        CrossedIso cand = candidate_of(v);
        if (good(cand))
            return cand;
    }
    return std::nullopt;
}

CrossedIso round_trip_P_of_S(const CrossedModuleData& cm)
{
    const int m = cm.M().dim, n = cm.L().dim;
    Cat1Data c = functor_S(cm);
    Subspace ker_s = kernel_basis(c.s);
    // ker s = M + 0 and N = 0 + L inside M x| L; read the components off.
    Matrix proj_m(m, m + n), proj_l(n, m + n);
    for (int a = 0; a < m; ++a)
        proj_m(a, a) = 1;
    for (int a = 0; a < n; ++a)
        proj_l(a, m + a) = 1;
    CrossedIso iso;
    iso.f = proj_m * ker_s.basis();
    iso.phi = proj_l * c.N.basis();
    return iso;
}

Matrix round_trip_S_of_P(const Cat1Data& c)
{
    CrossedModuleData cm = functor_P(c);
    Subspace ker_s = kernel_basis(c.s);
    // S(P(c)) lives on ker s x N; send (k, n) to k + n in P.
    return Matrix::hstack(ker_s.basis(), c.N.basis());
}

Vec AlphaCrossedExtension::apply_rho(const Vec& v) const
{
    auto coords = image_mu().coordinates(v);
    if (!coords)
        throw std::invalid_argument("apply_rho: vector is not in im mu");
    return rho.apply(*coords);
}

Matrix restrict_to_image(const Matrix& full_map, const Matrix& mu)
{
    return full_map * Subspace::span_columns(mu).basis();
}

AlphaCrossedExtensionReport validate_alpha_crossed_extension(const AlphaCrossedExtension& xi)
{
    AlphaCrossedExtensionReport rep;
    const HomLieAlgebra& L = xi.L();
    const HomLieAlgebra& M = xi.Mmod();
    const HomLieAlgebra& N = xi.N();
    const HomLieAlgebra& P = xi.P();
    Subspace image = xi.image_mu();
    const int r = image.dim();

    rep.dims_ok = xi.chi.rows() == N.dim && xi.chi.cols() == M.dim && xi.mu.rows() == P.dim &&
                  xi.mu.cols() == N.dim && xi.pi.rows() == L.dim && xi.pi.cols() == P.dim &&
                  xi.sigma.rows() == P.dim && xi.sigma.cols() == L.dim &&
                  xi.rho.rows() == N.dim && xi.rho.cols() == r;
    if (!rep.dims_ok)
        return rep;

    rep.chi_injective = rank(xi.chi) == M.dim;
    rep.chi_equivariant = xi.chi * M.alpha == N.alpha * xi.chi;
    rep.exact_at_N = Subspace::span_columns(xi.chi) == kernel_basis(xi.mu);
    rep.mu_morphism = check_hom_morphism(xi.mu, N, P);
    rep.exact_at_P = image == kernel_basis(xi.pi);
    rep.pi_morphism = check_hom_morphism(xi.pi, P, L);
    rep.pi_surjective = rank(xi.pi) == L.dim;
    rep.section_sigma = xi.pi * xi.sigma == Matrix::identity(L.dim) &&
                        xi.sigma * L.alpha == P.alpha * xi.sigma;

    // rho: Hom-linear section of mu onto its image.
    rep.section_rho = xi.mu * xi.rho == image.basis();
    if (rep.section_rho) {
        for (int j = 0; j < r && rep.section_rho; ++j) {
            auto c = image.coordinates(P.alpha.apply(image.basis_vector(j)));
            if (!c) {
                rep.section_rho = false;
                break;
            }
            if (xi.rho.apply(*c) != N.alpha.apply(xi.rho.col(j)))
                rep.section_rho = false;
        }
    }

    CrossedModuleData cm{xi.pn_action, xi.mu};
    try {
        rep.crossed_alpha = validate_crossed(cm, CrossedFlavor::alpha).valid();
    } catch (const std::invalid_argument&) {
        rep.crossed_alpha = false;
    }

    rep.module_matches = true;
    for (int i = 0; i < L.dim && rep.module_matches; ++i)
        for (int k = 0; k < M.dim; ++k) {
            Vec lhs = xi.pn_action.apply(xi.sigma.col(i), xi.chi.col(k));
            Vec rhs = xi.chi.apply(xi.module.apply(Vec(unit(L.dim, i)), unit(M.dim, k)));
            if (lhs != rhs) {
                rep.module_matches = false;
                break;
            }
        }
    return rep;
}

EtaResult eta_with_sections(const AlphaCrossedExtension& xi, const Matrix& sigma,
                            const Matrix& rho)
{
    const HomLieAlgebra& L = xi.L();
    const HomLieAlgebra& P = xi.P();
    const int n = L.dim, mdim = xi.Mmod().dim;
    Subspace image = xi.image_mu();

    auto rho_at = [&](const Vec& v) {
        auto coords = image.coordinates(v);
        if (!coords)
            throw std::invalid_argument("eta: section defect leaves im mu");
        return rho.apply(*coords);
    };
    auto f_eval = [&](const Vec& u, const Vec& v) {
        Vec defect = vec_sub(P.bracket(sigma.apply(u), sigma.apply(v)),
                             sigma.apply(L.bracket(u, v)));
        return rho_at(defect);
    };

    auto tuples = wedge_tuples(n, 3);
    Matrix alpha2 = L.alpha * L.alpha;
    EtaResult out;
    out.h.degree = 3;
    out.h.values = Matrix(mdim, static_cast<int>(tuples.size()));
    out.in_kernel = true;
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        int a = tuples[t][0], b = tuples[t][1], cc = tuples[t][2];
        Vec ea = unit(n, a), eb = unit(n, b), ec = unit(n, cc);
        Vec hv = f_eval(L.alpha.col(a), L.bracket(eb, ec));
        hv = vec_add(hv, f_eval(L.alpha.col(b), L.bracket(ec, ea)));
        hv = vec_add(hv, f_eval(L.alpha.col(cc), L.bracket(ea, eb)));
        hv = vec_add(hv, xi.pn_action.apply(sigma.apply(alpha2.col(a)), f_eval(eb, ec)));
        hv = vec_add(hv, xi.pn_action.apply(sigma.apply(alpha2.col(b)), f_eval(ec, ea)));
        hv = vec_add(hv, xi.pn_action.apply(sigma.apply(alpha2.col(cc)), f_eval(ea, eb)));
        if (!vec_is_zero(xi.mu.apply(hv)))
            out.in_kernel = false;
        auto pre = solve_affine(xi.chi, hv);
        if (!pre)
            throw std::invalid_argument("eta: value outside im chi (axioms violated)");
        out.h.values.set_col(static_cast<int>(t), *pre);
    }
    if (!out.in_kernel)
        throw std::invalid_argument("eta: mu∘h != 0 (alpha-crossed axioms violated)");
    out.equivariant = cochain_basis(xi.module, 3).coords(out.h).has_value();
    out.cocycle = apply_differential(xi.module, out.h).values.is_zero();
    return out;
}

EtaResult eta(const AlphaCrossedExtension& xi)
{
    return eta_with_sections(xi, xi.sigma, xi.rho);
}

EtaIndependenceReport eta_section_independence(const AlphaCrossedExtension& xi, int trials)
{
    EtaIndependenceReport rep;
    rep.trials_requested = trials;
    EtaResult base = eta(xi);

    Subspace image = xi.image_mu();
    // sigma offsets: L -> ker pi, equivariant; rho offsets: im mu -> ker mu,
    // equivariant for the restricted twist.
    std::vector<Matrix> sigma_off =
        equivariant_maps_killed_by(xi.L().alpha, xi.P().alpha, xi.pi);
    Matrix alpha_im(image.dim(), image.dim());
    for (int j = 0; j < image.dim(); ++j) {
        auto c = image.coordinates(xi.P().alpha.apply(image.basis_vector(j)));
        if (!c)
            throw std::invalid_argument("eta_section_independence: im mu not twist-invariant");
        alpha_im.set_col(j, *c);
    }
    std::vector<Matrix> rho_off = equivariant_maps_killed_by(alpha_im, xi.N().alpha, xi.mu);

    const int total = static_cast<int>(sigma_off.size() + rho_off.size());
    for (int t = 0; t < trials && total > 0; ++t) {
        int idx = t % total;
        Rat scale(t / total + 1);
        EtaPerturbation p;
        EtaResult alt;
        if (idx < static_cast<int>(sigma_off.size())) {
            p.sigma_perturbed = true;
            alt = eta_with_sections(xi, xi.sigma + scale * sigma_off[idx], xi.rho);
        } else {
            p.sigma_perturbed = false;
            alt = eta_with_sections(xi, xi.sigma,
                                    xi.rho + scale * rho_off[idx - sigma_off.size()]);
        }
        auto theta = cohomologous(xi.module, alt.h, base.h);
        p.cohomologous = theta.has_value();
        if (theta)
            p.certificate = *theta;
        else
            rep.all_cohomologous = false;
        rep.perturbations.push_back(p);
        ++rep.trials_done;
    }
    return rep;
}

EtaMorphismReport eta_morphism_compare(const AlphaCrossedExtension& xi,
                                       const AlphaCrossedExtension& xi2, const Matrix& f,
                                       const Matrix& phi)
{
    EtaMorphismReport rep;
    // Morphism of the underlying crossed modules plus the commuting squares
    // with identity on M and L.
    CrossedModuleData cm{xi.pn_action, xi.mu};
    CrossedModuleData cm2{xi2.pn_action, xi2.mu};
    rep.is_morphism = check_crossed_morphism(f, phi, cm, cm2) && f * xi.chi == xi2.chi &&
                      xi2.pi * phi == xi.pi;

    EtaResult h1 = eta(xi);
    EtaResult h2 = eta_with_sections(xi2, phi * xi.sigma, xi2.rho);

    auto theta = cohomologous(xi.module, h1.h, h2.h);
    rep.classes_equal = theta.has_value();

    // fhat = (f∘rho - rho'∘phi) applied to the section defect, valued in
    // ker mu' and pulled back to M.
    const int n = xi.L().dim;
    auto tuples = wedge_tuples(n, 2);
    Subspace image2 = xi2.image_mu();
    rep.fhat.degree = 2;
    rep.fhat.values = Matrix(xi.Mmod().dim, static_cast<int>(tuples.size()));
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        int a = tuples[t][0], b = tuples[t][1];
        Vec defect = vec_sub(xi.P().bracket(xi.sigma.col(a), xi.sigma.col(b)),
                             xi.sigma.apply(xi.L().bracket_basis(a, b)));
        Vec lhs = f.apply(xi.apply_rho(defect));
        auto c2 = image2.coordinates(phi.apply(defect));
        if (!c2)
            throw std::invalid_argument("eta_morphism_compare: phi(defect) outside im mu'");
        Vec rhs = xi2.rho.apply(*c2);
        auto pre = solve_affine(xi2.chi, vec_sub(lhs, rhs));
        if (!pre)
            throw std::invalid_argument("eta_morphism_compare: fhat outside im chi'");
        rep.fhat.values.set_col(static_cast<int>(t), *pre);
    }
    Cochain d2fhat = apply_differential(xi.module, rep.fhat);
    rep.fhat_certifies = d2fhat.values == h1.h.values - h2.h.values;
    return rep;
}

}  // namespace homlie
