#pragma once

// Shared fixture objects used across the unit and acceptance suites.

#include "homlie/crossed.hpp"
#include "homlie/free_homlie.hpp"

namespace fixtures {

using namespace homlie;

inline Vec qv(std::initializer_list<Rat> xs) { return Vec(xs); }

inline HomLieAlgebra make_algebra(int dim, const Matrix& alpha,
                                  const std::vector<std::tuple<int, int, Vec>>& brackets)
{
    HomLieAlgebra L;
    L.dim = dim;
    L.alpha = alpha;
    L.c = Tensor3(dim, dim, dim);
    for (const auto& [i, j, v] : brackets) {
        L.c.set_at(i, j, v);
        L.c.set_at(j, i, vec_scale(Rat(-1), v));
    }
    return L;
}

// Two-dimensional algebra with [e,f] = e and twist e -> e, f -> e + f.
inline HomLieAlgebra lie2()
{
    Matrix alpha(2, 2, {Rat(1), Rat(1), Rat(0), Rat(1)});
    return make_algebra(2, alpha, {{0, 1, qv({Rat(1), Rat(0)})}});
}

// The one-dimensional ideal spanned by e inside lie2, as a module:
// e.m = 0, f.m = -m, identity twist on the module.
inline HomAction lie2_module()
{
    HomAction a;
    a.actor = lie2();
    a.target = HomLieAlgebra::abelian(1, Matrix::identity(1));
    a.act = Tensor3(2, 1, 1);
    a.act(1, 0, 0) = -1;
    return a;
}

// Classical sl2 in basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
inline HomLieAlgebra sl2()
{
    return make_algebra(3, Matrix::identity(3),
                        {{0, 1, qv({Rat(0), Rat(0), Rat(1)})},
                         {2, 0, qv({Rat(2), Rat(0), Rat(0)})},
                         {2, 1, qv({Rat(0), Rat(-2), Rat(0)})}});
}

// Jackson sl2 at t = 1: [e,f] = 3/2 h, [h,e] = 2e, [h,f] = -4f,
// twist e -> 3/4 e, f -> 3/2 f, h -> h.
inline HomLieAlgebra jackson_t1()
{
    Matrix alpha = Matrix::diagonal({Rat(3, 4), Rat(3, 2), Rat(1)});
    return make_algebra(3, alpha,
                        {{0, 1, qv({Rat(0), Rat(0), Rat(3, 2)})},
                         {2, 0, qv({Rat(2), Rat(0), Rat(0)})},
                         {2, 1, qv({Rat(0), Rat(-4), Rat(0)})}});
}

inline HomLieAlgebra heisenberg()
{
    return make_algebra(3, Matrix::identity(3), {{0, 1, qv({Rat(0), Rat(0), Rat(1)})}});
}

inline HomLieAlgebra abelian(int dim, const Matrix& alpha)
{
    return HomLieAlgebra::abelian(dim, alpha);
}

inline HomAction trivial_module(const HomLieAlgebra& L, int m, const Matrix& alpha_m)
{
    return trivial_action(L, HomLieAlgebra::abelian(m, alpha_m));
}

// Heisenberg cocycle data: L = Q^2 abelian with identity twist, M = Q
// trivial, w(e ^ f) = 1. The associated extension is the Heisenberg algebra.
struct HeisSetup {
    HomAction module;
    Cochain w;
};

inline HeisSetup heis_setup()
{
    HeisSetup s;
    s.module = trivial_module(abelian(2, Matrix::identity(2)), 1, Matrix::identity(1));
    s.w.degree = 2;
    s.w.values = Matrix(1, 1, {Rat(1)});
    return s;
}

// Same shape over the non-abelian lie2 with its ideal module; H^2 is again
// one-dimensional.
inline HeisSetup lie2_setup()
{
    HeisSetup s;
    s.module = lie2_module();
    s.w.degree = 2;
    s.w.values = Matrix(1, 1, {Rat(1)});
    return s;
}

// The alpha-crossed module that is not a crossed module: L = Q^2 and
// M = Q^3 abelian with zero twists, action a1.b2 = -a2.b1 = b2,
// mu(b1) = a1, mu(b2) = a2, mu(b3) = 0.
inline CrossedModuleData alfa_cm()
{
    CrossedModuleData cm;
    cm.action.actor = abelian(2, Matrix(2, 2));
    cm.action.target = abelian(3, Matrix(3, 3));
    cm.action.act = Tensor3(2, 3, 3);
    cm.action.act(0, 1, 1) = 1;   // a1 . b2 = b2
    cm.action.act(1, 0, 1) = -1;  // a2 . b1 = -b2
    cm.mu = Matrix(2, 3, {Rat(1), Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)});
    return cm;
}

// Ideal inclusion crossed module: span{e} inside lie2.
inline CrossedModuleData ideal_inclusion_cm()
{
    HomLieAlgebra L = lie2();
    Subspace ideal = Subspace::span(2, {qv({Rat(1), Rat(0)})});
    CrossedModuleData cm;
    cm.action = ideal_action(L, ideal);
    cm.mu = ideal.basis();
    return cm;
}

inline CrossedModuleData identity_cm(const HomLieAlgebra& L)
{
    CrossedModuleData cm;
    cm.action = adjoint_action(L, false);
    cm.mu = Matrix::identity(L.dim);
    return cm;
}

inline CrossedModuleData zero_cm(const HomLieAlgebra& L)
{
    CrossedModuleData cm;
    cm.action.actor = L;
    cm.action.target = HomLieAlgebra::abelian(0, Matrix(0, 0));
    cm.action.act = Tensor3(L.dim, 0, 0);
    cm.mu = Matrix(L.dim, 0);
    return cm;
}

inline CrossedModuleData module_cm(const HomAction& module)
{
    CrossedModuleData cm;
    cm.action = module;
    cm.mu = Matrix(module.actor.dim, module.target.dim);
    return cm;
}

// ---- alpha-crossed extension fixtures ----

// Nilpotent fixture: P free 2-step nilpotent on three generators with
// identity twist, L = Q^3 abelian, N = Q^4 with mu(u_jk) = z_jk, M = Q;
// action x_1 . u_23 = v gives a nonzero class in H^3.
inline AlphaCrossedExtension xi_nilpotent()
{
    AlphaCrossedExtension xi;
    HomLieAlgebra L = abelian(3, Matrix::identity(3));
    xi.module = trivial_module(L, 1, Matrix::identity(1));

    // P: x1 x2 x3 z12 z13 z23
    HomLieAlgebra P = make_algebra(
        6, Matrix::identity(6),
        {{0, 1, qv({Rat(0), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)})},
         {0, 2, qv({Rat(0), Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)})},
         {1, 2, qv({Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)})}});
    HomLieAlgebra N = abelian(4, Matrix::identity(4));  // u12 u13 u23 v
    xi.pn_action.actor = P;
    xi.pn_action.target = N;
    xi.pn_action.act = Tensor3(6, 4, 4);
    xi.pn_action.act(0, 2, 3) = 1;  // x1 . u23 = v

    xi.chi = Matrix(4, 1, {Rat(0), Rat(0), Rat(0), Rat(1)});
    xi.mu = Matrix(6, 4);
    xi.mu(3, 0) = 1;
    xi.mu(4, 1) = 1;
    xi.mu(5, 2) = 1;
    xi.pi = Matrix(3, 6);
    xi.pi(0, 0) = 1;
    xi.pi(1, 1) = 1;
    xi.pi(2, 2) = 1;
    xi.sigma = Matrix(6, 3);
    xi.sigma(0, 0) = 1;
    xi.sigma(1, 1) = 1;
    xi.sigma(2, 2) = 1;
    Matrix rho_full(4, 6);
    rho_full(0, 3) = 1;
    rho_full(1, 4) = 1;
    rho_full(2, 5) = 1;
    xi.rho = restrict_to_image(rho_full, xi.mu);
    return xi;
}

// Twisted variant: L = Q^3 with twist diag(1,1,2), P carries the induced
// twist on the z_jk, alpha_M = 2 on the one-dimensional M. With
// act_v = true the generator x1 also acts on v, which makes section
// perturbations move the cocycle by nonzero coboundaries.
inline AlphaCrossedExtension xi_twisted(bool act_v)
{
    AlphaCrossedExtension xi;
    Vec lam = {Rat(1), Rat(1), Rat(2)};
    HomLieAlgebra L = abelian(3, Matrix::diagonal(lam));
    Matrix alpha_m = Matrix::diagonal({Rat(2)});
    HomAction module = trivial_module(L, 1, alpha_m);
    if (act_v)
        module.act(0, 0, 0) = 1;  // e1 . m = m
    xi.module = module;

    Vec palpha = {lam[0], lam[1], lam[2], lam[0] * lam[1], lam[0] * lam[2], lam[1] * lam[2]};
    HomLieAlgebra P = make_algebra(
        6, Matrix::diagonal(palpha),
        {{0, 1, qv({Rat(0), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)})},
         {0, 2, qv({Rat(0), Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)})},
         {1, 2, qv({Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)})}});
    Vec nalpha = {lam[0] * lam[1], lam[0] * lam[2], lam[1] * lam[2], Rat(2)};
    HomLieAlgebra N = abelian(4, Matrix::diagonal(nalpha));
    xi.pn_action.actor = P;
    xi.pn_action.target = N;
    xi.pn_action.act = Tensor3(6, 4, 4);
    xi.pn_action.act(0, 2, 3) = 1;  // x1 . u23 = v
    if (act_v)
        xi.pn_action.act(0, 3, 3) = 1;  // x1 . v = v

    xi.chi = Matrix(4, 1, {Rat(0), Rat(0), Rat(0), Rat(1)});
    xi.mu = Matrix(6, 4);
    xi.mu(3, 0) = 1;
    xi.mu(4, 1) = 1;
    xi.mu(5, 2) = 1;
    xi.pi = Matrix(3, 6);
    xi.pi(0, 0) = 1;
    xi.pi(1, 1) = 1;
    xi.pi(2, 2) = 1;
    xi.sigma = Matrix(6, 3);
    xi.sigma(0, 0) = 1;
    xi.sigma(1, 1) = 1;
    xi.sigma(2, 2) = 1;
    Matrix rho_full(4, 6);
    rho_full(0, 3) = 1;
    rho_full(1, 4) = 1;
    rho_full(2, 5) = 1;
    xi.rho = restrict_to_image(rho_full, xi.mu);
    return xi;
}

// Degenerate fixture with mu = 0: everything concentrated in M = N and
// P = L (the two-dimensional algebra with its nontrivial twist).
inline AlphaCrossedExtension xi_degenerate()
{
    AlphaCrossedExtension xi;
    HomLieAlgebra L = lie2();
    xi.module = lie2_module();
    xi.pn_action.actor = L;
    xi.pn_action.target = HomLieAlgebra::abelian(1, Matrix::identity(1));
    xi.pn_action.act = xi.module.act;
    xi.chi = Matrix::identity(1);
    xi.mu = Matrix(2, 1);
    xi.pi = Matrix::identity(2);
    xi.sigma = Matrix::identity(2);
    xi.rho = Matrix(1, 0);
    return xi;
}

// The section counterexample: X spanned by x1, x2 with alpha(x1) = 0,
// alpha(x2) = x1; Y spanned by y with zero twist; pi(x1) = 0, pi(x2) = y.
struct NoSectionFixture {
    Matrix pi{1, 2, {Rat(0), Rat(1)}};
    Matrix alpha_X{2, 2, {Rat(0), Rat(1), Rat(0), Rat(0)}};
    Matrix alpha_Y{1, 1, {Rat(0)}};
};

}  // namespace fixtures
