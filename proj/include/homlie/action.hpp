#pragma once

#include "homlie/homlie_algebra.hpp"

namespace homlie {

// A bilinear action x.m of `actor` on `target`. The target carries its own
// bracket and twist; a Hom-module is the special case bracket = 0.
struct HomAction {
    HomLieAlgebra actor;
    HomLieAlgebra target;
    Tensor3 act;  // actor.dim x target.dim -> target.dim

    Vec apply(const Vec& x, const Vec& m) const { return act.eval(x, m); }
    bool dims_ok() const
    {
        return act.left() == actor.dim && act.right() == target.dim && act.out() == target.dim;
    }
    friend bool operator==(const HomAction&, const HomAction&) = default;
};

struct ActionReport {
    bool axiom_a = false;  // [x,y].am(m) = a(x).(y.m) - a(y).(x.m)
    bool axiom_b = false;  // a(x).[m,m'] = [x.m, am(m')] + [am(m), x.m']
    bool axiom_c = false;  // am(x.m) = a(x).am(m)
    bool target_abelian = false;
    bool is_module() const { return axiom_a && axiom_b && axiom_c && target_abelian; }
    bool valid() const { return axiom_a && axiom_b && axiom_c; }
};

ActionReport validate_action(const HomAction& act);

// x.m = [x, m] on the underlying space of L; `as_module` drops L's own
// bracket on the target (the adjoint module).
HomAction adjoint_action(const HomLieAlgebra& L, bool as_module);

HomAction trivial_action(const HomLieAlgebra& L, const HomLieAlgebra& target);

// Action of an ideal's ambient algebra restricted to the ideal, by bracket.
HomAction ideal_action(const HomLieAlgebra& L, const Subspace& ideal);

// e.m = (pi e).m for a morphism pi: E -> actor.
HomAction pullback_action(const HomAction& act, const Matrix& pi, const HomLieAlgebra& E);

struct SemidirectProduct {
    HomLieAlgebra alg;     // underlying space M + L, module coordinates first
    Matrix incl_target;    // i : M -> M x| L
    Matrix proj_actor;     // pi : M x| L -> L
    Matrix sect_actor;     // sigma : L -> M x| L
};

// [(m1,x1),(m2,x2)] = ([m1,m2] + s(x1).m2 - s(x2).m1, [x1,x2]) with the
// blockwise twist. s = Id is the plain semidirect product, s = alpha_L the
// alpha-variant. Throws if the action is invalid or s not an endomorphism.
SemidirectProduct semidirect(const HomAction& act, const Matrix& s);
SemidirectProduct semidirect(const HomAction& act);  // s = Id

// Linear maps as flat vectors, column-major: entry (r, j) at j*rows + r.
Vec vec_of_matrix(const Matrix& m);
Matrix matrix_of_vec(int rows, int cols, const Vec& v);

// All d: L -> M with d[x,y] = s(x).d(y) - s(y).d(x) and d∘alpha_L = alpha_M∘d,
// as the kernel of the assembled constraint system on vectorized maps.
// s = Id gives Der(L, M), s = alpha_L gives the alpha-derivations.
Subspace derivation_space(const HomAction& act, const Matrix& s);

// span{ x -> alpha_L(x).m : alpha_M(m) = m }.
Subspace inner_alpha_derivations(const HomAction& act);

// span{ x -> x.m : alpha_M(m) = m }; the image of the degree-0 differential.
Subspace coboundary_derivations(const HomAction& act);

}  // namespace homlie
