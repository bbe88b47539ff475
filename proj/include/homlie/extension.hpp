#pragma once

#include "homlie/cohomology.hpp"

namespace homlie {

// 0 -> M -i-> E -pi-> L -> 0 with abelian kernel and a designated Hom-linear
// section sigma of pi. The kernel is carried by its twist only; its bracket
// is zero by definition.
struct AbelianExtension {
    HomLieAlgebra E;
    HomLieAlgebra L;
    Matrix alpha_M;  // m x m
    Matrix i;        // E.dim x m
    Matrix pi;       // L.dim x E.dim
    Matrix sigma;    // E.dim x L.dim

    int module_dim() const { return i.cols(); }
};

struct ExtensionReport {
    bool dims_ok = false;
    bool i_injective = false;
    bool i_equivariant = false;       // i ∘ alpha_M = alpha_E ∘ i
    bool kernel_abelian = false;      // [im i, im i] = 0
    bool pi_surjective = false;
    bool pi_morphism = false;
    bool exact = false;               // im i = ker pi
    bool section_splits = false;      // pi ∘ sigma = Id
    bool section_equivariant = false; // sigma ∘ alpha_L = alpha_E ∘ sigma
    bool s_condition = true;          // [sigma(x), i(m)] = i(s(x).m), when s given
    bool valid() const
    {
        return dims_ok && i_injective && i_equivariant && kernel_abelian && pi_surjective &&
               pi_morphism && exact && section_splits && section_equivariant && s_condition;
    }
};

ExtensionReport validate_extension(const AbelianExtension& ext);
// Additionally checks the s-extension condition against a fixed module action.
ExtensionReport validate_extension(const AbelianExtension& ext, const HomAction& module,
                                   const Matrix& s);

// sigma with pi∘sigma = Id and alpha_X∘sigma = sigma∘alpha_Y, or absent when
// the linear system is inconsistent. pi: X -> Y must be surjective.
std::optional<Matrix> find_section(const Matrix& pi, const Matrix& alpha_X, const Matrix& alpha_Y);

// Basis of {delta : L -> E, im(delta) in ker pi, delta∘alpha_L = alpha_E∘delta};
// adding any of these to sigma gives the other Hom-linear sections.
std::vector<Matrix> section_offsets(const AbelianExtension& ext);

// Induced action x.m = i^{-1}[sigma(x), i(m)]; throws if a bracket leaves the
// kernel (the extension is then not exact).
HomAction action_from_extension(const AbelianExtension& ext);

// The induced action recomputed with every alternate section; true when all
// tensors agree.
bool action_section_independent(const AbelianExtension& ext);

// M (+)_w L for a 2-cocycle w: bracket
// [(m,l),(m',l')] = (alpha(l).m' - alpha(l').m + w(l,l'), [l,l']).
// Throws if w is not an equivariant 2-cocycle.
AbelianExtension extension_from_cocycle(const HomAction& module, const Cochain& w);

// w(x ^ y) = i^{-1}([sigma x, sigma y] - sigma[x,y]).
Cochain cocycle_from_extension(const AbelianExtension& ext);

// The trivial s-extension M x|_s L.
AbelianExtension trivial_s_extension(const HomAction& module, const Matrix& s);

struct Equivalence {
    Matrix phi;      // E -> E'
    Cochain theta;   // 1-cochain with w - w' = d theta
};

// Equivalence of alpha-extensions over the same module, decided through the
// extracted cocycles. phi is assembled as (m,l) -> (m + theta(l), l)
// transported along the normal-form identifications.
std::optional<Equivalence> equivalent_extensions(const AbelianExtension& a,
                                                 const AbelianExtension& b,
                                                 const HomAction& module);

// Pullback extension along a morphism gamma: L' -> L, with inherited
// section. The s-flavored overload additionally checks gamma∘s' = s∘gamma.
AbelianExtension backward_induced(const AbelianExtension& ext, const Matrix& gamma,
                                  const HomLieAlgebra& Lp);
AbelianExtension backward_induced(const AbelianExtension& ext, const Matrix& gamma,
                                  const HomLieAlgebra& Lp, const Matrix& s,
                                  const Matrix& s_prime);

// A Hom-Lie morphism psi: L' -> E with pi∘psi = gamma, when one exists.
// Writing psi = i∘u + sigma∘gamma reduces the search to an affine system in
// u; ext must be an s-extension for the fixed module action.
std::optional<Matrix> splitting_through(const AbelianExtension& ext, const HomAction& module,
                                        const Matrix& s, const Matrix& gamma,
                                        const HomLieAlgebra& Lp);

// Pushforward (M' x|_{s'} E) / T along a module morphism delta: M -> M',
// where T = {(delta(m), -i(m))} and s' is an endomorphism of E with
// pi∘s' = s∘pi. Throws if the compatibility fails or T is not an ideal.
AbelianExtension forward_induced(const AbelianExtension& ext, const Matrix& delta,
                                 const HomAction& module_prime, const Matrix& s,
                                 const Matrix& s_prime);

// An s'-derivation psi': E -> M' (for the action through pi) with
// psi'∘i = delta, when one exists; its existence is equivalent to the
// forward induced extension being split.
std::optional<Matrix> forward_splitting(const AbelianExtension& ext,
                                        const HomAction& module_prime, const Matrix& delta,
                                        const Matrix& s_prime);

// Baer structure on classes of alpha-extensions. The categorical versions go
// through the direct sum, the diagonal pullback and the codiagonal (resp.
// scalar) pushforward; the cocycle versions are plain arithmetic on
// representatives. Tests pin the two against each other.
AbelianExtension baer_sum_categorical(const AbelianExtension& a, const AbelianExtension& b,
                                      const HomAction& module);
AbelianExtension baer_scalar_categorical(const AbelianExtension& a, const Rat& k,
                                         const HomAction& module);
Cochain baer_sum_cocycle(const Cochain& wa, const Cochain& wb);
Cochain baer_scalar_cocycle(const Cochain& w, const Rat& k);

// Direct product algebra with componentwise bracket and blockwise twist.
HomLieAlgebra direct_product(const HomLieAlgebra& a, const HomLieAlgebra& b);

struct FiveTermReport {
    bool input_valid = false;
    int dim_der_L = 0;
    int dim_der_E = 0;
    int dim_hom_nab = 0;
    int dim_h2_L = 0;
    int dim_h2_E = 0;
    bool der_pi_injective = false;
    bool exact_at_der_E = false;
    bool exact_at_hom = false;
    bool exact_at_h2 = false;
    bool all() const
    {
        return input_valid && der_pi_injective && exact_at_der_E && exact_at_hom && exact_at_h2;
    }
};

// The five-term sequence in the alpha-derivation flavor, for a short exact
// sequence 0 -> N -xi-> E -pi-> L -> 0 with Hom-linear section and an
// L-module A:
//   0 -> Der_a(L,A) -> Der_a(E,A) -> Hom(N^ab, A) -> H^2_a(L,A) -> H^2_a(E,A).
// N^ab is xi(N) modulo the ideal of E generated by [xi N, xi N]; Hom(N^ab,A)
// consists of the equivariant maps f with f(x.n) = alpha_L(x).f(n) for the
// conjugation action. Exactness is decided by exact subspace comparisons.
FiveTermReport five_term_report(const HomLieAlgebra& N, const HomLieAlgebra& E,
                                const HomLieAlgebra& L, const Matrix& xi, const Matrix& pi,
                                const Matrix& sigma, const HomAction& A_module);

}  // namespace homlie
