#pragma once

#include "homlie/extension.hpp"

namespace homlie {

// mu: M -> L together with an action of L on M (M may carry its own bracket).
struct CrossedModuleData {
    HomAction action;  // actor = L, target = M
    Matrix mu;         // L.dim x M.dim

    const HomLieAlgebra& M() const { return action.target; }
    const HomLieAlgebra& L() const { return action.actor; }
};

enum class CrossedFlavor { standard, alpha };

struct CrossedReport {
    ActionReport action;
    bool mu_morphism = false;
    bool equivariance = false;  // mu(l.m) = [l, mu m]   (alpha: mu(a(l).m) = [l, mu m])
    bool peiffer = false;       // mu(m).m' = [m,m']     (alpha: mu(am(m)).m' = [m,m'])
    // Derived structure, reported for information:
    bool image_is_ideal = false;
    bool kernel_central = false;       // ker mu inside Z(M)
    bool coker_module = false;         // ker mu is a module over coker mu
    bool valid() const { return action.valid() && mu_morphism && equivariance && peiffer; }
};

CrossedReport validate_crossed(const CrossedModuleData& cm, CrossedFlavor flavor);

// Equivalent characterization: (mu,1): M x| L -> L x| L and
// (1,mu): M x| M -> M x| L are both Hom-Lie morphisms (with the adjoint
// action on L x| L and the mu-pulled action on M x| M).
bool validate_crossed_via_semidirect(const CrossedModuleData& cm);

// An algebra P, a subalgebra N, and two retractions s,t: P -> N with
// commuting kernels. s and t are stored as endomorphisms of P whose images
// must lie in N.
struct Cat1Data {
    HomLieAlgebra P;
    Subspace N;
    Matrix s, t;
};

struct Cat1Report {
    bool n_subalgebra = false;  // bracket-closed and twist-invariant
    bool s_morphism = false;
    bool t_morphism = false;
    bool maps_into_n = false;
    bool fixes_n = false;       // s|_N = t|_N = id
    bool kernels_commute = false;
    bool valid() const
    {
        return n_subalgebra && s_morphism && t_morphism && maps_into_n && fixes_n &&
               kernels_commute;
    }
};

Cat1Report validate_cat1(const Cat1Data& c);

// (ker s, N, t|_{ker s}) with N acting by the bracket.
CrossedModuleData functor_P(const Cat1Data& c);

// (M x| L, L, s(m,l) = l, t(m,l) = mu(m) + l).
Cat1Data functor_S(const CrossedModuleData& cm);

// f: M -> M', phi: L -> L' with phi∘mu = mu'∘f and f(l.m) = phi(l).f(m),
// both maps Hom-Lie morphisms.
bool check_crossed_morphism(const Matrix& f, const Matrix& phi, const CrossedModuleData& cm,
                            const CrossedModuleData& cmp);

bool check_cat1_morphism(const Matrix& F, const Cat1Data& a, const Cat1Data& b);

struct CrossedIso {
    Matrix f;    // M -> M'
    Matrix phi;  // L -> L'
};

// Searches for an isomorphism of crossed modules: the linear constraints
// (mu-compatibility and twist-intertwining) cut out a solution space, which
// is then scanned (seeded candidates first, then bounded combinations of
// basis elements) for an invertible pair satisfying the bilinear conditions.
std::optional<CrossedIso> find_crossed_isomorphism(const CrossedModuleData& cm,
                                                   const CrossedModuleData& cmp,
                                                   const std::vector<CrossedIso>& seeds = {});

// The canonical identifications for the functor round trips.
CrossedIso round_trip_P_of_S(const CrossedModuleData& cm);  // P(S(cm)) -> cm
Matrix round_trip_S_of_P(const Cat1Data& c);                // S(P(c)).P -> c.P

// 0 -> M -chi-> N -mu-> P -pi(<-sigma)-> L -> 0 through an alpha-crossed
// module (N, P, mu), with rho a Hom-linear section of mu onto its image
// (stored against the canonical basis of im mu).
struct AlphaCrossedExtension {
    HomAction module;     // coefficients: L acting on abelian M
    HomAction pn_action;  // crossed-module action: P acting on N
    Matrix chi;           // N.dim x M.dim
    Matrix mu;            // P.dim x N.dim
    Matrix pi;            // L.dim x P.dim
    Matrix sigma;         // P.dim x L.dim
    Matrix rho;           // N.dim x dim(im mu)

    const HomLieAlgebra& L() const { return module.actor; }
    const HomLieAlgebra& Mmod() const { return module.target; }
    const HomLieAlgebra& N() const { return pn_action.target; }
    const HomLieAlgebra& P() const { return pn_action.actor; }

    Subspace image_mu() const { return Subspace::span_columns(mu); }
    // rho applied to an element of im mu.
    Vec apply_rho(const Vec& v) const;
};

// Restriction of a full map N <- P to the canonical basis of im mu; the
// convenient way to build the rho field.
Matrix restrict_to_image(const Matrix& full_map, const Matrix& mu);

struct AlphaCrossedExtensionReport {
    bool dims_ok = false;
    bool chi_injective = false;
    bool chi_equivariant = false;
    bool exact_at_N = false;  // im chi = ker mu
    bool mu_morphism = false;
    bool exact_at_P = false;  // im mu = ker pi
    bool pi_morphism = false;
    bool pi_surjective = false;
    bool section_sigma = false;  // pi sigma = Id, sigma equivariant
    bool section_rho = false;    // mu rho = incl, rho equivariant
    bool crossed_alpha = false;  // (N, P, mu) alpha-crossed module
    bool module_matches = false; // l.m = sigma(l).chi(m) pulled back through chi
    bool valid() const
    {
        return dims_ok && chi_injective && chi_equivariant && exact_at_N && mu_morphism &&
               exact_at_P && pi_morphism && pi_surjective && section_sigma && section_rho &&
               crossed_alpha && module_matches;
    }
};

AlphaCrossedExtensionReport validate_alpha_crossed_extension(const AlphaCrossedExtension& xi);

struct EtaResult {
    Cochain h;            // degree 3, values in M
    bool in_kernel = false;
    bool equivariant = false;
    bool cocycle = false;
    bool ok() const { return in_kernel && equivariant && cocycle; }
};

// The 3-cocycle h(l1,l2,l3) built from f(a,b) = rho([sigma a, sigma b] -
// sigma [a,b]): three f(alpha(l_i), [l_j,l_k]) terms and three
// sigma(alpha^2(l_i)) . f(l_j,l_k) terms, cyclically; values land in
// ker mu = im chi and are pulled back to M. Throws when they do not.
EtaResult eta(const AlphaCrossedExtension& xi);

// eta recomputed with given alternate sections.
EtaResult eta_with_sections(const AlphaCrossedExtension& xi, const Matrix& sigma,
                            const Matrix& rho);

struct EtaPerturbation {
    bool sigma_perturbed = false;  // otherwise rho
    bool cohomologous = false;
    Cochain certificate;  // theta with h' - h = d^2 theta
};

struct EtaIndependenceReport {
    int trials_requested = 0;
    int trials_done = 0;
    std::vector<EtaPerturbation> perturbations;
    bool all_cohomologous = true;
};

// Deterministic enumeration of alternate sections: sigma offsets run over a
// basis of the equivariant maps L -> ker pi (with integer multiples when the
// basis is exhausted), rho offsets over equivariant maps im mu -> ker mu.
EtaIndependenceReport eta_section_independence(const AlphaCrossedExtension& xi, int trials);

struct EtaMorphismReport {
    bool is_morphism = false;      // (f, phi) is a morphism of the extensions
    bool classes_equal = false;    // difference of the eta classes is a coboundary
    bool fhat_certifies = false;   // the explicit (f∘rho - rho'∘phi) 2-cochain works
    Cochain fhat;
};

// Compare eta along a morphism (f: N -> N', phi: P -> P') from xi to xi2,
// computing h_{xi2} with the transported section phi∘sigma.
EtaMorphismReport eta_morphism_compare(const AlphaCrossedExtension& xi,
                                       const AlphaCrossedExtension& xi2, const Matrix& f,
                                       const Matrix& phi);

}  // namespace homlie
