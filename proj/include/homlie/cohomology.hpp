#pragma once

#include "homlie/action.hpp"

namespace homlie {

// Strictly increasing n-tuples from {0..dim-1} in lexicographic order; the
// ordered basis of the n-th wedge power. n = 0 yields the single empty tuple.
std::vector<std::vector<int>> wedge_tuples(int dim, int n);

// n-th compound matrix: entry (S, T) = det A[S, T] over wedge tuples.
// This is the matrix of the induced map on the n-th wedge power.
Matrix wedge_power(const Matrix& a, int n);

// An n-cochain: values on the wedge basis, one column per tuple.
struct Cochain {
    int degree = 0;
    Matrix values;  // target dim x C(actor dim, n)
};

// Evaluate a cochain on arbitrary vectors by multilinear expansion; the
// columns of `args` are the n arguments.
Vec eval_cochain(const Cochain& f, const Matrix& args);

// The space C^n_a(L, M) = {f : f ∘ (wedge^n alpha_L) = alpha_M ∘ f}, cut out
// inside the full space of wedge-to-target maps. Basis vectors live in the
// vectorized (column-major) coordinates of that full map space.
struct CochainSpace {
    int degree = 0;
    std::vector<std::vector<int>> tuples;
    Subspace equivariant;  // subspace of Q^(target_dim * #tuples)
    int target_dim = 0;

    int dim() const { return equivariant.dim(); }
    Cochain member(const Vec& coords) const;       // coords in the canonical basis
    std::optional<Vec> coords(const Cochain& f) const;
};

CochainSpace cochain_basis(const HomAction& act, int n);

// The twisted Chevalley-Eilenberg differential applied to explicit values:
//   (d f)(x_1..x_{n+1}) = sum_i (-1)^{i+1} alpha^n(x_i) . f(..x_i^..)
//     + sum_{i<j} (-1)^{i+j} f([x_i,x_j] ^ alpha(x_1) ^ ..^alpha(x_i)^..^alpha(x_j)^.. )
// where alpha^n is the n-th matrix power of the actor twist.
Cochain apply_differential(const HomAction& act, const Cochain& f);

// Matrix of d^n from C^n_a to C^{n+1}_a in the canonical equivariant bases.
// Throws if the image of some basis cochain fails equivariance (it never
// should; the complex is closed under d).
Matrix differential_matrix(const HomAction& act, int n);

struct CohomologyGroup {
    int degree = 0;
    int cochain_dim = 0;
    int cocycle_dim = 0;
    int coboundary_dim = 0;
    int dim = 0;
    Subspace cocycles;      // in C^n_a coordinates
    Subspace coboundaries;  // in C^n_a coordinates
    std::vector<Cochain> representatives;
};

CohomologyGroup cohomology_group(const HomAction& act, int n);

bool is_cocycle(const HomAction& act, const Cochain& f);

// Preimage under d^{n-1} when f is a coboundary. In degree 0 only the zero
// cochain qualifies; its reported preimage is the zero cochain itself (there
// is no degree -1 space).
std::optional<Cochain> is_coboundary(const HomAction& act, const Cochain& f);

// theta with w - w' = d theta, for two cocycles of equal degree >= 1.
std::optional<Cochain> cohomologous(const HomAction& act, const Cochain& w, const Cochain& wp);

// Degree-0 invariants {m : alpha_M(m) = m and x.m = 0 for all x}, computed
// from the explicit formula (the complex computes it independently as H^0).
Subspace invariants(const HomAction& act);

}  // namespace homlie
