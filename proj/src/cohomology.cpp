#include "homlie/cohomology.hpp"

#include <map>

namespace homlie {

std::vector<std::vector<int>> wedge_tuples(int dim, int n)
{
    std::vector<std::vector<int>> out;
    if (n < 0)
        return out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    if (n > dim)
        return out;
    std::vector<int> t(n);
    for (int i = 0; i < n; ++i)
        t[i] = i;
    while (true) {
        out.push_back(t);
        int i = n - 1;
        while (i >= 0 && t[i] == dim - n + i)
            --i;
        if (i < 0)
            break;
        ++t[i];
        for (int j = i + 1; j < n; ++j)
            t[j] = t[j - 1] + 1;
    }
    return out;
}

Matrix wedge_power(const Matrix& a, int n)
{
    auto tuples = wedge_tuples(a.rows(), n);
    Matrix w(static_cast<int>(tuples.size()), static_cast<int>(tuples.size()));
    for (std::size_t s = 0; s < tuples.size(); ++s)
        for (std::size_t t = 0; t < tuples.size(); ++t)
            w(static_cast<int>(s), static_cast<int>(t)) =
                n == 0 ? Rat(1) : determinant(a.submatrix(tuples[s], tuples[t]));
    return w;
}

static int tuple_index(const std::vector<std::vector<int>>& tuples, const std::vector<int>& t)
{
    for (std::size_t i = 0; i < tuples.size(); ++i)
        if (tuples[i] == t)
            return static_cast<int>(i);
    throw std::logic_error("tuple_index: tuple not found");
}

Vec eval_cochain(const Cochain& f, const Matrix& args)
{
    const int n = f.degree;
    if (args.cols() != n)
        throw std::invalid_argument("eval_cochain: wrong number of arguments");
    const int m = f.values.rows();
    if (n == 0)
        return f.values.col(0);
    auto tuples = wedge_tuples(args.rows(), n);
    Vec out(m, Rat(0));
    std::vector<int> all_cols(n);
    for (int j = 0; j < n; ++j)
        all_cols[j] = j;
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        Rat coef = determinant(args.submatrix(tuples[t], all_cols));
        if (coef == 0)
            continue;
        for (int r = 0; r < m; ++r)
            out[r] += coef * f.values(r, static_cast<int>(t));
    }
    return out;
}

Cochain CochainSpace::member(const Vec& coords) const
{
    if (static_cast<int>(coords.size()) != dim())
        throw std::invalid_argument("CochainSpace::member: coordinate mismatch");
    Vec flat(static_cast<std::size_t>(target_dim) * tuples.size(), Rat(0));
    for (int k = 0; k < dim(); ++k)
        if (coords[k] != 0)
            flat = vec_add(flat, vec_scale(coords[k], equivariant.basis_vector(k)));
    Cochain f;
    f.degree = degree;
    f.values = matrix_of_vec(target_dim, static_cast<int>(tuples.size()), flat);
    return f;
}

std::optional<Vec> CochainSpace::coords(const Cochain& f) const
{
    if (f.degree != degree || f.values.rows() != target_dim ||
        f.values.cols() != static_cast<int>(tuples.size()))
        throw std::invalid_argument("CochainSpace::coords: shape mismatch");
    return equivariant.coordinates(vec_of_matrix(f.values));
}

CochainSpace cochain_basis(const HomAction& act, int n)
{
    const int d = act.actor.dim;
    const int m = act.target.dim;
    CochainSpace cs;
    cs.degree = n;
    cs.target_dim = m;
    cs.tuples = wedge_tuples(d, n);
    const int w = static_cast<int>(cs.tuples.size());
    if (w == 0) {
        cs.equivariant = Subspace(0);
        return cs;
    }
    // F * wedge^n(alpha_L) = alpha_M * F, linear in the entries of F.
    Matrix wp = wedge_power(act.actor.alpha, n);
    const int unknowns = m * w;
    Matrix sys(unknowns, unknowns);
    int rowi = 0;
    for (int t = 0; t < w; ++t)
        for (int r = 0; r < m; ++r) {
            for (int s = 0; s < w; ++s)
                if (wp(s, t) != 0)
                    sys(rowi, s * m + r) += wp(s, t);
            for (int q = 0; q < m; ++q)
                if (act.target.alpha(r, q) != 0)
                    sys(rowi, t * m + q) -= act.target.alpha(r, q);
            ++rowi;
        }
    cs.equivariant = kernel_basis(sys);
    return cs;
}

static Matrix matrix_power(const Matrix& a, int n)
{
    Matrix p = Matrix::identity(a.rows());
    for (int i = 0; i < n; ++i)
        p = p * a;
    return p;
}

Cochain apply_differential(const HomAction& act, const Cochain& f)
{
    const int d = act.actor.dim;
    const int m = act.target.dim;
    const int n = f.degree;
    auto tuples_in = wedge_tuples(d, n);
    auto tuples_out = wedge_tuples(d, n + 1);
    Matrix alpha_n = matrix_power(act.actor.alpha, n);

    Cochain g;
    g.degree = n + 1;
    g.values = Matrix(m, static_cast<int>(tuples_out.size()));
    for (std::size_t t = 0; t < tuples_out.size(); ++t) {
        const std::vector<int>& T = tuples_out[t];
        Vec val(m, Rat(0));
        // Action part: (-1)^{i+1} alpha^n(x_i) . f(.. x_i omitted ..).
        for (int i = 0; i < n + 1; ++i) {
            std::vector<int> rest;
            for (int j = 0; j < n + 1; ++j)
                if (j != i)
                    rest.push_back(T[j]);
            Vec fv = n == 0 ? f.values.col(0) : f.values.col(tuple_index(tuples_in, rest));
            Vec term = act.apply(alpha_n.col(T[i]), fv);
            val = i % 2 == 0 ? vec_add(val, term) : vec_sub(val, term);
        }
        // Bracket part: (-1)^{i+j} f([x_i,x_j] ^ alpha(others)).
        for (int i = 0; i < n + 1; ++i)
            for (int j = i + 1; j < n + 1; ++j) {
                Matrix args(d, n);
                args.set_col(0, act.actor.bracket_basis(T[i], T[j]));
                int cidx = 1;
                for (int k = 0; k < n + 1; ++k)
                    if (k != i && k != j)
                        args.set_col(cidx++, act.actor.alpha.col(T[k]));
                Vec term = eval_cochain(f, args);
                // sign (-1)^{(i+1)+(j+1)} = (-1)^{i+j}
                val = (i + j) % 2 == 0 ? vec_add(val, term) : vec_sub(val, term);
            }
        g.values.set_col(static_cast<int>(t), val);
    }
    return g;
}

Matrix differential_matrix(const HomAction& act, int n)
{
    CochainSpace cn = cochain_basis(act, n);
    CochainSpace cn1 = cochain_basis(act, n + 1);
    Matrix dmat(cn1.dim(), cn.dim());
    for (int k = 0; k < cn.dim(); ++k) {
        Vec unit(cn.dim(), Rat(0));
        unit[k] = 1;
        Cochain img = apply_differential(act, cn.member(unit));
        auto coords = cn1.coords(img);
        if (!coords)
            throw std::logic_error("differential_matrix: image is not equivariant");
        dmat.set_col(k, *coords);
    }
    return dmat;
}

CohomologyGroup cohomology_group(const HomAction& act, int n)
{
    CohomologyGroup g;
    g.degree = n;
    CochainSpace cn = cochain_basis(act, n);
    g.cochain_dim = cn.dim();
    Matrix dn = differential_matrix(act, n);
    g.cocycles = kernel_basis(dn);
    if (n == 0) {
        g.coboundaries = Subspace(cn.dim());
    } else {
        Matrix dn1 = differential_matrix(act, n - 1);
        g.coboundaries = Subspace::span_columns(dn1);
    }
    g.cocycle_dim = g.cocycles.dim();
    g.coboundary_dim = g.coboundaries.dim();
    g.dim = g.cocycle_dim - g.coboundary_dim;
    for (const Vec& rep : g.coboundaries.quotient_representatives(g.cocycles))
        g.representatives.push_back(cn.member(rep));
    return g;
}

bool is_cocycle(const HomAction& act, const Cochain& f)
{
    CochainSpace cn = cochain_basis(act, f.degree);
    if (!cn.coords(f))
        throw std::invalid_argument("is_cocycle: cochain is not equivariant");
    return apply_differential(act, f).values.is_zero();
}

std::optional<Cochain> is_coboundary(const HomAction& act, const Cochain& f)
{
    CochainSpace cn = cochain_basis(act, f.degree);
    auto coords = cn.coords(f);
    if (!coords)
        throw std::invalid_argument("is_coboundary: cochain is not equivariant");
    if (f.degree == 0) {
        if (vec_is_zero(*coords)) {
            Cochain zero;
            zero.degree = 0;
            zero.values = Matrix(act.target.dim, 1);
            return zero;  // artificial preimage of the zero invariant
        }
        return std::nullopt;
    }
    Matrix dprev = differential_matrix(act, f.degree - 1);
    auto sol = solve_affine(dprev, *coords);
    if (!sol)
        return std::nullopt;
    CochainSpace cprev = cochain_basis(act, f.degree - 1);
    return cprev.member(*sol);
}

std::optional<Cochain> cohomologous(const HomAction& act, const Cochain& w, const Cochain& wp)
{
    if (w.degree != wp.degree)
        throw std::invalid_argument("cohomologous: degree mismatch");
    if (!is_cocycle(act, w) || !is_cocycle(act, wp))
        throw std::invalid_argument("cohomologous: inputs are not cocycles");
    Cochain diff;
    diff.degree = w.degree;
    diff.values = w.values - wp.values;
    return is_coboundary(act, diff);
}

Subspace invariants(const HomAction& act)
{
    const int m = act.target.dim;
    Matrix sys = act.target.alpha - Matrix::identity(m);
    for (int i = 0; i < act.actor.dim; ++i) {
        Matrix ai(m, m);
        for (int q = 0; q < m; ++q)
            for (int r = 0; r < m; ++r)
                ai(r, q) = act.act(i, q, r);
        sys = Matrix::vstack(sys, ai);
    }
    return kernel_basis(sys);
}

}  // namespace homlie
