#include "homlie/free_homlie.hpp"

#include <deque>

namespace homlie {

HomSet HomSet::with_identity(std::vector<std::string> names)
{
    HomSet x;
    x.alpha.resize(names.size());
    for (std::size_t i = 0; i < names.size(); ++i)
        x.alpha[i] = static_cast<int>(i);
    x.names = std::move(names);
    return x;
}

int WordArena::graft(int p, int a, int q, int b) const
{
    int offset = 0;
    for (int pp = 1; pp < p; ++pp)
        offset += count(pp) * count(p + q - pp);
    return offset + a * count(q) + b;
}

std::string WordArena::name(const HomSet& x, int len, int idx) const
{
    const Node& w = levels[len - 1][idx];
    if (w.left_len == 0)
        return x.names[w.left];
    int q = len - w.left_len;
    return "(" + name(x, w.left_len, w.left) + "." + name(x, q, w.right) + ")";
}

WordArena free_words(const HomSet& x, int max_len)
{
    if (max_len < 1)
        throw std::invalid_argument("free_words: max_len must be at least 1");
    WordArena a;
    a.levels.resize(max_len);
    a.alpha_level.resize(max_len);
    for (int i = 0; i < x.size(); ++i) {
        a.levels[0].push_back({0, i, 0});
        a.alpha_level[0].push_back(x.alpha[i]);
    }
    for (int n = 2; n <= max_len; ++n) {
        for (int p = 1; p < n; ++p) {
            int q = n - p;
            for (int l = 0; l < a.count(p); ++l)
                for (int r = 0; r < a.count(q); ++r)
                    a.levels[n - 1].push_back({p, l, r});
        }
        a.alpha_level[n - 1].resize(a.levels[n - 1].size());
        for (std::size_t i = 0; i < a.levels[n - 1].size(); ++i) {
            const WordArena::Node& w = a.levels[n - 1][i];
            int q = n - w.left_len;
            int la = a.alpha_level[w.left_len - 1][w.left];
            int ra = a.alpha_level[q - 1][w.right];
            a.alpha_level[n - 1][i] = la < 0 || ra < 0 ? -1 : a.graft(w.left_len, la, q, ra);
        }
    }
    return a;
}

boost::multiprecision::mpz_int free_word_count(int set_size, int n)
{
    // Catalan(n-1) * set_size^n, with Catalan(m) = C(2m, m) / (m + 1).
    const int m = n - 1;
    boost::multiprecision::mpz_int binom = 1;
    for (int i = 1; i <= m; ++i)
        binom = binom * (m + i) / i;  // stays integral: partial products are binomials
    boost::multiprecision::mpz_int cat = binom / (m + 1);
    boost::multiprecision::mpz_int pw = 1;
    for (int k = 0; k < n; ++k)
        pw *= set_size;
    return cat * pw;
}

MagmaExtension magma_univ_extend(const HomSet& x, const WordArena& words,
                                 const std::vector<Vec>& gen_images,
                                 const std::function<Vec(const Vec&, const Vec&)>& prod,
                                 const Matrix& alpha_n)
{
    MagmaExtension out;
    out.input_hom_set_morphism = true;
    for (int i = 0; i < x.size(); ++i) {
        Vec expected = x.alpha[i] < 0 ? Vec(gen_images[i].size(), Rat(0)) : gen_images[x.alpha[i]];
        if (alpha_n.apply(gen_images[i]) != expected) {
            out.input_hom_set_morphism = false;
            break;
        }
    }
    if (!out.input_hom_set_morphism)
        throw std::invalid_argument("magma_univ_extend: f is not a Hom-set morphism");
    out.table = evaluate_words(words, gen_images, prod);
    out.commutes_with_alpha = true;
    for (std::size_t lvl = 0; lvl < words.levels.size() && out.commutes_with_alpha; ++lvl)
        for (std::size_t i = 0; i < words.levels[lvl].size(); ++i) {
            int ai = words.alpha_level[lvl][i];
            Vec expected = ai < 0 ? Vec(out.table[lvl][i].size(), Rat(0)) : out.table[lvl][ai];
            if (alpha_n.apply(out.table[lvl][i]) != expected) {
                out.commutes_with_alpha = false;
                break;
            }
        }
    return out;
}

namespace {

// Forward-elimination span with recorded pivots; rows keep zeros at all
// earlier pivots, so a single reduction pass decides membership.
class IncrementalSpan {
public:
    explicit IncrementalSpan(int ambient) : ambient_(ambient) {}

    bool add(Vec v)
    {
        reduce(v);
        int p = -1;
        for (int i = 0; i < ambient_; ++i)
            if (v[i] != 0) {
                p = i;
                break;
            }
        if (p < 0)
            return false;
        Rat inv = Rat(1) / v[p];
        for (int i = p; i < ambient_; ++i)
            v[i] *= inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    const std::vector<Vec>& rows() const { return rows_; }

private:
    void reduce(Vec& v) const
    {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            Rat c = v[pivots_[k]];
            if (c == 0)
                continue;
            for (int i = pivots_[k]; i < ambient_; ++i)
                if (rows_[k][i] != 0)
                    v[i] -= c * rows_[k][i];
        }
    }

    int ambient_;
    std::vector<Vec> rows_;
    std::vector<int> pivots_;
};

}  // namespace

FreeTruncation truncated_free_homlie(const HomSet& x, int bound)
{
    FreeTruncation f;
    f.x = x;
    f.bound = bound;
    f.words = free_words(x, bound);

    std::vector<IncrementalSpan> spans;
    for (int n = 1; n <= bound; ++n)
        spans.emplace_back(f.words.count(n));
    std::deque<std::pair<int, Vec>> work;
    auto push = [&](int n, Vec v) {
        if (spans[n - 1].add(v))
            work.emplace_back(n, std::move(v));
    };

    // Skew instances a.b + b.a on word pairs.
    for (int n = 2; n <= bound; ++n)
        for (int p = 1; p < n; ++p) {
            int q = n - p;
            for (int a = 0; a < f.words.count(p); ++a)
                for (int b = 0; b < f.words.count(q); ++b) {
                    Vec v(f.words.count(n), Rat(0));
                    v[f.words.graft(p, a, q, b)] += 1;
                    v[f.words.graft(q, b, p, a)] += 1;
                    push(n, std::move(v));
                }
        }
    // Twisted Jacobi instances a(a).(bc) + a(c).(ab) + a(b).(ca).
    for (int n = 3; n <= bound; ++n)
        for (int p = 1; p <= n - 2; ++p)
            for (int q = 1; q <= n - p - 1; ++q) {
                int r = n - p - q;
                for (int a = 0; a < f.words.count(p); ++a)
                    for (int b = 0; b < f.words.count(q); ++b)
                        for (int c = 0; c < f.words.count(r); ++c) {
                            Vec v(f.words.count(n), Rat(0));
                            int aa = f.words.alpha_level[p - 1][a];
                            int ab = f.words.alpha_level[q - 1][b];
                            int ac = f.words.alpha_level[r - 1][c];
                            if (aa >= 0)
                                v[f.words.graft(p, aa, q + r, f.words.graft(q, b, r, c))] += 1;
                            if (ac >= 0)
                                v[f.words.graft(r, ac, p + q, f.words.graft(p, a, q, b))] += 1;
                            if (ab >= 0)
                                v[f.words.graft(q, ab, r + p, f.words.graft(r, c, p, a))] += 1;
                            push(n, std::move(v));
                        }
            }
    // Close under left and right multiplication by basis words.
    while (!work.empty()) {
        auto [d, v] = work.front();
        work.pop_front();
        for (int k = 1; d + k <= bound; ++k) {
            for (int u = 0; u < f.words.count(k); ++u) {
                Vec lv(f.words.count(d + k), Rat(0));
                Vec rv(f.words.count(d + k), Rat(0));
                for (int t = 0; t < f.words.count(d); ++t)
                    if (v[t] != 0) {
                        lv[f.words.graft(k, u, d, t)] += v[t];
                        rv[f.words.graft(d, t, k, u)] += v[t];
                    }
                push(d + k, std::move(lv));
                push(d + k, std::move(rv));
            }
        }
    }

    int total = 0;
    f.offset.assign(bound + 1, 0);
    for (int n = 1; n <= bound; ++n) {
        f.relations.push_back(Subspace::span(f.words.count(n), spans[n - 1].rows()));
        f.components.emplace_back(f.relations.back());
        std::vector<int> reps = f.components.back().representative_indices();
        f.basis_words.push_back(reps);
        f.offset[n] = total;
        total += static_cast<int>(reps.size());
    }

    // Assemble the truncation: representative words as basis, brackets by
    // grafting and reducing, everything above the bound cut to zero.
    f.algebra.dim = total;
    f.algebra.alpha = Matrix(total, total);
    f.algebra.c = Tensor3(total, total, total);
    for (int n = 1; n <= bound; ++n) {
        const QuotientSpace& q = f.components[n - 1];
        for (int j = 0; j < q.dim(); ++j) {
            int wj = f.basis_words[n - 1][j];
            int aj = f.words.alpha_level[n - 1][wj];
            if (aj < 0)
                continue;  // generator twisted to zero
            Vec img(f.words.count(n), Rat(0));
            img[aj] = 1;
            Vec cls = q.proj().apply(img);
            for (int r = 0; r < q.dim(); ++r)
                f.algebra.alpha(f.offset[n] + r, f.offset[n] + j) = cls[r];
        }
    }
    for (int p = 1; p <= bound; ++p)
        for (int q = 1; q <= bound; ++q) {
            if (p + q > bound)
                continue;
            const QuotientSpace& qs = f.components[p + q - 1];
            for (int i = 0; i < f.degree_dim(p); ++i)
                for (int j = 0; j < f.degree_dim(q); ++j) {
                    int wi = f.basis_words[p - 1][i];
                    int wj = f.basis_words[q - 1][j];
                    Vec img(f.words.count(p + q), Rat(0));
                    img[f.words.graft(p, wi, q, wj)] = 1;
                    Vec cls = qs.proj().apply(img);
                    Vec full(total, Rat(0));
                    for (int r = 0; r < qs.dim(); ++r)
                        full[f.offset[p + q] + r] = cls[r];
                    f.algebra.c.set_at(f.offset[p] + i, f.offset[q] + j, full);
                }
        }
    return f;
}

FreeDegreeBasis free_homlie_degree_basis(const HomSet& x, int n)
{
    FreeTruncation f = truncated_free_homlie(x, n);
    FreeDegreeBasis out;
    out.dimension = f.degree_dim(n);
    out.word_indices = f.basis_words[n - 1];
    for (int idx : out.word_indices)
        out.word_names.push_back(f.words.name(x, n, idx));
    out.relations = f.relations[n - 1];
    return out;
}

Vec FreeTruncation::embed_class(int n, const Vec& word_vec) const
{
    Vec cls = components[n - 1].proj().apply(word_vec);
    Vec full(algebra.dim, Rat(0));
    for (std::size_t r = 0; r < cls.size(); ++r)
        full[offset[n] + static_cast<int>(r)] = cls[r];
    return full;
}

namespace {

struct EvalData {
    std::vector<Matrix> eval;  // per degree: target dim x word count
    Matrix full;               // target dim x truncation dim
    bool relations_vanish = true;
};

EvalData evaluate_on_truncation(const FreeTruncation& f, const HomLieAlgebra& target,
                                const std::vector<Vec>& gen_images)
{
    auto table = evaluate_words(f.words, gen_images,
                                [&](const Vec& a, const Vec& b) { return target.bracket(a, b); });
    EvalData out;
    for (int n = 1; n <= f.bound; ++n) {
        Matrix ev(target.dim, f.words.count(n));
        for (int t = 0; t < f.words.count(n); ++t)
            ev.set_col(t, table[n - 1][t]);
        out.eval.push_back(ev);
    }
    for (int n = 1; n <= f.bound && out.relations_vanish; ++n)
        for (int k = 0; k < f.relations[n - 1].dim(); ++k)
            if (!vec_is_zero(out.eval[n - 1].apply(f.relations[n - 1].basis_vector(k)))) {
                out.relations_vanish = false;
                break;
            }
    out.full = Matrix(target.dim, f.algebra.dim);
    for (int n = 1; n <= f.bound; ++n)
        for (int j = 0; j < f.degree_dim(n); ++j)
            out.full.set_col(f.offset[n] + j, out.eval[n - 1].col(f.basis_words[n - 1][j]));
    return out;
}

bool brackets_preserved_within_bound(const FreeTruncation& f, const HomLieAlgebra& target,
                                     const Matrix& full)
{
    for (int p = 1; p <= f.bound; ++p)
        for (int q = 1; q + p <= f.bound; ++q)
            for (int i = 0; i < f.degree_dim(p); ++i)
                for (int j = 0; j < f.degree_dim(q); ++j) {
                    Vec lhs =
                        full.apply(f.algebra.bracket_basis(f.offset[p] + i, f.offset[q] + j));
                    Vec rhs = target.bracket(full.col(f.offset[p] + i), full.col(f.offset[q] + j));
                    if (lhs != rhs)
                        return false;
                }
    return true;
}

}  // namespace

UnivExtendResult free_univ_extend(const FreeTruncation& f, const HomLieAlgebra& b,
                                  const std::vector<Vec>& gen_images)
{
    UnivExtendResult out;
    out.input_hom_set_morphism = true;
    for (int i = 0; i < f.x.size(); ++i) {
        Vec expected =
            f.x.alpha[i] < 0 ? Vec(gen_images[i].size(), Rat(0)) : gen_images[f.x.alpha[i]];
        if (b.alpha.apply(gen_images[i]) != expected) {
            out.input_hom_set_morphism = false;
            break;
        }
    }
    if (!out.input_hom_set_morphism)
        throw std::invalid_argument("free_univ_extend: images do not form a Hom-set morphism");
    EvalData ev = evaluate_on_truncation(f, b, gen_images);
    out.relations_vanish = ev.relations_vanish;
    for (int n = 1; n <= f.bound; ++n) {
        Matrix d(b.dim, f.degree_dim(n));
        for (int j = 0; j < f.degree_dim(n); ++j)
            d.set_col(j, ev.full.col(f.offset[n] + j));
        out.per_degree.push_back(d);
    }
    out.full = ev.full;
    out.alpha_intertwines = ev.full * f.algebra.alpha == b.alpha * ev.full;
    out.brackets_preserved = brackets_preserved_within_bound(f, b, ev.full);
    return out;
}

FreeH2Probe free_h2_probe(const FreeTruncation& f, const AbelianExtension& ext)
{
    if (!(ext.L == f.algebra))
        throw std::invalid_argument("free_h2_probe: extension base is not the truncation");
    FreeH2Probe out;
    std::vector<Vec> gen_images;
    for (int i = 0; i < f.x.size(); ++i)
        gen_images.push_back(ext.sigma.col(f.offset[1] + i));
    EvalData ev = evaluate_on_truncation(f, ext.E, gen_images);
    out.relations_vanish = ev.relations_vanish;
    out.psi = ev.full;
    out.splits_projection = ext.pi * out.psi == Matrix::identity(f.algebra.dim);
    out.alpha_compatible = out.psi * f.algebra.alpha == ext.E.alpha * out.psi;
    out.brackets_within_bound = brackets_preserved_within_bound(f, ext.E, out.psi);
    return out;
}

}  // namespace homlie
