#pragma once

#include <functional>
#include <string>

#include "homlie/extension.hpp"

namespace homlie {

// A finite set with a self-map. alpha[i] = -1 sends the generator to zero
// once linearized (the degenerate twists the graded fixtures need).
struct HomSet {
    std::vector<std::string> names;
    std::vector<int> alpha;

    int size() const { return static_cast<int>(names.size()); }
    static HomSet with_identity(std::vector<std::string> names);
};

// Non-associative words over a Hom-set, graded by length. Words of length n
// are enumerated by split point first (left length 1..n-1), then left index,
// then right index; this fixes the basis order of each graded piece.
struct WordArena {
    struct Node {
        int left_len = 0;  // 0 marks a leaf
        int left = 0;      // leaf label for leaves, index into the left level otherwise
        int right = 0;
    };
    std::vector<std::vector<Node>> levels;      // levels[n-1] = words of length n
    std::vector<std::vector<int>> alpha_level;  // leaf-wise self-map per level; -1 = zero

    int count(int len) const { return static_cast<int>(levels[len - 1].size()); }
    // Index of the product of word a (length p) and word b (length q)
    // inside level p + q.
    int graft(int p, int a, int q, int b) const;
    std::string name(const HomSet& x, int len, int idx) const;
};

WordArena free_words(const HomSet& x, int max_len);

// Catalan(n-1) * |X|^n, the size of the length-n level.
boost::multiprecision::mpz_int free_word_count(int set_size, int n);

// Recursive evaluation of words in any magma: leaves through gen_images,
// grafts through prod. Returns the full table of values by level.
template <class Elt, class Prod>
std::vector<std::vector<Elt>> evaluate_words(const WordArena& words,
                                             const std::vector<Elt>& gen_images, Prod prod)
{
    std::vector<std::vector<Elt>> table;
    for (std::size_t lvl = 0; lvl < words.levels.size(); ++lvl) {
        std::vector<Elt> row;
        row.reserve(words.levels[lvl].size());
        for (const WordArena::Node& w : words.levels[lvl]) {
            if (w.left_len == 0)
                row.push_back(gen_images[w.left]);
            else {
                int p = w.left_len, q = static_cast<int>(lvl) + 1 - p;
                row.push_back(prod(table[p - 1][w.left], table[q - 1][w.right]));
            }
        }
        table.push_back(std::move(row));
    }
    return table;
}

// The unique magma morphism extending a Hom-set map, with its checks.
struct MagmaExtension {
    bool input_hom_set_morphism = false;  // f∘alpha_X = alpha_N∘f on generators
    bool commutes_with_alpha = false;     // F∘alpha = alpha_N∘F on every word
    std::vector<std::vector<Vec>> table;
};

MagmaExtension magma_univ_extend(const HomSet& x, const WordArena& words,
                                 const std::vector<Vec>& gen_images,
                                 const std::function<Vec(const Vec&, const Vec&)>& prod,
                                 const Matrix& alpha_n);

// Degree-wise data of the free Hom-Lie algebra truncated at word length
// `bound`: the graded relation pieces R_n (skew and twisted-Jacobi instances
// closed under multiplication by words), the quotient coordinates, and the
// assembled truncation with all brackets of total degree > bound set to 0.
struct FreeTruncation {
    HomSet x;
    int bound = 0;
    WordArena words;
    std::vector<Subspace> relations;            // R_n inside the length-n word space
    std::vector<QuotientSpace> components;      // word space / R_n
    std::vector<std::vector<int>> basis_words;  // representative word indices per degree
    HomLieAlgebra algebra;                      // the truncation
    std::vector<int> offset;                    // start of degree n block (1-based index n)

    int degree_dim(int n) const { return components[n - 1].dim(); }
    // Coordinates of a word-space vector of degree n in the truncation.
    Vec embed_class(int n, const Vec& word_vec) const;
};

FreeTruncation truncated_free_homlie(const HomSet& x, int bound);

struct FreeDegreeBasis {
    int dimension = 0;
    std::vector<int> word_indices;        // representative words in the arena
    std::vector<std::string> word_names;
    Subspace relations;                   // R_n inside the degree-n word space
};

// The degree-n component of the free Hom-Lie algebra, as coset
// representatives of span(X_n) / R_n.
FreeDegreeBasis free_homlie_degree_basis(const HomSet& x, int n);

struct UnivExtendResult {
    bool input_hom_set_morphism = false;
    bool relations_vanish = false;  // every R_n generator maps to 0 in B
    bool alpha_intertwines = false;
    bool brackets_preserved = false;  // on basis pairs of total degree <= bound
    std::vector<Matrix> per_degree;   // B.dim x degree_dim(n)
    Matrix full;                      // B.dim x truncation dim
    bool ok() const
    {
        return input_hom_set_morphism && relations_vanish && alpha_intertwines &&
               brackets_preserved;
    }
};

// The morphism out of the truncation determined by generator images in B.
UnivExtendResult free_univ_extend(const FreeTruncation& f, const HomLieAlgebra& b,
                                  const std::vector<Vec>& gen_images);

struct FreeH2Probe {
    bool relations_vanish = false;
    bool splits_projection = false;   // pi∘psi = Id on the truncation
    bool alpha_compatible = false;    // psi∘alpha = alpha_E∘psi
    bool brackets_within_bound = false;
    Matrix psi;
    bool ok() const
    {
        return relations_vanish && splits_projection && alpha_compatible &&
               brackets_within_bound;
    }
};

// Splitting of an abelian extension of the truncation, built on generators
// through the designated section and extended by bracket evaluation. The
// verification covers everything visible below the truncation bound.
FreeH2Probe free_h2_probe(const FreeTruncation& f, const AbelianExtension& ext);

}  // namespace homlie
