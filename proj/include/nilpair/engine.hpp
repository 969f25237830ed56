#ifndef NILPAIR_ENGINE_HPP
#define NILPAIR_ENGINE_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "nilpair/partition.hpp"
#include "nilpair/rational.hpp"

// Exact matrix realizations of the classical Lie algebras: brackets,
// centralizers, gradings, sl2-triple completion, subalgebra diagnostics.
// All arithmetic is rational; there are no tolerances anywhere.

namespace nilpair {

constexpr uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ULL;

struct Model {
    Family fam;
    int n = 0;   // ambient matrix size
    QMat form;   // invariant bilinear form J (0x0 for SL)
    std::vector<QMat> basis;

    int dim() const { return static_cast<int>(basis.size()); }
    int rank() const { return ClassicalFamily(fam, n).rank(); }

    bool contains(const QMat& m) const;
    QVec coords(const QMat& m) const;  // throws error("element_not_in_algebra")
    QMat from_coords(const QVec& c) const;
    QMat ad(const QMat& x) const;  // dim x dim matrix of ad x in the basis
};

// Standard models: SL_n traceless matrices; SO_n with the antidiagonal
// symmetric form; SP_2n with the antidiagonal sign-split form
// J[i][2n+1-i] = +1 (i <= n), -1 (i > n).
Model build_model(Family f, int size);
Model build_model(const ClassicalFamily& fam);

// Model over a caller-supplied form (fixtures built in a natural basis).
Model build_model_with_form(Family f, const QMat& form);

using Subspace = RowSpace;  // coordinates relative to Model::basis

Subspace full_space(const Model& g);
Subspace span_of(const Model& g, const std::vector<QMat>& elements);
std::vector<QMat> subspace_matrices(const Model& g, const Subspace& s);

// z_g(elements): simultaneous centralizer, computed by iterated exact kernels.
Subspace centralizer(const Model& g, const std::vector<QMat>& elements);
// { x in a : [s, x] = 0 for all s }
Subspace centralizer_in(const Model& g, const Subspace& a, const std::vector<QMat>& elements);
Subspace centralizer_of_subspace(const Model& g, const Subspace& s);
Subspace center_of(const Model& g, const Subspace& a);

bool bracket_closed(const Model& g, const Subspace& a);
bool is_abelian(const Model& g, const Subspace& a);

bool is_nilpotent_elem(const Model& g, const QMat& x);    // x^n = 0 as a matrix
bool is_semisimple_elem(const Model& g, const QMat& x);   // squarefree min poly of ad x

Partition jordan_type(const QMat& x);  // of a nilpotent matrix

// Nilpotent of Jordan type p inside the standard model, built blockwise in a
// form-adapted basis and conjugated into the model's form.
QMat nilpotent_from_partition(const Model& g, const Partition& p);

struct SL2Triple {
    QMat e, h, f;
};

// Completes e to an sl2-triple with h in the image of ad e; exact.
SL2Triple jacobson_morozov(const Model& g, const QMat& e);

// Same, but inside the subalgebra a (bracket-closed). Empty if the linear
// systems have no solution within a.
std::optional<SL2Triple> try_triple_in(const Model& g, const Subspace& a, const QMat& e);

bool check_quadruple(const Model& g, const QMat& e1, const QMat& e2, const QMat& h1,
                     const QMat& h2);

// eigenvalues of x on the defining module; error("non_half_integer_spectrum")
// unless the minimal polynomial splits over Q with roots in (1/2)Z
std::vector<Rat> module_spectrum(const QMat& x);

// grading of g under ad h (h semisimple, half-integer spectrum)
std::map<Rat, Subspace> grading(const Model& g, const QMat& h);

struct BiGrading {
    std::map<std::pair<Rat, Rat>, Subspace> parts;
    int total_dim() const;
    // (q1, q2, dim) triples sorted lexicographically
    std::vector<std::tuple<Rat, Rat, int>> dump() const;
};

BiGrading bigrading(const Model& g, const QMat& h1, const QMat& h2);

// M(i,*) = { x in M : (ad e)^{i+1} x = 0 }
Subspace e_filtration(const Model& g, const QMat& e, const Subspace& m, int i);
// lim_e M = sum_i (ad e)^i M(i,*)
Subspace e_limit(const Model& g, const QMat& e, const Subspace& m);

// Generic-element rank: min dim z_a(x) over seeded pseudo-random samples,
// >= 8 samples, minimum stable across the last 4. Policy is probabilistic,
// per-sample arithmetic exact.
int rank_of_subalgebra(const Model& g, const Subspace& a, uint64_t seed = kDefaultSeed);

bool is_semisimple(const Model& g, const Subspace& a);

bool is_regular_nilpotent_in(const Model& g, const Subspace& a, const QMat& e,
                             uint64_t seed = kDefaultSeed);
bool is_distinguished_in(const Model& g, const Subspace& a, const QMat& e);

// eigenvalues of ad h~ on g all even
bool is_even_element(const Model& g, const QMat& e, const QMat& h);

long centralizer_dim_formula(const ClassicalFamily& fam, const Partition& p);

}  // namespace nilpair

#endif
