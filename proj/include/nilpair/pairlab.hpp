#ifndef NILPAIR_PAIRLAB_HPP
#define NILPAIR_PAIRLAB_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nilpair/engine.hpp"

// Explicit nilpotent pairs and quadruples in the classical algebras, plus
// verification routines for their structural properties: classification,
// filtrations and limits, Richardson tests, dual pairs, theta involutions,
// excellence and sheet sections.

namespace nilpair {

struct Quadruple {
    std::shared_ptr<const Model> model;
    QMat e1, e2, h1, h2;
    std::string name;                  // provenance tag
    std::optional<QMat> extra_x;       // the extra centralizer vector, when printed
    std::optional<SL2Triple> t1, t2;   // commuting triples, when built rectangular

    const Model& g() const { return *model; }
};

// The two almost principal sp4 pairs built from root vectors
// (alpha = e1-e2, beta = 2e2): first the Z-type pair (e_{a+b}, e_{2a+b}),
// second the non-Z-type pair (e_{2a+b}, e_b).
std::pair<Quadruple, Quadruple> construct_sp4_examples();

// The sp_{4n} series: e1(v_j) = v_{j-2} (j >= 2n+1), -v_{j-2} (3 <= j <= 2n);
// e2(v_{2j}) = v_{2j-3} (j >= n+1), -v_{2j-3} (2 <= j <= n); x: v_{4n-1} -> v_2.
Quadruple construct_sp4n_series(int n);

// e1 = E13, e2 = E23, h1 = diag(2/3,-1/3,-1/3), h2 = diag(-1/3,2/3,-1/3).
Quadruple construct_sl3_pair();

// Tensor pair in sl_{nm}: e1 a single Jordan block on the first factor,
// e2 on the second; principal, rectangular.
Quadruple construct_rect_pn_sl(int n, int m);

// Regular nilpotents of sp_{2k} + sp_{2(n-k)} inside sp_{2n}; almost
// principal of non-Z type, rectangular.
Quadruple construct_rect_apn_sp(int k, int n);

enum class PairKind { principal, almost_principal, other };
enum class AlmostSubtype { z_type, non_z_type };

struct PairClassification {
    PairKind kind = PairKind::other;
    std::optional<AlmostSubtype> subtype;
    std::optional<std::pair<Rat, Rat>> extra_biweight;
    int dim_z = 0;
    int rank_g = 0;
};

PairClassification classify_pair(const Quadruple& q);

std::string kind_name(PairKind k);
std::string subtype_name(AlmostSubtype s);

struct CheckResult {
    std::string name;
    std::string rule;  // which structural identity is being checked
    bool pass = false;
    std::string witness;  // counterexample data on failure
};

struct VerifyReport {
    std::string fixture;
    std::vector<CheckResult> checks;
    bool all_pass() const;
    const CheckResult* find(const std::string& name) const;
};

// Structural checks (a)-(f): Cartan centralizer, z(e)_{0,0} = 0, regularity
// in the opposite Levi, limit dimension identities, centre identification,
// quadrant grading of z(e).
VerifyReport verify_structure(const Quadruple& q, uint64_t seed = kDefaultSeed);

struct ThetaReport {
    Subspace fixed;
    bool subalgebra = false;
    bool semisimple = false;
    int rank_fixed = 0;
    int dim_z_fixed = 0;
    bool pair_principal_inside = false;
};

// Involution +1 on integral bi-graded pieces, -1 on half-integral pieces;
// only defined for non-Z almost principal pairs.
ThetaReport theta_involution(const Quadruple& q, uint64_t seed = kDefaultSeed);

// [p_i, e_i] = (p_i)^nil as subspaces, p_i the half-plane parabolic.
bool richardson_check(const Quadruple& q, int i);

// dim{(n1,n2) in n+n : [h1,n2] = [h2,n1]} = dim n
bool verify_commuting_deformation_dim(const Model& g, const QMat& h1, const QMat& h2,
                                      const Subspace& nil);

enum class RectVerdict { rectangular, not_shown };

struct DualPairReport {
    Subspace k1, k2;
    bool hypotheses_ok = false;
    std::string failed_hypothesis;
    bool commute = false;
    bool mutual = false;
    bool reductive = false;
    RectVerdict rectangular = RectVerdict::not_shown;
    bool graded_surjective = false;  // (ad e2)_j : (k1)_j -> (k1)_{j+1} onto, j >= 0
    bool center_trivial = false;
};

DualPairReport dual_pair_check(const Quadruple& q, uint64_t seed = kDefaultSeed);

// Semi-principal rectangular pair in sp_{2(nm+l)}: e2 of type (m^{2n}, 1^{2l}),
// e1 of type ((2n)^m, tail), tail a partition of 2l into distinct even parts
// none equal to 2n; (n,l) not in {(1,1),(2,2)}.
struct SprPair {
    std::shared_ptr<const Model> model;
    QMat e1, e2;
    SL2Triple t1, t2;
    std::string name;
    const Model& g() const { return *model; }
};

SprPair construct_spr_sp(int m, int n, int l, const Partition& tail);

VerifyReport verify_spr(const SprPair& s, uint64_t seed = kDefaultSeed);

struct MatrixExcellence {
    SL2Triple triple;
    Subspace levi, centre_levi, k, kv;
    bool is_even = false;
    int dim_centre_levi = 0;
    int rank_kv = 0;
    bool verdict = false;  // even and dim c = rk kv
    int dim_z2_e = 0;      // dim of the centre of z(e)
    std::vector<CheckResult> checks;  // structural consequences when excellent
    bool checks_pass() const;
};

MatrixExcellence excellent_check_matrix(const Model& g, const QMat& e,
                                        uint64_t seed = kDefaultSeed);

struct SheetSample {
    QVec coeffs;
    long dim_z = 0;
    bool semisimple_in_kv = false;
};

struct SheetSection {
    QMat base;
    Subspace direction;  // z_{kv}(f)
    int dim_section = 0;
    long dim_z_base = 0;
    long orbit_dim = 0;
    std::vector<SheetSample> samples;
    bool constant_orbit_dim = false;
};

// Section e + z_{kv}(f) of the sheet through an excellent e, with a
// deterministic rational sampling check of constant orbit dimension.
SheetSection sheet_section(const Model& g, const QMat& e, int num_samples = 10,
                           uint64_t seed = kDefaultSeed);

std::string report_to_json(const VerifyReport& r);

}  // namespace nilpair

#endif
