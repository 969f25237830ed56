#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "nilpair/engine.hpp"
#include "nilpair/pairlab.hpp"
#include "nilpair/serialize.hpp"

using namespace nilpair;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// complete (e, h) to a triple by solving for f; empty if inconsistent
std::optional<QMat> close_triple(const Model& g, const QMat& e, const QMat& h) {
    QMat ade = g.ad(e), adh = g.ad(h);
    const int d = g.dim();
    QMat sys(2 * d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            sys.at(i, j) = ade.at(i, j);
            sys.at(d + i, j) = adh.at(i, j) + (i == j ? Rat(2) : Rat(0));
        }
    QVec rhs(2 * d, Rat(0));
    QVec hc = g.coords(h);
    for (int i = 0; i < d; ++i) rhs[i] = hc[i];
    auto fc = solve(sys, rhs);
    if (!fc) return std::nullopt;
    return g.from_coords(*fc);
}
}  // namespace

TEST_CASE("model dimensions") {
    CHECK(build_model(Family::SL, 3).dim() == 8);
    CHECK(build_model(Family::SP, 4).dim() == 10);
    CHECK(build_model(Family::SO, 7).dim() == 21);
    CHECK(build_model(Family::SO, 8).dim() == 28);
    CHECK(build_model(Family::SP, 12).dim() == 78);
}

TEST_CASE("basis satisfies the defining relations and coords round trip") {
    std::mt19937_64 rng(7);
    for (auto g : {build_model(Family::SL, 4), build_model(Family::SP, 6),
                   build_model(Family::SO, 7)}) {
        QVec c(g.dim());
        for (auto& x : c) {
            x = Rat(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1);
            x.canonicalize();
        }
        QMat m = g.from_coords(c);
        CHECK(g.contains(m));
        CHECK(g.coords(m) == c);
    }
}

TEST_CASE("bracket closure and Jacobi identity") {
    // exhaustive on the small models, sampled triples on sp12
    for (auto g : {build_model(Family::SL, 3), build_model(Family::SP, 4),
                   build_model(Family::SO, 7)}) {
        const int d = g.dim();
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                QMat bij = bracket(g.basis[i], g.basis[j]);
                CHECK(g.contains(bij));  // closed
                for (int k = j + 1; k < d; ++k) {
                    QMat jac = bracket(bij, g.basis[k]) +
                               bracket(bracket(g.basis[j], g.basis[k]), g.basis[i]) +
                               bracket(bracket(g.basis[k], g.basis[i]), g.basis[j]);
                    CHECK(jac.is_zero());
                }
            }
    }
    Model big = build_model(Family::SP, 12);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 400; ++t) {
        int i = rng() % big.dim(), j = rng() % big.dim(), k = rng() % big.dim();
        QMat jac = bracket(bracket(big.basis[i], big.basis[j]), big.basis[k]) +
                   bracket(bracket(big.basis[j], big.basis[k]), big.basis[i]) +
                   bracket(bracket(big.basis[k], big.basis[i]), big.basis[j]);
        CHECK(jac.is_zero());
        CHECK(big.contains(bracket(big.basis[i], big.basis[j])));
    }
}

TEST_CASE("custom form model agrees with the standard one") {
    QMat form(4, 4);  // split symmetric form in a non-antidiagonal basis
    form.at(0, 1) = 1;
    form.at(1, 0) = 1;
    form.at(2, 3) = 1;
    form.at(3, 2) = 1;
    Model g = build_model_with_form(Family::SO, form);
    CHECK(g.dim() == 6);
    for (const auto& b : g.basis) CHECK((b.transpose() * form + form * b).is_zero());
}

TEST_CASE("centralizers") {
    Model sl2 = build_model(Family::SL, 2);
    QMat e(2, 2);
    e.at(0, 1) = 1;
    CHECK(centralizer(sl2, {e}).dim() == 1);

    // z of the pair of long root vectors in sp4 is three dimensional
    Model sp4 = build_model(Family::SP, 4);
    QMat e1(4, 4), e2(4, 4), es(4, 4);
    e1.at(0, 3) = 1;
    e2.at(1, 2) = 1;
    es.at(0, 2) = 1;
    es.at(1, 3) = 1;
    Subspace z = centralizer(sp4, {e1, e2});
    CHECK(z.dim() == 3);
    CHECK(z == span_of(sp4, {e1, e2, es}));

    Model sl4 = build_model(Family::SL, 4);
    QMat e22 = nilpotent_from_partition(sl4, P({2, 2}));
    Subspace z22 = centralizer(sl4, {e22});
    CHECK(z22.dim() == 7);
    // every member commutes with the argument, and the double centralizer
    // still contains it
    for (const auto& m : subspace_matrices(sl4, z22)) CHECK(bracket(m, e22).is_zero());
    CHECK(centralizer_of_subspace(sl4, z22).contains(sl4.coords(e22)));
}

TEST_CASE("nilpotent_from_partition honors Jordan type and centralizer dims") {
    CHECK(centralizer_dim_formula({Family::SL, 3}, P({3})) == 2);
    CHECK(centralizer_dim_formula({Family::SP, 4}, P({2, 2})) == 4);
    CHECK(centralizer_dim_formula({Family::SO, 8}, P({2, 2, 2, 2})) == 16);
    for (auto fam : {ClassicalFamily{Family::SP, 8}, ClassicalFamily{Family::SO, 8},
                     ClassicalFamily{Family::SO, 7}, ClassicalFamily{Family::SL, 5}}) {
        Model g = build_model(fam);
        for (const auto& p : valid_partitions(fam)) {
            QMat e = nilpotent_from_partition(g, p);  // internal checks throw on mismatch
            CHECK(jordan_type(e) == p);
        }
    }
}

TEST_CASE("jacobson_morozov") {
    Model sl2 = build_model(Family::SL, 2);
    QMat e(2, 2);
    e.at(0, 1) = 1;
    auto t = jacobson_morozov(sl2, e);
    CHECK(t.h.at(0, 0) == 1);
    CHECK(t.h.at(1, 1) == -1);

    Model sl4 = build_model(Family::SL, 4);
    QMat e22 = nilpotent_from_partition(sl4, P({2, 2}));
    auto t2 = jacobson_morozov(sl4, e22);
    auto vals = module_spectrum(t2.h);
    CHECK(vals.size() == 2);  // eigenvalues 1 and -1
    CHECK(vals[0] * vals[1] == -1);

    QMat notnil = QMat::identity(4);
    QMat trless = notnil;
    trless.at(3, 3) = -3;
    CHECK_THROWS_AS((void)jacobson_morozov(sl4, trless), error);
}

TEST_CASE("doubled associated element is not a characteristic") {
    // [2h1, e1] = 2e1 holds, but 2h1 has the wrong module spectrum, so no f
    // closes the triple: the series pairs are not rectangular
    for (int n : {1, 2}) {
        auto q = construct_sp4n_series(n);
        const Model& g = q.g();
        QMat h = q.h1 * Rat(2);
        CHECK(bracket(h, q.e1) == q.e1 * Rat(2));
        CHECK(!close_triple(g, q.e1, h).has_value());
        // the honest characteristic of (2n, 2n) carries odd module weights
        auto t = jacobson_morozov(g, q.e1);
        auto vals = module_spectrum(t.h);
        std::set<Rat> want;
        for (int v = 2 * n - 1; v >= 1 - 2 * n; v -= 2) want.insert(Rat(v));
        CHECK(std::set<Rat>(vals.begin(), vals.end()) == want);
        CHECK(!(t.h == h));
    }
}

TEST_CASE("check_quadruple") {
    auto q = construct_sl3_pair();
    CHECK(check_quadruple(q.g(), q.e1, q.e2, q.h1, q.h2));
    auto s = construct_sp4n_series(1);
    CHECK(check_quadruple(s.g(), s.e1, s.e2, s.h1, s.h2));
    // a pair cannot be its own partner
    CHECK(!check_quadruple(q.g(), q.e1, q.e1, q.h1, q.h1));
}

TEST_CASE("bigrading") {
    auto s = construct_sp4n_series(1);
    const Model& g = s.g();
    BiGrading bg = bigrading(g, s.h1, s.h2);
    CHECK(bg.total_dim() == g.dim());
    auto it = bg.parts.find({Rat(1), Rat(0)});
    REQUIRE(it != bg.parts.end());
    CHECK(it->second.contains(g.coords(s.e1)));

    QMat zero(g.n, g.n);
    BiGrading trivial = bigrading(g, zero, zero);
    CHECK(trivial.parts.size() == 1);
    CHECK(trivial.parts.begin()->second.dim() == g.dim());

    auto q = construct_sl3_pair();
    BiGrading bg3 = bigrading(q.g(), q.h1, q.h2);
    CHECK(bg3.parts.at({Rat(1), Rat(0)}).contains(q.g().coords(q.e1)));
    CHECK(bg3.parts.at({Rat(0), Rat(1)}).contains(q.g().coords(q.e2)));

    // components bracket into the shifted component
    for (auto& [w1, s1] : bg3.parts)
        for (auto& [w2, s2] : bg3.parts) {
            auto key = std::make_pair(w1.first + w2.first, w1.second + w2.second);
            auto tgt = bg3.parts.find(key);
            auto m1 = subspace_matrices(q.g(), s1);
            auto m2 = subspace_matrices(q.g(), s2);
            for (const auto& a : m1)
                for (const auto& b : m2) {
                    QMat br = bracket(a, b);
                    if (br.is_zero()) continue;
                    REQUIRE(tgt != bg3.parts.end());
                    CHECK(tgt->second.contains(q.g().coords(br)));
                }
        }
}

TEST_CASE("grading and the evenness dimension identity") {
    // even orbit: dim z(e) = dim g(0); non-even: dim z(e) = dim g(0) + dim g(1)
    struct Case {
        ClassicalFamily fam;
        Partition p;
    };
    for (auto c : {Case{{Family::SL, 5}, P({3, 2})}, Case{{Family::SL, 6}, P({2, 2, 2})},
                   Case{{Family::SP, 4}, P({2, 1, 1})}, Case{{Family::SO, 7}, P({3, 3, 1})}}) {
        Model g = build_model(c.fam);
        QMat e = nilpotent_from_partition(g, c.p);
        auto t = jacobson_morozov(g, e);
        auto gr = grading(g, t.h);
        int g0 = gr.count(Rat(0)) ? gr.at(Rat(0)).dim() : 0;
        int g1 = gr.count(Rat(1)) ? gr.at(Rat(1)).dim() : 0;
        int ze = centralizer(g, {e}).dim();
        if (is_even_element(g, e, t.h)) {
            CHECK(g1 == 0);
            CHECK(ze == g0);
        } else {
            CHECK(ze == g0 + g1);
        }
        // h lies in the image of ad e
        QMat ade = g.ad(e);
        CHECK(solve(ade, g.coords(t.h)).has_value());
    }
}

TEST_CASE("gradings reject irrational spectra") {
    Model sl2 = build_model(Family::SL, 2);
    QMat h(2, 2);  // eigenvalues +-sqrt(2)
    h.at(0, 1) = 1;
    h.at(1, 0) = 2;
    CHECK_THROWS_AS((void)grading(sl2, h), error);
    CHECK_THROWS_AS((void)module_spectrum(h), error);
}

TEST_CASE("e filtration and limit") {
    Model sl3 = build_model(Family::SL, 3);
    QMat e = nilpotent_from_partition(sl3, P({3}));
    Subspace se = span_of(sl3, {e});
    CHECK(e_limit(sl3, e, se) == se);

    // lim_e of the full algebra is z(e)
    Subspace lim = e_limit(sl3, e, full_space(sl3));
    CHECK(lim == centralizer(sl3, {e}));
}

TEST_CASE("rank and semisimplicity diagnostics") {
    Model sl3 = build_model(Family::SL, 3);
    CHECK(rank_of_subalgebra(sl3, full_space(sl3)) == 2);
    CHECK(is_semisimple(sl3, full_space(sl3)));

    QMat e = nilpotent_from_partition(sl3, P({3}));
    Subspace se = span_of(sl3, {e});
    CHECK(rank_of_subalgebra(sl3, se) == 1);
    CHECK(!is_semisimple(sl3, se));

    auto q = construct_sl3_pair();
    Subspace k2 = span_of(sl3, {q.e1, q.h1});
    CHECK(bracket_closed(sl3, k2));
    CHECK(rank_of_subalgebra(sl3, k2) == 1);
    CHECK(!is_semisimple(sl3, k2));
}

TEST_CASE("perfect centerless algebras with an abelian ideal are not semisimple") {
    // sl2 acting on its adjoint copy, embedded as [[A, B], [0, A]] in sl4:
    // perfect and centerless, but the B-part is an abelian ideal
    Model sl4 = build_model(Family::SL, 4);
    auto two_block = [&](int which, int i, int j, Rat v) {
        QMat m(4, 4);
        if (which == 0) {  // A in both diagonal blocks
            m.at(i, j) = v;
            m.at(2 + i, 2 + j) = v;
        } else {  // B in the upper right block
            m.at(i, 2 + j) = v;
        }
        return m;
    };
    QMat ha = two_block(0, 0, 0, 1) - two_block(0, 1, 1, 1);
    QMat ea = two_block(0, 0, 1, 1), fa = two_block(0, 1, 0, 1);
    QMat hb = two_block(1, 0, 0, 1) - two_block(1, 1, 1, 1);
    QMat eb = two_block(1, 0, 1, 1), fb = two_block(1, 1, 0, 1);
    Subspace q = span_of(sl4, {ha, ea, fa, hb, eb, fb});
    REQUIRE(q.dim() == 6);
    REQUIRE(bracket_closed(sl4, q));
    CHECK(center_of(sl4, q).dim() == 0);
    CHECK(!is_semisimple(sl4, q));
}

TEST_CASE("regular and distinguished elements") {
    Model sl3 = build_model(Family::SL, 3);
    QMat e = nilpotent_from_partition(sl3, P({3}));
    CHECK(is_regular_nilpotent_in(sl3, full_space(sl3), e));
    CHECK(is_distinguished_in(sl3, full_space(sl3), e));

    Model sl4 = build_model(Family::SL, 4);
    QMat e22 = nilpotent_from_partition(sl4, P({2, 2}));
    CHECK(!is_distinguished_in(sl4, full_space(sl4), e22));
    CHECK(!is_regular_nilpotent_in(sl4, full_space(sl4), e22));

    // error paths: element outside, non-reductive ambient
    QMat e3 = nilpotent_from_partition(sl3, P({3}));
    Subspace tiny = span_of(sl4, {e22});
    QMat other(4, 4);
    other.at(0, 1) = 1;
    CHECK_THROWS_AS((void)is_regular_nilpotent_in(sl4, tiny, other), error);
    Subspace borel = span_of(sl3, {e3, jacobson_morozov(sl3, e3).h});
    CHECK_THROWS_AS((void)is_distinguished_in(sl3, borel, e3), error);
}

TEST_CASE("element diagnostics") {
    Model sp4 = build_model(Family::SP, 4);
    QMat e = nilpotent_from_partition(sp4, P({2, 2}));
    CHECK(is_nilpotent_elem(sp4, e));
    CHECK(!is_semisimple_elem(sp4, e));
    auto t = jacobson_morozov(sp4, e);
    CHECK(is_semisimple_elem(sp4, t.h));
    CHECK(!is_nilpotent_elem(sp4, t.h));
}

TEST_CASE("triple characteristics carry the partition's weight multiset") {
    // the h of a completed triple must have the eigenvalue multiset the
    // diagram recipe derives from the parts: d-1, d-3, ..., 1-d per part
    for (auto fam : {ClassicalFamily{Family::SL, 5}, ClassicalFamily{Family::SP, 6},
                     ClassicalFamily{Family::SO, 7}}) {
        Model g = build_model(fam);
        for (const auto& p : valid_partitions(fam)) {
            QMat e = nilpotent_from_partition(g, p);
            QMat h = jacobson_morozov(g, e).h;
            std::multiset<Rat> want;
            for (int d : p.parts)
                for (int v = d - 1; v >= 1 - d; v -= 2) want.insert(Rat(v));
            std::multiset<Rat> got;
            for (const auto& lambda : module_spectrum(h)) {
                QMat shifted = h;
                for (int i = 0; i < g.n; ++i) shifted.at(i, i) -= lambda;
                int mult = g.n - rank_of(shifted);
                for (int c = 0; c < mult; ++c) got.insert(lambda);
            }
            CAPTURE(fam.str());
            CAPTURE(p.str());
            CHECK(got == want);
        }
    }
}

TEST_CASE("serialization") {
    Model sp4 = build_model(Family::SP, 4);
    QMat e = nilpotent_from_partition(sp4, P({2, 2}));
    QMat h = jacobson_morozov(sp4, e).h * Rat(1, 2);
    // matrices round trip through the "p/q" string format
    CHECK(matrix_from_json(matrix_to_json(h)) == h);

    std::string sj = subspace_to_json(sp4, centralizer(sp4, {e}));
    CHECK(sj.find('[') == 0);

    auto s = construct_sp4n_series(1);
    std::string bj = bigrading_to_json(bigrading(s.g(), s.h1, s.h2));
    CHECK(bj.find("\"2\",\"-1\"") != std::string::npos);

    auto rs = build_root_system({'G', 2});
    std::string rj = root_system_to_json(rs);
    CHECK(rj.find("\"G2\"") != std::string::npos);
}

TEST_CASE("series fixture matches the generic Jordan data") {
    for (int n : {1, 2}) {
        auto q = construct_sp4n_series(n);
        const Model& g = q.g();
        std::vector<int> p1(2, 2 * n);
        CHECK(jordan_type(q.e1) == P(p1));
        std::vector<int> p2(2 * n - 1, 2);
        p2.push_back(1);
        p2.push_back(1);
        CHECK(jordan_type(q.e2) == P(p2));
        // conjugation-invariant data agrees with the generic block model
        CHECK(centralizer(g, {q.e1}).dim() ==
              centralizer_dim_formula({Family::SP, 4 * n}, P(p1)));
        CHECK(centralizer(g, {q.e2}).dim() ==
              centralizer_dim_formula({Family::SP, 4 * n}, P(p2)));
    }
}
