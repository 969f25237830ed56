#include "nilpair/pairlab.hpp"

#include <json.hpp>

#include <algorithm>
#include <cassert>
#include <random>
#include <set>
#include <sstream>

#include "nilpair/serialize.hpp"

namespace nilpair {

namespace {

QMat diag(const QVec& d) {
    QMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

QMat kron(const QMat& a, const QMat& b) {
    QMat m(a.rows * b.rows, a.cols * b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            if (a.at(i, j) == 0) continue;
            for (int k = 0; k < b.rows; ++k)
                for (int l = 0; l < b.cols; ++l)
                    if (b.at(k, l) != 0)
                        m.at(i * b.rows + k, j * b.cols + l) = a.at(i, j) * b.at(k, l);
        }
    return m;
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

bool is_nonneg_integer_pair(const Rat& a, const Rat& b) {
    return is_integer(a) && is_integer(b) && a >= 0 && b >= 0;
}

// simultaneous eigenspace decomposition of (ad h1, ad h2) restricted to s
std::vector<std::pair<std::pair<Rat, Rat>, Subspace>> biweights_in(const Model& g,
                                                                   const Subspace& s,
                                                                   const QMat& h1,
                                                                   const QMat& h2) {
    std::vector<std::pair<std::pair<Rat, Rat>, Subspace>> out;
    if (s.dim() == 0) return out;
    QMat ad1 = g.ad(h1), ad2 = g.ad(h2);
    auto split = [&](const Subspace& sub, const QMat& ad) {
        std::vector<std::pair<Rat, Subspace>> parts;
        auto roots = half_integer_roots(min_poly_restricted(ad, sub));
        std::set<Rat> cand(roots.begin(), roots.end());
        int total = 0;
        for (const auto& c : cand) {
            QMat shifted = ad;
            for (int i = 0; i < g.dim(); ++i) shifted.at(i, i) -= c;
            // kernel of the shifted map restricted to sub
            QMat a(g.dim(), sub.dim());
            for (int col = 0; col < sub.dim(); ++col) {
                QVec img = mat_vec(shifted, sub.basis.row(col));
                for (int r = 0; r < g.dim(); ++r) a.at(r, col) = img[r];
            }
            QMat ker = kernel(a);
            std::vector<QVec> gens;
            for (int r = 0; r < ker.rows; ++r) {
                QVec v(g.dim(), Rat(0));
                for (int col = 0; col < sub.dim(); ++col)
                    if (ker.at(r, col) != 0)
                        for (int j = 0; j < g.dim(); ++j)
                            v[j] += ker.at(r, col) * sub.basis.at(col, j);
                gens.push_back(std::move(v));
            }
            if (!gens.empty()) {
                Subspace k = RowSpace::span(g.dim(), gens);
                total += k.dim();
                parts.emplace_back(c, std::move(k));
            }
        }
        if (total != sub.dim())
            throw error("non_half_integer_spectrum", "restricted operator not diagonalizable");
        return parts;
    };
    for (auto& [c1, s1] : split(s, ad1))
        for (auto& [c2, s12] : split(s1, ad2)) out.push_back({{c1, c2}, s12});
    return out;
}

Subspace bracket_span(const Model& g, const Subspace& a, const Subspace& b) {
    std::vector<QVec> gens;
    auto am = subspace_matrices(g, a);
    auto bm = subspace_matrices(g, b);
    for (const auto& x : am)
        for (const auto& y : bm) gens.push_back(g.coords(bracket(x, y)));
    Subspace out(g.dim());
    return gens.empty() ? out : RowSpace::span(g.dim(), gens);
}

Subspace derived_algebra(const Model& g, const Subspace& a) { return bracket_span(g, a, a); }

// lim over the double filtration: sum of (ad e1)^i (ad e2)^j M(i,j)
Subspace pair_limit(const Model& g, const QMat& e1, const QMat& e2, const Subspace& m) {
    QMat a1 = g.ad(e1), a2 = g.ad(e2);
    std::vector<QVec> gens;
    QMat p1 = QMat::identity(g.dim());
    for (int i = 0; i <= 2 * g.n; ++i) {
        Subspace fi = e_filtration(g, e1, m, i);
        QMat p2 = QMat::identity(g.dim());
        for (int j = 0; j <= 2 * g.n; ++j) {
            Subspace fij = e_filtration(g, e2, fi, j);
            for (int r = 0; r < fij.dim(); ++r)
                gens.push_back(mat_vec(p2, mat_vec(p1, fij.basis.row(r))));
            if (fij.dim() == fi.dim()) break;
            p2 = p2 * a2;
        }
        if (fi.dim() == m.dim()) break;
        p1 = p1 * a1;
    }
    Subspace out(g.dim());
    return gens.empty() ? out : RowSpace::span(g.dim(), gens);
}

bool reductive_subalgebra(const Model& g, const Subspace& a) {
    Subspace der = derived_algebra(g, a);
    if (!is_semisimple(g, der)) return false;
    Subspace cen = center_of(g, a);
    return der.intersect(cen).dim() == 0 && der.sum(cen) == a;
}

void add_check(VerifyReport& r, const std::string& name, const std::string& rule, bool pass,
               const std::string& witness = "") {
    r.checks.push_back({name, rule, pass, pass ? "" : witness});
}

}  // namespace

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerifyReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string kind_name(PairKind k) {
    switch (k) {
        case PairKind::principal: return "principal";
        case PairKind::almost_principal: return "almost_principal";
        case PairKind::other: return "other";
    }
    return "?";
}

std::string subtype_name(AlmostSubtype s) {
    return s == AlmostSubtype::z_type ? "Z" : "non-Z";
}

std::pair<Quadruple, Quadruple> construct_sp4_examples() {
    auto model = std::make_shared<Model>(build_model(Family::SP, 4));
    const int n = 4;
    QMat e_long1(n, n), e_long2(n, n), e_short(n, n);
    e_long1.at(0, 3) = 1;                      // root 2eps1: v4 -> v1
    e_long2.at(1, 2) = 1;                      // root 2eps2: v3 -> v2
    e_short.at(0, 2) = 1;                      // root eps1+eps2: v3 -> v1, v4 -> v2
    e_short.at(1, 3) = 1;

    Quadruple z_pair;
    z_pair.model = model;
    z_pair.e1 = e_short;
    z_pair.e2 = e_long1;
    z_pair.h1 = diag({Rat(0), Rat(1), Rat(-1), Rat(0)});
    z_pair.h2 = diag({Rat(1, 2), Rat(-1, 2), Rat(1, 2), Rat(-1, 2)});
    z_pair.extra_x = e_long2;
    z_pair.name = "sp4-z";

    Quadruple nz_pair;
    nz_pair.model = model;
    nz_pair.e1 = e_long1;
    nz_pair.e2 = e_long2;
    nz_pair.h1 = diag({Rat(1, 2), Rat(0), Rat(0), Rat(-1, 2)});
    nz_pair.h2 = diag({Rat(0), Rat(1, 2), Rat(-1, 2), Rat(0)});
    nz_pair.extra_x = e_short;
    nz_pair.name = "sp4-nonz";
    // the long-root sl2's commute, so the pair is rectangular
    QMat f1(n, n), f2(n, n);
    f1.at(3, 0) = 1;
    f2.at(2, 1) = 1;
    nz_pair.t1 = SL2Triple{e_long1, diag({Rat(1), Rat(0), Rat(0), Rat(-1)}), f1};
    nz_pair.t2 = SL2Triple{e_long2, diag({Rat(0), Rat(1), Rat(-1), Rat(0)}), f2};

    for (const auto* q : {&z_pair, &nz_pair})
        if (!check_quadruple(*model, q->e1, q->e2, q->h1, q->h2))
            throw error("bad_fixture", "sp4 quadruple relations fail (bug)");
    return {z_pair, nz_pair};
}

Quadruple construct_sp4n_series(int n) {
    if (n < 1) throw error("bad_parameters", "n >= 1 required");
    const int sz = 4 * n;
    auto model = std::make_shared<Model>(build_model(Family::SP, sz));
    QMat e1(sz, sz), e2(sz, sz), x(sz, sz);
    // 1-indexed formulas transcribed to 0-indexed columns
    for (int j = 2 * n + 1; j <= 4 * n; ++j) e1.at(j - 3, j - 1) = 1;
    for (int j = 3; j <= 2 * n; ++j) e1.at(j - 3, j - 1) = -1;
    for (int j = n + 1; j <= 2 * n; ++j) e2.at(2 * j - 4, 2 * j - 1) = 1;
    for (int j = 2; j <= n; ++j) e2.at(2 * j - 4, 2 * j - 1) = -1;
    x.at(1, 4 * n - 2) = 1;  // v_{4n-1} -> v_2
    QVec d1(sz), d2(sz);
    for (int i = 1; i <= 2 * n; ++i) {
        d1[2 * i - 1] = Rat(n + 1 - i);  // t_{2i}
        d1[2 * i - 2] = Rat(n - i);      // t_{2i-1}
    }
    for (int i = 0; i < sz; ++i) d2[i] = (i % 2 == 0) ? Rat(1, 2) : Rat(-1, 2);

    Quadruple q;
    q.model = model;
    q.e1 = e1;
    q.e2 = e2;
    q.h1 = diag(d1);
    q.h2 = diag(d2);
    q.extra_x = x;
    q.name = "sp4n(n=" + std::to_string(n) + ")";
    for (const QMat* m : {&q.e1, &q.e2, &q.h1, &q.h2, &*q.extra_x})
        if (!model->contains(*m)) throw error("bad_fixture", "sp4n element left sp (bug)");
    if (!check_quadruple(*model, q.e1, q.e2, q.h1, q.h2))
        throw error("bad_fixture", "sp4n quadruple relations fail (bug)");
    return q;
}

Quadruple construct_sl3_pair() {
    auto model = std::make_shared<Model>(build_model(Family::SL, 3));
    QMat e1(3, 3), e2(3, 3);
    e1.at(0, 2) = 1;
    e2.at(1, 2) = 1;
    Quadruple q;
    q.model = model;
    q.e1 = e1;
    q.e2 = e2;
    q.h1 = diag({Rat(2, 3), Rat(-1, 3), Rat(-1, 3)});
    q.h2 = diag({Rat(-1, 3), Rat(2, 3), Rat(-1, 3)});
    q.name = "sl3";
    if (!check_quadruple(*model, q.e1, q.e2, q.h1, q.h2))
        throw error("bad_fixture", "sl3 quadruple relations fail (bug)");
    return q;
}

namespace {

// single Jordan block data: e v_i = v_{i-1}, h = diag(d-1-2i), f v_i = c_i v_{i+1}
void jordan_sl2(int d, QMat& e, QMat& h, QMat& f) {
    e = QMat(d, d);
    h = QMat(d, d);
    f = QMat(d, d);
    for (int i = 0; i + 1 < d; ++i) e.at(i, i + 1) = 1;
    for (int i = 0; i < d; ++i) h.at(i, i) = d - 1 - 2 * i;
    for (int i = 0; i + 1 < d; ++i) f.at(i + 1, i) = Rat((i + 1) * (d - 1 - i));
}

}  // namespace

Quadruple construct_rect_pn_sl(int n, int m) {
    if (n < 1 || m < 1 || n * m < 2) throw error("bad_parameters", "need nm >= 2");
    auto model = std::make_shared<Model>(build_model(Family::SL, n * m));
    QMat en, hn, fn, em, hm, fm;
    jordan_sl2(n, en, hn, fn);
    jordan_sl2(m, em, hm, fm);
    QMat in = QMat::identity(n), im = QMat::identity(m);
    Quadruple q;
    q.model = model;
    q.e1 = kron(en, im);
    q.e2 = kron(in, em);
    q.h1 = kron(hn, im) * Rat(1, 2);
    q.h2 = kron(in, hm) * Rat(1, 2);
    q.t1 = SL2Triple{q.e1, kron(hn, im), kron(fn, im)};
    q.t2 = SL2Triple{q.e2, kron(in, hm), kron(in, fm)};
    q.name = "rect-sl(" + std::to_string(n) + "," + std::to_string(m) + ")";
    if (!check_quadruple(*model, q.e1, q.e2, q.h1, q.h2))
        throw error("bad_fixture", "tensor quadruple relations fail (bug)");
    return q;
}

Quadruple construct_rect_apn_sp(int k, int n) {
    if (!(0 < k && k < n)) throw error("bad_parameters", "need 0 < k < n");
    auto model = std::make_shared<Model>(build_model(Family::SP, 2 * n));
    // sp_{2k} on coordinates {0..k-1} u {2n-k..2n-1}; sp_{2(n-k)} on the middle
    auto embed = [&](const Model& sub, const QMat& msub, const std::vector<int>& idx) {
        QMat out(2 * n, 2 * n);
        for (int i = 0; i < sub.n; ++i)
            for (int j = 0; j < sub.n; ++j)
                if (msub.at(i, j) != 0) out.at(idx[i], idx[j]) = msub.at(i, j);
        return out;
    };
    std::vector<int> idx1, idx2;
    for (int i = 0; i < k; ++i) idx1.push_back(i);
    for (int i = 0; i < k; ++i) idx1.push_back(2 * n - k + i);
    for (int i = 0; i < 2 * (n - k); ++i) idx2.push_back(k + i);

    Model sub1 = build_model(Family::SP, 2 * k);
    Model sub2 = build_model(Family::SP, 2 * (n - k));
    QMat e1s = nilpotent_from_partition(sub1, Partition({2 * k}));
    QMat e2s = nilpotent_from_partition(sub2, Partition({2 * (n - k)}));
    SL2Triple t1s = jacobson_morozov(sub1, e1s);
    SL2Triple t2s = jacobson_morozov(sub2, e2s);

    Quadruple q;
    q.model = model;
    q.e1 = embed(sub1, e1s, idx1);
    q.e2 = embed(sub2, e2s, idx2);
    q.t1 = SL2Triple{q.e1, embed(sub1, t1s.h, idx1), embed(sub1, t1s.f, idx1)};
    q.t2 = SL2Triple{q.e2, embed(sub2, t2s.h, idx2), embed(sub2, t2s.f, idx2)};
    q.h1 = q.t1->h * Rat(1, 2);
    q.h2 = q.t2->h * Rat(1, 2);
    q.name = "rect-sp(" + std::to_string(k) + "," + std::to_string(n) + ")";
    for (const QMat* m : {&q.e1, &q.e2, &q.h1, &q.h2})
        if (!model->contains(*m)) throw error("bad_fixture", "embedding left sp (bug)");
    if (!check_quadruple(*model, q.e1, q.e2, q.h1, q.h2))
        throw error("bad_fixture", "sp embedding quadruple fails (bug)");
    return q;
}

PairClassification classify_pair(const Quadruple& q) {
    const Model& g = q.g();
    if (!check_quadruple(g, q.e1, q.e2, q.h1, q.h2))
        throw error("bad_quadruple", "commutation relations fail");
    PairClassification out;
    out.rank_g = g.rank();
    Subspace z = centralizer(g, {q.e1, q.e2});
    out.dim_z = z.dim();
    if (out.dim_z == out.rank_g) {
        out.kind = PairKind::principal;
        return out;
    }
    if (out.dim_z != out.rank_g + 1) {
        out.kind = PairKind::other;
        return out;
    }
    out.kind = PairKind::almost_principal;
    auto parts = biweights_in(g, z, q.h1, q.h2);
    std::vector<std::pair<Rat, Rat>> exceptional;
    for (auto& [w, sp] : parts) {
        bool in_quadrant = is_nonneg_integer_pair(w.first, w.second) &&
                           !(w.first == 0 && w.second == 0);
        if (!in_quadrant)
            for (int c = 0; c < sp.dim(); ++c) exceptional.push_back(w);
    }
    if (exceptional.size() != 1)
        throw error("unclassified_pair", "exceptional bi-weight is not unique");
    auto [p, qq] = exceptional[0];
    if (p * qq == 0) throw error("unclassified_pair", "exceptional bi-weight on an axis");
    out.extra_biweight = {p, qq};
    if (is_integer(p) && is_integer(qq) && p * qq < 0)
        out.subtype = AlmostSubtype::z_type;
    else if (!is_integer(p) && !is_integer(qq) && p.get_den() == 2 && qq.get_den() == 2 &&
             p > 0 && qq > 0)
        out.subtype = AlmostSubtype::non_z_type;
    else
        throw error("unclassified_pair", "bi-weight outside both dichotomy classes");
    return out;
}

VerifyReport verify_structure(const Quadruple& q, uint64_t seed) {
    const Model& g = q.g();
    VerifyReport r;
    r.fixture = q.name;
    PairClassification cls = classify_pair(q);
    if (cls.kind == PairKind::other)
        throw error("unclassified_pair", "verify_structure needs (almost) principal input");
    bool almost = cls.kind == PairKind::almost_principal;

    Subspace t = centralizer(g, {q.h1, q.h2});
    bool cartan = t.dim() == g.rank() && is_abelian(g, t) &&
                  rank_of_subalgebra(g, t, seed) == t.dim();
    add_check(r, "cartan_centralizer", "z(h1,h2) is a Cartan subalgebra", cartan,
              "dim=" + std::to_string(t.dim()));

    int z00 = centralizer(g, {q.e1, q.e2, q.h1, q.h2}).dim();
    add_check(r, "zero_component_trivial", "z(e1,e2)_{0,0} = 0", z00 == 0,
              "dim=" + std::to_string(z00));

    Subspace l1 = centralizer(g, {q.h1});
    Subspace l2 = centralizer(g, {q.h2});
    add_check(r, "e1_regular_in_l2", "e1 is regular nilpotent in z(h2)",
              is_regular_nilpotent_in(g, l2, q.e1, seed));
    add_check(r, "e2_regular_in_l1", "e2 is regular nilpotent in z(h1)",
              is_regular_nilpotent_in(g, l1, q.e2, seed));

    Subspace z1he = centralizer(g, {q.e1, q.h1, q.e2});
    Subspace z1hh = centralizer(g, {q.e1, q.h1, q.h2});
    Subspace z2he = centralizer(g, {q.e2, q.h2, q.e1});
    Subspace z2hh = centralizer(g, {q.e2, q.h2, q.h1});
    add_check(r, "limit_dims_1", "dim z(e1,h1,e2) = dim z(e1,h1,h2)",
              z1he.dim() == z1hh.dim(),
              std::to_string(z1he.dim()) + " vs " + std::to_string(z1hh.dim()));
    add_check(r, "limit_dims_2", "dim z(e2,h2,e1) = dim z(e2,h2,h1)",
              z2he.dim() == z2hh.dim(),
              std::to_string(z2he.dim()) + " vs " + std::to_string(z2hh.dim()));

    Subspace c2 = center_of(g, l2);
    Subspace c1 = center_of(g, l1);
    add_check(r, "centre_identification_1", "z(e1,h1,h2) = centre of z(h2)", z1hh == c2);
    add_check(r, "centre_identification_2", "z(e2,h2,h1) = centre of z(h1)", z2hh == c1);

    Subspace z = centralizer(g, {q.e1, q.e2});
    auto parts = biweights_in(g, z, q.h1, q.h2);
    int outside = 0;
    for (auto& [w, sp] : parts) {
        bool in_quadrant = is_nonneg_integer_pair(w.first, w.second) &&
                           !(w.first == 0 && w.second == 0);
        if (!in_quadrant) outside += sp.dim();
    }
    bool grading_ok = almost ? (outside == 1) : (outside == 0);
    add_check(r, "quadrant_grading",
              "z(e1,e2) graded by the nonnegative quadrant minus origin"
              " (plus one exceptional weight when almost principal)",
              grading_ok, "outside=" + std::to_string(outside));

    // limits of the Cartan subalgebra
    Subspace lim1 = e_limit(g, q.e1, t);
    Subspace z_e1h2 = centralizer(g, {q.e1, q.h2});
    add_check(r, "limit_e1_cartan", "lim_{e1} z(h1,h2) = z(e1,h2)", lim1 == z_e1h2);
    Subspace lim2 = e_limit(g, q.e2, t);
    Subspace z_e2h1 = centralizer(g, {q.e2, q.h1});
    add_check(r, "limit_e2_cartan", "lim_{e2} z(h1,h2) = z(e2,h1)", lim2 == z_e2h1);

    Subspace dlim = pair_limit(g, q.e1, q.e2, t);
    std::vector<QVec> quad_gens;
    for (auto& [w, sp] : parts) {
        if (is_nonneg_integer_pair(w.first, w.second) && !(w.first == 0 && w.second == 0))
            for (int i = 0; i < sp.dim(); ++i) quad_gens.push_back(sp.basis.row(i));
    }
    Subspace zplus = quad_gens.empty() ? Subspace(g.dim()) : RowSpace::span(g.dim(), quad_gens);
    add_check(r, "double_limit", "lim_e z(h1,h2) = positive-quadrant part of z(e1,e2)",
              dlim == zplus);
    if (almost)
        add_check(r, "limit_codim", "lim_e z(h1,h2) has codimension 1 in z(e1,e2)",
                  z.dim() - dlim.dim() == 1);

    if (almost) {
        auto zmats = subspace_matrices(g, z);
        std::string bad;
        for (const auto& m : zmats)
            if (!is_nilpotent_elem(g, m)) {
                bad = matrix_to_json(m);
                break;
            }
        add_check(r, "z_nilpotent_basis", "basis of z(e1,e2) consists of nilpotents",
                  bad.empty(), bad);
        std::string noncomm;
        for (size_t i = 0; i < zmats.size() && noncomm.empty(); ++i)
            for (size_t j = i + 1; j < zmats.size(); ++j)
                if (!bracket(zmats[i], zmats[j]).is_zero()) {
                    noncomm = matrix_to_json(bracket(zmats[i], zmats[j]));
                    break;
                }
        add_check(r, "z_abelian", "z(e1,e2) is abelian", noncomm.empty(), noncomm);
    }
    return r;
}

ThetaReport theta_involution(const Quadruple& q, uint64_t seed) {
    const Model& g = q.g();
    auto cls = classify_pair(q);
    if (cls.subtype != AlmostSubtype::non_z_type)
        throw error("wrong_subtype", "theta involution needs a non-Z almost principal pair");
    BiGrading bg = bigrading(g, q.h1, q.h2);
    std::vector<QVec> gens;
    for (auto& [w, sp] : bg.parts) {
        if (is_integer(w.first) && is_integer(w.second))
            for (int i = 0; i < sp.dim(); ++i) gens.push_back(sp.basis.row(i));
        else if (is_integer(w.first) || is_integer(w.second))
            throw error("wrong_subtype", "mixed integral/half-integral bi-weight");
    }
    ThetaReport rep;
    rep.fixed = gens.empty() ? Subspace(g.dim()) : RowSpace::span(g.dim(), gens);
    rep.subalgebra = bracket_closed(g, rep.fixed);
    rep.semisimple = is_semisimple(g, rep.fixed);
    rep.rank_fixed = rank_of_subalgebra(g, rep.fixed, seed);
    rep.dim_z_fixed = centralizer_in(g, rep.fixed, {q.e1, q.e2}).dim();
    rep.pair_principal_inside = rep.rank_fixed == g.rank() && rep.dim_z_fixed == rep.rank_fixed;
    return rep;
}

bool richardson_check(const Quadruple& q, int i) {
    if (i != 1 && i != 2) throw error("bad_parameters", "index must be 1 or 2");
    const Model& g = q.g();
    const QMat& e = (i == 1) ? q.e1 : q.e2;
    BiGrading bg = bigrading(g, q.h1, q.h2);
    std::vector<QVec> par, nil;
    for (auto& [w, sp] : bg.parts) {
        const Rat& c = (i == 1) ? w.first : w.second;
        if (c >= 0)
            for (int r = 0; r < sp.dim(); ++r) par.push_back(sp.basis.row(r));
        if (c > 0)
            for (int r = 0; r < sp.dim(); ++r) nil.push_back(sp.basis.row(r));
    }
    Subspace p = par.empty() ? Subspace(g.dim()) : RowSpace::span(g.dim(), par);
    Subspace pnil = nil.empty() ? Subspace(g.dim()) : RowSpace::span(g.dim(), nil);
    std::vector<QVec> img;
    for (const auto& m : subspace_matrices(g, p)) img.push_back(g.coords(bracket(m, e)));
    Subspace image = img.empty() ? Subspace(g.dim()) : RowSpace::span(g.dim(), img);
    return image == pnil;
}

bool verify_commuting_deformation_dim(const Model& g, const QMat& h1, const QMat& h2,
                                      const Subspace& nil) {
    QMat ad1 = g.ad(h1), ad2 = g.ad(h2);
    // preconditions: [h_i, n] in n and n meets z(h1,h2) trivially
    for (int r = 0; r < nil.dim(); ++r) {
        if (!nil.contains(mat_vec(ad1, nil.basis.row(r))) ||
            !nil.contains(mat_vec(ad2, nil.basis.row(r))))
            throw error("precondition_violated", "n is not (ad h)-stable");
    }
    Subspace zt = centralizer(g, {h1, h2});
    if (nil.intersect(zt).dim() != 0)
        throw error("precondition_violated", "n meets z(h1,h2)");
    const int s = nil.dim();
    if (s == 0) return true;
    QMat sys(g.dim(), 2 * s);
    for (int c = 0; c < s; ++c) {
        QVec a = mat_vec(ad2, nil.basis.row(c));   // [h2, n1]
        QVec b = mat_vec(ad1, nil.basis.row(c));   // [h1, n2]
        for (int r = 0; r < g.dim(); ++r) {
            sys.at(r, c) = -a[r];
            sys.at(r, s + c) = b[r];
        }
    }
    return kernel(sys).rows == s;
}

DualPairReport dual_pair_check(const Quadruple& q, uint64_t seed) {
    const Model& g = q.g();
    DualPairReport rep;
    Subspace z1hh = centralizer(g, {q.e1, q.h1, q.h2});
    Subspace z2hh = centralizer(g, {q.e2, q.h1, q.h2});
    Subspace z1he = centralizer(g, {q.e1, q.h1, q.e2});
    Subspace z2he = centralizer(g, {q.e2, q.h2, q.e1});
    if (bracket_span(g, z1hh, z2hh).dim() != 0)
        rep.failed_hypothesis = "zero-graded pieces do not commute";
    else if (z1he.dim() != z1hh.dim())
        rep.failed_hypothesis = "dim z(e1,h1,e2) != dim z(e1,h1,h2)";
    else if (z2he.dim() != z2hh.dim())
        rep.failed_hypothesis = "dim z(e2,h2,e1) != dim z(e2,h2,h1)";
    rep.hypotheses_ok = rep.failed_hypothesis.empty();
    if (!rep.hypotheses_ok)
        throw error("hypotheses_fail", rep.failed_hypothesis);

    rep.k1 = centralizer(g, {q.e1, q.h1});
    rep.k2 = centralizer(g, {q.e2, q.h2});
    rep.commute = bracket_span(g, rep.k1, rep.k2).dim() == 0;
    rep.mutual = centralizer_of_subspace(g, rep.k1) == rep.k2 &&
                 centralizer_of_subspace(g, rep.k2) == rep.k1;
    rep.reductive = reductive_subalgebra(g, rep.k1) && reductive_subalgebra(g, rep.k2);
    rep.center_trivial =
        center_of(g, rep.k1).dim() == 0 && center_of(g, rep.k2).dim() == 0;
    (void)seed;

    if (q.t1 && q.t2) {
        bool comm = bracket(q.t1->e, q.t2->e).is_zero() && bracket(q.t1->e, q.t2->h).is_zero() &&
                    bracket(q.t1->e, q.t2->f).is_zero() && bracket(q.t1->h, q.t2->h).is_zero() &&
                    bracket(q.t1->h, q.t2->e).is_zero() && bracket(q.t1->h, q.t2->f).is_zero() &&
                    bracket(q.t1->f, q.t2->e).is_zero() && bracket(q.t1->f, q.t2->h).is_zero() &&
                    bracket(q.t1->f, q.t2->f).is_zero();
        if (comm) rep.rectangular = RectVerdict::rectangular;
    }
    if (rep.rectangular == RectVerdict::not_shown) {
        Subspace z2 = centralizer(g, {q.e2});
        if (try_triple_in(g, z2, q.e1)) rep.rectangular = RectVerdict::rectangular;
    }

    // graded surjectivity of ad e2 on k1 in nonnegative degrees
    rep.graded_surjective = true;
    auto parts = biweights_in(g, rep.k1, q.h1, q.h2);
    std::map<Rat, Subspace> by_degree;
    for (auto& [w, sp] : parts) {
        assert(w.first == 0);
        by_degree.emplace(w.second, sp);
    }
    for (auto& [deg, sp] : by_degree) {
        if (deg < 0) continue;
        auto next = by_degree.find(deg + 1);
        Subspace target = (next == by_degree.end()) ? Subspace(g.dim()) : next->second;
        std::vector<QVec> img;
        for (const auto& m : subspace_matrices(g, sp))
            img.push_back(g.coords(bracket(q.e2, m)));
        Subspace image = img.empty() ? Subspace(g.dim()) : RowSpace::span(g.dim(), img);
        if (!(image == target)) rep.graded_surjective = false;
    }
    return rep;
}

SprPair construct_spr_sp(int m, int n, int l, const Partition& tail) {
    if (m < 3 || m % 2 == 0) throw error("bad_parameters", "m must be odd and >= 3");
    if (n < 1 || l < 0) throw error("bad_parameters", "need n >= 1, l >= 0");
    if ((n == 1 && l == 1) || (n == 2 && l == 2))
        throw error("excluded_parameters", "(n,l) in {(1,1),(2,2)} admits no valid tail");
    if (tail.sum() != 2 * l) throw error("invalid_tail", "tail must be a partition of 2l");
    std::set<int> seen;
    for (int t : tail.parts) {
        if (t % 2 != 0) throw error("invalid_tail", "tail parts must be even");
        if (t == 2 * n) throw error("invalid_tail", "tail parts must differ from 2n");
        if (!seen.insert(t).second) throw error("invalid_tail", "tail parts must be distinct");
    }

    // orthogonal m-block: J_m regular nilpotent for the signed antidiagonal
    // symmetric form with unit middle entry
    QMat s_form(m, m);
    int s = ((m - 1) / 2 % 2 == 0) ? 1 : -1;
    for (int i = 0; i < m; ++i) s_form.at(i, m - 1 - i) = ((i % 2 == 0) ? 1 : -1) * s;
    Model so_m = build_model_with_form(Family::SO, s_form);
    QMat jm(m, m);
    for (int i = 0; i + 1 < m; ++i) jm.at(i, i + 1) = 1;
    if (!so_m.contains(jm)) throw error("bad_fixture", "J_m not orthogonal (bug)");
    SL2Triple tm = jacobson_morozov(so_m, jm);

    Model sp_2n = build_model(Family::SP, 2 * n);
    QMat ep = nilpotent_from_partition(sp_2n, Partition({2 * n}));
    SL2Triple tp = jacobson_morozov(sp_2n, ep);

    const int two_l = 2 * l;
    QMat epp(two_l, two_l);
    SL2Triple tpp{QMat(two_l, two_l), QMat(two_l, two_l), QMat(two_l, two_l)};
    QMat tail_form(two_l, two_l);
    if (l > 0) {
        Model sp_2l = build_model(Family::SP, two_l);
        tail_form = sp_2l.form;
        epp = nilpotent_from_partition(sp_2l, tail);
        tpp = jacobson_morozov(sp_2l, epp);
    }

    const int big = 2 * (n * m + l);
    QMat form = QMat(big, big);
    QMat f1 = kron(s_form, sp_2n.form);
    for (int i = 0; i < f1.rows; ++i)
        for (int j = 0; j < f1.cols; ++j) form.at(i, j) = f1.at(i, j);
    for (int i = 0; i < two_l; ++i)
        for (int j = 0; j < two_l; ++j) form.at(f1.rows + i, f1.cols + j) = tail_form.at(i, j);

    auto block = [&](const QMat& a, const QMat& b) {
        QMat out(big, big);
        for (int i = 0; i < a.rows; ++i)
            for (int j = 0; j < a.cols; ++j) out.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < b.cols; ++j) out.at(a.rows + i, a.cols + j) = b.at(i, j);
        return out;
    };
    QMat i2n = QMat::identity(2 * n), im = QMat::identity(m);
    QMat zl(two_l, two_l);

    SprPair out;
    out.model = std::make_shared<Model>(build_model_with_form(Family::SP, form));
    out.e2 = block(kron(jm, i2n), zl);
    out.t2 = SL2Triple{out.e2, block(kron(tm.h, i2n), zl), block(kron(tm.f, i2n), zl)};
    out.e1 = block(kron(im, ep), epp);
    out.t1 = SL2Triple{out.e1, block(kron(im, tp.h), tpp.h), block(kron(im, tp.f), tpp.f)};
    out.name = "spr(m=" + std::to_string(m) + ",n=" + std::to_string(n) +
               ",l=" + std::to_string(l) + ",tail=" + tail.str() + ")";

    const Model& g = *out.model;
    for (const QMat* x : {&out.e1, &out.e2, &out.t1.h, &out.t2.h, &out.t1.f, &out.t2.f})
        if (!g.contains(*x)) throw error("bad_fixture", "spr element left sp (bug)");
    // expected Jordan types
    std::vector<int> p2(2 * n, m);
    for (int i = 0; i < two_l; ++i) p2.push_back(1);
    if (!(jordan_type(out.e2) == Partition(p2)))
        throw error("bad_fixture", "e2 Jordan type wrong (bug)");
    std::vector<int> p1(m, 2 * n);
    for (int t : tail.parts) p1.push_back(t);
    std::sort(p1.rbegin(), p1.rend());
    if (!(jordan_type(out.e1) == Partition(p1)))
        throw error("bad_fixture", "e1 Jordan type wrong (bug)");
    return out;
}

VerifyReport verify_spr(const SprPair& s, uint64_t seed) {
    const Model& g = s.g();
    VerifyReport r;
    r.fixture = s.name;
    bool comm = bracket(s.t1.e, s.t2.e).is_zero() && bracket(s.t1.e, s.t2.h).is_zero() &&
                bracket(s.t1.e, s.t2.f).is_zero() && bracket(s.t1.h, s.t2.h).is_zero() &&
                bracket(s.t1.h, s.t2.e).is_zero() && bracket(s.t1.h, s.t2.f).is_zero() &&
                bracket(s.t1.f, s.t2.e).is_zero() && bracket(s.t1.f, s.t2.h).is_zero() &&
                bracket(s.t1.f, s.t2.f).is_zero();
    add_check(r, "commuting_triples", "the two sl2-triples commute", comm);

    Subspace l2 = centralizer(g, {s.t2.h});
    add_check(r, "e1_distinguished_in_l2", "e1 is distinguished in z(h2)",
              is_distinguished_in(g, l2, s.e1));

    Subspace k1 = centralizer(g, {s.e1, s.t1.h});
    auto ev = half_integer_roots(min_poly_restricted(g.ad(s.t2.h), k1));
    bool even = true;
    for (const auto& v : ev)
        if (v.get_den() != 1 || mpz_class(v.get_num() % 2) != 0) even = false;
    add_check(r, "e2_even_in_k1", "ad h2 has even eigenvalues on z(e1,h1)", even);

    Subspace c2 = center_of(g, l2);
    Subspace zehh = centralizer(g, {s.e1, s.t1.h, s.t2.h});
    add_check(r, "centre_identification", "z(e1,h1,h2) = centre of z(h2)", zehh == c2);

    bool cartan = c2.dim() > 0 && k1.contains(c2) && is_abelian(g, c2) &&
                  centralizer_in(g, k1, subspace_matrices(g, c2)) == c2;
    add_check(r, "c2_cartan_in_k1", "centre of z(h2) is a Cartan subalgebra of z(e1,h1)",
              cartan);
    add_check(r, "e2_regular_in_k1", "e2 is regular nilpotent in z(e1,h1)",
              is_regular_nilpotent_in(g, k1, s.e2, seed));

    Subspace k2 = centralizer(g, {s.e2, s.t2.h});
    bool mutual = centralizer_of_subspace(g, k1) == k2 && centralizer_of_subspace(g, k2) == k1;
    add_check(r, "dual_pair", "(k1, k2) is a dual pair", mutual);
    add_check(r, "k1_reductive", "k1 is reductive", reductive_subalgebra(g, k1));
    add_check(r, "k2_reductive", "k2 is reductive", reductive_subalgebra(g, k2));
    return r;
}

bool MatrixExcellence::checks_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

MatrixExcellence excellent_check_matrix(const Model& g, const QMat& e, uint64_t seed) {
    MatrixExcellence out;
    out.triple = jacobson_morozov(g, e);
    const QMat& h = out.triple.h;
    out.levi = centralizer(g, {h});
    out.centre_levi = centralizer_of_subspace(g, out.levi);
    out.k = centralizer(g, {out.triple.e, out.triple.h, out.triple.f});
    out.kv = centralizer_of_subspace(g, out.k);
    out.is_even = is_even_element(g, e, h);
    out.dim_centre_levi = out.centre_levi.dim();
    out.rank_kv = rank_of_subalgebra(g, out.kv, seed);
    out.verdict = out.is_even && out.dim_centre_levi == out.rank_kv;

    Subspace ze = centralizer(g, {e});
    Subspace z2e = centralizer_of_subspace(g, ze);
    out.dim_z2_e = z2e.dim();

    auto check = [&](const std::string& name, const std::string& rule, bool pass,
                     const std::string& witness = "") {
        out.checks.push_back({name, rule, pass, pass ? "" : witness});
    };

    // limits commute for any nilpotent
    Subspace lim_c = e_limit(g, e, out.centre_levi);
    Subspace lim_l = e_limit(g, e, out.levi);
    check("limit_bracket", "[lim_e z^2(h), lim_e z(h)] = 0",
          bracket_span(g, lim_c, lim_l).dim() == 0);
    if (out.is_even) {
        check("limit_in_z2e", "lim_e z^2(h) inside z^2(e) for even e", z2e.contains(lim_c));
        check("z2_dim_bound", "dim z^2(h) <= dim z^2(e) for even e",
              out.dim_centre_levi <= out.dim_z2_e);
    }
    if (out.verdict) {
        bool cartan = out.kv.contains(out.centre_levi) && is_abelian(g, out.centre_levi) &&
                      centralizer_in(g, out.kv, subspace_matrices(g, out.centre_levi)) ==
                          out.centre_levi;
        check("c_cartan_in_kv", "z^2(h) is a Cartan subalgebra of z(k)", cartan);
        check("e_regular_in_kv", "e is regular nilpotent in z(k)",
              out.kv.dim() == 0 ? e.is_zero()
                                : is_regular_nilpotent_in(g, out.kv, e, seed));
        check("k_semisimple", "k is semisimple", is_semisimple(g, out.k));
        check("kv_semisimple", "z(k) is semisimple", is_semisimple(g, out.kv));
        check("z2e_is_zkv_e", "z^2(e) is the centralizer of e in z(k)",
              z2e == centralizer_in(g, out.kv, {e}));
    }
    return out;
}

SheetSection sheet_section(const Model& g, const QMat& e, int num_samples, uint64_t seed) {
    MatrixExcellence exc = excellent_check_matrix(g, e, seed);
    if (!exc.verdict) throw error("not_excellent", "sheet sections need an excellent element");
    SheetSection out;
    out.base = e;
    out.direction = centralizer_in(g, exc.kv, {exc.triple.f});
    out.dim_section = out.direction.dim();
    if (out.dim_section != exc.dim_centre_levi)
        throw error("bad_section", "dim z_{kv}(f) != dim z^2(h) (bug)");
    Subspace ze = centralizer(g, {e});
    out.dim_z_base = ze.dim();
    out.orbit_dim = g.dim() - ze.dim();

    std::mt19937_64 rng(seed);
    out.constant_orbit_dim = true;
    for (int t = 0; t < num_samples; ++t) {
        SheetSample smp;
        smp.coeffs.resize(out.direction.dim());
        QVec v = g.coords(e);
        for (int i = 0; i < out.direction.dim(); ++i) {
            long num = static_cast<long>(rng() % 9) + 1;           // 1..9
            long den = static_cast<long>(rng() % 3) + 1;           // 1..3
            long sgn = (rng() % 2 == 0) ? 1 : -1;
            smp.coeffs[i] = Rat(sgn * num, den);
            smp.coeffs[i].canonicalize();
            for (int j = 0; j < g.dim(); ++j)
                v[j] += smp.coeffs[i] * out.direction.basis.at(i, j);
        }
        QMat x = g.from_coords(v);
        smp.dim_z = centralizer(g, {x}).dim();
        if (smp.dim_z != out.dim_z_base) out.constant_orbit_dim = false;
        smp.semisimple_in_kv = exc.kv.dim() > 0 &&
                               poly_squarefree(min_poly_restricted(g.ad(x), exc.kv));
        out.samples.push_back(std::move(smp));
    }
    return out;
}

std::string report_to_json(const VerifyReport& r) {
    nlohmann::json j;
    j["fixture"] = r.fixture;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json cj;
        cj["name"] = c.name;
        cj["rule"] = c.rule;
        cj["pass"] = c.pass;
        cj["witness"] = c.witness;
        j["checks"].push_back(cj);
    }
    j["all_pass"] = r.all_pass();
    return j.dump(2);
}

}  // namespace nilpair
