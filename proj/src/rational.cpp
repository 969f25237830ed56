#include "nilpair/rational.hpp"

#include <algorithm>
#include <cassert>

namespace nilpair {

Rat rat_from_string(const std::string& s) {
    Rat x;
    if (x.set_str(s, 10) != 0) throw error("bad_rational", "cannot parse '" + s + "'");
    x.canonicalize();
    return x;
}

std::string rat_to_string(const Rat& x) { return x.get_str(); }

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool QMat::is_zero() const {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

QMat QMat::transpose() const {
    QMat t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

QMat QMat::operator+(const QMat& o) const {
    assert(rows == o.rows && cols == o.cols);
    QMat r(rows, cols);
    for (size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] + o.a[k];
    return r;
}

QMat QMat::operator-(const QMat& o) const {
    assert(rows == o.rows && cols == o.cols);
    QMat r(rows, cols);
    for (size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] - o.a[k];
    return r;
}

QMat QMat::operator*(const QMat& o) const {
    assert(cols == o.rows);
    QMat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols; ++j) {
                if (o.at(k, j) == 0) continue;
                r.at(i, j) += x * o.at(k, j);
            }
        }
    return r;
}

QMat QMat::operator*(const Rat& s) const {
    QMat r(rows, cols);
    for (size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] * s;
    return r;
}

QMat QMat::operator-() const { return (*this) * Rat(-1); }

QVec QMat::row(int i) const {
    QVec v(cols);
    for (int j = 0; j < cols; ++j) v[j] = at(i, j);
    return v;
}

QMat QMat::from_rows(const std::vector<QVec>& rs) {
    if (rs.empty()) return QMat(0, 0);
    QMat m(static_cast<int>(rs.size()), static_cast<int>(rs[0].size()));
    for (int i = 0; i < m.rows; ++i) {
        assert(static_cast<int>(rs[i].size()) == m.cols);
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rs[i][j];
    }
    return m;
}

QMat QMat::pow(int k) const {
    assert(is_square() && k >= 0);
    QMat r = identity(rows);
    QMat b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

QMat bracket(const QMat& x, const QMat& y) { return x * y - y * x; }

QVec mat_vec(const QMat& m, const QVec& v) {
    assert(static_cast<int>(v.size()) == m.cols);
    QVec r(m.rows);
    for (int i = 0; i < m.rows; ++i) {
        Rat s = 0;
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0 && v[j] != 0) s += m.at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

int rref(QMat& m, std::vector<int>* pivots) {
    if (pivots) pivots->clear();
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        Rat inv = 1 / m.at(r, c);
        for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return r;
}

int rank_of(QMat m) { return rref(m); }

QMat kernel(const QMat& m) {
    QMat w = m;
    std::vector<int> piv;
    int r = rref(w, &piv);
    std::vector<bool> is_piv(m.cols, false);
    for (int c : piv) is_piv[c] = true;
    QMat out(m.cols - r, m.cols);
    int k = 0;
    for (int c = 0; c < m.cols; ++c) {
        if (is_piv[c]) continue;
        out.at(k, c) = 1;
        for (int i = 0; i < r; ++i) out.at(k, piv[i]) = -w.at(i, c);
        ++k;
    }
    return out;
}

std::optional<QVec> solve(const QMat& m, const QVec& b) {
    assert(static_cast<int>(b.size()) == m.rows);
    QMat aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    std::vector<int> piv;
    int r = rref(aug, &piv);
    if (!piv.empty() && piv.back() == m.cols) return std::nullopt;  // inconsistent
    QVec x(m.cols, Rat(0));
    for (int i = 0; i < r; ++i) x[piv[i]] = aug.at(i, m.cols);
    return x;
}

RowSpace RowSpace::span(int ambient, const std::vector<QVec>& generators) {
    RowSpace s(ambient);
    if (generators.empty()) return s;
    QMat m = QMat::from_rows(generators);
    assert(m.cols == ambient);
    std::vector<int> piv;
    int r = rref(m, &piv);
    s.basis = QMat(r, ambient);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < ambient; ++j) s.basis.at(i, j) = m.at(i, j);
    s.pivots = piv;
    return s;
}

RowSpace RowSpace::from_matrix_rows(const QMat& m) {
    std::vector<QVec> rs;
    rs.reserve(m.rows);
    for (int i = 0; i < m.rows; ++i) rs.push_back(m.row(i));
    RowSpace s(m.cols);
    return rs.empty() ? s : span(m.cols, rs);
}

RowSpace RowSpace::full(int ambient) { return from_matrix_rows(QMat::identity(ambient)); }

bool RowSpace::contains(const QVec& v) const { return coords(v).has_value(); }

bool RowSpace::contains(const RowSpace& other) const {
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis.row(i))) return false;
    return true;
}

std::optional<QVec> RowSpace::coords(const QVec& v) const {
    assert(static_cast<int>(v.size()) == ambient);
    QVec c(dim());
    QVec rem = v;
    for (int i = 0; i < dim(); ++i) {
        c[i] = rem[pivots[i]];
        if (c[i] == 0) continue;
        for (int j = 0; j < ambient; ++j)
            if (basis.at(i, j) != 0) rem[j] -= c[i] * basis.at(i, j);
    }
    for (const auto& x : rem)
        if (x != 0) return std::nullopt;
    return c;
}

RowSpace RowSpace::sum(const RowSpace& other) const {
    assert(ambient == other.ambient);
    std::vector<QVec> gens;
    for (int i = 0; i < dim(); ++i) gens.push_back(basis.row(i));
    for (int i = 0; i < other.dim(); ++i) gens.push_back(other.basis.row(i));
    RowSpace s(ambient);
    return gens.empty() ? s : span(ambient, gens);
}

RowSpace RowSpace::intersect(const RowSpace& other) const {
    assert(ambient == other.ambient);
    if (dim() == 0 || other.dim() == 0) return RowSpace(ambient);
    // Solve u^T basis = w^T other.basis: kernel of [basis^T | -other.basis^T].
    QMat sys(ambient, dim() + other.dim());
    for (int j = 0; j < ambient; ++j) {
        for (int i = 0; i < dim(); ++i) sys.at(j, i) = basis.at(i, j);
        for (int i = 0; i < other.dim(); ++i) sys.at(j, dim() + i) = -other.basis.at(i, j);
    }
    QMat ker = kernel(sys);
    std::vector<QVec> gens;
    for (int k = 0; k < ker.rows; ++k) {
        QVec v(ambient, Rat(0));
        for (int i = 0; i < dim(); ++i) {
            if (ker.at(k, i) == 0) continue;
            for (int j = 0; j < ambient; ++j) v[j] += ker.at(k, i) * basis.at(i, j);
        }
        gens.push_back(std::move(v));
    }
    RowSpace s(ambient);
    return gens.empty() ? s : span(ambient, gens);
}

QPoly poly_normalize(QPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.empty()) return p;
    Rat lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

QPoly poly_derivative(const QPoly& p) {
    QPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    return d;
}

static QPoly poly_rem(QPoly a, const QPoly& b) {
    // b assumed monic after normalization
    while (a.size() >= b.size() && !b.empty()) {
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.size() < b.size()) break;
        Rat f = a.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

QPoly poly_gcd(QPoly x, QPoly y) {
    x = poly_normalize(std::move(x));
    y = poly_normalize(std::move(y));
    while (!y.empty()) {
        QPoly r = poly_normalize(poly_rem(x, y));
        x = y;
        y = r;
    }
    return x;
}

bool poly_squarefree(const QPoly& p) {
    QPoly q = poly_normalize(p);
    if (q.size() <= 2) return !q.empty();
    QPoly g = poly_gcd(q, poly_derivative(q));
    return g.size() <= 1;
}

Rat poly_eval(const QPoly& p, const Rat& t) {
    Rat v = 0;
    for (size_t i = p.size(); i-- > 0;) v = v * t + p[i];
    return v;
}

QPoly min_poly(const QMat& t) {
    assert(t.is_square());
    const int n = t.rows;
    if (n == 0) return {Rat(1)};  // empty operator: minimal polynomial 1
    // Vectorized powers of t, first linear dependency gives the polynomial.
    std::vector<QVec> pows;
    QMat p = QMat::identity(n);
    for (int k = 0;; ++k) {
        QVec flat = p.flatten();
        if (!pows.empty()) {
            QMat sys(static_cast<int>(flat.size()), static_cast<int>(pows.size()));
            for (size_t j = 0; j < pows.size(); ++j)
                for (size_t i = 0; i < flat.size(); ++i)
                    sys.at(static_cast<int>(i), static_cast<int>(j)) = pows[j][i];
            if (auto c = solve(sys, flat)) {
                QPoly m(k + 1, Rat(0));
                for (int i = 0; i < k; ++i) m[i] = -(*c)[i];
                m[k] = 1;
                return m;
            }
        }
        pows.push_back(std::move(flat));
        p = p * t;
        if (k > n) throw error("minpoly", "no dependency found (bug)");
    }
}

QPoly min_poly_restricted(const QMat& t, const RowSpace& inv) {
    const int s = inv.dim();
    QMat rest(s, s);
    for (int i = 0; i < s; ++i) {
        QVec img = mat_vec(t, inv.basis.row(i));
        auto c = inv.coords(img);
        if (!c) throw error("not_invariant", "subspace not invariant under operator");
        for (int j = 0; j < s; ++j) rest.at(i, j) = (*c)[j];
    }
    // rows record the action on basis vectors; the operator matrix is the transpose
    return min_poly(rest.transpose());
}

std::vector<Rat> half_integer_roots(const QPoly& p0) {
    QPoly p = poly_normalize(p0);
    if (p.empty()) throw error("non_half_integer_spectrum", "zero polynomial");
    std::vector<Rat> roots;
    // Bound candidate roots by max |coefficient| ratio (monic): |r| <= 1 + max|c_i|.
    Rat bound = 1;
    for (const auto& c : p) {
        Rat ab = abs(c);
        if (ab > bound) bound = ab;
    }
    bound += 1;
    mpz_class q = bound.get_num() / bound.get_den() + 2;
    if (q > 1000000) throw error("non_half_integer_spectrum", "root bound too large");
    long b2 = 2 * q.get_si();
    QPoly cur = p;
    for (long k = -b2; k <= b2 && cur.size() > 1; ++k) {
        Rat cand(k, 2);
        cand.canonicalize();
        while (cur.size() > 1 && poly_eval(cur, cand) == 0) {
            roots.push_back(cand);
            // synthetic division by (x - cand)
            QPoly q(cur.size() - 1);
            Rat carry = 0;
            for (size_t i = cur.size(); i-- > 1;) {
                q[i - 1] = cur[i] + carry;
                carry = q[i - 1] * cand;
            }
            cur = q;
        }
    }
    if (cur.size() > 1)
        throw error("non_half_integer_spectrum", "polynomial does not split over (1/2)Z");
    return roots;
}

namespace {

std::vector<mpz_class> divisors(const mpz_class& n0) {
    mpz_class n = abs(n0);
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
    }
    return out;
}

QPoly deflate(const QPoly& cur, const Rat& root) {
    QPoly q(cur.size() - 1);
    Rat carry = 0;
    for (size_t i = cur.size(); i-- > 1;) {
        q[i - 1] = cur[i] + carry;
        carry = q[i - 1] * root;
    }
    return q;
}

}  // namespace

std::vector<Rat> rational_roots(const QPoly& p0) {
    QPoly p = poly_normalize(p0);
    if (p.empty()) throw error("non_rational_spectrum", "zero polynomial");
    std::vector<Rat> roots;
    QPoly cur = p;
    while (cur.size() > 1) {
        while (cur.size() > 1 && cur[0] == 0) {
            roots.emplace_back(0);
            cur.erase(cur.begin());
        }
        if (cur.size() <= 1) break;
        // integer coefficients: scale by the lcm of denominators
        mpz_class lcm_den = 1;
        for (const auto& c : cur) {
            mpz_class d = c.get_den();
            lcm_den = lcm_den / gcd(lcm_den, d) * d;
        }
        std::vector<mpz_class> ic;
        for (const auto& c : cur) {
            Rat scaled = c * Rat(lcm_den);
            ic.push_back(scaled.get_num());
        }
        // candidates: p/q with p | constant term, q | leading coefficient
        bool found = false;
        for (const auto& pn : divisors(ic.front())) {
            for (const auto& qd : divisors(ic.back())) {
                for (int sgn : {1, -1}) {
                    Rat cand(sgn * pn, qd);
                    cand.canonicalize();
                    if (poly_eval(cur, cand) == 0) {
                        roots.push_back(cand);
                        cur = deflate(cur, cand);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) throw error("non_rational_spectrum", "polynomial does not split over Q");
    }
    return roots;
}

}  // namespace nilpair
