#ifndef NILPAIR_RATIONAL_HPP
#define NILPAIR_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Exact rational scalars, dense matrices and row spaces. Everything in this
// project runs on these; no floating point anywhere.

namespace nilpair {

using Rat = mpq_class;
using QVec = std::vector<Rat>;

struct error : std::runtime_error {
    std::string code;
    error(std::string c, const std::string& msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& x);

struct QMat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;  // row-major

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static QMat zero(int r, int c) { return QMat(r, c); }
    static QMat identity(int n);

    bool is_zero() const;
    bool is_square() const { return rows == cols; }

    QMat transpose() const;
    QMat operator+(const QMat& o) const;
    QMat operator-(const QMat& o) const;
    QMat operator*(const QMat& o) const;
    QMat operator*(const Rat& s) const;
    QMat operator-() const;
    bool operator==(const QMat& o) const = default;

    QVec row(int i) const;
    QVec flatten() const { return a; }
    static QMat from_rows(const std::vector<QVec>& rs);

    QMat pow(int k) const;  // square matrices only
};

QMat bracket(const QMat& x, const QMat& y);  // xy - yx
QVec mat_vec(const QMat& m, const QVec& v);  // m v

// In-place reduced row echelon form. Returns rank, records pivot columns.
int rref(QMat& m, std::vector<int>* pivots = nullptr);

int rank_of(QMat m);

// Basis of { x : m x = 0 } as rows of the returned matrix.
QMat kernel(const QMat& m);

// One solution of m x = b, if any.
std::optional<QVec> solve(const QMat& m, const QVec& b);

// Canonical subspace of Q^ambient: rows kept in reduced echelon form, so two
// equal subspaces compare equal as matrices.
struct RowSpace {
    int ambient = 0;
    QMat basis;                // RREF, no zero rows
    std::vector<int> pivots;

    RowSpace() = default;
    explicit RowSpace(int amb) : ambient(amb), basis(0, amb) {}

    static RowSpace span(int ambient, const std::vector<QVec>& generators);
    static RowSpace from_matrix_rows(const QMat& m);
    static RowSpace full(int ambient);

    int dim() const { return basis.rows; }
    bool contains(const QVec& v) const;
    bool contains(const RowSpace& other) const;
    bool operator==(const RowSpace& o) const = default;

    // Coordinates of v with respect to the echelon basis (reads pivot slots,
    // then verifies the reconstruction). Empty if v is outside.
    std::optional<QVec> coords(const QVec& v) const;

    RowSpace sum(const RowSpace& other) const;
    RowSpace intersect(const RowSpace& other) const;
};

// Polynomials over Q as coefficient vectors, constant term first.
using QPoly = QVec;

QPoly poly_normalize(QPoly p);          // strip leading zeros, make monic
QPoly poly_derivative(const QPoly& p);
QPoly poly_gcd(QPoly x, QPoly y);
bool poly_squarefree(const QPoly& p);
Rat poly_eval(const QPoly& p, const Rat& t);

// Minimal polynomial of a square matrix (monic).
QPoly min_poly(const QMat& t);

// Minimal polynomial of t restricted to an invariant subspace.
QPoly min_poly_restricted(const QMat& t, const RowSpace& inv);

// All roots of p assuming p splits over Q with roots in (1/2)Z; throws
// error("non_half_integer_spectrum") otherwise. Returns roots with multiplicity.
std::vector<Rat> half_integer_roots(const QPoly& p);

// All roots of p assuming p splits over Q (rational-root extraction with
// deflation); throws error("non_rational_spectrum") otherwise.
std::vector<Rat> rational_roots(const QPoly& p);

}  // namespace nilpair

#endif
