#pragma once

#include <Eigen/Core>

#include <vector>

#include "hyplac/cyclotomic.hpp"
#include "hyplac/errors.hpp"
#include "hyplac/polynomial.hpp"
#include "hyplac/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<hyplac::Rational> : GenericNumTraits<hyplac::Rational> {
    typedef hyplac::Rational Real;
    typedef hyplac::Rational NonInteger;
    typedef hyplac::Rational Nested;
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 60,
    };
};

template <>
struct NumTraits<hyplac::Cyclotomic> : GenericNumTraits<hyplac::Cyclotomic> {
    typedef hyplac::Cyclotomic Real;
    typedef hyplac::Cyclotomic NonInteger;
    typedef hyplac::Cyclotomic Nested;
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        // Conjugation in Q(zeta_N) is handled explicitly (conjugate_transpose);
        // Eigen must not apply its own complex machinery.
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 32,
        AddCost = 300,
        MulCost = 600,
    };
};

}  // namespace Eigen

namespace hyplac {

using Index = Eigen::Index;

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using CycMatrix = Eigen::Matrix<Cyclotomic, Eigen::Dynamic, Eigen::Dynamic>;
using CycVector = Eigen::Matrix<Cyclotomic, Eigen::Dynamic, 1>;

/// Identity with every entry expressed in Q(zeta_order).
inline CycMatrix cyc_identity(Index n, unsigned order) {
    CycMatrix m(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) m(i, j) = i == j ? Cyclotomic::one(order) : Cyclotomic::zero(order);
    return m;
}

inline CycMatrix conjugate_transpose(const CycMatrix& m) {
    CycMatrix out(m.cols(), m.rows());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) out(j, i) = m(i, j).conjugate();
    return out;
}

template <typename Scalar>
bool matrices_equal(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
                    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

/// Exact dense linear algebra over an ordered-free field scalar (Rational or
/// Cyclotomic). Pivoting takes the first nonzero entry, which is exact and
/// deterministic; no magnitude comparisons are needed.
namespace exact {

template <typename Scalar>
struct RowReduction {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> reduced;
    std::vector<Index> pivot_columns;
    Scalar determinant;  // meaningful for square inputs only
};

template <typename Scalar>
RowReduction<Scalar> row_reduce(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
    using hyplac::is_zero;
    const Index rows = m.rows(), cols = m.cols();
    RowReduction<Scalar> result;
    result.determinant = Scalar(1);
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index pivot = -1;
        for (Index i = r; i < rows; ++i) {
            if (!is_zero(m(i, c))) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r) {
            m.row(pivot).swap(m.row(r));
            result.determinant = Scalar(0) - result.determinant;
        }
        Scalar lead = m(r, c);
        result.determinant = result.determinant * lead;
        Scalar inv = Scalar(1) / lead;
        for (Index j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
        for (Index i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            Scalar factor = m(i, c);
            for (Index j = c; j < cols; ++j) m(i, j) = m(i, j) - factor * m(r, j);
        }
        result.pivot_columns.push_back(c);
        ++r;
    }
    if (rows == cols && static_cast<Index>(result.pivot_columns.size()) < rows)
        result.determinant = Scalar(0);
    result.reduced = std::move(m);
    return result;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> work = m;
    return static_cast<Index>(row_reduce(std::move(work)).pivot_columns.size());
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols()) fail(ErrorCode::InvalidInput, "determinant of a non-square matrix");
    if (m.rows() == 0) return Scalar(1);
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> work = m;
    return row_reduce(std::move(work)).determinant;
}

template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> inverse(
    const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols()) fail(ErrorCode::InvalidInput, "inverse of a non-square matrix");
    const Index n = m.rows();
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> work(n, 2 * n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            work(i, j) = m(i, j);
            work(i, n + j) = i == j ? Scalar(1) : Scalar(0);
        }
    auto red = row_reduce(std::move(work));
    if (static_cast<Index>(red.pivot_columns.size()) < n ||
        red.pivot_columns[static_cast<std::size_t>(n) - 1] >= n)
        fail(ErrorCode::SingularMatrix, "matrix is not invertible");
    return red.reduced.block(0, n, n, n);
}

/// Solves A x = b for square nonsingular A.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> solve(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b) {
    if (a.rows() != a.cols() || a.rows() != b.rows())
        fail(ErrorCode::InvalidInput, "solve needs a square system");
    const Index n = a.rows();
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> work(n, n + 1);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) work(i, j) = a(i, j);
        work(i, n) = b(i);
    }
    auto red = row_reduce(std::move(work));
    if (static_cast<Index>(red.pivot_columns.size()) < n || red.pivot_columns.back() >= n)
        fail(ErrorCode::SingularMatrix, "singular linear system");
    return red.reduced.col(n);
}

/// Columns form a basis of the right nullspace of m (deterministic order).
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> null_space(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
    using hyplac::is_zero;
    const Index cols = m.cols();
    auto red = row_reduce(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>(m));
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (Index c : red.pivot_columns) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<Index> free_cols;
    for (Index c = 0; c < cols; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> basis(cols, static_cast<Index>(free_cols.size()));
    for (Index k = 0; k < basis.rows(); ++k)
        for (Index l = 0; l < basis.cols(); ++l) basis(k, l) = Scalar(0);
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        Index fc = free_cols[f];
        basis(fc, static_cast<Index>(f)) = Scalar(1);
        for (std::size_t p = 0; p < red.pivot_columns.size(); ++p) {
            const Scalar& entry = red.reduced(static_cast<Index>(p), fc);
            if (!is_zero(entry)) basis(red.pivot_columns[p], static_cast<Index>(f)) = Scalar(0) - entry;
        }
    }
    return basis;
}

/// Monic characteristic polynomial det(tI - M) by Faddeev-LeVerrier; the
/// integer divisions it performs are exact in characteristic zero.
template <typename Scalar>
Poly<Scalar> characteristic_polynomial(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
    if (m.rows() != m.cols()) fail(ErrorCode::InvalidInput, "characteristic polynomial of non-square matrix");
    const Index n = m.rows();
    std::vector<Scalar> coeffs(static_cast<std::size_t>(n) + 1, Scalar(0));
    coeffs[static_cast<std::size_t>(n)] = Scalar(1);
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> mk = m;
    Scalar a(0);
    for (Index k = 1; k <= n; ++k) {
        if (k > 1) {
            Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> shifted = mk;
            for (Index i = 0; i < n; ++i) shifted(i, i) = shifted(i, i) + a;
            mk = m * shifted;
        }
        Scalar trace(0);
        for (Index i = 0; i < n; ++i) trace = trace + mk(i, i);
        a = (Scalar(0) - trace) / Scalar(static_cast<long>(k));
        coeffs[static_cast<std::size_t>(n - k)] = a;
    }
    return Poly<Scalar>(std::move(coeffs));
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> kronecker(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& b) {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            for (Index k = 0; k < b.rows(); ++k)
                for (Index l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

/// Companion matrix of a monic polynomial: subdiagonal ones, last column
/// -p_0 ... -p_{n-1}. Its characteristic polynomial is p itself.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> companion(const Poly<Scalar>& p) {
    if (!p.is_monic() || p.degree() < 1) fail(ErrorCode::InvalidInput, "companion needs a monic polynomial of degree >= 1");
    const Index n = p.degree();
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) m(i, j) = Scalar(0);
    for (Index i = 0; i + 1 < n; ++i) m(i + 1, i) = Scalar(1);
    for (Index i = 0; i < n; ++i) m(i, n - 1) = Scalar(0) - p.coeff(static_cast<std::size_t>(i));
    return m;
}

}  // namespace exact
}  // namespace hyplac
