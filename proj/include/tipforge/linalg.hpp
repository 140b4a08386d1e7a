#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "errors.hpp"

namespace tipforge {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Matrix = DenseMatrix<double>;

/// Throws DimensionMismatch unless m is a nonempty square matrix of finite values.
template <typename Derived>
void require_square_finite(const Eigen::MatrixBase<Derived>& m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("matrix is " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", expected square");
    if (m.rows() == 0) throw DimensionMismatch("matrix is empty");
    if (!m.allFinite()) throw DimensionMismatch("matrix has non-finite entries");
}

/// det(m) by LU with partial pivoting.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
    require_square_finite(m);
    using Scalar = typename Derived::Scalar;
    return DenseMatrix<Scalar>(m).partialPivLu().determinant();
}

/// A_sigma = A - (1 - sigma) D_A: every diagonal entry multiplied by sigma,
/// off-diagonal entries untouched.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> diagonal_force(const Eigen::MatrixBase<Derived>& a,
                                                     typename Derived::Scalar sigma) {
    DenseMatrix<typename Derived::Scalar> out = a;
    if (sigma == typename Derived::Scalar(1)) return out;
    out.diagonal() *= sigma;
    return out;
}

/// Index of the first diagonal entry that is not strictly negative, or -1.
template <typename Derived>
int first_nonnegative_diagonal(const Eigen::MatrixBase<Derived>& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        if (!(m(i, i) < 0)) return static_cast<int>(i);
    return -1;
}

template <typename Derived>
void require_negative_diagonal(const Eigen::MatrixBase<Derived>& m) {
    if (int i = first_nonnegative_diagonal(m); i >= 0)
        throw NonNegativeDiagonal(i, static_cast<double>(m(i, i)));
}

/// Hollow scaling |D_M|^{-1} M + I: each row divided by the magnitude of its
/// diagonal entry, then the (now -1) diagonal translated to exactly zero.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> hollow_scale(const Eigen::MatrixBase<Derived>& m) {
    require_square_finite(m);
    require_negative_diagonal(m);
    using Scalar = typename Derived::Scalar;
    DenseMatrix<Scalar> out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        const Scalar scale = -m(i, i);
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = i == j ? Scalar(0) : m(i, j) / scale;
    }
    return out;
}

/// Elementary symmetric polynomials e_1..e_k of the given values; result[k-1] = e_k.
template <typename Scalar>
std::vector<Scalar> elementary_symmetric(const std::vector<Scalar>& values) {
    std::vector<Scalar> e(values.size() + 1, Scalar(0));
    e[0] = Scalar(1);
    for (std::size_t v = 0; v < values.size(); ++v)
        for (std::size_t k = v + 1; k >= 1; --k) e[k] += values[v] * e[k - 1];
    return {e.begin() + 1, e.end()};
}

/// True iff every e_k(-a_11, ..., -a_nn), k = 1..n, is strictly positive, i.e.
/// each sigma-coefficient of the forced characteristic polynomial has a
/// positive leading term.
template <typename Derived>
bool diagonal_condition(const Eigen::MatrixBase<Derived>& a) {
    require_square_finite(a);
    using Scalar = typename Derived::Scalar;
    std::vector<Scalar> negated(a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i) negated[i] = -a(i, i);
    for (const Scalar& e : elementary_symmetric(negated))
        if (!(e > Scalar(0))) return false;
    return true;
}

}  // namespace tipforge
