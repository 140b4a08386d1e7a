#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "spectrum.hpp"

namespace tipforge {

namespace detail {

/// Parlett-Reinsch balancing with radix-2 scale factors, so it is exact in
/// floating point and leaves the spectrum untouched.
template <typename Scalar>
void balance(DenseMatrix<Scalar>& a) {
    const Eigen::Index n = a.rows();
    const Scalar radix = 2;
    const Scalar sqrdx = radix * radix;
    bool done = false;
    while (!done) {
        done = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            Scalar r = 0, c = 0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(a(j, i));
                r += std::abs(a(i, j));
            }
            if (c == 0 || r == 0) continue;
            Scalar g = r / radix;
            Scalar f = 1;
            const Scalar s = c + r;
            while (c < g) {
                f *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sqrdx;
            }
            if ((c + r) / f < Scalar(0.95) * s) {
                done = false;
                g = 1 / f;
                a.row(i) *= g;
                a.col(i) *= f;
            }
        }
    }
}

/// In-place orthogonal reduction to upper Hessenberg form by Householder
/// reflections. Entries below the first subdiagonal are set to zero.
template <typename Scalar>
void hessenberg(DenseMatrix<Scalar>& a) {
    const Eigen::Index n = a.rows();
    for (Eigen::Index k = 0; k + 2 < n; ++k) {
        const Eigen::Index len = n - k - 1;
        Eigen::Matrix<Scalar, Eigen::Dynamic, 1> v = a.col(k).tail(len);
        const Scalar alpha = v.norm();
        if (alpha == 0) continue;
        const Scalar beta = v(0) > 0 ? -alpha : alpha;
        v(0) -= beta;
        const Scalar vnorm2 = v.squaredNorm();
        if (vnorm2 == 0) continue;
        // H = I - 2 v v^T / (v^T v), applied from both sides.
        auto block_rows = a.bottomRows(len);
        Eigen::Matrix<Scalar, 1, Eigen::Dynamic> w = (v.transpose() * block_rows) * (Scalar(2) / vnorm2);
        block_rows -= v * w;
        auto block_cols = a.rightCols(len);
        Eigen::Matrix<Scalar, Eigen::Dynamic, 1> u = (block_cols * v) * (Scalar(2) / vnorm2);
        block_cols -= u * v.transpose();
        a(k + 1, k) = beta;
        a.col(k).tail(len - 1).setZero();
    }
}

template <typename Scalar>
Scalar sign_of(Scalar magnitude, Scalar s) {
    return s >= 0 ? std::abs(magnitude) : -std::abs(magnitude);
}

/// Eigenvalues of an upper Hessenberg matrix by Francis double-shift QR with
/// deflation on negligible subdiagonals. Exceptional shifts every 10 stalled
/// sweeps; each eigenvalue (or pair) gets at most `max_sweeps` sweeps.
template <typename Scalar>
std::vector<std::complex<Scalar>> hessenberg_qr(DenseMatrix<Scalar>& h, int max_sweeps) {
    const int n = static_cast<int>(h.rows());
    std::vector<Scalar> wr(n + 1), wi(n + 1);
    // 1-based view keeps the classic index arithmetic readable.
    auto a = [&h](int i, int j) -> Scalar& { return h(i - 1, j - 1); };
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();

    Scalar anorm = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = std::max(i - 1, 1); j <= n; ++j) anorm += std::abs(a(i, j));

    int nn = n;
    Scalar t = 0;
    while (nn >= 1) {
        int its = 0;
        int l;
        do {
            for (l = nn; l >= 2; --l) {
                Scalar s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
                if (s == 0) s = anorm;
                if (std::abs(a(l, l - 1)) <= eps * s) {
                    a(l, l - 1) = 0;
                    break;
                }
            }
            Scalar x = a(nn, nn);
            if (l == nn) {
                wr[nn] = x + t;
                wi[nn--] = 0;
            } else {
                Scalar y = a(nn - 1, nn - 1);
                Scalar w = a(nn, nn - 1) * a(nn - 1, nn);
                if (l == nn - 1) {
                    Scalar p = Scalar(0.5) * (y - x);
                    Scalar q = p * p + w;
                    Scalar z = std::sqrt(std::abs(q));
                    x += t;
                    if (q >= 0) {
                        z = p + sign_of(z, p);
                        wr[nn - 1] = wr[nn] = x + z;
                        if (z != 0) wr[nn] = x - w / z;
                        wi[nn - 1] = wi[nn] = 0;
                    } else {
                        wr[nn - 1] = wr[nn] = x + p;
                        wi[nn - 1] = -(wi[nn] = z);
                    }
                    nn -= 2;
                } else {
                    if (its >= max_sweeps)
                        throw ConvergenceFailure("QR iteration did not converge within " +
                                                 std::to_string(max_sweeps) +
                                                 " sweeps for an eigenvalue of a " +
                                                 std::to_string(n) + "x" + std::to_string(n) +
                                                 " matrix");
                    if (its > 0 && its % 10 == 0) {
                        t += x;
                        for (int i = 1; i <= nn; ++i) a(i, i) -= x;
                        Scalar s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
                        y = x = Scalar(0.75) * s;
                        w = Scalar(-0.4375) * s * s;
                    }
                    ++its;
                    int m;
                    Scalar p = 0, q = 0, r = 0, z;
                    for (m = nn - 2; m >= l; --m) {
                        z = a(m, m);
                        r = x - z;
                        Scalar s = y - z;
                        p = (r * s - w) / a(m + 1, m) + a(m, m + 1);
                        q = a(m + 1, m + 1) - z - r - s;
                        r = a(m + 2, m + 1);
                        s = std::abs(p) + std::abs(q) + std::abs(r);
                        p /= s;
                        q /= s;
                        r /= s;
                        if (m == l) break;
                        Scalar u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
                        Scalar v = std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) +
                                                  std::abs(a(m + 1, m + 1)));
                        if (u <= eps * v) break;
                    }
                    for (int i = m + 2; i <= nn; ++i) {
                        a(i, i - 2) = 0;
                        if (i != m + 2) a(i, i - 3) = 0;
                    }
                    for (int k = m; k <= nn - 1; ++k) {
                        if (k != m) {
                            p = a(k, k - 1);
                            q = a(k + 1, k - 1);
                            r = 0;
                            if (k != nn - 1) r = a(k + 2, k - 1);
                            if ((x = std::abs(p) + std::abs(q) + std::abs(r)) != 0) {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        Scalar s = sign_of(std::sqrt(p * p + q * q + r * r), p);
                        if (s != 0) {
                            if (k == m) {
                                if (l != m) a(k, k - 1) = -a(k, k - 1);
                            } else {
                                a(k, k - 1) = -s * x;
                            }
                            p += s;
                            x = p / s;
                            y = q / s;
                            z = r / s;
                            q /= p;
                            r /= p;
                            for (int j = k; j <= nn; ++j) {
                                p = a(k, j) + q * a(k + 1, j);
                                if (k != nn - 1) {
                                    p += r * a(k + 2, j);
                                    a(k + 2, j) -= p * z;
                                }
                                a(k + 1, j) -= p * y;
                                a(k, j) -= p * x;
                            }
                            const int mmin = nn < k + 3 ? nn : k + 3;
                            for (int i = l; i <= mmin; ++i) {
                                p = x * a(i, k) + y * a(i, k + 1);
                                if (k != nn - 1) {
                                    p += z * a(i, k + 2);
                                    a(i, k + 2) -= p * r;
                                }
                                a(i, k + 1) -= p * q;
                                a(i, k) -= p;
                            }
                        }
                    }
                }
            }
        } while (l < nn - 1);
    }

    std::vector<std::complex<Scalar>> out;
    out.reserve(n);
    for (int i = 1; i <= n; ++i) out.emplace_back(wr[i], wi[i]);
    return out;
}

}  // namespace detail

/// Full eigenvalue multiset of a real square matrix: balancing, Householder
/// Hessenberg reduction, then Francis double-shift QR. Throws
/// ConvergenceFailure when an eigenvalue needs more than
/// `iteration_factor * n` sweeps.
template <typename Derived>
ComplexSpectrum<typename Derived::Scalar> eigenvalues(const Eigen::MatrixBase<Derived>& m,
                                                      int iteration_factor = 30) {
    require_square_finite(m);
    using Scalar = typename Derived::Scalar;
    DenseMatrix<Scalar> work = m;
    const auto n = static_cast<int>(work.rows());
    if (n == 1) return ComplexSpectrum<Scalar>({std::complex<Scalar>(work(0, 0), 0)});
    detail::balance(work);
    detail::hessenberg(work);
    return ComplexSpectrum<Scalar>(detail::hessenberg_qr(work, iteration_factor * n));
}

}  // namespace tipforge
