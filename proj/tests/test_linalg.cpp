#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <random>

#include "oracles.hpp"
#include "tipforge/eigensolver.hpp"
#include "tipforge/errors.hpp"
#include "tipforge/linalg.hpp"
#include "tipforge/sigma.hpp"

using namespace tipforge;
using oracle::cplx;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<double>> rows) {
    Matrix m(rows.size(), rows.begin()->size());
    int i = 0;
    for (const auto& r : rows) {
        int j = 0;
        for (double v : r) m(i, j++) = v;
        ++i;
    }
    return m;
}

std::vector<cplx> values(const Spectrum& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("determinant") {
    CHECK(determinant(Matrix::Identity(3, 3)) == doctest::Approx(1));
    CHECK(determinant(mat({{-1, 2}, {2, -1}})) == doctest::Approx(-3));
    CHECK(determinant(mat({{-2, 4}, {1, -5}})) == doctest::Approx(6));
    CHECK(determinant(mat({{1, 2}, {2, 4}})) == doctest::Approx(0).epsilon(1e-14));
    CHECK_THROWS_AS(determinant(Matrix(2, 3)), DimensionMismatch);
}

TEST_CASE("eigenvalues of small closed-form matrices") {
    auto rot = eigenvalues(mat({{0, 1}, {-1, 0}}));
    CHECK(oracle::multiset_distance(values(rot), {cplx(0, 1), cplx(0, -1)}) < 1e-12);

    auto sym = eigenvalues(mat({{0, 2}, {2, 0}}));
    CHECK(oracle::multiset_distance(values(sym), {2.0, -2.0}) < 1e-12);

    auto cube = eigenvalues(mat({{0, 1, 0}, {0, 0, 1}, {-1, 0, 0}}));
    const double h = std::sqrt(3.0) / 2;
    CHECK(oracle::multiset_distance(values(cube), {-1.0, cplx(0.5, h), cplx(0.5, -h)}) < 1e-12);

    auto one = eigenvalues(mat({{-7}}));
    REQUIRE(one.size() == 1);
    CHECK(one[0] == cplx(-7, 0));

    CHECK(eigenvalues(Matrix::Zero(4, 4)).size() == 4);
    CHECK_THROWS_AS(eigenvalues(Matrix(2, 3)), DimensionMismatch);
}

TEST_CASE("spectrum ordering and max_real_part") {
    ComplexSpectrum<double> s({cplx(-2, 0), cplx(2, 0)});
    CHECK(s[0] == cplx(2, 0));
    auto m = max_real_part(s);
    CHECK(m.value == 2);
    CHECK(m.witness == cplx(2, 0));

    const double h = std::sqrt(3.0) / 2;
    auto c = max_real_part(ComplexSpectrum<double>({cplx(-1, 0), cplx(0.5, -h), cplx(0.5, h)}));
    CHECK(c.value == doctest::Approx(0.5));
    CHECK(c.witness == cplx(0.5, h));

    const double g = std::sqrt(7.0) / 2;
    auto z = max_real_part(ComplexSpectrum<double>({cplx(-0.5, g), cplx(0, 0), cplx(-1, 0), cplx(-0.5, -g)}));
    CHECK(z.value == 0);
    CHECK(z.witness == cplx(0, 0));

    // a real eigenvalue wins a tie in real part
    auto tie = max_real_part(ComplexSpectrum<double>({cplx(1, 3), cplx(1, -3), cplx(1, 0)}));
    CHECK(tie.witness == cplx(1, 0));

    CHECK(is_real(cplx(5, 1e-9)));
    CHECK_FALSE(is_real(cplx(5, 1e-6)));
}

TEST_CASE("diagonal_force") {
    const Matrix a = mat({{-2, 4}, {1, -5}});
    const Matrix same = diagonal_force(a, 1.0);
    CHECK(std::memcmp(same.data(), a.data(), sizeof(double) * 4) == 0);
    CHECK(diagonal_force(a, 0.0) == mat({{0, 4}, {1, 0}}));
    const Matrix f = diagonal_force(mat({{-1, 2}, {2, -1}}), 2.0);
    CHECK(f == mat({{-2, 2}, {2, -2}}));
    CHECK(oracle::multiset_distance(values(eigenvalues(f)), {0.0, -4.0}) < 1e-12);
}

TEST_CASE("hollow_scale") {
    CHECK(hollow_scale(mat({{-1, 0}, {0, -2}})) == Matrix::Zero(2, 2));
    CHECK(hollow_scale(mat({{-1, 2}, {2, -1}})) == mat({{0, 2}, {2, 0}}));
    const Matrix h = hollow_scale(mat({{-2, 4}, {1, -5}}));
    CHECK(h(0, 1) == 2);
    CHECK(h(1, 0) == doctest::Approx(0.2));
    CHECK(h(0, 0) == 0.0);
    CHECK(h(1, 1) == 0.0);
    CHECK_THROWS_AS(hollow_scale(mat({{-1, 1}, {1, 0}})), NonNegativeDiagonal);
    try {
        hollow_scale(mat({{-1, 0, 0}, {0, 3, 0}, {0, 0, -1}}));
        FAIL("expected NonNegativeDiagonal");
    } catch (const NonNegativeDiagonal& e) {
        CHECK(e.index() == 1);
    }
}

TEST_CASE("diagonal_condition") {
    CHECK(diagonal_condition(mat({{-1, 0}, {0, -2}})));
    CHECK_FALSE(diagonal_condition(mat({{-1, 0}, {0, 1}})));
    CHECK_FALSE(diagonal_condition(mat({{-3, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
    const auto e = elementary_symmetric(std::vector<double>{3, -1, -1});
    CHECK(e == std::vector<double>{1, -5, 3});
}

TEST_CASE("determinant equals product of eigenvalues on random integer matrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 8;
        const Matrix m = oracle::random_integer_matrix(rng, n, -5, 5);
        cplx prod = 1;
        for (const cplx& z : eigenvalues(m)) prod *= z;
        const double det = oracle::laplace_det(m);
        CHECK(std::abs(prod - det) <= 1e-6 * std::max(1.0, std::abs(det)));
        CHECK(determinant(m) == doctest::Approx(det).epsilon(1e-9).scale(1));
    }
}

TEST_CASE("hollow_scale diagonal is exactly zero on random input") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix h = hollow_scale(oracle::random_negative_diagonal(rng, 2 + trial % 5, -4, 4));
        for (Eigen::Index i = 0; i < h.rows(); ++i) CHECK(h(i, i) == 0.0);
    }
}

TEST_CASE("forced spectrum varies continuously in sigma") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> sig(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        const Matrix a = oracle::random_negative_diagonal(rng, 2 + trial % 5, -4, 4);
        const double s = sig(rng);
        const auto lo = values(eigenvalues(diagonal_force(a, s)));
        const auto hi = values(eigenvalues(diagonal_force(a, s + 1e-9)));
        // defective eigenvalues move like sqrt(dsigma); keep to the simple ones
        bool simple = true;
        for (std::size_t i = 0; i < lo.size(); ++i)
            for (std::size_t j = i + 1; j < lo.size(); ++j) simple &= std::abs(lo[i] - lo[j]) > 1e-3;
        if (simple) CHECK(oracle::multiset_distance(lo, hi) < 1e-6);
    }
}

TEST_CASE("QR spectrum agrees with Eigen and with charpoly roots") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 8;
        const Matrix m = oracle::random_integer_matrix(rng, n, -5, 5);
        const auto ours = values(eigenvalues(m));
        Eigen::EigenSolver<Matrix> es(m, false);
        std::vector<cplx> ref(es.eigenvalues().data(), es.eigenvalues().data() + n);
        CHECK(oracle::multiset_distance(ours, ref) < 1e-6);

        const Poly p = charpoly(m);
        const auto dk = oracle::durand_kerner_real(p.coeffs());
        // repeated roots limit either method to about sqrt(eps)
        bool separated = true;
        for (std::size_t i = 0; i < ref.size(); ++i)
            for (std::size_t j = i + 1; j < ref.size(); ++j) separated &= std::abs(ref[i] - ref[j]) > 1e-2;
        if (separated) CHECK(oracle::multiset_distance(ours, dk) < 1e-6);
    }
}

TEST_CASE("QR budget exhaustion raises ConvergenceFailure") {
    Matrix m(3, 3);
    m << 0, 0, 1, 1, 0, 0, 0, 1, 0;
    DenseMatrix<double> h = m;
    CHECK_THROWS_AS(detail::hessenberg_qr(h, 0), ConvergenceFailure);
}
